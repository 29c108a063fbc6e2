import logging
import os
from dataclasses import dataclass

from errors import PreconditionError

LOG_FORMAT = "%(levelname)s %(name)s: %(message)s"
LOG_LEVELS = ("CRITICAL", "ERROR", "WARNING", "INFO", "DEBUG")


@dataclass(frozen=True)
class Settings:
    max_degree: int = 6
    letters: tuple = ("x", "y")
    log_level: str = "WARNING"


def load_settings(environ=None):
    environ = os.environ if environ is None else environ
    defaults = Settings()

    raw_degree = environ.get("CHENLAB_MAX_DEGREE", "")
    max_degree = defaults.max_degree
    if raw_degree:
        try:
            max_degree = int(raw_degree)
        except ValueError:
            raise PreconditionError(f"CHENLAB_MAX_DEGREE must be an integer, got {raw_degree!r}") from None
        if max_degree < 1:
            raise PreconditionError("CHENLAB_MAX_DEGREE must be at least 1")

    raw_letters = environ.get("CHENLAB_LETTERS", "")
    letters = defaults.letters
    if raw_letters:
        letters = tuple(name.strip() for name in raw_letters.split(",") if name.strip())
        if not letters:
            raise PreconditionError("CHENLAB_LETTERS must name at least one letter")

    log_level = environ.get("CHENLAB_LOG_LEVEL", defaults.log_level).upper()
    if log_level not in LOG_LEVELS:
        raise PreconditionError(f"CHENLAB_LOG_LEVEL {log_level!r} is not a logging level")

    return Settings(max_degree=max_degree, letters=letters, log_level=log_level)


def configure_logging(level="WARNING"):
    root = logging.getLogger()
    if not any(getattr(h, "_chenlab", False) for h in root.handlers):
        handler = logging.StreamHandler()
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        handler._chenlab = True
        root.addHandler(handler)
    root.setLevel(level)
