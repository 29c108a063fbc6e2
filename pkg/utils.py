import logging

import streamlit as st

import history_manager as hm
import scalars
from errors import ChenLabError
from expr_parser import letters, parse
from ncalg import Alphabet
from settings import configure_logging, load_settings

logger = logging.getLogger(__name__)


@st.cache_resource
def get_settings():
    settings = load_settings()
    configure_logging(settings.log_level)
    return settings


def run_computation(feature_name, action, fn, *args, metadata=None, **kwargs):
    """Run a library call for a page; domain errors become an st.error, not a traceback."""
    try:
        result = fn(*args, **kwargs)
    except ChenLabError as e:
        st.error(f"{action} failed: {e}")
        return None
    except RecursionError:
        st.error("The expression is nested too deeply.")
        return None

    hm.log_computation(feature_name, action, metadata, summarize(result))
    return result


def summarize(result):
    if result is None:
        return ""
    if isinstance(result, (bool, str)):
        return str(result)
    if hasattr(result, "to_text"):
        return result.to_text()
    if isinstance(result, (list, tuple)):
        return ", ".join(summarize(item) for item in result)
    try:
        return scalars.to_text(result)
    except ChenLabError:
        return str(result)


def alphabet_input(label="Letters", default=None, key=None):
    default = default or ",".join(get_settings().letters)
    text = st.text_input(label, value=default, key=key, help="Comma separated, in order.")
    try:
        return Alphabet.of(text)
    except ChenLabError as e:
        st.error(f"Invalid alphabet: {e}")
        st.stop()


def alphabet_for(*texts, fixed=""):
    """Alphabet named in ``fixed``, or the sorted letters of the given expressions."""
    if fixed.strip():
        return Alphabet.of(fixed)
    names = set()
    for text in texts:
        names.update(letters(parse(text)))
    return Alphabet.of(sorted(names) or get_settings().letters)
