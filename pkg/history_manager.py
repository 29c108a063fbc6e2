import time

import streamlit as st

HISTORY_KEY = "computation_history"
MAX_ENTRIES = 200


def _history():
    if HISTORY_KEY not in st.session_state:
        st.session_state[HISTORY_KEY] = []
    return st.session_state[HISTORY_KEY]


def log_computation(feature_name, action, metadata=None, result=None):
    if metadata is None:
        metadata = {}

    history = _history()
    history.append({
        "created_at": time.strftime("%Y-%m-%d %H:%M:%S"),
        "feature": feature_name,
        "action": action,
        "metadata": metadata,
        "result": "" if result is None else str(result),
    })
    # oldest entries go first
    del history[:-MAX_ENTRIES]
    return history[-1]


def get_history(feature_name=None):
    history = list(reversed(_history()))
    if feature_name is None:
        return history
    return [entry for entry in history if entry["feature"] == feature_name]


def clear_history():
    st.session_state[HISTORY_KEY] = []
