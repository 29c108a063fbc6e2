import streamlit as st

from expr_parser import parse, to_group_word
from freegrp import lcs_degree, magnus, phi_inverse
from utils import alphabet_for, get_settings, run_computation

st.title("➰ Free Group")
st.markdown("Group words use `(a,b)` for commutators and `a^-1` for inverses.")

FEATURE = "Free Group"
settings = get_settings()

word_text = st.text_input("Group word", value="((x,y),x)")
fixed = st.text_input("Alphabet (optional)", value="")
n = st.number_input("Degree bound N", min_value=1, max_value=8, value=settings.max_degree, step=1)


def group_word():
    return to_group_word(parse(word_text), alphabet_for(word_text, fixed=fixed))


col1, col2 = st.columns(2)

with col1:
    if st.button("Magnus expansion", type="primary"):
        series = run_computation(FEATURE, "magnus", lambda: magnus(group_word(), int(n)),
                                 metadata={"word": word_text, "N": int(n)})
        if series is not None:
            st.code(series.to_text())

with col2:
    if st.button("Lower central series"):
        def lcs_report():
            delta = group_word()
            if delta.is_identity:
                return "identity", None
            k = lcs_degree(delta, int(n))
            if k is None:
                return f"exceeds {int(n)}", None
            return str(k), phi_inverse(delta, int(n))

        report = run_computation(FEATURE, "lcs", lcs_report, metadata={"word": word_text})
        if report is not None:
            degree, lie = report
            st.metric("lcs degree", degree)
            if lie is not None:
                st.markdown(f"**Lie element:** `{lie.to_text()}`")
