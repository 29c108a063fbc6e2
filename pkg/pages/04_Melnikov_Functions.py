import streamlit as st

import scalars
from errors import ChenLabError
from melnikov import (FORMS, Connection, WeightPair, ck, ck_closed_form, example_ex_m5,
                      generic_form, m5_subterms, melnikov_integrand, pk_closed_form)
from utils import run_computation

st.title("🌀 Melnikov Functions")
st.markdown("Quasi-homogeneous case: two forms with t ω₁′ = w₁ ω₁ and t ω₂′ = w₂ ω₂, "
            "perturbation ω = α₁ω₁ + α₂ω₂.")

FEATURE = "Melnikov Functions"

col1, col2, col3 = st.columns(3)
w1_text = col1.text_input("w1", value="w1")
w2_text = col2.text_input("w2", value="w2")
k = col3.number_input("Order k", min_value=1, max_value=6, value=2, step=1)

try:
    weights = WeightPair(scalars.parse_scalar(w1_text), scalars.parse_scalar(w2_text))
except ChenLabError as e:
    st.error(f"Invalid weight: {e}")
    st.stop()

integrand_tab, pk_tab, ck_tab, m5_tab = st.tabs(["Integrand", "P_k", "C_k", "Fifth function"])

with integrand_tab:
    if st.button("Expand integrand", type="primary"):
        conn = Connection.diagonal(FORMS, weights)
        result = run_computation(FEATURE, "integrand", melnikov_integrand, conn, generic_form(), int(k),
                                 metadata={"weights": f"{w1_text},{w2_text}", "k": int(k)})
        if result is not None:
            for word, coeff in result.items():
                st.markdown(f"- `{FORMS.word_text(word)}`: `{scalars.to_text(coeff)}`")

with pk_tab:
    i = st.slider("Power i of α₁", min_value=0, max_value=int(k), value=min(1, int(k)))
    if st.button("Closed form"):
        result = run_computation(FEATURE, "pk", pk_closed_form, weights, int(k), i,
                                 metadata={"k": int(k), "i": i})
        if result is not None:
            st.code(result.to_text())

with ck_tab:
    if st.button("Compute C_k"):
        value = run_computation(FEATURE, "ck", ck, weights, int(k), metadata={"k": int(k)})
        if value is not None:
            st.metric("C_k from P_k", scalars.to_text(value))
            st.metric("Closed product", scalars.to_text(ck_closed_form(weights, int(k))))

with m5_tab:
    st.markdown("Loop (((a1,a2),a1),(a1,a2)): a basic commutator of degree 5.")
    if st.button("Check"):
        value = run_computation(FEATURE, "m5check", example_ex_m5)
        if value is not None:
            if scalars.is_zero(value):
                st.success("M₅ vanishes identically.")
            else:
                st.error(f"M₅ = {scalars.to_text(value)}")
            for name, sub in m5_subterms().items():
                st.markdown(f"- `{name}` = `{scalars.to_text(sub)}`")
