import pandas as pd
import streamlit as st

import scalars
from expr_parser import parse, to_ncpoly
from liealg import decompose, hall_basis, is_lie, lie_rank, shuffle_rank, witt_number
from ncalg import inner
from utils import alphabet_for, alphabet_input, run_computation

st.title("🔗 Free Lie Algebra")
st.markdown("Hall bases, the scalar product of words and the splitting into Lie and shuffle parts.")

FEATURE = "Lie Algebra"

hall_tab, pair_tab, ree_tab, project_tab = st.tabs(["Hall basis", "Scalar product", "Ree test", "Projection"])

with hall_tab:
    alphabet = alphabet_input(key="hall_letters")
    k = st.number_input("Degree k", min_value=1, max_value=7, value=3, step=1)

    if st.button("Generate basis", type="primary"):
        basis = run_computation(FEATURE, "hall basis", hall_basis, alphabet, int(k),
                                metadata={"letters": str(alphabet), "k": int(k)})
        if basis is not None:
            df = pd.DataFrame({
                "element": basis.texts(),
                "expansion": [p.to_text() for p in basis.expansions()],
            })
            st.dataframe(df, use_container_width=True)

            col1, col2, col3 = st.columns(3)
            with col1:
                st.metric("Witt number", witt_number(len(alphabet), int(k)))
            with col2:
                st.metric("dim L (rank)", lie_rank(alphabet, int(k)))
            with col3:
                st.metric("dim S (rank)", shuffle_rank(alphabet, int(k)))

with pair_tab:
    left = st.text_input("Left", value="[y,[x,z]]")
    right = st.text_input("Right", value="[z,[x,y]]")
    fixed = st.text_input("Alphabet (optional)", value="", key="pair_letters")

    if st.button("Pair"):
        def pair_texts():
            alphabet = alphabet_for(left, right, fixed=fixed)
            return inner(to_ncpoly(parse(left), alphabet), to_ncpoly(parse(right), alphabet))

        value = run_computation(FEATURE, "scalar product", pair_texts,
                                metadata={"left": left, "right": right})
        if value is not None:
            st.metric("⟨left, right⟩", scalars.to_text(value))

with ree_tab:
    text = st.text_input("Polynomial", value="x y - y x", key="ree_input")

    if st.button("Test"):
        def check():
            return is_lie(to_ncpoly(parse(text), alphabet_for(text)))

        verdict = run_computation(FEATURE, "ree test", check, metadata={"input": text})
        if verdict is True:
            st.success("Orthogonal to every shuffle: a Lie element.")
        elif verdict is False:
            st.warning("Not a Lie element.")

with project_tab:
    text = st.text_input("Homogeneous polynomial", value="x y", key="project_input")

    if st.button("Project"):
        parts = run_computation(FEATURE, "projection",
                                lambda: decompose(to_ncpoly(parse(text), alphabet_for(text))),
                                metadata={"input": text})
        if parts is not None:
            lie, shf = parts
            st.markdown(f"**Lie part:** `{lie.to_text()}`")
            st.markdown(f"**Shuffle part:** `{shf.to_text()}`")
