import json

import pandas as pd
import streamlit as st

import scalars
from chenint import (PairingTable, canonical_model, evaluate, graded_pairing_matrix,
                     is_nondegenerate, pair_graded)
from expr_parser import letters, parse, parse_word, to_group_word, to_ncpoly
from ncalg import Alphabet
from utils import alphabet_for, alphabet_input, get_settings, run_computation

st.title("∫ Iterated Integrals")
st.markdown("Chen integrals along group words, computed in the canonical model where the "
            "generator named like a form carries the exponential of that form.")

FEATURE = "Iterated Integrals"
settings = get_settings()

eval_tab, graded_tab, theorem_tab = st.tabs(["Canonical model", "Graded pairing", "Non-degeneracy"])

with eval_tab:
    path = st.text_input("Path (group word)", value="x y")
    form = st.text_input("Forms (polynomial)", value="x y")

    if st.button("Integrate", type="primary"):
        def integrate():
            alphabet = alphabet_for(path, form)
            omega = to_ncpoly(parse(form), alphabet)
            model = canonical_model(alphabet, max(settings.max_degree, omega.degree))
            return evaluate(model, to_group_word(parse(path), alphabet), omega)

        value = run_computation(FEATURE, "canonical integral", integrate,
                                metadata={"path": path, "form": form})
        if value is not None:
            st.metric("∫ along the path", scalars.to_text(value))

with graded_tab:
    loop = st.text_input("Loop (group word)", value="(a,b)")
    word = st.text_input("Word of forms", value="omega1 omega2")
    uploaded = st.file_uploader("Pairing table (JSON, optional)", type=["json"])
    st.caption("Without a table every entry is an independent indeterminate v_<path>_<form>.")

    if st.button("Pair"):
        def graded():
            if uploaded is not None:
                table = PairingTable.from_document(json.load(uploaded))
            else:
                forms = Alphabet.of(sorted(letters(parse(word))))
                table = PairingTable.symbolic(alphabet_for(loop), forms)
            delta = to_group_word(parse(loop), table.path_alphabet)
            return pair_graded(table, delta, parse_word(word, table.form_alphabet))

        value = run_computation(FEATURE, "graded pairing", graded, metadata={"loop": loop, "word": word})
        if value is not None:
            st.code(scalars.to_text(value))

with theorem_tab:
    alphabet = alphabet_input(key="theorem_letters")
    k = st.number_input("Degree", min_value=1, max_value=4, value=3, step=1)

    if st.button("Build matrix"):
        matrix = run_computation(FEATURE, "graded pairing matrix", graded_pairing_matrix, alphabet, int(k),
                                 metadata={"letters": str(alphabet), "k": int(k)})
        if matrix is not None:
            st.dataframe(pd.DataFrame([[str(v) for v in matrix.row(i)] for i in range(matrix.rows)]))
            if is_nondegenerate(matrix):
                st.success("The pairing is non-degenerate.")
            else:
                st.error("The pairing is degenerate.")
