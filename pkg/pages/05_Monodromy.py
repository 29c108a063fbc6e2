import pandas as pd
import streamlit as st

from monodromy import (GRADE2_NAMES, apply_steps, grade2_text, pl_grade2, reduce_to_alpha,
                       steps_text)
from utils import run_computation

st.title("🔄 Monodromy")
st.markdown("Picard-Lefschetz action h_i(δ) = δ − (δ·δ_i)δ_i of a D4 configuration, with "
            "α₁ = δ₁ + δ₃ and α₂ = δ₁ + δ₄.")

FEATURE = "Monodromy"

st.subheader("Degree-2 element")
cols = st.columns(6)
g = [cols[j].number_input(name, value=1 if j == 0 else 0, step=1, key=f"g_{j}")
     for j, name in enumerate(GRADE2_NAMES)]
g = [int(v) for v in g]
st.markdown(f"g = `{grade2_text(g)}`")

act_tab, reduce_tab = st.tabs(["Action", "Reduction"])

with act_tab:
    rows = []
    for i in range(1, 5):
        rows.append({"operator": f"h{i}", "image": grade2_text(pl_grade2(i, g))})
    st.table(pd.DataFrame(rows))

with reduce_tab:
    if st.button("Reduce", type="primary"):
        result = run_computation(FEATURE, "reduce", reduce_to_alpha, g, metadata={"g": grade2_text(g)})
        if result is not None:
            steps, k = result
            st.markdown(f"**Operator word:** `{steps_text(steps)}`")
            st.metric("k", k)
            trace = [{"step": "start", "element": grade2_text(g)}]
            for n in range(1, len(steps) + 1):
                trace.append({"step": steps[n - 1].text(), "element": grade2_text(apply_steps(steps[:n], g))})
            st.table(pd.DataFrame(trace))
