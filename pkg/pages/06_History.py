import pandas as pd
import streamlit as st

import history_manager as hm

st.set_page_config(page_title="Computation History", layout="wide")
st.title("📜 Computation History")

data = hm.get_history()

if not data:
    st.info("No computations yet. Use any of the tools in the sidebar.")
    st.stop()

df = pd.DataFrame(data)
df["metadata"] = df["metadata"].apply(lambda m: ", ".join(f"{k}={v}" for k, v in m.items()))

st.subheader("📌 Summary")
col1, col2 = st.columns(2)
with col1:
    st.metric("Computations", len(df))
with col2:
    st.metric("Tools used", df["feature"].nunique())

st.subheader("📊 By tool")
st.table(df.groupby("feature").size().rename("count").reset_index())

st.subheader("📝 Recent computations")
feature = st.selectbox("Tool", ["All"] + sorted(df["feature"].unique()))
if feature != "All":
    df = df[df["feature"] == feature]
st.dataframe(df[["created_at", "feature", "action", "metadata", "result"]], use_container_width=True)

if st.button("Clear history"):
    hm.clear_history()
    st.rerun()
