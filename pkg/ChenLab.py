import streamlit as st

from __version__ import __version__
from utils import get_settings

st.set_page_config(
    page_title="ChenLab: Iterated Integrals and Melnikov Functions",
    page_icon="∮",
    layout="wide",
    initial_sidebar_state="expanded"
)

css = """
<link rel="manifest" href='/static/manifest.json'>

<style>
    div[data-testid="stHtml"] { display: none; }

    .hero {
        padding: 40px 32px;
        border-radius: 14px;
        background: linear-gradient(120deg, #0f2027 0%, #203a43 50%, #2c5364 100%);
        color: #f5f7fa;
        margin-bottom: 28px;
    }
    .hero h1 { font-size: 38px; font-weight: 700; margin: 0 0 8px 0; }
    .hero p { font-size: 17px; line-height: 1.5; }

    .tool-card {
        border: 1px solid rgba(44, 83, 100, 0.35);
        border-left: 6px solid #2c5364;
        border-radius: 10px;
        padding: 18px 20px;
        min-height: 150px;
    }
    .tool-card .icon { font-size: 28px; }
    .tool-card h4 { margin: 6px 0; }
    .tool-card p { opacity: 0.85; font-size: 15px; }
</style>
"""

st.markdown(css, unsafe_allow_html=True)

APP_VERSION = __version__


def render_header():
    st.markdown(
        """
        <div class="hero">
            <h1>∮ ChenLab</h1>
            <p>Exact computations with free Lie algebras, shuffles, Chen iterated integrals
            and higher order Melnikov functions.</p>
        </div>
        """,
        unsafe_allow_html=True
    )


def feature_card(column, icon, title, text):
    with column:
        st.markdown(
            f"""
            <div class="tool-card">
                <div class="icon">{icon}</div>
                <h4>{title}</h4>
                <p>{text}</p>
            </div>
            """,
            unsafe_allow_html=True
        )


render_header()

st.markdown("## What you can compute")

row1 = st.columns(3)
feature_card(row1[0], "🔗", "Lie Algebra",
             "Hall bases, scalar products, Ree's shuffle test and the Lie/shuffle splitting.")
feature_card(row1[1], "➰", "Free Group",
             "Magnus expansions, lower central series degrees and Lie elements of loops.")
feature_card(row1[2], "∫", "Iterated Integrals",
             "Chen's axioms, the canonical model and the graded pairing with symbolic tables.")

row2 = st.columns(3)
feature_card(row2[0], "🌀", "Melnikov Functions",
             "Nested integrands, the P_k and C_k closed forms and the vanishing fifth function.")
feature_card(row2[1], "🔄", "Monodromy",
             "Picard-Lefschetz action of a D4 configuration and the reduction to [alpha1, alpha2].")
feature_card(row2[2], "📜", "History",
             "Every computation of this session, with its inputs and exact result.")

st.markdown("---")

st.header("🚀 Get Started")
st.write("Use the **sidebar** to navigate all tools.")
st.info("💡 **Tip:** `[a,b]` is the Lie bracket, `(a,b)` the group commutator, `#` the shuffle "
        "and juxtaposition the product. Symbolic scalars go in braces, e.g. `{w2 - w1} x y`.")
st.markdown("The same computations are available from the command line: `python cli.py --help`.")

settings = get_settings()

st.sidebar.header("Settings")
st.sidebar.info(
    f"Default letters: **{', '.join(settings.letters)}**\n\n"
    f"Degree bound: **{settings.max_degree}**\n\n"
    "Change them with `CHENLAB_LETTERS` and `CHENLAB_MAX_DEGREE`."
)

st.sidebar.markdown("---")
st.sidebar.info(f"ChenLab Version: **v{APP_VERSION}**")
