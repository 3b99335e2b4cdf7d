from hypothesis import strategies as st

from fano_instanton.chow import CurveClass, DivClass

small = st.integers(-6, 6)
divs = st.builds(DivClass, small, small, small)
curves = st.builds(CurveClass, small, small, small)
