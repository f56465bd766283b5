from hypothesis import strategies as st

from hextile.polynomial import Polynomial, XY, XYZ


def polys(varset=XY, max_exp=3, max_terms=5, coeff=20):
    n = len(varset)
    mono = st.tuples(*[st.integers(0, max_exp)] * n)
    return st.dictionaries(mono, st.integers(-coeff, coeff), max_size=max_terms).map(
        lambda d: Polynomial(d, varset))


xy_polys = polys(XY)
xyz_polys = polys(XYZ, max_exp=2, max_terms=4)
