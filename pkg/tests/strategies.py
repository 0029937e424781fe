"""Shared hypothesis strategies for polynomials over small rings."""

from fractions import Fraction

from hypothesis import strategies as st

from hpairs.poly import Poly

VARS3 = ("z1", "z2", "z3")

coeffs = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4)).filter(bool)


def exps(nvars: int, max_deg: int):
    return st.lists(st.integers(0, max_deg), min_size=nvars, max_size=nvars).map(tuple).filter(
        lambda e: sum(e) <= max_deg)


def polys(vars=VARS3, max_deg: int = 3, max_terms: int = 4, nonzero: bool = False):
    terms = st.dictionaries(exps(len(vars), max_deg), coeffs, min_size=1 if nonzero else 0, max_size=max_terms)
    return terms.map(lambda t: Poly(vars, t))


def homogeneous(vars=VARS3, deg: int = 2, max_terms: int = 4):
    def fix(t):
        return Poly(vars, t)
    mons = exps(len(vars), deg).filter(lambda e: sum(e) == deg)
    return st.dictionaries(mons, coeffs, min_size=1, max_size=max_terms).map(fix)


# -- random H-pairs ----------------------------------------------------------

from hpairs.algebra import HPair, power_chain  # noqa: E402
from hpairs.linalg import Subspace, nullspace  # noqa: E402
from hpairs.young import YoungDiagram, build_algebra  # noqa: E402

SMALL_CORNERS = [
    ((3,),), ((4,),), ((2, 0), (0, 2)), ((3, 1), (1, 2)), ((2, 2),), ((2, 1),), ((3, 0), (0, 2)),
    ((1, 1, 0), (0, 0, 3)), ((2, 0, 0), (0, 2, 0), (0, 0, 2)), ((1, 1, 1),), ((2, 1), (0, 3)),
]


def _hpair_from(corners, bs, pi_m):
    D = YoungDiagram(len(corners[0]), corners)
    B = {c: Fraction(b) for c, b in zip(D.corners, list(bs) + [1] * len(D.corners))}
    if not any(B.values()):
        B[D.corners[0]] = Fraction(1)
    A = build_algebra(D, B)
    n = A.n
    pi = [Fraction(0)] + [Fraction(x) for x in (list(pi_m) + [0] * n)[:n]]
    m2 = power_chain(A)[1]
    if not any(sum(p * x for p, x in zip(pi, v)) for v in m2.basis):
        # force pi to see m^2, otherwise U cannot generate
        v = m2.basis[-1]
        j = max(i for i, x in enumerate(v) if x)
        pi[j] += 1
    U = nullspace([pi, [1] + [0] * n], A.dim)
    j = next(i for i, p in enumerate(pi) if p)
    w = tuple(Fraction(int(i == j)) / pi[j] for i in range(A.dim))
    return HPair(A, Subspace(A.dim, U.basis), w)


def random_hpairs():
    """H-pairs with a Young algebra and a random generating hyperplane."""
    return st.builds(
        _hpair_from,
        st.sampled_from(SMALL_CORNERS),
        st.lists(st.integers(-2, 2), min_size=3, max_size=3),
        st.lists(st.integers(-2, 2), min_size=12, max_size=12),
    )
