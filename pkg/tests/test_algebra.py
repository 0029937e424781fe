from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hpairs.algebra import (
    AlgebraError,
    FiniteLocalAlgebra,
    HPair,
    degree,
    generated_subalgebra,
    gorenstein_conditions,
    is_gorenstein,
    is_ideal,
    power_chain,
    quotient,
    quotient_hpair,
    reduce_hpair,
    reduction_ideal,
    socle,
    validate_algebra,
    validate_hpair,
)
from hpairs.linalg import Subspace
from hpairs.young import YoungDiagram, build_algebra, build_hpair, family_rays, family_segment, monomial_algebra, ones

F = Fraction


def truncated(n):
    """K[x]/(x^n) on the basis 1, x, ..., x^(n-1)."""
    labels = ["1"] + [f"x^{i}" for i in range(1, n)]
    products = {(i, j): {i + j: 1} for i in range(1, n) for j in range(i, n) if i + j < n}
    return FiniteLocalAlgebra.build(labels, products)


def example53():
    D = YoungDiagram(2, ((3, 1), (1, 2)))
    return D, build_hpair(D, ones(D))


def table1_no6():
    D, B = family_rays((2, 2))
    return build_hpair(D, B)


class TestValidateAlgebra:
    def test_truncated(self):
        rep = validate_algebra(truncated(3))
        assert rep.ok and rep.nilpotency_index == 3

    def test_noncommutative(self):
        A = FiniteLocalAlgebra.build(["1", "a", "b", "c"], {(1, 2): {3: 1}, (2, 1): {3: 2}}, symmetric=False)
        rep = validate_algebra(A)
        assert "commutativity" in rep.kinds()
        assert next(p for p in rep.problems if p.kind == "commutativity").witness == (1, 2)

    def test_not_associative(self):
        # x*x = y, x*y = 0 but y*x... use a*a = b, a*b = c, b*a = c, a*c = 0, b*b = c gives (aa)b != a(ab)?
        A = FiniteLocalAlgebra.build(["1", "a", "b", "c"], {(1, 1): {2: 1}, (1, 2): {3: 1}, (2, 2): {3: 1}})
        rep = validate_algebra(A)
        assert "associativity" in rep.kinds()

    def test_not_nilpotent(self):
        A = FiniteLocalAlgebra.build(["1", "e"], {(1, 1): {1: 1}})
        assert "nilpotency" in validate_algebra(A).kinds()

    def test_unit_component(self):
        A = FiniteLocalAlgebra.build(["1", "x"], {(1, 1): {0: 1}})
        assert "ideal" in validate_algebra(A).kinds()

    def test_example53(self):
        _, H = example53()
        rep = validate_algebra(H.algebra)
        assert rep.ok and H.algebra.dim == 9
        # the presented relation x^3 y = x y^2 holds
        A = H.algebra
        lab = {l: i for i, l in enumerate(A.labels)}
        x3y = A.mul(A.basis_vector(lab["x1^3"]), A.basis_vector(lab["x2"]))
        xy2 = A.mul(A.basis_vector(lab["x1"]), A.basis_vector(lab["x2^2"]))
        assert x3y == xy2 != A.mul(A.basis_vector(0), A.basis_vector(0)) and any(x3y)
        # x^4 = y^3 = x^2 y^2 = 0
        assert not any(A.mul(A.basis_vector(lab["x1^3"]), A.basis_vector(lab["x1"])))
        assert not any(A.mul(A.basis_vector(lab["x2^2"]), A.basis_vector(lab["x2"])))
        assert not any(A.mul(A.basis_vector(lab["x1*x2"]), A.basis_vector(lab["x1*x2"])))


class TestPowerChain:
    def test_truncated(self):
        assert [P.dim for P in power_chain(truncated(3))] == [2, 1, 0]

    def test_no6(self):
        assert [P.dim for P in power_chain(table1_no6().algebra)] == [3, 1, 0]

    def test_example53_square(self):
        _, H = example53()
        # degree >= 2 monomials among the 9 basis elements: x^2, xy, y^2, x^3, x^2y, corner
        assert power_chain(H.algebra)[1].dim == 6


class TestSocle:
    def test_truncated(self):
        S = socle(truncated(3))
        assert S.dim == 1 and S.contains((0, 0, 1))

    def test_example53(self):
        _, H = example53()
        A = H.algebra
        S = socle(A)
        lab = {l: i for i, l in enumerate(A.labels)}
        a = [F(0)] * A.dim
        a[lab["x1^2*x2"]] = F(1)
        a[lab["x2^2"]] = F(-1)
        assert S.dim == 2
        assert S.contains(a) and S.contains(A.basis_vector(lab["x^corn"]))
        assert not is_gorenstein(A)

    def test_field_is_gorenstein(self):
        K = FiniteLocalAlgebra.build(["1"], {})
        assert validate_algebra(K).ok and is_gorenstein(K)

    def test_no38(self):
        D = YoungDiagram(4, tuple(tuple(2 if t == i else 0 for t in range(4)) for i in range(4)))
        assert socle(build_algebra(D, ones(D))).dim == 1

    def test_contains_last_power(self):
        for A in (truncated(5), table1_no6().algebra, example53()[1].algebra):
            chain = power_chain(A)
            last = [P for P in chain if P.dim][-1]
            assert socle(A).contains_subspace(last)


class TestValidateHPair:
    def test_truncated_ok(self):
        H = HPair.from_ideal_coords(truncated(3), [(1, 0)], (0, 1))
        assert validate_hpair(H).ok

    def test_does_not_generate(self):
        H = HPair.from_ideal_coords(truncated(3), [(0, 1)], (1, 0))
        assert "U does not generate" in validate_hpair(H).kinds()

    def test_square_zero_has_no_hpair(self):
        A = FiniteLocalAlgebra.build(["1", "x", "y"], {})
        for U in ([(1, 0)], [(0, 1)], [(1, 1)], [(1, -2)]):
            w = (0, 1) if U[0][1] == 0 else (1, 0)
            assert "U does not generate" in validate_hpair(HPair.from_ideal_coords(A, U, w)).kinds()

    def test_w_in_U(self):
        H = HPair.from_ideal_coords(truncated(3), [(1, 0)], (2, 0))
        assert "w lies in U" in validate_hpair(H).kinds()

    def test_U_outside_m(self):
        A = truncated(3)
        H = HPair(A, Subspace.span([(1, 1, 0)], 3), (0, 0, 1))
        assert "U not inside m" in validate_hpair(H).kinds()

    def test_field_rejected(self):
        K = FiniteLocalAlgebra.build(["1"], {})
        H = HPair(K, Subspace.zero(1), (F(0),))
        assert "no hyperplane" in validate_hpair(H).kinds()

    def test_generation_closure(self):
        A = truncated(4)
        U = Subspace.span([(0, 1, 0, 0), (0, 0, 1, 0)], 4)
        assert generated_subalgebra(A, U).dim == 4


class TestDegree:
    @pytest.mark.parametrize("n", [2, 3, 4, 6])
    def test_segment(self, n):
        assert degree(family_segment(n)) == n

    def test_truncated3(self):
        assert degree(HPair.from_ideal_coords(truncated(3), [(1, 0)], (0, 1))) == 2

    def test_figure1(self):
        assert degree(example53()[1]) == 4


class TestReduction:
    def test_no6_nondegenerate(self):
        assert reduction_ideal(table1_no6()).dim == 0

    def test_example53_contains_socle_element(self):
        _, H = example53()
        A = H.algebra
        J = reduction_ideal(H)
        lab = {l: i for i, l in enumerate(A.labels)}
        a = [F(0)] * A.dim
        a[lab["x1^2*x2"]] = F(1)
        a[lab["x2^2"]] = F(-1)
        assert J.contains(a)
        assert is_ideal(A, J) and H.U.contains_subspace(J)

    def test_ideal_inside_U_is_in_J(self):
        # K[x]/(x^4) with U = <x, x^3>: the ideal <x^3> sits in U
        H = HPair.from_ideal_coords(truncated(4), [(1, 0, 0), (0, 0, 1)], (0, 1, 0))
        assert validate_hpair(H).ok
        J = reduction_ideal(H)
        assert J.contains((0, 0, 0, 1))

    def test_quotient_identity_for_zero(self):
        H = table1_no6()
        Q = quotient(H, Subspace.zero(H.dim))
        assert Q.pair is H and Q.kept == tuple(range(H.dim))

    def test_quotient_example53(self):
        _, H = example53()
        J = reduction_ideal(H)
        R = quotient_hpair(H, J)
        assert R.algebra.dim == 9 - J.dim
        assert validate_algebra(R.algebra).ok and validate_hpair(R).ok
        assert is_gorenstein(R.algebra)
        assert all(gorenstein_conditions(R).values())
        assert reduction_ideal(R).dim == 0

    def test_quotient_rejects_non_ideal(self):
        H = HPair.from_ideal_coords(truncated(4), [(1, 0, 0), (0, 0, 1)], (0, 1, 0))
        with pytest.raises(AlgebraError):
            quotient(H, Subspace.span([(0, 1, 0, 0)], 4))
        with pytest.raises(AlgebraError):
            quotient(H, Subspace.span([(0, 0, 1, 0)], 4))

    def test_simplex_z1z2_quotient(self):
        D = YoungDiagram(2, ((2, 0), (1, 1), (0, 2)))
        H = build_hpair(D, {(2, 0): 0, (1, 1): 1, (0, 2): 0})
        R = reduce_hpair(H).pair
        assert R.algebra.labels == ("1", "x1", "x2", "x^corn")
        assert R.U.dim == 2 and R.U.contains((0, 1, 0, 0)) and R.U.contains((0, 0, 1, 0))
        x1, x2 = R.algebra.basis_vector(1), R.algebra.basis_vector(2)
        assert not any(R.algebra.mul(x1, x1)) and not any(R.algebra.mul(x2, x2))


small_diagrams = st.sampled_from([
    ((3, 1), (1, 2)), ((2, 2),), ((4, 0), (0, 2)), ((2, 1), (0, 3)), ((3, 0), (1, 1), (0, 2)),
    ((2, 0, 0), (0, 2, 0), (0, 0, 2)), ((1, 1, 1),), ((2, 1, 0), (0, 0, 2)),
])
b_values = st.lists(st.integers(-2, 2), min_size=3, max_size=3)


@settings(max_examples=40)
@given(small_diagrams, b_values)
def test_reduction_properties(corners, bs):
    D = YoungDiagram(len(corners[0]), corners)
    B = {c: F(b) for c, b in zip(D.corners, bs + [1] * len(D.corners))}
    if not any(B.values()):
        B[D.corners[0]] = F(1)
    H = build_hpair(D, B)
    A = H.algebra
    assert validate_algebra(A).ok and validate_hpair(H).ok
    d = degree(H)
    assert 2 <= d <= A.n
    J = reduction_ideal(H)
    for v in J.basis:
        for j in range(A.dim):
            assert H.U.contains(A.mul(v, A.basis_vector(j)))
    # maximality: every basis vector of a complement has a product escaping U
    for i in range(A.dim):
        e = A.basis_vector(i)
        if not J.contains(e):
            assert any(not H.U.contains(A.mul(e, A.basis_vector(j))) for j in range(A.dim))
    R = reduce_hpair(H).pair
    assert reduction_ideal(R).dim == 0
    assert all(gorenstein_conditions(R).values())


def test_monomial_algebra_socle_counts_corners():
    for corners in [((3, 1), (1, 2)), ((2, 0), (0, 2)), ((1, 1, 0), (0, 0, 3)), ((4, 3), (5, 0), (0, 4))]:
        D = YoungDiagram(len(corners[0]), corners)
        assert socle(monomial_algebra(D)).dim == len(corners)
