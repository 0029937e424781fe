from fractions import Fraction

import pytest
from hypothesis import given, settings

from hpairs.algebra import reduction_ideal
from hpairs.equation import HypersurfaceReport, equation
from hpairs.geometry import cone_report, essential_variable_count, is_normal, partials_rank
from hpairs.poly import Poly, parse, ring_vars
from hpairs.young import (
    YoungDiagram,
    build_hpair,
    family_parallelepiped,
    family_rays,
    family_segment,
)
from strategies import homogeneous, random_hpairs


def test_six_non_normal():
    v = is_normal(equation(family_segment(5)))
    assert v.normal is False
    assert v.witness == parse("z1^3", ring_vars("z", 5, start=1))


def test_no6_normal():
    D, B = family_rays((2, 2))
    v = is_normal(equation(build_hpair(D, B)))
    assert v.normal is True and v.witness is None and v.essential_count == 4


def test_rays_32_normal():
    D, B = family_rays((3, 2))
    assert is_normal(equation(build_hpair(D, B))).normal is True


def test_d_below_two_rejected():
    names = ("z0", "z1")
    r = HypersurfaceReport(names, 1, parse("z1", names), (parse("z1", ("z1",)),))
    with pytest.raises(ValueError):
        is_normal(r)


class TestEssential:
    def test_quadric(self):
        names = ring_vars("z", 4)
        f = parse("z0*z3 - 1/2*z1^2 - 1/2*z2^2", names)
        assert essential_variable_count(f) == 4
        assert essential_variable_count(f.embed(names + ("z4",))) == 4

    def test_square_of_linear_form(self):
        assert essential_variable_count(parse("z1^2 + 2*z1*z2 + z2^2", ["z1", "z2"])) == 1

    def test_zero(self):
        with pytest.raises(ValueError):
            essential_variable_count(Poly.zero(["z1"]))

    def test_hidden_cone(self):
        # (z1 - z2)^3 + z3^3 uses 3 variables but only 2 linear forms
        f = parse("z1^3 - 3*z1^2*z2 + 3*z1*z2^2 - z2^3 + z3^3", ["z1", "z2", "z3"])
        assert essential_variable_count(f) == 2

    @settings(max_examples=80)
    @given(homogeneous(deg=3, max_terms=5))
    def test_fast_path_matches_exact(self, f):
        assert essential_variable_count(f) == partials_rank(f)

    def test_cone_report_six(self):
        r = equation(family_segment(5))
        v = cone_report(r.layer(5))
        assert v.essential_count == 1 and v.cone_apex_dim == 4
        assert cone_report(parse("z1*z2 - z3^2", ["z1", "z2", "z3"])).cone_apex_dim == 0


@pytest.mark.parametrize("sides", [(2, 2), (3, 1), (1, 1, 1), (2, 2, 2), (3,)])
def test_parallelepiped_oracle_examples(sides):
    D, B = family_parallelepiped(sides)
    assert is_normal(equation(build_hpair(D, B))).normal is all(s <= 2 for s in sides)


@settings(max_examples=60)
@given(random_hpairs())
def test_essential_count_equals_reduced_dim(H):
    r = equation(H)
    J = reduction_ideal(H)
    assert essential_variable_count(r.f) == H.dim - J.dim


@settings(max_examples=60)
@given(random_hpairs())
def test_cone_invariance_of_normality(H):
    r = equation(H)
    v = is_normal(r)
    extra = r.boundary_vars + ("t",)
    widened = HypersurfaceReport(r.var_names + ("t",), r.d, r.f.embed(r.var_names + ("t",)),
                                 tuple(fk.embed(extra) for fk in r.layers))
    assert is_normal(widened).normal == v.normal
    assert (v.witness is not None) == (v.normal is False)
    if v.witness is not None:
        assert not v.witness.is_constant()


def forces_non_normal(D, B):
    bs = {c: b for c, b in B.items()}
    d = max(sum(c) for c in D.corners if bs[c])
    for i in range(D.k):
        top = [c for c in D.corners if sum(c) == d]
        below = [c for c in D.corners if sum(c) == d - 1]
        if all(c[i] >= 3 for c in top) and all(c[i] >= 1 for c in below):
            return True
    return False


@pytest.mark.parametrize("corners", [
    ((3, 1), (1, 2)), ((4,),), ((3, 0), (0, 2)), ((4, 1), (0, 2)), ((3, 3),), ((5, 0), (2, 2)),
    ((3, 1, 0), (0, 0, 2)), ((3, 1), (2, 2), (0, 3)),
])
def test_shared_factor_examples(corners):
    D = YoungDiagram(len(corners[0]), corners)
    for bs in [(1, 1, 1), (2, -1, 3), (Fraction(1, 2), 5, -2)]:
        B = {c: Fraction(b) for c, b in zip(D.corners, bs)}
        if forces_non_normal(D, B):
            assert is_normal(equation(build_hpair(D, B))).normal is False
