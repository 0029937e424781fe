"""Shipped regression corpora: Table 1, the Figure 1/2 shapes, and the family oracles."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterator

from .algebra import FiniteLocalAlgebra, HPair, is_gorenstein, validate_algebra
from .equation import equation
from .geometry import is_normal
from .young import (
    YoungDiagram,
    build_algebra,
    build_hpair,
    exceptional_coords,
    family_parallelepiped,
    family_rays,
    family_segment,
    ones,
    parallelepiped_normal_oracle,
    precorners,
    rays_normal_oracle,
)


@dataclass(frozen=True)
class CaseResult:
    suite: str
    name: str
    ok: bool
    detail: str


@dataclass(frozen=True)
class Table1Entry:
    no: int
    presentation: str
    dim: int
    corners: tuple | None  # None for the field K itself

    def diagram(self) -> YoungDiagram:
        return YoungDiagram(len(self.corners[0]), self.corners)

    def algebra(self) -> FiniteLocalAlgebra:
        if self.corners is None:
            return FiniteLocalAlgebra.build(["1"], {})
        D = self.diagram()
        return build_algebra(D, ones(D))


def _rays(*ds) -> tuple:
    k = len(ds)
    return tuple(tuple(d if t == i else 0 for t in range(k)) for i, d in enumerate(ds))


TABLE1 = (
    Table1Entry(1, "K", 1, None),
    Table1Entry(2, "K[x1]/(x1^2)", 2, ((1,),)),
    Table1Entry(3, "K[x1]/(x1^3)", 3, ((2,),)),
    Table1Entry(5, "K[x1]/(x1^4)", 4, ((3,),)),
    Table1Entry(6, "K[x1,x2]/(x1x2, x1^2-x2^2)", 4, _rays(2, 2)),
    Table1Entry(9, "K[x1]/(x1^5)", 5, ((4,),)),
    Table1Entry(10, "K[x1,x2]/(x1x2, x1^3-x2^2)", 5, _rays(3, 2)),
    Table1Entry(14, "K[x1,x2,x3]/(x1x2, x1x3, x2x3, x1^2-x2^2, x1^2-x3^2)", 5, _rays(2, 2, 2)),
    Table1Entry(18, "K[x1]/(x1^6)", 6, ((5,),)),
    Table1Entry(19, "K[x1,x2]/(x1x2, x1^4-x2^2)", 6, _rays(4, 2)),
    Table1Entry(20, "K[x1,x2]/(x1x2, x1^3-x2^3)", 6, _rays(3, 3)),
    Table1Entry(21, "K[x1,x2]/(x1^3, x2^2)", 6, ((2, 1),)),
    Table1Entry(30, "K[x1,x2,x3]/(x1^2, x2^2, x1x3, x2x3, x1x2-x3^3)", 6, ((1, 1, 0), (0, 0, 3))),
    Table1Entry(38, "K[x1,..,x4]/(xi^2-xj^2, xixj, i != j)", 6, _rays(2, 2, 2, 2)),
)


def run_table1() -> list:
    out = []
    for e in TABLE1:
        A = e.algebra()
        rep = validate_algebra(A)
        gor = is_gorenstein(A)
        ok = rep.ok and gor and A.dim == e.dim
        out.append(CaseResult("table1", f"No. {e.no}", ok,
                              f"{e.presentation}: dim {A.dim} (expected {e.dim}), "
                              f"valid={rep.ok}, gorenstein={gor}"))
    return out


@dataclass(frozen=True)
class Shape:
    name: str
    corners: tuple
    precorners: tuple
    exceptional: tuple = ()


FIGURE1 = Shape("figure 1", ((3, 1), (1, 2)), ((3, 0), (2, 1), (0, 2)))

FIGURE2 = (
    Shape("a", ((4, 3),), ((4, 2), (3, 3))),
    Shape("b", ((4, 3), (0, 4)), ((4, 2), (3, 3))),
    Shape("c", ((4, 3), (5, 0)), ((4, 2), (3, 3))),
    Shape("d", ((5, 0), (0, 4)), ((4, 0), (0, 3))),
    Shape("e", ((6, 0), (3, 1)), ((5, 0), (2, 1))),
    Shape("e'", ((6, 0), (0, 1)), ((5, 0),), (2,)),
    Shape("f", ((0, 6), (1, 3)), ((0, 5), (1, 2))),
    Shape("f'", ((0, 6), (1, 0)), ((0, 5),), (1,)),
    Shape("g", ((5, 0), (0, 4), (1, 1)), ((4, 0), (0, 3))),
    Shape("h", ((4, 3), (5, 0), (0, 4)), ((4, 2), (3, 3))),
    Shape("i", ((6, 0), (3, 1), (0, 2)), ((5, 0), (2, 1))),
    Shape("j", ((0, 6), (1, 3), (2, 0)), ((0, 5), (1, 2))),
)


def run_figure2() -> list:
    out = []
    for s in FIGURE2:
        D = YoungDiagram(2, s.corners)
        pre = tuple(precorners(D))
        exc = tuple(exceptional_coords(D))
        ok = set(pre) == set(s.precorners) and exc == s.exceptional and len(pre) <= 2
        out.append(CaseResult("figure2", s.name, ok,
                              f"corners {list(s.corners)}: precorners {list(pre)}, exceptional {list(exc)}"))
    D = YoungDiagram(2, FIGURE1.corners)
    pre = tuple(precorners(D))
    out.append(CaseResult("figure2", FIGURE1.name, pre == FIGURE1.precorners and not exceptional_coords(D),
                          f"precorners {list(pre)}"))
    return out


def rays_cases(max_k: int = 3, max_d: int = 6) -> Iterator[tuple]:
    for k in range(1, max_k + 1):
        for L in itertools.product(range(2, max_d + 1), repeat=k):
            if list(L) == sorted(L, reverse=True):
                yield L


def parallelepiped_cases(max_k: int = 3, max_side: int = 4) -> Iterator[tuple]:
    for k in range(1, max_k + 1):
        for sides in itertools.product(range(1, max_side + 1), repeat=k):
            if sides != (1,):
                yield sides


def _check(suite: str, name: str, H: HPair, expected: bool, sink: Callable | None) -> CaseResult:
    r = equation(H)
    got = bool(is_normal(r).normal)
    if sink is not None:
        sink(name, H, r)
    return CaseResult(suite, name, got == expected, f"pipeline normal={got}, oracle normal={expected}")


def run_oracles(sink: Callable | None = None) -> list:
    """Rays, parallelepiped and segment normality oracles against the pipeline."""
    out = []
    for L in rays_cases():
        D, B = family_rays(L)
        out.append(_check("rays", f"rays {L}", build_hpair(D, B), rays_normal_oracle(L), sink))
    for sides in parallelepiped_cases():
        D, B = family_parallelepiped(sides)
        out.append(_check("parallelepiped", f"box {sides}", build_hpair(D, B),
                          parallelepiped_normal_oracle(sides), sink))
    for n in range(2, 9):
        out.append(_check("segment", f"segment {n}", family_segment(n), n <= 2, sink))
    return out


CORPORA = {
    "table1": run_table1,
    "figure2": run_figure2,
    "oracles": run_oracles,
}

__all__ = ["CORPORA", "CaseResult", "FIGURE1", "FIGURE2", "TABLE1"]
