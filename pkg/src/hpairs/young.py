"""Young diagrams, the algebras and H-pairs they define, and closed-form layers.

A k-dimensional diagram is a finite order ideal of Z^k_{>=0}, stored by its
corner cells (maximal elements).  Cells are listed by increasing total degree
and, within a degree, in decreasing lex order, so for k = 2 the list starts
0, (1,0), (0,1), (2,0), ...  Coordinates are reported 1-based where they name
an axis (``exceptional_coords``).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iproduct
from typing import Mapping, Sequence

from .algebra import FiniteLocalAlgebra, HPair
from .linalg import Subspace, unit_vector
from .poly import Poly, multinomial, ring_vars

DEFAULT_BUDGET = 10_000


class DiagramError(ValueError):
    pass


class ExceptionalDiagram(DiagramError):
    def __init__(self, coords: Sequence[int]):
        hint = ", ".join(f"e_{i}" for i in coords)
        super().__init__(
            f"diagram is exceptional with respect to coordinate(s) {list(coords)}; "
            f"delete the cell(s) {hint} (the algebra is the same without them)")
        self.coords = list(coords)


class DiagramTooLarge(DiagramError):
    pass


def cell_key(c: tuple) -> tuple:
    return (sum(c), tuple(-x for x in c))


def leq(a: Sequence[int], b: Sequence[int]) -> bool:
    return all(x <= y for x, y in zip(a, b))


@dataclass(frozen=True)
class YoungDiagram:
    k: int
    corners: tuple

    def __post_init__(self):
        corners = tuple(sorted({tuple(int(x) for x in c) for c in self.corners}, key=cell_key))
        object.__setattr__(self, "corners", corners)
        if not corners:
            raise DiagramError("a diagram needs at least one corner")
        for c in corners:
            if len(c) != self.k:
                raise DiagramError(f"corner {c} does not have {self.k} coordinates")
            if any(x < 0 for x in c):
                raise DiagramError(f"corner {c} has a negative coordinate")
        for a in corners:
            for b in corners:
                if a != b and leq(a, b):
                    raise DiagramError(f"corners {a} and {b} are comparable")
        for i in range(self.k):
            if not any(c[i] for c in corners):
                raise DiagramError(f"no cell uses coordinate {i + 1}")

    @classmethod
    def from_cells(cls, cells) -> "YoungDiagram":
        cells = {tuple(c) for c in cells}
        k = len(next(iter(cells)))
        corners = [c for c in cells
                   if not any(tuple(x + (t == i) for t, x in enumerate(c)) in cells for i in range(k))]
        return cls(k, tuple(corners))


def cells(D: YoungDiagram, budget: int = DEFAULT_BUDGET) -> list:
    seen: set = set()
    for c in D.corners:
        size = 1
        for x in c:
            size *= x + 1
        if size > budget:
            raise DiagramTooLarge(f"corner {c} alone spans {size} cells (budget {budget})")
        seen.update(iproduct(*(range(x + 1) for x in c)))
        if len(seen) > budget:
            raise DiagramTooLarge(f"diagram exceeds the budget of {budget} cells")
    return sorted(seen, key=cell_key)


def _plus(c: tuple, i: int) -> tuple:
    return c[:i] + (c[i] + 1,) + c[i + 1:]


def precorners(D: YoungDiagram, budget: int = DEFAULT_BUDGET) -> list:
    all_cells = cells(D, budget)
    inside = set(all_cells)
    corners = set(D.corners)
    out = []
    for c in all_cells:
        if c in corners:
            continue
        if all(_plus(c, i) not in inside or _plus(c, i) in corners for i in range(D.k)):
            out.append(c)
    return sorted(out, key=lambda c: tuple(-x for x in c))


def exceptional_coords(D: YoungDiagram) -> list:
    """1-based axes i such that e_i is the only cell with a nonzero i-th entry."""
    out = []
    for i in range(D.k):
        # some cell other than e_i uses axis i iff some corner dominates e_i + e_j
        ok = any(c[i] >= 2 or (c[i] >= 1 and sum(c) >= 2) for c in D.corners)
        if not ok:
            out.append(i + 1)
    return out


def is_exceptional(D: YoungDiagram) -> bool:
    return bool(exceptional_coords(D))


def _check_b(D: YoungDiagram, B: Mapping) -> dict:
    b = {tuple(m): Fraction(v) for m, v in B.items()}
    for m in b:
        if m not in D.corners:
            raise DiagramError(f"b given for {m}, which is not a corner")
    for c in D.corners:
        if c not in b:
            raise DiagramError(f"missing b for corner {c}")
    if not any(b.values()):
        raise DiagramError("at least one b must be nonzero")
    return b


def cell_label(c: tuple) -> str:
    if not any(c):
        return "1"
    names = ["x"] if len(c) == 1 else [f"x{i + 1}" for i in range(len(c))]
    parts = [n if e == 1 else f"{n}^{e}" for n, e in zip(names, c) if e]
    return "*".join(parts)


@dataclass(frozen=True, eq=False)
class YoungBasis:
    """Basis layout of A_{Lambda,B}: non-corner cells in cell order, then x^corn."""

    diagram: YoungDiagram
    b: dict
    cells: tuple
    noncorner: tuple
    index: dict  # non-corner cell -> basis index
    special: tuple  # corner mu* with x^corn = x^mu* / b_mu*

    @property
    def corn_index(self) -> int:
        return len(self.noncorner)

    @property
    def dim(self) -> int:
        return len(self.noncorner) + 1

    def var_of(self, cell: tuple) -> str:
        """Coordinate name z_i of a non-corner cell (basis index i)."""
        return f"z{self.index[cell]}"


def young_basis(D: YoungDiagram, B: Mapping, budget: int = DEFAULT_BUDGET) -> YoungBasis:
    b = _check_b(D, B)
    all_cells = tuple(cells(D, budget))
    corners = set(D.corners)
    noncorner = tuple(c for c in all_cells if c not in corners)
    special = next(c for c in D.corners if b[c])
    return YoungBasis(D, b, all_cells, noncorner, {c: i for i, c in enumerate(noncorner)}, special)


def build_algebra(D: YoungDiagram, B: Mapping, budget: int = DEFAULT_BUDGET) -> FiniteLocalAlgebra:
    """A_{Lambda,B}; no exceptional check (used for small corpus algebras)."""
    return _algebra_from_basis(young_basis(D, B, budget))


def _algebra_from_basis(Y: YoungBasis) -> FiniteLocalAlgebra:
    corners = set(Y.diagram.corners)
    corn = Y.corn_index
    labels = [cell_label(c) for c in Y.noncorner] + ["x^corn"]
    products = {}
    for a, ca in enumerate(Y.noncorner):
        for bi in range(a, len(Y.noncorner)):
            cb = Y.noncorner[bi]
            s = tuple(x + y for x, y in zip(ca, cb))
            if s in Y.index:
                products[(a, bi)] = {Y.index[s]: Fraction(1)}
            elif s in corners:
                if Y.b[s]:
                    products[(a, bi)] = {corn: Y.b[s]}
    products[(0, corn)] = {corn: Fraction(1)}
    return FiniteLocalAlgebra.build(labels, products)


def build_hpair(D: YoungDiagram, B: Mapping, budget: int = DEFAULT_BUDGET) -> HPair:
    exc = exceptional_coords(D)
    if exc:
        raise ExceptionalDiagram(exc)
    Y = young_basis(D, B, budget)
    A = _algebra_from_basis(Y)
    n1 = Y.dim
    U = Subspace(n1, tuple(unit_vector(n1, i) for i in range(1, Y.corn_index)))
    return HPair(A, U, unit_vector(n1, Y.corn_index))


def monomial_algebra(D: YoungDiagram, budget: int = DEFAULT_BUDGET) -> FiniteLocalAlgebra:
    """A_Lambda = K[x]/(x^lambda : lambda not in Lambda), every cell a basis element."""
    all_cells = cells(D, budget)
    index = {c: i for i, c in enumerate(all_cells)}
    products = {}
    for a, ca in enumerate(all_cells):
        for bi in range(a, len(all_cells)):
            s = tuple(x + y for x, y in zip(ca, all_cells[bi]))
            if s in index:
                products[(a, bi)] = {index[s]: Fraction(1)}
    return FiniteLocalAlgebra.build([cell_label(c) for c in all_cells], products)


def gorenstein_system(D: YoungDiagram, B: Mapping, budget: int = DEFAULT_BUDGET) -> list:
    """k x |precorners| matrix; row i is sum b_{lambda+e_i} z_lambda over precorners."""
    b = _check_b(D, B)
    pre = precorners(D, budget)
    corners = set(D.corners)
    M = []
    for i in range(D.k):
        row = []
        for lam in pre:
            up = _plus(lam, i)
            row.append(b[up] if up in corners else Fraction(0))
        M.append(row)
    return M


def closed_form_layers(D: YoungDiagram, B: Mapping, budget: int = DEFAULT_BUDGET) -> tuple:
    """(d, f_d, f_{d-1}) from the corner data alone, over z1..zn."""
    Y = young_basis(D, B, budget)
    b = Y.b
    n = Y.dim - 1
    names = ring_vars("z", n, start=1)
    d = max(sum(mu) for mu in D.corners if b[mu])

    def var_exps(cells_with_mult: Mapping) -> tuple:
        exps = [0] * n
        for cell, e in cells_with_mult.items():
            exps[Y.index[cell] - 1] += e
        return tuple(exps)

    def unit_cell(i: int) -> tuple:
        return tuple(int(t == i) for t in range(D.k))

    def z_power(mu: tuple) -> dict:
        return {unit_cell(i): e for i, e in enumerate(mu) if e}

    fd: dict = {}
    for mu in D.corners:
        if sum(mu) == d and b[mu]:
            m = var_exps(z_power(mu))
            fd[m] = fd.get(m, 0) + Fraction((-1) ** (d - 1), d) * multinomial(mu) * b[mu]
    fd1: dict = {}
    if d == 2:
        # f_1 = pi(z) is the x^corn coordinate; no corner has degree 1 in a non-exceptional diagram
        m = [0] * n
        m[Y.corn_index - 1] = 1
        fd1[tuple(m)] = Fraction(1)
    else:
        for mu in D.corners:
            if not b[mu]:
                continue
            if sum(mu) == d - 1:
                m = var_exps(z_power(mu))
                fd1[m] = fd1.get(m, 0) + Fraction((-1) ** (d - 2), d - 1) * multinomial(mu) * b[mu]
            elif sum(mu) == d:
                for nu in _degree_two_below(mu):
                    rest = tuple(x - y for x, y in zip(mu, nu))
                    powers = z_power(rest)
                    powers[nu] = powers.get(nu, 0) + 1
                    m = var_exps(powers)
                    fd1[m] = fd1.get(m, 0) + (-1) ** (d - 2) * multinomial(rest) * b[mu]
    clean = lambda t: {m: c for m, c in t.items() if c}
    return d, Poly(names, clean(fd)), Poly(names, clean(fd1))


def _degree_two_below(mu: tuple) -> list:
    k = len(mu)
    out = []
    for i in range(k):
        for j in range(i, k):
            nu = [0] * k
            nu[i] += 1
            nu[j] += 1
            if leq(nu, mu):
                out.append(tuple(nu))
    return out


# -- named families -------------------------------------------------------


def ones(D: YoungDiagram) -> dict:
    return {c: Fraction(1) for c in D.corners}


def family_rays(lengths: Sequence[int], b: Sequence | None = None) -> tuple:
    lengths = list(lengths)
    if not lengths:
        raise DiagramError("need at least one ray")
    if any(d < 2 for d in lengths):
        raise DiagramError("ray lengths must be >= 2")
    if lengths != sorted(lengths, reverse=True):
        raise DiagramError("ray lengths must be non-increasing")
    k = len(lengths)
    corners = tuple(tuple(d if t == i else 0 for t in range(k)) for i, d in enumerate(lengths))
    D = YoungDiagram(k, corners)
    bs = [Fraction(1)] * k if b is None else [Fraction(x) for x in b]
    if len(bs) != k:
        raise DiagramError("need one b per ray")
    return D, dict(zip(corners, bs))


def rays_normal_oracle(lengths: Sequence[int]) -> bool:
    d1 = lengths[0]
    return d1 == 2 or (len(lengths) >= 2 and lengths[1] >= d1 - 1)


def family_parallelepiped(sides: Sequence[int]) -> tuple:
    sides = tuple(int(s) for s in sides)
    if not sides:
        raise DiagramError("need at least one side")
    if any(s < 1 for s in sides):
        raise DiagramError("sides must be >= 1")
    if sides == (1,):
        raise DiagramError("the 1-dimensional parallelepiped with d1 = 1 gives a point in P^1")
    D = YoungDiagram(len(sides), (sides,))
    return D, ones(D)


def parallelepiped_normal_oracle(sides: Sequence[int]) -> bool:
    return all(s <= 2 for s in sides)


def family_segment(n: int) -> HPair:
    """K[x]/(x^{n+1}) with U = <x, ..., x^{n-1}> and w = x^n."""
    if n < 2:
        raise DiagramError("segment needs n >= 2")
    D = YoungDiagram(1, ((n,),))
    return build_hpair(D, ones(D))


def family_simplex_from_polynomial(g: Poly) -> tuple:
    """(diagram, b, lambda_0) whose reduced H-pair has boundary proportional to g."""
    if g.is_zero():
        raise DiagramError("g must be nonzero")
    if not g.is_homogeneous():
        raise DiagramError("g must be homogeneous")
    d = g.degree()
    if d < 2:
        raise DiagramError("g must have degree >= 2")
    k = g.nvars
    lam0, a0 = g.leading()
    corners = [m for m in _compositions(d, k)]
    c0 = multinomial(lam0)
    b = {}
    for lam in corners:
        a = g.coeff(lam)
        b[lam] = a * c0 / (multinomial(lam) * a0)
    return YoungDiagram(k, tuple(corners)), b, lam0


def _compositions(d: int, k: int) -> list:
    if k == 1:
        return [(d,)]
    out = []
    for first in range(d, -1, -1):
        for rest in _compositions(d - first, k - 1):
            out.append((first,) + rest)
    return out


def enumerate_diagrams(k: int, max_cells: int) -> list:
    """All k-dimensional order ideals with at most ``max_cells`` cells that use every axis."""
    origin = (0,) * k
    start = frozenset([origin])
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for S in frontier:
            if len(S) == max_cells:
                continue
            for c in S:
                for i in range(k):
                    t = _plus(c, i)
                    if t in S:
                        continue
                    if all(t[j] == 0 or _minus(t, j) in S for j in range(k)):
                        T = S | {t}
                        if T not in seen:
                            seen.add(T)
                            nxt.append(T)
        frontier = nxt
    out = []
    for S in seen:
        if all(any(c[i] for c in S) for i in range(k)):
            out.append(YoungDiagram.from_cells(S))
    out.sort(key=lambda D: (len(cells(D)), [cell_key(c) for c in D.corners]))
    return out


def _minus(c: tuple, i: int) -> tuple:
    return c[:i] + (c[i] - 1,) + c[i + 1:]
