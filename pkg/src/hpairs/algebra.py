"""Finite-dimensional local algebras given by structure constants, and H-pairs.

Basis discipline: ``e_0`` is the unit and the maximal ideal is spanned by
``e_1 .. e_n``.  Vectors are tuples of ``Fraction`` in these coordinates.
An H-pair stores its hyperplane ``U`` and the complement witness ``w`` in
full algebra coordinates (entry 0 is always zero).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Mapping, Sequence

from .linalg import (
    Subspace,
    Vector,
    _Echelon,
    as_vector,
    complement_basis,
    dense,
    nullspace,
    rref,
    sparse,
    unit_vector,
)


class AlgebraError(ValueError):
    def __init__(self, message: str, problems: Sequence["Problem"] = ()):
        super().__init__(message)
        self.problems = list(problems)


@dataclass(frozen=True)
class Problem:
    kind: str
    witness: tuple
    message: str

    def __str__(self) -> str:
        return f"{self.kind}: {self.message} (witness {self.witness})"


@dataclass
class ValidationReport:
    problems: list = field(default_factory=list)
    nilpotency_index: int | None = None

    @property
    def ok(self) -> bool:
        return not self.problems

    def kinds(self) -> set:
        return {p.kind for p in self.problems}

    def raise_if_invalid(self, what: str = "algebra") -> None:
        if self.problems:
            raise AlgebraError(f"invalid {what}: " + "; ".join(map(str, self.problems)), self.problems)


@dataclass(frozen=True, eq=False)
class FiniteLocalAlgebra:
    """Commutative unital algebra with basis ``labels``.

    ``products`` maps an ordered basis pair (i, j) to the sparse coordinate
    dict {k: c} of e_i * e_j.  Missing pairs multiply to zero.  Use
    :meth:`build` for the usual symmetric, unit-completed input.
    """

    labels: tuple
    products: Mapping

    @classmethod
    def build(cls, labels: Sequence[str], products: Mapping, *, symmetric: bool = True,
              add_unit: bool = True) -> "FiniteLocalAlgebra":
        n1 = len(labels)
        table: dict = {}
        for (i, j), vec in products.items():
            coords = {int(k): Fraction(c) for k, c in dict(vec).items() if Fraction(c)}
            if not coords:
                continue
            for k in coords:
                if not 0 <= k < n1:
                    raise IndexError(f"basis index {k} out of range")
            table[(i, j)] = coords
            if symmetric and (j, i) not in products:
                table[(j, i)] = coords
        if add_unit:
            for i in range(n1):
                table.setdefault((0, i), {i: Fraction(1)})
                table.setdefault((i, 0), {i: Fraction(1)})
        return cls(tuple(labels), table)

    @property
    def dim(self) -> int:
        return len(self.labels)

    @property
    def n(self) -> int:
        """Dimension of the maximal ideal."""
        return len(self.labels) - 1

    def product(self, i: int, j: int) -> Vector:
        out = [Fraction(0)] * self.dim
        for k, c in self.products.get((i, j), {}).items():
            out[k] = c
        return tuple(out)

    @cached_property
    def _rows(self) -> list:
        # rows[i] = [(j, k, c), ...] for nonzero c in e_i * e_j
        rows = [[] for _ in range(self.dim)]
        for (i, j), coords in sorted(self.products.items()):
            for k, c in sorted(coords.items()):
                rows[i].append((j, k, c))
        return rows

    def mul(self, u: Sequence, v: Sequence) -> Vector:
        out = [Fraction(0)] * self.dim
        for i, ui in enumerate(u):
            if not ui:
                continue
            for j, k, c in self._rows[i]:
                vj = v[j]
                if vj:
                    out[k] += ui * vj * c
        return tuple(out)

    def mul_sparse(self, u: Mapping, v: Mapping) -> dict:
        """Product of sparse coordinate dicts."""
        out: dict = {}
        for i, ui in u.items():
            for j, vj in v.items():
                coords = self.products.get((i, j))
                if coords:
                    f = ui * vj
                    for k, c in coords.items():
                        out[k] = out.get(k, 0) + f * c
        return {k: c for k, c in out.items() if c}

    def basis_vector(self, i: int) -> Vector:
        return unit_vector(self.dim, i)

    def maximal_ideal(self) -> Subspace:
        return Subspace(self.dim, tuple(unit_vector(self.dim, i) for i in range(1, self.dim)))

    def multiplication_rows(self, j: int) -> list:
        """Matrix of a -> a * e_j as a list of rows (output coordinate x input coordinate)."""
        M = [[Fraction(0)] * self.dim for _ in range(self.dim)]
        for (a, b), coords in self.products.items():
            if b == j:
                for k, c in coords.items():
                    M[k][a] = c
        return M

    def label_of(self, v: Sequence) -> str:
        parts = []
        for lab, c in zip(self.labels, v):
            if c:
                parts.append(f"{c}*{lab}" if c != 1 else lab)
        return " + ".join(parts) or "0"


def validate_algebra(A: FiniteLocalAlgebra, *, check_associativity: bool = True) -> ValidationReport:
    report = ValidationReport()
    n1 = A.dim
    if n1 == 0:
        report.problems.append(Problem("empty", (), "algebra has no basis"))
        return report
    if A.labels[0] != "1":
        report.problems.append(Problem("labels", (0,), f"basis[0] must be labelled '1', got {A.labels[0]!r}"))
    for i in range(n1):
        e = A.basis_vector(i)
        if A.product(0, i) != e or A.product(i, 0) != e:
            report.problems.append(Problem("unit", (0, i), f"e_0 * e_{i} != e_{i}"))
            break
    done = False
    for i in range(n1):
        for j in range(i + 1, n1):
            if A.product(i, j) != A.product(j, i):
                report.problems.append(Problem("commutativity", (i, j), f"e_{i}*e_{j} != e_{j}*e_{i}"))
                done = True
                break
        if done:
            break
    bad_ideal = next(((i, j) for i in range(1, n1) for j in range(1, n1)
                      if A.products.get((i, j), {}).get(0)), None)
    if bad_ideal:
        i, j = bad_ideal
        report.problems.append(Problem("ideal", bad_ideal, f"e_{i}*e_{j} has a unit component"))
    if check_associativity:
        products = {(i, j): A.product(i, j) for i in range(n1) for j in range(n1)}
        found = False
        for i in range(1, n1):
            for j in range(1, n1):
                ij = products[(i, j)]
                for k in range(1, n1):
                    if A.mul(ij, A.basis_vector(k)) != A.mul(A.basis_vector(i), products[(j, k)]):
                        report.problems.append(
                            Problem("associativity", (i, j, k), f"(e_{i}e_{j})e_{k} != e_{i}(e_{j}e_{k})"))
                        found = True
                        break
                if found:
                    break
            if found:
                break
    chain = power_chain(A)
    if chain[-1].dim:
        report.problems.append(
            Problem("nilpotency", (chain[-1].dim,), "powers of the maximal ideal stabilise at a nonzero subspace"))
    else:
        report.nilpotency_index = len(chain)
    return report


def power_chain(A: FiniteLocalAlgebra) -> list:
    """[m, m^2, ..., 0]; stops early if the chain stabilises above 0."""
    m = A.maximal_ideal()
    chain = [m]
    gens = [{i: Fraction(1)} for i in range(1, A.dim)]
    current = [{i: Fraction(1)} for i in range(1, A.dim)]
    while current:
        echelon = _Echelon(A.dim)
        chosen = []
        for b in current:
            for g in gens:
                p = A.mul_sparse(b, g)
                if p and echelon.add_sparse(p):
                    chosen.append(p)
        chain.append(Subspace(A.dim, tuple(dense(v, A.dim) for v in chosen)))
        if len(chosen) == len(current):
            break
        current = chosen
    return chain


def socle(A: FiniteLocalAlgebra) -> Subspace:
    """Nullspace of the stacked maps a -> a * e_i, i >= 1."""
    rows: dict = {}
    for (a, i), coords in A.products.items():
        if i:
            for k, c in coords.items():
                rows.setdefault((i, k), {})[a] = c
    return nullspace([rows[key] for key in sorted(rows)], A.dim)


def is_gorenstein(A: FiniteLocalAlgebra) -> bool:
    return socle(A).dim == 1


@dataclass(frozen=True, eq=False)
class HPair:
    algebra: FiniteLocalAlgebra
    U: Subspace
    w: Vector

    @classmethod
    def from_ideal_coords(cls, algebra: FiniteLocalAlgebra, U_rows: Sequence[Sequence],
                          w: Sequence) -> "HPair":
        """Build from coordinates over the maximal-ideal basis e_1..e_n."""
        pad = lambda v: (Fraction(0),) + as_vector(v)
        for v in list(U_rows) + [w]:
            if len(v) != algebra.n:
                raise AlgebraError(f"coordinate vector of length {len(v)}, expected {algebra.n}")
        return cls(algebra, Subspace.span([pad(r) for r in U_rows], algebra.dim), pad(w))

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @cached_property
    def pi(self) -> Vector:
        """Covector vanishing on U and e_0 with pi(w) = 1."""
        rows = [sparse(u) for u in self.U.basis] + [{0: Fraction(1)}]
        ker = nullspace(rows, self.dim)
        for p in ker.basis:
            val = sum(a * b for a, b in zip(p, self.w))
            if val:
                return tuple(x / val for x in p)
        raise AlgebraError("w lies in U: no projection with pi(w) = 1")

    def in_U(self, v: Sequence) -> bool:
        return self.U.contains(v)


def validate_hpair(H: HPair) -> ValidationReport:
    A = H.algebra
    report = ValidationReport()
    n = A.n
    if n == 0:
        report.problems.append(Problem("no hyperplane", (), "maximal ideal is zero; no hyperplane exists"))
        return report
    for idx, u in enumerate(H.U.basis):
        if u[0]:
            report.problems.append(Problem("U not inside m", (idx,), f"U basis vector {idx} has a unit component"))
            return report
    if H.U.dim != n - 1:
        report.problems.append(Problem("U wrong dimension", (H.U.dim,), f"dim U = {H.U.dim}, expected {n - 1}"))
    if H.w[0]:
        report.problems.append(Problem("w not inside m", (), "w has a unit component"))
    elif H.U.contains(H.w):
        report.problems.append(Problem("w lies in U", (), "w lies in U"))
    gen = generated_subalgebra(A, H.U)
    if gen.dim < A.dim:
        missing = next(i for i in range(A.dim) if not gen.contains(A.basis_vector(i)))
        report.problems.append(
            Problem("U does not generate", (gen.dim, missing),
                    f"U generates a subalgebra of dimension {gen.dim} < {A.dim}; e_{missing} is missing"))
    return report


def generated_subalgebra(A: FiniteLocalAlgebra, U: Subspace) -> Subspace:
    """span(1, U, U^2, ...)"""
    echelon = _Echelon(A.dim)
    gens = [sparse(u) for u in U.basis]
    chosen = []
    queue = []
    for v in [{0: Fraction(1)}] + gens:
        if echelon.add_sparse(v):
            chosen.append(v)
            queue.append(v)
    while queue and len(chosen) < A.dim:
        s = queue.pop()
        for g in gens:
            p = A.mul_sparse(s, g)
            if p and echelon.add_sparse(p):
                chosen.append(p)
                queue.append(p)
    return Subspace(A.dim, tuple(dense(v, A.dim) for v in chosen))


def require_hpair(H: HPair) -> None:
    validate_hpair(H).raise_if_invalid("H-pair")


def degree(H: HPair) -> int:
    """Greatest d with m^d not contained in U."""
    d = 0
    for k, P in enumerate(power_chain(H.algebra), start=1):
        if P.dim and not H.U.contains_subspace(P):
            d = k
    return d


def reduction_ideal(H: HPair) -> Subspace:
    """J = {a : a*A inside U}, the largest ideal of A contained in U."""
    A = H.algebra
    pi = H.pi
    # a*e_j lies in U iff its unit coordinate and its pi-value vanish
    rows: dict = {}
    for (a, j), coords in A.products.items():
        u = coords.get(0)
        if u:
            rows.setdefault((j, 0), {})[a] = u
        val = sum(pi[k] * c for k, c in coords.items() if pi[k])
        if val:
            rows.setdefault((j, 1), {})[a] = val
    return nullspace([rows[key] for key in sorted(rows)], A.dim)


def is_ideal(A: FiniteLocalAlgebra, J: Subspace) -> bool:
    return all(J.contains(A.mul(b, A.basis_vector(j))) for b in J.basis for j in range(A.dim))


@dataclass(frozen=True, eq=False)
class Quotient:
    """Result of reducing an H-pair by an ideal inside U.

    ``kept`` lists the original basis indices that form the quotient basis and
    ``projection[r][c]`` is the coordinate r of the image of original e_c.
    """

    pair: HPair
    kept: tuple
    projection: tuple

    def image(self, v: Sequence) -> Vector:
        return tuple(sum(p * x for p, x in zip(row, v) if x) for row in self.projection)


def quotient(H: HPair, J: Subspace) -> Quotient:
    A = H.algebra
    if not H.U.contains_subspace(J):
        raise AlgebraError("J is not contained in U")
    if not is_ideal(A, J):
        raise AlgebraError("J is not an ideal")
    if not J.dim:
        ident = tuple(unit_vector(A.dim, i) for i in range(A.dim))
        return Quotient(H, tuple(range(A.dim)), ident)
    C = complement_basis(J, Subspace.full(A.dim))
    kept = tuple(next(i for i, x in enumerate(v) if x) for v in C.basis)
    m = len(kept)
    # columns: kept unit vectors then J basis; invert to read off quotient coordinates
    cols = [A.basis_vector(i) for i in kept] + list(J.basis)
    B = [[cols[c][r] for c in range(A.dim)] for r in range(A.dim)]
    aug = [row + list(unit_vector(A.dim, r)) for r, row in enumerate(B)]
    R, piv = rref(aug, 2 * A.dim)
    inv = [row[A.dim:] for row in R]
    projection = tuple(tuple(inv[r]) for r in range(m))

    def image(v):
        return tuple(sum(p * x for p, x in zip(row, v) if x) for row in projection)

    products = {}
    for a, ia in enumerate(kept):
        for b, ib in enumerate(kept):
            vec = image(A.product(ia, ib))
            coords = {k: c for k, c in enumerate(vec) if c}
            if coords:
                products[(a, b)] = coords
    QA = FiniteLocalAlgebra(tuple(A.labels[i] for i in kept), products)
    QU = Subspace.span([image(u) for u in H.U.basis], m)
    pair = HPair(QA, QU, image(H.w))
    return Quotient(pair, kept, projection)


def quotient_hpair(H: HPair, J: Subspace) -> HPair:
    return quotient(H, J).pair


def reduce_hpair(H: HPair) -> Quotient:
    """Quotient by the maximal ideal contained in U."""
    return quotient(H, reduction_ideal(H))


def gorenstein_conditions(H: HPair) -> dict:
    """The three conditions characterising non-degenerate hypersurfaces."""
    A = H.algebra
    d = degree(H)
    chain = power_chain(A)
    md = chain[d - 1] if d >= 1 else Subspace.zero(A.dim)
    soc = socle(A)
    m = A.maximal_ideal()
    return {
        "gorenstein": soc.dim == 1,
        "socle_is_md": soc.same_span(md),
        "m_is_U_plus_md": H.U.dim + md.dim == m.dim and H.U.sum(md).dim == m.dim,
    }
