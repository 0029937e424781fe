"""Exact linear algebra over Q on dense row lists of ``Fraction``.

Pivoting is deterministic: columns are scanned left to right and the first
row (top-down) with a nonzero entry in the column becomes the pivot row.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

Vector = tuple  # tuple[Fraction, ...]
Matrix = list  # list[list[Fraction]]


def as_vector(v: Sequence) -> Vector:
    if type(v) is tuple and all(type(x) is Fraction for x in v):
        return v
    return tuple(Fraction(x) for x in v)


def zero_vector(n: int) -> Vector:
    return (Fraction(0),) * n


def unit_vector(n: int, i: int) -> Vector:
    return tuple(Fraction(1 if j == i else 0) for j in range(n))


def rref(rows: Sequence[Sequence], ncols: int | None = None) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    m = [[Fraction(x) for x in r] for r in rows]
    if ncols is None:
        ncols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(ncols):
        if r == len(m):
            break
        p = next((i for i in range(r, len(m)) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        pr = m[r]
        inv = 1 / pr[c]
        if inv != 1:
            pr = m[r] = [x * inv for x in pr]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                row = m[i]
                m[i] = [a - f * b if b else a for a, b in zip(row, pr)]
        pivots.append(c)
        r += 1
    return m[:r], pivots


def rank(M: Sequence[Sequence]) -> int:
    if not M:
        return 0
    return len(rref(M)[1])


def nullspace(M: Sequence, ncols: int | None = None) -> "Subspace":
    """Right kernel of M, rows given dense or as sparse dicts {col: value}.

    ``ncols`` is required when M has no rows or its rows are sparse.
    """
    if ncols is None:
        if not M or isinstance(M[0], dict):
            raise ValueError("ncols required for a matrix without rows")
        ncols = len(M[0])
    echelon = _Echelon(ncols)
    for r in M:
        echelon.add_sparse({c: Fraction(x) for c, x in r.items() if x} if isinstance(r, dict) else sparse(r))
    reduced = echelon.reduced_rows()
    basis = []
    for free in range(ncols):
        if free in reduced:
            continue
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for pc, row in reduced.items():
            x = row.get(free)
            if x:
                v[pc] = -x
        basis.append(tuple(v))
    return Subspace(ncols, tuple(basis))


def solve(M: Sequence[Sequence], b: Sequence) -> Vector | None:
    """One solution x of M x = b, or None if inconsistent."""
    ncols = len(M[0]) if M else 0
    aug = [list(r) + [Fraction(bi)] for r, bi in zip(M, b)]
    R, pivots = rref(aug, ncols + 1)
    if pivots and pivots[-1] == ncols:
        return None
    x = [Fraction(0)] * ncols
    for row, pc in zip(R, pivots):
        x[pc] = row[ncols]
    return tuple(x)


@dataclass(frozen=True)
class Subspace:
    """Span of linearly independent coordinate vectors in Q^ambient_dim."""

    ambient_dim: int
    basis: tuple

    def __post_init__(self):
        for v in self.basis:
            if len(v) != self.ambient_dim:
                raise ValueError("basis vector has wrong length")

    @classmethod
    def span(cls, vectors: Sequence[Sequence], ambient_dim: int) -> "Subspace":
        """Greedy independent subset of ``vectors`` (order preserved)."""
        chosen: list[Vector] = []
        echelon = _Echelon(ambient_dim)
        for v in vectors:
            v = as_vector(v)
            if len(v) != ambient_dim:
                raise ValueError("vector has wrong length")
            if echelon.add(v):
                chosen.append(v)
        return cls(ambient_dim, tuple(chosen))

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls(n, ())

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls(n, tuple(unit_vector(n, i) for i in range(n)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, v: Sequence) -> bool:
        return span_contains(self, v)

    def contains_subspace(self, other: "Subspace") -> bool:
        if other.ambient_dim != self.ambient_dim:
            raise ValueError("ambient dimension mismatch")
        echelon = _Echelon(self.ambient_dim)
        for b in self.basis:
            echelon.add(b)
        return all(not echelon.reduce_sparse(sparse(v)) for v in other.basis)

    def same_span(self, other: "Subspace") -> bool:
        return self.dim == other.dim and self.contains_subspace(other)

    def sum(self, other: "Subspace") -> "Subspace":
        return Subspace.span(list(self.basis) + list(other.basis), self.ambient_dim)

    def intersection_dim(self, other: "Subspace") -> int:
        return self.dim + other.dim - self.sum(other).dim

    def canonical_basis(self) -> tuple:
        """RREF basis; equal subspaces give equal results."""
        if not self.basis:
            return ()
        return tuple(tuple(r) for r in rref(self.basis, self.ambient_dim)[0])


class _Echelon:
    """Incremental sparse echelon form used for independence tests.

    Rows are dicts {column: value} normalised to 1 at their pivot, with all
    other entries to the right of the pivot.
    """

    def __init__(self, n: int):
        self.n = n
        self.rows: dict[int, dict] = {}
        self._order: list[int] = []

    def __len__(self) -> int:
        return len(self.rows)

    def reduce_sparse(self, v: dict) -> dict:
        v = dict(v)
        if not v:
            return v
        for c in self._order:
            f = v.get(c)
            if f:
                for col, x in self.rows[c].items():
                    y = v.get(col, 0) - f * x
                    if y:
                        v[col] = y
                    else:
                        v.pop(col, None)
                if not v:
                    break
        return v

    def add_sparse(self, v: dict) -> bool:
        v = self.reduce_sparse(v)
        if not v:
            return False
        c = min(v)
        inv = 1 / Fraction(v[c])
        self.rows[c] = {col: x * inv for col, x in v.items()}
        bisect.insort(self._order, c)
        return True

    def reduced_rows(self) -> dict:
        """Fully reduced rows {pivot: row}, i.e. the nonzero rows of the RREF."""
        rows = {c: dict(r) for c, r in self.rows.items()}
        for p in reversed(self._order):
            prow = rows[p]
            for c in self._order:
                if c >= p:
                    break
                row = rows[c]
                f = row.get(p)
                if f:
                    for col, x in prow.items():
                        y = row.get(col, 0) - f * x
                        if y:
                            row[col] = y
                        else:
                            row.pop(col, None)
        return rows

    def reduce(self, v: Sequence) -> list[Fraction]:
        r = self.reduce_sparse(sparse(v))
        out = [Fraction(0)] * self.n
        for c, x in r.items():
            out[c] = x
        return out

    def add(self, v: Sequence) -> bool:
        return self.add_sparse(sparse(v))


def sparse(v: Sequence) -> dict:
    return {i: Fraction(x) for i, x in enumerate(v) if x}


def dense(v: dict, n: int) -> Vector:
    out = [Fraction(0)] * n
    for i, x in v.items():
        out[i] = Fraction(x)
    return tuple(out)


def span_contains(S: Subspace, v: Sequence) -> bool:
    if len(v) != S.ambient_dim:
        raise ValueError(f"dimension mismatch: {len(v)} vs {S.ambient_dim}")
    if not any(v):
        return True
    if not S.basis:
        return False
    echelon = _Echelon(S.ambient_dim)
    for b in S.basis:
        echelon.add(b)
    return not echelon.reduce_sparse(sparse(v))


def complement_basis(S: Subspace, within: Subspace) -> Subspace:
    """A subspace C with within = S (+) C.

    Candidates are the standard basis vectors that lie in ``within`` (in index
    order), then the basis vectors of ``within``; each is kept when it enlarges
    the running span.
    """
    if S.ambient_dim != within.ambient_dim:
        raise ValueError("ambient dimension mismatch")
    if not within.contains_subspace(S):
        raise ValueError("S is not contained in within")
    n = S.ambient_dim
    echelon = _Echelon(n)
    for v in S.basis:
        echelon.add(v)
    chosen = []
    target = within.dim - S.dim
    inside = _Echelon(n)
    for v in within.basis:
        inside.add(v)
    candidates = [unit_vector(n, i) for i in range(n)]
    if within.dim < n:
        candidates = [e for e in candidates if not inside.reduce_sparse(sparse(e))]
    candidates += list(within.basis)
    for e in candidates:
        if len(chosen) == target:
            break
        if echelon.add(e):
            chosen.append(as_vector(e))
    return Subspace(n, tuple(chosen))
