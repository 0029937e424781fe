"""Normality, essential variables and cone structure of hypersurface equations."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .equation import HypersurfaceReport
from .poly import Poly, derivative, gcd, grlex_key, squarefree_quotient

# 2^61 - 1
_PRIME = 2305843009213693951


@dataclass(frozen=True)
class GeometryVerdict:
    normal: bool | None
    essential_count: int
    witness: Poly | None
    cone_apex_dim: int


def is_normal(report: HypersurfaceReport) -> GeometryVerdict:
    """X is normal iff the square-free quotient of f_d is coprime to f_{d-1}."""
    d = report.d
    if d < 2:
        raise ValueError(f"normality criterion needs degree >= 2, got {d}")
    fd = report.layer(d)
    fd1 = report.layer(d - 1)
    reduced = squarefree_quotient(fd)
    if reduced.is_constant():
        common = reduced
    elif fd1.is_zero():
        common = reduced.canonical()
    else:
        common = gcd(reduced, fd1)
    normal = common.is_constant()
    e = essential_variable_count(report.f)
    return GeometryVerdict(normal, e, None if normal else common, report.f.nvars - e)


def cone_report(f: Poly) -> GeometryVerdict:
    e = essential_variable_count(f)
    return GeometryVerdict(None, e, None, f.nvars - e)


def essential_variable_count(f: Poly) -> int:
    """Least number of variables f can be written in after a linear change.

    Equals the rank of the span of the first partial derivatives.  A cheap
    lower bound (rank mod p of the Hessian at a point) settles the common
    full-rank case; otherwise the partials are eliminated exactly.
    """
    if f.is_zero():
        raise ValueError("essential_variable_count of the zero polynomial")
    occ = f.occurring()
    if not occ:
        return 0
    if f.degree() >= 2 and _hessian_rank_lower_bound(f, occ) == len(occ):
        return len(occ)
    return partials_rank(f)


def partials_rank(f: Poly) -> int:
    """Exact rank of {df/dz_i} as coefficient vectors over Q."""
    pivots: dict = {}  # leading monomial -> (lc, row dict)
    r = 0
    for i in f.occurring():
        row = dict(derivative(f, i).terms)
        while row:
            lm = max(row, key=grlex_key)
            if lm not in pivots:
                pivots[lm] = row
                r += 1
                break
            prow = pivots[lm]
            factor = row[lm] / prow[lm]
            for m, c in prow.items():
                v = row.get(m, 0) - factor * c
                if v:
                    row[m] = v
                else:
                    row.pop(m, None)
    return r


def _integer_terms(f: Poly) -> list:
    den = 1
    for c in f.terms.values():
        den = den * c.denominator // math.gcd(den, c.denominator)
    return [(m, int(c * den)) for m, c in f.terms.items()]


def _hessian_mod_p(terms: list, occ: tuple, point: dict) -> list:
    pos = {v: a for a, v in enumerate(occ)}
    size = len(occ)
    H = [[0] * size for _ in range(size)]
    p = _PRIME
    for m, c in terms:
        support = [i for i, e in enumerate(m) if e]
        # a term vanishes at the point unless all but two exponents sit on nonzero coordinates
        zeros = [i for i in support if i not in point]
        if sum(m[i] for i in zeros) > 2:
            continue
        for x in range(len(support)):
            i = support[x]
            for y in range(x, len(support)):
                j = support[y]
                ex = list(m)
                coef = c * ex[i]
                ex[i] -= 1
                coef *= ex[j]
                ex[j] -= 1
                if not coef:
                    continue
                val = coef % p
                ok = True
                for t, e in enumerate(ex):
                    if e:
                        pt = point.get(t)
                        if pt is None:
                            ok = False
                            break
                        val = val * pow(pt, e, p) % p
                if not ok or not val:
                    continue
                a, b = pos[i], pos[j]
                H[a][b] = (H[a][b] + val) % p
                if a != b:
                    H[b][a] = (H[b][a] + val) % p
    return H


def _rank_mod_p(M: list) -> int:
    p = _PRIME
    m = [row[:] for row in M]
    r = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], p - 2, p)
        pr = [x * inv % p for x in m[r]]
        m[r] = pr
        for i in range(r + 1, len(m)):
            f = m[i][c]
            if f:
                m[i] = [(a - f * b) % p for a, b in zip(m[i], pr)]
        r += 1
    return r


def _hessian_rank_lower_bound(f: Poly, occ: tuple) -> int:
    # rank(Hess f(x)) <= essential count at every point x, and rank mod p <= rank over Q
    terms = _integer_terms(f)
    best = 0
    points = [
        {occ[0]: 1},
        {v: 1 for v in occ},
        {v: (3 * k + 2) % 97 + 1 for k, v in enumerate(occ)},
    ]
    for point in points:
        r = _rank_mod_p(_hessian_mod_p(terms, occ, point))
        best = max(best, r)
        if best == len(occ):
            break
    return best
