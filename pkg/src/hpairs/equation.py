"""The hypersurface of an H-pair: expand z0^d * pi(log(1 + z/z0)) inside the algebra.

Coordinates z0..zn are dual to the basis e_0..e_n.  With z = sum_i z_i e_i,

    f = sum_{k=1}^{d} (-1)^(k-1)/k * z0^(d-k) * pi(z^k),

where the powers z^k are expanded by iterated multiplication with
polynomial-valued coordinates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .algebra import HPair, degree, require_hpair
from .poly import Poly, ring_vars


@dataclass(frozen=True, eq=False)
class HypersurfaceReport:
    var_names: tuple
    d: int
    f: Poly
    layers: tuple  # layers[k-1] = f_k over var_names[1:]

    @property
    def boundary_vars(self) -> tuple:
        return self.var_names[1:]

    def layer(self, k: int) -> Poly:
        if not 1 <= k <= self.d:
            return Poly.zero(self.boundary_vars)
        return self.layers[k - 1]


def _pack_base(d: int) -> int:
    return d + 1


def _lcm(a: int, b: int) -> int:
    return a * b // math.gcd(a, b)


def ideal_powers_pi(H: HPair, d: int) -> list:
    """pi(z^k) for k = 1..d as polynomials over z1..zn."""
    A = H.algebra
    n = A.n
    pi = H.pi
    # integer structure constants on the maximal ideal: e_i e_j = (1/den) sum C e_l
    den = 1
    for (i, j), coords in A.products.items():
        if i and j:
            for c in coords.values():
                den = _lcm(den, c.denominator)
    rows = [[] for _ in range(n + 1)]
    for (i, j), coords in sorted(A.products.items()):
        if i and j:
            for l, c in sorted(coords.items()):
                if l:
                    rows[i].append((j, l, int(c * den)))
    base = _pack_base(d)
    step = [base ** (j - 1) for j in range(n + 1)]  # packed monomial z_j, j >= 1
    # current[l] = {packed monomial: int}; true coordinate = current / den^(k-1)
    current = [dict() for _ in range(n + 1)]
    for l in range(1, n + 1):
        current[l][step[l]] = 1
    out = []
    for k in range(1, d + 1):
        if k > 1:
            nxt = [dict() for _ in range(n + 1)]
            for i in range(1, n + 1):
                Pi = current[i]
                if not Pi or not rows[i]:
                    continue
                for j, l, C in rows[i]:
                    target = nxt[l]
                    sj = step[j]
                    for m, c in Pi.items():
                        key = m + sj
                        v = target.get(key, 0) + C * c
                        if v:
                            target[key] = v
                        else:
                            del target[key]
            current = nxt
        scale = Fraction(1, den ** (k - 1))
        acc: dict = {}
        for l in range(1, n + 1):
            p = pi[l]
            if not p or not current[l]:
                continue
            for m, c in current[l].items():
                v = acc.get(m, 0) + p * c
                if v:
                    acc[m] = v
                else:
                    del acc[m]
        out.append({m: c * scale for m, c in acc.items() if c})
    vars = ring_vars("z", n, start=1)
    return [Poly._raw(vars, {_unpack(m, base, n): c for m, c in t.items()}) for t in out]


def _unpack(m: int, base: int, n: int) -> tuple:
    exps = []
    for _ in range(n):
        m, r = divmod(m, base)
        exps.append(r)
    return tuple(exps)


def equation(H: HPair, *, validate: bool = True) -> HypersurfaceReport:
    if validate:
        require_hpair(H)
    d = degree(H)
    n = H.algebra.n
    names = ring_vars("z", n + 1)
    powers = ideal_powers_pi(H, d)
    layers = []
    f_terms = {}
    for k, p in enumerate(powers, start=1):
        fk = p.scale(Fraction((-1) ** (k - 1), k))
        layers.append(fk)
        for m, c in fk.terms.items():
            f_terms[(d - k,) + m] = c
    f = Poly._raw(names, f_terms)
    return HypersurfaceReport(names, d, f, tuple(layers))


def layers(report: HypersurfaceReport) -> list:
    return list(report.layers)


def boundary(report: HypersurfaceReport) -> Poly:
    return report.layer(report.d)


def reassemble(report: HypersurfaceReport) -> Poly:
    """sum_k z0^(d-k) f_k over z0..zn; equals report.f."""
    names = report.var_names
    total = Poly.zero(names)
    z0 = [0] * len(names)
    for k, fk in enumerate(report.layers, start=1):
        z0[0] = report.d - k
        total = total + fk.embed(names).shift(z0)
    return total
