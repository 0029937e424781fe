"""End-to-end analyses shared by the CLI, the corpora and the acceptance suite."""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import (
    HPair,
    Quotient,
    gorenstein_conditions,
    power_chain,
    reduce_hpair,
    reduction_ideal,
    require_hpair,
    socle,
)
from .equation import HypersurfaceReport, equation
from .geometry import essential_variable_count, is_normal
from .poly import Poly, render, ring_vars
from .young import DEFAULT_BUDGET, build_hpair, family_segment, family_simplex_from_polynomial


@dataclass(frozen=True, eq=False)
class AnalysisReport:
    source: dict
    dim: int
    d: int
    report: HypersurfaceReport
    normal: bool
    witness: Poly | None
    essential_count: int
    boundary_essential_count: int
    gorenstein: bool
    socle_dim: int
    dim_J: int
    reduced_dim: int
    cotangent_dim: int  # dim m/m^2

    @property
    def f(self) -> Poly:
        return self.report.f

    def to_json(self) -> dict:
        r = self.report
        return {
            "source": self.source,
            "dim": self.dim,
            "degree": self.d,
            "f": render(r.f.canonical()),
            "f_raw": render(r.f),
            "f_d": render(r.layer(self.d)),
            "f_d_minus_1": render(r.layer(self.d - 1)),
            "normal": self.normal,
            "witness": None if self.witness is None else render(self.witness),
            "essential_count": self.essential_count,
            "non_degenerate": self.essential_count == r.f.nvars,
            "boundary_essential_count": self.boundary_essential_count,
            "gorenstein": self.gorenstein,
            "socle_dim": self.socle_dim,
            "reduction": {"dim_J": self.dim_J, "reduced_dim": self.reduced_dim},
        }

    def to_text(self) -> str:
        j = self.to_json()
        lines = []
        if self.source:
            lines.append(f"source: {self.source.get('path', '-')} ({self.source.get('kind', '-')}, "
                         f"sha256 {self.source.get('sha256', '-')[:12]})")
        lines += [
            f"dim A: {j['dim']}",
            f"degree: {j['degree']}",
            f"equation: {j['f_raw']} = 0",
            f"f_d: {j['f_d']}",
            f"f_(d-1): {j['f_d_minus_1']}",
            f"normal: {'yes' if j['normal'] else 'no'}"
            + ("" if j["witness"] is None else f" (common factor {j['witness']})"),
            f"essential variables: {j['essential_count']} of {self.report.f.nvars}"
            + (" (non-degenerate)" if j["non_degenerate"] else " (projective cone)"),
            f"boundary essential variables: {j['boundary_essential_count']}",
            f"gorenstein: {'yes' if j['gorenstein'] else 'no'} (socle dim {j['socle_dim']})",
            f"reduction: dim J = {self.dim_J}, reduced dim = {self.reduced_dim}",
        ]
        return "\n".join(lines) + "\n"


def analyze(H: HPair, source: dict | None = None) -> AnalysisReport:
    """validate -> equation -> layers -> normality -> essential count -> reduction."""
    require_hpair(H)
    report = equation(H, validate=False)
    verdict = is_normal(report)
    J = reduction_ideal(H)
    soc = socle(H.algebra)
    chain = power_chain(H.algebra)
    m2 = chain[1].dim if len(chain) > 1 else 0
    return AnalysisReport(
        source=source or {},
        dim=H.dim,
        d=report.d,
        report=report,
        normal=bool(verdict.normal),
        witness=verdict.witness,
        essential_count=verdict.essential_count,
        boundary_essential_count=essential_variable_count(report.layer(report.d)),
        gorenstein=soc.dim == 1,
        socle_dim=soc.dim,
        dim_J=J.dim,
        reduced_dim=H.dim - J.dim,
        cotangent_dim=H.algebra.n - m2,
    )


def maxdeg(n: int) -> AnalysisReport:
    return analyze(family_segment(n))


@dataclass(frozen=True, eq=False)
class BoundaryPrescription:
    g: Poly
    diagram: object
    b: dict
    lam0: tuple
    original: HPair
    quotient: Quotient
    reduced: HypersurfaceReport
    boundary_pullback: Poly  # reduced boundary pulled back to the original coordinates
    literal: bool  # every x_i survived, so renaming alone recovers g
    matches: bool
    conditions: dict = field(default_factory=dict)

    @property
    def reduced_pair(self) -> HPair:
        return self.quotient.pair

    @property
    def n(self) -> int:
        return self.reduced_pair.algebra.n

    @property
    def boundary(self) -> Poly:
        return self.reduced.layer(self.reduced.d)

    @property
    def apex_dim(self) -> int:
        return self.n - essential_variable_count(self.boundary)


def pull_back(Q: Quotient, f: Poly, names: tuple) -> Poly:
    """f over quotient coordinates z1..zm, pulled back to original coordinates ``names`` (z1..zn)."""
    forms = []
    for row in Q.projection[1:]:
        terms = {}
        for c in range(1, len(row)):
            if row[c]:
                e = [0] * len(names)
                e[c - 1] = 1
                terms[tuple(e)] = row[c]
        forms.append(Poly(names, terms))
    return f.substitute_linear(names, forms)


def prescribe_boundary(g: Poly, budget: int = DEFAULT_BUDGET) -> BoundaryPrescription:
    """A non-degenerate hypersurface whose boundary is a cone over {g = 0}."""
    D, B, lam0 = family_simplex_from_polynomial(g)
    H = build_hpair(D, B, budget)
    Q = reduce_hpair(H)
    R = equation(Q.pair)
    names = ring_vars("z", H.algebra.n, start=1)
    target = g.rename(ring_vars("z", g.nvars, start=1)).embed(names).canonical()
    pulled = pull_back(Q, R.layer(R.d), names)
    k = g.nvars
    literal = all(i in Q.kept for i in range(1, k + 1))
    ok = R.d == g.degree() and pulled.canonical() == target
    if literal:
        # coordinate r of the quotient is dual to original basis index kept[r]
        kept_names = tuple(f"z{i}" for i in Q.kept[1:])
        renamed = R.layer(R.d).rename(kept_names).embed(names)
        ok = ok and renamed.canonical() == target
    return BoundaryPrescription(g, D, B, lam0, H, Q, R, pulled, literal, ok, gorenstein_conditions(Q.pair))


def segment_normality(n: int) -> bool:
    return bool(is_normal(equation(family_segment(n))).normal)


__all__ = [
    "AnalysisReport",
    "BoundaryPrescription",
    "analyze",
    "maxdeg",
    "prescribe_boundary",
    "pull_back",
    "segment_normality",
]
