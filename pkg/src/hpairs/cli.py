"""Command-line interface.

Exit codes: 0 success, 1 I/O or parse error, 2 semantic validation failure
(including a failing corpus).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import io
from .algebra import AlgebraError
from .corpus import CORPORA
from .linalg import nullspace, rank
from .pipeline import analyze, maxdeg, prescribe_boundary
from .poly import Poly, PolySyntaxError, render
from .young import (
    DEFAULT_BUDGET,
    DiagramError,
    ExceptionalDiagram,
    build_hpair,
    cells,
    closed_form_layers,
    exceptional_coords,
    gorenstein_system,
    precorners,
)

EXIT_OK, EXIT_IO, EXIT_SEMANTIC = 0, 1, 2


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _read(path: str) -> tuple[str, bytes]:
    try:
        data = Path(path).read_bytes()
    except OSError as e:
        raise CliError(f"cannot read {path}: {e.strerror}", EXIT_IO) from None
    try:
        return data.decode("utf-8"), data
    except UnicodeDecodeError:
        raise CliError(f"{path} is not UTF-8 text", EXIT_IO) from None


def _emit(args, text: str) -> None:
    if getattr(args, "out", None):
        try:
            Path(args.out).write_text(text)
        except OSError as e:
            raise CliError(f"cannot write {args.out}: {e.strerror}", EXIT_IO) from None
    else:
        sys.stdout.write(text)


def _source(path: str, data: bytes, kind: str) -> dict:
    s = io.source_of(path, data, kind)
    return {"path": s.path, "sha256": s.sha256, "kind": s.kind}


def cmd_analyze(args) -> int:
    text, data = _read(args.file)
    H = io.parse_hpair(text)
    rep = analyze(H, _source(args.file, data, "hpair"))
    _emit(args, io.dumps(rep.to_json()) if args.format == "json" else rep.to_text())
    return EXIT_OK


def _young_info(D, B, budget: int) -> dict:
    cs = cells(D, budget)
    exc = exceptional_coords(D)
    info = {
        "k": D.k,
        "cells": len(cs),
        "corners": [list(c) for c in D.corners],
        "precorners": [list(c) for c in precorners(D, budget)],
        "exceptional_coords": exc,
    }
    if exc:
        info["hint"] = str(ExceptionalDiagram(exc))
        return info
    M = gorenstein_system(D, B, budget)
    ncols = len(info["precorners"])
    r = rank(M) if ncols else 0
    ker = nullspace(M, ncols)
    d, fd, fd1 = closed_form_layers(D, B, budget)
    info.update({
        "system_rank": r,
        "system_nullity": ker.dim,
        "system_kernel": [[io.fmt_q(x) for x in v] for v in ker.basis],
        "gorenstein": ker.dim == 0,
        "degree": d,
        "f_d": render(fd),
        "f_d_minus_1": render(fd1),
    })
    return info


def _info_text(info: dict) -> str:
    lines = [f"k: {info['k']}", f"cells: {info['cells']}", f"corners: {info['corners']}",
             f"precorners: {info['precorners']}", f"exceptional coordinates: {info['exceptional_coords']}"]
    if "hint" in info:
        lines.append(info["hint"])
    else:
        lines += [f"gorenstein system: rank {info['system_rank']}, nullity {info['system_nullity']}",
                  f"gorenstein: {'yes' if info['gorenstein'] else 'no'}",
                  f"degree: {info['degree']}",
                  f"f_d: {info['f_d']}",
                  f"f_(d-1): {info['f_d_minus_1']}"]
    return "\n".join(lines) + "\n"


def cmd_young(args) -> int:
    text, _ = _read(args.file)
    D, B = io.parse_diagram(text)
    if args.action == "info":
        info = _young_info(D, B, args.budget)
        _emit(args, io.dumps(info) if args.format == "json" else _info_text(info))
        return EXIT_OK
    H = build_hpair(D, B, args.budget)
    _emit(args, io.dumps(io.hpair_to_json(H)))
    return EXIT_OK


def _homogeneous_input(g: Poly) -> None:
    if g.is_zero():
        raise CliError("the polynomial is zero", EXIT_SEMANTIC)
    if not g.is_homogeneous():
        raise CliError("the polynomial is not homogeneous", EXIT_SEMANTIC)
    if g.degree() < 2:
        raise CliError("the polynomial must have degree >= 2", EXIT_SEMANTIC)


def cmd_prescribe_boundary(args) -> int:
    text, _ = _read(args.file)
    g = io.parse_polynomial(text)
    _homogeneous_input(g)
    P = prescribe_boundary(g, args.budget)
    note = {
        "input": render(g),
        "lambda0": list(P.lam0),
        "n": P.n,
        "apex_dim": P.apex_dim,
        "boundary": render(P.boundary),
        "boundary_matches_input": P.matches,
        "comparison": "renaming" if P.literal else "pullback",
        "nondegeneracy_conditions": P.conditions,
    }
    hp = io.dumps(io.hpair_to_json(P.reduced_pair))
    if args.out:
        _emit(args, hp)
    if args.format == "json":
        doc = {"verification": note} if args.out else {"hpair": io.hpair_to_json(P.reduced_pair),
                                                        "verification": note}
        sys.stdout.write(io.dumps(doc))
    else:
        lines = [f"input: {note['input']}",
                 f"reduced H-pair: n = {P.n} (dim {P.n + 1}), boundary apex dim {P.apex_dim}",
                 f"boundary: {note['boundary']}",
                 f"boundary proportional to input: {'yes' if P.matches else 'NO'} ({note['comparison']})",
                 f"H-pair written to {args.out}" if args.out else hp.rstrip()]
        sys.stdout.write("\n".join(lines) + "\n")
    return EXIT_OK if P.matches else EXIT_SEMANTIC


def cmd_maxdeg(args) -> int:
    if args.n < 2:
        raise CliError("n must be >= 2", EXIT_SEMANTIC)
    rep = maxdeg(args.n)
    if args.format == "json":
        doc = {"n": args.n, "equation": render(rep.f), "normal": rep.normal}
        _emit(args, io.dumps(doc))
    else:
        _emit(args, f"{render(rep.f)}\nnormal: {'yes' if rep.normal else 'no'}\n")
    return EXIT_OK


def cmd_corpus(args) -> int:
    results = CORPORA[args.name]()
    failed = [r for r in results if not r.ok]
    if args.format == "json":
        doc = {"corpus": args.name, "passed": len(results) - len(failed), "total": len(results),
               "cases": [{"suite": r.suite, "name": r.name, "ok": r.ok, "detail": r.detail} for r in results]}
        _emit(args, io.dumps(doc))
    else:
        lines = [f"{'PASS' if r.ok else 'FAIL'} {r.suite} {r.name}: {r.detail}" for r in results]
        lines.append(f"{args.name}: {len(results) - len(failed)}/{len(results)} passed")
        _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK if not failed else EXIT_SEMANTIC


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json"], default="text")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="diagram cell cap")
    common.add_argument("--out", help="write the main output to this path")

    p = argparse.ArgumentParser(prog="hpairs", description="Hypersurfaces with additive actions from H-pairs.")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", parents=[common], help="analyze an H-pair file")
    a.add_argument("file")
    a.set_defaults(func=cmd_analyze)

    y = sub.add_parser("young", parents=[common], help="Young diagram tools")
    y.add_argument("action", choices=["info", "build"])
    y.add_argument("file")
    y.set_defaults(func=cmd_young)

    b = sub.add_parser("prescribe-boundary", parents=[common],
                       help="build a non-degenerate hypersurface with a prescribed boundary")
    b.add_argument("file")
    b.set_defaults(func=cmd_prescribe_boundary)

    m = sub.add_parser("maxdeg", parents=[common], help="the degree-n hypersurface in P^n")
    m.add_argument("n", type=int)
    m.set_defaults(func=cmd_maxdeg)

    c = sub.add_parser("corpus", parents=[common], help="run a shipped regression corpus")
    c.add_argument("name", choices=sorted(CORPORA))
    c.set_defaults(func=cmd_corpus)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as e:
        print(f"error: {e}", file=sys.stderr)
        return e.code
    except (io.FormatError, PolySyntaxError, json.JSONDecodeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_IO
    except AlgebraError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_SEMANTIC
    except DiagramError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_SEMANTIC


if __name__ == "__main__":
    raise SystemExit(main())
