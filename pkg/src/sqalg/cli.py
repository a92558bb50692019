"""Command-line front end: ``sqalg apply|basis|poincare|verify|algebras|check-algebra``.

Exit codes: 0 success, 1 a check failed, 2 usage or parse error, 3 a bound
guard aborted the computation, 4 verification ran but skipped entries.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass, fields
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

from . import milnor
from .builtins import ALIASES, builtin_presentations, get_presentation
from .errors import BoundExceeded, ParseError, PresentationError, SqAlgError
from .groebner import MonomialOrder, poincare_check, quotient_basis
from .poly import Poly
from .series import series_coefficients
from .steenrod import AlgebraPresentation, check_instability, check_sq1_sq1, presentation_from_json
from .verify import VerifyConfig, run_all

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BOUND, EXIT_SKIPPED = 0, 1, 2, 3, 4

_OP = re.compile(r"\s*(?:Sq\^(\d+)|Q_(\d+))\s*")


class UsageError(SqAlgError):
    pass


@dataclass
class CliConfig:
    algebra: str = "BSO3"
    max_degree: Optional[int] = None
    max_m: int = milnor.DEFAULT_MAX_M
    order: str = "grevlex"
    precedence: Optional[Tuple[str, ...]] = None
    format: str = "human"

    def __post_init__(self):
        if self.max_degree is not None and self.max_degree < 0:
            raise UsageError("--max-degree must be non-negative")
        if self.max_m < 0:
            raise UsageError("--max-m must be non-negative")
        if self.format not in ("human", "json"):
            raise UsageError("--format is human or json")

    def monomial_order(self) -> MonomialOrder:
        return MonomialOrder(self.order, self.precedence)


def load_algebra(spec: str) -> AlgebraPresentation:
    """A built-in name (or alias) or a path to a JSON definition file."""
    if spec in builtin_presentations() or spec in ALIASES:
        return get_presentation(spec)
    path = Path(spec)
    if path.exists():
        return presentation_from_json(path)
    raise UsageError(f"unknown algebra {spec!r}: not a built-in ({', '.join(sorted(builtin_presentations()))}) "
                     f"and not a file")


def parse_op(spec: str) -> List[Tuple[str, int]]:
    """``"Q_0.Q_1"`` -> ``[("Q", 0), ("Q", 1)]``; the rightmost operation acts first."""
    ops = []
    pos = 0
    for part in spec.split("."):
        mt = _OP.fullmatch(part)
        if not mt:
            raise ParseError("expected Sq^<i> or Q_<m>", spec, pos + len(part) - len(part.lstrip()))
        ops.append(("Sq", int(mt.group(1))) if mt.group(1) is not None else ("Q", int(mt.group(2))))
        pos += len(part) + 1
    return ops


def apply_ops(ops: Sequence[Tuple[str, int]], p: Poly, alg: AlgebraPresentation, max_m: int) -> Poly:
    for kind, k in reversed(ops):
        p = alg.sq(k, p) if kind == "Sq" else milnor.q_derivation(k, p, alg, max_m)
    return p


def _degree_range(text: str) -> range:
    mt = re.fullmatch(r"\s*(\d+)\s*(?:(?:\.\.|-|:)\s*(\d+))?\s*", text)
    if not mt:
        raise UsageError(f"--degree expects N or A..B, got {text!r}")
    lo = int(mt.group(1))
    hi = int(mt.group(2)) if mt.group(2) else lo
    if hi < lo:
        raise UsageError(f"empty degree range {text!r}")
    return range(lo, hi + 1)


def _emit(cfg: CliConfig, payload: dict, human: str):
    if cfg.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(human)


def _guard_degree(cfg: CliConfig, d: int, what: str):
    if cfg.max_degree is not None and d > cfg.max_degree:
        raise BoundExceeded(f"{what} needs degree {d} > --max-degree {cfg.max_degree}")


def cmd_apply(cfg: CliConfig, op: str, expr: str) -> int:
    alg = load_algebra(cfg.algebra)
    ops = parse_op(op)
    p = alg.parse(expr)
    if p:
        _guard_degree(cfg, p.max_degree(), "input")
    out = apply_ops(ops, p, alg, cfg.max_m)
    if out:
        _guard_degree(cfg, out.max_degree(), "result")
    if alg.relations:
        out = quotient_basis(alg, cfg.monomial_order()).normal_form(out)
    _emit(cfg, {"algebra": alg.name, "op": op, "input": str(p), "result": str(out)}, str(out))
    return EXIT_OK


def cmd_basis(cfg: CliConfig, degrees: range, weight: Optional[int]) -> int:
    alg = load_algebra(cfg.algebra)
    if cfg.max_degree is not None:
        _guard_degree(cfg, degrees[-1], "basis")
    gb = quotient_basis(alg, cfg.monomial_order(), max_degree=max(64, degrees[-1]))
    rows = []
    for d in degrees:
        monos = [alg.ring.format_monomial(m) for m in gb.standard_monomials(d, weight)]
        rows.append({"degree": d, "weight": weight, "dimension": len(monos), "monomials": monos})
    lines = []
    for r in rows:
        head = f"degree {r['degree']}" + (f", weight {weight}" if weight is not None else "")
        lines.append(f"{head}: dim {r['dimension']}")
        lines.extend(f"  {m}" for m in r["monomials"])
    _emit(cfg, {"algebra": alg.name, "order": str(cfg.monomial_order()), "slices": rows}, "\n".join(lines))
    return EXIT_OK


def cmd_poincare(cfg: CliConfig, max_degree: int, series: Optional[str]) -> int:
    alg = load_algebra(cfg.algebra)
    gb = quotient_basis(alg, cfg.monomial_order(), max_degree=max(64, max_degree))
    dims = gb.dims_by_degree(max_degree)
    payload = {"algebra": alg.name, "dims": dims}
    lines = ["degree  dim" + ("  series" if series else "")]
    code = EXIT_OK
    if series:
        expected = series_coefficients(series, max_degree)
        res = poincare_check(gb, expected)
        payload.update(series=series, expected=expected, match=res.ok)
        for d, (a, b) in enumerate(zip(dims, expected)):
            lines.append(f"{d:6d}  {a:3d}  {b:6d}" + ("" if a == b else "  MISMATCH"))
        lines.append("match" if res.ok else f"mismatch: {res.failure}")
        code = EXIT_OK if res.ok else EXIT_FAIL
    else:
        lines.extend(f"{d:6d}  {a:3d}" for d, a in enumerate(dims))
    _emit(cfg, payload, "\n".join(lines))
    return code


def _verify_config(cfg: CliConfig, config_file: Optional[str]) -> VerifyConfig:
    vc = VerifyConfig(max_degree=cfg.max_degree, max_m=cfg.max_m, order=cfg.monomial_order())
    if config_file:
        try:
            data = json.loads(Path(config_file).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read config {config_file}: {exc}") from exc
        known = {f.name for f in fields(VerifyConfig)} - {"order"}
        bad = set(data) - known
        if bad:
            raise UsageError(f"unknown config keys {sorted(bad)}")
        for k, v in data.items():
            setattr(vc, k, v)
    return vc


def cmd_verify(cfg: CliConfig, config_file: Optional[str] = None, timings: bool = True) -> int:
    report = run_all(_verify_config(cfg, config_file))
    if cfg.format == "json":
        print(report.to_json(timings))
    else:
        print(report.table())
    return report.exit_code


def cmd_algebras(cfg: CliConfig) -> int:
    algs = builtin_presentations()
    payload = {name: a.to_json() for name, a in algs.items()}
    lines = []
    for name, a in algs.items():
        gens = ", ".join(f"{g.name}(deg {g.degree}, wt {g.weight})" for g in a.generators)
        rels = "; ".join(str(r) for r in a.relations) or "none"
        lines.append(f"{name}: {gens}; relations: {rels}")
    _emit(cfg, payload, "\n".join(lines))
    return EXIT_OK


def cmd_check_algebra(cfg: CliConfig, path: str) -> int:
    alg = presentation_from_json(Path(path), validate=False)
    problems = list(alg.problems())
    if not problems:
        for res in (check_instability(alg), check_sq1_sq1(alg, cfg.max_degree if cfg.max_degree is not None else 12)):
            if not res.ok:
                problems.append(res.failure)
    if not problems and alg.relations:
        quotient_basis(alg, cfg.monomial_order())
    _emit(cfg, {"algebra": alg.name, "ok": not problems, "problems": problems},
          f"{alg.name}: ok" if not problems else "\n".join(f"{alg.name}: {p}" for p in problems))
    return EXIT_OK if not problems else EXIT_FAIL


def _common(parser: argparse.ArgumentParser, suppress: bool):
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--algebra", default=d("BSO3"), help="built-in name or JSON definition file")
    parser.add_argument("--max-degree", type=int, default=d(None))
    parser.add_argument("--max-m", type=int, default=d(milnor.DEFAULT_MAX_M))
    parser.add_argument("--format", choices=("human", "json"), default=d("human"))
    parser.add_argument("--order", choices=("grevlex", "grlex"), default=d("grevlex"))
    parser.add_argument("--precedence", default=d(None), help="comma-separated generator order, largest first")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="sqalg", description="Steenrod squares, Milnor operations and quotient rings over GF(2)")
    _common(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", parser_class=_Parser, required=True)

    p = sub.add_parser("apply", help="apply Sq^i / Q_m compositions to a polynomial")
    _common(p, suppress=True)
    p.add_argument("--op", required=True, help='e.g. "Q_1", "Sq^2", "Q_0.Q_1" (right-to-left)')
    p.add_argument("--expr", required=True)

    p = sub.add_parser("basis", help="standard monomial basis of degree slices")
    _common(p, suppress=True)
    p.add_argument("--degree", required=True, help="N or A..B")
    p.add_argument("--weight", type=int)

    p = sub.add_parser("poincare", help="dimensions by degree, optionally against a series")
    _common(p, suppress=True)
    p.add_argument("--series")

    p = sub.add_parser("verify", help="run the verification suite")
    _common(p, suppress=True)
    p.add_argument("--all", action="store_true", help="run every claim (the default)")
    p.add_argument("--config", help="JSON file of VerifyConfig bounds")
    p.add_argument("--no-timings", action="store_true", help="omit timings for byte-stable output")

    p = sub.add_parser("algebras", help="list built-in algebras")
    _common(p, suppress=True)

    p = sub.add_parser("check-algebra", help="validate an algebra definition file")
    _common(p, suppress=True)
    p.add_argument("file")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        prec = tuple(s.strip() for s in args.precedence.split(",")) if args.precedence else None
        cfg = CliConfig(args.algebra, args.max_degree, args.max_m, args.order, prec, args.format)
        if args.command == "apply":
            return cmd_apply(cfg, args.op, args.expr)
        if args.command == "basis":
            return cmd_basis(cfg, _degree_range(args.degree), args.weight)
        if args.command == "poincare":
            if cfg.max_degree is None:
                raise UsageError("poincare needs --max-degree")
            return cmd_poincare(cfg, cfg.max_degree, args.series)
        if args.command == "verify":
            return cmd_verify(cfg, args.config, not args.no_timings)
        if args.command == "algebras":
            return cmd_algebras(cfg)
        return cmd_check_algebra(cfg, args.file)
    except BoundExceeded as exc:
        print(f"error: bound exceeded: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except (UsageError, ParseError, PresentationError, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SqAlgError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
