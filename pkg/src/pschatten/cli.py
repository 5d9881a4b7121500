"""Command-line surface: energy reports, pairwise comparison, sweeps, verification.

Exit codes:
    0  success (and every checked discrepancy / violation count was within tol)
    1  computation finished but a check failed (discrepancy > tol, violations > 0)
    2  input or parse error
    3  non-bipartite input where the integral formulas need bipartiteness
    4  quadrature failure (budget exhausted / tolerance unreachable)
    5  vertex counts differ after isolated-vertex padding
    6  exhaustive enumeration above the cap (use --sample)
    7  invalid exponent for the even-p check
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from dataclasses import dataclass

from .charpoly import b_coefficients, char_poly, quasi_compare
from .energy import (
    DEFAULT_MAX_EVALS,
    DEFAULT_TOL,
    P_GUARD_HIGH,
    P_GUARD_LOW,
    OrderMismatchError,
    PsiPoly,
    QuadratureError,
    check_csikvari_direction,
    energy_difference_cj,
    integrate_coulson,
    pad_to_even,
    verify_tree_bounds,
)
from .graphs import (
    Graph,
    GraphInputError,
    GraphParseError,
    NotBipartiteError,
    TreeEnumerationCapError,
    parse_edge_list,
    parse_graph6,
    path_graph,
    star_graph,
    tree_from_pruefer,
    write_graph6,
)
from .spectrum import DEFAULT_EIG_TOL, eigenvalues, energy_from_spectrum, energy_spectral

SCHEMA_VERSION = 1
MAX_EVALS_ENV = "SCHATTEN_MAX_EVALS"

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_PARSE = 2
EXIT_NOT_BIPARTITE = 3
EXIT_QUADRATURE = 4
EXIT_ORDER_MISMATCH = 5
EXIT_ENUM_CAP = 6
EXIT_BAD_EVEN_P = 7


@dataclass
class RunConfig:
    command: str
    p: float | None = None
    p_grid: tuple[float, ...] | None = None
    n: int | None = None
    tol: float = DEFAULT_TOL
    eig_tol: float = DEFAULT_EIG_TOL
    max_evals: int = DEFAULT_MAX_EVALS
    extreme_p: bool = False
    fmt: str = "json"
    seed: int = 0
    sample: int | None = None


def _parse_p_grid(spec: str) -> list[float]:
    """Either comma-separated values or start:stop:step (inclusive stop)."""
    spec = spec.strip()
    if not spec:
        return []
    if ":" in spec:
        parts = spec.split(":")
        if len(parts) != 3:
            raise ValueError(f"grid spec must be start:stop:step, got {spec!r}")
        start, stop, step = (float(x) for x in parts)
        if step <= 0:
            raise ValueError("grid step must be positive")
        count = int((stop - start) / step + 1e-9) + 1
        return [round(start + i * step, 12) for i in range(count)]
    return [float(x) for x in spec.split(",") if x.strip()]


def _add_graph_args(parser: argparse.ArgumentParser, prefix: str = "") -> None:
    dash = f"--{prefix}-" if prefix else "--"
    group = parser.add_argument_group(f"graph input ({prefix or 'one required'})")
    group.add_argument(f"{dash}graph6", metavar="G6", help="inline graph6 string")
    group.add_argument(f"{dash}edges", metavar="FILE", help="edge-list file ('n m' header line)")
    group.add_argument(f"{dash}path", metavar="N", type=int, help="path graph on N vertices")
    group.add_argument(f"{dash}star", metavar="N", type=int, help="star graph on N vertices")
    group.add_argument(f"{dash}pruefer", metavar="SEQ",
                       help="comma-separated Pruefer sequence ('' for K_2)")


def _build_graph(args: argparse.Namespace, parser: argparse.ArgumentParser,
                 prefix: str = "") -> Graph:
    key = (prefix + "_") if prefix else ""
    sources = {
        "graph6": getattr(args, f"{key}graph6" if prefix else "graph6"),
        "edges": getattr(args, f"{key}edges" if prefix else "edges"),
        "path": getattr(args, f"{key}path" if prefix else "path"),
        "star": getattr(args, f"{key}star" if prefix else "star"),
        "pruefer": getattr(args, f"{key}pruefer" if prefix else "pruefer"),
    }
    given = [k for k, v in sources.items() if v is not None]
    label = f"--{prefix}-" if prefix else "--"
    if len(given) != 1:
        parser.error(f"exactly one of {label}graph6/{label}edges/{label}path/"
                     f"{label}star/{label}pruefer is required")
    kind = given[0]
    value = sources[kind]
    if kind == "graph6":
        return parse_graph6(value)
    if kind == "edges":
        try:
            text = open(value, "r", encoding="utf-8").read()
        except OSError as exc:
            raise GraphParseError(f"cannot read {value}: {exc}")
        return parse_edge_list(text)
    if kind == "path":
        return path_graph(value)
    if kind == "star":
        return star_graph(value)
    seq = [int(x) for x in value.split(",") if x.strip() != ""]
    return tree_from_pruefer(seq)


def _graph_info(g: Graph) -> dict:
    return {"graph6": write_graph6(g), "n": g.n, "m": g.m}


def _emit_json(payload: dict) -> None:
    sys.stdout.write(json.dumps(payload, indent=2) + "\n")


def _resolve_max_evals(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    if args.max_evals is not None:
        return args.max_evals
    env = os.environ.get(MAX_EVALS_ENV)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            parser.error(f"{MAX_EVALS_ENV} must be an integer, got {env!r}")
    return DEFAULT_MAX_EVALS


def _integral_p_range(extreme: bool) -> tuple[float, float]:
    return (0.0, 2.0) if extreme else (P_GUARD_LOW, P_GUARD_HIGH)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def _cmd_energy(args, parser) -> int:
    cfg = RunConfig(command="energy", p=args.p, tol=args.tol, eig_tol=args.eig_tol,
                    max_evals=_resolve_max_evals(args, parser), extreme_p=args.extreme_p,
                    fmt=args.format)
    g = _build_graph(args, parser)
    psi = PsiPoly.from_graph(g)
    integral, diag = integrate_coulson(psi, cfg.p, cfg.tol, cfg.max_evals, cfg.extreme_p)
    spectral = energy_spectral(g, cfg.p, cfg.eig_tol)
    discrepancy = abs(spectral - integral)
    payload = {
        "schema": SCHEMA_VERSION,
        "command": "energy",
        "graph": _graph_info(g),
        "p": cfg.p,
        "tol": cfg.tol,
        "spectral": spectral,
        "integral": integral,
        "discrepancy": discrepancy,
        "diagnostics": diag.to_dict(),
    }
    if cfg.fmt == "csv":
        writer = csv.writer(sys.stdout)
        writer.writerow(["graph_id", "p", "spectral", "integral", "discrepancy",
                         "evaluations", "estimated_abs_error", "intervals"])
        writer.writerow([payload["graph"]["graph6"], cfg.p, spectral, integral, discrepancy,
                         diag.evaluations, diag.estimated_abs_error, diag.intervals])
    else:
        _emit_json(payload)
    return EXIT_OK if discrepancy <= cfg.tol else EXIT_CHECK_FAILED


def _cmd_compare(args, parser) -> int:
    cfg = RunConfig(command="compare", p=args.p, tol=args.tol, eig_tol=args.eig_tol,
                    max_evals=_resolve_max_evals(args, parser), extreme_p=args.extreme_p,
                    fmt=args.format)
    g1 = _build_graph(args, parser, "g1")
    g2 = _build_graph(args, parser, "g2")
    report = energy_difference_cj(g1, g2, cfg.p, cfg.tol, eig_tol=cfg.eig_tol,
                                  max_evals=cfg.max_evals, allow_extreme_p=cfg.extreme_p)
    b1 = b_coefficients(char_poly(pad_to_even(g1)))
    b2 = b_coefficients(char_poly(pad_to_even(g2)))
    verdict = quasi_compare(b1, b2)
    payload = {
        "schema": SCHEMA_VERSION,
        "command": "compare",
        "g1": _graph_info(g1),
        "g2": _graph_info(g2),
        "p": cfg.p,
        "tol": cfg.tol,
        "quasi_order": verdict.value,
        "b1": [str(x) for x in b1.b],
        "b2": [str(x) for x in b2.b],
        "cj_difference": report.integral,
        "spectral_difference": report.spectral,
        "discrepancy": report.discrepancy,
        "diagnostics": report.diagnostics.to_dict(),
    }
    if cfg.fmt == "csv":
        writer = csv.writer(sys.stdout)
        writer.writerow(["g1", "g2", "p", "quasi_order", "cj_difference",
                         "spectral_difference", "discrepancy"])
        writer.writerow([payload["g1"]["graph6"], payload["g2"]["graph6"], cfg.p,
                         verdict.value, report.integral, report.spectral, report.discrepancy])
    else:
        _emit_json(payload)
    return EXIT_OK if report.discrepancy <= cfg.tol else EXIT_CHECK_FAILED


def _cmd_sweep(args, parser) -> int:
    try:
        grid = _parse_p_grid(args.p_grid)
    except ValueError as exc:
        parser.error(str(exc))
    for p in grid:
        if p <= 0:
            parser.error(f"sweep p values must be positive, got {p}")
    cfg = RunConfig(command="sweep", p_grid=tuple(grid), tol=args.tol, eig_tol=args.eig_tol,
                    max_evals=_resolve_max_evals(args, parser), extreme_p=args.extreme_p)
    g = _build_graph(args, parser)
    psi = PsiPoly.from_graph(g)
    spec = eigenvalues(g, cfg.eig_tol)
    cut = 10.0 * cfg.eig_tol
    graph_id = write_graph6(g)
    lo, hi = _integral_p_range(cfg.extreme_p)

    writer = csv.writer(sys.stdout)
    writer.writerow(["graph_id", "p", "spectral", "integral", "discrepancy"])
    worst = 0.0
    for p in grid:
        spectral = energy_from_spectrum(spec, p, cut)
        if lo <= p <= hi and 0.0 < p < 2.0:
            integral, _ = integrate_coulson(psi, p, cfg.tol, cfg.max_evals, cfg.extreme_p)
            discrepancy = abs(spectral - integral)
            worst = max(worst, discrepancy)
            writer.writerow([graph_id, p, spectral, integral, discrepancy])
        else:
            writer.writerow([graph_id, p, spectral, "", ""])
    return EXIT_OK if worst <= cfg.tol else EXIT_CHECK_FAILED


def _cmd_verify(args, parser) -> int:
    try:
        grid = _parse_p_grid(args.p_grid)
    except ValueError as exc:
        parser.error(str(exc))
    cfg = RunConfig(command="verify", p_grid=tuple(grid), n=args.n, tol=args.tol,
                    eig_tol=args.eig_tol, sample=args.sample, seed=args.seed)
    report = verify_tree_bounds(cfg.n, list(cfg.p_grid), cfg.tol, eig_tol=cfg.eig_tol,
                                sample=cfg.sample, seed=cfg.seed)
    payload = {"schema": SCHEMA_VERSION, "command": "verify"}
    payload.update(report.to_dict())
    _emit_json(payload)
    return EXIT_OK if report.ok else EXIT_CHECK_FAILED


def _cmd_csikvari(args, parser) -> int:
    try:
        grid = _parse_p_grid(args.p_grid)
    except ValueError as exc:
        parser.error(str(exc))
    for p in grid:
        if p != int(p) or int(p) % 2 or int(p) < 2:
            sys.stderr.write(f"error: p must be an even integer >= 2, got {p}\n")
            return EXIT_BAD_EVEN_P
    cfg = RunConfig(command="csikvari", p_grid=tuple(grid), n=args.n, tol=args.tol,
                    eig_tol=args.eig_tol, sample=args.sample, seed=args.seed)
    report = check_csikvari_direction(cfg.n, [int(p) for p in cfg.p_grid], cfg.tol,
                                      eig_tol=cfg.eig_tol, sample=cfg.sample, seed=cfg.seed)
    payload = {"schema": SCHEMA_VERSION, "command": "csikvari"}
    payload.update(report.to_dict())
    _emit_json(payload)
    return EXIT_OK if report.ok else EXIT_CHECK_FAILED


# ---------------------------------------------------------------------------
# parser assembly and dispatch
# ---------------------------------------------------------------------------


def _make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pschatten",
        description="p-Schatten graph energy: spectral sums, Coulson-type integrals, "
                    "and extremal-tree verification for bipartite graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common_numeric(p: argparse.ArgumentParser, default_tol: float) -> None:
        p.add_argument("--tol", type=float, default=default_tol,
                       help=f"tolerance (default {default_tol})")
        p.add_argument("--eig-tol", type=float, default=DEFAULT_EIG_TOL,
                       help="eigensolver off-diagonal tolerance")

    def quadrature_opts(p: argparse.ArgumentParser) -> None:
        p.add_argument("--max-evals", type=int, default=None,
                       help=f"quadrature evaluation budget (or ${MAX_EVALS_ENV})")
        p.add_argument("--extreme-p", action="store_true",
                       help=f"allow p outside [{P_GUARD_LOW}, {P_GUARD_HIGH}] "
                            "with a widened budget")

    pe = sub.add_parser("energy", help="spectral and integral energy of one graph")
    _add_graph_args(pe)
    pe.add_argument("--p", type=float, required=True, help="exponent in (0, 2)")
    common_numeric(pe, DEFAULT_TOL)
    quadrature_opts(pe)
    pe.add_argument("--format", choices=("json", "csv"), default="json")
    pe.set_defaults(func=_cmd_energy)

    pc = sub.add_parser("compare", help="quasi-order verdict and energy difference of two graphs")
    _add_graph_args(pc, "g1")
    _add_graph_args(pc, "g2")
    pc.add_argument("--p", type=float, required=True, help="exponent in (0, 2)")
    common_numeric(pc, DEFAULT_TOL)
    quadrature_opts(pc)
    pc.add_argument("--format", choices=("json", "csv"), default="json")
    pc.set_defaults(func=_cmd_compare)

    ps = sub.add_parser("sweep", help="CSV of spectral/integral energy over a p grid")
    _add_graph_args(ps)
    ps.add_argument("--p-grid", required=True,
                    help="comma list ('0.25,0.5') or start:stop:step ('0.1:1.9:0.1')")
    common_numeric(ps, DEFAULT_TOL)
    quadrature_opts(ps)
    ps.set_defaults(func=_cmd_sweep)

    pv = sub.add_parser("verify", help="star <= tree <= path over all trees on n vertices")
    pv.add_argument("--n", type=int, required=True)
    pv.add_argument("--p-grid", default="0.2:1.8:0.2",
                    help="grid in (0,2); default nine points 0.2..1.8")
    common_numeric(pv, 1e-9)
    pv.add_argument("--sample", type=int, default=None,
                    help="sample this many random trees instead of enumerating")
    pv.add_argument("--seed", type=int, default=0)
    pv.set_defaults(func=_cmd_verify)

    pk = sub.add_parser("csikvari", help="reversed chain at even p >= 2 (spectral only)")
    pk.add_argument("--n", type=int, required=True)
    pk.add_argument("--p-grid", default="2,4,6", help="even integers >= 2")
    common_numeric(pk, 1e-9)
    pk.add_argument("--sample", type=int, default=None)
    pk.add_argument("--seed", type=int, default=0)
    pk.set_defaults(func=_cmd_csikvari)

    return parser


def main(argv=None) -> int:
    parser = _make_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, parser)
    except NotBipartiteError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_NOT_BIPARTITE
    except OrderMismatchError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_ORDER_MISMATCH
    except QuadratureError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_QUADRATURE
    except TreeEnumerationCapError as exc:
        sys.stderr.write(f"error: {exc}; pass --sample COUNT [--seed S]\n")
        return EXIT_ENUM_CAP
    except (GraphParseError, GraphInputError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_PARSE
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_PARSE


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
