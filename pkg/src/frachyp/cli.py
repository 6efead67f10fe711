"""``frachyp`` command line.

Exit status: 0 on success, 1 when the answer is negative or a search gives up
(not colorable, not certified, budget exceeded), 2 on bad usage or input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import warnings
from fractions import Fraction
from pathlib import Path

from . import alon, bounds, coloring, construction, exact, experiment, theorem1
from .errors import FracHypError, InvalidParams, ParseError
from .hypergraph import (gen_complete_uniform, gen_cycle, gen_random_uniform, parse_hypergraph,
                         serialize_hypergraph)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _frac(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _read(path: str | None, flag: str) -> str:
    if path is None:
        raise UsageError(f"{flag} is required")
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"{flag} {path}: {exc.strerror}") from None


def _load_hypergraph(args):
    return parse_hypergraph(_read(args.hypergraph, "--hypergraph"))


def _need(args, *names):
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"{args.command}: missing {', '.join(missing)}")


def _emit(args, payload, out=None) -> None:
    """Write JSON (or CSV for a list of flat rows) to --out or stdout."""
    if getattr(args, "format", "json") == "csv":
        rows = payload if isinstance(payload, list) else [payload]
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=list(rows[0]))
        w.writeheader()
        for r in rows:
            w.writerow({k: json.dumps(v) if isinstance(v, (dict, list)) else v for k, v in r.items()})
        text = buf.getvalue()
    else:
        text = json.dumps(payload, indent=2) + "\n"
    out = out if out is not None else getattr(args, "out", None)
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_gen(args) -> int:
    if args.kind == "cycle":
        _need(args, "v")
        H = gen_cycle(args.v)
    elif args.kind == "complete":
        _need(args, "v", "n")
        H = gen_complete_uniform(args.v, args.n)
    else:
        _need(args, "v", "n", "m")
        H = gen_random_uniform(args.v, args.n, args.m, args.seed, distinct=args.distinct)
    text = serialize_hypergraph(H)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_verify(args) -> int:
    H = _load_hypergraph(args)
    text = _read(args.coloring, "--coloring")
    if args.panchromatic:
        pc = coloring.parse_panchromatic(text)
        ok = coloring.is_panchromatic(H, pc)
        print("panchromatic" if ok else "not panchromatic")
        return 0 if ok else 1
    chi = coloring.parse_coloring(text)
    bad = coloring.monochromatic_pairs(H, chi)
    if not bad:
        print("proper")
        return 0
    print("not proper")
    for e, c in bad:
        print(f"edge {e} {' '.join(map(str, H.edges[e]))} monochromatic in color {c}")
    return 1


def cmd_solve(args) -> int:
    H = _load_hypergraph(args)
    _need(args, "a", "b")
    if args.method == "alon":
        chi, ledger = alon.solve_alon(H, alon.AlonParams(args.a, args.b, args.seed))
        proper = coloring.is_proper(H, chi)
        summary = {"method": "alon", "status": "proper" if proper else "failed", "attempt": ledger.attempt,
                   "repairs": len(ledger.repairs), "reserve_usage": ledger.usage}
    else:
        res = theorem1.solve_theorem1(H, theorem1.SolverParams(args.a, args.b, args.seed))
        chi, proper = res.final_coloring, res.proper
        summary = {"method": "theorem1", "status": res.status, "p": res.p, "recolors": len(res.events),
                   "bad_events": [k for k, f in res.report.flags().items() if f],
                   "final_monochromatic": sorted(map(list, res.report.explanations))}
    if args.coloring_out:
        Path(args.coloring_out).write_text(coloring.serialize_coloring(chi))
    _emit(args, summary)
    return 0 if proper else 1


def cmd_exact(args) -> int:
    H = _load_hypergraph(args)
    _need(args, "a", "b")
    chi = exact.brute_force_colorable(H, args.a, args.b)
    if chi is None:
        print("not colorable")
        return 1
    print("colorable")
    sys.stdout.write(coloring.serialize_coloring(chi))
    return 0


def cmd_chif(args) -> int:
    H = _load_hypergraph(args)
    primal = exact.chi_f_primal(H)
    dual = exact.chi_f_dual(H)
    payload = {
        "chi_f": _frac(primal.value),
        "primal": _frac(primal.value),
        "dual": _frac(dual.value),
        "certificates_ok": exact.verify_certificates(H, primal) and exact.verify_certificates(H, dual),
        "cover": {" ".join(map(str, sorted(I))): _frac(w) for I, w in primal.primal_weights.items()},
        "vertex_weights": {str(v): _frac(w) for v, w in dual.dual_weights.items()},
        "edge_packing": _frac(exact.edge_packing_lp(H).value),
    }
    if args.a is not None:
        payload["ab_search"] = _frac(exact.chi_f_via_ab_search(H, args.a))
    _emit(args, payload)
    return 0


def cmd_construct(args) -> int:
    _need(args, "n", "a", "b")
    params = construction.ConstructionParams(args.n, args.a, args.b, args.v, args.m, args.seed)
    H, cert = construction.sample_and_certify(params, shrink=args.shrink)
    if args.hypergraph_out:
        Path(args.hypergraph_out).write_text(serialize_hypergraph(H))
    _emit(args, cert.to_dict())
    return 0 if cert.certified else 1


def cmd_bounds(args) -> int:
    _need(args, "n")
    reports = bounds.bound_report(args.which, args.n, args.a, args.b, args.r)
    _emit(args, [r.to_dict() for r in reports])
    return 0


def _grid(args) -> tuple[tuple[int, int, int, float], ...]:
    if args.grid:
        cells = []
        for tok in args.grid:
            parts = tok.split(",")
            if len(parts) != 4:
                raise UsageError(f"--grid {tok!r}: expected n,a,b,multiplier")
            try:
                cells.append((int(parts[0]), int(parts[1]), int(parts[2]), float(parts[3])))
            except ValueError:
                raise UsageError(f"--grid {tok!r}: expected n,a,b,multiplier") from None
        return tuple(cells)
    _need(args, "n", "a", "b")
    return tuple((args.n, args.a, args.b, mult) for mult in args.multiplier)


def cmd_experiment(args) -> int:
    _need(args, "v")
    config = experiment.ExperimentConfig(_grid(args), args.v, args.trials, args.seed, args.method,
                                         args.out, args.format == "csv")
    report = experiment.run_experiment(config)
    if not args.out:
        sys.stdout.write(json.dumps(report.summary(), indent=2) + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="frachyp", description="Fractional (a:b)-colorings of uniform hypergraphs.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, help_text, *flags):
        sp = sub.add_parser(name, help=help_text)
        for f in flags:
            if f in ("n", "a", "b", "v", "m", "r"):
                sp.add_argument(f"--{f}", type=int)
            elif f == "seed":
                sp.add_argument("--seed", type=int, default=0)
            elif f == "format":
                sp.add_argument("--format", choices=("json", "csv"), default="json")
            else:
                sp.add_argument(f"--{f}")
        return sp

    g = add("gen", "generate a hypergraph", "v", "n", "m", "seed", "out")
    g.add_argument("--kind", choices=("random", "complete", "cycle"), default="random")
    g.add_argument("--distinct", action="store_true", help="no repeated edges")
    g.set_defaults(func=cmd_gen)

    v = add("verify", "check a coloring", "hypergraph", "coloring")
    v.add_argument("--panchromatic", action="store_true", help="coloring file is single-color 'a v' format")
    v.set_defaults(func=cmd_verify)

    s = add("solve", "randomized coloring", "hypergraph", "a", "b", "seed", "out", "format")
    s.add_argument("--method", choices=experiment.METHODS, default="theorem1")
    s.add_argument("--coloring-out")
    s.set_defaults(func=cmd_solve)

    add("exact", "exhaustive (a:b)-colorability", "hypergraph", "a", "b").set_defaults(func=cmd_exact)

    c = add("chif", "exact fractional chromatic number", "hypergraph", "out", "format")
    c.add_argument("--a", type=int, help="also search (a:b)-colorings with a up to this value")
    c.set_defaults(func=cmd_chif)

    k = add("construct", "random non-colorable hypergraph", "n", "a", "b", "v", "m", "seed", "out", "format")
    k.add_argument("--shrink", action="store_true", help="resample until certified")
    k.add_argument("--hypergraph-out")
    k.set_defaults(func=cmd_construct)

    b = add("bounds", "edge-count bounds", "n", "a", "b", "r", "out", "format")
    b.add_argument("--which", choices=bounds.WHICH, required=True)
    b.set_defaults(func=cmd_bounds)

    e = add("experiment", "Monte Carlo sweep", "n", "a", "b", "v", "seed", "out", "format")
    e.add_argument("--trials", type=int, default=100)
    e.add_argument("--method", choices=experiment.METHODS, default="theorem1")
    e.add_argument("--multiplier", type=float, nargs="+", default=[1.0])
    e.add_argument("--grid", nargs="+", metavar="N,A,B,MULT")
    e.set_defaults(func=cmd_experiment)
    return p


def run_cli(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return 2
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            try:
                return args.func(args)
            finally:
                for w in caught:
                    print(f"warning: {w.message}", file=sys.stderr)
    except (UsageError, ParseError, InvalidParams) as exc:
        print(f"frachyp {args.command}: {exc}", file=sys.stderr)
        return 2
    except FracHypError as exc:
        print(f"frachyp {args.command}: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"frachyp {args.command}: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
