"""Command-line frontend: ``hextile <command> ...``."""

from __future__ import annotations

import argparse
import json
import signal
import sys
from contextlib import contextmanager
from pathlib import Path

from . import engine, selftest
from .groebner import buchberger_z, load_ideal, order_by_name
from .hexlattice import FixedCellError, Tiling
from .polynomial import ParseError, format_poly
from .render import render_svg


class CommandTimeout(Exception):
    pass


@contextmanager
def _deadline(seconds):
    if not seconds or not hasattr(signal, "SIGALRM"):
        yield
        return

    def _fire(signum, frame):
        raise CommandTimeout(f"timed out after {seconds} s")

    old = signal.signal(signal.SIGALRM, _fire)
    signal.setitimer(signal.ITIMER_REAL, seconds)
    try:
        yield
    finally:
        signal.setitimer(signal.ITIMER_REAL, 0)
        signal.signal(signal.SIGALRM, old)


def _parse_range(text: str) -> range:
    try:
        a, b = text.split("..")
        lo, hi = int(a), int(b)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A..B, got {text!r}") from None
    if lo < 1 or hi < lo:
        raise argparse.ArgumentTypeError(f"bad range {text!r}")
    return range(lo, hi + 1)


def _dump(obj) -> str:
    return json.dumps(obj)


def _verdict_text(v: engine.Verdict) -> str:
    kind = "symmetric signed" if v.symmetric else "signed"
    word = "tileable" if v.tileable else "not tileable"
    return f"T_{v.n}: {kind} {word} (remainder {format_poly(v.remainder)}, closed form agrees: {v.closed_form_check})"


def cmd_check(args, out) -> int:
    if args.range is None and args.n is None:
        raise _Usage("check needs N or --range A..B")
    ns = list(args.range) if args.range is not None else [args.n]
    results = []
    for n in ns:
        try:
            v = engine.check(n, args.symmetric)
            results.append((v.to_json(), _verdict_text(v)))
        except (FixedCellError, ValueError) as exc:
            if args.range is None:
                raise
            results.append(({"n": n, "symmetric": args.symmetric, "error": str(exc)},
                            f"T_{n}: {exc}"))
    if args.format == "text":
        for _, line in results:
            print(line, file=out)
    elif args.range is None:
        print(_dump(results[0][0]), file=out)
    else:
        print(_dump([r for r, _ in results]), file=out)
    return 0


def cmd_certificate(args, out) -> int:
    if args.symmetric:
        tiling = engine.extract_symmetric_certificate(args.n)
    else:
        tiling = engine.extract_certificate(args.n)
    if not engine.verify_tiling(args.n, tiling, args.symmetric):
        raise RuntimeError("extracted certificate failed verification")
    if args.format == "svg":
        text = render_svg(tiling)
    elif args.format == "text":
        lines = [f"T_{args.n}: {len(tiling.placements)} placements, verified"]
        lines += [f"{p.type.value} {p.center.p} {p.center.q} {p.center.sector} {p.weight:+d}"
                  for p in tiling.placements]
        text = "\n".join(lines) + "\n"
    else:
        text = _dump(tiling.to_json()) + "\n"
    if args.out:
        Path(args.out).write_text(text)
    else:
        out.write(text)
    return 0


def cmd_groebner(args, out) -> int:
    varset, gens = load_ideal(args.ideal_file)
    order = order_by_name(args.order, varset)
    G = buchberger_z(gens, order, track_cofactors=False)
    basis = [format_poly(g, order) for g in G.elements]
    if args.format == "text":
        for line in basis:
            print(line, file=out)
    else:
        print(_dump({"vars": list(varset.names), "order": args.order, "basis": basis}), file=out)
    return 0


def cmd_oracle(args, out) -> int:
    if args.sweep:
        reports = engine.oracle_sweep(args.n, args.symmetric, 0, max(args.margin, 5))
        payload = {"reports": [r.to_json() for r in reports],
                   "monotone": engine.sweep_is_monotone(reports),
                   "solvable": reports[-1].solvable}
    else:
        payload = engine.oracle(args.n, args.symmetric, args.margin).to_json()
    if args.format == "text":
        items = payload["reports"] if args.sweep else [payload]
        for r in items:
            print(f"T_{r['n']} margin {r['window_margin']}: "
                  f"{'solvable' if r['solvable'] else 'not solvable'} "
                  f"({r['rows']} x {r['columns']}, residual {r['residual_shape']})", file=out)
    else:
        print(_dump(payload), file=out)
    return 0


def cmd_render(args, out) -> int:
    data = json.loads(Path(args.tiling).read_text())
    tiling = Tiling.from_json(data)
    Path(args.out).write_text(render_svg(tiling))
    return 0


def cmd_selftest(args, out) -> int:
    results = selftest.run_all()
    failed = [r for r in results if not r.ok]
    for r in results:
        if args.verbose or not r.ok:
            line = f"{'ok  ' if r.ok else 'FAIL'} {r.name}"
            print(line + (f": {r.detail}" if r.detail else ""), file=out)
    print(f"{len(results) - len(failed)}/{len(results)} checks passed", file=out)
    return 1 if failed else 0


class _Usage(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hextile",
                                     description="Signed tribone tilings of hexagonal triangles.")
    parser.add_argument("--timeout-seconds", type=float, default=None,
                        help="abort long computations after this many seconds")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="decide signed tileability of T_N")
    p.add_argument("n", type=int, nargs="?")
    p.add_argument("--symmetric", action="store_true")
    p.add_argument("--range", type=_parse_range)
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("certificate", help="extract and verify an explicit signed tiling")
    p.add_argument("n", type=int)
    p.add_argument("--symmetric", action="store_true")
    p.add_argument("--out")
    p.add_argument("--format", choices=("json", "text", "svg"), default="json")
    p.set_defaults(func=cmd_certificate)

    p = sub.add_parser("groebner", help="strong Groebner basis of an ideal file")
    p.add_argument("ideal_file")
    p.add_argument("--order", choices=("lex", "deglex"), default="lex")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=cmd_groebner)

    p = sub.add_parser("oracle", help="integer linear algebra cross-check")
    p.add_argument("n", type=int)
    p.add_argument("--symmetric", action="store_true")
    p.add_argument("--margin", type=int, default=engine.DEFAULT_MARGIN)
    p.add_argument("--sweep", action="store_true")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("render", help="draw a tiling JSON file as SVG")
    p.add_argument("tiling")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("selftest", help="recompute the golden tables")
    p.add_argument("--verbose", action="store_true")
    p.set_defaults(func=cmd_selftest)
    return parser


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)  # exits with 2 on usage errors
    if getattr(args, "margin", 0) < 0:
        parser.error("--margin must be non-negative")
    try:
        with _deadline(args.timeout_seconds):
            return args.func(args, out)
    except _Usage as exc:
        parser.error(str(exc))
    except (FixedCellError, engine.NotTileableError, engine.OracleDimensionError,
            CommandTimeout, ParseError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
