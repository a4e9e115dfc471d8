"""Command-line interface: ``tnetcost <command> ...``.

Exit codes: 0 success, 1 input or parse error, 2 infeasible parameters,
3 corrupted blob.
"""
from __future__ import annotations

import argparse
import logging
import sys

from .codec import BlobDecodeError, EncodedBlob, decode, encode
from .core import SelfLoopError, stats
from .costmodel import SNM_VARIANTS, Repr, report
from .generate import InfeasibleParameters, gen_independent, gen_stable
from .ingest import TripletFormat, TripletParseError, parse_triplets, write_triplets
from .sweep import default_scales, run_sweep, write_sweep_csv

log = logging.getLogger("tnetcost")

EXIT_INPUT, EXIT_INFEASIBLE, EXIT_CODEC = 1, 2, 3


def _format(args) -> TripletFormat:
    return TripletFormat(
        delimiter=args.delimiter,
        column_order=tuple(c.strip() for c in args.columns.split(",")),
        header_rows=args.header_rows,
        extra_columns=args.extra_columns,
    )


def _load(args):
    return parse_triplets(args.input, _format(args))


def _fmt_num(x) -> str:
    if x is None:
        return "-"
    return str(x) if isinstance(x, int) else f"{x:.6g}"


def cmd_stats(args) -> int:
    s = stats(_load(args)).as_dict()
    width = max(len(k) for k in s)
    for key, value in s.items():
        print(f"{key:<{width}}  {_fmt_num(value)}")
    print(",".join(s))
    print(",".join("" if v is None else str(v) for v in s.values()))
    return 0


def cmd_recommend(args) -> int:
    rep = report(_load(args), step=args.step, snm_variant=args.snm_variant, n=args.n)
    p = rep.params
    print(f"n: {p.n}  m: {p.m}  e: {p.e}  t: {p.t}  i: {p.i}  t_prime: {p.t_prime}  step: {rep.step}")
    for tag, cost in rep.costs.items():
        print(f"cost_{tag.value}: {cost:.6f}")
    print(f"best: {rep.best.value}")
    return 0


def cmd_sweep(args) -> int:
    ls = _load(args)
    if args.scales:
        scales = [int(w) for w in args.scales.split(",")]
    else:
        scales = default_scales(ls)
    rows = run_sweep(ls, scales, args.snm_variant, n=args.n, max_workers=args.workers)
    if args.out and args.out != "-":
        with open(args.out, "w", newline="") as fh:
            write_sweep_csv(rows, fh)
        log.info("wrote %d rows to %s", len(rows), args.out)
    else:
        write_sweep_csv(rows, sys.stdout)
    return 0


def cmd_encode(args) -> int:
    blob = encode(_load(args), Repr(args.repr), step=args.step)
    with open(args.out, "wb") as fh:
        fh.write(blob.to_bytes())
    print(f"payload_bits: {blob.payload_bit_length}")
    return 0


def cmd_decode(args) -> int:
    with open(args.input, "rb") as fh:
        data = fh.read()
    ls = decode(EncodedBlob.from_bytes(data))
    out = write_triplets(ls, _format(args))
    if args.out and args.out != "-":
        with open(args.out, "wb") as fh:
            fh.write(out)
    else:
        sys.stdout.buffer.write(out)
        sys.stdout.flush()
    return 0


def cmd_generate(args) -> int:
    gen = gen_stable if args.kind == "stable" else gen_independent
    ls = gen(args.n, args.m, args.t, args.seed)
    out = write_triplets(ls, _format(args))
    if args.out and args.out != "-":
        with open(args.out, "wb") as fh:
            fh.write(out)
        log.info("wrote %d events to %s", ls.e, args.out)
    else:
        sys.stdout.buffer.write(out)
        sys.stdout.flush()
    return 0


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--delimiter", choices=["whitespace", "tab", "comma"], default="whitespace")
    fmt.add_argument("--columns", default="time,u,v", help="column order, e.g. 'u,v,time'")
    fmt.add_argument("--header-rows", type=int, default=0)
    fmt.add_argument("--extra-columns", choices=["ignore", "error"], default="ignore")

    parser = argparse.ArgumentParser(prog="tnetcost", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("stats", parents=[fmt], help="summary statistics of a triplet file")
    p.add_argument("input")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("recommend", parents=[fmt], help="costs of all representations and the cheapest")
    p.add_argument("input")
    p.add_argument("--step", type=int, default=None, help="interval grid step (default: inferred)")
    p.add_argument("--snm-variant", choices=SNM_VARIANTS, default="prose")
    p.add_argument("--n", type=int, default=None, help="node count override")
    p.set_defaults(func=cmd_recommend)

    p = sub.add_parser("sweep", parents=[fmt], help="costs across aggregation windows, as CSV")
    p.add_argument("input")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--scales", help="comma-separated windows in raw time units")
    g.add_argument("--auto", action="store_true", help="doubling windows from the grid step (default)")
    p.add_argument("--snm-variant", choices=SNM_VARIANTS, default="prose")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("encode", parents=[fmt], help="serialize a triplet file into a blob")
    p.add_argument("input")
    p.add_argument("--repr", choices=[r.value for r in Repr], required=True)
    p.add_argument("--step", type=int, default=None)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", parents=[fmt], help="rebuild a triplet file from a blob")
    p.add_argument("input")
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("generate", parents=[fmt], help="write a synthetic triplet file")
    p.add_argument("--kind", choices=["stable", "independent"], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_generate)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        return args.func(args)
    except BlobDecodeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CODEC
    except InfeasibleParameters as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except (TripletParseError, SelfLoopError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
