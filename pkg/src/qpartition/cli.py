"""Command-line front door.

Subcommands: kr, ppoly, decompose, compose, seed-expand, bases, verify.
Output is deterministic for fixed arguments; JSON is UTF-8 with a stable key
order and a trailing newline.  Exit codes: 0 success, 1 verification
mismatch, 2 invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import genfun, moves, ppoly, seeds, verify
from .partitions import KrVariant, Partition, format_parts
from .series import BiSeries


def _print(text: str) -> None:
    sys.stdout.write(text + "\n")


def _emit_json(obj) -> None:
    _print(json.dumps(obj, ensure_ascii=False))


def _series_table(series: BiSeries) -> list[str]:
    rows = [(n, m, c) for m, n, c in series.items()]
    rows.sort()
    return ["%d\t%d\t%d" % row for row in rows]


def _cmd_kr(args) -> int:
    family = {
        KrVariant.D: genfun.SeriesFamily.KR1,
        KrVariant.DPRIME: genfun.SeriesFamily.KR2,
        KrVariant.DPRIMEPRIME: genfun.SeriesFamily.KR3,
    }[KrVariant.from_label(args.variant)]
    form = genfun.Form(args.form)
    max_t = 0 if form is genfun.Form.PRODUCT else args.max_t
    spec = genfun.GenFunSpec(family, form, args.max_q, max_t)
    series = genfun.series_for(spec)
    if args.format == "json":
        _emit_json(series.to_json_dict())
    else:
        for line in _series_table(series):
            _print(line)
    return 0


def _cmd_ppoly(args) -> int:
    if args.parity is None:
        poly = ppoly.p(args.m1, args.m2, args.m3, args.s)
    else:
        poly = ppoly.p_parity(args.m1, args.m2, args.m3, args.s, args.parity)
    if args.format == "json":
        _emit_json([[e, c] for e, c in reversed(poly.terms())])
    else:
        _print(poly.format_q())
    return 0


def _decomposition_dict(d: moves.Decomposition, partition) -> dict:
    return {
        "partition": format_parts(partition),
        "base": str(d.base),
        "mu": format_parts(d.mu),
        "theta": format_parts(d.theta),
        "n2": d.n2,
        "n11": d.n11,
        "n12": d.n12,
        "weights": {
            "total": d.total_weight,
            "base": d.base_weight,
            "mu": d.mu_weight,
            "theta": d.theta_weight,
        },
    }


def _cmd_decompose(args) -> int:
    parts = Partition.parse(args.partition).parts
    trace = [] if args.trace else None
    d = moves.decompose(parts, trace)
    out = _decomposition_dict(d, parts)
    if args.trace:
        out["trace"] = trace
    if args.format == "json":
        _emit_json(out)
    else:
        for key in ("partition", "base", "mu", "theta"):
            _print("%s\t%s" % (key, out[key]))
        _print(
            "weights\t%d = %d + %d + %d"
            % (d.total_weight, d.base_weight, d.mu_weight, d.theta_weight)
        )
    return 0


def _parse_int_list(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    return tuple(int(tok) for tok in text.split(","))


def _cmd_compose(args) -> int:
    base = moves.parse_structure(args.base)
    d = moves.make_decomposition(base, _parse_int_list(args.mu), _parse_int_list(args.theta))
    trace = [] if args.trace else None
    parts = moves.compose(d, trace)
    out = _decomposition_dict(d, parts)
    if args.trace:
        out["trace"] = trace
    if args.format == "json":
        _emit_json(out)
    else:
        _print(format_parts(parts))
    return 0


def _cmd_seed_expand(args) -> int:
    variant = KrVariant.from_label(args.variant)
    parts = Partition.parse(args.partition).parts
    try:
        seed = seeds.to_seed(parts, variant)
    except ValueError:
        seed = parts  # accept a seed (or almost-seed) directly
    dec = seeds.seed_decomposition(seed, variant)
    expansion = seeds.expand_seed(seed, variant)
    out = {
        "partition": format_parts(parts),
        "variant": str(variant.index),
        "seed": format_parts(seed),
        "mu": format_parts(dec.mu),
        "forced_prefix": dec.forced_prefix,
        "groups": [
            {"start": g.start, "stop": g.stop, "value": g.value} for g in dec.groups
        ],
        "partitions": [format_parts(p) for p in expansion],
    }
    if args.format == "json":
        _emit_json(out)
    else:
        for p in out["partitions"]:
            _print(p)
    return 0


def _cmd_bases(args) -> int:
    if args.max_weight is not None:
        cap = args.max_weight
    else:
        _, hi = ppoly.support_window(args.m1, args.m2, args.m3)
        cap = (2 * args.m1 + 2 * args.m2 + 5 * args.m3) * hi
    records = moves.enumerate_bases(args.m1, args.m2, args.m3, cap)
    rows = [
        {
            "parts": format_parts(sorted(rec.structure.parts)),
            "structure": str(rec.structure),
            "weight": rec.weight,
            "largest_pair_index": rec.largest_pair_index,
            "parity": rec.parity,
        }
        for rec in records
    ]
    if args.format == "json":
        _emit_json(rows)
    else:
        for row in rows:
            _print(
                "%s\t%d\t%d\t%d"
                % (row["structure"], row["weight"], row["largest_pair_index"], row["parity"])
            )
    return 0


def _cmd_verify(args) -> int:
    factory = verify.SUITES[args.suite]
    if args.max_q is not None:
        if args.suite == "products":
            result = factory(max_q=args.max_q)
        elif args.suite == "forms":
            result = factory(max_q=args.max_q, alt_max_q=args.max_q)
        elif args.suite == "corollary":
            result = factory(max_q=args.max_q)
        else:
            raise ValueError("--max-q does not apply to the %s suite" % args.suite)
    else:
        result = factory()
    for line in result.render():
        _print(line)
    return 0 if result.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qpartition",
        description="Exact generating functions, seed expansions, and the "
        "move bijection for three restricted partition classes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    kr = sub.add_parser("kr", help="emit a class generating function")
    kr.add_argument("--variant", required=True, help="1, 2 or 3")
    kr.add_argument(
        "--form",
        required=True,
        choices=[f.value for f in genfun.Form],
        help="series route; product is the t = 1 identity",
    )
    kr.add_argument("--max-q", type=int, default=40)
    kr.add_argument("--max-t", type=int, default=12)
    kr.add_argument("--format", choices=("table", "json"), default="table")
    kr.set_defaults(fn=_cmd_kr)

    pp = sub.add_parser("ppoly", help="evaluate a base-partition polynomial")
    pp.add_argument("--m1", type=int, required=True)
    pp.add_argument("--m2", type=int, required=True)
    pp.add_argument("--m3", type=int, required=True)
    pp.add_argument("--s", type=int, required=True)
    pp.add_argument("--parity", type=int, choices=(0, 1), default=None)
    pp.add_argument("--format", choices=("table", "json"), default="table")
    pp.set_defaults(fn=_cmd_ppoly)

    de = sub.add_parser("decompose", help="run backward moves to the base")
    de.add_argument("--partition", required=True, help="comma-separated parts")
    de.add_argument("--trace", action="store_true", help="include the move log")
    de.add_argument("--format", choices=("table", "json"), default="json")
    de.set_defaults(fn=_cmd_decompose)

    co = sub.add_parser("compose", help="run forward moves from a triple")
    co.add_argument("--base", required=True, help="bracket structure or plain parts")
    co.add_argument("--mu", required=True, help="comma-separated multiples of 3")
    co.add_argument("--theta", required=True, help="comma-separated offsets")
    co.add_argument("--trace", action="store_true")
    co.add_argument("--format", choices=("table", "json"), default="json")
    co.set_defaults(fn=_cmd_compose)

    se = sub.add_parser("seed-expand", help="expand a seed into its class")
    se.add_argument("--partition", required=True, help="class partition or seed")
    se.add_argument("--variant", required=True, help="1, 2 or 3")
    se.add_argument("--format", choices=("table", "json"), default="json")
    se.set_defaults(fn=_cmd_seed_expand)

    ba = sub.add_parser("bases", help="enumerate base structures")
    ba.add_argument("--m1", type=int, required=True)
    ba.add_argument("--m2", type=int, required=True)
    ba.add_argument("--m3", type=int, required=True)
    ba.add_argument("--max-weight", type=int, default=None)
    ba.add_argument("--format", choices=("table", "json"), default="table")
    ba.set_defaults(fn=_cmd_bases)

    ve = sub.add_parser("verify", help="run a verification suite")
    ve.add_argument("--suite", required=True, choices=sorted(verify.SUITES))
    ve.add_argument("--max-q", type=int, default=None)
    ve.set_defaults(fn=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except ValueError as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 2


if __name__ == "__main__":
    sys.exit(main())
