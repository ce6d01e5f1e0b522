"""Command-line front end.

Every subcommand prints one record.  JSON (default) is a single object
``{"schema_version", "command", "inputs", "results"}``; TSV is a header line
followed by one line per result row.  Counts are printed as decimal strings
in JSON so consumers never lose precision.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Any, Callable, Sequence

from . import blocks, counting, tables
from .partitions import BarPartition, Partition, p_bar_core, p_core, p_quotient

SCHEMA_VERSION = 1
CACHE_ENV = "BLOCKCORE_CACHE_DIR"

CASE_FLAGS = {"alt1": "Alt-1", "spin2": "Spin-2"}
FAMILY_FLAGS = {"Sn": blocks.blocks_Sn, "An": blocks.blocks_An, "SpinAn": blocks.spin_blocks_An}


def _fmt(x: Any) -> Any:
    if x is None:
        return "unspecified"
    return x


def descriptor_record(b: blocks.BlockDescriptor) -> dict[str, Any]:
    return {
        "family": b.family,
        "n": b.n,
        "p": b.p,
        "core": str(b.core),
        "weight": b.weight,
        "self_conjugate": _fmt(b.self_conjugate),
        "sign": _fmt(b.sign),
        "defect": _fmt(b.defect),
        "l": _fmt(b.l),
        "multiplicity": b.multiplicity,
    }


def row_record(r: tables.TableRow) -> dict[str, Any]:
    return {
        "group": r.group_label,
        "p": r.p,
        "ibr_degrees": ",".join(map(str, r.ibr_degrees)),
        "defect": r.defect,
        "lift_profile": r.lift_profile,
        "multiplicity": r.multiplicity,
    }


def hit_record(h: blocks.ClassificationHit) -> dict[str, Any]:
    rec: dict[str, Any] = {"case": h.case_id, "l": h.l}
    if isinstance(h.descriptor, blocks.BlockDescriptor):
        rec.update(descriptor_record(h.descriptor))
    else:
        rec.update(row_record(h.descriptor))
    rec["degrees"] = ",".join(map(str, h.degrees)) if h.degrees else ""
    return rec


# --- argument types ----------------------------------------------------------

def _partition_arg(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative: {text!r}")
    return v


def _bool_arg(text: str) -> bool:
    t = text.lower()
    if t in ("1", "true", "yes", "sc"):
        return True
    if t in ("0", "false", "no"):
        return False
    raise argparse.ArgumentTypeError(f"expected true/false, got {text!r}")


# --- subcommands -------------------------------------------------------------

def cmd_core(args) -> tuple[dict, list[dict]]:
    lam = args.partition
    if args.bar:
        core = p_bar_core(BarPartition(lam.parts), args.p)
    else:
        core = p_core(lam, args.p)
    weight = (lam.size - core.size) // args.p
    inputs = {"partition": str(lam), "p": args.p, "bar": args.bar}
    return inputs, [{"core": str(core), "weight": weight}]


def cmd_quotient(args) -> tuple[dict, list[dict]]:
    cq = p_quotient(args.partition, args.p)
    inputs = {"partition": str(args.partition), "p": args.p}
    result = {
        "core": str(cq.core),
        "quotient": [str(q) for q in cq.quotient],
        "weight": cq.weight,
    }
    return inputs, [result]


# name -> (argument names, argument parsers, function)
COUNT_FNS: dict[str, tuple[tuple[str, ...], tuple[Callable, ...], Callable[..., int]]] = {
    "p": (("w",), (_nonneg,), counting.partition_count),
    "k": (("a", "w"), (_nonneg, _nonneg), counting.k),
    "ksym": (("a", "w"), (_nonneg, _nonneg), counting.k_sym),
    "lSn": (("p", "w"), (_nonneg, _nonneg), counting.l_block_Sn),
    "lAn": (("p", "w", "self_conjugate"), (_nonneg, _nonneg, _bool_arg), counting.l_block_An),
    "lAn2": (("w",), (_nonneg,), counting.l_block_An_p2),
}


def cmd_count(args, parser: argparse.ArgumentParser) -> tuple[dict, list[dict]]:
    names, types, fn = COUNT_FNS[args.fn]
    if len(args.args) != len(names):
        parser.error(f"argument args: --fn {args.fn} takes {len(names)} values ({' '.join(names)})")
    values = []
    for name, typ, raw in zip(names, types, args.args):
        try:
            values.append(typ(raw))
        except argparse.ArgumentTypeError as exc:
            parser.error(f"argument args ({name}): {exc}")
    inputs = {"fn": args.fn, **dict(zip(names, values))}
    return inputs, [{"value": str(fn(*values))}]


def cmd_blocks(args) -> tuple[dict, list[dict]]:
    found = FAMILY_FLAGS[args.family](args.n, args.p)
    inputs = {"family": args.family, "n": args.n, "p": args.p}
    return inputs, [descriptor_record(b) for b in found]


def cmd_classify(args) -> tuple[dict, list[dict]]:
    hits = blocks.classify_single_orbit(args.n, args.p)
    return {"n": args.n, "p": args.p}, [hit_record(h) for h in hits]


def cmd_search(args) -> tuple[dict, list[dict]]:
    ns = blocks.first_occurrences(CASE_FLAGS[args.case], args.max_n, jobs=args.jobs)
    return {"case": args.case, "max_n": args.max_n}, [{"n": n} for n in ns]


def cmd_tables(args) -> tuple[dict, list[dict]]:
    rows = tables.TABLES[args.which]()
    if args.export:
        tables.export(args.which, args.export)
    inputs = {"which": args.which, "export": args.export or ""}
    return inputs, [row_record(r) for r in rows]


# --- output ------------------------------------------------------------------

def render(command: str, inputs: dict, results: list[dict], fmt: str) -> str:
    if fmt == "json":
        record = {
            "schema_version": SCHEMA_VERSION,
            "command": command,
            "inputs": inputs,
            "results": results,
        }
        return json.dumps(record, indent=2) + "\n"
    if not results:
        return ""
    header = list(results[0])
    lines = ["\t".join(header)]
    for rec in results:
        cells = []
        for key in header:
            v = rec[key]
            if isinstance(v, list):
                v = ";".join(v)
            elif isinstance(v, bool):
                v = str(v).lower()
            cells.append(str(v))
        lines.append("\t".join(cells))
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="blockcore", description=__doc__.splitlines()[0])
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("json", "tsv"), default="json")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("core", parents=[fmt], help="p-core or p-bar-core of a partition")
    p.add_argument("--partition", type=_partition_arg, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--bar", action="store_true")

    p = sub.add_parser("quotient", parents=[fmt], help="p-core, p-quotient and weight")
    p.add_argument("--partition", type=_partition_arg, required=True)
    p.add_argument("--p", type=int, required=True)

    p = sub.add_parser("count", parents=[fmt], help="evaluate a counting function")
    p.add_argument("--fn", choices=tuple(COUNT_FNS), required=True)
    p.add_argument("args", nargs="*")

    p = sub.add_parser("blocks", parents=[fmt], help="list block descriptors")
    p.add_argument("--family", choices=tuple(FAMILY_FLAGS), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=int, required=True)

    p = sub.add_parser("classify", parents=[fmt], help="single-orbit blocks for (n, p)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=int, required=True)

    p = sub.add_parser("search", parents=[fmt], help="degrees n where a case occurs")
    p.add_argument("--case", choices=tuple(CASE_FLAGS), required=True)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("tables", parents=[fmt], help="static sporadic / exceptional rows")
    p.add_argument("--which", choices=tuple(tables.TABLES), required=True)
    p.add_argument("--export", metavar="PATH")
    return parser


def _cache_path() -> Path | None:
    d = os.environ.get(CACHE_ENV)
    return Path(d) / counting.CACHE_FILE if d else None


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cache_path = _cache_path()
    if cache_path is not None:
        counting.default_cache().load(cache_path)
    try:
        if args.command == "count":
            inputs, results = cmd_count(args, parser)
        else:
            handler = globals()[f"cmd_{args.command}"]
            inputs, results = handler(args)
    except ValueError as exc:
        print(f"blockcore {args.command}: error: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(render(args.command, inputs, results, args.format))
    if cache_path is not None:
        try:
            counting.default_cache().dump(cache_path)
        except OSError as exc:
            print(f"blockcore: warning: could not write cache: {exc}", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
