"""Command-line interface.

Subcommands: group, ds, design, youden, ta, family, catalog, report.
Exit status: 0 success/verified, 1 verification rejection (witness on
stderr), 2 usage or configuration error. All output is deterministic for
fixed inputs and flags, independent of --workers.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import arrays, catalog, designs, diffsets, family
from .errors import (BudgetExceededError, UnsupportedUError, VerificationRejection)
from .groups import FiniteGroup, group_from_spec


class SystemExit2(Exception):
    """Usage error carrying a message for stderr."""


def _load_set(args) -> diffsets.DifferenceSet:
    """Resolve --set catalog:ID | --set file.json | --group SPEC --members LIST."""
    spec = getattr(args, "set", None)
    if spec:
        if spec.startswith("catalog:"):
            return catalog.load_entry(spec.split(":", 1)[1])[1]
        data = json.loads(Path(spec).read_text())
        group_ref = data["group"]
        group = (catalog.load_entry(group_ref.split(":", 1)[1])[0]
                 if isinstance(group_ref, str) and group_ref.startswith("catalog:")
                 else group_from_spec(group_ref) if isinstance(group_ref, str)
                 else FiniteGroup.from_json(group_ref))
        return diffsets.verify_difference_set(group, data["members"],
                                              allow_trivial=bool(data.get("allow_trivial")))
    if not getattr(args, "group", None) or not getattr(args, "members", None):
        raise SystemExit2("need --set, or both --group and --members")
    group = group_from_spec(args.group)
    members = [m for m in args.members.split(",") if m]
    return diffsets.verify_difference_set(group, members,
                                          allow_trivial=getattr(args, "allow_trivial", False))


def _emit_array(a: arrays.RowColumnArray, fmt: str):
    if fmt == "json":
        print(json.dumps(a.to_json(), indent=2, sort_keys=True))
    elif fmt == "csv":
        print(a.to_csv(), end="")
    else:
        print(a.to_grid())


def _set_id_for_row(args) -> tuple[str, str]:
    spec = getattr(args, "set", None)
    if spec and spec.startswith("catalog:"):
        entry = catalog.get_entry(spec.split(":", 1)[1])
        return entry.group_label, entry.set_label
    if spec:
        return Path(spec).stem, "-"
    return getattr(args, "group", "?"), "-"


def _fmt_count(n: int) -> str:
    return str(n) if n else "-"


def _column_index(group: FiniteGroup, spec: str) -> int:
    if spec in ("e", "1") and spec not in group._name_to_index:
        return group.identity
    return group.index_of(spec)


# -- subcommand handlers -------------------------------------------------------

def _cmd_group_show(args) -> int:
    group = group_from_spec(args.spec)
    print(json.dumps(group.to_json(), sort_keys=True))
    return 0


def _cmd_ds_verify(args) -> int:
    d = _load_set(args)
    print(f"({d.v},{d.k},{d.lam})")
    return 0


def _cmd_ds_search(args) -> int:
    group = group_from_spec(args.group)
    found = diffsets.search_difference_sets(group, args.k, args.lam,
                                            normalize=not args.no_normalize,
                                            cap=args.cap, workers=args.workers)
    print(f"{len(found)} difference sets ({group.order},{args.k},{args.lam}) "
          f"in {group.name}")
    for i, d in enumerate(found):
        print(f"{i}: {','.join(d.member_names)}")
    return 0


def _cmd_ds_report(args) -> int:
    d = _load_set(args)
    rep = diffsets.multiplier_report(d)
    group_label, set_label = _set_id_for_row(args)
    print(f"{group_label} {set_label} {_fmt_count(rep.reversible_translate_count)} "
          f"{_fmt_count(rep.weak_minus_one_count)} {rep.left_equals_right_count_s}")
    return 0


def _cmd_design_dev(args) -> int:
    d = _load_set(args)
    bd = designs.develop(d)
    v, _, _, k, lam = bd.params
    for block in bd.blocks:
        print(",".join(d.group.names[p] for p in block))
    print(f"({v},{k},{lam}) SBIBD with {len(bd.blocks)} blocks")
    return 0


def _cmd_design_fourcycle(args) -> int:
    d = _load_set(args)
    rep = designs.four_cycle_blocks(d)
    print(f"sizes: {rep.sizes}")
    if rep.degenerate:
        print("degenerate: every left translate is a right translate (B1 = dev(D))")
        return 0
    names = ("B1+B2", "B2+B3", "B3+B4", "B4+B1")
    ok = True
    for label, params in zip(names, rep.union_params):
        if params:
            print(f"{label}: ({params[0]},{params[1]},{params[2]}) SBIBD")
        else:
            print(f"{label}: not an SBIBD")
            ok = False
    return 0 if ok else 1


def _cmd_youden_build(args) -> int:
    d = _load_set(args)
    y = designs.build_youden(d)
    v, k, lam = designs.verify_youden(y)
    if args.format == "json":
        print(json.dumps({"rows": [d.group.names[i] for i in y.row_elements],
                          "cols": list(d.group.names),
                          "cells": [[d.group.names[c] for c in row] for row in y.cells]},
                         sort_keys=True))
    else:
        print(y.to_grid())
    print(f"{k}x{v} Youden square over a ({v},{k},{lam}) SBIBD")
    return 0


def _cmd_ta_build(args) -> int:
    d = _load_set(args)
    y = designs.build_youden(d)
    col = _column_index(d.group, args.column)
    rl = designs.delete_column(y, col)
    if args.rl:
        out, verdict = rl, arrays.verify_array(rl)
    else:
        out = arrays.rl_to_standard(rl)
        verdict = arrays.verify_array(out)
    _emit_array(out, args.format)
    print(verdict.describe())
    return 0 if verdict.double_array else 1


def _cmd_ta_direct(args) -> int:
    d = _load_set(args)
    a = arrays.direct_construct(d)
    verdict = arrays.verify_array(a)
    _emit_array(a, args.format)
    print(verdict.describe())
    crit = arrays.triple_criterion(d)
    if crit.is_constant:
        print(f"row/column overlap constant: {crit.value}")
    else:
        x, y, count = crit.witness
        print(f"row/column overlap not constant: ({x},{y}) gives {count}")
    return 0 if verdict.double_array else 1


def _cmd_ta_verify(args) -> int:
    path = Path(args.file)
    text = path.read_text()
    if path.suffix == ".json":
        a = arrays.RowColumnArray.from_json(json.loads(text))
    else:
        a = arrays.RowColumnArray.from_grid(text, form=args.form)
    verdict = arrays.verify_array(a)
    print(verdict.describe())
    if args.expect == "triple" and not verdict.triple_array:
        prefix = "R" if a.form == "rl" else ""
        failed = (f"{prefix}TA1" if not verdict.is_equireplicate
                  else f"{prefix}TA2" if verdict.lambda_rr is None
                  else f"{prefix}TA3" if verdict.lambda_cc is None
                  else f"{prefix}TA4")
        print(f"{failed} violated", file=sys.stderr)
        return 1
    if args.expect == "double" and not verdict.double_array:
        print("double-array conditions violated", file=sys.stderr)
        return 1
    return 0


def _cmd_family_gen(args) -> int:
    if args.emit_array:
        array, verdict, member = family.family_triple_array(args.u)
    else:
        member = family.generate_family_member(args.u)
        array = verdict = None
    d = member.diffset
    print(f"u={args.u}: ({d.v},{d.k},{d.lam}) reversible difference set "
          f"in {d.group.name}")
    print(f"provenance: {json.dumps(member.provenance.to_json(), sort_keys=True)}")
    if args.emit_array:
        _emit_array(array, args.format)
        print(verdict.describe())
    return 0


def _cmd_catalog_list(args) -> int:
    for e in catalog.list_entries():
        v, k, lam = e.expected_params
        print(f"{e.id}: ({v},{k},{lam}) in {e.group_label} -- {e.note}")
    return 0


def _cmd_catalog_show(args) -> int:
    entry = catalog.get_entry(args.id)
    group, d = entry.load()
    print(json.dumps({"group": group.to_json(), "members": list(d.member_names),
                      "params": list(d.params)}, sort_keys=True))
    return 0


def _cmd_report_tables(args) -> int:
    print("group set reversible weak_mult_-1 left=right")
    specs = args.set or [f"catalog:{e}" for e in catalog.entry_ids()]
    for spec in specs:
        ns = argparse.Namespace(set=spec, group=None, members=None)
        d = _load_set(ns)
        rep = diffsets.multiplier_report(d)
        group_label, set_label = _set_id_for_row(ns)
        print(f"{group_label} {set_label} {_fmt_count(rep.reversible_translate_count)} "
              f"{_fmt_count(rep.weak_minus_one_count)} {rep.left_equals_right_count_s}")
    return 0


def _add_set_args(p: argparse.ArgumentParser, from_ds: bool = False):
    flags = ("--set", "--from-ds") if from_ds else ("--set",)
    p.add_argument(*flags, dest="set", help="catalog:ID or a difference-set JSON file")
    p.add_argument("--group", help="group spec (cyclic:N, abelian:..., metacyclic:..., file)")
    p.add_argument("--members", help="comma-separated element names or words")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="triarray",
                                     description="triple arrays from difference sets")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("group", help="group utilities")
    gsub = p.add_subparsers(dest="sub", required=True)
    g = gsub.add_parser("show", help="emit a group in the JSON interchange format")
    g.add_argument("--spec", required=True)
    g.set_defaults(fn=_cmd_group_show)

    p = sub.add_parser("ds", help="difference sets")
    dsub = p.add_subparsers(dest="sub", required=True)
    g = dsub.add_parser("verify", help="verify a set and print its parameters")
    _add_set_args(g)
    g.add_argument("--allow-trivial", action="store_true")
    g.set_defaults(fn=_cmd_ds_verify)
    g = dsub.add_parser("search", help="exhaustive search for (v,k,lam) sets")
    g.add_argument("--group", required=True)
    g.add_argument("--k", type=int, required=True)
    g.add_argument("--lam", type=int, required=True)
    g.add_argument("--no-normalize", action="store_true",
                   help="do not pin the identity into the candidate sets")
    g.add_argument("--cap", type=int, default=diffsets.DEFAULT_SEARCH_CAP)
    g.add_argument("--workers", type=int, default=None)
    g.set_defaults(fn=_cmd_ds_search)
    g = dsub.add_parser("report", help="multiplier statistics row for one set")
    _add_set_args(g)
    g.set_defaults(fn=_cmd_ds_report)

    p = sub.add_parser("design", help="block designs")
    dsub = p.add_subparsers(dest="sub", required=True)
    g = dsub.add_parser("dev", help="development of a set, verified as an SBIBD")
    _add_set_args(g)
    g.set_defaults(fn=_cmd_design_dev)
    g = dsub.add_parser("fourcycle", help="left/right translate block collections")
    _add_set_args(g)
    g.set_defaults(fn=_cmd_design_fourcycle)

    p = sub.add_parser("youden", help="Youden squares")
    ysub = p.add_subparsers(dest="sub", required=True)
    g = ysub.add_parser("build")
    _add_set_args(g)
    g.add_argument("--format", choices=("grid", "json"), default="grid")
    g.set_defaults(fn=_cmd_youden_build)

    p = sub.add_parser("ta", help="row-column arrays")
    tsub = p.add_subparsers(dest="sub", required=True)
    g = tsub.add_parser("build", help="Youden route: build, delete a column, verify")
    _add_set_args(g, from_ds=True)
    g.add_argument("--column", default="e", help="column to delete (element name, 'e' = identity)")
    g.add_argument("--rl", action="store_true", help="emit the RL form instead of standard")
    g.add_argument("--format", choices=("grid", "json", "csv"), default="grid")
    g.set_defaults(fn=_cmd_ta_build)
    g = tsub.add_parser("direct", help="direct construction A(G, D)")
    _add_set_args(g, from_ds=True)
    g.add_argument("--format", choices=("grid", "json", "csv"), default="grid")
    g.set_defaults(fn=_cmd_ta_direct)
    g = tsub.add_parser("verify", help="verify an array file (JSON or grid)")
    g.add_argument("file")
    g.add_argument("--form", choices=("standard", "rl"), default="standard",
                   help="form to assume for grid files")
    g.add_argument("--expect", choices=("any", "double", "triple"), default="any")
    g.set_defaults(fn=_cmd_ta_verify)

    p = sub.add_parser("family", help="reversible Hadamard family")
    fsub = p.add_subparsers(dest="sub", required=True)
    g = fsub.add_parser("gen")
    g.add_argument("--u", type=int, required=True)
    g.add_argument("--emit-array", action="store_true")
    g.add_argument("--format", choices=("grid", "json", "csv"), default="grid")
    g.set_defaults(fn=_cmd_family_gen)

    p = sub.add_parser("catalog", help="shipped difference sets")
    csub = p.add_subparsers(dest="sub", required=True)
    g = csub.add_parser("list")
    g.set_defaults(fn=_cmd_catalog_list)
    g = csub.add_parser("show")
    g.add_argument("id")
    g.set_defaults(fn=_cmd_catalog_show)

    p = sub.add_parser("report", help="multiplier statistics tables")
    rsub = p.add_subparsers(dest="sub", required=True)
    g = rsub.add_parser("tables")
    g.add_argument("--set", action="append",
                   help="set spec (repeatable); default: every catalog entry")
    g.set_defaults(fn=_cmd_report_tables)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except VerificationRejection as exc:
        print(f"rejected: {exc}", file=sys.stderr)
        return 1
    except (UnsupportedUError, BudgetExceededError, SystemExit2, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
