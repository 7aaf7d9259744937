"""Command-line entry point.

Subcommands: ``group make``, ``con``, ``interval``, ``verify``, ``witness``.
Exit codes: 0 for success / PASS reports, 1 for FAIL reports, 2 for usage or
input errors.  Reports are reproducible from the argument list alone (timing
fields aside).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Optional, Sequence

from .congruence import (ORACLE_SIZE_BOUND, all_congruences, congruences_oracle,
                         lattice_partitions)
from .construct import GroupSpec, regular_action
from .io import FormatError, load_algebra, load_group, save_algebra, save_group
from .perm import interval as subgroup_interval
from .verify import (check_lemma, check_theorem1, check_theorem2,
                     minimal_representation)


class UsageError(Exception):
    pass


def _threads_from(args) -> int:
    raw = args.threads if args.threads is not None else os.environ.get("MNLAB_THREADS", "1")
    try:
        n = int(raw)
    except ValueError:
        raise UsageError(f"--threads: expected an integer, got {raw!r}")
    if n < 1:
        raise UsageError(f"--threads: must be >= 1, got {n}")
    return n


def _emit(payload: dict, out: Optional[str]) -> None:
    text = json.dumps(payload, indent=2, sort_keys=True)
    if out:
        Path(out).write_text(text + "\n")
    print(text)


def _cmd_group(args) -> int:
    if args.action != "make":
        raise UsageError(f"unknown group action {args.action!r}")
    kind = args.kind
    if kind == "cyclic":
        if args.n is None:
            raise UsageError("--kind cyclic requires --n")
        spec = GroupSpec("cyclic", args.n)
    elif kind == "dihedral":
        if args.m is None:
            raise UsageError("--kind dihedral requires --m")
        spec = GroupSpec("dihedral", args.m)
    elif kind == "symmetric":
        if args.n is None:
            raise UsageError("--kind symmetric requires --n")
        spec = GroupSpec("symmetric", args.n)
    elif kind == "klein":
        spec = GroupSpec("klein")
    elif kind == "product":
        if not (args.left and args.right):
            raise UsageError("--kind product requires --left and --right")
        spec = GroupSpec("direct_product",
                         factors=(_parse_factor(args.left), _parse_factor(args.right)))
    else:
        raise UsageError(f"unknown kind {args.kind!r}")
    try:
        G = spec.build()
    except ValueError as exc:
        raise UsageError(str(exc))
    if args.regular:
        G = regular_action(G)
    name = args.name or _spec_name(spec, args.regular)
    if args.out:
        save_group(G, args.out, name)
    print(json.dumps({"format": 1, "name": name, "degree": G.degree,
                      "order": G.order, "written": args.out}, sort_keys=True))
    return 0


def _parse_factor(text: str) -> GroupSpec:
    kind, _, param = text.partition(":")
    if kind == "klein":
        return GroupSpec("klein")
    if kind in ("cyclic", "dihedral", "symmetric"):
        try:
            return GroupSpec(kind, int(param))
        except ValueError:
            raise UsageError(f"bad factor parameter in {text!r}")
    raise UsageError(f"bad factor {text!r}; use kind:param, e.g. cyclic:3")


def _spec_name(spec: GroupSpec, regular: bool) -> str:
    if spec.kind == "cyclic":
        base = f"Z{spec.n}"
    elif spec.kind == "dihedral":
        base = f"D{2 * spec.n}"
    elif spec.kind == "symmetric":
        base = f"S{spec.n}"
    elif spec.kind == "klein":
        base = "V4"
    else:
        a, b = spec.factors
        base = f"{_spec_name(a, False)}x{_spec_name(b, False)}"
    return base + ("-regular" if regular else "")


def _cmd_con(args) -> int:
    A = load_algebra(args.algebra)
    if args.oracle and A.size > ORACLE_SIZE_BOUND:
        raise UsageError(f"{args.algebra}: --oracle is limited to carrier"
                         f" size {ORACLE_SIZE_BOUND}, got {A.size}")
    L = all_congruences(A)
    payload = {
        "format": 1,
        "algebra": {"size": A.size, "ops": len(A.ops), "name": A.name},
        "congruences": [list(p.rgs) for p in lattice_partitions(L)],
        "lattice": L.shape_report(),
    }
    if args.oracle:
        payload["oracle"] = {"checked": True,
                             "match": congruences_oracle(A) == L}
    else:
        payload["oracle"] = {"checked": False}
    if args.dot:
        Path(args.dot).write_text(L.to_dot() + "\n")
    _emit(payload, args.out)
    if args.oracle and not payload["oracle"]["match"]:
        return 1
    return 0


def _cmd_interval(args) -> int:
    G = load_group(args.group)
    H = load_group(args.subgroup)
    if not H.is_subgroup_of(G):
        raise UsageError(f"{args.subgroup}: not a subgroup of {args.group}"
                         f" (degrees {H.degree}/{G.degree},"
                         f" orders {H.order}/{G.order})")
    members = subgroup_interval(G, H)
    from .lattice import FinLattice
    L = FinLattice.from_inclusion(
        members, lambda a, b: a._eset <= b._eset,
        [f"o{K.order}" for K in members])
    payload = {"format": 1,
               "interval": {"group_order": G.order, "subgroup_order": H.order,
                            "index": G.order // H.order,
                            "subgroup_orders": [K.order for K in members]},
               "lattice": L.shape_report()}
    if args.dot:
        Path(args.dot).write_text(L.to_dot() + "\n")
    _emit(payload, args.out)
    return 0


def _cmd_verify(args) -> int:
    _threads_from(args)  # validated; sweeps run sequentially
    if args.what == "lemma":
        report = check_lemma(max_order=args.max_order)
    elif args.what == "theorem1":
        if args.p is None:
            raise UsageError("verify theorem1 requires --p")
        if args.p == 3 and not args.slow:
            raise UsageError("verify theorem1 --p 3 sweeps degrees 6 and 7;"
                             " pass --slow to confirm the slow tier")
        report = check_theorem1(args.p)
    elif args.what == "theorem2":
        if args.p is None or args.max_size is None:
            raise UsageError("verify theorem2 requires --p and --max-size")
        report = check_theorem2(args.p, args.max_size)
    else:
        raise UsageError(f"unknown sweep {args.what!r}")
    _emit(report.to_dict(), args.out)
    return 0 if report.passed else 1


def _cmd_witness(args) -> int:
    A, L = minimal_representation(args.p)
    if args.out:
        save_algebra(A, args.out)
    print(json.dumps({"format": 1, "name": A.name, "size": A.size,
                      "ops": len(A.ops), "lattice": L.shape_report(),
                      "written": args.out}, sort_keys=True))
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="mnlab",
        description="Finite group and congruence-lattice laboratory.")
    sub = ap.add_subparsers(dest="command", required=True)

    g = sub.add_parser("group", help="construct groups and write group files")
    g.add_argument("action", choices=["make"])
    g.add_argument("--kind", required=True,
                   choices=["cyclic", "dihedral", "symmetric", "klein", "product"])
    g.add_argument("--n", type=int)
    g.add_argument("--m", type=int)
    g.add_argument("--left", help="product factor, e.g. cyclic:3")
    g.add_argument("--right", help="product factor, e.g. cyclic:2")
    g.add_argument("--regular", action="store_true",
                   help="emit the regular action instead of the natural one")
    g.add_argument("--name")
    g.add_argument("--out")
    g.set_defaults(func=_cmd_group)

    c = sub.add_parser("con", help="congruence lattice of an algebra file")
    c.add_argument("algebra")
    c.add_argument("--oracle", action="store_true",
                   help="cross-check against the brute-force partition filter")
    c.add_argument("--dot", help="write the Hasse diagram in DOT syntax")
    c.add_argument("--out")
    c.set_defaults(func=_cmd_con)

    i = sub.add_parser("interval", help="subgroup interval I[H,G] as a lattice report")
    i.add_argument("group")
    i.add_argument("subgroup")
    i.add_argument("--dot")
    i.add_argument("--out")
    i.set_defaults(func=_cmd_interval)

    v = sub.add_parser("verify", help="run a verification sweep")
    v.add_argument("what", choices=["lemma", "theorem1", "theorem2"])
    v.add_argument("--max-order", type=int, default=24)
    v.add_argument("--p", type=int)
    v.add_argument("--max-size", type=int)
    v.add_argument("--slow", action="store_true",
                   help="allow the slow tier (degree-6/7 enumeration)")
    v.add_argument("--threads", help="worker hint; merged output is"
                                     " deterministic (MNLAB_THREADS fallback)")
    v.add_argument("--out")
    v.set_defaults(func=_cmd_verify)

    w = sub.add_parser("witness", help="write the minimal M_{p+1} witness algebra")
    w.add_argument("--p", type=int, required=True)
    w.add_argument("--out")
    w.set_defaults(func=_cmd_witness)

    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"mnlab: error: {exc}", file=sys.stderr)
        return 2
    except (FormatError, FileNotFoundError, json.JSONDecodeError) as exc:
        print(f"mnlab: error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"mnlab: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
