"""Command-line front end: catalog listing, computation, verification, reports."""

from __future__ import annotations

import argparse
import json
import sys

from .algebra import BE, POLY2
from .catalog import CatalogError, load_catalog
from .cohomology import Engine, OutOfScopeError, UnknownGroupError, default_dmax
from .gf import GFError, named_subgroup
from .invariants import invariant_poincare
from .splitting import full_splitting
from .verify import verify_all, verify_group

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2


def _emit_series(payload: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(payload, sort_keys=True))
    elif fmt == "csv":
        print("degree,dim")
        for d, n in zip(payload["degrees"], payload["dims"]):
            print(f"{d},{n}")
        for key in ("odd", "nilpotent"):
            if key in payload:
                for d in sorted(payload[key], key=int):
                    print(f"{key}:{d},{payload[key][d]}")
    else:
        print(f"# {payload.get('group', payload.get('name'))} (p={payload['prime']})")
        degrees, dims = payload["degrees"], payload["dims"]
        nonzero = [(d, n) for d, n in zip(degrees, dims) if n]
        print("degree:dim " + " ".join(f"{d}:{n}" for d, n in nonzero))
        for key in ("odd", "nilpotent"):
            if key in payload:
                entries = " ".join(f"{d}:{payload[key][d]}"
                                   for d in sorted(payload[key], key=int))
                print(f"{key} degree:dim {entries or '(all zero)'}")
        if payload.get("note"):
            print(f"note: {payload['note']}")


def cmd_catalog(args, engine: Engine) -> int:
    rows = []
    for gid in sorted(engine.catalog):
        d = engine.catalog[gid]
        if args.prime and d.p != args.prime:
            continue
        rows.append({
            "group": gid, "prime": d.p, "sylow": d.sylow,
            "weyl_order": d.weyl.order,
            "classes": len(d.classes),
            "radical": len(d.radical_classes),
            "exotic": d.exotic,
        })
    if args.format == "json":
        print(json.dumps(rows, sort_keys=True))
    elif args.format == "csv":
        print("group,prime,sylow,weyl_order,classes,radical,exotic")
        for r in rows:
            print(",".join(str(r[k]) for k in
                           ("group", "prime", "sylow", "weyl_order", "classes",
                            "radical", "exotic")))
    else:
        for r in rows:
            print(f"{r['group']:12s} p={r['prime']:<3d} sylow={r['sylow']} "
                  f"|W|={r['weyl_order']:<4d} classes={r['classes']} "
                  f"radical={r['radical']}" + ("  exotic" if r["exotic"] else ""))
    return EXIT_OK


def cmd_invariants(args, engine: Engine) -> int:
    try:
        group = named_subgroup(args.group, args.prime)
    except GFError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    alg = BE(args.prime) if args.algebra == "BE" else POLY2(args.prime)
    d_max = args.max_degree or default_dmax(args.prime)
    if d_max % 2:
        print("error: --max-degree must be even", file=sys.stderr)
        return EXIT_USAGE
    dims = invariant_poincare(group, alg, d_max)
    _emit_series({"name": f"{args.group}@{args.algebra}", "group": args.group,
                  "prime": args.prime, "algebra": args.algebra,
                  "degrees": list(range(0, d_max + 1, 2)), "dims": dims},
                 args.format)
    return EXIT_OK


def cmd_cohomology(args, engine: Engine) -> int:
    try:
        desc = engine.descriptor(args.group)
    except UnknownGroupError:
        print(f"error: unknown group {args.group!r}", file=sys.stderr)
        return EXIT_USAGE
    d_max = args.max_degree or default_dmax(desc.p)
    if d_max % 2 and not args.odd:
        print("error: --max-degree must be even "
              "(odd degrees are reported under --odd)", file=sys.stderr)
        return EXIT_USAGE
    even_max = d_max - d_max % 2
    try:
        tab = engine.table(desc, d_max, odd=args.odd, nilpotent=args.nilpotent)
        tab.even = tab.even[: even_max // 2 + 1]
    except OutOfScopeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    payload = {"group": desc.gid, "prime": desc.p,
               "degrees": list(range(0, even_max + 1, 2)), "dims": tab.even}
    if args.odd:
        payload["odd"] = {str(k): v for k, v in sorted(tab.odd.items())}
    if args.nilpotent:
        payload["nilpotent"] = {str(k): v for k, v in sorted(tab.nilpotent.items())}
    if tab.note:
        payload["note"] = tab.note
    _emit_series(payload, args.format)
    return EXIT_OK


def cmd_splitting(args, engine: Engine) -> int:
    try:
        desc = engine.descriptor(args.group)
    except UnknownGroupError:
        print(f"error: unknown group {args.group!r}", file=sys.stderr)
        return EXIT_USAGE
    try:
        tab = full_splitting(engine, desc)
    except OutOfScopeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    payload = {"group": desc.gid, "prime": desc.p, **tab.as_lists(),
               "wedge": tab.wedge_string()}
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    elif args.format == "csv":
        print("kind,q,k,count")
        for q, k, n in payload["dominant"]:
            print(f"X,{q},{k},{n}")
        for k, m in payload["l2"]:
            print(f"L2,,{k},{m}")
        for k, m in payload["l1"]:
            print(f"L1,,{k},{m}")
    else:
        print(f"{desc.gid}: {payload['wedge']}")
    return EXIT_OK


def cmd_verify(args, engine: Engine) -> int:
    if not args.all and not args.group:
        print("error: give --group ID or --all", file=sys.stderr)
        return EXIT_USAGE
    if args.group and args.group not in engine.catalog:
        print(f"error: unknown group {args.group!r}", file=sys.stderr)
        return EXIT_USAGE
    reports = verify_all(engine) if args.all else \
        [verify_group(engine, engine.descriptor(args.group))]
    if args.format == "json":
        print(json.dumps([r.as_dict() for r in reports], sort_keys=True))
    elif args.format == "csv":
        print("group,check,ok")
        for r in reports:
            for c in r.checks:
                print(f"{r.gid},{c.name},{c.ok}")
    else:
        for r in reports:
            print(f"{r.gid:12s} {r.status}")
            for c in r.checks:
                mark = "ok " if c.ok else "FAIL"
                print(f"    [{mark}] {c.name}: {c.detail}")
    return EXIT_OK if all(r.status == "ok" for r in reports) else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="plfg",
        description="Exact invariant rings, cohomology and stable splitting "
                    "tables for the catalogued rank-two p-local data.")
    sub = ap.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("text", "json", "csv"), default="text")

    p = sub.add_parser("catalog", help="list catalogued groups")
    p.add_argument("action", choices=("list",))
    p.add_argument("--prime", type=int)
    add_format(p)
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("invariants", help="invariant series of a named matrix group")
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("--group", required=True, help="named subgroup, e.g. SD16 or 3D8")
    p.add_argument("--algebra", choices=("BE", "BA"), default="BE")
    p.add_argument("--max-degree", type=int)
    add_format(p)
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("cohomology", help="even (and odd/nilpotent) dimensions")
    p.add_argument("--group", required=True)
    p.add_argument("--max-degree", type=int)
    p.add_argument("--odd", action="store_true")
    p.add_argument("--nilpotent", action="store_true")
    add_format(p)
    p.set_defaults(func=cmd_cohomology)

    p = sub.add_parser("splitting", help="stable splitting multiplicity table")
    p.add_argument("--group", required=True)
    add_format(p)
    p.set_defaults(func=cmd_splitting)

    p = sub.add_parser("verify", help="check shipped expectations against computation")
    p.add_argument("--group")
    p.add_argument("--all", action="store_true")
    add_format(p)
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        engine = Engine(load_catalog())
    except CatalogError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return args.func(args, engine)


if __name__ == "__main__":
    sys.exit(main())
