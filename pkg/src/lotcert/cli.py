"""Command line front end.

Exit codes: 0 success, 1 property failure, 2 parse error, 3 hypothesis
failure (including the non-generic relative case).  All outputs are UTF-8
with LF line endings and are deterministic functions of inputs, flags and
seeds.
"""

from __future__ import annotations

import argparse
import hashlib
import itertools
import json
import sys
from pathlib import Path

from . import arborescence, certify, oracle
from .link_complex import build_link, is_forest, link_to_dot
from .log_model import (
    Log,
    ParseError,
    classify,
    enumerate_sub_lots,
    non_label_vertices,
    parse_log,
    reduce_log,
    reducedness_report,
    serialize_log,
)
from .selection import build_selection_graph, selection_to_dot

EXIT_OK = 0
EXIT_PROPERTY = 1
EXIT_PARSE = 2
EXIT_HYPOTHESIS = 3


def _load(path: str) -> Log:
    return parse_log(Path(path).read_text(encoding="utf-8"))


def _write(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8", newline="\n")


def cmd_validate(args) -> int:
    log = _load(args.file)
    rep = reducedness_report(log)
    cls = classify(log)
    payload = {
        "boundary_reduced": {"ok": rep.boundary_reduced.ok, "witnesses": list(rep.boundary_reduced.witnesses)},
        "interior_reduced": {"ok": rep.interior_reduced.ok, "witnesses": [list(w) for w in rep.interior_reduced.witnesses]},
        "compressed": {"ok": rep.compressed.ok, "witnesses": list(rep.compressed.witnesses)},
        "injective": {"ok": rep.injective.ok, "witnesses": [list(w) for w in rep.injective.witnesses]},
        "log_class": cls.kind,
        "components": cls.components,
    }
    ok = rep.reduced and rep.injective.ok and cls.kind in ("LOT", "LOF")
    if args.json:
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        for name in ("boundary_reduced", "interior_reduced", "compressed", "injective"):
            entry = payload[name]
            status = "ok" if entry["ok"] else f"FAIL {entry['witnesses']}"
            print(f"{name}: {status}")
        print(f"class: {cls.kind} ({cls.components} component(s))")
    return EXIT_OK if ok else EXIT_PROPERTY


def cmd_reduce(args) -> int:
    log = _load(args.file)
    reduced, moves = reduce_log(log)
    text = serialize_log(reduced)
    if args.output:
        _write(Path(args.output), text)
    else:
        sys.stdout.write(text)
    for move in moves:
        print("# " + " ".join(str(x) for x in move), file=sys.stderr)
    return EXIT_OK


def cmd_certify(args) -> int:
    log = _load(args.file)
    cert = certify.certify_relative(log) if args.relative else certify.certify_lof(log)
    text = cert.to_json()
    if args.json:
        _write(Path(args.json), text)
    if args.dot:
        outdir = Path(args.dot)
        angles_raw = cert.witnesses.get("angles")
        angles = None
        if angles_raw:
            angles = {}
            for key, val in angles_raw.items():
                owner, kind = key.rsplit(":", 1)
                angles[(owner, kind)] = val
        partition_raw = cert.witnesses.get("partition")
        partition = None
        if partition_raw:
            partition = {}
            for key, color in partition_raw.items():
                owner, kind = key.rsplit(":", 1)
                partition[(owner, kind)] = color
        _write(outdir / "link.dot", link_to_dot(build_link(log), angles))
        sel = build_selection_graph(log)
        if partition is not None:
            partition = {a.key: partition.get(a.key, "black") for a in sel.arcs}
        _write(outdir / "selection.dot", selection_to_dot(sel, partition))

    top = "relative_coloring_test" if args.relative else "DR_claim"
    verdict = cert.verdicts[top]
    print(f"{top}: {verdict}")
    if not args.json:
        sys.stdout.write(text)
    if verdict is True:
        return EXIT_OK
    if verdict in (certify.HYPOTHESIS_FAILED, certify.NON_GENERIC):
        return EXIT_HYPOTHESIS
    return EXIT_PROPERTY


def cmd_export(args) -> int:
    log = _load(args.file)
    if args.what == "link":
        text = link_to_dot(build_link(log))
    else:
        text = selection_to_dot(build_selection_graph(log))
    if args.dot:
        _write(Path(args.dot), text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_generate(args) -> int:
    outdir = Path(args.out)
    outdir.mkdir(parents=True, exist_ok=True)
    instances = []
    for i in range(args.count):
        instance_seed = args.seed * 1_000_003 + i
        log = oracle.random_reduced_injective_lot(args.n, instance_seed)
        text = serialize_log(log)
        name = f"lot_n{args.n}_s{args.seed}_{i:03d}.lot"
        _write(outdir / name, text)
        rep = reducedness_report(log)
        subs = enumerate_sub_lots(log)
        bad = [s for s in subs if not s.is_boundary_reduced]
        instances.append(
            {
                "file": name,
                "seed": instance_seed,
                "sha256": hashlib.sha256(text.encode("utf-8")).hexdigest(),
                "vertices": len(log.vertices),
                "edges": len(log.edges),
                "flags": {
                    "reduced": rep.reduced,
                    "injective": rep.injective.ok,
                    "log_class": classify(log).kind,
                    "all_sub_lots_boundary_reduced": not bad,
                    "bad_sub_lot_count": len(bad),
                },
            }
        )
    manifest = {
        "schema": 1,
        "n": args.n,
        "count": args.count,
        "seed": args.seed,
        "instances": instances,
    }
    _write(outdir / "manifest.json", json.dumps(manifest, sort_keys=True, indent=2) + "\n")
    print(f"wrote {args.count} instance(s) to {outdir}")
    return EXIT_OK


def cmd_oracle_check(args) -> int:
    log = _load(args.file)
    checks = []

    link = build_link(log)
    g = link.to_multigraph()
    forest_fast = is_forest(g)[0]
    forest_slow = not oracle.enumerate_simple_cycles(g, max_len=len(g.edges))
    checks.append(("forest-vs-cycle-enumeration", forest_fast == forest_slow))

    sel = build_selection_graph(log)
    roots = non_label_vertices(log)
    root = roots[0] if roots else (log.vertices[0] if log.vertices else None)
    if root is not None:
        ok_flow, _ = arborescence.edmonds_condition(sel, root, 2)
        others = [v for v in sel.nodes if v != root]
        ok_sets = all(
            arborescence.cut_delta(sel, combo) >= 2
            for r in range(1, len(others) + 1)
            for combo in itertools.combinations(others, r)
        )
        checks.append(("cut-condition-vs-subset-enumeration", ok_flow == ok_sets))
        pair = arborescence.two_disjoint_branchings(sel, root)
        constructed = not isinstance(pair, arborescence.CutWitness)
        checks.append(("branchings-iff-cut-condition", constructed == ok_flow))
        try:
            brute = oracle.exhaustive_branching_search(sel, root)
            checks.append(("branchings-vs-brute-force", constructed == (brute is not None)))
        except oracle.CapExceeded:
            pass

    try:
        hits = oracle.exhaustive_lbf_search(log)
        cert = certify.certify_lof(log)
        if cert.verdicts["lbf"] in (True, False):
            checks.append(("pipeline-vs-sign-search", cert.verdicts["lbf"] == bool(hits)))
    except oracle.CapExceeded:
        pass

    ok = True
    for name, good in checks:
        print(f"{name}: {'PASS' if good else 'FAIL'}")
        ok = ok and good
    return EXIT_OK if ok else EXIT_PROPERTY


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lotcert",
        description="Asphericity certificates for labeled oriented graph complexes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="reducedness/injectivity report")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("reduce", help="apply reduction moves to a fixed point")
    p.add_argument("file")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("certify", help="produce an asphericity certificate")
    p.add_argument("file")
    p.add_argument("--relative", action="store_true")
    p.add_argument("--json", metavar="OUT")
    p.add_argument("--dot", metavar="DIR")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("export", help="DOT export of the link or selection graph")
    p.add_argument("file")
    p.add_argument("what", choices=["link", "selection"])
    p.add_argument("--dot", metavar="OUT")
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("generate", help="reproducible random LOT corpus")
    p.add_argument("n", type=int)
    p.add_argument("count", type=int)
    p.add_argument("seed", type=int)
    p.add_argument("out")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("oracle-check", help="cross-check fast paths against brute force")
    p.add_argument("file")
    p.set_defaults(func=cmd_oracle_check)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    raise SystemExit(main())
