"""Command-line front door.

Exit codes: 0 success, 1 domain/parse error (including failed verify),
2 usage error (argparse), 3 size/budget error.  All numeric output goes
through JSON with explicit keys.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .enumeration import enumerate_graphs
from .errors import BudgetError, DomainError, ParseError, SizeError
from .extremal import DEFAULT_BUDGET, biex, extremal_number
from .family import (GraphFamily, FamilyMember, chromatic_excess,
                     decomposition_family, is_edge_critical,
                     minimal_subfamily)
from .graph import Graph, named_graph
from .graph6 import (emit_graph6, parse_graph6, read_graph6_file,
                     write_graph6_file)
from .packing import max_packing, phi_exact, phi_max_over_n
from .pipeline import (PipelineParams, decompose, emit_decomposition,
                       lower_bound_construction, parse_decomposition,
                       report_json, verify_decomposition)
from .selftest import run_selftest


def _resolve_pattern(spec: str) -> Graph:
    try:
        return named_graph(spec)
    except DomainError:
        return parse_graph6(spec)


def _load_graph(path: str) -> Graph:
    graphs = read_graph6_file(path)
    if len(graphs) != 1:
        raise DomainError(f"{path}: expected exactly one graph, "
                          f"found {len(graphs)}")
    return graphs[0]


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


def _family_json(fam: GraphFamily) -> dict:
    return {"source": fam.source, "minimal": fam.minimal,
            "member_count": len(fam.members),
            "members": [emit_graph6(m.graph) for m in fam.members]}


def _cache_path(args) -> str | None:
    return getattr(args, "cache_path", None) or os.environ.get("HDECOMP_CACHE")


def cmd_family(args) -> int:
    h = _resolve_pattern(args.h)
    fam = decomposition_family(h)
    fstar = minimal_subfamily(fam)
    _emit({"family": _family_json(fam), "minimal_subfamily": _family_json(fstar)})
    if args.out:
        for tag, f in (("family", fam), ("minimal", fstar)):
            base = f"{args.out}.{tag}"
            write_graph6_file(base + ".g6", f.graphs())
            with open(base + ".json", "w", encoding="ascii") as fh:
                json.dump({"source": f.source, "minimal": f.minimal,
                           "member_count": len(f.members)}, fh, sort_keys=True)
                fh.write("\n")
    return 0


def cmd_sigma(args) -> int:
    _emit({"sigma": chromatic_excess(_resolve_pattern(args.h))})
    return 0


def cmd_critical(args) -> int:
    _emit({"edge_critical": is_edge_critical(_resolve_pattern(args.h))})
    return 0


def cmd_ex(args) -> int:
    graphs = read_graph6_file(args.family)
    members = tuple(FamilyMember(g, tuple(range(g.n)), (), (0, 0))
                    for g in graphs)
    fam = GraphFamily(members, False, f"file:{args.family}")
    rec = extremal_number(args.n, fam, budget=args.budget,
                          cache_path=_cache_path(args))
    _emit({"n": rec.n, "value": rec.value, "status": rec.status,
           "witness_graph6": emit_graph6(rec.witness)})
    return 0


def cmd_biex(args) -> int:
    h = _resolve_pattern(args.h)
    rec = biex(args.n, h, budget=args.budget, cache_path=_cache_path(args))
    _emit({"n": rec.n, "value": rec.value, "status": rec.status,
           "witness_graph6": emit_graph6(rec.witness)})
    return 0


def cmd_pack(args) -> int:
    g = _load_graph(args.g)
    h = _resolve_pattern(args.h)
    packing = max_packing(g, h)
    _emit({"size": len(packing.copies),
           "copies": [list(e.map) for e in packing.copies]})
    return 0


def cmd_phi(args) -> int:
    g = _load_graph(args.g)
    h = _resolve_pattern(args.h)
    t, dec = phi_exact(g, h)
    _emit({"t": t, "copies": len(dec.copies), "singles": len(dec.singles)})
    if args.out:
        _write_text(args.out, emit_decomposition(dec))
    return 0


def cmd_phi_n(args) -> int:
    h = _resolve_pattern(args.h)
    value, witnesses, scanned = phi_max_over_n(args.n, h)
    _emit({"n": args.n, "pattern_graph6": emit_graph6(h), "value": value,
           "witnesses": [emit_graph6(w) for w in witnesses],
           "graphs_scanned": scanned})
    return 0


def cmd_construct(args) -> int:
    h = _resolve_pattern(args.h)
    g, cert = lower_bound_construction(args.n, h, budget=args.budget)
    _emit({"graph6": emit_graph6(g), "certificate": cert})
    if args.out:
        write_graph6_file(args.out, [g])
    return 0


def cmd_decompose(args) -> int:
    g = _load_graph(args.g)
    h = _resolve_pattern(args.h)
    params = PipelineParams(beta=args.beta, gamma=args.gamma,
                            step1_threshold=args.threshold,
                            step2_budget=args.step2_budget, seed=args.seed)
    dec, report = decompose(g, h, params)
    print(report_json(report))
    if args.out:
        _write_text(args.out + ".dec", emit_decomposition(dec))
        _write_text(args.out + ".report.json", report_json(report) + "\n")
    return 0


def cmd_verify(args) -> int:
    g = _load_graph(args.g)
    with open(args.d, "r", encoding="ascii") as fh:
        dec = parse_decomposition(fh.read(), g)
    ok, why = verify_decomposition(g, dec)
    _emit({"valid": ok, "violation": why})
    return 0 if ok else 1


def cmd_enumerate(args) -> int:
    for g in enumerate_graphs(args.n):
        print(emit_graph6(g))
    return 0


def cmd_selftest(args) -> int:
    return 0 if run_selftest() else 1


def _write_text(path: str, text: str) -> None:
    tmp = path + ".tmp"
    with open(tmp, "w", encoding="ascii", newline="\n") as fh:
        fh.write(text)
    os.replace(tmp, path)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="hdecomp",
        description="Edge decompositions into pattern copies and singles: "
                    "families, extremal numbers, packings, pipeline.")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, fn, **flags):
        p = sub.add_parser(name)
        for flag, kw in flags.items():
            p.add_argument("--" + flag.replace("_", "-"), **kw)
        p.add_argument("--threads", type=int, default=1,
                       help="maximum worker count")
        p.set_defaults(fn=fn)
        return p

    H = {"required": True, "metavar": "PATTERN",
         "help": "builtin name (k3, k4, c5, c7, bowtie, k222) or graph6"}
    N = {"type": int, "required": True}
    BUDGET = {"type": int, "default": DEFAULT_BUDGET}

    add("family", cmd_family, h=H, out={"default": None})
    add("sigma", cmd_sigma, h=H)
    add("critical", cmd_critical, h=H)
    add("ex", cmd_ex, n=N, family={"required": True}, budget=BUDGET,
        cache_path={"default": None})
    add("biex", cmd_biex, h=H, n=N, budget=BUDGET,
        cache_path={"default": None})
    add("pack", cmd_pack, g={"required": True}, h=H)
    add("phi", cmd_phi, g={"required": True}, h=H, out={"default": None})
    add("phi-n", cmd_phi_n, h=H, n=N)
    add("construct", cmd_construct, h=H, n=N,
        budget={"type": int, "default": None}, out={"default": None})
    add("decompose", cmd_decompose, g={"required": True}, h=H,
        beta={"type": float, "default": 0.25},
        gamma={"type": float, "default": 0.05},
        threshold={"type": int, "default": None},
        step2_budget={"type": int, "default": 200_000},
        seed={"type": int, "default": 0}, out={"default": None})
    add("verify", cmd_verify, g={"required": True}, d={"required": True})
    add("enumerate", cmd_enumerate, n=N)
    add("selftest", cmd_selftest)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (DomainError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (SizeError, BudgetError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
