"""Command-line front end.

Subcommands: invariants, reg, verify {chain|compatible|iv-lemma|recursion},
gen, search.  Exit codes: 0 all checks pass, 1 a mathematical violation
was found (counterexample printed), 2 operational error (bad input,
resource cap, field disagreement).  Machine output (--format json) is a
single versioned report object per run.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from . import __version__, generators
from .compatibility import (
    NAMED_MAPS,
    bound_chain,
    check_compatibility,
    check_iv_lemma,
    check_regularity_recursion,
    memoized,
    nonfree_vertex_failures,
    regularity_value,
)
from .errors import FieldDisagreementError, ParseError, ResourceLimitError
from .graphio import decode_graph6, encode_graph6, format_edge_list, parse_edge_list
from .graphs import Graph
from .invariants import eta, longest_induced_path, maximal_cliques
from .regularity import regularity_bei, variable_name

SCHEMA = "beibounds/report-v1"


# -- input handling ---------------------------------------------------------


def _read_source(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="ascii") as fh:
        return fh.read()


def parse_graph_text(text: str) -> list[Graph]:
    """Auto-detect edge-list (one graph) vs graph6 (one per line)."""
    lines = [ln for ln in text.splitlines() if ln.split("#", 1)[0].strip()]
    if not lines:
        raise ParseError("no graph data found", line=1)
    first = lines[0].split("#", 1)[0].strip()
    if first.isdigit():
        return [parse_edge_list(text)]
    return [decode_graph6(ln.strip()) for ln in lines]


def load_inputs(paths: list[str]) -> list[Graph]:
    graphs = []
    for p in paths or ["-"]:
        graphs.extend(parse_graph_text(_read_source(p)))
    return graphs


# -- generation specs -------------------------------------------------------


def build_spec(tokens: list[str]) -> Graph:
    """Build a graph from a spec like ['path', '5'] or ['net']."""
    if not tokens:
        raise ValueError("empty generator spec")
    name, args = tokens[0], tokens[1:]
    try:
        return _build_spec(name, args)
    except IndexError:
        raise ValueError(f"generator {name!r} is missing arguments") from None


def _build_spec(name: str, args: list[str]) -> Graph:
    if name == "path":
        return generators.path(int(args[0]))
    if name == "cycle":
        return generators.cycle(int(args[0]))
    if name == "complete":
        return generators.complete(int(args[0]))
    if name == "net":
        return generators.net()
    if name == "fig2-closed":
        return generators.fig2_closed()
    if name == "sierpinski":
        return generators.sierpinski(int(args[0]))
    if name == "gnp":
        n, frac, seed = int(args[0]), args[1], int(args[2])
        num, den = frac.split("/")
        return generators.gnp(n, int(num), int(den), seed)
    if name == "union":
        parts = []
        for sub in ",".join(args).split(","):
            sub = sub.strip()
            if not sub:
                continue
            parts.append(build_spec(sub.split(":")))
        return generators.union(parts)
    raise ValueError(f"unknown generator {name!r}")


# -- corpora ---------------------------------------------------------------


def corpus_from_args(args) -> tuple[str, list[Graph]]:
    graphs: list[Graph] = []
    desc = []
    if getattr(args, "inputs", None):
        graphs.extend(load_inputs(args.inputs))
        desc.append(f"{len(graphs)} graphs from files")
    if getattr(args, "exhaustive", None):
        count = 0
        for n in range(1, args.exhaustive + 1):
            for g in generators.all_labeled(n):
                graphs.append(g)
                count += 1
        desc.append(f"all labeled graphs on 1..{args.exhaustive} vertices ({count})")
    if getattr(args, "random", None):
        num, den = (int(x) for x in args.gnp.split("/"))
        rng = random.Random(args.seed)
        for _ in range(args.random):
            n = rng.randint(1, args.max_n)
            graphs.append(generators.gnp(n, num, den, rng.randrange(2**32)))
        desc.append(
            f"{args.random} random graphs (n<={args.max_n}, p={num}/{den}, seed={args.seed})"
        )
    if getattr(args, "sierpinski", None):
        for k in range(1, args.sierpinski + 1):
            graphs.append(generators.sierpinski(k))
        desc.append(f"sierpinski levels 1..{args.sierpinski}")
    if not graphs:
        raise ValueError("empty corpus: give inputs or corpus flags")
    return "; ".join(desc), graphs


# -- reports ----------------------------------------------------------------


def make_report(command, inputs, results, violations, started) -> dict:
    return {
        "schema": SCHEMA,
        "version": __version__,
        "command": command,
        "elapsed_s": round(time.perf_counter() - started, 3),
        "inputs": inputs,
        "results": results,
        "violations": violations,
    }


def emit(report: dict, fmt: str) -> None:
    if fmt == "json":
        json.dump(report, sys.stdout, indent=2, sort_keys=True)
        sys.stdout.write("\n")
        return
    for key in ("inputs", "results"):
        val = report[key]
        if isinstance(val, list):
            for item in val:
                print(f"{key[:-1]}: {item}")
        else:
            print(f"{key}: {val}")
    for v in report["violations"]:
        print(f"VIOLATION: {v}")
    print(f"ok={not report['violations']} elapsed={report['elapsed_s']}s")


# -- per-graph records -------------------------------------------------------


def invariant_record(g: Graph, with_reg: bool) -> dict:
    eta_val, witness = eta(g)
    length, paths = longest_induced_path(g)
    cliques = maximal_cliques(g)
    rec = {
        "graph6": encode_graph6(g),
        "n": g.n,
        "m": g.edge_count(),
        "iv": g.internal_vertex_count(),
        "L": length,
        "L_witness_paths": paths,
        "eta": eta_val,
        "eta_witness": witness.sorted_edges(),
        "c": len(cliques),
    }
    if with_reg:
        reg = regularity_bei(g)
        rec["reg"] = reg.value
        rec["reg_witness"] = {
            "vars": sorted(variable_name(v, g.n) for v in reg.witness_vars),
            "degree": reg.witness_degree,
            "fields": list(reg.fields_used),
        }
    return rec


def _verify_one(kind: str, g6: str, with_reg: bool, map_name: str = "eta") -> list[dict]:
    """Violation records for one graph; run in worker processes."""
    g = decode_graph6(g6)
    out = []
    if kind == "chain":
        rep = bound_chain(g, with_reg=with_reg)
        for v in rep.violations:
            out.append({"graph6": g6, **v,
                        "values": {"L": rep.length_sum, "eta": rep.eta,
                                   "c": rep.clique_count, "reg": rep.reg}})
    elif kind == "compatible":
        phi = memoized(NAMED_MAPS[map_name])
        rep = check_compatibility(phi, g, name=map_name)
        if not rep.passed:
            out.append({"graph6": g6, "counterexample": rep.counterexample})
        if map_name == "eta":
            # the per-vertex strong form holds for eta at every non-free vertex
            for bad in nonfree_vertex_failures(phi, g):
                out.append({"graph6": g6, "strong_form": bad})
    elif kind == "iv-lemma":
        for v in range(g.n):
            if not g.is_free_vertex(v) and not check_iv_lemma(g, v):
                out.append({"graph6": g6, "vertex": v})
    elif kind == "recursion":
        reg_fn = memoized(regularity_value)
        for v in range(g.n):
            if not check_regularity_recursion(g, v, reg_fn):
                out.append({"graph6": g6, "vertex": v})
    else:
        raise ValueError(f"unknown verify kind {kind!r}")
    return out


def _verify_star(task):
    return _verify_one(*task)


# -- subcommands -------------------------------------------------------------


def cmd_invariants(args) -> int:
    started = time.perf_counter()
    graphs = load_inputs(args.inputs)
    results = [invariant_record(g, args.with_reg) for g in graphs]
    report = make_report(
        ["invariants"], [r["graph6"] for r in results], results, [], started
    )
    emit(report, args.format)
    return 0


def cmd_reg(args) -> int:
    started = time.perf_counter()
    graphs = load_inputs(args.inputs)
    results = []
    for g in graphs:
        reg = regularity_bei(g)
        results.append({
            "graph6": encode_graph6(g),
            "reg": reg.value,
            "witness_vars": sorted(variable_name(v, g.n) for v in reg.witness_vars),
            "witness_degree": reg.witness_degree,
            "fields": list(reg.fields_used),
            "agreement": reg.agreement,
        })
    report = make_report(["reg"], [r["graph6"] for r in results], results, [], started)
    emit(report, args.format)
    return 0


def cmd_verify(args) -> int:
    started = time.perf_counter()
    desc, graphs = corpus_from_args(args)
    tasks = [(args.kind, encode_graph6(g), args.with_reg, args.map) for g in graphs]
    violations: list[dict] = []
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            chunk = max(1, len(tasks) // (4 * args.jobs))
            for batch in pool.map(_verify_star, tasks, chunksize=chunk):
                violations.extend(batch)
    else:
        for task in tasks:
            violations.extend(_verify_star(task))
    results = {"kind": args.kind, "graphs_checked": len(graphs), "map": args.map}
    report = make_report(["verify", args.kind], desc, results, violations, started)
    emit(report, args.format)
    return 1 if violations else 0


def cmd_gen(args) -> int:
    g = build_spec(args.spec)
    if args.format == "edges":
        sys.stdout.write(format_edge_list(g))
    else:
        print(encode_graph6(g))
    return 0


GAPS = {
    "c-eta": ("c", "eta"),
    "eta-L": ("eta", "L"),
    "c-reg": ("c", "reg"),
}


def cmd_search(args) -> int:
    started = time.perf_counter()
    desc, graphs = corpus_from_args(args)
    hi, lo = GAPS[args.gap]
    rows = []
    for g in graphs:
        rec = invariant_record(g, with_reg="reg" in (hi, lo))
        gap = rec[hi] - rec[lo]
        rows.append((gap, rec["graph6"], {k: rec[k] for k in ("n", "L", "eta", "c", "reg") if k in rec}))
    rows.sort(key=lambda r: (-r[0], r[1]))
    top = [{"gap": gap, "graph6": g6, "values": vals} for gap, g6, vals in rows[: args.top]]
    report = make_report(["search", args.gap], desc, top, [], started)
    emit(report, args.format)
    return 0


# -- argument parsing ---------------------------------------------------------


def _add_corpus_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("inputs", nargs="*", help="graph files ('-' for stdin)")
    p.add_argument("--exhaustive", type=int, metavar="N",
                   help="all labeled graphs on 1..N vertices")
    p.add_argument("--random", type=int, metavar="COUNT")
    p.add_argument("--gnp", default="1/2", metavar="NUM/DEN")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-n", type=int, default=8)
    p.add_argument("--sierpinski", type=int, metavar="K",
                   help="sierpinski levels 1..K")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="beibounds", description=__doc__)
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", help="n, m, iv, L, eta, c (and reg) with witnesses")
    p.add_argument("inputs", nargs="*")
    p.add_argument("--with-reg", action="store_true")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("reg", help="regularity with homology witness")
    p.add_argument("inputs", nargs="*")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_reg)

    p = sub.add_parser("verify", help="sweep a corpus against a checked property")
    p.add_argument("kind", choices=["chain", "compatible", "iv-lemma", "recursion"])
    _add_corpus_flags(p)
    p.add_argument("--map", default="eta", choices=sorted(NAMED_MAPS))
    p.add_argument("--with-reg", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="build a named graph or family member")
    p.add_argument("spec", nargs="+", help="e.g. 'path 5', 'net', 'sierpinski 2'")
    p.add_argument("--format", choices=["graph6", "edges"], default="graph6")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("search", help="rank corpus graphs by a bound gap")
    p.add_argument("--gap", required=True, choices=sorted(GAPS))
    _add_corpus_flags(p)
    p.add_argument("--top", type=int, default=5)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_search)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ResourceLimitError, FieldDisagreementError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
