"""Command line: check, classify, verify, oracle, gen-family.

Exit codes: 0 = complete intersection / certificate accepted, 1 = not,
2 = input or resource error. With several input files each one is handled
independently and reported as one JSON line; the exit code is the worst
outcome across files.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Callable, Sequence

from .budget import budget_from_env
from .decider import DecideOptions, decide, prefilter
from .errors import CIToricError
from .families import FAMILY_NAMES, build_family
from .fibers import mu_up_to
from .graph import GraphLike, height, nontrivial_components
from .io import GraphFormat, guess_format, parse_graph, to_edge_list, to_json
from .matrix import verify_fs
from .structure import (
    classify_ultimo,
    detect_forbidden_theta,
    is_normal_edge_algebra,
    three_disjoint_odd_cycles,
)
from .walks import Binomial

EXIT_YES, EXIT_NO, EXIT_ERROR = 0, 1, 2


def _load(path: str, fmt: str | None) -> GraphLike:
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    return parse_graph(text, GraphFormat(fmt) if fmt else guess_format(path))


def _explain(g: GraphLike) -> dict:
    out: dict = {}
    fails = [f for f in map(prefilter, nontrivial_components(g)) if f is not None]
    out["prefilter"] = fails[0].to_json() if fails else None
    try:
        th = detect_forbidden_theta(g)
        out["theta"] = th.to_json(g) if th is not None else None
    except CIToricError as exc:
        out["theta"] = {"error": str(exc)}
    try:
        normal, pair = is_normal_edge_algebra(g)
        out["normal"] = normal
        if pair is not None:
            out["normal_witness"] = [[g.label(v) for v in c] for c in pair]
        three = three_disjoint_odd_cycles(g)
        out["three_disjoint_odd_cycles"] = None if three is None else [[g.label(v) for v in c] for c in three]
    except CIToricError as exc:
        out["normal"] = {"error": str(exc)}
    return out


def _human_report(payload: dict) -> str:
    lines = [f"verdict: {payload['verdict']}", f"height: {payload['height']}"]
    for i, gen in enumerate(payload["generators"], 1):
        lines.append(f"  B{i} = {Binomial.from_json(gen).format()}   walk: {' '.join(gen['walk'])}")
    if payload["generated_by_quadrics"]:
        lines.append("generated by quadrics")
    for key in ("failure", "explain"):
        if key in payload:
            lines.append(f"{key}: {json.dumps(payload[key])}")
    return "\n".join(lines) + "\n"


def _run_files(
    paths: Sequence[str], work: Callable[[str], tuple[int, dict]], as_json: bool, human: Callable[[dict], str] | None
) -> int:
    worst = EXIT_YES
    multi = len(paths) > 1
    for p in paths:
        try:
            code, payload = work(p)
        except (CIToricError, OSError, ValueError) as exc:
            code, payload = EXIT_ERROR, {"error": str(exc)}
            print(f"{p}: {exc}", file=sys.stderr)
            if as_json or multi:
                print(json.dumps({"file": p, **payload}))
            worst = max(worst, code)
            continue
        worst = max(worst, code)
        if multi:
            print(json.dumps({"file": p, **payload}))
        elif as_json or human is None:
            print(json.dumps(payload, indent=2))
        else:
            print(human(payload), end="")
    return worst


def cmd_check(args: argparse.Namespace) -> int:
    opts = DecideOptions(budget=budget_from_env(), retry_walks=args.retry_walks)

    def work(p: str) -> tuple[int, dict]:
        g = _load(p, args.format)
        r = decide(g, opts)
        payload = r.to_json()
        if args.explain:
            payload["explain"] = _explain(g)
        return (EXIT_YES if r.is_ci else EXIT_NO), payload

    return _run_files(args.paths, work, args.json, _human_report)


def cmd_classify(args: argparse.Namespace) -> int:
    budget = budget_from_env()

    def work(p: str) -> tuple[int, dict]:
        g = _load(p, args.format)
        c = classify_ultimo(g, budget)
        return (EXIT_NO if c.tag.value == "Unclassified" else EXIT_YES), c.to_json(g)

    return _run_files(args.paths, work, True, None)


def load_generators(path: str) -> list[Binomial]:
    """A JSON list of {"plus": {...}, "minus": {...}} over 0-based edge ids,
    or a `check --json` report (its "generators" field)."""
    data = json.loads(Path(path).read_text())
    if isinstance(data, dict):
        data = data.get("generators", [])
    if not isinstance(data, list):
        raise ValueError("generator file must hold a list or a report with 'generators'")
    return [Binomial.from_json(x) for x in data]


def cmd_verify(args: argparse.Namespace) -> int:
    budget = budget_from_env()

    def work(p: str) -> tuple[int, dict]:
        g = _load(p, args.format)
        gens = load_generators(args.gens)
        cert = verify_fs(g, gens, budget.dominating)
        return (EXIT_YES if cert.ok else EXIT_NO), {"ok": cert.ok, **cert.to_json()}

    return _run_files(args.paths, work, True, None)


def cmd_oracle(args: argparse.Namespace) -> int:
    def work(p: str) -> tuple[int, dict]:
        g = _load(p, args.format)
        h = height(g)
        d = args.max_degree if args.max_degree is not None else g.num_edges
        res = mu_up_to(g, d)
        payload = {
            "mu": res.mu,
            "height": h,
            "max_degree": d,
            "ci": res.mu == h,
            "generators": [b.canonical_sign().to_json() for b in res.generators],
        }
        return (EXIT_YES if res.mu == h else EXIT_NO), payload

    return _run_files(args.paths, work, True, None)


def _params(items: Sequence[str]) -> dict:
    out = {}
    for it in items:
        key, sep, value = it.partition("=")
        if not sep:
            raise ValueError(f"parameter {it!r} is not key=value")
        out[key.strip()] = value.strip()
    return out


def cmd_gen_family(args: argparse.Namespace) -> int:
    try:
        g = build_family(args.family, _params(args.param), args.seed)
    except (CIToricError, ValueError) as exc:
        print(f"gen-family: {exc}", file=sys.stderr)
        return EXIT_ERROR
    text = to_json(g) + "\n" if args.out_format == "json" else to_edge_list(g)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_YES


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="ci-toric", description="Complete-intersection toric ideals of graphs.")
    sub = ap.add_subparsers(dest="command", required=True)

    def graph_cmd(name: str, helptext: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=helptext)
        p.add_argument("paths", nargs="+", help="graph files ('-' for stdin)")
        p.add_argument("--format", choices=[f.value for f in GraphFormat], help="default: from the file suffix")
        return p

    p = graph_cmd("check", "decide CI and print the report")
    p.add_argument("--json", action="store_true", help="JSON output (JSON lines for several files)")
    p.add_argument("--explain", action="store_true", help="add forbidden-pattern and normality diagnostics")
    p.add_argument("--retry-walks", action="store_true", help="try alternative shortest walks before failing")
    p.set_defaults(func=cmd_check)

    p = graph_cmd("classify", "structure class as JSON")
    p.set_defaults(func=cmd_classify)

    p = graph_cmd("verify", "check a candidate generator list")
    p.add_argument("--gens", required=True, help="JSON generators file")
    p.set_defaults(func=cmd_verify)

    p = graph_cmd("oracle", "minimal generator count by fiber enumeration")
    p.add_argument("--max-degree", type=int, help="default: number of edges")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("gen-family", help="write a family member as a graph file")
    p.add_argument("family", choices=FAMILY_NAMES)
    p.add_argument("param", nargs="*", help="key=value, lists comma separated (e.g. r=5 spokes=1,3,7)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out-format", choices=["edge_list", "json"], default="edge_list")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen_family)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:  # bad CI_TORIC_BUDGET and similar
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
