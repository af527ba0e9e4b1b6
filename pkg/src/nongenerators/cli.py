"""Command-line interface: ``python -m nongenerators <command> ...``.

Exit codes: 0 when every law holds, 1 when a law fails (a certificate is
included in the report), 2 for unreadable or invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

import numpy as np

from . import builders
from .closure import MOORE_GROUND_CAP, MooreFamily, check_closure_reduction, moore_to_context
from .errors import OrderTooLarge, PosetError
from .fileformats import dump_poset, parse_group, parse_moore, parse_order, parse_poset
from .groups import MAX_GROUP_ORDER, catalog, subgroup_lattice
from .nongen import DEFAULT_SUBSET_CAP, check_zorn_gadget, zorn_gadget
from .poset import DEFAULT_CHAIN_CAP
from .report import (
    SCHEMA_VERSION,
    all_passed,
    analyze,
    group_report,
    law_suite,
    to_dot,
    to_json,
    to_text,
)

GENERATORS = {
    "random_poset": {"n": "5-8", "density": "0.2-0.7"},
    "random_join_semilattice": {"n": "3-7", "density": "0.2-0.6"},
    "random_moore_family": {"ground": "1-5", "density": "0.05-0.5"},
    "zorn_gadget": {"n": "1-7", "density": "0.2-0.7"},
    "all_posets": {"n": "4"},
}


def _emit(text: str, path: str | None) -> None:
    if path:
        Path(path).write_text(text)
    else:
        sys.stdout.write(text)


def _render(report: dict, fmt: str) -> str:
    if fmt == "text" and "frattini" in report:
        return to_text(report)
    return to_json(report)


def cmd_analyze(args) -> int:
    P = parse_poset(Path(args.path).read_text())
    report = analyze(P, args.cap_chains, args.cap_subset, jobs=args.jobs)
    _emit(_render(report, args.format), args.output)
    if args.dot:
        Path(args.dot).write_text(to_dot(P, report))
    return 0 if all_passed(report) else 1


def cmd_dot(args) -> int:
    P = parse_poset(Path(args.path).read_text())
    _emit(to_dot(P), args.output)
    return 0


def cmd_gadget(args) -> int:
    elements, covers = parse_order(Path(args.path).read_text())
    if not elements:
        raise PosetError("Q must be nonempty")
    G = zorn_gadget(elements, covers, top=args.top, fresh=args.fresh)
    laws = check_zorn_gadget(elements, covers, G, fresh=args.fresh)
    if args.output:
        Path(args.output).write_text(dump_poset(G))
    report = {
        "schema_version": SCHEMA_VERSION,
        "gadget": json.loads(dump_poset(G)),
        "fresh": args.fresh,
        "laws": [r.as_dict() for r in laws],
    }
    if args.format == "text":
        header = [f"gadget elements: {', '.join(report['gadget']['elements'])}",
                  f"fresh element: {args.fresh}", ""]
        _emit("\n".join(header + _law_lines(report["laws"])) + "\n", None)
    else:
        _emit(to_json(report), None)
    return 0 if all(r.passed for r in laws) else 1


def cmd_group(args) -> int:
    if args.builtin:
        groups = catalog()
        if args.builtin not in groups:
            raise PosetError(f"unknown group {args.builtin!r}; choose from {sorted(groups)}")
        G = groups[args.builtin]
    elif args.path:
        G = parse_group(Path(args.path).read_text())
    else:
        raise PosetError("give a Cayley table file or --builtin NAME")
    if G.order > args.cap_order:
        raise OrderTooLarge(f"order {G.order} exceeds --cap-order {args.cap_order}")
    report = group_report(G)
    _emit(_group_text(report) if args.format == "text" else to_json(report), args.output)
    if args.dot:
        Path(args.dot).write_text(to_dot(subgroup_lattice(G).poset))
    return 0 if all_passed(report) else 1


def _group_text(report: dict) -> str:
    ng = [row["element"] for row in report["elements"] if row["nongenerator"]]
    lines = [
        f"order: {report['order']}",
        f"subgroups: {len(report['subgroups'])}",
        f"maximal subgroups: {', '.join(report['maximal_subgroups']) or '(none)'}",
        f"frattini subgroup: {report['frattini_subgroup']}",
        f"non-generators: {', '.join(ng)}",
        "",
    ]
    return "\n".join(lines + _law_lines(report["laws"])) + "\n"


def _law_lines(laws: list[dict]) -> list[str]:
    return [f"{'PASS' if r['passed'] else 'FAIL'} {r['law']} ({r['checked']} checked)" for r in laws]


def cmd_closure(args) -> int:
    M = parse_moore(Path(args.path).read_text(), complete=args.complete)
    ctx = moore_to_context(M, args.cap_ground)
    law = check_closure_reduction(ctx)
    report = {
        "schema_version": SCHEMA_VERSION,
        "ground": list(M.ground),
        "closed": sorted(ctx.closed),
        "laws": [law.as_dict()],
    }
    if args.format == "text":
        header = [f"ground: {', '.join(M.ground)}",
                  f"closed sets: {', '.join(report['closed'])}", ""]
        _emit("\n".join(header + _law_lines(report["laws"])) + "\n", args.output)
    else:
        _emit(to_json(report), args.output)
    return 0 if law.passed else 1


def parse_generator(text: str) -> tuple[str, dict[str, str]]:
    """``name:key=value,...`` with defaults filled in; values may be ranges ``lo-hi``."""
    name, _, rest = text.partition(":")
    if name not in GENERATORS:
        raise PosetError(f"unknown generator {name!r}; choose from {sorted(GENERATORS)}")
    params = dict(GENERATORS[name])
    for item in filter(None, rest.split(",")):
        key, eq, value = item.partition("=")
        if not eq or key not in params:
            raise PosetError(f"bad parameter {item!r} for {name}")
        params[key] = value
    return name, params


def _draw(value: str, rng: np.random.Generator, kind=int):
    lo, _, hi = value.partition("-")
    lo, hi = kind(lo), kind(hi or lo)
    if kind is int:
        return int(rng.integers(lo, hi + 1))
    return float(rng.uniform(lo, hi))


def _instances(name: str, params: dict, count: int, seed: int):
    if name == "all_posets":
        for n in range(1, int(params["n"]) + 1):
            for P in builders.all_posets_with_top(n):
                yield ("poset", dump_poset(P))
        return
    for i in range(count):
        rng = np.random.default_rng([seed, i])
        sub = [seed, i, 1]
        if name == "random_moore_family":
            M = builders.random_moore_family(_draw(params["ground"], rng),
                                             _draw(params["density"], rng, float), sub)
            yield ("moore", (list(M.ground), sorted(sorted(s) for s in M.closed_sets)))
            continue
        n, density = _draw(params["n"], rng), _draw(params["density"], rng, float)
        if name == "random_poset":
            yield ("poset", dump_poset(builders.random_poset(n, density, sub)))
        elif name == "random_join_semilattice":
            yield ("poset", dump_poset(builders.random_join_semilattice(n, sub, density)))
        else:
            yield ("gadget", builders.random_order(n, density, sub))


def _run_instance(job) -> list[dict]:
    kind, payload, cap_chains, cap_subset = job
    if kind == "poset":
        laws = law_suite(parse_poset(payload), cap_chains, cap_subset)
    elif kind == "moore":
        laws = [check_closure_reduction(moore_to_context(MooreFamily(*payload)))]
    else:
        elements, covers = payload
        G = zorn_gadget(elements, covers)
        laws = check_zorn_gadget(elements, covers, G) + law_suite(G, cap_chains, cap_subset)
    return [r.as_dict() for r in laws]


def _describe(kind, payload):
    if kind == "poset":
        return json.loads(payload)
    if kind == "moore":
        return {"ground": payload[0], "closed_sets": payload[1]}
    return {"elements": payload[0], "covers": [list(c) for c in payload[1]]}


def cmd_sweep(args) -> int:
    name, params = parse_generator(args.generator)
    instances = list(_instances(name, params, args.count, args.seed))
    jobs = [(k, p, args.cap_chains, args.cap_subset) for k, p in instances]
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            results = list(pool.map(_run_instance, jobs, chunksize=16))
    else:
        results = [_run_instance(j) for j in jobs]
    totals: dict[str, dict[str, int]] = {}
    first_failure = None
    for idx, laws in enumerate(results):
        for law in laws:
            t = totals.setdefault(law["law"], {"passed": 0, "failed": 0})
            t["passed" if law["passed"] else "failed"] += 1
            if not law["passed"] and first_failure is None:
                first_failure = {
                    "instance": idx,
                    "law": law["law"],
                    "witness": law["counterexample"],
                    "input": _describe(*instances[idx]),
                }
    report = {
        "schema_version": SCHEMA_VERSION,
        "generator": name,
        "parameters": params,
        "seed": args.seed,
        "instances": len(instances),
        "laws": totals,
        "first_failure": first_failure,
    }
    _emit(_sweep_text(report) if args.format == "text" else to_json(report), args.output)
    return 0 if first_failure is None else 1


def _sweep_text(report: dict) -> str:
    lines = [f"{report['generator']}: {report['instances']} instances, seed {report['seed']}"]
    for law, t in report["laws"].items():
        lines.append(f"  {law:<36} {t['passed']:>6} passed {t['failed']:>4} failed")
    if report["first_failure"] is not None:
        lines.append(f"first failure: {json.dumps(report['first_failure'])}")
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nongenerators",
        description="Non-generators and Frattini elements of finite posets.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cap-chains", type=int, default=DEFAULT_CHAIN_CAP,
                        help="largest poset for exhaustive chain enumeration (default %(default)s)")
    common.add_argument("--cap-subset", type=int, default=DEFAULT_SUBSET_CAP,
                        help="largest family size in the absorption law (default %(default)s)")
    common.add_argument("--format", choices=["text", "structured"], default="structured")
    common.add_argument("-o", "--output", help="write the report here instead of stdout")
    common.add_argument("--jobs", type=int, default=1, help="parallel workers")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="full report for a poset file")
    p.add_argument("path")
    p.add_argument("--dot", help="also write an annotated Hasse diagram")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("sweep", parents=[common], help="run the law suites on generated instances")
    p.add_argument("generator", help="name[:key=value,...], e.g. random_poset:n=5-9,density=0.3")
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("group", parents=[common], help="subgroup lattice and Frattini subgroup")
    p.add_argument("path", nargs="?", help="Cayley table file")
    p.add_argument("--builtin", help="bundled group name, e.g. Q8")
    p.add_argument("--dot", help="write the subgroup lattice as DOT")
    p.add_argument("--cap-order", type=int, default=MAX_GROUP_ORDER,
                   help="largest group order accepted (default and hard limit %(default)s)")
    p.set_defaults(func=cmd_group)

    p = sub.add_parser("gadget", parents=[common], help="adjoin a top and a fresh element to Q")
    p.add_argument("path", help="poset file for Q (no maximum required)")
    p.add_argument("--top", default="1")
    p.add_argument("--fresh", default="a")
    p.set_defaults(func=cmd_gadget)

    p = sub.add_parser("dot", parents=[common], help="annotated Hasse diagram of a poset file")
    p.add_argument("path")
    p.set_defaults(func=cmd_dot)

    p = sub.add_parser("closure", parents=[common], help="closure reduction on a Moore family file")
    p.add_argument("path")
    p.add_argument("--complete", action="store_true",
                   help="close the given sets under intersection before validating")
    p.add_argument("--cap-ground", type=int, default=MOORE_GROUND_CAP)
    p.set_defaults(func=cmd_closure)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (PosetError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
