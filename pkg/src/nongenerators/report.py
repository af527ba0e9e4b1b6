"""Full per-poset analysis reports and Graphviz DOT rendering.

Reports are plain dicts serialized with a fixed key order, so the same input
always yields byte-identical output, whatever the ``jobs`` setting.
"""

from __future__ import annotations

import hashlib
import json
from concurrent.futures import ThreadPoolExecutor

from .closure import check_closure_reduction
from .fileformats import dump_poset
from .frattini import (
    check_coatom_characterization,
    check_finite_collapse,
    check_frattini_laws,
    compactness,
    frattini_analysis,
)
from .nongen import (
    DEFAULT_SUBSET_CAP,
    LawReport,
    below_all_maximal,
    check_characterizations,
    check_ideal_laws,
    nongenerators,
    verdict,
)
from .groups import (
    FiniteGroup,
    bridge_verdict,
    group_closure_context,
    group_frattini,
    is_group_nongenerator,
    is_group_nongenerator_by_subsets,
    subgroup_lattice,
)
from .poset import DEFAULT_CHAIN_CAP, Poset, maximal_below_top

SCHEMA_VERSION = 1


def digest(P: Poset) -> str:
    return hashlib.sha256(dump_poset(P).encode()).hexdigest()


def law_suite(P: Poset, cap_chains: int = DEFAULT_CHAIN_CAP,
              cap_subset: int = DEFAULT_SUBSET_CAP) -> list[LawReport]:
    """Every law applicable to a bare poset."""
    return [
        check_characterizations(P, cap_chains),
        *check_finite_collapse(P, cap_chains),
        *check_ideal_laws(P, cap_subset),
        check_coatom_characterization(P, cap_chains),
        *check_frattini_laws(P, cap_chains),
    ]


def _element_row(P: Poset, a: str, cap: int) -> dict:
    v = verdict(P, a, cap)
    return {
        "element": a,
        "nongenerator": {
            "by_definition": v.by_definition,
            "by_coatoms": v.by_coatoms,
            "by_chains": v.by_chains,
            "by_nonextendable_chains": v.by_nonextendable_chains,
        },
        "witnesses": v.witnesses,
        "compactness": compactness(P, a, cap).as_dict(),
        "below_every_maximal": below_all_maximal(P, a),
    }


def analyze(P: Poset, cap_chains: int = DEFAULT_CHAIN_CAP,
            cap_subset: int = DEFAULT_SUBSET_CAP, jobs: int = 1) -> dict:
    # fill the shared memo before any worker reads it
    P.chain_masks(False, cap_chains)
    P.chain_masks(True, cap_chains)
    nongenerators(P)
    if jobs > 1:
        with ThreadPoolExecutor(jobs) as pool:
            rows = list(pool.map(lambda a: _element_row(P, a, cap_chains), P.elements))
    else:
        rows = [_element_row(P, a, cap_chains) for a in P.elements]
    laws = law_suite(P, cap_chains, cap_subset)
    return {
        "schema_version": SCHEMA_VERSION,
        "input_digest": digest(P),
        "top": P.top,
        "elements": rows,
        "nongenerators": nongenerators(P),
        "frattini": frattini_analysis(P).as_dict(),
        "laws": [r.as_dict() for r in laws],
        "certificates": [
            {"law": r.law, "witness": r.counterexample} for r in laws if not r.passed
        ],
    }


def all_passed(report: dict) -> bool:
    return all(law["passed"] for law in report["laws"])


def to_json(report: dict) -> str:
    return json.dumps(report, indent=2) + "\n"


def to_text(report: dict) -> str:
    fr = report["frattini"]
    phi = fr["phi"] if fr["phi"] is not None else f"absent ({fr['phi_reason']})"
    join = (fr["nongenerator_join"] if fr["nongenerator_join"] is not None
            else f"absent ({fr['nongenerator_join_reason']})")
    lines = [
        f"top: {report['top']}",
        f"maximal below top: {', '.join(fr['maximal']) or '(none)'}",
        f"non-generators: {', '.join(report['nongenerators']) or '(none)'}",
        f"frattini element: {phi}",
        f"join of non-generators: {join}",
        "",
    ]
    width = max(len(r["element"]) for r in report["elements"])
    for r in report["elements"]:
        flags = "".join("Y" if ok else "n" for ok in r["nongenerator"].values())
        lines.append(f"  {r['element']:<{width}}  verdicts {flags}")
    lines.append("")
    for law in report["laws"]:
        status = "PASS" if law["passed"] else "FAIL"
        extra = f"  {law['counterexample']}" if law["counterexample"] else ""
        lines.append(f"{status} {law['law']} ({law['checked']} checked){extra}")
    return "\n".join(lines) + "\n"


def to_dot(P: Poset, report: dict | None = None) -> str:
    """Hasse diagram with non-generators filled, maximal elements doubled and
    the Frattini element outlined in red."""
    if report is None:
        ng = set(nongenerators(P))
        fr = frattini_analysis(P).as_dict()
    else:
        ng = set(report["nongenerators"])
        fr = report["frattini"]
    maximal = set(fr["maximal"])
    lines = ["digraph poset {", "  rankdir=BT;", "  node [shape=ellipse];"]
    for x in P.elements:
        attrs = [f"label={json.dumps(x)}"]
        if x in ng:
            attrs += ["style=filled", 'fillcolor="lightgray"']
        if x in maximal:
            attrs.append("peripheries=2")
        if x == fr["phi"]:
            attrs += ['color="red"', "penwidth=2"]
        lines.append(f"  {json.dumps(x)} [{', '.join(attrs)}];")
    for lo, hi in P.cover_pairs():
        lines.append(f"  {json.dumps(lo)} -> {json.dumps(hi)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def group_report(G: FiniteGroup, subset_oracle_max: int = 6) -> dict:
    """Subgroup lattice, Frattini subgroup and per-element non-generator
    verdicts from the lattice, the raw-subset oracle (tiny orders) and the
    closed-element bridge."""
    L = subgroup_lattice(G)
    phi = group_frattini(G)
    ctx = group_closure_context(G)
    rows = []
    char_cex = bridge_cex = None
    for g in range(G.order):
        lattice = is_group_nongenerator(G, g)
        subsets = is_group_nongenerator_by_subsets(G, g) if G.order <= subset_oracle_max else None
        bridge = bridge_verdict(G, g, ctx)
        rows.append({
            "element": G.labels[g],
            "in_frattini": g in phi,
            "nongenerator": lattice,
            "nongenerator_by_subsets": subsets,
            "bridge": bridge,
        })
        if char_cex is None and (lattice != (g in phi) or subsets not in (None, lattice)):
            char_cex = rows[-1]
        if bridge_cex is None and bridge != lattice:
            bridge_cex = rows[-1]
    laws = [
        LawReport("frattini_characterization", char_cex is None, G.order, char_cex),
        LawReport("bridge_agrees", bridge_cex is None, G.order, bridge_cex),
        check_closure_reduction(ctx),
    ]
    return {
        "schema_version": SCHEMA_VERSION,
        "order": G.order,
        "subgroups": list(L.poset.elements),
        "maximal_subgroups": sorted(maximal_below_top(L.poset)),
        "frattini_subgroup": G.name(phi),
        "elements": rows,
        "laws": [r.as_dict() for r in laws],
        "certificates": [
            {"law": r.law, "witness": r.counterexample} for r in laws if not r.passed
        ],
    }
