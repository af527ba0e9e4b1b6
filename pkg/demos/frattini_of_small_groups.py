"""Frattini subgroups of the bundled groups, seen two ways.

For each group we intersect the maximal subgroups, then ask for every element
whether dropping it from a generating set can ever matter.  The two answers
coincide, and the closure bridge (subgroup generation viewed as a closure on
subsets of the group) gives the same verdict a third time.
"""

from nongenerators.groups import (
    bridge_verdict,
    catalog,
    group_closure_context,
    group_frattini,
    is_group_nongenerator,
)

for name, G in catalog().items():
    phi = group_frattini(G)
    ctx = group_closure_context(G)
    nongen = {g for g in range(G.order) if is_group_nongenerator(G, g)}
    bridged = {g for g in range(G.order) if bridge_verdict(G, g, ctx)}
    labels = ", ".join(G.labels[g] for g in sorted(phi))
    status = "agree" if phi == nongen == bridged else "DISAGREE"
    print(f"{name:>6}  order {G.order:>2}  Phi = {{{labels}}}  ({status})")
