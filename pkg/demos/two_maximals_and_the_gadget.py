"""Two small posets where the Frattini element does not behave as in groups.

First: two incomparable elements under a top.  Both are maximal below the top,
they have no meet, so there is no Frattini element, and nothing is a
non-generator.

Second: the Zorn gadget.  Take any poset Q, add a fresh element ``a`` that is
incomparable to all of Q, and put a new top over everything.  The fresh
element is maximal below the top, and it is never a non-generator because
joining it with any element of Q reaches the top.
"""

from nongenerators import frattini_analysis, maximal_below_top, nongenerators, zorn_gadget
from nongenerators.builders import antichain_plus_top
from nongenerators.nongen import nongenerator_witness

P = antichain_plus_top(2)
res = frattini_analysis(P)
print("antichain under a top:", P.elements)
print("  maximal below top:", sorted(res.maximal_set))
print("  Frattini element:", res.phi, f"({res.phi_reason})")
print("  non-generators:", nongenerators(P))

Q = ["x", "y", "z"]
covers = [("x", "y")]
G = zorn_gadget(Q, covers)
print("\ngadget over Q =", Q, "with x < y")
print("  maximal below top:", sorted(maximal_below_top(G)))
print("  witness that 'a' generates together with:", nongenerator_witness(G, "a"))
print("  non-generators:", nongenerators(G))
