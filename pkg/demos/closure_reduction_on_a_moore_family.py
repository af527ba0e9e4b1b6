"""Non-generators relative to a closure system.

A Moore family on {x, y, z} is a family of subsets closed under intersection
and containing the ground set.  Ordered by inclusion it is a poset with a top,
and each subset X has a closure: the least closed set containing it.  An
element of the powerset is a relative non-generator when it never helps
closed sets reach the top; the law checked here says this is the same as its
closure being a non-generator of the closed sets alone.
"""

from nongenerators import MooreFamily, check_closure_reduction, moore_to_context, nongenerators

M = MooreFamily(["x", "y", "z"], [[], ["x"], ["y"], ["x", "y"], ["x", "y", "z"]])
ctx = moore_to_context(M)
print("closed sets:", list(ctx.closed_poset.elements))
print("non-generators among closed sets:", nongenerators(ctx.closed_poset))
report = check_closure_reduction(ctx)
print(f"closure reduction: passed={report.passed} checked={report.checked}")
for X in (["x"], ["z"], ["x", "z"]):
    print(f"  closure of {X}: {sorted(M.closure(X))}")
