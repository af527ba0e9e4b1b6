from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nongenerators import (
    ClosureContext,
    MooreFamily,
    build_poset,
    check_closure_reduction,
    gen_is_top,
    is_nongenerator,
    is_p_nongenerator,
    moore_to_context,
    p_generates,
    smallest_closed_above,
)
from nongenerators.builders import hand_built_contexts, random_moore_family, random_poset
from nongenerators.closure import set_name
from nongenerators.errors import GroundTooLarge, InvalidClosureContext, NotAMooreFamily
from nongenerators.groups import cyclic, group_closure_context

moore_families = st.builds(
    random_moore_family, ground_size=st.integers(0, 4), density=st.floats(0, 0.6),
    seed=st.integers(0, 2**32 - 1),
)


def oracle_p_nongenerator(M, A):
    """Directly on subsets of the ground set, with no poset machinery."""
    ground = frozenset(M.ground)
    proper = [S for S in M.closed_sets if S != ground]

    def generates(Y):
        return not any(Y <= S for S in proper)

    for k in range(len(ground) + 1):
        for E in combinations(sorted(ground), k):
            E = frozenset(E)
            if generates(A | E) and not generates(E):
                return False
    return True


def test_p_generates_examples(m2):
    ctx = ClosureContext(m2, ["0", "1"])
    assert p_generates(ctx, {"a"})
    assert p_generates(ctx, {"1"})
    assert not p_generates(ctx, {"0"})


def test_p_nongenerator_examples(m2):
    ctx = ClosureContext(m2, ["0", "a", "1"])
    # closed bounds below the top are 0 and a; {b, e} always generates,
    # while {0} does not
    assert not is_p_nongenerator(ctx, "b")
    assert not is_p_nongenerator(ctx, "1")
    assert is_p_nongenerator(ctx, "0")


def test_smallest_closed_above():
    R = build_poset(["0", "p", "q", "1"], [("0", "p"), ("0", "q"), ("p", "1"), ("q", "1")])
    assert smallest_closed_above(ClosureContext(R, ["p", "q", "1"]), "0") is None
    full = ClosureContext(R, R.elements)
    assert all(smallest_closed_above(full, x) == x for x in R)


def test_context_validation(m2):
    with pytest.raises(InvalidClosureContext):
        ClosureContext(m2, ["0"])
    with pytest.raises(InvalidClosureContext):
        ClosureContext(m2, ["zz", "1"])


def test_moore_to_context_examples():
    ctx = moore_to_context(MooreFamily(["x"], [[], ["x"]]))
    assert ctx.ambient.elements == ("{x}", "{}") and ctx.ambient.top == "{x}"
    assert ctx.closed == {"{}", "{x}"}
    ctx = moore_to_context(MooreFamily(["x", "y"], [["x", "y"]]))
    assert len(ctx.ambient) == 4 and ctx.closed == {"{x,y}"}
    ctx = moore_to_context(MooreFamily(["x", "y"], [[], ["x"], ["y"], ["x", "y"]]))
    assert ctx.closed == set(ctx.ambient.elements)


def test_moore_validation():
    with pytest.raises(NotAMooreFamily, match="ground"):
        MooreFamily(["x", "y"], [["x"]])
    with pytest.raises(NotAMooreFamily, match="intersect"):
        MooreFamily(["x", "y", "z"], [["x", "y"], ["y", "z"], ["x", "y", "z"]])
    M = MooreFamily.completed(["x", "y", "z"], [["x", "y"], ["y", "z"]])
    assert frozenset({"y"}) in M.closed_sets
    with pytest.raises(GroundTooLarge):
        moore_to_context(MooreFamily([str(i) for i in range(6)], [[str(i) for i in range(6)]]))


def test_empty_set_need_not_be_closed():
    M = MooreFamily(["x", "y"], [["x"], ["x", "y"]])
    assert M.closure([]) == {"x"}


@pytest.mark.parametrize("ctx", hand_built_contexts(), ids=repr)
def test_reduction_on_hand_built_contexts(ctx):
    assert check_closure_reduction(ctx).passed


def test_hand_built_contexts_include_missing_closures():
    assert len(hand_built_contexts()) == 20
    assert any(check_closure_reduction(c).skipped for c in hand_built_contexts())


def test_z4_bridge():
    G = cyclic(4)
    ctx = group_closure_context(G)
    assert is_p_nongenerator(ctx, "{2}")
    assert smallest_closed_above(ctx, "{2}") == "{0,2}"
    assert is_nongenerator(ctx.closed_poset, "{0,2}")
    assert not is_p_nongenerator(ctx, "{1}")
    assert check_closure_reduction(ctx).passed


@settings(max_examples=100, deadline=None)
@given(st.builds(random_poset, n=st.integers(1, 6), edge_density=st.floats(0, 1),
                 seed=st.integers(0, 2**32 - 1)))
def test_degenerate_context_matches_plain_notions(R):
    ctx = ClosureContext(R, R.elements)
    for a in R:
        assert is_p_nongenerator(ctx, a) == is_nongenerator(R, a)
        for e in R:
            assert p_generates(ctx, {a, e}) == gen_is_top(R, {a, e})
    assert check_closure_reduction(ctx).passed


@settings(max_examples=150, deadline=None)
@given(moore_families)
def test_moore_contexts(M):
    ctx = moore_to_context(M)
    for S in M.closed_sets:
        assert smallest_closed_above(ctx, set_name(S)) == set_name(S)
    for x in ctx.ambient:
        c = smallest_closed_above(ctx, x)
        assert c is not None
        members = frozenset(filter(None, x.strip("{}").split(",")))
        assert c == set_name(M.closure(members))
        assert is_p_nongenerator(ctx, x) == oracle_p_nongenerator(M, members)
    report = check_closure_reduction(ctx)
    assert report.passed and report.skipped == 0


@settings(max_examples=100, deadline=None)
@given(moore_families, st.integers(0, 2**32 - 1))
def test_p_generates_antitone_in_closed_set(M, seed):
    ctx = moore_to_context(M)
    extra = ctx.ambient.elements[seed % len(ctx.ambient)]
    bigger = ClosureContext(ctx.ambient, ctx.closed | {extra})
    for x in ctx.ambient:
        for y in ctx.ambient:
            if p_generates(bigger, {x, y}):
                assert p_generates(ctx, {x, y})
