"""Closed elements inside an ambient poset, and finite Moore families.

A :class:`ClosureContext` marks a subset of an ambient poset as closed (the
top always is).  Generation is then measured against closed bounds only, and
an element is a non-generator relative to the closed elements exactly when its
smallest closed upper bound, if any, is a non-generator of the closed poset.
"""

from __future__ import annotations

from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from .errors import GroundTooLarge, InvalidClosureContext, NotAMooreFamily
from .nongen import LawReport, is_nongenerator
from .poset import Poset

#: Largest Moore-family ground set turned into a powerset context.
MOORE_GROUND_CAP = 5


class ClosureContext:
    """An ambient poset together with a set of closed elements containing the top."""

    def __init__(self, ambient: Poset, closed: Iterable[str]):
        closed = frozenset(closed)
        unknown = sorted(closed - set(ambient.elements))
        if unknown:
            raise InvalidClosureContext(f"closed elements not in the ambient poset: {unknown}")
        if ambient.top not in closed:
            raise InvalidClosureContext("the top must be closed")
        self.ambient = ambient
        self.closed = closed
        self.closed_mask = ambient.mask_of(closed)

    def __repr__(self) -> str:
        return f"ClosureContext({len(self.ambient)} elements, {len(self.closed)} closed)"

    @cached_property
    def closed_poset(self) -> Poset:
        """The poset induced on the closed elements."""
        return self.ambient.induced(self.closed)


def p_generates(ctx: ClosureContext, Y: Iterable[str]) -> bool:
    """True iff no closed ``b < 1`` lies above every member of ``Y``."""
    R = ctx.ambient
    common = ctx.closed_mask & R.below_top_mask
    for y in Y:
        common &= R.up[R.idx(y)]
    return common == 0


def p_nongenerator_witness(ctx: ClosureContext, a: str) -> str | None:
    for e in ctx.ambient.elements:
        if p_generates(ctx, (a, e)) and not p_generates(ctx, (e,)):
            return e
    return None


def is_p_nongenerator(ctx: ClosureContext, a: str) -> bool:
    """``{a, e}`` generating the top forces ``{e}`` to, for every ambient ``e``."""
    return p_nongenerator_witness(ctx, a) is None


def smallest_closed_above(ctx: ClosureContext, a: str) -> str | None:
    R = ctx.ambient
    candidates = R.up[R.idx(a)] & ctx.closed_mask
    for c in range(len(R)):
        if candidates >> c & 1 and candidates & ~R.up[c] == 0:
            return R.elements[c]
    return None


def check_closure_reduction(ctx: ClosureContext) -> LawReport:
    """Relative non-generators are exactly those whose closure is a non-generator.

    Elements without a smallest closed upper bound are counted as skipped.
    """
    checked = skipped = 0
    for a in ctx.ambient.elements:
        c = smallest_closed_above(ctx, a)
        if c is None:
            skipped += 1
            continue
        checked += 1
        left = is_p_nongenerator(ctx, a)
        right = is_nongenerator(ctx.closed_poset, c)
        if left != right:
            cex = {"a": a, "closure": c, "p_nongenerator": left, "closure_nongenerator": right}
            return LawReport("closure_reduction", False, checked, cex, skipped)
    return LawReport("closure_reduction", True, checked, None, skipped)


def set_name(members: Iterable[str]) -> str:
    """Canonical identifier of a subset, e.g. ``{x,y}``."""
    return "{" + ",".join(sorted(members)) + "}"


class MooreFamily:
    """A family of subsets of ``ground`` that contains ``ground`` and is closed
    under pairwise intersection.  The empty set need not be closed."""

    def __init__(self, ground: Sequence[str], closed_sets: Iterable[Iterable[str]]):
        ground = tuple(sorted(ground))
        if len(set(ground)) != len(ground):
            raise NotAMooreFamily("duplicate ground elements")
        family = {frozenset(s) for s in closed_sets}
        g = frozenset(ground)
        for s in family:
            if not s <= g:
                raise NotAMooreFamily(f"{set_name(s)} is not a subset of the ground set")
        if g not in family:
            raise NotAMooreFamily("the ground set must be closed")
        for s, t in combinations(sorted(family, key=set_name), 2):
            if s & t not in family:
                raise NotAMooreFamily(
                    f"{set_name(s)} and {set_name(t)} intersect in {set_name(s & t)}, which is not closed"
                )
        self.ground = ground
        self.closed_sets = frozenset(family)

    @classmethod
    def completed(cls, ground: Sequence[str], closed_sets: Iterable[Iterable[str]]) -> MooreFamily:
        """Close the given sets (plus the ground set) under intersection first."""
        family = {frozenset(s) for s in closed_sets} | {frozenset(ground)}
        while True:
            extra = {s & t for s in family for t in family} - family
            if not extra:
                return cls(ground, family)
            family |= extra

    def closure(self, X: Iterable[str]) -> frozenset[str]:
        X = frozenset(X)
        out = frozenset(self.ground)
        for s in self.closed_sets:
            if X <= s:
                out &= s
        return out

    def __repr__(self) -> str:
        return f"MooreFamily(ground={list(self.ground)}, {len(self.closed_sets)} closed sets)"


def powerset_poset(ground: Sequence[str]) -> Poset:
    """All subsets of ``ground`` ordered by inclusion."""
    ground = sorted(ground)
    n = len(ground)
    masks = range(1 << n)
    names = [set_name(g for i, g in enumerate(ground) if m >> i & 1) for m in masks]
    leq = np.array([[a & ~b == 0 for b in masks] for a in masks], dtype=bool)
    return Poset(names, leq)


def moore_to_context(M: MooreFamily, ground_cap: int = MOORE_GROUND_CAP) -> ClosureContext:
    if len(M.ground) > ground_cap:
        raise GroundTooLarge(
            f"ground set has {len(M.ground)} elements, cap is {ground_cap}"
        )
    return ClosureContext(powerset_poset(M.ground), (set_name(s) for s in M.closed_sets))
