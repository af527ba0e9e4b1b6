"""Non-generators: the definition, three equivalent criteria, and their laws.

An element ``a`` is a non-generator when ``a v e = 1`` forces ``e = 1``.
Besides the brute-force definition this module exposes three criteria that
are equivalent to it on every poset with a maximum:

* :func:`by_coatoms` -- ``a`` lies below every maximal element under the top,
  and every element with no maximal element above it shares a strict upper
  bound with ``a`` below the top;
* :func:`by_chains` -- the coatom bound plus a bound condition on every chain
  that is unbounded below the top;
* :func:`by_nonextendable_chains` -- the same, restricted to chains none of
  whose members lies below a maximal element.

On finite posets the chain clauses quantify over nothing; the functions still
enumerate the chains so that a disagreement would be observable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from .errors import NameClash
from .poset import (
    DEFAULT_CHAIN_CAP,
    Poset,
    maximal_below_top,
    order_matrix,
    partial_join,
)

#: Largest family size quantified over by the subset-absorption law.
DEFAULT_SUBSET_CAP = 4


@dataclass
class LawReport:
    """Outcome of an exhaustive law check, with the first counterexample."""

    law: str
    passed: bool
    checked: int
    counterexample: dict | None = None
    skipped: int = 0

    def as_dict(self) -> dict:
        return {
            "law": self.law,
            "passed": self.passed,
            "checked": self.checked,
            "skipped": self.skipped,
            "counterexample": self.counterexample,
        }


def _maximal_mask(P: Poset) -> int:
    if "maximal" not in P.memo:
        P.memo["maximal"] = P.mask_of(maximal_below_top(P))
    return P.memo["maximal"]


def nongenerator_witness(P: Poset, a: str) -> str | None:
    """First ``e != 1`` (lexicographically) with ``a v e = 1``, if any."""
    up_a = P.up[P.idx(a)] & P.below_top_mask
    for j, e in enumerate(P.elements):
        if j != P.top_index and up_a & P.up[j] == 0:
            return e
    return None


def is_nongenerator(P: Poset, a: str) -> bool:
    """Decide ``a`` from the definition, scanning every ``e`` in the poset."""
    return nongenerator_witness(P, a) is None


def nongenerators(P: Poset) -> list[str]:
    if "nongenerators" not in P.memo:
        P.memo["nongenerators"] = [a for a in P.elements if is_nongenerator(P, a)]
    return P.memo["nongenerators"]


def coatom_violation(P: Poset, a: str) -> str | None:
    """First maximal element under the top that does not lie above ``a``."""
    up_a = P.up[P.idx(a)]
    for p in P.names(_maximal_mask(P) & ~up_a):
        return p
    return None


def below_all_maximal(P: Poset, a: str) -> bool:
    return coatom_violation(P, a) is None


def _coatom_failure(P: Poset, a: str) -> dict | None:
    p = coatom_violation(P, a)
    return None if p is None else {"clause": "below_every_maximal", "maximal": p}


def _nonextendable(P: Poset, i: int) -> bool:
    return P.up[i] & _maximal_mask(P) == 0


def _strict_up(P: Poset, i: int) -> int:
    return P.up[i] & ~(1 << i)


def _by_coatoms_failure(P: Poset, a: str) -> dict | None:
    failure = _coatom_failure(P, a)
    if failure:
        return failure
    ia = P.idx(a)
    for i, e in enumerate(P.elements):
        if i == P.top_index or not _nonextendable(P, i):
            continue
        # strict bounds, exactly as in the criterion
        if _strict_up(P, ia) & _strict_up(P, i) & P.below_top_mask == 0:
            return {"clause": "nonextendable_strict_bound", "e": e}
    return None


def by_coatoms(P: Poset, a: str) -> bool:
    """Coatom bound plus strict common bounds for non-extendable elements."""
    return _by_coatoms_failure(P, a) is None


def _unbounded_chains(P: Poset, cap: int) -> list[int]:
    key = ("unbounded", cap)
    if key not in P.memo:
        P.memo[key] = [
            c for c in P.chain_masks(restrict_below_top=True, cap=cap)
            if c & P.below_top_mask == c and not _common_bound_below_top(P, c)
        ]
    return P.memo[key]


def _common_bound_below_top(P: Poset, chain: int) -> int:
    common = P.below_top_mask
    for i in range(len(P)):
        if chain >> i & 1:
            common &= P.up[i]
    return common


def _chain_failure(P: Poset, a: str, chains: Iterable[int], some_member: bool) -> dict | None:
    up_a = P.up[P.idx(a)] & P.below_top_mask
    for c in chains:
        members = [i for i in range(len(P)) if c >> i & 1]
        bounded = [up_a & P.up[i] != 0 for i in members]
        ok = any(bounded) if some_member else all(bounded)
        if not ok:
            return {"clause": "unbounded_chain", "chain": P.names(c)}
    return None


def _by_chains_failure(
    P: Poset, a: str, some_member: bool = False, cap: int = DEFAULT_CHAIN_CAP
) -> dict | None:
    return _coatom_failure(P, a) or _chain_failure(P, a, _unbounded_chains(P, cap), some_member)


def by_chains(P: Poset, a: str, some_member: bool = False, cap: int = DEFAULT_CHAIN_CAP) -> bool:
    """Coatom bound plus: every member of every chain unbounded below the top
    shares an upper bound ``r < 1`` with ``a``.

    ``some_member=True`` asks for one such member per chain instead of all.
    """
    return _by_chains_failure(P, a, some_member, cap) is None


def _by_nonextendable_chains_failure(
    P: Poset, a: str, some_member: bool = False, cap: int = DEFAULT_CHAIN_CAP
) -> dict | None:
    chains = [
        c for c in _unbounded_chains(P, cap)
        if all(_nonextendable(P, i) for i in range(len(P)) if c >> i & 1)
    ]
    return _coatom_failure(P, a) or _chain_failure(P, a, chains, some_member)


def by_nonextendable_chains(
    P: Poset, a: str, some_member: bool = False, cap: int = DEFAULT_CHAIN_CAP
) -> bool:
    """Like :func:`by_chains`, over chains with no member below a maximal element."""
    return _by_nonextendable_chains_failure(P, a, some_member, cap) is None


@dataclass
class NonGenVerdict:
    element: str
    by_definition: bool
    by_coatoms: bool
    by_chains: bool
    by_nonextendable_chains: bool
    witnesses: dict = field(default_factory=dict)

    @property
    def consistent(self) -> bool:
        return len({self.by_definition, self.by_coatoms, self.by_chains,
                    self.by_nonextendable_chains}) == 1

    def as_dict(self) -> dict:
        return {
            "element": self.element,
            "by_definition": self.by_definition,
            "by_coatoms": self.by_coatoms,
            "by_chains": self.by_chains,
            "by_nonextendable_chains": self.by_nonextendable_chains,
            "witnesses": self.witnesses,
        }


def verdict(P: Poset, a: str, cap: int = DEFAULT_CHAIN_CAP) -> NonGenVerdict:
    """Evaluate ``a`` under the definition and all three criteria."""
    witnesses = {}
    e = nongenerator_witness(P, a)
    if e is not None:
        witnesses["by_definition"] = {"e": e}
    for name, failure in (
        ("by_coatoms", _by_coatoms_failure(P, a)),
        ("by_chains", _by_chains_failure(P, a, cap=cap)),
        ("by_nonextendable_chains", _by_nonextendable_chains_failure(P, a, cap=cap)),
    ):
        if failure is not None:
            witnesses[name] = failure
    return NonGenVerdict(
        element=a,
        by_definition=e is None,
        by_coatoms="by_coatoms" not in witnesses,
        by_chains="by_chains" not in witnesses,
        by_nonextendable_chains="by_nonextendable_chains" not in witnesses,
        witnesses=witnesses,
    )


def check_characterizations(P: Poset, cap: int = DEFAULT_CHAIN_CAP) -> LawReport:
    """All four verdicts agree on every element (both member quantifiers)."""
    checked = 0
    for a in P.elements:
        v = verdict(P, a, cap)
        some = (by_chains(P, a, True, cap), by_nonextendable_chains(P, a, True, cap))
        checked += 1
        if not v.consistent or any(s != v.by_definition for s in some):
            return LawReport("characterizations_agree", False, checked, v.as_dict())
    return LawReport("characterizations_agree", True, checked)


def check_ideal_laws(P: Poset, subset_cap: int = DEFAULT_SUBSET_CAP) -> list[LawReport]:
    """Exhaustively check the three closure laws of the non-generator set.

    ``downward_closed``: below a non-generator is a non-generator.
    ``join_closed``: an existing join of two non-generators is one.
    ``nongenerator_absorbed``: if ``X`` plus a non-generator generates the top,
    ``X`` alone does (every ``X`` with at most ``subset_cap`` members).
    """
    ng = nongenerators(P)
    ng_mask = P.mask_of(ng)
    reports = []

    checked, cex = 0, None
    for a in ng:
        for b in P.names(P.down[P.idx(a)]):
            checked += 1
            if not ng_mask >> P.idx(b) & 1:
                cex = {"a": a, "b": b}
                break
        if cex:
            break
    reports.append(LawReport("nongenerators_downward_closed", cex is None, checked, cex))

    checked, cex = 0, None
    for a, b in combinations(ng, 2):
        j = partial_join(P, a, b)
        if j is None:
            continue
        checked += 1
        if not ng_mask >> P.idx(j) & 1:
            cex = {"a": a, "b": b, "join": j}
            break
    reports.append(LawReport("nongenerators_join_closed", cex is None, checked, cex))

    checked, cex = 0, None
    for k in range(min(subset_cap, len(P)) + 1):
        for X in combinations(range(len(P)), k):
            common = P.below_top_mask
            for x in X:
                common &= P.up[x]
            for a in ng:
                checked += 1
                if common and not common & P.up[P.idx(a)]:
                    cex = {"a": a, "X": [P.elements[x] for x in X]}
                    break
            if cex:
                break
        if cex:
            break
    reports.append(LawReport("nongenerator_absorbed", cex is None, checked, cex))
    return reports


def zorn_gadget(
    elements: Sequence[str],
    covers: Iterable[Sequence[str]],
    top: str = "1",
    fresh: str = "a",
) -> Poset:
    """Adjoin a new top and a fresh element incomparable to all of ``Q``.

    ``Q`` is given by ``elements`` and ``covers`` and need not have a maximum.
    In the result ``fresh`` is never a non-generator when ``Q`` is nonempty.
    """
    if top == fresh:
        raise NameClash("the new top and the fresh element need distinct names")
    for name in (top, fresh):
        if name in elements:
            raise NameClash(f"{name!r} already names an element of Q")
    q = order_matrix(elements, covers)
    n = len(elements)
    leq = np.zeros((n + 2, n + 2), dtype=bool)
    leq[:n, :n] = q
    leq[n, n] = leq[n + 1, n + 1] = True
    leq[:, n + 1] = True  # everything below the new top
    return Poset([*elements, fresh, top], leq)


def maximal_elements(elements: Sequence[str], covers: Iterable[Sequence[str]]) -> set[str]:
    """Maximal elements of an order given by covers (no top required)."""
    leq = order_matrix(elements, covers)
    strict_above = leq.sum(axis=1) - 1
    return {e for e, k in zip(elements, strict_above) if k == 0}


def check_zorn_gadget(
    elements: Sequence[str],
    covers: Iterable[Sequence[str]],
    gadget: Poset,
    fresh: str = "a",
) -> list[LawReport]:
    """The fresh element is not a non-generator, and the maximal elements
    under the new top are those of ``Q`` plus the fresh element."""
    covers = list(covers)
    e = nongenerator_witness(gadget, fresh)
    fresh_ok = e is not None
    reports = [LawReport("gadget_fresh_not_nongenerator", fresh_ok, 1,
                         None if fresh_ok else {"fresh": fresh})]
    expected = maximal_elements(elements, covers) | {fresh}
    got = maximal_below_top(gadget)
    reports.append(LawReport("gadget_maximal_set", got == expected, 1,
                             None if got == expected
                             else {"expected": sorted(expected), "got": sorted(got)}))
    return reports
