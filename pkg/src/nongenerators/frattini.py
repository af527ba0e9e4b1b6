"""Compactness relative to the top, the Frattini element, and its laws.

Absent results carry a reason code: ``NoMeet`` (the maximal elements have no
meet), ``EmptyFamily`` (there are no non-generators to join) or ``NoJoin``
(the non-generators have no least upper bound).
"""

from __future__ import annotations

from dataclasses import dataclass

from .nongen import (
    LawReport,
    _maximal_mask,
    below_all_maximal,
    by_chains,
    by_nonextendable_chains,
    is_nongenerator,
    nongenerators,
)
from .poset import (
    DEFAULT_CHAIN_CAP,
    Poset,
    chain_unbounded_lt1,
    is_join_semilattice,
    maximal_below_top,
    partial_meet,
)


@dataclass(frozen=True)
class CompactnessClass:
    element: str
    one_compact: bool
    weakly: bool
    very_weakly: bool

    def as_dict(self) -> dict:
        return {
            "one_compact": self.one_compact,
            "weakly": self.weakly,
            "very_weakly": self.very_weakly,
        }


@dataclass(frozen=True)
class FrattiniResult:
    phi: str | None
    phi_reason: str | None
    maximal_set: tuple[str, ...]
    nongen_join: str | None
    nongen_join_reason: str | None

    @property
    def agree(self) -> bool:
        return self.phi == self.nongen_join

    def as_dict(self) -> dict:
        return {
            "phi": self.phi,
            "phi_reason": self.phi_reason,
            "maximal": list(self.maximal_set),
            "nongenerator_join": self.nongen_join,
            "nongenerator_join_reason": self.nongen_join_reason,
            "agree": self.agree,
        }


def _generating_chains(P: Poset, below_top: bool, cap: int) -> list[int]:
    key = ("generating", below_top, cap)
    if key not in P.memo:
        chains = P.chain_masks(restrict_below_top=below_top, cap=cap)
        out = []
        for c in chains:
            common = P.below_top_mask
            for i in range(len(P)):
                if c >> i & 1:
                    common &= P.up[i]
            if common == 0:
                out.append(c)
        P.memo[key] = out
    return P.memo[key]


def is_1_compact(P: Poset, a: str, cap: int = DEFAULT_CHAIN_CAP) -> bool:
    """Every chain generating the top has a member above ``a``.

    Chains containing the top are included; ``a <= 1`` settles them.
    """
    up_a = P.up[P.idx(a)]
    return all(up_a & c for c in _generating_chains(P, False, cap))


def _weak_ok(P: Poset, a: str, chain: int) -> bool:
    up_a = P.up[P.idx(a)] & P.below_top_mask
    return any(chain >> i & 1 and up_a & P.up[i] for i in range(len(P)))


def is_weakly_1_compact(
    P: Poset, a: str, cap: int = DEFAULT_CHAIN_CAP, include_top_chains: bool = False
) -> bool:
    """Every generating chain has a member sharing an upper bound ``r < 1`` with ``a``.

    Only chains strictly below the top are considered by default: a chain
    containing the top has no member below any ``r < 1``, so admitting such
    chains would make no element weakly compact in any poset.
    """
    chains = _generating_chains(P, not include_top_chains, cap)
    return all(_weak_ok(P, a, c) for c in chains)


def is_very_weakly_1_compact(
    P: Poset, a: str, cap: int = DEFAULT_CHAIN_CAP, include_top_chains: bool = False
) -> bool:
    """As :func:`is_weakly_1_compact`, limited to chains with no member below
    a maximal element under the top."""
    maximal = _maximal_mask(P)
    chains = [
        c for c in _generating_chains(P, not include_top_chains, cap)
        if all(P.up[i] & maximal == 0 for i in range(len(P)) if c >> i & 1)
    ]
    return all(_weak_ok(P, a, c) for c in chains)


def compactness(P: Poset, a: str, cap: int = DEFAULT_CHAIN_CAP) -> CompactnessClass:
    return CompactnessClass(
        a,
        is_1_compact(P, a, cap),
        is_weakly_1_compact(P, a, cap),
        is_very_weakly_1_compact(P, a, cap),
    )


def frattini_element(P: Poset) -> str | None:
    """Meet of the maximal elements under the top; the top if there are none."""
    maximal = maximal_below_top(P)
    if not maximal:
        return P.top
    return partial_meet(P, sorted(maximal))


def least_upper_bound(P: Poset, X: list[str]) -> str | None:
    ub = P.full_mask
    for x in X:
        ub &= P.up[P.idx(x)]
    for j in range(len(P)):
        if ub >> j & 1 and ub & ~P.up[j] == 0:
            return P.elements[j]
    return None


def nongenerator_join(P: Poset) -> str | None:
    """Least upper bound of all non-generators; ``None`` if absent or empty."""
    ng = nongenerators(P)
    return least_upper_bound(P, ng) if ng else None


def frattini_analysis(P: Poset) -> FrattiniResult:
    maximal = tuple(sorted(maximal_below_top(P)))
    phi = frattini_element(P)
    ng = nongenerators(P)
    join = nongenerator_join(P)
    if join is None:
        join_reason = "EmptyFamily" if not ng else "NoJoin"
    else:
        join_reason = None
    return FrattiniResult(
        phi=phi,
        phi_reason=None if phi is not None else "NoMeet",
        maximal_set=maximal,
        nongen_join=join,
        nongen_join_reason=join_reason,
    )


def check_coatom_characterization(P: Poset, cap: int = DEFAULT_CHAIN_CAP) -> LawReport:
    """For very-weakly compact ``a``: non-generator iff below every maximal element."""
    checked = skipped = 0
    for a in P.elements:
        if not is_very_weakly_1_compact(P, a, cap):
            skipped += 1
            continue
        checked += 1
        left, right = is_nongenerator(P, a), below_all_maximal(P, a)
        if left != right:
            cex = {"a": a, "nongenerator": left, "below_every_maximal": right}
            return LawReport("coatom_characterization", False, checked, cex, skipped)
    return LawReport("coatom_characterization", True, checked, None, skipped)


def check_frattini_laws(P: Poset, cap: int = DEFAULT_CHAIN_CAP) -> list[LawReport]:
    """Relations between the Frattini element and the join of non-generators.

    ``frattini_is_nongenerator_join``: a very-weakly compact Frattini element
    equals the join of the non-generators.
    ``frattini_exists_iff_join``: one exists iff the other does, and then
    they coincide (every finite poset is very-weakly algebraic).
    ``nongenerators_below_frattini``: every non-generator lies below it.
    ``semilattice_frattini``: in a join-semilattice with a non-generator the
    Frattini element exists and is that join (skipped otherwise).
    """
    res = frattini_analysis(P)
    phi, join = res.phi, res.nongen_join
    reports = []

    if phi is not None and is_very_weakly_1_compact(P, phi, cap):
        ok = phi == join
        reports.append(LawReport("frattini_is_nongenerator_join", ok, 1,
                                 None if ok else {"phi": phi, "nongenerator_join": join}))
    else:
        reports.append(LawReport("frattini_is_nongenerator_join", True, 0, skipped=1))

    ok = (phi is None) == (join is None) and phi == join
    reports.append(LawReport("frattini_exists_iff_join", ok, 1,
                             None if ok else {"phi": phi, "nongenerator_join": join}))

    cex = None
    ng = nongenerators(P)
    if phi is not None:
        for a in ng:
            if not P.le(a, phi):
                cex = {"a": a, "phi": phi}
                break
    reports.append(LawReport("nongenerators_below_frattini", cex is None,
                             len(ng) if phi is not None else 0, cex))

    if ng and is_join_semilattice(P):
        ok = phi is not None and phi == join
        reports.append(LawReport("semilattice_frattini", ok, 1,
                                 None if ok else {"phi": phi, "nongenerator_join": join}))
    else:
        reports.append(LawReport("semilattice_frattini", True, 0, skipped=1))
    return reports


def check_finite_collapse(P: Poset, cap: int = DEFAULT_CHAIN_CAP) -> list[LawReport]:
    """What finiteness forces: no chain is unbounded below the top, both chain
    criteria reduce to the coatom bound, and every element is compact in all
    three senses."""
    reports = []
    chains = P.chain_masks(False, cap)
    cex = next(
        ({"chain": P.names(c)} for c in chains if chain_unbounded_lt1(P, P.names(c))), None
    )
    reports.append(LawReport("no_unbounded_chains", cex is None, len(chains), cex))

    cex = None
    for a in P.elements:
        bound = below_all_maximal(P, a)
        if by_chains(P, a, cap=cap) != bound or by_nonextendable_chains(P, a, cap=cap) != bound:
            cex = {"a": a, "below_every_maximal": bound}
            break
    reports.append(LawReport("chain_criteria_collapse", cex is None, len(P), cex))

    cex = None
    for a in P.elements:
        c = compactness(P, a, cap)
        if not (c.one_compact and c.weakly and c.very_weakly):
            cex = {"a": a, **c.as_dict()}
            break
    reports.append(LawReport("all_elements_compact", cex is None, len(P), cex))
    return reports
