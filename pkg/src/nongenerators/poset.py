"""Finite posets with a maximum and the primitive order predicates.

A :class:`Poset` stores its order as a dense boolean matrix ``leq`` with
``leq[i, j]`` true iff ``elements[i] <= elements[j]``.  Elements are opaque
strings kept in lexicographic order, so every iteration in the package is
deterministic.  Hot paths use Python integers as bitsets (bit ``i`` stands
for ``elements[i]``).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import (
    CycleDetected,
    DuplicateElement,
    EmptyMeetRequest,
    NoMaximum,
    NotAChain,
    PosetError,
    SelfCover,
    SizeCapExceeded,
    UnknownElement,
)

#: Largest poset on which chains are enumerated exhaustively.
DEFAULT_CHAIN_CAP = 20


def transitive_closure(relation: np.ndarray) -> np.ndarray:
    """Reflexive-transitive closure of a square boolean matrix (Warshall)."""
    closure = np.array(relation, dtype=bool, copy=True)
    np.fill_diagonal(closure, True)
    for k in range(closure.shape[0]):
        closure |= np.outer(closure[:, k], closure[k, :])
    return closure


def check_antisymmetric(elements: Sequence[str], leq: np.ndarray) -> None:
    both = leq & leq.T
    np.fill_diagonal(both, False)
    if both.any():
        i, j = map(int, np.argwhere(both)[0])
        raise CycleDetected(
            f"order is not antisymmetric: {elements[i]!r} and {elements[j]!r} lie on a cycle"
        )


def order_matrix(elements: Sequence[str], covers: Iterable[Sequence[str]]) -> np.ndarray:
    """Validate a cover list and return the closed order matrix over ``elements``.

    No maximum is required; this is shared by :func:`build_poset` and the
    Zorn gadget, whose input need not have a top.
    """
    index: dict[str, int] = {}
    for e in elements:
        if e in index:
            raise DuplicateElement(f"element {e!r} listed twice")
        index[e] = len(index)
    rel = np.zeros((len(index), len(index)), dtype=bool)
    for pair in covers:
        if len(pair) != 2:
            raise PosetError(f"cover {list(pair)!r} is not a pair")
        lo, hi = pair
        for x in (lo, hi):
            if x not in index:
                raise UnknownElement(f"cover ({lo!r}, {hi!r}) names unknown element {x!r}")
        if lo == hi:
            raise SelfCover(f"self-cover ({lo!r}, {hi!r})")
        rel[index[lo], index[hi]] = True
    leq = transitive_closure(rel)
    check_antisymmetric(list(index), leq)
    return leq


class Poset:
    """An immutable finite poset with a maximum element ``top``.

    Construct from a cover list with :func:`build_poset`, or directly from a
    full order matrix.  The matrix is validated (reflexive, antisymmetric,
    transitive) and the maximum is detected automatically.
    """

    def __init__(self, elements: Sequence[str], leq: np.ndarray):
        elements = list(elements)
        if not elements:
            raise NoMaximum("a poset with a maximum needs at least one element")
        for e in elements:
            if not isinstance(e, str):
                raise TypeError(f"element identifiers must be strings, got {e!r}")
        if len(set(elements)) != len(elements):
            raise DuplicateElement("duplicate element identifiers")
        leq = np.asarray(leq, dtype=bool)
        n = len(elements)
        if leq.shape != (n, n):
            raise PosetError(f"order matrix has shape {leq.shape}, expected {(n, n)}")

        perm = sorted(range(n), key=elements.__getitem__)
        leq = leq[np.ix_(perm, perm)].copy()
        elements = [elements[i] for i in perm]

        if not leq.diagonal().all():
            raise PosetError("order is not reflexive")
        check_antisymmetric(elements, leq)
        if (transitive_closure(leq) != leq).any():
            raise PosetError("order is not transitive")
        tops = np.flatnonzero(leq.all(axis=0))
        if len(tops) != 1:
            raise NoMaximum("no element lies above every other element")

        leq.setflags(write=False)
        self.elements: tuple[str, ...] = tuple(elements)
        self.leq = leq
        self.index = {e: i for i, e in enumerate(elements)}
        self.top_index = int(tops[0])
        self.top = elements[self.top_index]
        self.up = tuple(_mask(leq[i, :]) for i in range(n))
        self.down = tuple(_mask(leq[:, i]) for i in range(n))
        self.full_mask = (1 << n) - 1
        self.below_top_mask = self.full_mask & ~(1 << self.top_index)
        self._chains: dict[bool, tuple[int, ...]] = {}
        # derived data memoized by the analysis modules
        self.memo: dict = {}

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[str]:
        return iter(self.elements)

    def __contains__(self, x: object) -> bool:
        return x in self.index

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poset):
            return NotImplemented
        return self.elements == other.elements and bool((self.leq == other.leq).all())

    def __hash__(self) -> int:
        return hash((self.elements, self.leq.tobytes()))

    def __repr__(self) -> str:
        return f"Poset({len(self)} elements, top={self.top!r})"

    def idx(self, x: str) -> int:
        try:
            return self.index[x]
        except KeyError:
            raise UnknownElement(f"{x!r} is not an element of the poset") from None

    def le(self, a: str, b: str) -> bool:
        return bool(self.leq[self.idx(a), self.idx(b)])

    def lt(self, a: str, b: str) -> bool:
        return a != b and self.le(a, b)

    def mask_of(self, xs: Iterable[str]) -> int:
        m = 0
        for x in xs:
            m |= 1 << self.idx(x)
        return m

    def names(self, mask: int) -> list[str]:
        """Elements of a bitset, in lexicographic order."""
        return [e for i, e in enumerate(self.elements) if mask >> i & 1]

    def cover_pairs(self) -> list[tuple[str, str]]:
        """The Hasse diagram (transitive reduction) as sorted ``(lower, upper)`` pairs."""
        strict = self.leq & ~np.eye(len(self), dtype=bool)
        through = (strict.astype(np.int64) @ strict.astype(np.int64)) > 0
        hasse = strict & ~through
        return [(self.elements[i], self.elements[j]) for i, j in np.argwhere(hasse)]

    def induced(self, subset: Iterable[str]) -> Poset:
        """Subposet on ``subset``; it must contain a maximum of its own."""
        keep = sorted({self.idx(x) for x in subset})
        return Poset([self.elements[i] for i in keep], self.leq[np.ix_(keep, keep)])

    def chain_masks(self, restrict_below_top: bool = False, cap: int = DEFAULT_CHAIN_CAP) -> tuple[int, ...]:
        """All nonempty chains as bitsets, memoized per restriction flag."""
        if len(self) > cap:
            raise SizeCapExceeded(
                f"chain enumeration capped at {cap} elements, poset has {len(self)}"
            )
        if restrict_below_top not in self._chains:
            allowed = self.below_top_mask if restrict_below_top else self.full_mask
            # sorting by down-set size gives a linear extension
            order = sorted(
                (i for i in range(len(self)) if allowed >> i & 1),
                key=lambda i: self.down[i].bit_count(),
            )
            found: list[int] = []

            def extend(mask: int, last: int, start: int) -> None:
                found.append(mask)
                for pos in range(start, len(order)):
                    j = order[pos]
                    if self.up[last] >> j & 1:
                        extend(mask | 1 << j, j, pos + 1)

            for pos, i in enumerate(order):
                extend(1 << i, i, pos + 1)
            self._chains[restrict_below_top] = tuple(found)
        return self._chains[restrict_below_top]


def _mask(row: np.ndarray) -> int:
    m = 0
    for i in np.flatnonzero(row):
        m |= 1 << int(i)
    return m


@dataclass(frozen=True)
class Chain:
    """A nonempty set of pairwise comparable elements."""

    members: frozenset[str]

    @classmethod
    def in_poset(cls, P: Poset, members: Iterable[str]) -> Chain:
        members = frozenset(members)
        if not members:
            raise NotAChain("chains are nonempty")
        for a in members:
            for b in members:
                if not (P.le(a, b) or P.le(b, a)):
                    raise NotAChain(f"{a!r} and {b!r} are incomparable")
        return cls(members)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[str]:
        return iter(sorted(self.members))


def build_poset(elements: Sequence[str], covers: Iterable[Sequence[str]]) -> Poset:
    """Poset whose order is the reflexive-transitive closure of ``covers``.

    >>> build_poset(["0", "m", "1"], [("0", "m"), ("m", "1")]).top
    '1'
    """
    return Poset(list(elements), order_matrix(elements, covers))


def maximal_below_top(P: Poset) -> set[str]:
    """Elements ``p < 1`` with nothing strictly between ``p`` and ``1``."""
    return {
        P.elements[i]
        for i in range(len(P))
        if i != P.top_index and P.up[i] & P.below_top_mask == 1 << i
    }


def join_is_top(P: Poset, a: str, e: str) -> bool:
    """True iff ``a`` and ``e`` have no common upper bound strictly below the top."""
    return not (P.up[P.idx(a)] & P.up[P.idx(e)] & P.below_top_mask)


def gen_is_top(P: Poset, X: Iterable[str]) -> bool:
    """True iff no ``p < 1`` lies above every member of ``X``.

    The empty family is bounded by every ``p < 1``, so it generates the top
    only in the one-element poset.
    """
    common = P.below_top_mask
    for x in X:
        common &= P.up[P.idx(x)]
    return common == 0


def partial_join(P: Poset, a: str, b: str) -> str | None:
    """Least upper bound of ``a`` and ``b``, or ``None`` when it does not exist."""
    ub = P.up[P.idx(a)] & P.up[P.idx(b)]
    for j in range(len(P)):
        if ub >> j & 1 and ub & ~P.up[j] == 0:
            return P.elements[j]
    return None


def partial_meet(P: Poset, X: Iterable[str]) -> str | None:
    """Greatest lower bound of a nonempty family, or ``None`` when absent."""
    X = list(X)
    if not X:
        raise EmptyMeetRequest("meet of an empty family is not defined here")
    lb = P.full_mask
    for x in X:
        lb &= P.down[P.idx(x)]
    for m in range(len(P)):
        if lb >> m & 1 and lb & ~P.down[m] == 0:
            return P.elements[m]
    return None


def enumerate_chains(
    P: Poset, restrict_below_top: bool = False, cap: int = DEFAULT_CHAIN_CAP
) -> Iterator[Chain]:
    """Every nonempty chain exactly once, optionally only chains below the top."""
    for mask in P.chain_masks(restrict_below_top, cap):
        yield Chain(frozenset(P.names(mask)))


def chain_unbounded_lt1(P: Poset, C: Chain | Iterable[str]) -> bool:
    """True iff all members are ``< 1`` and no ``p < 1`` bounds them all."""
    members = C.members if isinstance(C, Chain) else frozenset(C)
    if P.top in members:
        return False
    return gen_is_top(P, members)


def is_join_semilattice(P: Poset) -> bool:
    n = len(P)
    return all(
        partial_join(P, P.elements[i], P.elements[j]) is not None
        for i in range(n)
        for j in range(i + 1, n)
    )
