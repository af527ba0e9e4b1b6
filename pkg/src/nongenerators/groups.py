"""Finite groups from Cayley tables and their subgroup lattices.

Elements are indices ``0..order-1``; ``table[i][j]`` is the index of the
product ``i*j``.  Optional labels only affect how subgroups are named.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations, product
from typing import Sequence

import numpy as np

from .closure import ClosureContext, is_p_nongenerator
from .errors import NotAGroup, OrderTooLarge
from .poset import Poset, maximal_below_top

#: Largest group order for exhaustive subgroup enumeration.
MAX_GROUP_ORDER = 16


class FiniteGroup:
    def __init__(self, table: Sequence[Sequence[int]], identity: int = 0,
                 labels: Sequence[str] | None = None):
        t = np.asarray(table)
        if t.ndim != 2 or t.shape[0] != t.shape[1] or t.shape[0] == 0:
            raise NotAGroup("Cayley table must be a nonempty square")
        n = t.shape[0]
        if not np.issubdtype(t.dtype, np.integer) or t.min() < 0 or t.max() >= n:
            raise NotAGroup(f"table entries must be indices in 0..{n - 1}")
        if not 0 <= identity < n:
            raise NotAGroup(f"identity {identity} out of range")
        rng = np.arange(n)
        for axis in (0, 1):
            if not (np.sort(t, axis=axis) == np.expand_dims(rng, 1 - axis)).all():
                raise NotAGroup("table is not a Latin square")
        if not ((t[identity] == rng).all() and (t[:, identity] == rng).all()):
            raise NotAGroup(f"{identity} is not a two-sided identity")
        # (xy)z == x(yz) for all triples
        if not (t[t, :] == t[:, t]).all():
            raise NotAGroup("operation is not associative")
        if labels is None:
            labels = [str(i) for i in range(n)]
        if len(labels) != n or len(set(labels)) != n:
            raise NotAGroup("labels must be distinct, one per element")
        t.setflags(write=False)
        self.table = t
        self.identity = identity
        self.labels = tuple(labels)

    @property
    def order(self) -> int:
        return len(self.table)

    def __repr__(self) -> str:
        return f"FiniteGroup(order={self.order})"

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def generated(self, gens) -> frozenset[int]:
        """The subgroup generated by ``gens`` (closure under products)."""
        H = {self.identity, *gens}
        frontier = list(H)
        while frontier:
            x = frontier.pop()
            for y in list(H):
                for z in (self.mul(x, y), self.mul(y, x)):
                    if z not in H:
                        H.add(z)
                        frontier.append(z)
        return frozenset(H)

    def is_subgroup(self, S) -> bool:
        S = set(S)
        return self.identity in S and all(self.mul(a, b) in S for a in S for b in S)

    def name(self, H) -> str:
        return "{" + ",".join(self.labels[i] for i in sorted(H)) + "}"


def cyclic(n: int) -> FiniteGroup:
    return FiniteGroup([[(i + j) % n for j in range(n)] for i in range(n)])


def direct_product(G: FiniteGroup, H: FiniteGroup) -> FiniteGroup:
    pairs = list(product(range(G.order), range(H.order)))
    index = {p: k for k, p in enumerate(pairs)}
    table = [[index[G.mul(a, c), H.mul(b, d)] for c, d in pairs] for a, b in pairs]
    labels = [f"({G.labels[a]},{H.labels[b]})" for a, b in pairs]
    return FiniteGroup(table, index[G.identity, H.identity], labels)


def permutation_group(perms: Sequence[tuple[int, ...]]) -> FiniteGroup:
    """Group of the given permutations (must already be closed under composition)."""
    perms = sorted(set(map(tuple, perms)))
    index = {p: k for k, p in enumerate(perms)}
    # (p*q)(x) = p(q(x))
    table = [[index[tuple(p[q[x]] for x in range(len(p)))] for q in perms] for p in perms]
    ident = tuple(range(len(perms[0])))
    labels = ["".join(map(str, p)) for p in perms]
    return FiniteGroup(table, index[ident], labels)


def symmetric(n: int) -> FiniteGroup:
    return permutation_group(list(permutations(range(n))))


def dihedral(n: int) -> FiniteGroup:
    """Symmetries of a regular n-gon, of order 2n."""
    rotations = [tuple((i + k) % n for i in range(n)) for k in range(n)]
    reflections = [tuple((k - i) % n for i in range(n)) for k in range(n)]
    return permutation_group(rotations + reflections)


def quaternion() -> FiniteGroup:
    """Q8 with elements 1, -1, i, -i, j, -j, k, -k."""
    units = ["1", "i", "j", "k"]
    # unit products as (sign, unit)
    prod = {
        ("1", u): (1, u) for u in units
    } | {(u, "1"): (1, u) for u in units} | {
        ("i", "i"): (-1, "1"), ("j", "j"): (-1, "1"), ("k", "k"): (-1, "1"),
        ("i", "j"): (1, "k"), ("j", "k"): (1, "i"), ("k", "i"): (1, "j"),
        ("j", "i"): (-1, "k"), ("k", "j"): (-1, "i"), ("i", "k"): (-1, "j"),
    }
    elems = [(s, u) for u in units for s in (1, -1)]
    labels = [("" if s > 0 else "-") + u for s, u in elems]
    index = {e: k for k, e in enumerate(elems)}
    table = []
    for s1, u1 in elems:
        row = []
        for s2, u2 in elems:
            s, u = prod[u1, u2]
            row.append(index[s * s1 * s2, u])
        table.append(row)
    return FiniteGroup(table, index[1, "1"], labels)


def catalog() -> dict[str, FiniteGroup]:
    """Bundled groups: Z1..Z12, Z2xZ2, S3, D4, Q8."""
    groups = {f"Z{n}": cyclic(n) for n in range(1, 13)}
    groups["Z2xZ2"] = direct_product(cyclic(2), cyclic(2))
    groups["S3"] = symmetric(3)
    groups["D4"] = dihedral(4)
    groups["Q8"] = quaternion()
    return groups


@dataclass(frozen=True)
class SubgroupLattice:
    group: FiniteGroup
    subgroups: tuple[frozenset[int], ...]
    poset: Poset

    def subgroup(self, name: str) -> frozenset[int]:
        for H in self.subgroups:
            if self.group.name(H) == name:
                return H
        raise KeyError(name)


def _check_order(G: FiniteGroup) -> None:
    if G.order > MAX_GROUP_ORDER:
        raise OrderTooLarge(f"order {G.order} exceeds the cap of {MAX_GROUP_ORDER}")


def enumerate_subgroups(G: FiniteGroup) -> list[frozenset[int]]:
    """All subgroups, grown from the cyclic ones by adjoining single elements."""
    _check_order(G)
    found = {G.generated([g]) for g in range(G.order)}
    frontier = list(found)
    while frontier:
        H = frontier.pop()
        for g in range(G.order):
            if g not in H:
                K = G.generated([*H, g])
                if K not in found:
                    found.add(K)
                    frontier.append(K)
    return sorted(found, key=lambda H: (len(H), sorted(H)))


def subgroups_by_subsets(G: FiniteGroup) -> list[frozenset[int]]:
    """Independent oracle: filter every subset for the subgroup property."""
    out = []
    for k in range(1, G.order + 1):
        if G.order % k:
            continue
        for S in combinations(range(G.order), k):
            if G.is_subgroup(S):
                out.append(frozenset(S))
    return sorted(out, key=lambda H: (len(H), sorted(H)))


def subgroup_lattice(G: FiniteGroup) -> SubgroupLattice:
    subs = enumerate_subgroups(G)
    names = [G.name(H) for H in subs]
    leq = np.array([[H <= K for K in subs] for H in subs], dtype=bool)
    return SubgroupLattice(G, tuple(subs), Poset(names, leq))


def group_frattini(G: FiniteGroup) -> frozenset[int]:
    """Intersection of the maximal subgroups (the whole group if there are none)."""
    L = subgroup_lattice(G)
    out = frozenset(range(G.order))
    for name in maximal_below_top(L.poset):
        out &= L.subgroup(name)
    return out


def is_group_nongenerator(G: FiniteGroup, g: int) -> bool:
    """Whenever a subgroup together with ``g`` generates ``G``, the subgroup is ``G``."""
    whole = frozenset(range(G.order))
    for H in enumerate_subgroups(G):
        if H != whole and G.generated([*H, g]) == whole:
            return False
    return True


def is_group_nongenerator_by_subsets(G: FiniteGroup, g: int) -> bool:
    """Same notion quantified over raw subsets; exponential, for tiny orders."""
    whole = frozenset(range(G.order))
    for k in range(G.order + 1):
        for S in combinations(range(G.order), k):
            if G.generated([*S, g]) == whole and G.generated(S) != whole:
                return False
    return True


def group_closure_context(G: FiniteGroup) -> ClosureContext:
    """Subgroups (closed) plus singletons ``{g}``, ordered by inclusion."""
    subs = enumerate_subgroups(G)
    sets = list(dict.fromkeys([*subs, *(frozenset([g]) for g in range(G.order))]))
    names = [G.name(S) for S in sets]
    leq = np.array([[S <= T for T in sets] for S in sets], dtype=bool)
    return ClosureContext(Poset(names, leq), (G.name(H) for H in subs))


def bridge_verdict(G: FiniteGroup, g: int, ctx: ClosureContext | None = None) -> bool:
    """Whether ``{g}`` is a non-generator relative to the subgroups."""
    ctx = ctx or group_closure_context(G)
    return is_p_nongenerator(ctx, G.name([g]))
