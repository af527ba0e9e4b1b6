"""Standard small posets, exhaustive enumeration and seeded random instances."""

from __future__ import annotations

from itertools import combinations, product
from typing import Iterator

import numpy as np

from .closure import ClosureContext, MooreFamily
from .errors import PosetError, RetryBudgetExhausted
from .poset import Poset, build_poset, partial_join, transitive_closure


def chain_poset(n: int) -> Poset:
    """``c0 < c1 < ... < c{n-1}``."""
    if n < 1:
        raise PosetError("a chain needs at least one element")
    names = [f"c{i}" for i in range(n)]
    return build_poset(names, list(zip(names, names[1:])))


def antichain_plus_top(k: int) -> Poset:
    """``k`` pairwise incomparable elements ``p0..`` under a top ``1``."""
    names = [f"p{i}" for i in range(k)]
    return build_poset([*names, "1"], [(p, "1") for p in names])


def diamond(k: int) -> Poset:
    """Bottom ``0``, ``k`` atoms ``a0..``, top ``1``."""
    atoms = [f"a{i}" for i in range(k)]
    return build_poset(["0", *atoms, "1"], [("0", a) for a in atoms] + [(a, "1") for a in atoms])


def divisor_lattice(n: int) -> Poset:
    if n < 1:
        raise PosetError("divisor lattices need n >= 1")
    divs = [d for d in range(1, n + 1) if n % d == 0]
    leq = np.array([[b % a == 0 for b in divs] for a in divs], dtype=bool)
    return Poset([str(d) for d in divs], leq)


def all_posets_with_top(n: int) -> Iterator[Poset]:
    """Every labeled poset with a maximum on elements ``"0".."n-1"``.

    The top is chosen first; the rest ranges over every strict partial order
    on the remaining labels, generated as all transitive antisymmetric
    relations.
    """
    names = [str(i) for i in range(n)]
    for t in range(n):
        rest = [i for i in range(n) if i != t]
        pairs = [(i, j) for i in rest for j in rest if i != j]
        for bits in product((False, True), repeat=len(pairs)):
            leq = np.eye(n, dtype=bool)
            leq[:, t] = True
            for (i, j), b in zip(pairs, bits):
                leq[i, j] |= b
            if (leq & leq.T).sum() != n:
                continue
            if (transitive_closure(leq) != leq).any():
                continue
            yield Poset(names, leq)


def random_order(n: int, edge_density: float, seed) -> tuple[list[str], list[tuple[str, str]]]:
    """Random acyclic relation on ``x0..x{n-1}`` given as covers (no top required)."""
    if n < 1 or not 0 <= edge_density <= 1:
        raise PosetError("need n >= 1 and 0 <= edge_density <= 1")
    rng = np.random.default_rng(seed)
    names = [f"x{i}" for i in range(n)]
    # edges only go forward in a random permutation, so the relation is acyclic
    perm = rng.permutation(n)
    covers = [
        (names[perm[i]], names[perm[j]])
        for i, j in combinations(range(n), 2)
        if rng.random() < edge_density
    ]
    return names, covers


def random_poset(n: int, edge_density: float, seed) -> Poset:
    """Closure of a random DAG; a fresh top ``top`` is adjoined if no maximum exists."""
    names, covers = random_order(n, edge_density, seed)
    leq = transitive_closure(_relation(names, covers))
    if leq.all(axis=0).any():
        return Poset(names, leq)
    return build_poset([*names, "top"], covers + [(x, "top") for x in names])


def _relation(names, covers) -> np.ndarray:
    index = {x: i for i, x in enumerate(names)}
    rel = np.zeros((len(names), len(names)), dtype=bool)
    for a, b in covers:
        rel[index[a], index[b]] = True
    return rel


def adjoin_join(P: Poset, a: str, b: str, name: str) -> Poset:
    """Add ``name`` as the least upper bound of ``a`` and ``b``.

    The new element lies above everything below ``a`` or ``b`` and below
    every common upper bound of them.
    """
    n = len(P)
    ia, ib = P.idx(a), P.idx(b)
    leq = np.zeros((n + 1, n + 1), dtype=bool)
    leq[:n, :n] = P.leq
    leq[:n, n] = P.leq[:, ia] | P.leq[:, ib]
    leq[n, :n] = P.leq[ia, :] & P.leq[ib, :]
    leq[n, n] = True
    return Poset([*P.elements, name], leq)


def _missing_join(P: Poset) -> tuple[str, str] | None:
    for i, j in combinations(range(len(P)), 2):
        a, b = P.elements[i], P.elements[j]
        if partial_join(P, a, b) is None:
            return a, b
    return None


def random_join_semilattice(n: int, seed, edge_density: float = 0.4,
                            max_adjoined: int | None = None, retries: int = 20) -> Poset:
    """Random poset closed under binary joins by adjoining formal joins.

    Each retry draws a fresh poset from a seed-determined sequence; after
    ``retries`` failures to close within ``max_adjoined`` new elements the
    builder gives up.
    """
    max_adjoined = 2 * n if max_adjoined is None else max_adjoined
    seeds = np.random.SeedSequence(seed).spawn(retries)
    for s in seeds:
        P = random_poset(n, edge_density, s)
        for k in range(max_adjoined + 1):
            missing = _missing_join(P)
            if missing is None:
                return P
            if k == max_adjoined:
                break
            P = adjoin_join(P, *missing, name=f"j{k}")
    raise RetryBudgetExhausted(f"no join-semilattice found after {retries} attempts")


def random_moore_family(ground_size: int, density: float, seed) -> MooreFamily:
    """Each subset is drawn with probability ``density``; the draw is then
    closed under intersection (and the ground set added)."""
    if ground_size < 0 or not 0 <= density <= 1:
        raise PosetError("need ground_size >= 0 and 0 <= density <= 1")
    rng = np.random.default_rng(seed)
    ground = [f"g{i}" for i in range(ground_size)]
    sets = [
        [g for i, g in enumerate(ground) if m >> i & 1]
        for m in range(1 << ground_size)
        if rng.random() < density
    ]
    return MooreFamily.completed(ground, sets)


def hand_built_contexts() -> list[ClosureContext]:
    """Twenty small closure contexts, several of them without smallest closures."""
    M2 = diamond(2)
    M3 = diamond(3)
    chain4 = chain_poset(4)
    pq0 = build_poset(["0", "p", "q", "1"], [("0", "p"), ("0", "q"), ("p", "1"), ("q", "1")])
    pq = antichain_plus_top(2)
    d12 = divisor_lattice(12)
    d30 = divisor_lattice(30)
    n5 = build_poset(["0", "a", "b", "c", "1"],
                     [("0", "a"), ("a", "b"), ("b", "1"), ("0", "c"), ("c", "1")])
    bowtie = build_poset(["a", "b", "c", "d", "1"],
                         [("a", "c"), ("a", "d"), ("b", "c"), ("b", "d"), ("c", "1"), ("d", "1")])
    return [
        ClosureContext(M2, M2.elements),
        ClosureContext(M2, ["0", "1"]),
        ClosureContext(M2, ["0", "a0", "1"]),
        ClosureContext(M2, ["a0", "a1", "1"]),
        ClosureContext(M2, ["1"]),
        ClosureContext(M3, ["0", "a0", "a1", "1"]),
        ClosureContext(M3, ["a0", "a1", "a2", "1"]),
        ClosureContext(chain4, chain4.elements),
        ClosureContext(chain4, ["c1", "c3"]),
        ClosureContext(chain4, ["c0", "c2", "c3"]),
        ClosureContext(pq0, ["p", "q", "1"]),
        ClosureContext(pq0, ["0", "p", "1"]),
        ClosureContext(pq, pq.elements),
        ClosureContext(d12, ["1", "2", "3", "12"]),
        ClosureContext(d12, ["4", "6", "12"]),
        ClosureContext(d30, ["1", "6", "10", "15", "30"]),
        ClosureContext(d30, ["2", "3", "5", "30"]),
        ClosureContext(n5, ["0", "b", "c", "1"]),
        ClosureContext(bowtie, ["c", "d", "1"]),
        ClosureContext(bowtie, ["a", "c", "1"]),
    ]
