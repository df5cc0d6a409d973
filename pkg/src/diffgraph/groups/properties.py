"""Structural queries on enumerable groups: center, prime divisors, nilpotency, EPPO."""

from __future__ import annotations

from collections import Counter

import numpy as np

from diffgraph.groups.abelian import AbelianGroup
from diffgraph.groups.base import FiniteGroup
from diffgraph.groups.cayley import CayleyGroup
from diffgraph.numtheory import factorize, is_prime_power, prime_factors


def prime_divisors(G: FiniteGroup) -> tuple[int, ...]:
    """pi(G): the primes dividing |G|, ascending."""
    return prime_factors(G.order)


def is_trivial(G: FiniteGroup) -> bool:
    return G.order == 1


def is_p_group(G: FiniteGroup) -> bool:
    """True iff |G| is a prime power. The trivial group counts (vacuously); see ``is_trivial``."""
    return len(prime_divisors(G)) <= 1


def center_indices(G: FiniteGroup) -> np.ndarray:
    if isinstance(G, AbelianGroup):
        G.require_enumerable()
        return np.arange(G.order)
    if isinstance(G, CayleyGroup):
        t = G.table
        return np.nonzero((t == t.T).all(axis=1))[0]
    gens = G.generators()
    mask = np.ones(G.order, dtype=bool)
    for g in gens if gens is not None else range(G.order):
        mask &= G.mul_row(g) == G.mul_col(g)
    return np.nonzero(mask)[0]


def center(G: FiniteGroup) -> set:
    """Z(G) as a set of element ids."""
    return {G.element(int(i)) for i in center_indices(G)}


def center_size(G: FiniteGroup) -> int:
    return len(center_indices(G))


def is_abelian(G: FiniteGroup) -> bool:
    return isinstance(G, AbelianGroup) or center_size(G) == G.order


def is_nilpotent(G: FiniteGroup) -> bool:
    """Every pair of elements with coprime orders commutes.

    Scans all pairs (with early exit), so cost is O(|G|^2) for nilpotent groups.
    """
    if isinstance(G, AbelianGroup):
        return True
    orders = G.order_array()
    for i in range(G.order):
        coprime = np.gcd(orders, orders[i]) == 1
        coprime[:i] = False
        if not coprime.any():
            continue
        cand = np.nonzero(coprime)[0]
        if isinstance(G, CayleyGroup):
            if (G.table[i, cand] != G.table[cand, i]).any():
                return False
        elif (G.mul_row(i)[cand] != G.mul_col(i)[cand]).any():
            return False
    return True


def is_eppo(G: FiniteGroup) -> bool:
    """Every element has prime power order."""
    return all(is_prime_power(int(o)) for o in np.unique(G.order_array()))


def sylow_orders(G: FiniteGroup) -> dict[int, int]:
    return {p: p**e for p, e in factorize(G.order)}


def sylow_is_cyclic(G: FiniteGroup, p: int) -> bool:
    """For nilpotent G: the Sylow p-subgroup is cyclic iff some element has order |G|_p."""
    pe = sylow_orders(G)[p]
    return bool((G.order_array() % pe == 0).any())


def commuting_pairs(G: FiniteGroup) -> int:
    """Number of ordered commuting pairs, |G| times the class number."""
    if isinstance(G, AbelianGroup):
        return G.order**2
    if isinstance(G, CayleyGroup):
        t = G.table
        return int((t == t.T).sum())
    return int(sum((G.mul_row(i) == G.mul_col(i)).sum() for i in range(G.order)))


def centralizer_sizes(G: FiniteGroup) -> np.ndarray:
    """|C_G(g)| indexed by dense element index."""
    if isinstance(G, AbelianGroup):
        return np.full(G.order, G.order, dtype=np.int64)
    if isinstance(G, CayleyGroup):
        t = G.table
        return (t == t.T).sum(axis=1)
    return np.array([(G.mul_row(i) == G.mul_col(i)).sum() for i in range(G.order)], dtype=np.int64)


def fingerprint(G: FiniteGroup) -> tuple:
    """Cheap isomorphism invariant: multiset of (element order, centralizer size) pairs.

    It determines the order histogram, the center size and the number of
    commuting pairs. Non-isomorphic groups can share it, so counts of distinct
    fingerprints are lower bounds on counts of isomorphism types.
    """
    pairs = Counter(zip(G.order_array().tolist(), centralizer_sizes(G).tolist()))
    return (G.order, tuple(sorted(pairs.items())))
