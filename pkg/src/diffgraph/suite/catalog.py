"""The constructible group catalog used by the checks.

Everything here is reachable through the spec grammar: abelian groups in
invariant-factor form, dihedral, symmetric and alternating groups, nonabelian
semidirect products Z_n x| Z_m, and direct products of these. Entries are
sorted by (order, spec) so every run sees the same list.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement
from math import factorial, gcd, prod

from sympy.utilities.iterables import partitions

from diffgraph.numtheory import factorize, multiplicative_order


@dataclass(frozen=True, order=True)
class Entry:
    order: int
    spec: str
    family: str  # abelian | dihedral | symmetric | alternating | semidirect | product
    abelian: bool = False


def abelian_invariant_factors(n: int) -> list[tuple[int, ...]]:
    """All abelian groups of order n as invariant factor tuples d1 | d2 | ... (ascending)."""
    if n == 1:
        return [(1,)]
    per_prime = []
    for p, e in factorize(n):
        opts = []
        for part in partitions(e):
            exps = sorted((k for k, c in part.items() for _ in range(c)), reverse=True)
            opts.append([p**k for k in exps])
        per_prime.append(opts)
    out = []

    def rec(i: int, chosen: list[list[int]]) -> None:
        if i == len(per_prime):
            width = max(len(c) for c in chosen)
            factors = []
            for k in range(width):
                factors.append(prod(c[k] for c in chosen if k < len(c)))
            out.append(tuple(sorted(factors)))
            return
        for opt in per_prime[i]:
            rec(i + 1, chosen + [opt])

    rec(0, [])
    return sorted(set(out))


def abelian_spec(factors: tuple[int, ...]) -> str:
    return " x ".join(f"Z{d}" for d in factors)


def semidirect_params(max_order: int) -> list[tuple[int, int, int]]:
    """(n, m, g) giving nonabelian Z_n x| Z_m with n*m <= max_order.

    One g per cyclic subgroup <g> of units of order > 1 dividing m; the
    dihedral case (m = 2, g = n - 1) is left to the D_n family.
    """
    out = []
    for n in range(3, max_order // 2 + 1):
        for m in range(2, max_order // n + 1):
            seen: set[frozenset] = set()
            for g in range(2, n):
                if gcd(g, n) != 1:
                    continue
                k = multiplicative_order(g, n)
                if m % k:
                    continue
                sub = frozenset(pow(g, i, n) for i in range(k))
                if sub in seen:
                    continue
                seen.add(sub)
                if m == 2 and g == n - 1:
                    continue
                out.append((n, m, g))
    return out


def _nonabelian_bases(max_order: int) -> list[Entry]:
    out = []
    for n in range(3, max_order // 2 + 1):
        out.append(Entry(2 * n, f"D{n}", "dihedral"))
    n = 3
    while factorial(n) <= max_order:
        out.append(Entry(factorial(n), f"S{n}", "symmetric"))
        n += 1
    n = 4
    while factorial(n) // 2 <= max_order:
        out.append(Entry(factorial(n) // 2, f"A{n}", "alternating"))
        n += 1
    for n, m, g in semidirect_params(max_order):
        out.append(Entry(n * m, f"sd(Z{n},Z{m},{g})", "semidirect"))
    return out


@lru_cache(maxsize=None)
def catalog(max_order: int = 200, triple_samples: int = 24, seed: int = 0) -> tuple[Entry, ...]:
    entries: dict[str, Entry] = {}

    def add(e: Entry) -> None:
        if e.order <= max_order:
            entries.setdefault(e.spec, e)

    abelian = []
    for n in range(2, max_order + 1):
        for f in abelian_invariant_factors(n):
            e = Entry(n, abelian_spec(f), "abelian", abelian=True)
            abelian.append(e)
            add(e)
    bases = _nonabelian_bases(max_order)
    for b in bases:
        add(b)
    for b in bases:
        for a in abelian:
            if b.order * a.order <= max_order:
                add(Entry(b.order * a.order, f"{b.spec} x {a.spec}", "product"))
    for b1, b2 in combinations_with_replacement(bases, 2):
        if b1.order * b2.order <= max_order:
            x, y = sorted((b1, b2))
            add(Entry(x.order * y.order, f"{x.spec} x {y.spec}", "product"))
    for t in triple_products(max_order, triple_samples, seed):
        add(t)
    return tuple(sorted(entries.values()))


def small_non_p_factors(max_order: int) -> list[Entry]:
    """Small groups of non-prime-power order (so D(G_i) is not forced empty) for triple products."""
    out = []
    for e in [Entry(6, "Z6", "abelian", True), Entry(6, "S3", "symmetric"), Entry(10, "Z10", "abelian", True),
              Entry(10, "D5", "dihedral"), Entry(12, "Z12", "abelian", True), Entry(12, "A4", "alternating"),
              Entry(12, "D6", "dihedral"), Entry(12, "sd(Z3,Z4,2)", "semidirect"), Entry(14, "D7", "dihedral")]:
        if e.order <= max_order:
            out.append(e)
    return out


def triple_products(max_order: int, samples: int, seed: int) -> list[Entry]:
    """A seeded sample of G1 x G2 x G3 with small factors of any kind, order <= max_order."""
    small = [Entry(2, "Z2", "abelian", True), Entry(3, "Z3", "abelian", True), Entry(4, "Z4", "abelian", True),
             Entry(4, "Z2 x Z2", "abelian", True), Entry(5, "Z5", "abelian", True)] + small_non_p_factors(max_order)
    pool = []
    for combo in combinations_with_replacement(sorted(small), 3):
        o = prod(c.order for c in combo)
        if o <= max_order and not all(c.abelian for c in combo):
            pool.append(Entry(o, " x ".join(c.spec for c in combo), "product"))
    rng = random.Random(seed)
    pick = sorted(set(pool))
    return sorted(rng.sample(pick, min(samples, len(pick))))


# Number of isomorphism types per order (standard small-group census) for the
# orders p^2 q, pqr, p^3 q and p^2 q^2 up to 200. Orders pq follow a rule.
GROUP_COUNTS = {
    12: 5, 18: 5, 20: 5, 28: 4, 44: 4, 45: 2, 50: 5, 52: 5, 63: 4, 68: 5, 75: 3, 76: 4, 92: 4,
    98: 5, 99: 2, 116: 5, 117: 4, 124: 4, 147: 6, 148: 5, 153: 2, 164: 5, 171: 5, 172: 4, 175: 2, 188: 4,
    30: 4, 42: 6, 66: 4, 70: 4, 78: 6, 102: 4, 105: 2, 110: 6, 114: 6, 130: 4, 138: 4, 154: 4,
    165: 2, 170: 4, 174: 4, 182: 4, 186: 6, 190: 4, 195: 2,
    24: 15, 40: 14, 54: 15, 56: 13, 88: 12, 104: 14, 135: 5, 136: 15, 152: 12, 184: 12, 189: 13,
    36: 14, 100: 16, 196: 12,
}


def order_class(n: int) -> str | None:
    """'pq', 'p2q', 'pqr', 'p3q' or 'p2q2' for orders of those shapes (distinct primes), else None."""
    exps = sorted((e for _, e in factorize(n)), reverse=True) if n > 1 else []
    return {(1, 1): "pq", (2, 1): "p2q", (1, 1, 1): "pqr", (3, 1): "p3q", (2, 2): "p2q2"}.get(tuple(exps))


def group_count(n: int) -> int | None:
    """Number of groups of order n up to isomorphism, where known to this module."""
    if order_class(n) == "pq":
        p, q = (p for p, _ in factorize(n))
        return 2 if (q - 1) % p == 0 else 1
    return GROUP_COUNTS.get(n)
