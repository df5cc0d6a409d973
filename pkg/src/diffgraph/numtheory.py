"""Small integer helpers shared by the group and perfectness code."""

from __future__ import annotations

from functools import lru_cache
from math import gcd

from sympy import factorint as _factorint
from sympy import nextprime


@lru_cache(maxsize=4096)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of ``n`` as sorted ``(prime, exponent)`` pairs."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    return tuple(sorted(_factorint(n).items()))


def prime_factors(n: int) -> tuple[int, ...]:
    return tuple(p for p, _ in factorize(n))


def is_prime_power(n: int) -> bool:
    """True for p^k with k >= 1, and for 1 (the identity's order)."""
    return len(factorize(n)) <= 1


@lru_cache(maxsize=4096)
def divisors(n: int) -> tuple[int, ...]:
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return tuple(sorted(divs))


def coprime_residues(n: int) -> list[int]:
    return [k for k in range(n) if gcd(k, n) == 1] if n > 1 else [0]


def first_primes(count: int, avoid: int = 1) -> list[int]:
    """The ``count`` smallest primes not dividing ``avoid``."""
    out: list[int] = []
    p = 2
    while len(out) < count:
        if avoid % p:
            out.append(p)
        p = nextprime(p)
    return out


def multiplicative_order(g: int, n: int) -> int:
    if gcd(g, n) != 1:
        raise ValueError(f"{g} is not a unit mod {n}")
    if n == 1:
        return 1
    k, x = 1, g % n
    while x != 1:
        x = x * g % n
        k += 1
    return k


def solve_congruences(pairs: list[tuple[int, int]]) -> tuple[int, int] | None:
    """Combine ``x = r (mod m)`` pairs with non-coprime moduli allowed.

    Returns ``(r, m)`` describing all solutions, or None if inconsistent.
    """
    r, m = 0, 1
    for r2, m2 in pairs:
        g = gcd(m, m2)
        if (r2 - r) % g:
            return None
        lcm = m // g * m2
        # step = m * t where t solves (m/g) t = (r2-r)/g mod m2/g
        t = ((r2 - r) // g) * pow(m // g, -1, m2 // g) % (m2 // g) if m2 // g > 1 else 0
        r = (r + m * t) % lcm
        m = lcm
    return r, m
