"""Exact integer plumbing: primality, factorization, prime sets.

Everything here works on unbounded Python ints; nothing may overflow or
round.  Trial division is plenty at the scales this package targets
(group orders well below 10**6).
"""

from __future__ import annotations

from typing import Iterable

PrimeSet = tuple[int, ...]


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def factorization(n: int) -> dict[int, int]:
    """Prime factorization of n >= 1 as an ordered {prime: exponent} dict."""
    if n < 1:
        raise ValueError(f"factorization requires n >= 1, got {n}")
    out: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    f = 5
    while f * f <= n:
        for p in (f, f + 2):
            while n % p == 0:
                out[p] = out.get(p, 0) + 1
                n //= p
        f += 6
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return dict(sorted(out.items()))


def primes_of(n: int) -> PrimeSet:
    """Sorted tuple of the distinct primes dividing n."""
    return tuple(factorization(n))


def valuation(n: int, p: int) -> int:
    """Largest e with p**e dividing n (n >= 1)."""
    if n < 1:
        raise ValueError(f"valuation requires n >= 1, got {n}")
    e = 0
    while n % p == 0:
        e += 1
        n //= p
    return e


def prime_set(primes: Iterable[int]) -> PrimeSet:
    """Normalize an iterable of primes to a sorted, duplicate-free tuple.

    Raises ValueError if any entry is not prime.
    """
    out = sorted(set(primes))
    for p in out:
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
    return tuple(out)


