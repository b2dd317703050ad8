"""Shared naive oracles, independent of the library's fast paths."""

from __future__ import annotations

import pytest


def naive_order(a: int, n: int) -> int:
    """Least t >= 1 with a^t = 1 mod n, by plain iteration."""
    x = a % n
    t = 1
    while x != 1:
        x = x * a % n
        t += 1
        assert t <= n, "not a unit"
    return t


def naive_period(N: int, a1: int, a2: int, P: int = 1, Q: int = -1) -> int:
    """Minimal period of the pair orbit by direct iteration."""
    a, b = a1 % N, a2 % N
    t = 0
    while True:
        a, b = b, (P * b - Q * a) % N
        t += 1
        if (a, b) == (a1 % N, a2 % N):
            return t


def trial_division_is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def primes_upto(n: int) -> list[int]:
    return [p for p in range(2, n + 1) if trial_division_is_prime(p)]


@pytest.fixture(scope="session")
def small_primes() -> list[int]:
    return primes_upto(200)
