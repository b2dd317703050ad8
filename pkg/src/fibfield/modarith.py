"""Exact modular arithmetic over Z/NZ.

Primality is decided by deterministic Miller-Rabin with the fixed base set
(2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37), which is correct for all
n < 3.3 * 10^24 and in particular for every 64-bit input.  Factorization is
trial division up to 10^4 followed by Brent's variant of Pollard rho with
deterministic seeding (c = 1, 2, 3, ... until a factor splits off).

Residues are plain ints in least-non-negative form; every function takes the
modulus explicitly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .config import INT_WIDTH_CAP
from .errors import BadDivisor, BadGroupOrder, NotInvertible

MILLER_RABIN_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

TRIAL_DIVISION_BOUND = 10_000


def _check_width(n: int) -> None:
    if n >= INT_WIDTH_CAP:
        raise ValueError(f"input {n} exceeds the 2^62 width cap")


def mod_pow(base: int, exp: int, n: int) -> int:
    """base^exp mod n by square-and-multiply; exp = 0 gives 1 mod n."""
    if exp < 0:
        raise ValueError("exponent must be non-negative")
    return pow(base % n, exp, n)


def mod_inv(a: int, n: int) -> int:
    """Inverse of a modulo n via extended gcd; raises NotInvertible."""
    a %= n
    g, x, _ = _xgcd(a, n)
    if g != 1:
        raise NotInvertible(f"gcd({a}, {n}) = {g} != 1")
    return x % n


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, x, y) with a*x + b*y = g = gcd(a, b)."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for all n < 2^64."""
    if n < 2:
        return False
    _check_width(n)
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    for a in MILLER_RABIN_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class Factorization:
    """Complete factorization: factors sorted by prime, product equals n."""

    n: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        prod = 1
        last = 0
        for p, e in self.factors:
            if p <= last:
                raise ValueError("primes must be strictly increasing")
            if e < 1 or not is_prime(p):
                raise ValueError(f"bad factor ({p}, {e})")
            prod *= p**e
            last = p
        if prod != self.n:
            raise ValueError(f"factors reassemble to {prod}, not {self.n}")

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)


def _pollard_rho(n: int) -> int:
    """Brent-cycle rho; n must be odd composite > 1.  Deterministic: the
    polynomial constant c walks 1, 2, 3, ... until a proper factor appears."""
    if n % 2 == 0:
        return 2
    for c in range(1, n):
        y, m, g, r, q = 2, 128, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                k += m
                g = math.gcd(q, n)
            r <<= 1
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"rho failed on {n}")  # unreachable for composite n


def factorize(n: int) -> Factorization:
    """Complete factorization of n >= 1."""
    if n < 1:
        raise ValueError("n must be positive")
    _check_width(n)
    original = n
    counts: dict[int, int] = {}
    for p in range(2, TRIAL_DIVISION_BOUND + 1):
        if p * p > n:
            break
        while n % p == 0:
            counts[p] = counts.get(p, 0) + 1
            n //= p
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            counts[m] = counts.get(m, 0) + 1
            continue
        d = _pollard_rho(m)
        stack.append(d)
        stack.append(m // d)
    return Factorization(original, tuple(sorted(counts.items())))


def divisors(f: Factorization) -> list[int]:
    """All divisors of f.n in increasing order."""
    divs = [1]
    for p, e in f.factors:
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def multiplicative_order(a: int, n: int, group_order: int) -> int:
    """Least t >= 1 with a^t = 1 mod n, given a multiple of the order.

    Computed by factoring group_order and stripping primes, never by naive
    iteration (the naive loop lives in the test oracles).
    """
    a %= n
    if math.gcd(a, n) != 1:
        raise NotInvertible(f"gcd({a}, {n}) != 1")
    if pow(a, group_order, n) != 1:
        raise BadGroupOrder(f"{a}^{group_order} != 1 mod {n}")
    t = group_order
    for p in factorize(group_order).primes:
        while t % p == 0 and pow(a, t // p, n) == 1:
            t //= p
    return t


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a|p) by Euler's criterion; p an odd prime."""
    a %= p
    if a == 0:
        return 0
    r = pow(a, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


def sqrt_mod(a: int, p: int) -> tuple[int, int] | None:
    """Both square roots of a mod p (smaller first), or None if a is a
    non-residue; (0, 0) for a = 0.  Tonelli-Shanks."""
    a %= p
    if a == 0:
        return (0, 0)
    if legendre(a, p) != 1:
        return None
    if p % 4 == 3:
        r = pow(a, (p + 1) // 4, p)
        return (r, p - r) if r <= p - r else (p - r, r)
    # Tonelli-Shanks: write p-1 = q * 2^s with q odd
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while legendre(z, p) != -1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        t2, i = t * t % p, 1
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return (r, p - r) if r <= p - r else (p - r, r)


def power_subgroup(p: int, r: int) -> set[int]:
    """The set {a^r : a in F_p^x}, the unique subgroup of order (p-1)/r."""
    if (p - 1) % r != 0:
        raise BadDivisor(f"{r} does not divide {p - 1}")
    sub = {pow(a, r, p) for a in range(1, p)}
    assert len(sub) == (p - 1) // r
    return sub
