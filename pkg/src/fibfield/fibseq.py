"""Recurrence orbits a_n = P*a_{n-1} - Q*a_{n-2} over Z/NZ.

Sequences are 1-based: the seed is (a_1, a_2) and the value set includes the
seed terms.  A sequence is identified with the cycle of consecutive pairs
(a_n, a_{n+1}) under the companion matrix B = (0 1; -Q P); two sequences are
shifts of each other iff their pairs share an orbit.  The zero pair is
assigned minimal period 1 (B fixes it).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .config import HARD_CAP
from .errors import CapExceeded, InternalInvariantViolation, ModulusMismatch, SingularMatrix
from .modarith import Factorization, divisors, factorize, is_prime


@dataclass(frozen=True)
class RecurrenceParams:
    """Coefficients of a_n = P*a_{n-1} - Q*a_{n-2}."""

    P: int
    Q: int

    @property
    def discriminant(self) -> int:
        return self.P * self.P - 4 * self.Q

    @property
    def is_fibonacci(self) -> bool:
        return (self.P, self.Q) == (1, -1)


FIBONACCI = RecurrenceParams(1, -1)


@dataclass(frozen=True)
class Mat2:
    """2x2 matrix (a b; c d) over Z/nZ, entries reduced."""

    n: int
    a: int
    b: int
    c: int
    d: int

    @staticmethod
    def identity(n: int) -> "Mat2":
        return Mat2(n, 1, 0, 0, 1)

    def apply(self, v: tuple[int, int]) -> tuple[int, int]:
        x, y = v
        return ((self.a * x + self.b * y) % self.n, (self.c * x + self.d * y) % self.n)


def companion_matrix(params: RecurrenceParams, N: int) -> Mat2:
    """B_{P,Q} = (0 1; -Q P); Fibonacci params give A = (0 1; 1 1)."""
    return Mat2(N, 0, 1, (-params.Q) % N, params.P % N)


def mat_mul(x: Mat2, y: Mat2) -> Mat2:
    if x.n != y.n:
        raise ModulusMismatch(f"{x.n} vs {y.n}")
    n = x.n
    return Mat2(
        n,
        (x.a * y.a + x.b * y.c) % n,
        (x.a * y.b + x.b * y.d) % n,
        (x.c * y.a + x.d * y.c) % n,
        (x.c * y.b + x.d * y.d) % n,
    )


def mat_pow(x: Mat2, e: int) -> Mat2:
    if e < 0:
        raise ValueError("exponent must be non-negative")
    acc = Mat2.identity(x.n)
    while e:
        if e & 1:
            acc = mat_mul(acc, x)
        x = mat_mul(x, x)
        e >>= 1
    return acc


def _gl2_exponent_bound(N: int) -> Factorization:
    """A factored multiple of the order of any element of GL2(Z/NZ).

    Composed per prime power l^e || N from l^(4e-3) * (l-1) * (l^2-1)
    (the order of GL2(Z/l^e)); for prime N this is N(N-1)(N^2-1).
    """
    counts: dict[int, int] = {}

    def merge(f: Factorization) -> None:
        for p, e in f.factors:
            counts[p] = counts.get(p, 0) + e

    for ell, e in factorize(N).factors:
        counts[ell] = counts.get(ell, 0) + 4 * e - 3
        if ell > 2:
            merge(factorize(ell - 1))
        merge(factorize(ell * ell - 1))
    bound = 1
    for p, e in counts.items():
        bound *= p**e
    return Factorization(bound, tuple(sorted(counts.items())))


def mat_order(params: RecurrenceParams, N: int) -> int:
    """Least t >= 1 with B^t = Id (the Pisano-type period for Fibonacci)."""
    _require_invertible(params, N)
    B = companion_matrix(params, N)
    ident = Mat2.identity(N)
    bound = _gl2_exponent_bound(N)
    if mat_pow(B, bound.n) != ident:
        raise InternalInvariantViolation(f"B^{bound.n} != Id mod {N}")
    t = bound.n
    for q in bound.primes:
        while t % q == 0 and mat_pow(B, t // q) == ident:
            t //= q
    return t


@dataclass(frozen=True)
class SequenceId:
    """One recurrence orbit: modulus, seed pair and coefficients."""

    N: int
    a1: int
    a2: int
    params: RecurrenceParams

    def __post_init__(self):
        object.__setattr__(self, "a1", self.a1 % self.N)
        object.__setattr__(self, "a2", self.a2 % self.N)


@dataclass(frozen=True)
class PeriodReport:
    """Minimal period, nonvanishing flag, and value set of one sequence."""

    minimal_period: int
    nonvanishing: bool
    value_set: frozenset[int]


def generate(seq: SequenceId, count: int) -> list[int]:
    """First `count` terms a_1, a_2, a_3 = P*a_2 - Q*a_1, ..."""
    N, P, Q = seq.N, seq.params.P, seq.params.Q
    out: list[int] = []
    a, b = seq.a1, seq.a2
    for _ in range(count):
        out.append(a)
        a, b = b, (P * b - Q * a) % N
    return out


def minimal_period(seq: SequenceId) -> int:
    """Least k >= 1 with B^k (a1,a2)^T = (a1,a2)^T; the zero pair gives 1.

    Checks the divisors of mat_order in increasing order; the direct
    iteration strategy lives in the test oracles and must agree.
    """
    if seq.a1 == 0 and seq.a2 == 0:
        return 1
    B = companion_matrix(seq.params, seq.N)
    v = (seq.a1, seq.a2)
    for d in divisors(factorize(mat_order(seq.params, seq.N))):
        if mat_pow(B, d).apply(v) == v:
            return d
    raise InternalInvariantViolation(f"no period found for {seq}")


def _one_period(seq: SequenceId) -> list[int]:
    return generate(seq, minimal_period(seq))


def is_star(seq: SequenceId) -> bool:
    """True iff no term over one minimal period is 0."""
    if seq.a1 == 0 and seq.a2 == 0:
        return False
    return 0 not in _one_period(seq)


def value_set(seq: SequenceId) -> frozenset[int]:
    """Set of terms over one minimal period."""
    return frozenset(_one_period(seq))


def _check_cap(N: int) -> None:
    if N > HARD_CAP:
        raise CapExceeded(f"N = {N} exceeds the enumeration cap {HARD_CAP}")


def _require_invertible(params: RecurrenceParams, N: int) -> None:
    if math.gcd(params.Q, N) != 1:
        raise SingularMatrix(f"gcd(Q={params.Q}, N={N}) != 1")


def sweep_star_orbits(
    N: int, params: RecurrenceParams = FIBONACCI
) -> list[tuple[tuple[int, int], int, frozenset[int]]]:
    """Visit all N^2 - 1 nonzero pairs grouped into orbits under B and return
    (lexicographically least pair, period, value set) for each zero-free
    orbit, in deterministic order.
    """
    _check_cap(N)
    _require_invertible(params, N)
    P = params.P % N
    negQ = (-params.Q) % N
    fib_step = P == 1 and negQ == 1
    visited = bytearray(N * N)
    out = []
    for start in range(1, N * N):
        if visited[start]:
            continue
        a, b = divmod(start, N)
        idx = start
        rep = start
        star = True
        values = []
        append = values.append
        while True:
            visited[idx] = 1
            if idx < rep:
                rep = idx
            append(a)
            if a == 0:
                star = False
            if fib_step:
                t = a + b
                if t >= N:
                    t -= N
                a, b = b, t
            else:
                a, b = b, (P * b + negQ * a) % N
            idx = a * N + b
            if idx == start:
                break
        if star:
            out.append((divmod(rep, N), len(values), frozenset(values)))
    out.sort(key=lambda item: item[0])
    return out


def orbit_sizes(N: int, params: RecurrenceParams = FIBONACCI) -> list[int]:
    """Sizes of all orbits of nonzero pairs (star or not); they partition the
    N^2 - 1 nonzero pairs."""
    _check_cap(N)
    _require_invertible(params, N)
    P = params.P % N
    negQ = (-params.Q) % N
    visited = bytearray(N * N)
    sizes = []
    for start in range(1, N * N):
        if visited[start]:
            continue
        a, b = divmod(start, N)
        idx = start
        size = 0
        while True:
            visited[idx] = 1
            size += 1
            a, b = b, (P * b + negQ * a) % N
            idx = a * N + b
            if idx == start:
                break
        sizes.append(size)
    return sizes


def enumerate_star(
    N: int, params: RecurrenceParams = FIBONACCI
) -> list[tuple[SequenceId, PeriodReport]]:
    """One canonical representative per zero-free orbit with its report."""
    return [
        (SequenceId(N, rep[0], rep[1], params), PeriodReport(period, True, values))
        for rep, period, values in sweep_star_orbits(N, params)
    ]
