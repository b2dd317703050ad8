"""Arithmetic in the quadratic extension ring F_p[x]/(x^2 - Px + Q).

Elements are written c0 + c1*lam in the basis {1, lam} of the companion
polynomial, so in the inert case the root lam itself is always the element
(0, 1) and no root-finding in F_{p^2} is needed.  The context is inert (a
field isomorphic to F_{p^2}) exactly when the discriminant D = P^2 - 4Q is a
non-residue mod p; split contexts still support ring operations, conjugation
and the norm form, but refuse field-only operations (orders, norm subgroups)
with SplitContext.
"""

from __future__ import annotations

from dataclasses import dataclass

from .config import GENERATOR_SEED
from .errors import (
    BadDivisor,
    ContextMismatch,
    InternalInvariantViolation,
    SplitContext,
    ZeroElement,
)
from .modarith import factorize, is_prime, legendre


@dataclass(frozen=True)
class QuadContext:
    """The ring F_p[x]/(x^2 - Px + Q): lam has trace P and norm Q."""

    p: int
    P: int
    Q: int

    def __post_init__(self):
        if self.p < 3 or not is_prime(self.p):
            raise ValueError(f"p = {self.p} must be an odd prime")
        object.__setattr__(self, "P", self.P % self.p)
        object.__setattr__(self, "Q", self.Q % self.p)

    @property
    def discriminant(self) -> int:
        return (self.P * self.P - 4 * self.Q) % self.p

    @property
    def is_inert(self) -> bool:
        return legendre(self.discriminant, self.p) == -1

    def element(self, c0: int, c1: int = 0) -> "QuadElement":
        return QuadElement(c0 % self.p, c1 % self.p, self)

    def one(self) -> "QuadElement":
        return self.element(1)

    def lam(self) -> "QuadElement":
        return self.element(0, 1)

    def require_inert(self) -> None:
        if not self.is_inert:
            raise SplitContext(
                f"x^2 - {self.P}x + {self.Q} splits mod {self.p}; not a field"
            )


def fibonacci_context(p: int) -> QuadContext:
    """Context of the golden-ratio polynomial x^2 - x - 1."""
    return QuadContext(p, 1, -1)


@dataclass(frozen=True)
class QuadElement:
    """c0 + c1*lam with lam^2 = P*lam - Q; components reduced mod p."""

    c0: int
    c1: int
    ctx: QuadContext

    def is_zero(self) -> bool:
        return self.c0 == 0 and self.c1 == 0


def _same_ctx(x: QuadElement, y: QuadElement) -> QuadContext:
    if x.ctx != y.ctx:
        raise ContextMismatch(f"{x.ctx} vs {y.ctx}")
    return x.ctx


def q_mul(x: QuadElement, y: QuadElement) -> QuadElement:
    """Product reduced by lam^2 = P*lam - Q."""
    ctx = _same_ctx(x, y)
    p, P, Q = ctx.p, ctx.P, ctx.Q
    cross = x.c1 * y.c1
    c0 = (x.c0 * y.c0 - Q * cross) % p
    c1 = (x.c0 * y.c1 + x.c1 * y.c0 + P * cross) % p
    return QuadElement(c0, c1, ctx)


def q_pow(x: QuadElement, e: int) -> QuadElement:
    """x^e by square-and-multiply; e = 0 gives 1."""
    if e < 0:
        raise ValueError("exponent must be non-negative")
    acc = x.ctx.one()
    base = x
    while e:
        if e & 1:
            acc = q_mul(acc, base)
        base = q_mul(base, base)
        e >>= 1
    return acc


def conjugate(x: QuadElement) -> QuadElement:
    """The other root of the minimal polynomial: lam -> P - lam.

    In inert contexts this is the Frobenius x -> x^p (tested property).
    """
    p = x.ctx.p
    return QuadElement((x.c0 + x.c1 * x.ctx.P) % p, (-x.c1) % p, x.ctx)


def norm(x: QuadElement) -> int:
    """Nr(x) = x * conjugate(x), which lands in the base field.

    Symbolically (c0 + c1*lam)(c0 + c1*P - c1*lam)
      = c0^2 + P*c0*c1 - c1^2*lam^2 + P*c1^2*lam ... = c0^2 + P*c0*c1 + Q*c1^2
    after reducing lam^2 = P*lam - Q; the lam-component cancels exactly, and
    we assert that at runtime.
    """
    prod = q_mul(x, conjugate(x))
    if prod.c1 != 0:
        raise InternalInvariantViolation(f"norm of {x} has lam-component {prod.c1}")
    return prod.c0


def ext_order(x: QuadElement) -> int:
    """Multiplicative order of x in F_{p^2}^x (inert contexts only)."""
    x.ctx.require_inert()
    if x.is_zero():
        raise ZeroElement("order of 0 is undefined")
    group = x.ctx.p * x.ctx.p - 1
    t = group
    acc = q_pow(x, group)
    if acc != x.ctx.one():
        raise InternalInvariantViolation(f"{x}^{group} != 1")
    for q in factorize(group).primes:
        while t % q == 0 and q_pow(x, t // q) == x.ctx.one():
            t //= q
    return t


def n_pm_contains(x: QuadElement) -> bool:
    """True iff Nr(x) = +-1, i.e. x lies in the norm subgroup of size 2(p+1)."""
    x.ctx.require_inert()
    return norm(x) in (1, x.ctx.p - 1)


_generator_cache: dict[QuadContext, QuadElement] = {}


def field_generator(ctx: QuadContext) -> QuadElement:
    """A multiplicative generator of F_{p^2}^x, found by seeded random search
    and certified against the factorization of p^2 - 1."""
    ctx.require_inert()
    cached = _generator_cache.get(ctx)
    if cached is not None:
        return cached
    import random

    rng = random.Random(GENERATOR_SEED)
    p = ctx.p
    group = p * p - 1
    primes = factorize(group).primes
    while True:
        g = ctx.element(rng.randrange(p), rng.randrange(p))
        if g.is_zero():
            continue
        if all(q_pow(g, group // q) != ctx.one() for q in primes):
            _generator_cache[ctx] = g
            return g


def n_pm_generator(ctx: QuadContext) -> QuadElement:
    """An element of exact order 2(p+1), generating {x : Nr(x) = +-1}."""
    g = field_generator(ctx)
    e = q_pow(g, (ctx.p - 1) // 2)
    if ext_order(e) != 2 * (ctx.p + 1):
        raise InternalInvariantViolation("norm-subgroup generator certification failed")
    return e


def n_pm_power_subgroup(ctx: QuadContext, k: int) -> set[QuadElement]:
    """{e^k : e in N_pm}: the cyclic subgroup of order 2(p+1)/k."""
    ctx.require_inert()
    size = 2 * (ctx.p + 1)
    if size % k != 0:
        raise BadDivisor(f"{k} does not divide {size}")
    h = q_pow(n_pm_generator(ctx), k)
    sub = set()
    acc = ctx.one()
    for _ in range(size // k):
        sub.add(acc)
        acc = q_mul(acc, h)
    assert acc == ctx.one() and len(sub) == size // k
    return sub
