"""Exact integer and modular arithmetic used throughout the package.

Everything here works on plain Python ints.  Inputs are desk-scale, so
factorisation is trial division.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd, isqrt, prod

__all__ = [
    "Factorization",
    "factor",
    "is_prime",
    "nu",
    "odd_part",
    "euler_phi",
    "divisors",
    "lcm",
    "crt",
    "is_squarefree",
    "ord_mod",
    "ord2_parity",
    "divides_aug",
    "jacobi",
]


@dataclass(frozen=True)
class Factorization:
    """Prime factorisation as ``((p1, e1), (p2, e2), ...)`` with p1 < p2 < ..."""

    factors: tuple[tuple[int, int], ...]

    def __iter__(self):
        return iter(self.factors)

    def __len__(self):
        return len(self.factors)

    def __eq__(self, other):
        if isinstance(other, Factorization):
            return self.factors == other.factors
        try:
            return self.factors == tuple(tuple(pe) for pe in other)
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash(self.factors)

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def value(self) -> int:
        return prod(p**e for p, e in self.factors)


@lru_cache(maxsize=65536)
def factor(n: int) -> Factorization:
    if n < 1:
        raise ValueError(f"factor() needs a positive integer, got {n}")
    out = []
    for p in (2, 3):
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e:
            out.append((p, e))
    p, step = 5, 2
    while p * p <= n:
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e:
            out.append((p, e))
        p += step
        step = 6 - step
    if n > 1:
        out.append((n, 1))
    return Factorization(tuple(out))


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    return all(n % d for d in range(3, isqrt(n) + 1, 2))


def nu(p: int, n: int) -> int:
    """p-adic valuation of the nonzero integer n."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if n == 0:
        raise ValueError("valuation of 0 is infinite")
    n = abs(n)
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def odd_part(n: int) -> int:
    while n and n % 2 == 0:
        n //= 2
    return n


def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError(f"euler_phi() needs a positive integer, got {n}")
    return prod(p ** (e - 1) * (p - 1) for p, e in factor(n))


def divisors(n: int) -> list[int]:
    """Sorted positive divisors of n."""
    ds = [1]
    for p, e in factor(n):
        ds = [d * p**k for d in ds for k in range(e + 1)]
    return sorted(ds)


def lcm(*args: int) -> int:
    out = 1
    for a in args:
        out = out * a // gcd(out, a)
    return out


def crt(residues, moduli) -> int:
    """Solve x = r_i mod m_i for pairwise coprime moduli; returns x in [0, prod m_i)."""
    x, m = 0, 1
    for r, mi in zip(residues, moduli):
        if gcd(m, mi) != 1:
            raise ValueError("moduli must be pairwise coprime")
        # x + m*t = r mod mi
        t = (r - x) * pow(m, -1, mi) % mi if mi > 1 else 0
        x += m * t
        m *= mi
    return x % m


def is_squarefree(n: int) -> bool:
    return all(e == 1 for _, e in factor(abs(n)))


@lru_cache(maxsize=65536)
def ord_mod(a: int, m: int) -> int:
    """Multiplicative order of a modulo m (1 when m == 1)."""
    if m < 1:
        raise ValueError(f"modulus must be positive, got {m}")
    if gcd(a, m) != 1:
        raise ValueError(f"{a} is not a unit modulo {m}")
    if m == 1:
        return 1
    t = euler_phi(m)
    a %= m
    for p, _ in factor(t):
        while t % p == 0 and pow(a, t // p, m) == 1:
            t //= p
    return t


def ord2_parity(m: int) -> int:
    """Parity (0 even, 1 odd) of ord(2 mod m), decided prime by prime.

    ord(2 mod m) is even exactly when ord(2 mod p) is even for some prime
    p dividing m, so only the primes of m are ever touched.
    """
    if m < 1 or m % 2 == 0:
        raise ValueError(f"ord2_parity() needs an odd positive integer, got {m}")
    for p in factor(m).primes:
        if ord_mod(2, p) % 2 == 0:
            return 0
    return 1


def divides_aug(n: int, a: int) -> bool:
    """Whether n divides aug(a) = lcm(a, 2, 3, 5, 7, ...).

    aug(a) is supernatural and never built; for each prime p of n the
    allowed exponent is nu_p(a) if p divides a, and 1 otherwise.
    """
    if n < 1 or a < 1:
        raise ValueError("divides_aug() needs positive integers")
    for p, e in factor(n):
        allowed = 0
        while a % p == 0:
            a //= p
            allowed += 1
        if e > max(allowed, 1):
            return False
    return True


def jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a/n) for odd positive n."""
    if n < 1 or n % 2 == 0:
        raise ValueError(f"Jacobi symbol needs odd positive n, got {n}")
    a %= n
    sign = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                sign = -sign
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            sign = -sign
        a %= n
    return sign if n == 1 else 0
