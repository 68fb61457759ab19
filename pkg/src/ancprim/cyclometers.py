"""The sets D_K(n), D_K^+(n), D_K^-(n) and their gcds, the cyclometers.

For an abelian field K and n >= 1,

    D_K^o(n) = { d >= 1 : K cap E_n  is contained in  E_d^o },

and the cyclometer c_K^o(n) is gcd(D_K^o(n)), with 0 standing for the gcd
of the empty set.  Values depend on n only through gcd(n, conductor), so
a table over the divisors of the conductor describes them completely.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .arith import divisors
from .fields import (
    AbelianField,
    Flavor,
    cyclotomic,
    intersect,
    is_subfield,
)

__all__ = [
    "CyclometerTable",
    "in_D",
    "cyclometer",
    "cyclometers",
    "cyclometer_table",
    "brute_D",
]


@lru_cache(maxsize=65536)
def _cap(K: AbelianField, n: int) -> AbelianField:
    return intersect(K, cyclotomic(n))


@lru_cache(maxsize=1 << 20)
def _in(L: AbelianField, flavor: Flavor, d: int) -> bool:
    return is_subfield(L, cyclotomic(d, flavor))


def in_D(K: AbelianField, n: int, flavor: Flavor | str, d: int) -> bool:
    """Whether d lies in D_K^flavor(n)."""
    if n < 1 or d < 1:
        raise ValueError("n and d must be positive")
    return _in(_cap(K, n), Flavor(flavor), d)


@lru_cache(maxsize=262144)
def _cyclometer(K: AbelianField, n: int, flavor: Flavor) -> int:
    L = _cap(K, n)
    if flavor is not Flavor.MINUS:
        # D is the set of multiples of its least element, which divides n
        for d in divisors(n):
            if _in(L, flavor, d):
                return d
        return 0
    plus = _cyclometer(K, n, Flavor.PLUS)
    if plus:
        return 2 * plus if plus % 2 == 0 else plus
    # D^+ empty: every element of D^- has its gcd with n in D^- as well
    c = 0
    for d in divisors(n):
        if _in(L, Flavor.MINUS, d):
            c = gcd(c, d)
    return c


def cyclometer(K: AbelianField, n: int, flavor: Flavor | str = Flavor.PLAIN) -> int:
    """c_K^flavor(n), computed directly at n."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return _cyclometer(K, n, Flavor(flavor))


def cyclometers(K: AbelianField, n: int) -> tuple[int, int, int]:
    """``(c, c_plus, c_minus)`` at n, looked up through gcd(n, conductor)."""
    return cyclometer_table(K).lookup(n)


@dataclass(frozen=True)
class CyclometerTable:
    field: AbelianField
    entries: dict[int, tuple[int, int, int]]

    def lookup(self, n: int) -> tuple[int, int, int]:
        if n < 1:
            raise ValueError(f"n must be positive, got {n}")
        return self.entries[gcd(n, self.field.modulus)]

    def rows(self) -> list[tuple[int, int, int, int]]:
        return [(n, *self.entries[n]) for n in sorted(self.entries)]

    def to_tsv(self) -> str:
        return "".join("\t".join(map(str, row)) + "\n" for row in self.rows())

    def to_json(self) -> str:
        keys = ("n", "c", "c_plus", "c_minus")
        return json.dumps([dict(zip(keys, row)) for row in self.rows()])


@lru_cache(maxsize=4096)
def cyclometer_table(K: AbelianField) -> CyclometerTable:
    entries = {
        n: tuple(_cyclometer(K, n, fl) for fl in (Flavor.PLAIN, Flavor.PLUS, Flavor.MINUS))
        for n in divisors(K.modulus)
    }
    return CyclometerTable(K, entries)


def brute_D(K: AbelianField, n: int, flavor: Flavor | str, bound: int) -> set[int]:
    """All d <= bound in D_K^flavor(n), by testing each d in turn."""
    L = _cap(K, n)
    flavor = Flavor(flavor)
    return {d for d in range(1, bound + 1) if _in(L, flavor, d)}
