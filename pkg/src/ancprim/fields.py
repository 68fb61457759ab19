"""Abelian number fields as subgroups of cyclotomic Galois groups.

An abelian field K is stored as ``(f, H)`` where f is the conductor and H
is the subgroup of ``(Z/f)^x = Gal(E_f/Q)`` fixing K.  The pair is kept
conductor-canonical, so two fields are equal iff their encodings are.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from enum import Enum
from functools import cached_property, lru_cache
from math import gcd

from . import kernels
from .arith import crt, euler_phi, is_squarefree, jacobi, lcm, nu

__all__ = [
    "BudgetExceeded",
    "Flavor",
    "CycSpec",
    "AbelianField",
    "RATIONALS",
    "unit_group",
    "canonicalize",
    "make_cyclotomic",
    "cyclotomic",
    "quadratic",
    "quadratic_conductor",
    "intersect",
    "compositum",
    "is_subfield",
    "degree",
    "rel_cyclotomic_degree",
    "totally_imaginary",
    "local_degree_at_2",
    "max_modulus",
]

DEFAULT_MAX_MODULUS = 100_000


class BudgetExceeded(RuntimeError):
    """A computation would materialise a unit group above the configured cap."""


def max_modulus() -> int:
    raw = os.environ.get("ANCPRIM_MAX_MODULUS")
    return int(raw) if raw else DEFAULT_MAX_MODULUS


def _check_budget(modulus: int) -> None:
    cap = max_modulus()
    if modulus > cap:
        raise BudgetExceeded(
            f"modulus {modulus} exceeds ANCPRIM_MAX_MODULUS={cap}"
        )


class Flavor(str, Enum):
    PLAIN = "plain"
    PLUS = "plus"
    MINUS = "minus"

    @property
    def symbol(self) -> str:
        return {"plain": "", "plus": "+", "minus": "-"}[self.value]


@dataclass(frozen=True)
class CycSpec:
    """The field E_n, E_n^+ or E_n^- as a label."""

    n: int
    flavor: Flavor = Flavor.PLAIN

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"cyclotomic index must be positive, got {self.n}")
        object.__setattr__(self, "flavor", Flavor(self.flavor))

    def __str__(self):
        return f"E{self.flavor.symbol}({self.n})"


@dataclass(frozen=True)
class AbelianField:
    modulus: int
    subgroup: tuple[int, ...]

    @cached_property
    def members(self) -> frozenset[int]:
        return frozenset(self.subgroup)

    @property
    def conductor(self) -> int:
        return self.modulus

    def degree(self) -> int:
        return euler_phi(self.modulus) // len(self.subgroup)

    def generators(self) -> tuple[int, ...]:
        """A small generating set of the subgroup, chosen greedily."""
        gens: list[int] = []
        have = {1}
        for u in self.subgroup:
            if u not in have:
                gens.append(u)
                have = set(kernels.subgroup_closure(gens, self.modulus))
        return tuple(gens)

    def __str__(self):
        if self.modulus == 1:
            return "Q"
        gens = ",".join(map(str, self.generators()))
        return f"sub({self.modulus}; {gens})"


RATIONALS = AbelianField(1, (1,))


def unit_group(f: int) -> list[int]:
    if f < 1:
        raise ValueError(f"modulus must be positive, got {f}")
    _check_budget(f)
    return kernels.unit_group(f)


def canonicalize(f: int, generators) -> AbelianField:
    """Fixed field of the subgroup of (Z/f)^x generated by ``generators``.

    The subgroup is closed, then pushed down to the least modulus whose
    reduction kernel it contains; that modulus is the conductor.
    """
    if f < 1:
        raise ValueError(f"modulus must be positive, got {f}")
    _check_budget(f)
    gens = [g % f for g in generators] if f > 1 else []
    for g in gens:
        if gcd(g, f) != 1:
            raise ValueError(f"generator {g} is not a unit modulo {f}")
    sub = kernels.subgroup_closure(gens, f)
    fp = kernels.conductor(sub, f)
    if fp % 4 == 2:
        fp //= 2
    if fp == f:
        return AbelianField(f, tuple(sub))
    return AbelianField(fp, tuple(kernels.image(sub, f, fp)))


def make_cyclotomic(spec: CycSpec) -> AbelianField:
    """E_n, E_n^+ or E_n^- as an abelian field."""
    return _make_cyclotomic(spec.n, Flavor(spec.flavor))


def cyclotomic(n: int, flavor: Flavor | str = Flavor.PLAIN) -> AbelianField:
    return _make_cyclotomic(n, Flavor(flavor))


@lru_cache(maxsize=65536)
def _make_cyclotomic(n: int, flavor: Flavor) -> AbelianField:
    if n < 1:
        raise ValueError(f"cyclotomic index must be positive, got {n}")
    j = nu(2, n)
    m = n >> j
    if flavor is Flavor.PLAIN:
        return canonicalize(n, [])
    if j <= 2:
        return canonicalize(m, [])
    two = 1 << j
    u = -1 if flavor is Flavor.PLUS else (two >> 1) - 1
    return canonicalize(n, [crt([u % two, 1], [two, m])])


def quadratic_conductor(d: int) -> int:
    return abs(d) if d % 4 == 1 else 4 * abs(d)


@lru_cache(maxsize=4096)
def quadratic(d: int) -> AbelianField:
    """Q(sqrt d) for squarefree d != 0, 1 (Q itself is rejected)."""
    if d in (0, 1) or not is_squarefree(d):
        raise ValueError(f"d must be squarefree and different from 0 and 1, got {d}")
    f = quadratic_conductor(d)
    disc = d if d % 4 == 1 else 4 * d
    # kernel of the Kronecker character of the discriminant; evaluate it at
    # an odd representative, where it agrees with the Jacobi symbol
    sub = [u for u in kernels.unit_group(f) if jacobi(disc, u if u % 2 else u + f) == 1]
    return AbelianField(f, tuple(sub))


def degree(L: AbelianField) -> int:
    return L.degree()


@lru_cache(maxsize=262144)
def intersect(L1: AbelianField, L2: AbelianField) -> AbelianField:
    """Largest field contained in both L1 and L2.

    Both fields lie in E_f1 and E_f2, hence their intersection lies in
    E_g with g = gcd(f1, f2); there L_i cap E_g corresponds to the image of
    H_i, and the intersection to the product of the two images.
    """
    g = gcd(L1.modulus, L2.modulus)
    if g == 1:
        return RATIONALS
    gens = kernels.image(L1.subgroup, L1.modulus, g) + kernels.image(
        L2.subgroup, L2.modulus, g
    )
    return canonicalize(g, gens)


@lru_cache(maxsize=65536)
def compositum(L1: AbelianField, L2: AbelianField) -> AbelianField:
    M = lcm(L1.modulus, L2.modulus)
    _check_budget(M)
    sub = kernels.preimage_meet(L1.subgroup, L1.modulus, L2.subgroup, L2.modulus, M)
    return canonicalize(M, sub)


def is_subfield(L1: AbelianField, L2: AbelianField) -> bool:
    """Whether L1 is contained in L2.

    L1 in L2 forces f1 | f2; then the condition is that H2 reduces into H1.
    """
    if L2.modulus % L1.modulus:
        return False
    if L1.modulus == 1:
        return True
    f1, members = L1.modulus, L1.members
    return all(h % f1 in members for h in L2.subgroup)


@lru_cache(maxsize=262144)
def _rel_degree(K: AbelianField, n: int, flavor: Flavor) -> int:
    E = _make_cyclotomic(n, flavor)
    return E.degree() // intersect(K, E).degree()


def rel_cyclotomic_degree(K: AbelianField, spec: CycSpec | int) -> int:
    """[E_spec K : K] = [E_spec : E_spec cap K]."""
    if isinstance(spec, int):
        spec = CycSpec(spec)
    return _rel_degree(K, spec.n, Flavor(spec.flavor))


def totally_imaginary(K: AbelianField) -> bool:
    f = K.modulus
    if f == 1:
        return False
    return (f - 1) not in K.members


def decomposition_group_at_2(f: int) -> list[int]:
    """Generators of the decomposition group at 2 inside (Z/f)^x."""
    a = nu(2, f)
    two, odd = 1 << a, f >> a
    gens = [u for u in range(1, f, odd) if gcd(u, f) == 1] if a else []
    if odd > 1:
        gens.append(crt([2 % odd, 1], [odd, two]))
    return gens


@lru_cache(maxsize=65536)
def local_degree_at_2(K: AbelianField) -> int:
    """Common degree [K_p : Q_2] over the primes p of K above 2."""
    f = K.modulus
    if f == 1:
        return 1
    dh = kernels.subgroup_closure(list(K.subgroup) + decomposition_group_at_2(f), f)
    return len(dh) // len(K.subgroup)
