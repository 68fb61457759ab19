"""Finite nilpotent groups whose abelian normal subgroups are all cyclic.

Such a group is C_m times a 2-group that is cyclic, generalised
quaternion of order >= 8, or dihedral/semidihedral of order >= 16.  An
``AncGroup`` is stored as its kind together with n, the order of the
cyclic maximal subgroup (the whole group when cyclic).  Throughout,
n = 2^j * m with m odd, and the 2-part of the generator ``a`` has order 2^j.

The field arguments ``K`` of the Schur index and degree functions are
``FieldDescriptor`` objects (see :mod:`ancprim.primitivity`).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from functools import total_ordering
from math import gcd

from .arith import nu, ord2_parity
from .fields import CycSpec, Flavor, canonicalize, rel_cyclotomic_degree

__all__ = [
    "Kind",
    "AncGroup",
    "parse_group",
    "theta",
    "delta",
    "character_flavor",
    "CycInt",
    "Rep2",
    "PresentationReport",
    "standard_rep",
    "verify_presentation",
    "character_field",
    "sum_of_two_squares_is_minus_one",
    "schur_index",
    "degree_of_GK",
]


@total_ordering
class Kind(Enum):
    CYCLIC = "C"
    DIHEDRAL = "D"
    SEMIDIHEDRAL = "SD"
    QUATERNION = "Q"

    def __lt__(self, other):
        order = list(Kind)
        return order.index(self) < order.index(other)


@dataclass(frozen=True, order=True)
class AncGroup:
    kind: Kind
    n: int

    def __post_init__(self):
        kind = Kind(self.kind)
        object.__setattr__(self, "kind", kind)
        if self.n < 1:
            raise ValueError(f"n must be positive, got {self.n}")
        j = nu(2, self.n)
        if kind in (Kind.DIHEDRAL, Kind.SEMIDIHEDRAL) and j < 3:
            raise ValueError(
                f"{kind.name.lower()} 2-part needs order >= 16, i.e. 8 | n (n={self.n})"
            )
        if kind is Kind.QUATERNION and j < 2:
            raise ValueError(f"quaternion 2-part needs 4 | n (n={self.n})")

    @property
    def j(self) -> int:
        return nu(2, self.n)

    @property
    def m(self) -> int:
        return self.n >> self.j

    @property
    def order(self) -> int:
        return self.n if self.kind is Kind.CYCLIC else 2 * self.n

    @property
    def is_cyclic(self) -> bool:
        return self.kind is Kind.CYCLIC

    def __str__(self):
        if self.is_cyclic:
            return f"C({self.n})"
        head = f"{self.kind.value}({2 ** (self.j + 1)})"
        return head if self.m == 1 else f"{head}xC({self.m})"


_GROUP_RE = re.compile(
    r"^\s*(?P<kind>C|D|SD|Q)\(\s*(?P<order>[0-9^ ]+)\s*\)"
    r"(?:\s*x\s*C\(\s*(?P<odd>[0-9^ ]+)\s*\))?\s*$"
)


def _int_literal(text: str) -> int:
    text = text.replace(" ", "")
    if "^" in text:
        base, exp = text.split("^", 1)
        return int(base) ** int(exp)
    return int(text)


def parse_group(text: str) -> AncGroup:
    """Parse ``C(n)``, ``D(2^t)xC(m)``, ``SD(2^t)xC(m)`` or ``Q(2^t)xC(m)``.

    The argument of D/SD/Q is the order of the 2-part (``16`` or ``2^4``);
    the optional odd factor ``xC(m)`` must have odd m.
    """
    match = _GROUP_RE.match(text)
    if not match:
        raise ValueError(f"cannot parse group literal {text!r}")
    kind = Kind(match["kind"])
    order = _int_literal(match["order"])
    odd = _int_literal(match["odd"]) if match["odd"] else 1
    if odd < 1 or odd % 2 == 0:
        raise ValueError(f"odd factor must be an odd positive integer, got {odd}")
    if kind is Kind.CYCLIC:
        if gcd(order, odd) != 1:
            raise ValueError(f"C({order})xC({odd}) is not cyclic")
        return AncGroup(kind, order * odd)
    if order < 1 or order & (order - 1):
        raise ValueError(f"2-part order must be a power of 2, got {order}")
    return AncGroup(kind, order // 2 * odd)


def _require_noncyclic(G: AncGroup) -> None:
    if G.is_cyclic:
        raise ValueError(f"{G} is cyclic; the invariant is only defined for non-cyclic groups")


def theta(G: AncGroup) -> int:
    """+1 for (semi)dihedral 2-part, -1 for generalised quaternion."""
    _require_noncyclic(G)
    return -1 if G.kind is Kind.QUATERNION else 1


def delta(G: AncGroup) -> int:
    """+1 for dihedral or quaternion 2-part, -1 for semidihedral."""
    _require_noncyclic(G)
    return -1 if G.kind is Kind.SEMIDIHEDRAL else 1


def character_flavor(G: AncGroup) -> Flavor:
    _require_noncyclic(G)
    return Flavor.MINUS if G.kind is Kind.SEMIDIHEDRAL else Flavor.PLUS


class CycInt:
    """Element of Z[zeta] for zeta a primitive 2^j-th root of unity.

    Stored as coefficients of 1, x, ..., x^(N-1) in Z[x]/(x^N + 1) with
    N = 2^(j-1).
    """

    __slots__ = ("j", "coeffs")

    def __init__(self, j: int, coeffs):
        if j < 1:
            raise ValueError("need j >= 1")
        coeffs = tuple(int(c) for c in coeffs)
        if len(coeffs) != 1 << (j - 1):
            raise ValueError("coefficient vector has the wrong length")
        self.j = j
        self.coeffs = coeffs

    @classmethod
    def zero(cls, j: int) -> CycInt:
        return cls(j, (0,) * (1 << (j - 1)))

    @classmethod
    def integer(cls, j: int, c: int) -> CycInt:
        return cls(j, (c,) + (0,) * ((1 << (j - 1)) - 1))

    @classmethod
    def zeta(cls, j: int, e: int = 1, sign: int = 1) -> CycInt:
        """sign * zeta^e."""
        half = 1 << (j - 1)
        e %= 2 * half
        if e >= half:
            e -= half
            sign = -sign
        out = [0] * half
        out[e] = sign
        return cls(j, out)

    def _check(self, other: CycInt) -> None:
        if not isinstance(other, CycInt) or other.j != self.j:
            raise TypeError("operands live in different cyclotomic rings")

    def __add__(self, other):
        self._check(other)
        return CycInt(self.j, (a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        self._check(other)
        return CycInt(self.j, (a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return CycInt(self.j, (-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            return CycInt(self.j, (other * a for a in self.coeffs))
        self._check(other)
        half = len(self.coeffs)
        out = [0] * half
        lhs = [(i, a) for i, a in enumerate(self.coeffs) if a]
        rhs = [(i, b) for i, b in enumerate(other.coeffs) if b]
        for i, a in lhs:
            for k, b in rhs:
                e = i + k
                if e >= half:
                    out[e - half] -= a * b
                else:
                    out[e] += a * b
        return CycInt(self.j, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            return self == CycInt.integer(self.j, other)
        return isinstance(other, CycInt) and self.j == other.j and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.j, self.coeffs))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def galois(self, u: int) -> CycInt:
        """Image under zeta -> zeta^u (u odd)."""
        if u % 2 == 0:
            raise ValueError("u must be odd")
        half = len(self.coeffs)
        acc = [0] * half
        for i, a in enumerate(self.coeffs):
            if a:
                e = i * u % (2 * half)
                if e >= half:
                    acc[e - half] -= a
                else:
                    acc[e] += a
        return CycInt(self.j, acc)

    def __repr__(self):
        terms = [f"{a}*z^{i}" for i, a in enumerate(self.coeffs) if a]
        return f"CycInt(j={self.j}: {' + '.join(terms) or '0'})"


Mat2 = tuple  # (top-left, top-right, bottom-left, bottom-right) of CycInt


def mat_mul(x: Mat2, y: Mat2) -> Mat2:
    a, b, c, d = x
    e, f, g, h = y
    return (a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)


def mat_identity(j: int) -> Mat2:
    one, zero = CycInt.integer(j, 1), CycInt.zero(j)
    return (one, zero, zero, one)


def mat_pow(x: Mat2, e: int) -> Mat2:
    if e < 0:
        raise ValueError("negative powers are not supported")
    out = mat_identity(x[0].j)
    base = x
    while e:
        if e & 1:
            out = mat_mul(out, base)
        base = mat_mul(base, base)
        e >>= 1
    return out


def mat_trace(x: Mat2) -> CycInt:
    return x[0] + x[3]


@dataclass(frozen=True)
class Rep2:
    """Images of the generators a and g of the 2-part in GL_2(Z[zeta_{2^j}])."""

    a_mat: Mat2
    g_mat: Mat2
    j: int
    k: int


@dataclass
class PresentationReport:
    ok: bool
    failures: list[str] = field(default_factory=list)

    def __bool__(self):
        return self.ok


def standard_rep(G: AncGroup, k: int) -> Rep2:
    """a -> diag(zeta^k, delta * zeta^-k), g -> [[0, 1], [theta, 0]]."""
    _require_noncyclic(G)
    j = G.j
    if k % 2 == 0 or not 0 < k < (1 << j):
        raise ValueError(f"k must be odd with 0 < k < {1 << j}, got {k}")
    zero = CycInt.zero(j)
    a_mat = (CycInt.zeta(j, k), zero, zero, CycInt.zeta(j, -k, delta(G)))
    g_mat = (zero, CycInt.integer(j, 1), CycInt.integer(j, theta(G)), zero)
    return Rep2(a_mat, g_mat, j, k)


def verify_presentation(rep: Rep2, G: AncGroup) -> PresentationReport:
    """Check the defining relations of the 2-part of G on ``rep`` exactly."""
    _require_noncyclic(G)
    failures = []
    j = rep.j
    if j != G.j:
        failures.append(f"exponent mismatch: rep has j={j}, group has j={G.j}")
        return PresentationReport(False, failures)
    ident = mat_identity(j)
    a, g = rep.a_mat, rep.g_mat
    half_power = mat_pow(a, 1 << (j - 1))
    if mat_pow(half_power, 2) != ident or half_power == ident:
        failures.append(f"a does not have order 2^{j}")
    g2 = mat_mul(g, g)
    if theta(G) == 1:
        if g2 != ident:
            failures.append("g^2 != 1")
    else:
        if g2 != half_power:
            failures.append("g^2 != a^(2^(j-1))")
        if half_power != tuple(-x for x in ident):
            failures.append("a^(2^(j-1)) != -1")
    # g^-1 a g = b  <=>  a g = g b
    target_exp = (1 << j) - 1 if delta(G) == 1 else (1 << (j - 1)) - 1
    if mat_mul(a, g) != mat_mul(g, mat_pow(a, target_exp)):
        failures.append(f"g^-1 a g != a^{target_exp}")
    expected = CycInt.zeta(j, rep.k) + CycInt.zeta(j, -rep.k, delta(G))
    if mat_trace(a) != expected:
        failures.append("trace(a) != zeta^k + delta*zeta^-k")
    return PresentationReport(not failures, failures)


def character_field(rep: Rep2):
    """Fixed field inside E_{2^j} of all character values of ``rep``.

    Values on the coset of g vanish, so the traces of the powers of a
    generate the field; its Galois group is their common stabiliser in
    (Z/2^j)^x.
    """
    j = rep.j
    modulus = 1 << j
    traces = []
    power = mat_identity(j)
    for _ in range(modulus):
        power = mat_mul(power, rep.a_mat)
        traces.append(mat_trace(power))
    stab = [u for u in range(1, modulus, 2) if all(t.galois(u) == t for t in traces)]
    return canonicalize(modulus, stab)


def sum_of_two_squares_is_minus_one(K, m: int, adjoin_sqrt2: bool) -> bool:
    """Whether x^2 + y^2 = -1 is soluble in E_m K, or in E_n^+ K with 8 | n.

    In E_m K this needs ord(2 mod m) * [K_p : Q_2] even at every p | 2 and
    E_m K totally imaginary.  Once sqrt 2 is adjoined the local degrees
    are even automatically.
    """
    if m < 1 or m % 2 == 0:
        raise ValueError(f"m must be odd and positive, got {m}")
    imaginary = K.totally_imaginary or m > 1
    if adjoin_sqrt2:
        return imaginary
    return (ord2_parity(m) == 0 or K.local_deg2_even) and imaginary


def schur_index(G: AncGroup, K) -> int:
    if theta(G) == 1:
        return 1
    return 1 if sum_of_two_squares_is_minus_one(K, G.m, adjoin_sqrt2=G.j >= 3) else 2


def degree_of_GK(G: AncGroup, K) -> int:
    """Degree over K of the irreducible realisation G(K)."""
    full = rel_cyclotomic_degree(K.k_ab, G.n)
    if G.is_cyclic:
        return full
    circ = rel_cyclotomic_degree(K.k_ab, CycSpec(G.n, character_flavor(G)))
    if full == circ:
        # sqrt(-1) already in E_n^o K: split over the character field
        return 2 * full
    return schur_index(G, K) * full
