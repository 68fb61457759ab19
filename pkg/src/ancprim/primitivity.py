"""Deciding primitivity of the irreducible realisation G(K).

Three independent routes are provided and are expected to agree:

* ``decide`` / ``cyclic_primitive``: conditions on the cyclometers of K;
* ``decide_raw`` / ``cyclic_primitive_raw``: homogeneity, Schur index and
  relative cyclotomic degrees [E_n K : E_{n/p} K], computed directly;
* ``cyclotomic_family`` / ``quadratic_family``: closed forms for K = E_r
  and K = Q(sqrt d).

Every verdict lists the conditions it checked; it is primitive exactly
when all of them hold.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import gcd

from .anc import (
    AncGroup,
    Kind,
    character_flavor,
    degree_of_GK,
    sum_of_two_squares_is_minus_one,
    theta,
)
from .arith import (
    divides_aug,
    euler_phi,
    factor,
    is_squarefree,
    ord2_parity,
    ord_mod,
)
from .cyclometers import cyclometers
from .fields import (
    AbelianField,
    CycSpec,
    Flavor,
    compositum,
    cyclotomic,
    local_degree_at_2,
    quadratic,
    quadratic_conductor,
    rel_cyclotomic_degree,
    totally_imaginary,
)

__all__ = [
    "COMPUTED",
    "USER_OVERRIDE",
    "FieldDescriptor",
    "Condition",
    "Verdict",
    "describe",
    "quadratic_field",
    "cyclotomic_field",
    "cyclic_primitive",
    "cyclic_primitive_raw",
    "decide",
    "decide_raw",
    "cyclotomic_family",
    "quadratic_family",
    "witness_field",
    "anc_groups",
    "enumeration_bound",
    "enumerate_degree",
]

COMPUTED = "computed-from-abelian"
USER_OVERRIDE = "user-override"


@dataclass(frozen=True)
class FieldDescriptor:
    """What the decision procedures need to know about a number field K.

    ``k_ab`` is the maximal abelian subfield.  The two flags are derived
    from it when K is abelian and may be overridden for other fields.
    """

    k_ab: AbelianField
    totally_imaginary: bool
    local_deg2_even: bool
    provenance: str = COMPUTED
    label: str = ""

    def __str__(self):
        return self.label or str(self.k_ab)


def describe(
    k_ab: AbelianField,
    label: str = "",
    totally_imaginary_flag: bool | None = None,
    local_deg2_even: bool | None = None,
) -> FieldDescriptor:
    """Descriptor for K with maximal abelian subfield ``k_ab``.

    Passing either flag marks the descriptor as a user override.
    """
    imag = totally_imaginary(k_ab)
    even = local_degree_at_2(k_ab) % 2 == 0
    provenance = COMPUTED
    if totally_imaginary_flag is not None or local_deg2_even is not None:
        provenance = USER_OVERRIDE
        if totally_imaginary_flag is not None:
            imag = totally_imaginary_flag
        if local_deg2_even is not None:
            even = local_deg2_even
    return FieldDescriptor(k_ab, imag, even, provenance, label or str(k_ab))


def quadratic_field(d: int) -> FieldDescriptor:
    return describe(quadratic(d), label=f"Q(sqrt,{d})")


def cyclotomic_field(n: int, flavor: Flavor | str = Flavor.PLAIN) -> FieldDescriptor:
    return describe(cyclotomic(n, flavor), label=str(CycSpec(n, Flavor(flavor))))


@dataclass(frozen=True)
class Condition:
    id: str
    ok: bool
    detail: str = ""


@dataclass
class Verdict:
    group: str
    field: str
    route: str
    conditions: list[Condition] = field(default_factory=list)

    @property
    def primitive(self) -> bool:
        return all(c.ok for c in self.conditions)

    def add(self, cid: str, ok: bool, detail: str = "") -> None:
        self.conditions.append(Condition(cid, bool(ok), detail))

    def to_dict(self) -> dict:
        return {
            "group": self.group,
            "field": self.field,
            "primitive": self.primitive,
            "route": self.route,
            "conditions": [
                {"id": c.id, "ok": c.ok, "detail": c.detail} for c in self.conditions
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _local_parity_even(K: FieldDescriptor, m: int) -> bool:
    # ord(2 mod m) * [K_p : Q_2] is even for every p | 2
    return ord2_parity(m) == 0 or K.local_deg2_even


def _imaginary_or_odd(K: FieldDescriptor, m: int) -> bool:
    return K.totally_imaginary or m > 1


def cyclic_primitive(K: FieldDescriptor, n: int, group: str | None = None) -> Verdict:
    c = cyclometers(K.k_ab, n)[0]
    v = Verdict(group or f"C({n})", str(K), "char")
    v.add("n_divides_aug_c", divides_aug(n, c), f"n={n}, c_K(n)={c}")
    return v


def _index(K: AbelianField, n: int, p: int) -> int:
    """[E_n K : E_{n/p} K]."""
    return rel_cyclotomic_degree(K, n) // rel_cyclotomic_degree(K, n // p)


def cyclic_primitive_raw(K: FieldDescriptor, n: int, group: str | None = None) -> Verdict:
    v = Verdict(group or f"C({n})", str(K), "raw")
    for p in factor(n).primes:
        idx = _index(K.k_ab, n, p)
        v.add(f"index_p{p}", idx != p, f"[E_{n}K : E_{n // p}K] = {idx}")
    return v


def decide(G: AncGroup, K: FieldDescriptor) -> Verdict:
    """Primitivity of G(K) read off from the cyclometers of K."""
    if G.is_cyclic:
        return cyclic_primitive(K, G.n, str(G))
    n, j, m = G.n, G.j, G.m
    c, c_plus, c_minus = cyclometers(K.k_ab, n)
    v = Verdict(str(G), str(K), "char")
    aug_n = (divides_aug(n, c), f"n={n}, c_K(n)={c}")
    if G.kind is Kind.DIHEDRAL:
        v.add("c_plus_nonzero", c_plus != 0, f"c+_K({n})={c_plus}")
        v.add("n_divides_aug_c", *aug_n)
    elif G.kind is Kind.SEMIDIHEDRAL:
        # c- = 0 encodes an empty set and never divides n
        v.add("c_minus_divides_n", c_minus != 0 and n % c_minus == 0, f"c-_K({n})={c_minus}")
        v.add("n_divides_aug_c", *aug_n)
    else:
        v.add("c_plus_nonzero", c_plus != 0, f"c+_K({n})={c_plus}")
        if j >= 4:
            v.add("n_divides_aug_c", *aug_n)
        else:
            c_m = cyclometers(K.k_ab, m)[0]
            v.add("m_divides_aug_c_m", divides_aug(m, c_m), f"m={m}, c_K(m)={c_m}")
        v.add(
            "imaginary_or_m_gt_1",
            _imaginary_or_odd(K, m),
            f"totally_imaginary={K.totally_imaginary}, m={m}",
        )
        local_even = _local_parity_even(K, m)
        local_detail = f"ord(2 mod {m}) parity={'odd' if ord2_parity(m) else 'even'}, local_deg2_even={K.local_deg2_even}"
        if j == 2:
            v.add("local_degree_even", local_even, local_detail)
        elif j == 3:
            v.add(
                "local_even_implies_quotient_odd",
                not local_even or (n // c) % 2 == 1,
                f"{local_detail}, n/c_K(n)={n // c}",
            )
    return v


def _sos_in_plus_field(G: AncGroup, K: FieldDescriptor) -> tuple[bool, str]:
    """Solubility of x^2 + y^2 = -1 in E_n^+ K.

    For abelian K this is decided on L = E_n^+ K itself: -1 is a sum of two
    squares in L iff L has no real place and every prime of L over 2 has
    even local degree.
    """
    if K.provenance == COMPUTED:
        L = compositum(cyclotomic(G.n, Flavor.PLUS), K.k_ab)
        imag, loc = totally_imaginary(L), local_degree_at_2(L)
        return imag and loc % 2 == 0, f"L=E+({G.n})K: totally_imaginary={imag}, [L_p:Q_2]={loc}"
    ok = sum_of_two_squares_is_minus_one(K, G.m, adjoin_sqrt2=G.j >= 3)
    return ok, "from descriptor flags"


def decide_raw(G: AncGroup, K: FieldDescriptor) -> Verdict:
    """Primitivity of G(K) from degrees of relative cyclotomic extensions.

    A cyclic subgroup A of index 2 must be irreducible; if it is, the
    remaining conditions are on [E_n K : E_{n/p} K] for primes p | n.
    """
    if G.is_cyclic:
        raise ValueError("decide_raw handles non-cyclic groups; use cyclic_primitive_raw")
    n, j, m = G.n, G.j, G.m
    Kab = K.k_ab
    v = Verdict(str(G), str(K), "raw")
    flavor = character_flavor(G)
    full = rel_cyclotomic_degree(Kab, n)
    circ = rel_cyclotomic_degree(Kab, CycSpec(n, flavor))
    homogeneous = full != circ
    v.add(
        "A_homogeneous",
        homogeneous,
        f"[E_{n}K:K]={full}, [E{flavor.symbol}_{n}K:K]={circ}",
    )
    if theta(G) == 1:
        v.add("A_irreducible", homogeneous, "theta=+1")
    else:
        sos, detail = _sos_in_plus_field(G, K)
        v.add("A_irreducible", homogeneous and sos, detail)
    check_two = G.kind is not Kind.QUATERNION or j >= 4
    for p in factor(n).primes:
        if p == 2 and not check_two:
            continue
        idx = _index(Kab, n, p)
        v.add(f"index_p{p}", idx != p, f"[E_{n}K : E_{n // p}K] = {idx}")
    if G.kind is Kind.QUATERNION and j == 3:
        local_even = _local_parity_even(K, m)
        idx = _index(Kab, n, 2)
        v.add(
            "local_even_implies_index_p2",
            not local_even or idx != 2,
            f"local parity even={local_even}, [E_{n}K : E_{n // 2}K] = {idx}",
        )
    return v


def cyclotomic_family(r: int, G: AncGroup) -> Verdict:
    """Closed-form verdict for K = E_r (r not 2 mod 4)."""
    if r < 1 or r % 4 == 2:
        raise ValueError(f"r must be positive and not 2 mod 4, got {r}")
    v = Verdict(str(G), f"E({r})", "family")
    n, j, m = G.n, G.j, G.m
    if G.is_cyclic:
        v.add("n_divides_aug_r", divides_aug(n, r), f"n={n}, r={r}")
        return v
    if G.kind is not Kind.QUATERNION or j >= 4:
        v.add("listed_kind", False, "only Q8 x C_m and Q16 x C_m occur")
        return v
    r_odd = r % 2 == 1
    v.add("r_odd", r_odd, f"r={r}")
    v.add("m_divides_aug_r", divides_aug(m, r), f"m={m}, r={r}")
    v.add("rm_gt_1", r * m > 1, f"rm={r * m}")
    if r_odd:
        parity = ord_mod(2, r * m) % 2
        want = 0 if j == 2 else 1
        v.add(
            "ord2_rm_parity",
            parity == want,
            f"ord(2 mod {r * m})={ord_mod(2, r * m)}",
        )
    return v


def quadratic_family(d: int, G: AncGroup) -> Verdict:
    """Closed-form verdict for K = Q(sqrt d)."""
    if d in (0, 1) or not is_squarefree(d):
        raise ValueError(f"d must be squarefree and different from 0 and 1, got {d}")
    f = quadratic_conductor(d)
    v = Verdict(str(G), f"Q(sqrt,{d})", "family")
    n, j, m = G.n, G.j, G.m
    r8 = d % 8
    if G.is_cyclic:
        ok = is_squarefree(n) or (n % f == 0 and divides_aug(n, f))
        v.add("n_squarefree_or_f_n_aug_f", ok, f"n={n}, f={f}")
        return v
    v.add("m_squarefree", is_squarefree(m), f"m={m}")
    if G.kind in (Kind.DIHEDRAL, Kind.SEMIDIHEDRAL):
        want = 2 if G.kind is Kind.DIHEDRAL else 6
        v.add("two_part_order_16", j == 3, f"j={j}")
        v.add(f"d_is_{want}_mod_8", r8 == want, f"d mod 8 = {r8}")
        v.add("d_divides_2m", (2 * m) % abs(d) == 0, f"d={d}, m={m}")
        return v
    if j >= 4:
        v.add("listed_kind", False, "generalised quaternion of order > 16 never occurs")
        return v
    v.add("d_pos_implies_m_gt_1", d < 0 or m > 1, f"d={d}, m={m}")
    if j == 2:
        v.add(
            "d_1_mod_8_implies_ord2_even",
            r8 != 1 or ord2_parity(m) == 0,
            f"d mod 8 = {r8}, ord(2 mod {m})={ord_mod(2, m)}",
        )
        v.add("d_3_mod_4_implies_d_not_dividing_m", d % 4 != 3 or m % abs(d) != 0, f"d={d}, m={m}")
    else:
        first = r8 == 1 and ord2_parity(m) == 1
        second = r8 == 2 and (2 * m) % abs(d) == 0
        v.add("q16_bullet", first or second, f"d mod 8 = {r8}, ord(2 mod {m})={ord_mod(2, m)}")
    return v


def witness_field(G: AncGroup) -> FieldDescriptor:
    """An abelian field over which G(K) is primitive."""
    n = G.n
    if G.kind is Kind.CYCLIC:
        return cyclotomic_field(n)
    if G.kind is Kind.DIHEDRAL:
        return cyclotomic_field(n, Flavor.PLUS)
    if G.kind is Kind.SEMIDIHEDRAL:
        return cyclotomic_field(n, Flavor.MINUS)
    ell = 3
    while gcd(ell, n) != 1 or ord_mod(2, ell) % 2:
        ell += 2
    return cyclotomic_field(n * ell, Flavor.PLUS)


def anc_groups(n_max: int, n_min: int = 1):
    """All ANC groups with n_min <= n <= n_max, ordered by (kind, n)."""
    for kind in Kind:
        for n in range(n_min, n_max + 1):
            j = (n & -n).bit_length() - 1
            if kind is Kind.CYCLIC or (kind is Kind.QUATERNION and j >= 2) or j >= 3:
                yield AncGroup(kind, n)


def enumeration_bound(K: FieldDescriptor, d: int) -> int:
    """Largest n that can give a degree-d realisation over K.

    phi(n) >= sqrt(n/2) and [E_n K : K] >= phi(n) / [K_ab : Q].
    """
    return 2 * (d * K.k_ab.degree()) ** 2


def enumerate_degree(
    K: FieldDescriptor, d: int, bound: int | None = None
) -> list[tuple[AncGroup, Verdict]]:
    """Primitive G(K) of degree d, one per conjugacy class of subgroups of GL_d(K)."""
    if d < 1:
        raise ValueError(f"degree must be positive, got {d}")
    if bound is None:
        bound = enumeration_bound(K, d)
    kab_deg = K.k_ab.degree()
    out = []
    for G in anc_groups(bound):
        # cheap necessary condition before any field arithmetic
        if euler_phi(G.n) > d * kab_deg:
            continue
        if degree_of_GK(G, K) != d:
            continue
        verdict = decide(G, K)
        if verdict.primitive:
            out.append((G, verdict))
    return out

