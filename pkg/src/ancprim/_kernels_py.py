"""Pure-Python subgroup kernels on unit groups (Z/f)^x.

Residues are integers in ``[0, f)``; the unit group mod 1 is represented
as ``[1]``.  Callers guarantee that generators are coprime to the modulus
and that moduli divide each other where required.
"""

from math import gcd

__all__ = [
    "unit_group",
    "subgroup_closure",
    "image",
    "preimage",
    "preimage_meet",
    "contains_kernel",
    "conductor",
]


def _divisors(n):
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def unit_group(f):
    if f == 1:
        return [1]
    return [u for u in range(1, f) if gcd(u, f) == 1]


def subgroup_closure(gens, f):
    """Sorted elements of the subgroup of (Z/f)^x generated by ``gens``."""
    if f == 1:
        return [1]
    members = {1}
    elems = [1]
    for g in gens:
        g %= f
        if g in members:
            continue
        # <H, g> is the disjoint union of the cosets H g^i before g^i falls into H
        base = list(elems)
        power = g
        while power not in members:
            for h in base:
                x = h * power % f
                members.add(x)
                elems.append(x)
            power = power * g % f
    elems.sort()
    return elems


def image(sub, f, target):
    """Image of ``sub`` under reduction (Z/f)^x -> (Z/target)^x."""
    if target == 1:
        return [1]
    return sorted({u % target for u in sub})


def preimage(sub, f, modulus):
    """All units mod ``modulus`` whose reduction mod ``f`` lies in ``sub``."""
    if f == 1:
        return unit_group(modulus)
    out = []
    for s in sub:
        for u in range(s, modulus, f):
            if gcd(u, modulus) == 1:
                out.append(u)
    out.sort()
    return out


def preimage_meet(sub1, f1, sub2, f2, modulus):
    """Units mod ``modulus`` reducing into ``sub1`` mod f1 and ``sub2`` mod f2."""
    if f1 < f2:
        sub1, f1, sub2, f2 = sub2, f2, sub1, f1
    second = set(sub2)
    out = []
    for u in preimage(sub1, f1, modulus):
        if f2 == 1 or u % f2 in second:
            out.append(u)
    return out


def contains_kernel(sub, f, fp):
    """True iff ker((Z/f)^x -> (Z/fp)^x) is contained in ``sub``."""
    if f == 1:
        return True
    members = set(sub)
    for u in range(1, f, fp):
        if gcd(u, f) == 1 and u not in members:
            return False
    return True


def conductor(sub, f):
    """Least divisor fp of f whose reduction kernel lies inside ``sub``."""
    for fp in _divisors(f):
        if contains_kernel(sub, f, fp):
            return fp
    return f
