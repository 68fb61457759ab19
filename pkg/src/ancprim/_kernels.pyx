# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled subgroup kernels; same contracts as ``_kernels_py``.

Membership is tracked in byte masks of length f, so moduli must stay
below 2**31 (products of two residues fit in a signed 64-bit word).
"""

from libc.stdlib cimport calloc, free, malloc


cdef long long _gcd(long long a, long long b) nogil:
    cdef long long t
    while b:
        t = a % b
        a = b
        b = t
    return a


def _divisors(long long n):
    cdef long long d = 1
    small = []
    large = []
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def unit_group(long long f):
    cdef long long u
    if f == 1:
        return [1]
    return [u for u in range(1, f) if _gcd(u, f) == 1]


def subgroup_closure(gens, long long f):
    if f == 1:
        return [1]
    cdef unsigned char *mask = <unsigned char *>calloc(f, 1)
    cdef long long *elems = <long long *>malloc(f * sizeof(long long))
    cdef Py_ssize_t size = 1, base, i
    cdef long long g, power, x
    if mask == NULL or elems == NULL:
        free(mask)
        free(elems)
        raise MemoryError()
    try:
        mask[1] = 1
        elems[0] = 1
        for g0 in gens:
            g = g0 % f
            if mask[g]:
                continue
            base = size
            power = g
            while not mask[power]:
                for i in range(base):
                    x = elems[i] * power % f
                    mask[x] = 1
                    elems[size] = x
                    size += 1
                power = power * g % f
        return sorted([elems[i] for i in range(size)])
    finally:
        free(mask)
        free(elems)


def image(sub, long long f, long long target):
    if target == 1:
        return [1]
    return sorted({s % target for s in sub})


cdef unsigned char[::1] _mask_of(sub, long long f):
    cdef unsigned char[::1] mask = bytearray(f if f > 1 else 1)
    cdef long long s
    if f == 1:
        mask[0] = 1
        return mask
    for s in sub:
        mask[s % f] = 1
    return mask


def preimage(sub, long long f, long long modulus):
    if modulus == 1:
        return [1]
    if f == 1:
        return unit_group(modulus)
    cdef long long s, u
    out = []
    for s in sub:
        u = s
        while u < modulus:
            if _gcd(u, modulus) == 1:
                out.append(u)
            u += f
    out.sort()
    return out


def preimage_meet(sub1, long long f1, sub2, long long f2, long long modulus):
    if modulus == 1:
        return [1]
    if f1 < f2:
        sub1, f1, sub2, f2 = sub2, f2, sub1, f1
    if f1 == 1:
        return unit_group(modulus)
    cdef unsigned char[::1] m2 = _mask_of(sub2, f2)
    cdef long long s, u
    out = []
    for s in sub1:
        u = s
        while u < modulus:
            if m2[u % f2] and _gcd(u, modulus) == 1:
                out.append(u)
            u += f1
    out.sort()
    return out


cdef bint _contains_kernel(unsigned char[::1] mask, long long f, long long fp):
    cdef long long u = 1
    while u < f:
        if not mask[u] and _gcd(u, f) == 1:
            return False
        u += fp
    return True


def contains_kernel(sub, long long f, long long fp):
    if f == 1:
        return True
    return _contains_kernel(_mask_of(sub, f), f, fp)


def conductor(sub, long long f):
    if f == 1:
        return 1
    cdef unsigned char[::1] mask = _mask_of(sub, f)
    cdef long long fp
    for fp in _divisors(f):
        if _contains_kernel(mask, f, fp):
            return fp
    return f
