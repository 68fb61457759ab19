import json
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from ancprim.arith import lcm
from ancprim.cyclometers import brute_D, cyclometer, cyclometer_table, cyclometers, in_D
from ancprim.fields import RATIONALS, Flavor, canonicalize, cyclotomic, quadratic


def oracle_D(K, n, flavor, bound):
    """D^flavor_K(n) cut at bound, from subgroups at a common modulus."""
    M0 = lcm(K.modulus, n)
    HK = oracles.lift(K.subgroup, K.modulus, M0)
    cap = oracles.closure(list(HK | oracles.plain_sub(n, M0)), M0)
    out = set()
    for d in range(1, bound + 1):
        M = lcm(M0, d)
        if oracles.field_sub(flavor, d, M) <= oracles.lift(cap, M0, M):
            out.add(d)
    return out


def oracle_cyclometer(K, n, flavor):
    # every cyclometer is at most 2n, so the gcd over d <= 2n is exact
    return gcd(*oracle_D(K, n, flavor, 2 * n), 0)


@st.composite
def small_fields(draw):
    f = draw(st.integers(1, 48))
    units = sorted(oracles.units(f)) if f > 1 else [1]
    gens = draw(st.lists(st.sampled_from(units), max_size=2))
    return canonicalize(f, gens)


@given(small_fields(), st.integers(1, 24), st.sampled_from(["plain", "plus", "minus"]))
@settings(max_examples=80, deadline=None)
def test_cyclometer_matches_oracle(K, n, flavor):
    assert cyclometer(K, n, flavor) == oracle_cyclometer(K, n, flavor)


@given(small_fields(), st.integers(1, 24), st.sampled_from(["plain", "plus", "minus"]))
@settings(max_examples=40, deadline=None)
def test_brute_D_matches_oracle(K, n, flavor):
    assert brute_D(K, n, flavor, 3 * n) == oracle_D(K, n, flavor, 3 * n)


def test_in_D_examples():
    for n in (1, 6, 8):
        for fl in Flavor:
            assert in_D(RATIONALS, n, fl, 1)
    assert in_D(quadratic(5), 5, "plus", 5)
    assert not any(in_D(quadratic(-1), 4, "plus", d) for d in range(1, 200))
    with pytest.raises(ValueError):
        in_D(RATIONALS, 0, "plain", 1)


def test_cyclometer_examples():
    for n in (1, 7, 24):
        assert cyclometers(RATIONALS, n) == (1, 1, 1)
    assert cyclometer(quadratic(2), 8, "minus") == 16
    assert cyclometer(cyclotomic(5), 15) == 5
    assert cyclometer(quadratic(-2), 8, "plus") == 0
    assert cyclometer(quadratic(-2), 8, "minus") == 8
    with pytest.raises(ValueError):
        cyclometer(RATIONALS, 0)


def test_brute_D_examples():
    assert brute_D(RATIONALS, 6, "plain", 10) == set(range(1, 11))
    # the even part of D^- is twice D^+ = 8N, so 32 belongs as well as 16
    assert brute_D(quadratic(2), 8, "minus", 40) == {16, 32}
    assert brute_D(quadratic(-1), 4, "plus", 50) == set()


def test_table_shape_and_serialisation():
    t = cyclometer_table(RATIONALS)
    assert t.rows() == [(1, 1, 1, 1)]
    assert t.to_tsv() == "1\t1\t1\t1\n"
    t5 = cyclometer_table(quadratic(5))
    assert [r[0] for r in t5.rows()] == [1, 5]
    assert t5.entries[5] == (5, 5, 5)
    data = json.loads(cyclometer_table(quadratic(-2)).to_json())
    assert data[-1] == {"n": 8, "c": 8, "c_plus": 0, "c_minus": 8}
    assert [row["n"] for row in data] == [1, 2, 4, 8]


@given(small_fields(), st.integers(1, 500))
@settings(max_examples=80, deadline=None)
def test_periodicity_is_not_vacuous(K, n):
    # cyclometer() works at n itself; the table goes through gcd(n, f)
    direct = tuple(cyclometer(K, n, fl) for fl in Flavor)
    assert direct == cyclometers(K, n)
    assert direct == tuple(cyclometer(K, gcd(n, K.modulus), fl) for fl in Flavor)


@given(small_fields(), st.integers(1, 200))
@settings(max_examples=60, deadline=None)
def test_cyclometer_invariants(K, n):
    c, cp, cm = cyclometers(K, n)
    assert n % c == 0
    assert cp == 0 or n % cp == 0
    if cp:
        assert cm == (2 * cp if cp % 2 == 0 else cp)
    elif cm:
        assert cm % 8 == 0
