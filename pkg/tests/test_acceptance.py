"""The ten acceptance criteria, each with its time limit.

Every test records a PASS/FAIL line that is echoed in the terminal summary.
"""

import time
from math import gcd

import pytest

import oracles
from ancprim.anc import AncGroup, Kind, standard_rep, verify_presentation
from ancprim.arith import divisors, euler_phi, factor, is_squarefree, nu, ord_mod
from ancprim.cyclometers import brute_D, cyclometer, cyclometers
from ancprim.fields import (
    CycSpec,
    Flavor,
    compositum,
    cyclotomic,
    intersect,
    local_degree_at_2,
    quadratic,
    quadratic_conductor,
    rel_cyclotomic_degree,
)
from ancprim.primitivity import (
    anc_groups,
    cyclic_primitive,
    cyclic_primitive_raw,
    cyclotomic_family,
    decide,
    decide_raw,
    describe,
    enumerate_degree,
    quadratic_family,
    quadratic_field,
    witness_field,
)

PLAIN, PLUS, MINUS = Flavor.PLAIN, Flavor.PLUS, Flavor.MINUS


class Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start


def finish(acceptance, number, title, failures, timer, limit):
    within = timer.elapsed < limit
    ok = not failures and within
    note = f"({timer.elapsed:.2f}s of {limit}s, {len(failures)} failures)"
    acceptance(number, title, ok, note)
    assert not failures, failures[:10]
    assert within, f"took {timer.elapsed:.1f}s, limit {limit}s"


def squarefree_range(lo, hi):
    return [d for d in range(-hi, hi + 1) if abs(d) >= lo and d != 1 and is_squarefree(d)]


# closed-form table keyed by d mod 8: (c_plus(f)/f, c_minus(f)/f), 0 meaning empty
QUADRATIC_TABLE = {1: (1, 1), 5: (1, 1), 3: (0, 0), 7: (0, 0), 2: (1, 2), 6: (0, 1)}


def test_1_quadratic_cyclometer_table(acceptance):
    failures = []
    with Timer() as t:
        for d in squarefree_range(2, 60):
            K = quadratic(d)
            f = quadratic_conductor(d)
            plus, minus = QUADRATIC_TABLE[d % 8]
            want = (f, plus * f, minus * f)
            if cyclometers(K, f) != want:
                failures.append((d, "at f", cyclometers(K, f), want))
            for n in divisors(f)[:-1]:
                if cyclometers(K, n) != (1, 1, 1):
                    failures.append((d, n, cyclometers(K, n)))
            for n in (2 * f, 3 * f, 4 * f, f + 1, 5 * f + 2, 840):
                direct = tuple(cyclometer(K, n, fl) for fl in Flavor)
                periodic = tuple(cyclometer(K, gcd(n, f), fl) for fl in Flavor)
                if direct != periodic:
                    failures.append((d, n, direct, periodic))
    finish(acceptance, 1, "quadratic cyclometer table", failures, t, 5)


def cyclotomic_closed_form(r, n):
    g = gcd(r, n)
    c = g // 2 if g % 4 == 2 else g
    pm = 0 if g % 4 == 0 else c
    return c, pm, pm


def test_2_cyclotomic_cyclometer_formulas(acceptance):
    failures = []
    with Timer() as t:
        for r in range(1, 49):
            if r % 4 == 2:
                continue
            K = cyclotomic(r)
            for n in range(1, 201):
                got = tuple(cyclometer(K, n, fl) for fl in Flavor)
                want = cyclotomic_closed_form(r, n)
                if got != want:
                    failures.append((r, n, got, want))
    finish(acceptance, 2, "cyclotomic cyclometer formulas", failures, t, 30)


def test_3_triple_route_agreement(acceptance, corpus):
    failures = []
    checked = 0
    groups = list(anc_groups(240))
    assert {G.kind for G in groups} == set(Kind)
    with Timer() as t:
        for K, r, d in corpus:
            for G in groups:
                if G.is_cyclic:
                    verdicts = [cyclic_primitive(K, G.n), cyclic_primitive_raw(K, G.n)]
                else:
                    verdicts = [decide(G, K), decide_raw(G, K)]
                if r is not None:
                    verdicts.append(cyclotomic_family(r, G))
                if d is not None:
                    verdicts.append(quadratic_family(d, G))
                checked += 1
                if len({v.primitive for v in verdicts}) != 1:
                    failures.append((str(G), str(K), [(v.route, v.primitive) for v in verdicts]))
    assert len(corpus) >= 100 and checked == len(corpus) * len(groups)
    finish(acceptance, 3, "triple-route agreement", failures, t, 300)


def _epm_formulas(n, m):
    g = gcd(n, m)
    vn, vm = nu(2, n), nu(2, m)
    return {
        (PLUS, PLUS): (g, PLUS),
        (PLUS, PLAIN): (g, PLUS),
        (PLUS, MINUS): (g // 2, PLUS) if 0 < vm <= vn else (g, PLUS),
        (MINUS, MINUS): (g // 2, PLUS) if 0 != vn != vm != 0 else (g, MINUS),
        (PLAIN, MINUS): (g, MINUS) if vn >= vm else (g, PLUS),
    }


def test_4_epm_intersections(acceptance):
    failures = []
    with Timer() as t:
        for n in range(1, 121):
            for m in range(1, 121):
                for (a, b), (k, fl) in _epm_formulas(n, m).items():
                    got = intersect(cyclotomic(n, a), cyclotomic(m, b))
                    if got != cyclotomic(k, fl):
                        failures.append((n, a.value, m, b.value))
    finish(acceptance, 4, "intersection formulas for E_n^+-", failures, t, 60)


def _dpm_failures(K, n):
    bound = 4 * n
    D = {fl: brute_D(K, n, fl, bound) for fl in Flavor}
    c = {fl: cyclometer(K, n, fl) for fl in Flavor}
    out = []

    def check(ok, what):
        if not ok:
            out.append((str(K), n, what))

    for fl, S in D.items():
        if S:
            check(all(x % c[fl] == 0 for x in S) and min(S) == c[fl], f"(1) {fl.value}")
            if fl is not MINUS:
                check(S == set(range(c[fl], bound + 1, c[fl])) and n % c[fl] == 0, f"(1b) {fl.value}")
        else:
            check(c[fl] == 0, f"empty {fl.value}")
    for x in D[MINUS]:
        g = gcd(x, n)
        check(g in D[MINUS] or 2 * g in D[MINUS], "(2)")
    odd = {fl: {x for x in S if x % 2} for fl, S in D.items()}
    check(odd[PLAIN] == odd[PLUS] == odd[MINUS], "(3)")
    if not D[PLUS] and D[MINUS]:
        cm = c[MINUS]
        check(cm % 8 == 0, "(4) 8 | c-")
        check(D[MINUS] == set(range(cm, bound + 1, 2 * cm)), "(4) odd multiples")
        check(cm == gcd(*[x for x in D[MINUS] if n % x == 0], 0), "(4) gcd of divisors")
    if D[PLUS]:
        even_minus = {x for x in D[MINUS] if x % 2 == 0}
        doubled = {2 * x for x in D[PLUS] if 2 * x <= bound}
        check(even_minus == doubled, "(5) D-(n;0) = 2 D+")
        check(doubled <= {x for x in D[PLUS] if x % 2 == 0}, "(5) inside D+(n;0)")
        if c[PLUS] % 2 == 0:
            check(c[MINUS] == 2 * c[PLUS], "(5) c- = 2c+")
        else:
            check(D[MINUS] == D[PLUS], "(5) D- = D+")
    return out


def test_5_dpm_properties(acceptance, corpus):
    failures = []
    with Timer() as t:
        for K, _, _ in corpus:
            for n in range(1, 101):
                failures += _dpm_failures(K.k_ab, n)
    finish(acceptance, 5, "properties of the sets D, D+, D-", failures, t, 120)


def test_6_degree_and_sqrt_lemmas(acceptance, corpus):
    failures = []
    E4 = cyclotomic(4)
    with Timer() as t:
        for K, _, _ in corpus:
            Kab = K.k_ab
            for n in range(1, 201):
                c, cp, cm = cyclometers(Kab, n)
                for p in factor(n).primes:
                    idx = rel_cyclotomic_degree(Kab, n) // rel_cyclotomic_degree(Kab, n // p)
                    formula = n % (p * p) == 0 and (n // c) % p == 0
                    if (idx == p) != formula:
                        failures.append((str(K), n, p, "index"))
                if n % 4:
                    continue
                has_i = {
                    fl: intersect(E4, compositum(cyclotomic(n, fl), Kab)) == E4 for fl in (PLUS, MINUS)
                }
                if (not has_i[PLUS]) != (cp != 0):
                    failures.append((str(K), n, "sqrt(-1) in E+K"))
                formula_minus = (cp != 0 and n % (2 * cp) == 0) or (
                    cm != 0 and n % cm == 0 and n % (2 * cm) != 0
                )
                if (not has_i[MINUS]) != formula_minus:
                    failures.append((str(K), n, "sqrt(-1) in E-K"))
    finish(acceptance, 6, "relative degree and sqrt(-1) membership", failures, t, 60)


def test_7_presentations(acceptance):
    failures = []
    checked = 0
    with Timer() as t:
        for two_order in (8, 16, 32, 64, 128):
            j = two_order.bit_length() - 2
            for kind in (Kind.DIHEDRAL, Kind.SEMIDIHEDRAL, Kind.QUATERNION):
                if kind is not Kind.QUATERNION and j < 3:
                    continue
                G = AncGroup(kind, 1 << j)
                for k in range(1, 1 << j, 2):
                    checked += 1
                    report = verify_presentation(standard_rep(G, k), G)
                    if not report:
                        failures.append((str(G), k, report.failures))
    assert checked > 0
    finish(acceptance, 7, "matrix presentations", failures, t, 10)


def test_8_witness_soundness(acceptance):
    failures = []
    with Timer() as t:
        for G in anc_groups(200):
            if not decide(G, witness_field(G)).primitive:
                failures.append(str(G))
    finish(acceptance, 8, "witness fields", failures, t, 60)


def degree_over_Q(G):
    """Degree of G(Q), computed from scratch for the rationals."""
    phi = oracles.euler_phi(G.n)
    if G.kind in (Kind.CYCLIC, Kind.DIHEDRAL, Kind.SEMIDIHEDRAL):
        return phi
    # -1 is a sum of two squares in E_n^+ iff it is imaginary (m > 1) and
    # its local degree at 2 is even (automatic once sqrt 2 is present)
    m = G.m
    split = m > 1 and (G.j >= 3 or ord_mod(2, m) % 2 == 0)
    return phi if split else 2 * phi


def test_9_enumeration(acceptance):
    Q = describe(cyclotomic(1), "Q")
    failures = []
    with Timer() as t:
        for d in (1, 2, 4, 6, 8, 12, 16):
            got = [G for G, _ in enumerate_degree(Q, d)]
            scan = [
                G
                for G in anc_groups(2 * d * d)
                if degree_over_Q(G) == d and decide(G, Q).primitive
            ]
            if got != scan:
                failures.append((d, list(map(str, got)), list(map(str, scan))))
            cyclic = [G.n for G in got if G.is_cyclic]
            want = [n for n in range(1, 2 * d * d + 1) if oracles.squarefree(n) and oracles.euler_phi(n) == d]
            if cyclic != want:
                failures.append((d, cyclic, want))
    finish(acceptance, 9, "enumeration over Q", failures, t, 60)


def test_10_local_degrees(acceptance):
    failures = []
    with Timer() as t:
        for d in squarefree_range(2, 60):
            split = local_degree_at_2(quadratic_field(d).k_ab) == 1
            if split != (d % 8 == 1):
                failures.append(("quadratic", d))
        for r in range(1, 49, 2):
            if local_degree_at_2(cyclotomic(r)) != ord_mod(2, r):
                failures.append(("cyclotomic", r))
    finish(acceptance, 10, "local degrees at 2", failures, t, 10)


@pytest.mark.parametrize("n", [12, 24, 60])
def test_degree_oracle_matches_package(n):
    from ancprim.anc import degree_of_GK

    Q = describe(cyclotomic(1), "Q")
    for G in anc_groups(n, n):
        assert degree_of_GK(G, Q) == degree_over_Q(G)
    assert euler_phi(n) == oracles.euler_phi(n)
    assert rel_cyclotomic_degree(Q.k_ab, CycSpec(n)) == euler_phi(n)
