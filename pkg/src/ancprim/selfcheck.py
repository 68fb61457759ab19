"""Property corpus run by ``ancprim selfcheck``.

Each check returns the number of cases that passed and a list of failing
cases; the harness only reports, it never raises on a failure.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .anc import AncGroup, Kind, standard_rep, verify_presentation
from .arith import is_squarefree
from .fields import AbelianField, Flavor, canonicalize, cyclotomic, quadratic, unit_group
from .primitivity import (
    FieldDescriptor,
    anc_groups,
    cyclic_primitive,
    cyclic_primitive_raw,
    cyclotomic_family,
    decide,
    decide_raw,
    describe,
    quadratic_family,
    witness_field,
)


@dataclass
class CheckResult:
    name: str
    passed: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, ok: bool, case: str) -> None:
        if ok:
            self.passed += 1
        else:
            self.failures.append(case)


def random_fields(count: int, max_conductor: int, seed: int = 20240601) -> list[AbelianField]:
    """Distinct abelian fields from random subgroups of (Z/f)^x, f <= max_conductor."""
    rng = random.Random(seed)
    out: list[AbelianField] = []
    seen = set()
    while len(out) < count:
        f = rng.randint(3, max_conductor)
        units = unit_group(f)
        gens = rng.sample(units, min(len(units), rng.randint(1, 2)))
        K = canonicalize(f, gens)
        if K.modulus > 1 and K not in seen:
            seen.add(K)
            out.append(K)
    return out


def field_corpus(
    d_max: int = 30, r_max: int = 48, random_count: int = 20, random_f: int = 120
) -> list[tuple[FieldDescriptor, int | None, int | None]]:
    """(descriptor, r if K = E_r, d if K = Q(sqrt d)), deduplicated by field."""
    out = []
    seen = set()

    def add(K, label, r=None, d=None):
        key = (K, r, d)
        if key not in seen:
            seen.add(key)
            out.append((describe(K, label), r, d))

    for d in range(-d_max, d_max + 1):
        if d not in (0, 1) and is_squarefree(d):
            add(quadratic(d), f"Q(sqrt,{d})", d=d)
    for r in range(1, r_max + 1):
        if r % 4 == 2:
            continue
        for flavor in Flavor:
            label = f"E{flavor.symbol}({r})"
            add(cyclotomic(r, flavor), label, r=r if flavor is Flavor.PLAIN else None)
    for K in random_fields(random_count, random_f):
        add(K, str(K))
    return out


def check_route_agreement(n_max: int, corpus) -> CheckResult:
    res = CheckResult("route agreement")
    groups = list(anc_groups(n_max))
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
            answers = {v.primitive for v in verdicts}
            res.record(len(answers) == 1, f"{G} over {K}")
    return res


def check_witnesses(n_max: int) -> CheckResult:
    res = CheckResult("witness soundness")
    for G in anc_groups(n_max):
        res.record(decide(G, witness_field(G)).primitive, str(G))
    return res


def check_presentations(max_two_order: int) -> CheckResult:
    res = CheckResult("presentations")
    two = 8
    while two <= max_two_order:
        j = two.bit_length() - 2
        for kind in Kind:
            if kind is Kind.CYCLIC or (kind is not Kind.QUATERNION and j < 3):
                continue
            G = AncGroup(kind, 1 << j)
            for k in range(1, 1 << j, 2):
                res.record(bool(verify_presentation(standard_rep(G, k), G)), f"{G} k={k}")
        two *= 2
    return res


def check_rationals(n_max: int) -> CheckResult:
    """Over Q only quaternion kinds can be non-cyclic primitive."""
    res = CheckResult("rationals")
    Q = describe(cyclotomic(1), "Q")
    for G in anc_groups(n_max):
        if G.kind in (Kind.DIHEDRAL, Kind.SEMIDIHEDRAL):
            res.record(not decide(G, Q).primitive, str(G))
    return res


def run(fast: bool = False) -> list[CheckResult]:
    if fast:
        corpus = field_corpus(d_max=10, r_max=16, random_count=5, random_f=60)
        n_max, witness_max, two_max = 64, 64, 32
    else:
        corpus = field_corpus()
        n_max, witness_max, two_max = 240, 200, 128
    return [
        check_presentations(two_max),
        check_witnesses(witness_max),
        check_rationals(n_max),
        check_route_agreement(n_max, corpus),
    ]

