"""Textual field literals: ``Q``, ``E(n)``, ``E+(n)``, ``E-(n)``,
``Q(sqrt,d)`` and ``sub(f; g1,g2,...)``."""

from __future__ import annotations

import re
from dataclasses import dataclass

from .fields import AbelianField, CycSpec, Flavor, canonicalize, cyclotomic, quadratic

_CYC = re.compile(r"^E(?P<sign>[+-]?)\(\s*(?P<n>\d+)\s*\)$")
_QUAD = re.compile(r"^Q\(\s*sqrt\s*,\s*(?P<d>[+-]?\d+)\s*\)$")
_SUB = re.compile(r"^sub\(\s*(?P<f>\d+)\s*(?:;\s*(?P<gens>[\d,\s]*))?\)$")


@dataclass(frozen=True)
class FieldLiteral:
    """A parsed literal: the field and, when it has one, its family parameter."""

    field: AbelianField
    label: str
    cyclotomic_r: int | None = None
    quadratic_d: int | None = None


def parse_field(text: str) -> FieldLiteral:
    s = text.strip()
    if s == "Q":
        return FieldLiteral(cyclotomic(1), "Q", cyclotomic_r=1)
    if m := _CYC.match(s):
        n = int(m["n"])
        if n < 1:
            raise ValueError(f"cyclotomic index must be positive in {text!r}")
        flavor = {"": Flavor.PLAIN, "+": Flavor.PLUS, "-": Flavor.MINUS}[m["sign"]]
        label = str(CycSpec(n, flavor))
        r = None
        if flavor is Flavor.PLAIN:
            r = n // 2 if n % 4 == 2 else n
        return FieldLiteral(cyclotomic(n, flavor), label, cyclotomic_r=r)
    if m := _QUAD.match(s):
        d = int(m["d"])
        return FieldLiteral(quadratic(d), f"Q(sqrt,{d})", quadratic_d=d)
    if m := _SUB.match(s):
        f = int(m["f"])
        gens = [int(g) for g in re.split(r"[,\s]+", m["gens"] or "") if g]
        K = canonicalize(f, gens)
        return FieldLiteral(K, str(K))
    raise ValueError(f"cannot parse field literal {text!r}")
