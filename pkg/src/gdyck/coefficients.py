"""Multiplicity coefficients ``c_g``, ``c_{1,g}`` and the per-floor path counts they imply.

Every count is produced as an exact rational and converted with :func:`as_count`,
which refuses non-integers.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .compositions import (
    GComposition,
    MixedComposition,
    enumerate_g_compositions,
    enumerate_mixed_compositions,
)
from .errors import ConsistencyError, DomainError
from .symbolic import binom, multinomial


def as_count(x: Fraction, what: str = "count") -> int:
    if Fraction(x).denominator != 1:
        raise ConsistencyError(f"{what} is not an integer: {x}")
    return int(x)


@dataclass(frozen=True)
class FloorCount:
    i: int
    up: int
    down: int
    any: int
    horizontal: int | None = None


@dataclass(frozen=True)
class FloorCountTable:
    floors: tuple[FloorCount, ...]
    total: int

    def __post_init__(self):
        for f in self.floors:
            expected = f.up + f.down + (f.horizontal or 0)
            if f.any != expected or min(f.up, f.down, f.any, f.horizontal or 0) < 0:
                raise ConsistencyError(f"inconsistent floor entry {f}")
        if sum(f.any for f in self.floors) != self.total:
            raise ConsistencyError("floor counts do not add up to the total")

    def floor(self, i: int) -> FloorCount:
        return self.floors[i - 1]

    def to_json(self) -> dict:
        rows = []
        for f in self.floors:
            row = {"i": f.i, "up": f.up, "down": f.down}
            if f.horizontal is not None:
                row["horizontal"] = f.horizontal
            row["any"] = f.any
            rows.append(row)
        return {"floors": rows, "total": self.total}


def _require(comp, kind):
    if not isinstance(comp, kind):
        raise DomainError(f"expected a {kind.__name__}, got {type(comp).__name__}")


def c_g(comp: GComposition) -> Fraction:
    """``(1/l_1) * prod_{i=2}^{j} C(l_{i-g+1} + ... + l_i - 1, l_i)``."""
    _require(comp, GComposition)
    g = comp.g
    value = Fraction(1, comp.part(1))
    for i in range(2, comp.j + 1):
        value *= binom(comp.window(i - g + 1, i) - 1, comp.part(i))
    return value


def c_2_closed_form(comp: GComposition) -> Fraction:
    """The g = 2 coefficient written with ``C(l_k + l_{k+1}, l_k) / (l_k + l_{k+1})`` factors."""
    _require(comp, GComposition)
    parts = comp.parts
    if 0 in parts:
        raise DomainError("the g = 2 closed form needs all parts positive")
    if len(parts) == 1:
        return Fraction(1, parts[0])
    value = Fraction(1)
    for k in range(len(parts) - 1):
        a, b = parts[k], parts[k + 1]
        if k > 0:
            value *= a
        value *= Fraction(binom(a + b, a), a + b)
    return value


def up_start_forms(comp: GComposition, i: int) -> tuple[int, int]:
    """Both printed expressions for the number of paths starting up from floor ``i``.

    Each is an integer-valued product of factorials and binomials; for ``l_i = 0``
    both are 0.
    """
    g, j = comp.g, comp.j
    li = comp.part(i)
    if li == 0:
        return 0, 0
    l = comp.part
    lower = [l(k) for k in range(i - g + 1, i)]
    first = Fraction(math.factorial(sum(lower) + li - 1),
                     math.factorial(li - 1) * math.prod(math.factorial(x) for x in lower))
    for k in range(1, i - g + 1):
        first *= binom(comp.window(k, k + g - 1) - 1, l(k))
    for k in range(i - g + 2, j - g + 2):
        first *= binom(comp.window(k, k + g - 1) - 1, l(k + g - 1))
    upper = [l(k) for k in range(i + 1, i + g - 1)]
    second = Fraction(math.factorial(sum(upper) + li - 1),
                      math.factorial(li - 1) * math.prod(math.factorial(x) for x in upper))
    for k in range(1, i):
        second *= binom(comp.window(k, k + g - 1) - 1, l(k))
    for k in range(i, j - g + 2):
        second *= binom(comp.window(k, k + g - 1) - 1, l(k + g - 1))
    return as_count(first, "first up-start form"), as_count(second, "second up-start form")


def dyck_floor_counts(comp: GComposition) -> FloorCountTable:
    """Per-floor numbers of bridges starting up / down from each floor ``1..j+g-1``."""
    _require(comp, GComposition)
    g, n = comp.g, comp.n
    c = c_g(comp)
    rows = []
    for i in range(1, comp.j + g):
        up = as_count(comp.part(i) * c, f"up-start count at floor {i}")
        if comp.part(i):
            forms = up_start_forms(comp, i)
            if forms != (up, up):
                raise ConsistencyError(f"up-start forms {forms} disagree with l_i c_g = {up} at floor {i}")
        down = as_count(comp.window(i - g + 1, i - 1) * c, f"down-start count at floor {i}")
        rows.append(FloorCount(i=i, up=up, down=down, any=up + down))
    return FloorCountTable(tuple(rows), as_count(g * n * c, "g n c_g"))


def c_1g(mc: MixedComposition) -> Fraction:
    """Mixed-statistics coefficient; ``1/N`` for the trivial composition."""
    _require(mc, MixedComposition)
    if mc.is_trivial:
        return Fraction(1, mc.N)
    g = mc.g
    t1, l1 = mc.tilde_part(1), mc.part(1)
    value = Fraction(math.factorial(t1 + l1 - 1), math.factorial(t1) * math.factorial(l1))
    for k in range(2, mc.j + g):
        tk, lk = mc.tilde_part(k), mc.part(k)
        value *= multinomial(tk + mc.window(k - g + 1, k) - 1, tk, lk)
    return value


def motzkin_floor_counts(mc: MixedComposition) -> FloorCountTable:
    """Per-floor numbers of Motzkin bridges starting up / level / down from each floor."""
    _require(mc, MixedComposition)
    g = mc.g
    c = c_1g(mc)
    rows = []
    for i in range(1, mc.floors + 1):
        up = as_count(mc.part(i) * c, f"up-start count at floor {i}")
        horizontal = as_count(mc.tilde_part(i) * c, f"level-start count at floor {i}")
        down = as_count(mc.window(i - g + 1, i - 1) * c, f"down-start count at floor {i}")
        rows.append(FloorCount(i=i, up=up, down=down, any=up + down + horizontal,
                               horizontal=horizontal))
    return FloorCountTable(tuple(rows), as_count(mc.N * c, "N c_1g"))


def total_dyck_bridges(n: int, g: int) -> int:
    """Sum of ``g n c_g`` over the g-compositions of ``n``; equals ``C(gn, n)``."""
    total = sum(c_g(comp) for comp in enumerate_g_compositions(n, g))
    return as_count(g * n * total, "total Dyck bridges")


def dyck_bridges_closed_form(n: int, g: int) -> int:
    return binom(g * n, n)


def total_motzkin_bridges(N: int, g: int) -> int:
    """``sum_k C(N, gk) C(gk, k)``: all length-N bridges with steps ``g-1, 0, -1``."""
    if N < 1 or g < 2:
        raise DomainError("need N >= 1 and g >= 2")
    return sum(binom(N, g * k) * binom(g * k, k) for k in range(N // g + 1))


def motzkin_bridges_by_compositions(N: int, g: int) -> int:
    """``N`` times the sum of ``c_{1,g}`` over the (1,g)-compositions of ``N``."""
    total = sum(c_1g(mc) for mc in enumerate_mixed_compositions(N, g))
    return as_count(N * total, "total Motzkin bridges")
