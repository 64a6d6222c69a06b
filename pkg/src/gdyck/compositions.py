"""g-compositions and (1,g)-compositions: validation, enumeration and counting."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .errors import DomainError
from .symbolic import TruncatedSeries, binom


def _check_order(g: int) -> None:
    if not isinstance(g, int) or g < 2:
        raise DomainError(f"exclusion order g must be an integer >= 2, got {g!r}")


def _check_positive(name: str, n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise DomainError(f"{name} must be a positive integer, got {n!r}")


def _max_zero_run(parts: Sequence[int]) -> int:
    run = best = 0
    for p in parts:
        run = run + 1 if p == 0 else 0
        best = max(best, run)
    return best


def _validate_parts(parts: Sequence[int], g: int) -> None:
    if not parts:
        raise DomainError("a g-composition needs at least one part")
    if any((not isinstance(p, int)) or p < 0 for p in parts):
        raise DomainError(f"parts must be nonnegative integers: {parts!r}")
    if parts[0] == 0 or parts[-1] == 0:
        raise DomainError(f"first and last parts must be positive: {parts!r}")
    if _max_zero_run(parts) > g - 2:
        raise DomainError(f"more than {g - 2} successive zero parts in {parts!r}")


@dataclass(frozen=True, order=True)
class GComposition:
    """Ordered parts ``(l_1, ..., l_j)`` summing to ``n`` with at most ``g-2`` zeros in a row."""

    parts: tuple[int, ...]
    g: int

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        _check_order(self.g)
        _validate_parts(self.parts, self.g)

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def j(self) -> int:
        return len(self.parts)

    def part(self, i: int) -> int:
        """``l_i`` (1-based), zero for ``i <= 0`` or ``i > j``."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def window(self, lo: int, hi: int) -> int:
        """``l_lo + ... + l_hi`` under the zero-outside convention; empty ranges give 0."""
        return sum(self.part(i) for i in range(lo, hi + 1))

    def to_json(self) -> list[int]:
        return list(self.parts)

    @classmethod
    def from_json(cls, data: Sequence[int], g: int) -> "GComposition":
        return cls(tuple(int(x) for x in data), g)

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")"


@dataclass(frozen=True)
class MixedComposition:
    """A (1,g)-composition ``(tilde_1..tilde_{j+g-1}; l_1..l_j)``.

    The trivial composition has ``parts == ()`` and ``tilde == (N,)``.
    """

    tilde: tuple[int, ...]
    parts: tuple[int, ...]
    g: int

    def __post_init__(self):
        object.__setattr__(self, "tilde", tuple(self.tilde))
        object.__setattr__(self, "parts", tuple(self.parts))
        _check_order(self.g)
        if any((not isinstance(t, int)) or t < 0 for t in self.tilde):
            raise DomainError(f"tilde parts must be nonnegative integers: {self.tilde!r}")
        if not self.parts:
            if len(self.tilde) != 1 or self.tilde[0] < 1:
                raise DomainError("the trivial composition is (N,) with N >= 1")
            return
        _validate_parts(self.parts, self.g)
        if len(self.tilde) != len(self.parts) + self.g - 1:
            raise DomainError(
                f"expected {len(self.parts) + self.g - 1} tilde parts, got {len(self.tilde)}")

    @property
    def N(self) -> int:
        return sum(self.tilde) + self.g * sum(self.parts)

    @property
    def j(self) -> int:
        return len(self.parts)

    @property
    def is_trivial(self) -> bool:
        return not self.parts

    @property
    def floors(self) -> int:
        """Number of floors spanned by the associated paths."""
        return len(self.tilde)

    def part(self, i: int) -> int:
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def tilde_part(self, i: int) -> int:
        return self.tilde[i - 1] if 1 <= i <= len(self.tilde) else 0

    def window(self, lo: int, hi: int) -> int:
        return sum(self.part(i) for i in range(lo, hi + 1))

    def to_json(self) -> dict[str, list[int]]:
        return {"tilde": list(self.tilde), "parts": list(self.parts)}

    @classmethod
    def from_json(cls, data: dict, g: int) -> "MixedComposition":
        return cls(tuple(int(x) for x in data["tilde"]),
                   tuple(int(x) for x in data.get("parts", ())), g)

    def __str__(self):
        t = ",".join(map(str, self.tilde))
        return f"({t})" if not self.parts else f"({t};{','.join(map(str, self.parts))})"


def _extend(prefix: list[int], remaining: int, zero_run: int, g: int) -> Iterator[tuple[int, ...]]:
    if remaining == 0:
        yield tuple(prefix)
        return
    # Ascending next-part values keeps the output in lexicographic order.
    if zero_run < g - 2:
        prefix.append(0)
        yield from _extend(prefix, remaining, zero_run + 1, g)
        prefix.pop()
    for v in range(1, remaining + 1):
        prefix.append(v)
        yield from _extend(prefix, remaining - v, 0, g)
        prefix.pop()


def iter_g_composition_parts(n: int, g: int) -> Iterator[tuple[int, ...]]:
    """Parts tuples of the g-compositions of ``n`` in lexicographic order, unvalidated."""
    for first in range(1, n + 1):
        yield from _extend([first], n - first, 0, g)


def enumerate_g_compositions(n: int, g: int) -> list[GComposition]:
    """All g-compositions of ``n``, lexicographic in their parts."""
    _check_positive("n", n)
    _check_order(g)
    return [GComposition(p, g) for p in iter_g_composition_parts(n, g)]


def count_g_compositions(n: int, g: int) -> int:
    """``g**(n-1)``."""
    _check_positive("n", n)
    _check_order(g)
    return g ** (n - 1)


def _weak_compositions_desc(total: int, slots: int) -> Iterator[tuple[int, ...]]:
    # Reverse-lexicographic: largest first entry first.
    if slots == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _weak_compositions_desc(total - first, slots - 1):
            yield (first,) + rest


def enumerate_mixed_compositions(N: int, g: int) -> list[MixedComposition]:
    """All (1,g)-compositions of ``N``, the trivial one first.

    Order: ascending ``j``, then ascending ``sum(parts)``, then parts
    lexicographically, then tilde parts in reverse-lexicographic order.  This
    reproduces the listings ``(4), (2,0;1), (1,1;1), (0,2;1), (0,0;2), (0,0,0;1,1)``.
    """
    _check_positive("N", N)
    _check_order(g)
    out = [MixedComposition((N,), (), g)]
    keyed = []
    for m in range(1, N // g + 1):
        free = N - g * m
        for parts in iter_g_composition_parts(m, g):
            j = len(parts)
            for tilde in _weak_compositions_desc(free, j + g - 1):
                keyed.append(((j, m, parts), tilde))
    # Stable sort on the prefix key keeps the tilde parts in generation order.
    keyed.sort(key=lambda item: item[0])
    out.extend(MixedComposition(tilde, key[2], g) for key, tilde in keyed)
    return out


@lru_cache(maxsize=None)
def _gnomial_row(k: int, g: int) -> tuple[int, ...]:
    if k == 0:
        return (1,)
    prev = _gnomial_row(k - 1, g)
    row = [0] * (len(prev) + g - 1)
    for i, c in enumerate(prev):
        for d in range(g):
            row[i + d] += c
    return tuple(row)


def gnomial(k: int, m: int, g: int) -> int:
    """Coefficient of ``x**m`` in ``(1 + x + ... + x**(g-1))**k``."""
    if not isinstance(k, int) or k < 0:
        raise DomainError(f"k must be a nonnegative integer, got {k!r}")
    _check_order(g)
    row = _gnomial_row(k, g)
    return row[m] if 0 <= m < len(row) else 0


def gnomial_alternating(k: int, m: int, g: int) -> int:
    """Same number from ``sum_j (-1)**j C(k,j) C(k+m-gj-1, k-1)``.

    For ``k == 0`` the sum degenerates; the value is ``[m == 0]``.
    """
    if k < 0:
        raise DomainError(f"k must be a nonnegative integer, got {k!r}")
    if m < 0:
        return 0
    if k == 0:
        return 1 if m == 0 else 0
    return sum((-1) ** j * binom(k, j) * binom(k + m - g * j - 1, k - 1)
               for j in range(m // g + 1))


def count_mixed_compositions(N: int, g: int) -> int:
    """Closed-form number of (1,g)-compositions of ``N`` (trivial one included)."""
    _check_positive("N", N)
    _check_order(g)
    total = 1
    for k in range(N // g):
        for m in range((g - 1) * k + 1):
            total += gnomial(k, m, g) * binom(N + m - g * k - 1, m + g - 1)
    return total


def mixed_count_series(g: int, order: int) -> TruncatedSeries:
    """Series of the generating function of the (1,g)-composition counts up to ``x**order``."""
    _check_order(g)
    if order < 0:
        raise DomainError("order must be >= 0")

    def poly(coeffs: dict[int, int]) -> TruncatedSeries:
        c = [0] * (order + 1)
        for e, v in coeffs.items():
            if e <= order:
                c[e] += v
        return TruncatedSeries(c, order)

    one_minus_x = poly({0: 1, 1: -1})
    bracket = poly({0: 1, g - 1: 1}) + poly({g: -1})
    x_gm1 = poly({g - 1: 1})

    def power(s: TruncatedSeries, k: int) -> TruncatedSeries:
        out = poly({0: 1})
        for _ in range(k):
            out = out * s
        return out

    numerator = power(one_minus_x, g - 2) * bracket - x_gm1
    denominator = power(one_minus_x, g - 1) * bracket - x_gm1
    return numerator / denominator


def invert_mixed_composition(c: MixedComposition) -> MixedComposition:
    """Reverse both the tilde parts and the parts; an involution."""
    return MixedComposition(tuple(reversed(c.tilde)), tuple(reversed(c.parts)), c.g)
