"""Algebraic areas of closed square-lattice walks, counted three ways.

* :func:`weyl_expand_power` expands ``(u + 1/u + v + 1/v)**n`` with ``v u = Q u v``
  and keeps the ``u**0 v**0`` part.
* :func:`walk_area_histogram` enumerates walks and tallies the shoelace area.
* :func:`area_polynomial_via_trace` evaluates the g = 2 trace formula with
  ``s_k = (1 - Q**k)(1 - Q**-k)`` in ``Z[Q]/(Q**q - 1)`` and unwraps the result.
"""
from __future__ import annotations

import math
import os
from dataclasses import dataclass
from enum import Enum
from typing import Iterable

from . import _kernels
from .errors import ConsistencyError, DomainError, ResourceLimitError
from .exclusion import hofstadter_data, trace_via_formula
from .symbolic import Laurent

DEFAULT_MAX_WALK_LENGTH = 12


class WeylPolynomial:
    """Finite sum of ``c(Q) u**a v**b`` in normal order (all ``u`` left of all ``v``)."""

    __slots__ = ("_terms",)

    def __init__(self, terms: dict[tuple[int, int], Laurent] | None = None):
        self._terms = {k: c for k, c in (terms or {}).items() if not c.is_zero()}

    @classmethod
    def monomial(cls, a: int, b: int, coefficient: Laurent | int = 1) -> "WeylPolynomial":
        if not isinstance(coefficient, Laurent):
            coefficient = Laurent.constant(coefficient)
        return cls({(a, b): coefficient})

    @classmethod
    def hopping(cls) -> "WeylPolynomial":
        """``u + u**-1 + v + v**-1``."""
        one = Laurent.constant(1)
        return cls({(1, 0): one, (-1, 0): one, (0, 1): one, (0, -1): one})

    @property
    def terms(self) -> dict[tuple[int, int], Laurent]:
        return dict(self._terms)

    def coefficient(self, a: int, b: int) -> Laurent:
        return self._terms.get((a, b), Laurent())

    def __add__(self, other: "WeylPolynomial") -> "WeylPolynomial":
        acc = dict(self._terms)
        for k, c in other._terms.items():
            acc[k] = acc[k] + c if k in acc else c
        return WeylPolynomial(acc)

    def multiply(self, other: "WeylPolynomial", keep=None) -> "WeylPolynomial":
        """Product; ``keep(a, b)`` may drop result terms early."""
        acc: dict[tuple[int, int], Laurent] = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                a, b = a1 + a2, b1 + b2
                if keep is not None and not keep(a, b):
                    continue
                # u^a1 v^b1 u^a2 v^b2 = Q^(b1 a2) u^(a1+a2) v^(b1+b2)
                term = c1 * c2 * Laurent.monomial(b1 * a2)
                acc[(a, b)] = acc[(a, b)] + term if (a, b) in acc else term
        return WeylPolynomial(acc)

    __mul__ = multiply

    def __eq__(self, other):
        if not isinstance(other, WeylPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __repr__(self):
        return f"WeylPolynomial({self._terms!r})"


def weyl_expand_power(n: int) -> Laurent:
    """Constant part of ``(u + 1/u + v + 1/v)**n``; the coefficient of ``Q**A`` counts walks of area A."""
    if n < 1:
        raise DomainError("n must be >= 1")
    if n % 2:
        return Laurent()
    h = WeylPolynomial.hopping()
    acc = WeylPolynomial.monomial(0, 0)
    for step in range(1, n + 1):
        left = n - step
        acc = acc.multiply(h, keep=lambda a, b: abs(a) + abs(b) <= left)
    return acc.coefficient(0, 0)


class Move(str, Enum):
    R = "R"
    L = "L"
    U = "U"
    D = "D"

    @property
    def delta(self) -> tuple[int, int]:
        return {"R": (1, 0), "L": (-1, 0), "U": (0, 1), "D": (0, -1)}[self.value]


@dataclass(frozen=True)
class SquareWalk:
    """A closed walk on the square lattice starting at the origin."""

    moves: tuple[Move, ...]

    def __post_init__(self):
        moves = tuple(Move(m) for m in self.moves)
        object.__setattr__(self, "moves", moves)
        x = sum(m.delta[0] for m in moves)
        y = sum(m.delta[1] for m in moves)
        if (x, y) != (0, 0):
            raise DomainError(f"walk is not closed: ends at ({x}, {y})")

    @classmethod
    def from_string(cls, text: str) -> "SquareWalk":
        letters = [ch for ch in text.upper() if not ch.isspace() and ch != ","]
        try:
            return cls(tuple(Move(ch) for ch in letters))
        except ValueError as exc:
            raise DomainError(f"bad move in {text!r}") from exc

    def __len__(self):
        return len(self.moves)

    def vertices(self) -> list[tuple[int, int]]:
        x = y = 0
        out = [(0, 0)]
        for m in self.moves:
            dx, dy = m.delta
            x, y = x + dx, y + dy
            out.append((x, y))
        return out

    def to_string(self) -> str:
        return "".join(m.value for m in self.moves)


def walk_area(walk: SquareWalk | Iterable[str]) -> int:
    """Signed shoelace area ``sum x * dy``; counterclockwise loops count positively."""
    if not isinstance(walk, SquareWalk):
        walk = SquareWalk(tuple(walk))
    area = 0
    x = 0
    for m in walk.moves:
        dx, dy = m.delta
        area += x * dy
        x += dx
    return area


def area_bound(n: int) -> int:
    """Largest ``|A|`` of a closed ``n``-step walk: ``floor(n/4) * ceil(n/4)``."""
    return (n // 4) * ((n + 3) // 4)


def walk_length_limit(limit: int | None = None) -> int:
    if limit is not None:
        return limit
    raw = os.environ.get("GDYCK_MAX_WALK_LENGTH")
    if raw:
        try:
            return int(raw)
        except ValueError as exc:
            raise DomainError(f"GDYCK_MAX_WALK_LENGTH must be an integer, got {raw!r}") from exc
    return DEFAULT_MAX_WALK_LENGTH


def walk_area_histogram(n: int, limit: int | None = None, backend: str | None = None) -> dict[int, int]:
    """``{A: number of closed n-step walks with area A}``, ascending in ``A``; empty for odd ``n``."""
    if n < 0:
        raise DomainError("n must be >= 0")
    if n % 2:
        return {}
    cap = walk_length_limit(limit)
    if n > cap:
        raise ResourceLimitError(f"walk length {n} exceeds the limit {cap}")
    amax = area_bound(n)
    hist = _kernels.walk_area_counts(n, amax, backend)
    out = {a - amax: int(c) for a, c in enumerate(hist) if c}
    if sum(out.values()) != math.comb(n, n // 2) ** 2:
        raise ConsistencyError(f"walk total for n={n} is not C(n, n/2)^2")
    return out


def histogram_to_laurent(hist: dict[int, int]) -> Laurent:
    return Laurent(hist)


def _is_prime(m: int) -> bool:
    if m < 2:
        return False
    return all(m % d for d in range(2, math.isqrt(m) + 1))


def trace_modulus(n: int) -> int:
    """Smallest prime ``q >= 2 floor(n^2/16) + n + 2``."""
    q = 2 * (n * n // 16) + n + 2
    while not _is_prime(q):
        q += 1
    return q


def area_polynomial_via_trace(n: int, q: int | None = None) -> Laurent:
    """Area polynomial of closed ``n``-step walks from the g = 2 trace over ``Z[Q]/(Q**q - 1)``.

    The open-chain trace equals ``q P(Q) - P(1) (1 + Q + ... + Q**(q-1))`` when ``q``
    is prime and larger than twice the area span, so the constant tail is removed
    before dividing by ``q``.
    """
    if n < 1:
        raise DomainError("n must be >= 1")
    if n % 2:
        return Laurent()
    q = trace_modulus(n) if q is None else q
    amax = area_bound(n)
    if not _is_prime(q) or q < 2 * amax + 2:
        raise DomainError(f"q={q} must be a prime >= {2 * amax + 2}")
    trace = trace_via_formula(hofstadter_data(1, q), n)
    if not isinstance(trace, Laurent):
        trace = Laurent.constant(trace, q)
    centered = {}
    for e in range(q):
        c = trace.coefficient(e)
        centered[e - q if e > q // 2 else e] = c
    tail = {centered[e] for e in centered if abs(e) > amax}
    if len(tail) != 1:
        raise ConsistencyError(f"trace tail is not constant: {sorted(tail)}")
    lam = tail.pop()
    out = {}
    for e, c in centered.items():
        if abs(e) > amax:
            continue
        c -= lam
        if c % q:
            raise ConsistencyError(f"coefficient {c} of Q^{e} not divisible by q={q}")
        out[e] = c // q
    result = Laurent(out)
    if lam != -sum(result.terms.values()):
        raise ConsistencyError("trace tail does not match the total walk count")
    return result
