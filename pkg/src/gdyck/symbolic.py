"""Exact arithmetic kernel.

Rationals are :class:`fractions.Fraction`.  On top of that this module provides
Laurent polynomials in one variable ``Q`` (optionally reduced modulo
``Q**q - 1``) and truncated power series in ``z`` whose coefficients live in any
commutative ring that supports ``+``, ``-``, ``*`` and multiplication by a
``Fraction`` (ints, Fractions, :class:`Laurent`, sympy expressions).
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import DomainError

Scalar = (int, Fraction)


def binom(n: int, k: int) -> int:
    """Binomial coefficient, zero outside ``0 <= k <= n`` (negative upper index included)."""
    if n < 0 or k < 0 or k > n:
        return 0
    return math.comb(n, k)


def multinomial(total: int, *parts: int) -> int:
    """``total! / (parts[0]! ... parts[-1]! (total - sum(parts))!)``, zero when undefined."""
    rest = total - sum(parts)
    if total < 0 or rest < 0 or any(p < 0 for p in parts):
        return 0
    out = 1
    remaining = total
    for p in parts:
        out *= math.comb(remaining, p)
        remaining -= p
    return out


def as_fraction(value) -> Fraction:
    """Parse ``3``, ``"3"``, ``"-2/5"`` or a Fraction into a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise DomainError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except ValueError as exc:
            raise DomainError(f"not a rational: {value!r}") from exc
    raise DomainError(f"not an exact rational: {value!r}")


def format_rational(x) -> str:
    """``"num/den"`` for non-integers, plain decimal otherwise."""
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


class Laurent:
    """Immutable Laurent polynomial ``sum c_e Q**e`` with exact coefficients.

    With ``modulus=q`` the exponents are reduced into ``[0, q)`` so that
    ``Q**q == 1``.  Zero is the empty term map.
    """

    __slots__ = ("_terms", "_modulus", "_hash")

    def __init__(self, terms: Mapping[int, object] | Iterable[tuple[int, object]] = (),
                 modulus: int | None = None):
        if modulus is not None and modulus < 1:
            raise DomainError(f"modulus must be >= 1, got {modulus}")
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, object] = {}
        for e, c in items:
            e = int(e)
            if modulus is not None:
                e %= modulus
            acc[e] = acc.get(e, 0) + c
        self._terms = {e: c for e, c in acc.items() if c != 0}
        self._modulus = modulus
        self._hash = None

    @classmethod
    def monomial(cls, exponent: int, coefficient=1, modulus: int | None = None) -> "Laurent":
        return cls({exponent: coefficient}, modulus)

    @classmethod
    def constant(cls, value, modulus: int | None = None) -> "Laurent":
        return cls({0: value}, modulus)

    @property
    def modulus(self) -> int | None:
        return self._modulus

    @property
    def terms(self) -> dict[int, object]:
        return dict(self._terms)

    def coefficient(self, exponent: int):
        if self._modulus is not None:
            exponent %= self._modulus
        return self._terms.get(exponent, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def exponents(self) -> list[int]:
        return sorted(self._terms)

    def reduce(self, modulus: int) -> "Laurent":
        """Image in the cyclic ring ``Q**modulus == 1``."""
        if self._modulus is not None and self._modulus != modulus:
            raise DomainError("cannot re-reduce a polynomial already taken modulo another q")
        return Laurent(self._terms, modulus)

    def _coerce(self, other) -> "Laurent | None":
        if isinstance(other, Laurent):
            if other._modulus != self._modulus:
                raise DomainError(
                    f"modulus mismatch: {self._modulus} vs {other._modulus}")
            return other
        if isinstance(other, Scalar):
            return Laurent({0: other}, self._modulus)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        acc = dict(self._terms)
        for e, c in o._terms.items():
            acc[e] = acc.get(e, 0) + c
        return Laurent(acc, self._modulus)

    __radd__ = __add__

    def __neg__(self):
        return Laurent({e: -c for e, c in self._terms.items()}, self._modulus)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, Scalar):
            if other == 0:
                return Laurent((), self._modulus)
            return Laurent({e: c * other for e, c in self._terms.items()}, self._modulus)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        acc: dict[int, object] = {}
        q = self._modulus
        for e1, c1 in self._terms.items():
            for e2, c2 in o._terms.items():
                e = e1 + e2
                if q is not None:
                    e %= q
                acc[e] = acc.get(e, 0) + c1 * c2
        return Laurent(acc, q)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, Scalar):
            return NotImplemented
        if other == 0:
            raise ZeroDivisionError("Laurent polynomial divided by zero")
        inv = Fraction(1, 1) / other
        return Laurent({e: c * inv for e, c in self._terms.items()}, self._modulus)

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            if len(self._terms) != 1:
                raise DomainError("only monomials can be raised to negative powers")
            (e, c), = self._terms.items()
            return Laurent({e * k: Fraction(1) / Fraction(c) ** (-k)}, self._modulus)
        result = Laurent({0: 1}, self._modulus)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Laurent):
            return self._modulus == other._modulus and self._terms == other._terms
        if isinstance(other, Scalar):
            if other == 0:
                return not self._terms
            return self._terms == {0: other}
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._modulus, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self):
        if not self._terms:
            return "0"
        pieces = []
        for e in sorted(self._terms, key=lambda e: (abs(e), -e)):
            c = self._terms[e]
            mono = "" if e == 0 else ("Q" if e == 1 else f"Q^{e}")
            if mono and c == 1:
                pieces.append(mono)
            elif mono and c == -1:
                pieces.append("-" + mono)
            else:
                pieces.append(f"{format_rational(c)}*{mono}" if mono else format_rational(c))
        text = " + ".join(pieces).replace("+ -", "- ")
        return f"{text} (mod Q^{self._modulus}-1)" if self._modulus else text

    def to_json(self) -> dict[str, str]:
        return {str(e): format_rational(self._terms[e]) for e in sorted(self._terms)}


def laurent_mul(a: Laurent, b: Laurent) -> Laurent:
    """Product of two Laurent polynomials with the same modulus configuration."""
    if a.modulus != b.modulus:
        raise DomainError(f"modulus mismatch: {a.modulus} vs {b.modulus}")
    return a * b


def _div_int(x, n: int):
    return x * Fraction(1, n)


class TruncatedSeries:
    """Power series ``c_0 + c_1 z + ... + c_N z**N`` with degrees above ``N`` discarded."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence, order: int | None = None):
        coeffs = list(coeffs)
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise DomainError("truncation order must be >= 0")
        coeffs = coeffs[: order + 1]
        coeffs += [0] * (order + 1 - len(coeffs))
        self.coeffs = tuple(coeffs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int):
        return self.coeffs[k]

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def _check(self, other: "TruncatedSeries"):
        if other.order != self.order:
            raise DomainError(f"truncation orders differ: {self.order} vs {other.order}")

    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check(other)
        return TruncatedSeries([a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return TruncatedSeries([-a for a in self.coeffs])

    def __sub__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            return TruncatedSeries([a * other for a in self.coeffs])
        self._check(other)
        n = self.order
        out = [0] * (n + 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for k in range(n + 1 - i):
                b = other.coeffs[k]
                if b != 0:
                    out[i + k] = out[i + k] + a * b
        return TruncatedSeries(out)

    def inverse(self) -> "TruncatedSeries":
        """Multiplicative inverse; the constant term must be a unit (1, -1 or a nonzero rational)."""
        c0 = self.coeffs[0]
        if c0 == 1:
            inv0 = 1
        elif isinstance(c0, Scalar) and c0 != 0:
            inv0 = Fraction(1) / Fraction(c0)
        else:
            raise DomainError("constant term is not invertible")
        n = self.order
        out = [inv0] + [0] * n
        for k in range(1, n + 1):
            acc = 0
            for i in range(1, k + 1):
                if self.coeffs[i] != 0:
                    acc = acc + self.coeffs[i] * out[k - i]
            out[k] = -acc * inv0
        return TruncatedSeries(out)

    def __truediv__(self, other: "TruncatedSeries"):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self * other.inverse()

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"TruncatedSeries({list(self.coeffs)!r})"


def series_log(s: TruncatedSeries) -> TruncatedSeries:
    """Formal logarithm of a series with constant term 1.

    Uses ``n L_n = n s_n - sum_{k=1}^{n-1} k L_k s_{n-k}``.
    """
    if s.coeffs[0] != 1:
        raise DomainError("series_log needs constant term 1")
    n_max = s.order
    out = [0] * (n_max + 1)
    for n in range(1, n_max + 1):
        acc = n * s.coeffs[n] if s.coeffs[n] != 0 else 0
        for k in range(1, n):
            if out[k] != 0 and s.coeffs[n - k] != 0:
                acc = acc - k * out[k] * s.coeffs[n - k]
        out[n] = _div_int(acc, n) if acc != 0 else 0
    return TruncatedSeries(out)


def series_exp(b: TruncatedSeries) -> TruncatedSeries:
    """Formal exponential of a series with zero constant term (inverse of :func:`series_log`)."""
    if b.coeffs[0] != 0:
        raise DomainError("series_exp needs constant term 0")
    n_max = b.order
    out = [1] + [0] * n_max
    for n in range(1, n_max + 1):
        acc = 0
        for k in range(1, n + 1):
            if b.coeffs[k] != 0 and out[n - k] != 0:
                acc = acc + k * b.coeffs[k] * out[n - k]
        out[n] = _div_int(acc, n) if acc != 0 else 0
    return TruncatedSeries(out)


def poly_series(coeffs: Sequence[int], order: int) -> TruncatedSeries:
    """Polynomial given by its coefficient list, as a series of the given order."""
    return TruncatedSeries(list(coeffs), order)
