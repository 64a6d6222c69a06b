"""g- and (1,g)-exclusion matrices over an exact commutative ring.

A matrix has ``f_k`` on the superdiagonal, ``g_k`` on the ``(g-1)``-th
subdiagonal and, in mixed mode, ``stilde_k`` on the diagonal; the wrap-around
corners are always zero.  Ring elements can be ints, Fractions, :class:`Laurent`
polynomials or sympy expressions.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from typing import Sequence

from .coefficients import c_1g, c_g
from .compositions import enumerate_g_compositions, enumerate_mixed_compositions
from .errors import DomainError
from .symbolic import Laurent, TruncatedSeries, as_fraction, format_rational, series_log


def _prod(items):
    return reduce(lambda a, b: a * b, items, 1)


def _sum(items):
    return reduce(lambda a, b: a + b, items, 0)


@dataclass(frozen=True)
class SpectralData:
    """``f_1..f_{q-1}``, ``g_1..g_{q-g+1}`` and, in mixed mode, ``stilde_1..stilde_q``."""

    q: int
    g: int
    f: tuple
    gdiag: tuple
    sdiag: tuple | None = None

    def __post_init__(self):
        for name in ("f", "gdiag", "sdiag"):
            value = getattr(self, name)
            if value is not None:
                object.__setattr__(self, name, tuple(value))
        if self.g < 2:
            raise DomainError("exclusion order g must be >= 2")
        if self.q < self.g:
            raise DomainError(f"matrix size q={self.q} must be at least g={self.g}")
        if len(self.f) != self.q - 1:
            raise DomainError(f"expected {self.q - 1} f entries, got {len(self.f)}")
        if len(self.gdiag) != self.q - self.g + 1:
            raise DomainError(f"expected {self.q - self.g + 1} g entries, got {len(self.gdiag)}")
        if self.sdiag is not None and len(self.sdiag) != self.q:
            raise DomainError(f"expected {self.q} stilde entries, got {len(self.sdiag)}")

    @property
    def mixed(self) -> bool:
        return self.sdiag is not None

    def s(self, k: int):
        return spectral_s(self, k)

    def stilde(self, k: int):
        if not self.mixed:
            return 0
        if not 1 <= k <= self.q:
            raise DomainError(f"stilde index {k} outside 1..{self.q}")
        return self.sdiag[k - 1]

    def without_diagonal(self) -> "SpectralData":
        return SpectralData(self.q, self.g, self.f, self.gdiag, None)

    def with_zero_diagonal(self) -> "SpectralData":
        return SpectralData(self.q, self.g, self.f, self.gdiag, (0,) * self.q)


def spectral_data(f: Sequence, gdiag: Sequence, sdiag: Sequence | None = None) -> SpectralData:
    """Build spectral data, reading ``q`` and ``g`` off the sequence lengths."""
    q = len(f) + 1
    g = q - len(gdiag) + 1
    return SpectralData(q, g, tuple(f), tuple(gdiag), None if sdiag is None else tuple(sdiag))


def spectral_data_from_json(data: dict) -> SpectralData:
    """``{"f": [...], "g": [...], "stilde": [...]}`` with ints or ``"a/b"`` strings."""
    try:
        f = [as_fraction(x) for x in data["f"]]
        gd = [as_fraction(x) for x in data["g"]]
    except KeyError as exc:
        raise DomainError(f"spectral data needs key {exc}") from exc
    sd = data.get("stilde")
    return spectral_data(f, gd, None if sd is None else [as_fraction(x) for x in sd])


def hofstadter_data(p: int, q: int) -> SpectralData:
    """g = 2 data of the square-lattice model at flux ``p/q`` with zero quasimomenta.

    ``f_k = 1 - Q**(pk)`` and ``g_k = 1 - Q**(-pk)`` in the ring ``Q**q == 1``.
    """
    if q < 2 or math.gcd(p, q) != 1:
        raise DomainError("need q >= 2 and gcd(p, q) == 1")
    f = tuple(1 - Laurent.monomial(p * k, 1, q) for k in range(1, q))
    gd = tuple(1 - Laurent.monomial(-p * k, 1, q) for k in range(1, q))
    return SpectralData(q, 2, f, gd)


def random_spectral_data(q: int, g: int, mixed: bool = False, seed: int | random.Random = 0,
                         max_num: int = 5, max_den: int = 4) -> SpectralData:
    """Small random rationals; reproducible from ``seed``."""
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)

    def draw():
        return Fraction(rng.randint(-max_num, max_num), rng.randint(1, max_den))

    f = tuple(draw() for _ in range(q - 1))
    gd = tuple(draw() for _ in range(q - g + 1))
    sd = tuple(draw() for _ in range(q)) if mixed else None
    return SpectralData(q, g, f, gd, sd)


def spectral_s(sd: SpectralData, k: int):
    """``g_k f_k f_{k+1} ... f_{k+g-2}`` for ``1 <= k <= q-g+1``."""
    if not 1 <= k <= sd.q - sd.g + 1:
        raise DomainError(f"s index {k} outside 1..{sd.q - sd.g + 1}")
    return _prod([sd.gdiag[k - 1]] + [sd.f[k - 1 + t] for t in range(sd.g - 1)])


@dataclass(frozen=True)
class ExclusionMatrix:
    q: int
    g: int
    rows: tuple[tuple, ...]
    mixed: bool = False

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i - 1][j - 1]

    def nonzeros(self):
        for i, row in enumerate(self.rows, 1):
            for j, x in enumerate(row, 1):
                if x != 0:
                    yield i, j, x


def exclusion_matrix(sd: SpectralData) -> ExclusionMatrix:
    q, g = sd.q, sd.g
    rows = [[0] * q for _ in range(q)]
    for k in range(1, q):
        rows[k - 1][k] = sd.f[k - 1]
    for k in range(1, q - g + 2):
        rows[k + g - 2][k - 1] = sd.gdiag[k - 1]
    if sd.mixed:
        for k in range(1, q + 1):
            rows[k - 1][k - 1] = sd.sdiag[k - 1]
    return ExclusionMatrix(q, g, tuple(tuple(r) for r in rows), sd.mixed)


def _poly_add(a: list, b: list) -> list:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        if x != 0:
            out[i] = out[i] + x
    return out


def _poly_shift_scale(a: list, shift: int, c) -> list:
    return [0] * shift + [x * c if x != 0 else 0 for x in a]


def secular_determinant(m: ExclusionMatrix) -> list:
    """Coefficients of ``det(I - zM)`` in ``z`` (index = power, length ``q + 1``).

    ``I - zM`` is lower Hessenberg for every exclusion matrix, so the leading
    principal minors obey
    ``D_k = (1 - z M_kk) D_{k-1} - sum_{m<k} z^(k-m+1) M_km (M_{m,m+1} ... M_{k-1,k}) D_{m-1}``.
    """
    q = m.q
    below: dict[int, list] = {k: [] for k in range(1, q + 1)}
    for i, j, x in m.nonzeros():
        if j > i + 1:
            raise DomainError("matrix has entries above the first superdiagonal")
        if j < i:
            below[i].append((j, x))
    minors = [[1]]
    for k in range(1, q + 1):
        diag = m[k, k]
        dk = _poly_add(minors[k - 1], _poly_shift_scale(minors[k - 1], 1, -diag)) \
            if diag != 0 else list(minors[k - 1])
        for j, x in below[k]:
            chain = _prod(m[r, r + 1] for r in range(j, k))
            if chain == 0:
                continue
            dk = _poly_add(dk, _poly_shift_scale(minors[j - 1], k - j + 1, -(x * chain)))
        minors.append(dk)
    out = minors[q]
    return out + [0] * (q + 1 - len(out))


def _pure_nested_sum(sd: SpectralData, n: int):
    g, q = sd.g, sd.q
    top = q - g * n + 1
    if n == 0:
        return 1
    if top < 1:
        return 0
    s = [None] + [spectral_s(sd, k) for k in range(1, q - g + 2)]
    # level(t, b) = sum_{k_t=1}^{b} s_{k_t + g(n-t)} * level(t+1, k_t); level(n+1, .) = 1
    nxt = [1] * (top + 1)
    for t in range(n, 0, -1):
        cur = [0] * (top + 1)
        for b in range(1, top + 1):
            cur[b] = cur[b - 1] + s[b + g * (n - t)] * nxt[b]
        nxt = cur
    return nxt[top]


def _mixed_fill(sd: SpectralData) -> list:
    # Fill levels 1..q with holes, fermions (stilde_k, one particle) or g-particle
    # bound states on levels k..k+g-1 with weight (-1)^(g-1) s_k.
    q, g = sd.q, sd.g
    sign = -1 if g % 2 == 0 else 1
    weights = [[1]]
    for k in range(1, q + 1):
        w = _poly_add(weights[k - 1], _poly_shift_scale(weights[k - 1], 1, sd.stilde(k)))
        if k >= g:
            w = _poly_add(w, _poly_shift_scale(weights[k - g], g, sign * spectral_s(sd, k - g + 1)))
        weights.append(w)
    z = weights[q]
    return z + [0] * (q + 1 - len(z))


def partition_functions(sd: SpectralData) -> list:
    """``Z(0), Z(1), ...``: up to ``Z(q // g)`` in pure mode, ``Z(q)`` in mixed mode."""
    if sd.mixed:
        return _mixed_fill(sd)
    return [_pure_nested_sum(sd, n) for n in range(sd.q // sd.g + 1)]


def determinant_partition_functions(m: ExclusionMatrix) -> list:
    """Read ``Z(n)`` back from the secular determinant, checking the vanishing powers."""
    det = secular_determinant(m)
    if m.mixed:
        return [c if n % 2 == 0 else -c for n, c in enumerate(det)]
    g = m.g
    for power, c in enumerate(det):
        if power % g and c != 0:
            raise DomainError(f"pure-mode determinant has a z^{power} term")
    return [det[g * n] if n % 2 == 0 else -det[g * n] for n in range(m.q // g + 1)]


def cluster_coefficients(Z: Sequence, order: int) -> list:
    """``b(1..order)`` with ``log sum Z(n) z^n = sum b(n) z^n``."""
    if not Z or Z[0] != 1:
        raise DomainError("Z(0) must be 1")
    series = TruncatedSeries(list(Z), order)
    return list(series_log(series).coeffs[1:])


def _window_sum(s_vals: list, st_vals: list, kmax: int, tilde: Sequence[int], parts: Sequence[int]):
    # sum_{k=1}^{kmax} prod_i s_{k+i-1}^{l_i} * prod_i stilde_{k+i-1}^{tilde_i}
    total = 0
    for k in range(kmax):
        term = 1
        for i, l in enumerate(parts):
            if l:
                term = term * s_vals[k + i] ** l
                if term == 0:
                    break
        else:
            for i, t in enumerate(tilde):
                if t:
                    term = term * st_vals[k + i] ** t
                    if term == 0:
                        break
        if term != 0:
            total = total + term
    return total


@lru_cache(maxsize=256)
def composition_sum(sd: SpectralData, n: int):
    """``sum_comps c * sum_k prod(s^l)``: the coefficient shared by ``b(n)`` and the trace."""
    if n < 1:
        raise DomainError("n must be >= 1")
    q, g = sd.q, sd.g
    s_vals = [spectral_s(sd, k) for k in range(1, q - g + 2)]
    total = 0
    if not sd.mixed:
        for comp in enumerate_g_compositions(n, g):
            kmax = q - comp.j - g + 2
            if kmax < 1:
                continue
            inner = _window_sum(s_vals, [], kmax, (), comp.parts)
            if inner != 0:
                total = total + inner * c_g(comp)
        return total
    st_vals = list(sd.sdiag)
    for mc in enumerate_mixed_compositions(n, g):
        kmax = q - len(mc.tilde) + 1
        if kmax < 1:
            continue
        inner = _window_sum(s_vals, st_vals, kmax, mc.tilde, mc.parts)
        if inner != 0:
            total = total + inner * c_1g(mc)
    return total


def cluster_coefficient_formula(sd: SpectralData, n: int):
    """``b(n)`` from the composition expansion (pure: g-compositions of n; mixed: (1,g)-compositions)."""
    value = composition_sum(sd, n)
    return value if n % 2 == 1 else -value


def trace_power(m: ExclusionMatrix, n: int):
    """Matrix trace of ``M**n``."""
    if n < 1:
        raise DomainError("n must be >= 1")
    adjacency: dict[int, list] = {i: [] for i in range(1, m.q + 1)}
    for i, j, x in m.nonzeros():
        adjacency[i].append((j, x))
    total = 0
    for start in range(1, m.q + 1):
        vec = {start: 1}
        for _ in range(n):
            nxt: dict = {}
            for i, v in vec.items():
                for j, x in adjacency[i]:
                    nxt[j] = nxt.get(j, 0) + v * x
            vec = {k: v for k, v in nxt.items() if v != 0}
            if not vec:
                break
        if start in vec:
            total = total + vec[start]
    return total


def trace_via_formula(sd: SpectralData, n: int):
    """``tr M**n`` from the composition expansion; zero in pure mode unless ``g | n``."""
    if n < 1:
        raise DomainError("n must be >= 1")
    if sd.mixed:
        return composition_sum(sd, n) * n
    if n % sd.g:
        return 0
    return composition_sum(sd, n // sd.g) * n


def ring_to_json(x):
    """JSON form of a ring element: ints stay ints, rationals become ``"a/b"``."""
    if isinstance(x, bool):
        return x
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else format_rational(x)
    if isinstance(x, Laurent):
        return x.to_json()
    return str(x)
