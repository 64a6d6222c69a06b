"""Integer hot loops behind the brute-force oracles.

Each kernel exists twice: a numba ``@njit`` version and a pure-numpy version.
The numba path is used unless ``GDYCK_NO_NUMBA`` is set to a non-empty value
other than ``0`` (or numba is missing).  Both return identical arrays; the test
suite and ``benchmarks/bench_kernels.py`` exercise both.

Step codes are ``UP=0 < LEVEL=1 < DOWN=2`` so that lexicographic order of code
rows is the canonical enumeration order.
"""
from __future__ import annotations

import math
import os

import numpy as np

UP, LEVEL, DOWN = 0, 1, 2
STEP_CHARS = "ULD"


def _numba_disabled() -> bool:
    flag = os.environ.get("GDYCK_NO_NUMBA", "")
    return flag not in ("", "0")


try:
    if _numba_disabled():
        raise ImportError("numba disabled by GDYCK_NO_NUMBA")
    from numba import njit
    HAVE_NUMBA = True
except ImportError:
    HAVE_NUMBA = False

BACKEND = "numba" if HAVE_NUMBA else "numpy"


def bridge_count(length: int, g: int, motzkin: bool) -> int:
    if motzkin:
        return sum(math.comb(length, g * k) * math.comb(g * k, k) for k in range(length // g + 1))
    if length % g:
        return 0
    return math.comb(length, length // g)


# ---------------------------------------------------------------- numpy path

def _bridge_rows_numpy(length: int, g: int, motzkin: bool) -> np.ndarray:
    codes = (UP, LEVEL, DOWN) if motzkin else (UP, DOWN)
    delta = np.array([g - 1, 0, -1], dtype=np.int64)
    rows = np.zeros((1, 0), dtype=np.int8)
    height = np.zeros(1, dtype=np.int64)
    for step in range(length):
        r = length - step - 1
        k = len(codes)
        # child order (U, L, D) per parent keeps rows lexicographically sorted
        child_codes = np.tile(np.array(codes, dtype=np.int8), rows.shape[0])
        parent = np.repeat(np.arange(rows.shape[0]), k)
        h = height[parent] + delta[child_codes]
        if motzkin:
            # -(h // (g-1)) is ceil(-h/(g-1)) for negative h
            umin = np.where(h < 0, -(h // (g - 1)), 0)
            ok = g * umin + h <= r
        else:
            d = r - h
            ok = (d >= 0) & (d % g == 0) & (d // g <= r)
        rows = np.concatenate([rows[parent[ok]], child_codes[ok, None]], axis=1)
        height = h[ok]
    return rows


def _path_statistics_numpy(rows: np.ndarray, g: int):
    count, length = rows.shape
    width = length + 1
    delta = np.array([g - 1, 0, -1], dtype=np.int64)[rows.astype(np.int64)]
    before = np.zeros((count, length), dtype=np.int64)
    if length > 1:
        before[:, 1:] = np.cumsum(delta, axis=1)[:, :-1]
    low = before.min(axis=1) if length else np.zeros(count, dtype=np.int64)
    floor = before - low[:, None] + 1
    start = floor[:, 0] if length else np.ones(count, dtype=np.int64)
    flat = floor + (np.arange(count, dtype=np.int64) * width)[:, None]
    up = np.bincount(flat[rows == UP], minlength=count * width).reshape(count, width)
    level = np.bincount(flat[rows == LEVEL], minlength=count * width).reshape(count, width)
    return start.astype(np.int64), up.astype(np.int64), level.astype(np.int64)


def _half_walks_numpy(m: int):
    # All 4**m walks from the origin: endpoint and partial signed area sum(x * dy).
    if m == 0:
        return np.zeros(1, np.int64), np.zeros(1, np.int64), np.zeros(1, np.int64)
    digits = np.indices((4,) * m).reshape(m, -1).T  # 0=R 1=L 2=U 3=D
    dx = np.array([1, -1, 0, 0], dtype=np.int64)[digits]
    dy = np.array([0, 0, 1, -1], dtype=np.int64)[digits]
    x_before = np.zeros_like(dx)
    x_before[:, 1:] = np.cumsum(dx, axis=1)[:, :-1]
    area = (x_before * dy).sum(axis=1)
    return dx.sum(axis=1), dy.sum(axis=1), area


def _walk_area_counts_numpy(n: int, amax: int) -> np.ndarray:
    hist = np.zeros(2 * amax + 1, dtype=np.int64)
    if n == 0:
        hist[amax] = 1
        return hist
    m = n // 2
    x1, y1, a1 = _half_walks_numpy(m)
    x2, y2, a2 = _half_walks_numpy(n - m)
    span = n + 1
    key1 = (x1 + span) * (4 * span) + (y1 + span)
    key2 = (-x2 + span) * (4 * span) + (-y2 + span)
    order2 = np.argsort(key2, kind="stable")
    key2s = key2[order2]
    for key in np.unique(key1):
        sel1 = key1 == key
        lo, hi = np.searchsorted(key2s, [key, key + 1])
        if lo == hi:
            continue
        xs, ys = x1[sel1][0], y1[sel1][0]
        a_first = a1[sel1] - xs * ys
        a_second = a2[order2[lo:hi]]
        total = np.add.outer(a_first, a_second).ravel() + amax
        hist += np.bincount(total, minlength=2 * amax + 1)
    return hist


# ---------------------------------------------------------------- numba path

if HAVE_NUMBA:

    @njit(cache=True)
    def _feasible_nb(h, r, g, motzkin):
        if motzkin:
            umin = 0
            if h < 0:
                umin = (-h + g - 2) // (g - 1)
            return g * umin + h <= r
        d = r - h
        return d >= 0 and d % g == 0 and d // g <= r

    @njit(cache=True)
    def _bridge_rows_nb(length, g, motzkin, count):
        out = np.empty((count, length), dtype=np.int8)
        if length == 0:
            return out
        ncodes = 3 if motzkin else 2
        codes = np.empty(3, dtype=np.int8)
        if motzkin:
            codes[0] = 0
            codes[1] = 1
            codes[2] = 2
        else:
            codes[0] = 0
            codes[1] = 2
        delta = np.array([g - 1, 0, -1])
        choice = np.full(length, -1, dtype=np.int64)
        height = np.zeros(length + 1, dtype=np.int64)
        row = 0
        pos = 0
        while pos >= 0:
            choice[pos] += 1
            if choice[pos] >= ncodes:
                choice[pos] = -1
                pos -= 1
                continue
            c = codes[choice[pos]]
            h = height[pos] + delta[c]
            r = length - pos - 1
            if not _feasible_nb(h, r, g, motzkin):
                continue
            height[pos + 1] = h
            if pos == length - 1:
                for t in range(length):
                    out[row, t] = codes[choice[t]]
                row += 1
            else:
                pos += 1
        return out[:row]

    @njit(cache=True)
    def _path_statistics_nb(rows, g):
        count, length = rows.shape
        width = length + 1
        start = np.empty(count, dtype=np.int64)
        up = np.zeros((count, width), dtype=np.int64)
        level = np.zeros((count, width), dtype=np.int64)
        before = np.empty(length, dtype=np.int64)
        for p in range(count):
            h = 0
            low = 0
            for t in range(length):
                before[t] = h
                if h < low:
                    low = h
                c = rows[p, t]
                if c == 0:
                    h += g - 1
                elif c == 2:
                    h -= 1
            start[p] = 1 - low
            for t in range(length):
                f = before[t] - low + 1
                c = rows[p, t]
                if c == 0:
                    up[p, f] += 1
                elif c == 1:
                    level[p, f] += 1
        return start, up, level

    @njit(cache=True)
    def _walk_area_counts_nb(n, amax):
        hist = np.zeros(2 * amax + 1, dtype=np.int64)
        if n == 0:
            hist[amax] = 1
            return hist
        dxs = np.array([1, -1, 0, 0])
        dys = np.array([0, 0, 1, -1])
        choice = np.full(n, -1, dtype=np.int64)
        xs = np.zeros(n + 1, dtype=np.int64)
        ys = np.zeros(n + 1, dtype=np.int64)
        area = np.zeros(n + 1, dtype=np.int64)
        pos = 0
        while pos >= 0:
            choice[pos] += 1
            if choice[pos] >= 4:
                choice[pos] = -1
                pos -= 1
                continue
            k = choice[pos]
            x = xs[pos] + dxs[k]
            y = ys[pos] + dys[k]
            r = n - pos - 1
            if abs(x) + abs(y) > r:
                continue
            xs[pos + 1] = x
            ys[pos + 1] = y
            area[pos + 1] = area[pos] + xs[pos] * dys[k]
            if pos == n - 1:
                hist[area[pos + 1] + amax] += 1
            else:
                pos += 1
        return hist


# ---------------------------------------------------------------- dispatch

def bridge_rows(length: int, g: int, motzkin: bool, backend: str | None = None) -> np.ndarray:
    """Code rows of every length-``length`` bridge, lexicographically ordered."""
    backend = backend or BACKEND
    if backend == "numba":
        if not HAVE_NUMBA:
            raise RuntimeError("numba backend requested but unavailable")
        return _bridge_rows_nb(length, g, motzkin, bridge_count(length, g, motzkin))
    return _bridge_rows_numpy(length, g, motzkin)


def path_statistics(rows: np.ndarray, g: int, backend: str | None = None):
    """Per row: start floor (canonical, lowest floor 1), up-steps per floor, level steps per floor.

    The count arrays have ``length + 1`` columns indexed by floor (column 0 unused).
    """
    backend = backend or BACKEND
    rows = np.ascontiguousarray(rows, dtype=np.int8)
    if backend == "numba":
        if not HAVE_NUMBA:
            raise RuntimeError("numba backend requested but unavailable")
        return _path_statistics_nb(rows, g)
    return _path_statistics_numpy(rows, g)


def walk_area_counts(n: int, amax: int, backend: str | None = None) -> np.ndarray:
    """Histogram (offset by ``amax``) of the signed area of closed ``n``-step square walks."""
    backend = backend or BACKEND
    if backend == "numba":
        if not HAVE_NUMBA:
            raise RuntimeError("numba backend requested but unavailable")
        return _walk_area_counts_nb(n, amax)
    return _walk_area_counts_numpy(n, amax)


def available_backends() -> list[str]:
    return ["numba", "numpy"] if HAVE_NUMBA else ["numpy"]
