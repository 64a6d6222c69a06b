"""Periodic generalized Dyck ``[g-1,-1]`` and Motzkin ``[g-1,0,-1]`` bridges.

This is the brute-force side: explicit enumeration, profile extraction, per-profile
tallies, plus the floor-sequence reconstruction and the cut-and-exchange map.
A bridge is stored as a linear step string over ``U``/``D``/``L`` together with
the floor it starts on; rotations are distinct paths.
"""
from __future__ import annotations

import os
from collections import defaultdict
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

import numpy as np

from . import _kernels
from .coefficients import FloorCount, FloorCountTable
from .compositions import GComposition, MixedComposition
from .errors import DomainError, ResourceLimitError

DEFAULT_MAX_DYCK_LENGTH = 16
DEFAULT_MAX_MOTZKIN_LENGTH = 14


class Step(str, Enum):
    UP = "U"
    DOWN = "D"
    LEVEL = "L"

    def rise(self, g: int) -> int:
        return {"U": g - 1, "D": -1, "L": 0}[self.value]


def _limit(explicit: int | None, env: str, default: int) -> int:
    if explicit is not None:
        return explicit
    raw = os.environ.get(env)
    if raw:
        try:
            return int(raw)
        except ValueError as exc:
            raise DomainError(f"{env} must be an integer, got {raw!r}") from exc
    return default


def dyck_length_limit(limit: int | None = None) -> int:
    return _limit(limit, "GDYCK_MAX_DYCK_LENGTH", DEFAULT_MAX_DYCK_LENGTH)


def motzkin_length_limit(limit: int | None = None) -> int:
    return _limit(limit, "GDYCK_MAX_MOTZKIN_LENGTH", DEFAULT_MAX_MOTZKIN_LENGTH)


@dataclass(frozen=True)
class LatticePath:
    """A bridge: ``steps`` read cyclically, starting on ``start_floor``."""

    g: int
    steps: str
    start_floor: int = 1
    motzkin: bool = False

    def __post_init__(self):
        if self.g < 2:
            raise DomainError("g must be >= 2")
        allowed = "UDL" if self.motzkin else "UD"
        if not self.steps or any(ch not in allowed for ch in self.steps):
            raise DomainError(f"steps must be a nonempty string over {allowed!r}: {self.steps!r}")
        if self.height_change() != 0:
            raise DomainError(f"not a bridge: {self.steps!r} changes height by {self.height_change()}")
        if self.lowest_floor() < 1:
            raise DomainError(f"path dips below floor 1: {self}")

    def __len__(self):
        return len(self.steps)

    def rise(self, ch: str) -> int:
        return self.g - 1 if ch == "U" else (-1 if ch == "D" else 0)

    def height_change(self) -> int:
        return sum(self.rise(ch) for ch in self.steps)

    def departure_floors(self) -> list[int]:
        """Floor from which each step leaves."""
        out, f = [], self.start_floor
        for ch in self.steps:
            out.append(f)
            f += self.rise(ch)
        return out

    def lowest_floor(self) -> int:
        return min(self.departure_floors())

    @property
    def is_canonical(self) -> bool:
        return self.lowest_floor() == 1

    @property
    def first_step(self) -> Step:
        return Step(self.steps[0])

    def up_floor_sequence(self) -> list[int]:
        return [f for f, ch in zip(self.departure_floors(), self.steps) if ch == "U"]

    def rotate(self, k: int) -> "LatticePath":
        """Start ``k`` steps later along the cycle (same floors, new start)."""
        k %= len(self.steps)
        floors = self.departure_floors()
        return LatticePath(self.g, self.steps[k:] + self.steps[:k], floors[k], self.motzkin)

    def to_string(self) -> str:
        return f"{self.start_floor}:{self.steps}"

    @classmethod
    def from_string(cls, text: str, g: int, motzkin: bool | None = None) -> "LatticePath":
        try:
            floor, steps = text.split(":")
            floor = int(floor)
        except ValueError as exc:
            raise DomainError(f"expected 'floor:STEPS', got {text!r}") from exc
        if motzkin is None:
            motzkin = "L" in steps
        return cls(g, steps, floor, motzkin)

    def __str__(self):
        return self.to_string()


PathProfile = GComposition | MixedComposition


def profile_of(path: LatticePath) -> PathProfile:
    """Up-steps (and, for Motzkin paths, level steps) per floor, counted from the lowest floor."""
    if not isinstance(path, LatticePath):
        raise DomainError("profile_of needs a LatticePath")
    floors = path.departure_floors()
    low = min(floors)
    ups: dict[int, int] = defaultdict(int)
    levels: dict[int, int] = defaultdict(int)
    for f, ch in zip(floors, path.steps):
        if ch == "U":
            ups[f - low + 1] += 1
        elif ch == "L":
            levels[f - low + 1] += 1
    if not ups:
        if not path.motzkin:
            raise DomainError("a Dyck bridge has at least one up step")
        return MixedComposition((len(path),), (), path.g)
    j = max(ups)
    parts = tuple(ups[i] for i in range(1, j + 1))
    if not path.motzkin:
        return GComposition(parts, path.g)
    tilde = tuple(levels[i] for i in range(1, j + path.g))
    return MixedComposition(tilde, parts, path.g)


def _rows_to_paths(rows: np.ndarray, starts: np.ndarray, g: int, motzkin: bool) -> list[LatticePath]:
    table = np.frombuffer(_kernels.STEP_CHARS.encode(), dtype=np.uint8)
    chars = table[rows.astype(np.intp)]
    return [LatticePath(g, bytes(r).decode(), int(s), motzkin) for r, s in zip(chars, starts)]


def _dyck_rows(n: int, g: int, limit: int | None):
    if n < 1 or g < 2:
        raise DomainError("need n >= 1 and g >= 2")
    cap = dyck_length_limit(limit)
    if g * n > cap:
        raise ResourceLimitError(f"Dyck bridges of length {g * n} exceed the limit {cap}")
    return _kernels.bridge_rows(g * n, g, False)


def _motzkin_rows(N: int, g: int, limit: int | None):
    if N < 1 or g < 2:
        raise DomainError("need N >= 1 and g >= 2")
    cap = motzkin_length_limit(limit)
    if N > cap:
        raise ResourceLimitError(f"Motzkin bridges of length {N} exceed the limit {cap}")
    return _kernels.bridge_rows(N, g, True)


def enumerate_dyck_bridges(n: int, g: int, limit: int | None = None) -> list[LatticePath]:
    """All ``C(gn, n)`` bridges with ``n`` up steps, canonical, in lexicographic order (U < D)."""
    rows = _dyck_rows(n, g, limit)
    starts, _, _ = _kernels.path_statistics(rows, g)
    return _rows_to_paths(rows, starts, g, False)


def enumerate_motzkin_bridges(N: int, g: int, limit: int | None = None) -> list[LatticePath]:
    """All length-``N`` bridges over U, L, D, canonical, in lexicographic order (U < L < D)."""
    rows = _motzkin_rows(N, g, limit)
    starts, _, _ = _kernels.path_statistics(rows, g)
    return _rows_to_paths(rows, starts, g, True)


def reconstruct_from_floor_sequence(i: int, floors: Sequence[int], g: int) -> LatticePath:
    """Rebuild the up-starting bridge from the floors its up steps leave from.

    Up steps go to positions ``i - i_s + g(s-1) + 1``; every other position is a down step.
    """
    floors = list(floors)
    if not floors or floors[0] != i:
        raise DomainError("the floor sequence must start with the start floor i")
    if min(floors) < 1:
        raise DomainError("floors must be >= 1")
    for a, b in zip(floors, floors[1:]):
        if b > a + g - 1:
            raise DomainError(f"floor jump {a} -> {b} exceeds g - 1 = {g - 1}")
    n = len(floors)
    positions = [i - f + g * s + 1 for s, f in enumerate(floors)]
    if positions[0] != 1 or positions[-1] > g * n:
        raise DomainError("floor sequence does not describe a bridge")
    steps = ["D"] * (g * n)
    for p in positions:
        steps[p - 1] = "U"
    path = LatticePath(g, "".join(steps), i)
    if path.up_floor_sequence() != floors:
        raise DomainError("floor sequence is not realizable")
    return path


def up_positions(path: LatticePath) -> list[int]:
    return [k + 1 for k, ch in enumerate(path.steps) if ch == "U"]


def cut_and_exchange(path: LatticePath, i: int) -> LatticePath:
    """Cut before the last down step leaving floor ``i`` and swap the two pieces.

    Maps bridges starting up from floors ``i-g+1 .. i-1`` to bridges starting down from ``i``.
    """
    if path.first_step is not Step.UP or not (i - path.g + 1 <= path.start_floor <= i - 1):
        raise DomainError(
            f"path must start with an up step from floors {i - path.g + 1}..{i - 1}")
    floors = path.departure_floors()
    cuts = [k for k, (f, ch) in enumerate(zip(floors, path.steps)) if ch == "D" and f == i]
    if not cuts:
        raise DomainError(f"no down step leaves floor {i}")
    k = cuts[-1]
    return LatticePath(path.g, path.steps[k:] + path.steps[:k], i, path.motzkin)


def _table(profile: PathProfile, up: dict, down: dict, level: dict, motzkin: bool) -> FloorCountTable:
    span = profile.floors if isinstance(profile, MixedComposition) else profile.j + profile.g - 1
    rows = []
    for f in range(1, span + 1):
        u, d = up.get(f, 0), down.get(f, 0)
        h = level.get(f, 0) if motzkin else None
        rows.append(FloorCount(i=f, up=u, down=d, any=u + d + (h or 0), horizontal=h))
    return FloorCountTable(tuple(rows), sum(r.any for r in rows))


def tally_by_profile(paths: Iterable[LatticePath]) -> dict[PathProfile, FloorCountTable]:
    """Group paths by profile; per floor, count paths by the kind of their first step."""
    firsts: dict = defaultdict(lambda: {"U": defaultdict(int), "D": defaultdict(int),
                                        "L": defaultdict(int)})
    motzkin = None
    for p in paths:
        if motzkin is None:
            motzkin = p.motzkin
        elif p.motzkin != motzkin:
            raise DomainError("cannot tally Dyck and Motzkin paths together")
        if not p.is_canonical:
            p = LatticePath(p.g, p.steps, p.start_floor - p.lowest_floor() + 1, p.motzkin)
        firsts[profile_of(p)][p.steps[0]][p.start_floor] += 1
    return {prof: _table(prof, c["U"], c["D"], c["L"], bool(motzkin))
            for prof, c in sorted(firsts.items(), key=lambda kv: _profile_key(kv[0]))}


def _profile_key(p: PathProfile):
    if isinstance(p, GComposition):
        return (p.parts,)
    return (p.j, sum(p.parts), p.parts, tuple(-t for t in p.tilde))


def _fast_tally(rows: np.ndarray, g: int, motzkin: bool) -> dict[PathProfile, FloorCountTable]:
    starts, up, level = _kernels.path_statistics(rows, g)
    first = rows[:, 0].astype(np.int64)
    keys = np.concatenate([up[:, 1:], level[:, 1:], starts[:, None], first[:, None]], axis=1)
    uniq, counts = np.unique(keys, axis=0, return_counts=True)
    width = up.shape[1] - 1
    acc: dict = defaultdict(lambda: ({}, {}, {}))
    for key, cnt in zip(uniq, counts):
        ups = [int(x) for x in key[:width]]
        lev = [int(x) for x in key[width:2 * width]]
        start, kind = int(key[-2]), int(key[-1])
        if any(ups):
            j = max(k for k, x in enumerate(ups) if x) + 1
            parts = tuple(ups[:j])
            prof = (MixedComposition(tuple(lev[:j + g - 1]), parts, g) if motzkin
                    else GComposition(parts, g))
        else:
            prof = MixedComposition((rows.shape[1],), (), g)
        bucket = acc[prof][{_kernels.UP: 0, _kernels.DOWN: 1, _kernels.LEVEL: 2}[kind]]
        bucket[start] = bucket.get(start, 0) + int(cnt)
    return {prof: _table(prof, u, d, lv, motzkin)
            for prof, (u, d, lv) in sorted(acc.items(), key=lambda kv: _profile_key(kv[0]))}


def dyck_tally(n: int, g: int, limit: int | None = None) -> dict[GComposition, FloorCountTable]:
    """``tally_by_profile(enumerate_dyck_bridges(n, g))`` computed on the kernel arrays."""
    return _fast_tally(_dyck_rows(n, g, limit), g, False)


def motzkin_tally(N: int, g: int, limit: int | None = None) -> dict[MixedComposition, FloorCountTable]:
    """``tally_by_profile(enumerate_motzkin_bridges(N, g))`` computed on the kernel arrays."""
    return _fast_tally(_motzkin_rows(N, g, limit), g, True)
