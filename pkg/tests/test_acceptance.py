"""Acceptance criteria, one test each, with the stated tolerance and time limit.

Each test appends a PASS/FAIL line to the "acceptance criteria" section of the
pytest terminal summary. Run alone with ``python tests/test_acceptance.py``.
"""
import itertools
import json
import math
import time
from collections import defaultdict
from contextlib import contextmanager
from fractions import Fraction
from pathlib import Path

import pytest
import sympy as sp

from conftest import ACCEPTANCE_LINES
from gdyck import _kernels, paths
from gdyck.coefficients import c_1g, c_g, dyck_floor_counts, motzkin_floor_counts, up_start_forms
from gdyck.compositions import (
    GComposition,
    MixedComposition,
    count_g_compositions,
    count_mixed_compositions,
    enumerate_g_compositions,
    enumerate_mixed_compositions,
    mixed_count_series,
)
from gdyck.exclusion import SpectralData, exclusion_matrix, partition_functions, secular_determinant
from gdyck.hofstadter import (
    SquareWalk,
    area_bound,
    area_polynomial_via_trace,
    walk_area,
    walk_area_histogram,
    weyl_expand_power,
)
from gdyck.symbolic import Laurent
from gdyck.verify import DEFAULT_SEED, check_exclusion

FIXTURE = json.loads((Path(__file__).parent / "fixtures" / "winding_walk.json").read_text())


@contextmanager
def criterion(number, title, limit):
    t0 = time.perf_counter()
    try:
        yield
    except BaseException:
        line = f"criterion {number}: FAIL  {title} ({time.perf_counter() - t0:.2f}s)"
        ACCEPTANCE_LINES.append(line)
        print(line)
        raise
    elapsed = time.perf_counter() - t0
    ok = elapsed < limit
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'}  {title} ({elapsed:.2f}s, limit {limit}s)"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, f"took {elapsed:.2f}s, limit {limit}s"


def word_oracle(length, g, motzkin):
    """Every bridge as (start floor, word), straight from itertools; no package code.

    Profiles are keyed as the package prints them, per-floor first-step tallies
    as ``{(profile, floor, first step): count}``.
    """
    rise = {"U": g - 1, "L": 0, "D": -1}
    bridges, tally, totals = [], defaultdict(int), defaultdict(int)
    for word in itertools.product("ULD" if motzkin else "UD", repeat=length):
        h, heights = 0, []
        for ch in word:
            heights.append(h)
            h += rise[ch]
        if h:
            continue
        low = min(heights)
        floors = [x - low + 1 for x in heights]
        ups = defaultdict(int)
        levels = defaultdict(int)
        for f, ch in zip(floors, word):
            if ch == "U":
                ups[f] += 1
            elif ch == "L":
                levels[f] += 1
        if ups:
            j = max(ups)
            parts = tuple(ups[i] for i in range(1, j + 1))
            tilde = tuple(levels[i] for i in range(1, j + g))
        else:
            parts, tilde = (), (length,)
        key = str(MixedComposition(tilde, parts, g)) if motzkin else parts
        bridges.append((floors[0], "".join(word)))
        totals[key] += 1
        tally[key, floors[0], word[0]] += 1
    return bridges, totals, tally


def test_criterion_1_g2_n3_coefficients():
    with criterion(1, "g=2 n=3 coefficients and up/down split of the 20 bridges", 1.0):
        got = {parts: 3 * c_g(GComposition(parts, 2)) for parts in [(3,), (2, 1), (1, 2), (1, 1, 1)]}
        assert got == {(3,): 1, (2, 1): 3, (1, 2): 3, (1, 1, 1): 3}
        bridges, totals, _ = word_oracle(6, 2, False)
        assert len(bridges) == math.comb(6, 3) == 20
        assert sum(w[0] == "U" for _, w in bridges) == 10
        assert sum(w[0] == "D" for _, w in bridges) == 10
        assert {k: 2 * v for k, v in got.items()} == dict(totals)
        ups = sum(comp.part(i) * c_g(comp) for comp in enumerate_g_compositions(3, 2)
                  for i in range(1, comp.j + 1))
        assert ups == 10


def test_criterion_2_composition_counts_and_listings():
    with criterion(2, "g-composition counts g^(n-1) and the reference listings", 1.0):
        for g in (2, 3, 4):
            for n in range(1, 9):
                comps = enumerate_g_compositions(n, g)
                assert len(set(comps)) == len(comps) == count_g_compositions(n, g) == g ** (n - 1)
        assert {c.parts for c in enumerate_g_compositions(3, 2)} == {(3,), (2, 1), (1, 2), (1, 1, 1)}
        assert {c.parts for c in enumerate_g_compositions(3, 3)} == {
            (3,), (2, 1), (1, 2), (1, 1, 1), (2, 0, 1), (1, 0, 2), (1, 0, 1, 1), (1, 1, 0, 1),
            (1, 0, 1, 0, 1)}
        listings = {
            (4, 2): {"(4)", "(2,0;1)", "(1,1;1)", "(0,2;1)", "(0,0;2)", "(0,0,0;1,1)"},
            (5, 3): {"(5)", "(2,0,0;1)", "(1,1,0;1)", "(1,0,1;1)", "(0,2,0;1)", "(0,1,1;1)",
                     "(0,0,2;1)"},
            (5, 4): {"(5)", "(1,0,0,0;1)", "(0,1,0,0;1)", "(0,0,1,0;1)", "(0,0,0,1;1)"},
        }
        for (N, g), expected in listings.items():
            assert {str(c) for c in enumerate_mixed_compositions(N, g)} == expected


def test_criterion_3_mixed_composition_counts():
    with criterion(3, "(1,g)-composition count: closed form, series, enumeration", 5.0):
        for g in (2, 3, 4):
            series = mixed_count_series(g, 10)
            for N in range(1, 11):
                comps = enumerate_mixed_compositions(N, g)
                assert len(set(comps)) == len(comps)
                assert count_mixed_compositions(N, g) == series[N] == len(comps)


def test_criterion_4_dyck_oracle():
    with criterion(4, "Dyck per-profile and per-floor tallies vs formulas, gn <= 12", 60.0):
        cases = 0
        for g in (2, 3, 4):
            for n in range(1, 12 // g + 1):
                _, totals, tally = word_oracle(g * n, g, False)
                comps = enumerate_g_compositions(n, g)
                assert set(totals) == {c.parts for c in comps}
                for comp in comps:
                    c = c_g(comp)
                    assert totals[comp.parts] == g * n * c
                    table = dyck_floor_counts(comp)
                    for i in range(1, comp.j + g):
                        up, down = tally[comp.parts, i, "U"], tally[comp.parts, i, "D"]
                        assert up == comp.part(i) * c
                        if comp.part(i):
                            assert up_start_forms(comp, i) == (up, up)
                        assert up + down == comp.window(i - g + 1, i) * c
                        assert down == comp.window(i - g + 1, i - 1) * c
                        row = table.floor(i)
                        assert (row.up, row.down, row.any) == (up, down, up + down)
                        cases += 1
        assert cases > 0


def test_criterion_5_motzkin_oracle():
    with criterion(5, "Motzkin per-profile and per-floor tallies vs formulas, N <= 10", 60.0):
        for g in (2, 3):
            for N in range(1, 11):
                _, totals, tally = word_oracle(N, g, True)
                comps = enumerate_mixed_compositions(N, g)
                assert set(totals) == {str(mc) for mc in comps}
                for mc in comps:
                    key, c = str(mc), c_1g(mc)
                    assert totals[key] == N * c
                    table = motzkin_floor_counts(mc)
                    for i in range(1, mc.floors + 1):
                        up, lev, down = (tally[key, i, s] for s in "ULD")
                        assert up == mc.part(i) * c
                        assert lev == mc.tilde_part(i) * c
                        assert down == mc.window(i - g + 1, i - 1) * c
                        row = table.floor(i)
                        assert (row.up, row.horizontal, row.down) == (up, lev, down)
        values = [c_1g(mc) for mc in enumerate_mixed_compositions(4, 2)]
        assert values == [Fraction(1, 4), 1, 1, 1, Fraction(1, 2), 1]


def test_criterion_6_total_counts():
    with criterion(6, "total bridge counts from compositions vs binomials", 10.0):
        for g in (2, 3, 4):
            for n in range(1, 14 // g + 1):
                total = g * n * sum(c_g(c) for c in enumerate_g_compositions(n, g))
                assert total == math.comb(g * n, n) == _kernels.bridge_count(g * n, g, False)
            for N in range(1, 13):
                total = N * sum(c_1g(mc) for mc in enumerate_mixed_compositions(N, g))
                binomial = sum(math.comb(N, g * k) * math.comb(g * k, k) for k in range(N // g + 1))
                assert total == binomial == _kernels.bridge_count(N, g, True)


def test_criterion_7_exclusion_pipeline():
    with criterion(7, "exclusion pipeline on 20 random datasets per (g, q) plus symbolic Z", 120.0):
        for g in (2, 3, 4):
            result = check_exclusion(g, 12, DEFAULT_SEED, datasets=20)
            assert result.ok, result.failures[:5]
            assert result.cases > 0
        s = sp.symbols("s1:7")
        Z = partition_functions(SpectralData(7, 2, [1] * 6, list(s)))
        expected = s[4] * s[2] * s[0] + s[5] * s[2] * s[0] + s[5] * s[3] * s[0] + s[5] * s[3] * s[1]
        assert sp.expand(Z[3] - expected) == 0
        s1, s2, s3, s4 = sp.symbols("s1:5")
        t1, t2, t3, t4, t5 = sp.symbols("t1:6")
        sd = SpectralData(5, 2, [1] * 4, [s1, s2, s3, s4], [t1, t2, t3, t4, t5])
        z4 = (t4 * t3 * t2 * t1 + t5 * t3 * t2 * t1 + t5 * t4 * t2 * t1 + t5 * t4 * t3 * t1
              + t5 * t4 * t3 * t2
              - t4 * t3 * s1 - t5 * t3 * s1 - t5 * t4 * s1
              - t4 * t1 * s2 - t5 * t1 * s2 - t5 * t4 * s2
              - t2 * t1 * s3 - t5 * t1 * s3 - t5 * t2 * s3
              - t2 * t1 * s4 - t3 * t1 * s4 - t3 * t2 * s4
              + s3 * s1 + s4 * s1 + s4 * s2)
        assert len(sp.Add.make_args(sp.expand(z4))) == 20
        assert sp.expand(partition_functions(sd)[4] - z4) == 0
        assert sp.expand(secular_determinant(exclusion_matrix(sd))[4] - z4) == 0


def test_criterion_8_hofstadter():
    with criterion(8, "walk areas: Weyl expansion, enumeration and trace agree, n <= 10", 120.0):
        Q = Laurent.monomial(1)
        assert weyl_expand_power(4) == 28 + 4 * Q + 4 * Q ** -1
        for n in range(2, 11, 2):
            w = weyl_expand_power(n)
            hist = walk_area_histogram(n)
            assert w == Laurent(hist) == area_polynomial_via_trace(n)
            assert sum(hist.values()) == math.comb(n, n // 2) ** 2
            assert max(hist) == area_bound(n)
        walk = SquareWalk.from_string(FIXTURE["moves"])
        assert len(walk) == 36 and walk_area(walk) == 16


def test_criterion_9_bijections():
    with criterion(9, "floor-sequence round trip and cut-and-exchange bijection, gn <= 12", 30.0):
        p = paths.reconstruct_from_floor_sequence(3, [3, 2, 1, 2, 3], 2)
        assert paths.up_positions(p) == [1, 4, 7, 8, 9]
        for g in (2, 3, 4):
            for n in range(1, 12 // g + 1):
                words, _, _ = word_oracle(g * n, g, False)
                bridges = {paths.LatticePath(g, w, f) for f, w in words}
                assert bridges == set(paths.enumerate_dyck_bridges(n, g, limit=12))
                ups = [b for b in bridges if b.steps[0] == "U"]
                for b in ups:
                    assert paths.reconstruct_from_floor_sequence(b.start_floor, b.up_floor_sequence(), g) == b
                top = max(max(b.departure_floors()) for b in bridges) + 1
                for i in range(2, top + 1):
                    source = [b for b in ups if i - g + 1 <= b.start_floor <= i - 1]
                    target = {b for b in bridges if b.steps[0] == "D" and b.start_floor == i}
                    image = [paths.cut_and_exchange(b, i) for b in source]
                    assert len(set(image)) == len(image)
                    assert set(image) == target


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
