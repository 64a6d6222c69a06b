import math

import pytest
from hypothesis import given, strategies as st

from gdyck import paths
from gdyck.coefficients import dyck_floor_counts, motzkin_floor_counts
from gdyck.compositions import GComposition, MixedComposition
from gdyck.errors import DomainError, ResourceLimitError
from gdyck.paths import LatticePath


def test_g2_n3_bridges():
    bridges = paths.enumerate_dyck_bridges(3, 2)
    assert len(bridges) == math.comb(6, 3) == 20
    assert len(set(bridges)) == 20
    assert sum(p.steps[0] == "U" for p in bridges) == 10
    tally = paths.tally_by_profile(bridges)
    assert {c.parts: t.total for c, t in tally.items()} == {
        (1, 1, 1): 6, (1, 2): 6, (2, 1): 6, (3,): 2}


def test_example_paths_profiles():
    dyck = LatticePath(3, "UDUDDDDDUDDUDDU", 3)
    assert dyck.is_canonical
    assert paths.profile_of(dyck) == GComposition((3, 0, 1, 1), 3)
    motzkin = LatticePath.from_string("1:UDUDDLULDDDL", 3)
    assert motzkin.motzkin
    assert paths.profile_of(motzkin) == MixedComposition((1, 1, 0, 1), (1, 2), 3)


def test_reconstruction_example():
    p = paths.reconstruct_from_floor_sequence(3, [3, 2, 1, 2, 3], 2)
    assert p.to_string() == "3:UDDUDDUUUD"
    assert paths.up_positions(p) == [1, 4, 7, 8, 9]


def test_reconstruction_rejects_bad_sequences():
    with pytest.raises(DomainError):
        paths.reconstruct_from_floor_sequence(3, [2, 1], 2)
    with pytest.raises(DomainError):
        paths.reconstruct_from_floor_sequence(1, [1, 3], 2)


def test_cut_and_exchange_small():
    p = LatticePath(2, "UD", 1)
    assert paths.cut_and_exchange(p, 2).to_string() == "2:DU"
    with pytest.raises(DomainError):
        paths.cut_and_exchange(LatticePath(2, "DU", 2), 2)


@pytest.mark.parametrize("n,g", [(3, 2), (4, 2), (5, 2), (6, 2), (3, 3), (4, 3), (2, 4), (3, 4)])
def test_cut_and_exchange_is_bijective(n, g):
    bridges = paths.enumerate_dyck_bridges(n, g)
    ups = [p for p in bridges if p.steps[0] == "U"]
    top = max(max(p.departure_floors()) for p in bridges) + 1
    for i in range(2, top + 1):
        source = [p for p in ups if i - g + 1 <= p.start_floor <= i - 1]
        image = [paths.cut_and_exchange(p, i) for p in source]
        target = {p for p in bridges if p.steps[0] == "D" and p.start_floor == i}
        assert len(set(image)) == len(image)
        assert set(image) == target
        assert all(paths.profile_of(a) == paths.profile_of(b) for a, b in zip(source, image))


def test_path_validation():
    with pytest.raises(DomainError):
        LatticePath(2, "UU", 1)
    with pytest.raises(DomainError):
        LatticePath(2, "DU", 1)
    with pytest.raises(DomainError):
        LatticePath(2, "ULD", 1)
    with pytest.raises(DomainError):
        LatticePath.from_string("UD", 2)


@pytest.mark.parametrize("n,g", [(3, 2), (5, 2), (3, 3), (4, 3), (3, 4)])
def test_fast_tally_equals_slow_tally_and_formulas(n, g):
    slow = paths.tally_by_profile(paths.enumerate_dyck_bridges(n, g))
    fast = paths.dyck_tally(n, g)
    assert list(slow.items()) == list(fast.items())
    for comp, table in fast.items():
        assert table == dyck_floor_counts(comp)


@pytest.mark.parametrize("N,g", [(4, 2), (6, 2), (5, 3), (7, 3), (6, 4)])
def test_motzkin_tally(N, g):
    slow = paths.tally_by_profile(paths.enumerate_motzkin_bridges(N, g))
    fast = paths.motzkin_tally(N, g)
    assert list(slow.items()) == list(fast.items())
    for mc, table in fast.items():
        assert table == motzkin_floor_counts(mc)


def test_size_limits(monkeypatch):
    with pytest.raises(ResourceLimitError):
        paths.enumerate_dyck_bridges(9, 2)
    assert len(paths.enumerate_dyck_bridges(3, 2, limit=6)) == 20
    monkeypatch.setenv("GDYCK_MAX_DYCK_LENGTH", "4")
    with pytest.raises(ResourceLimitError):
        paths.enumerate_dyck_bridges(3, 2)
    monkeypatch.setenv("GDYCK_MAX_MOTZKIN_LENGTH", "x")
    with pytest.raises(DomainError):
        paths.enumerate_motzkin_bridges(3, 2)


@st.composite
def bridges(draw):
    g = draw(st.integers(2, 4))
    n = draw(st.integers(1, 3))
    motzkin = draw(st.booleans())
    pool = (paths.enumerate_motzkin_bridges(min(g * n, 8), g) if motzkin
            else paths.enumerate_dyck_bridges(n, g))
    return draw(st.sampled_from(pool))


@given(bridges(), st.integers(0, 40))
def test_rotations_stay_in_the_class(p, k):
    r = p.rotate(k)
    assert r.rotate(len(p) - k % len(p)) == p
    assert r.is_canonical
    assert paths.profile_of(r) == paths.profile_of(p)
    orbit = {p.rotate(t) for t in range(len(p))}
    assert len(p) % len(orbit) == 0


@given(bridges())
def test_string_round_trip(p):
    assert LatticePath.from_string(p.to_string(), p.g, p.motzkin) == p
