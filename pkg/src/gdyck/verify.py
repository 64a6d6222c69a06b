"""Cross-oracle self-checks behind ``gdyck verify``.

Each check compares a closed formula against an independent computation and
reports the exact inputs on failure.  Sizes are capped by the enumeration limits.
"""
from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from typing import Callable

from . import paths
from .coefficients import (
    dyck_bridges_closed_form,
    dyck_floor_counts,
    motzkin_bridges_by_compositions,
    motzkin_floor_counts,
    total_dyck_bridges,
    total_motzkin_bridges,
)
from .compositions import (
    count_g_compositions,
    count_mixed_compositions,
    enumerate_g_compositions,
    enumerate_mixed_compositions,
    mixed_count_series,
)
from .errors import DomainError
from .exclusion import (
    cluster_coefficient_formula,
    cluster_coefficients,
    determinant_partition_functions,
    exclusion_matrix,
    partition_functions,
    random_spectral_data,
    trace_power,
    trace_via_formula,
)
from .hofstadter import area_polynomial_via_trace, walk_area_histogram, weyl_expand_power
from .symbolic import Laurent

DEFAULT_SEED = 20240917


@dataclass
class CheckResult:
    name: str
    ok: bool
    cases: int = 0
    seconds: float = 0.0
    failures: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {"name": self.name, "ok": self.ok, "cases": self.cases,
                "failures": self.failures}


class _Collector:
    def __init__(self):
        self.cases = 0
        self.failures: list[str] = []

    def expect(self, ok: bool, message: str) -> None:
        self.cases += 1
        if not ok:
            self.failures.append(message)


def _run(name: str, body: Callable[[_Collector], None]) -> CheckResult:
    col = _Collector()
    t0 = time.perf_counter()
    try:
        body(col)
    except Exception as exc:  # a crash is a failed check, not a crashed report
        col.failures.append(f"{type(exc).__name__}: {exc}")
    return CheckResult(name, not col.failures, col.cases, time.perf_counter() - t0, col.failures)


def check_composition_counts(g: int, max_n: int) -> CheckResult:
    def body(col):
        for n in range(1, max_n + 1):
            got = len(enumerate_g_compositions(n, g))
            col.expect(got == count_g_compositions(n, g),
                       f"g={g} n={n}: enumerated {got} g-compositions, expected {g ** (n - 1)}")
        top = min(g * max_n, 10)
        series = mixed_count_series(g, top)
        for N in range(1, top + 1):
            a = count_mixed_compositions(N, g)
            b = series[N]
            c = len(enumerate_mixed_compositions(N, g))
            col.expect(a == b == c, f"g={g} N={N}: closed form {a}, series {b}, enumeration {c}")
    return _run("composition-counts", body)


def check_dyck_oracle(g: int, max_n: int) -> CheckResult:
    def body(col):
        cap = paths.dyck_length_limit()
        for n in range(1, max_n + 1):
            if g * n > cap:
                break
            tally = paths.dyck_tally(n, g)
            comps = enumerate_g_compositions(n, g)
            col.expect(set(tally) == set(comps), f"g={g} n={n}: profile set differs from g-compositions")
            for comp in comps:
                if comp in tally:
                    col.expect(tally[comp] == dyck_floor_counts(comp),
                               f"g={g} comp={comp}: per-floor tally differs from formulas")
    return _run("dyck-oracle", body)


def check_motzkin_oracle(g: int, max_n: int) -> CheckResult:
    def body(col):
        cap = paths.motzkin_length_limit()
        for N in range(1, min(g * max_n, cap, 10) + 1):
            tally = paths.motzkin_tally(N, g)
            comps = enumerate_mixed_compositions(N, g)
            col.expect(set(tally) == set(comps), f"g={g} N={N}: profile set differs from (1,g)-compositions")
            for mc in comps:
                if mc in tally:
                    col.expect(tally[mc] == motzkin_floor_counts(mc),
                               f"g={g} comp={mc}: per-floor tally differs from formulas")
    return _run("motzkin-oracle", body)


def check_totals(g: int, max_n: int) -> CheckResult:
    def body(col):
        for n in range(1, max_n + 1):
            a, b = total_dyck_bridges(n, g), dyck_bridges_closed_form(n, g)
            col.expect(a == b, f"g={g} n={n}: sum gn c_g = {a}, C(gn, n) = {b}")
        for N in range(1, g * max_n + 1):
            a, b = motzkin_bridges_by_compositions(N, g), total_motzkin_bridges(N, g)
            col.expect(a == b, f"g={g} N={N}: sum N c_1g = {a}, binomial sum = {b}")
    return _run("total-counts", body)


def check_bijections(g: int, max_n: int) -> CheckResult:
    def body(col):
        cap = paths.dyck_length_limit()
        for n in range(1, max_n + 1):
            if g * n > min(cap, 12):
                break
            bridges = paths.enumerate_dyck_bridges(n, g)
            ups = [p for p in bridges if p.steps[0] == "U"]
            for p in ups:
                back = paths.reconstruct_from_floor_sequence(p.start_floor, p.up_floor_sequence(), g)
                col.expect(back == p, f"g={g} path={p}: floor-sequence round trip gave {back}")
            top = max(p.lowest_floor() + max(p.departure_floors()) for p in bridges)
            for i in range(2, top + 1):
                source = [p for p in ups if i - g + 1 <= p.start_floor <= i - 1]
                target = {p for p in bridges if p.steps[0] == "D" and p.start_floor == i}
                image = [paths.cut_and_exchange(p, i) for p in source]
                col.expect(len(set(image)) == len(image) and set(image) == target,
                           f"g={g} n={n} i={i}: cut-and-exchange is not a bijection "
                           f"({len(source)} sources, {len(target)} targets)")
    return _run("bijections", body)


def check_exclusion(g: int, max_q: int, seed: int, datasets: int = 3) -> CheckResult:
    def body(col):
        for q in range(g, max_q + 1):
            for mixed in (False, True):
                for r in range(datasets):
                    case_seed = seed + 1000 * q + 100 * g + 10 * int(mixed) + r
                    sd = random_spectral_data(q, g, mixed, case_seed)
                    tag = f"g={g} q={q} mixed={mixed} seed={case_seed}"
                    m = exclusion_matrix(sd)
                    Z = partition_functions(sd)
                    col.expect(determinant_partition_functions(m) == Z,
                               f"{tag}: determinant coefficients differ from Z(n)")
                    order = q if mixed else q // g + 1
                    b = cluster_coefficients(Z, order)
                    for n in range(1, order + 1):
                        col.expect(b[n - 1] == cluster_coefficient_formula(sd, n),
                                   f"{tag} n={n}: series-log b(n) differs from the composition sum")
                        big = n if mixed else g * n
                        sign = 1 if n % 2 else -1
                        t = trace_power(m, big)
                        col.expect(t == trace_via_formula(sd, big) == big * sign * b[n - 1],
                                   f"{tag} trace power {big}: matrix power and formula disagree")
    return _run("exclusion-pipeline", body)


def check_hofstadter(max_len: int) -> CheckResult:
    def body(col):
        for n in range(2, max_len + 1, 2):
            w = weyl_expand_power(n)
            h = Laurent(walk_area_histogram(n))
            t = area_polynomial_via_trace(n)
            col.expect(w == h == t, f"n={n}: weyl {w}, walks {h}, trace {t}")
            col.expect(sum(w.terms.values()) == math.comb(n, n // 2) ** 2,
                       f"n={n}: walk total is not C(n, n/2)^2")
    return _run("hofstadter-three-way", body)


def run_all(g: int, max_n: int, seed: int = DEFAULT_SEED) -> list[CheckResult]:
    if g < 2 or max_n < 1:
        raise DomainError("need g >= 2 and max-n >= 1")
    max_q = min(12, max(g + 1, g * max_n))
    return [
        check_composition_counts(g, max_n),
        check_totals(g, max_n),
        check_dyck_oracle(g, max_n),
        check_motzkin_oracle(g, max_n),
        check_bijections(g, max_n),
        check_exclusion(g, max_q, seed),
        check_hofstadter(min(2 * max_n, 10)),
    ]
