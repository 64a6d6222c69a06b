"""``gdyck`` command line: every operation, JSON/CSV/text output, and ``verify``.

Exit status: 0 success, 1 usage error, 2 domain or size-limit error,
3 verification or consistency failure.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from . import paths
from .coefficients import c_1g, c_g, dyck_floor_counts, motzkin_floor_counts
from .compositions import (
    GComposition,
    MixedComposition,
    count_g_compositions,
    count_mixed_compositions,
    enumerate_g_compositions,
    enumerate_mixed_compositions,
)
from .errors import ConsistencyError, DomainError
from .exclusion import (
    cluster_coefficients,
    exclusion_matrix,
    hofstadter_data,
    partition_functions,
    random_spectral_data,
    ring_to_json,
    secular_determinant,
    spectral_data_from_json,
    trace_power,
    trace_via_formula,
)
from .hofstadter import area_polynomial_via_trace, walk_area_histogram, weyl_expand_power
from .symbolic import Laurent, format_rational
from .verify import DEFAULT_SEED, run_all

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_VERIFY = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass
class Output:
    payload: object
    header: Sequence[str]
    rows: list
    text: str | None = None
    failed: bool = False


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip() != "")
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from exc


def _composition(args) -> GComposition | MixedComposition:
    if args.comp is not None:
        if args.tilde is not None or args.parts is not None:
            raise UsageError("use either --comp or --tilde/--parts")
        return GComposition(args.comp, args.g)
    if args.tilde is None:
        raise UsageError("need --comp, or --tilde with optional --parts")
    return MixedComposition(args.tilde, args.parts or (), args.g)


def _size(args) -> tuple[int, bool]:
    if (args.n is None) == (args.N is None):
        raise UsageError("give exactly one of --n (Dyck) or --N (Motzkin / mixed)")
    return (args.n, False) if args.n is not None else (args.N, True)


def _comp_label(c) -> str:
    return str(c)


def _ring_text(x) -> str:
    if isinstance(x, (int, Fraction)):
        return format_rational(x)
    return repr(x) if isinstance(x, Laurent) else str(x)


# ------------------------------------------------------------------ handlers

def cmd_compositions(args) -> Output:
    size, mixed = _size(args)
    if args.count:
        k = count_mixed_compositions(size, args.g) if mixed else count_g_compositions(size, args.g)
        return Output(k, ["count"], [[k]], str(k))
    comps = enumerate_mixed_compositions(size, args.g) if mixed else enumerate_g_compositions(size, args.g)
    payload = [c.to_json() for c in comps]
    if mixed:
        rows = [[" ".join(map(str, c.tilde)), " ".join(map(str, c.parts))] for c in comps]
        header = ["tilde", "parts"]
    else:
        rows = [[" ".join(map(str, c.parts))] for c in comps]
        header = ["parts"]
    return Output(payload, header, rows, "\n".join(map(_comp_label, comps)))


def cmd_coeff(args) -> Output:
    comp = _composition(args)
    if isinstance(comp, GComposition):
        c = c_g(comp)
        total = comp.g * comp.n * c
        key = "gn_c"
    else:
        c = c_1g(comp)
        total = comp.N * c
        key = "N_c"
    if total.denominator != 1:
        raise ConsistencyError(f"{key} = {total} is not an integer")
    payload = {"c": format_rational(c), key: int(total)}
    return Output(payload, ["c", key], [[payload["c"], payload[key]]],
                  f"c{comp} = {payload['c']}, {key} = {payload[key]}")


def cmd_floor_counts(args) -> Output:
    comp = _composition(args)
    table = dyck_floor_counts(comp) if isinstance(comp, GComposition) else motzkin_floor_counts(comp)
    payload = table.to_json()
    rows_json = payload["floors"]
    if args.floor is not None:
        if not 1 <= args.floor <= len(rows_json):
            raise DomainError(f"floor {args.floor} outside 1..{len(rows_json)}")
        rows_json = [rows_json[args.floor - 1]]
        payload = rows_json[0]
    header = list(rows_json[0].keys())
    rows = [[r[h] for h in header] for r in rows_json]
    text = "\n".join("floor {i}: ".format(**r) + ", ".join(f"{h}={r[h]}" for h in header[1:])
                     for r in rows_json)
    return Output(payload, header, rows, text)


def cmd_paths(args) -> Output:
    size, motzkin = _size(args)
    if args.action == "enumerate":
        found = (paths.enumerate_motzkin_bridges(size, args.g, args.limit) if motzkin
                 else paths.enumerate_dyck_bridges(size, args.g, args.limit))
        if args.first is not None:
            found = [p for p in found if p.steps[0] == args.first]
        if args.start_floor is not None:
            found = [p for p in found if p.start_floor == args.start_floor]
        payload = [p.to_string() for p in found]
        return Output(payload, ["start_floor", "steps"],
                      [[p.start_floor, p.steps] for p in found], "\n".join(payload))
    tally = (paths.motzkin_tally(size, args.g, args.limit) if motzkin
             else paths.dyck_tally(size, args.g, args.limit))
    payload, rows, lines = [], [], []
    for prof, table in tally.items():
        payload.append({"profile": prof.to_json(), **table.to_json()})
        lines.append(f"{prof}: total {table.total}")
        for f in table.floors:
            rows.append([str(prof), f.i, f.up, f.down, "" if f.horizontal is None else f.horizontal, f.any])
            lines.append(f"  floor {f.i}: up={f.up} down={f.down}"
                         + ("" if f.horizontal is None else f" horizontal={f.horizontal}")
                         + f" any={f.any}")
    return Output(payload, ["profile", "i", "up", "down", "horizontal", "any"], rows, "\n".join(lines))


def _spectral(args):
    sources = [args.data is not None, args.preset is not None, args.random]
    if sum(sources) != 1:
        raise UsageError("give exactly one of --data FILE, --preset hofstadter or --random")
    meta: dict = {}
    if args.data is not None:
        try:
            text = sys.stdin.read() if args.data == "-" else Path(args.data).read_text()
        except OSError as exc:
            raise DomainError(f"cannot read spectral data: {exc}") from exc
        try:
            sd = spectral_data_from_json(json.loads(text))
        except json.JSONDecodeError as exc:
            raise DomainError(f"spectral data is not valid JSON: {exc}") from exc
    elif args.preset is not None:
        if args.q is None:
            raise UsageError("--preset hofstadter needs --q (and optionally --p)")
        sd = hofstadter_data(args.p, args.q)
        meta = {"preset": args.preset, "p": args.p}
    else:
        if args.q is None or args.g is None:
            raise UsageError("--random needs --q and --g")
        sd = random_spectral_data(args.q, args.g, args.mixed, args.seed)
        meta = {"seed": args.seed}
    return sd, {"q": sd.q, "g": sd.g, "mode": "mixed" if sd.mixed else "pure", **meta}


def _sequence_output(head: dict, key: str, values: list, start: int) -> Output:
    enc = [ring_to_json(v) for v in values]
    payload = {**head, key: enc}
    rows = [[i, json.dumps(v) if isinstance(v, dict) else v] for i, v in enumerate(enc, start)]
    text = "\n".join(f"{key}({i}) = {_ring_text(v)}" for i, v in enumerate(values, start))
    return Output(payload, ["n", key], rows, text)


def cmd_exclusion(args) -> Output:
    sd, head = _spectral(args)
    m = exclusion_matrix(sd)
    if args.action == "det":
        return _sequence_output(head, "det", secular_determinant(m), 0)
    Z = partition_functions(sd)
    if args.action == "zn":
        return _sequence_output(head, "Z", Z, 0)
    if args.action == "bn":
        order = args.order or len(Z) - 1 or 1
        return _sequence_output(head, "b", cluster_coefficients(Z, order), 1)
    if args.power is None:
        raise UsageError("exclusion trace needs --power")
    by_matrix = trace_power(m, args.power)
    by_formula = trace_via_formula(sd, args.power)
    agree = by_matrix == by_formula
    payload = {**head, "power": args.power, "trace": ring_to_json(by_matrix),
               "formula": ring_to_json(by_formula), "agree": agree}
    return Output(payload, ["power", "trace", "formula", "agree"],
                  [[args.power, json.dumps(payload["trace"]) if isinstance(payload["trace"], dict)
                    else payload["trace"],
                    json.dumps(payload["formula"]) if isinstance(payload["formula"], dict)
                    else payload["formula"], agree]],
                  f"tr M^{args.power} = {_ring_text(by_matrix)}\nformula   = {_ring_text(by_formula)}", failed=not agree)


def cmd_hofstadter(args) -> Output:
    methods = {
        "weyl": lambda n: weyl_expand_power(n),
        "walks": lambda n: Laurent(walk_area_histogram(n, args.limit)),
        "trace": lambda n: area_polynomial_via_trace(n),
    }
    if args.n < 1:
        raise DomainError("n must be >= 1")
    poly = methods[args.method](args.n)
    failed = False
    mismatches = []
    if args.check:
        for name, fn in methods.items():
            if name != args.method and fn(args.n) != poly:
                mismatches.append(name)
        failed = bool(mismatches)
    hist = {e: poly.terms[e] for e in poly.exponents()}
    payload = {str(a): int(c) for a, c in hist.items()}
    text = "\n".join(f"A={a}: {c}" for a, c in hist.items())
    if mismatches:
        text += f"\nmethods disagree with {args.method}: {', '.join(mismatches)}"
        print(f"verification failed: {args.method} disagrees with {', '.join(mismatches)} "
              f"at n={args.n}", file=sys.stderr)
    return Output(payload, ["A", "count"], [[a, int(c)] for a, c in hist.items()], text, failed)


def cmd_verify(args) -> Output:
    results = run_all(args.g, args.max_n, args.seed)
    payload = {"g": args.g, "max_n": args.max_n, "seed": args.seed,
               "ok": all(r.ok for r in results), "checks": [r.to_json() for r in results]}
    lines = [f"{'PASS' if r.ok else 'FAIL'} {r.name} ({r.cases} cases)" for r in results]
    for r in results:
        lines.extend(f"  {msg}" for msg in r.failures)
    rows = [[r.name, r.ok, r.cases, " | ".join(r.failures)] for r in results]
    for r in results:
        for msg in r.failures:
            print(f"FAIL {r.name}: {msg}", file=sys.stderr)
    return Output(payload, ["check", "ok", "cases", "failures"], rows, "\n".join(lines),
                  failed=not payload["ok"])


# ------------------------------------------------------------------ plumbing

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="gdyck", description="Generalized Dyck/Motzkin bridges, exclusion "
                                               "statistics and lattice-walk areas.")
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=["json", "csv", "text"], default="json")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    comp_flags = argparse.ArgumentParser(add_help=False)
    comp_flags.add_argument("--g", type=int, required=True)
    comp_flags.add_argument("--comp", type=_int_list, help="g-composition parts, e.g. 2,1")
    comp_flags.add_argument("--tilde", type=_int_list, help="(1,g)-composition tilde parts")
    comp_flags.add_argument("--parts", type=_int_list, help="(1,g)-composition parts")

    size_flags = argparse.ArgumentParser(add_help=False)
    size_flags.add_argument("--g", type=int, required=True)
    size_flags.add_argument("--n", type=int, help="number of up steps / g-composition size")
    size_flags.add_argument("--N", type=int, help="Motzkin length / (1,g)-composition size")

    p = sub.add_parser("compositions", parents=[size_flags, fmt],
                       help="list or count g- and (1,g)-compositions")
    p.add_argument("--count", action="store_true")
    p.set_defaults(func=cmd_compositions)

    p = sub.add_parser("coeff", parents=[comp_flags, fmt], help="c_g or c_{1,g} of a composition")
    p.set_defaults(func=cmd_coeff)

    p = sub.add_parser("floor-counts", parents=[comp_flags, fmt],
                       help="per-floor bridge counts predicted for a composition")
    p.add_argument("--floor", type=int)
    p.set_defaults(func=cmd_floor_counts)

    p = sub.add_parser("paths", parents=[size_flags, fmt], help="enumerate or tally bridges")
    p.add_argument("action", choices=["enumerate", "tally"])
    p.add_argument("--limit", type=int, help="override the maximum path length")
    p.add_argument("--first", choices=["U", "D", "L"], help="keep paths with this first step")
    p.add_argument("--start-floor", type=int, help="keep paths starting on this floor")
    p.set_defaults(func=cmd_paths)

    p = sub.add_parser("exclusion", parents=[fmt], help="exclusion-matrix determinant, Z(n), b(n), traces")
    p.add_argument("action", choices=["det", "zn", "bn", "trace"])
    p.add_argument("--data", help="JSON file with f, g and optional stilde ('-' for stdin)")
    p.add_argument("--preset", choices=["hofstadter"])
    p.add_argument("--random", action="store_true", help="seeded random rational data")
    p.add_argument("--mixed", action="store_true", help="random data with a diagonal")
    p.add_argument("--p", type=int, default=1)
    p.add_argument("--q", type=int)
    p.add_argument("--g", type=int)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--order", type=int, help="number of cluster coefficients")
    p.add_argument("--power", type=int, help="trace power")
    p.set_defaults(func=cmd_exclusion)

    p = sub.add_parser("hofstadter", parents=[fmt], help="algebraic-area counts of closed walks")
    p.add_argument("action", choices=["area"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=["weyl", "walks", "trace"], default="weyl")
    p.add_argument("--check", action="store_true", help="run all methods and compare")
    p.add_argument("--limit", type=int, help="override the maximum walk length")
    p.set_defaults(func=cmd_hofstadter)

    p = sub.add_parser("verify", parents=[fmt], help="run the cross-oracle checks")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--max-n", type=int, default=3)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.set_defaults(func=cmd_verify)
    return parser


def render(out: Output, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(out.payload)
    if fmt == "text":
        return out.text if out.text is not None else json.dumps(out.payload)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(out.header)
    writer.writerows(out.rows)
    return buf.getvalue().rstrip("\n")


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out = args.func(args)
    except UsageError as exc:
        print(f"gdyck: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"gdyck: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ConsistencyError as exc:
        print(f"gdyck: consistency failure: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    print(render(out, args.format))
    return EXIT_VERIFY if out.failed else EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
