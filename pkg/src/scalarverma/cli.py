"""Command line interface.

Subcommands: classify (one scalar parameter), scan (sweep a c-window on a
fixed lattice), table (the four exceptional-case reference tables),
crosscheck (oracle vs. closed-form sets and the first-reduction screen),
datum-dump (the full root datum as JSON).

Exit codes: 0 success, 1 usage error, 2 computational disagreement,
3 internal invariant violation.  All output is deterministic: fixed
orderings, exact rationals, no timestamps.  Setting GVM_THREADS > 1 fans
per-parameter work across threads; results are reduced in sorted order,
so the bytes emitted do not depend on it.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from .ehw import (
    KNOWN_REDUCIBLE,
    KNOWN_SIMPLE,
    abc_constants,
    abc_verdict,
    closed_form_reducible,
    line_offset,
    special_line,
)
from .errors import InvariantError
from .jantzen import REDUCIBLE, classify_scalar, jantzen_support
from .ratvec import Weight, add, format_rational, parse_rational, reflect
from .rootdata import (
    CASE_TAGS,
    HermitianCase,
    build_datum,
    case_notes,
    pattern_string,
    scalar_parameter_weight,
    sign_pattern_root,
)
from .weyl import theta_pairing

_VALUE_FLAGS = {"--c", "--a", "--p", "--q", "--n", "--window", "--step"}


class _Parser(argparse.ArgumentParser):
    """argparse with usage failures mapped to exit code 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def main(argv: list[str] | None = None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    parser = _build_parser()
    try:
        args = parser.parse_args(_glue_values(list(argv)))
    except SystemExit as exc:
        # argparse exits on usage errors (and on --help); keep the int
        # contract of main() by translating instead of leaking the exit
        return int(exc.code or 0)
    try:
        return args.func(args)
    except InvariantError as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def run() -> None:
    sys.exit(main())


# ---------------------------------------------------------------------------
# argument plumbing


def _glue_values(argv: list[str]) -> list[str]:
    # Join "--c -3/4" into "--c=-3/4" so values with a leading minus are
    # never mistaken for option strings.
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _VALUE_FLAGS and i + 1 < len(argv):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def _build_parser() -> _Parser:
    parser = _Parser(prog="scalarverma", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def case_flags(p: _Parser) -> None:
        p.add_argument("--case", required=True, choices=CASE_TAGS, help="case tag")
        p.add_argument("--p", help="first AIII parameter")
        p.add_argument("--q", help="second AIII parameter")
        p.add_argument("--n", help="rank parameter for CI/BI/DI/DIII")

    p = sub.add_parser("classify", help="decide one scalar parameter")
    case_flags(p)
    p.add_argument("--c", required=True, help="scalar parameter, as p or p/q")
    p.add_argument("--format", choices=("json", "pretty"), default="pretty")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("scan", help="sweep a c-window on a fixed lattice")
    case_flags(p)
    p.add_argument("--window", required=True, help="c-window, as lo..hi")
    p.add_argument("--step", default="1/6", help="lattice step (default 1/6)")
    p.add_argument("--format", choices=("tsv", "json"), default="tsv")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("table", help="print one exceptional-case reference table")
    p.add_argument("--table", required=True, type=int, choices=(1, 2, 3, 4))
    p.add_argument("--a", help="line parameter for tables 3 and 4 (table 4 default -7)")
    p.add_argument("--format", choices=("pretty", "tsv", "json"), default="pretty")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser(
        "crosscheck", help="compare the oracle against the closed-form sets"
    )
    case_flags(p)
    p.add_argument("--window", help="c-window lo..hi (default: around the reduction range)")
    p.add_argument("--step", default="1/6", help="lattice step (default 1/6)")
    p.add_argument("--format", choices=("pretty", "json"), default="pretty")
    p.set_defaults(func=cmd_crosscheck)

    p = sub.add_parser("datum-dump", help="emit the full root datum as JSON")
    case_flags(p)
    p.set_defaults(func=cmd_datum_dump)

    return parser


def _parse_int(label: str, text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise ValueError(f"{label} must be an integer, got {text!r}")


def _parse_int_range(label: str, text: str) -> list[int]:
    if ".." in text:
        lo_s, hi_s = text.split("..", 1)
        lo, hi = _parse_int(label, lo_s), _parse_int(label, hi_s)
        if hi < lo:
            raise ValueError(f"empty {label} range {text!r}")
        return list(range(lo, hi + 1))
    return [_parse_int(label, text)]


def _single_case(args) -> HermitianCase:
    cases = _case_family(args, ranges=False)
    return cases[0]


def _case_family(args, ranges: bool) -> list[HermitianCase]:
    tag = args.case
    parse = _parse_int_range if ranges else (lambda label, s: [_parse_int(label, s)])
    if tag == "AIII":
        if args.p is None or args.q is None:
            raise ValueError("AIII requires --p and --q")
        if args.n is not None:
            raise ValueError("AIII does not take --n")
        return [
            HermitianCase(tag, p=p, q=q)
            for p in parse("--p", args.p)
            for q in parse("--q", args.q)
        ]
    if tag in ("CI", "BI", "DI", "DIII"):
        if args.n is None:
            raise ValueError(f"{tag} requires --n")
        if args.p is not None or args.q is not None:
            raise ValueError(f"{tag} does not take --p/--q")
        return [HermitianCase(tag, n=n) for n in parse("--n", args.n)]
    if args.p is not None or args.q is not None or args.n is not None:
        raise ValueError(f"{tag} takes no parameters")
    return [HermitianCase(tag)]


def _parse_window(text: str) -> tuple[Fraction, Fraction]:
    if ".." not in text:
        raise ValueError(f"window must be lo..hi, got {text!r}")
    lo_s, hi_s = text.split("..", 1)
    lo, hi = parse_rational(lo_s), parse_rational(hi_s)
    if hi < lo:
        raise ValueError(f"empty window {text!r}")
    return lo, hi


def _grid(lo: Fraction, hi: Fraction, step: Fraction) -> list[Fraction]:
    if step <= 0:
        raise ValueError("step must be positive")
    out = []
    k = math.ceil(lo / step)
    while k * step <= hi:
        out.append(k * step)
        k += 1
    return out


def _thread_count() -> int:
    raw = os.environ.get("GVM_THREADS")
    if raw is None or not raw.strip():
        return 0
    try:
        v = int(raw.strip())
    except ValueError:
        raise ValueError(f"GVM_THREADS must be a nonnegative integer, got {raw!r}")
    if v < 0:
        raise ValueError(f"GVM_THREADS must be a nonnegative integer, got {raw!r}")
    return v


def _map_points(fn, points):
    t = _thread_count()
    if t > 1 and len(points) > 1:
        with ThreadPoolExecutor(max_workers=t) as pool:
            return list(pool.map(fn, points))
    return [fn(x) for x in points]


# ---------------------------------------------------------------------------
# serialization helpers


def _w(w: Weight) -> list[str]:
    return [format_rational(x) for x in w]


def _case_json(case: HermitianCase) -> dict:
    out: dict = {"tag": case.tag}
    if case.tag == "AIII":
        out["p"], out["q"] = case.p, case.q
    elif case.n is not None:
        out["n"] = case.n
    return out


def _class_json(group, with_detail: bool) -> dict:
    if with_detail:
        members = [
            {
                "beta": _w(m.beta),
                "level": format_rational(m.level),
                "parity": "odd" if m.chamber.parity else "even",
                "steps": m.chamber.steps,
            }
            for m in group.members
        ]
    else:
        members = [_w(m.beta) for m in group.members]
    return {"rep": _w(group.rep), "net_sign": group.net_sign, "members": members}


# ---------------------------------------------------------------------------
# classify


def _classify_payload(case: HermitianCase, c: Fraction) -> dict:
    datum = build_datum(case)
    verdict = classify_scalar(datum, c)
    line = special_line(datum, scalar_parameter_weight(datum, c))
    return {
        "case": _case_json(case),
        "label": case.label,
        "c": format_rational(c),
        "z": format_rational(line.z),
        "lambda0": _w(line.lambda0),
        "verdict": verdict.verdict,
        "route": verdict.route,
        "s_lambda_size": len(verdict.terms),
        "s_lambda": [_w(t.beta) for t in verdict.terms],
        "singular": [_w(t.beta) for t in verdict.terms if not t.chamber.is_regular],
        "classes": [_class_json(g, with_detail=True) for g in verdict.certificate],
        "surviving_classes": [
            _class_json(g, with_detail=False) for g in verdict.surviving
        ],
        "witness": _w(verdict.witness) if verdict.witness is not None else None,
    }


def cmd_classify(args) -> int:
    case = _single_case(args)
    c = parse_rational(args.c)
    payload = _classify_payload(case, c)
    if args.format == "json":
        print(json.dumps(payload, indent=2))
        return 0
    print(f"{payload['label']}  c = {payload['c']}  (z = {payload['z']})")
    print(f"verdict: {payload['verdict']}   route: {payload['route']}")
    print(f"base point: {_w_pretty_from(payload['lambda0'])}")
    print(
        f"support: {payload['s_lambda_size']} roots, "
        f"{len(payload['singular'])} on walls"
    )
    for g in payload["classes"]:
        betas = ", ".join(
            f"{_w_pretty_from(m['beta'])} ({m['parity']})" for m in g["members"]
        )
        print(f"  class rep {_w_pretty_from(g['rep'])}  net {g['net_sign']:+d}: {betas}")
    if payload["witness"] is not None:
        print(f"witness: {_w_pretty_from(payload['witness'])}")
    return 0


def _w_pretty_from(strs: list[str]) -> str:
    return "[" + ", ".join(strs) + "]"


# ---------------------------------------------------------------------------
# scan


def _scan_row(case: HermitianCase, datum, constants, offset, c: Fraction) -> dict:
    verdict = classify_scalar(datum, c)
    z = c + offset
    return {
        "case": case.label,
        "c": c,
        "z": z,
        "verdict": verdict.verdict,
        "route": verdict.route,
        "abc_screen": abc_verdict(constants, z),
        "closed_form": closed_form_reducible(case, c),
        "agree": (verdict.verdict == REDUCIBLE) == closed_form_reducible(case, c),
    }


def cmd_scan(args) -> int:
    case = _single_case(args)
    lo, hi = _parse_window(args.window)
    step = parse_rational(args.step)
    datum = build_datum(case)
    constants = abc_constants(case)
    offset = line_offset(case)
    rows = _map_points(
        lambda c: _scan_row(case, datum, constants, offset, c), _grid(lo, hi, step)
    )
    rows.sort(key=lambda r: r["c"])
    if args.format == "json":
        payload = {
            "case": _case_json(case),
            "label": case.label,
            "window": [format_rational(lo), format_rational(hi)],
            "step": format_rational(step),
            "rows": [
                {
                    **r,
                    "c": format_rational(r["c"]),
                    "z": format_rational(r["z"]),
                }
                for r in rows
            ],
        }
        print(json.dumps(payload, indent=2))
        return 0
    print("case\tc\tz\tverdict\troute\tabc_screen\tclosed_form\tagree")
    for r in rows:
        print(
            f"{r['case']}\t{format_rational(r['c'])}\t{format_rational(r['z'])}"
            f"\t{r['verdict']}\t{r['route']}\t{r['abc_screen']}"
            f"\t{str(r['closed_form']).lower()}\t{str(r['agree']).lower()}"
        )
    return 0


# ---------------------------------------------------------------------------
# table


def _all_patterns(parity: int) -> list[str]:
    pats = []
    for m in range(32):
        v = tuple((m >> k) & 1 for k in range(5))
        if sum(v) % 2 == parity:
            pats.append(pattern_string(tuple(1 if x == 0 else -1 for x in v)))
    pats.sort(key=lambda s: (s.count("-"), tuple(i for i, ch in enumerate(s) if ch == "-")))
    return pats


def _table_rows(table_id: int, a_value: Fraction | None):
    if table_id in (1, 2):
        datum = build_datum(HermitianCase("EIII"))
        z = Fraction(9) if table_id == 1 else Fraction(10)
        c = z - line_offset(datum.case)
        lam = scalar_parameter_weight(datum, c)
        mu = add(lam, datum.rho)
        support = set(jantzen_support(datum, lam))
        header = ("pattern", "e1", "e2", "e3", "e4", "e5")
        rows = []
        for pat in _all_patterns(0):
            beta = sign_pattern_root(pat, -1)
            if beta not in support:
                continue
            image = reflect(mu, beta)
            rows.append((pat, tuple(image[:5])))
        meta = {"case": "EIII", "z": format_rational(z)}
        return header, rows, meta

    datum = build_datum(HermitianCase("EVII"))
    lam = scalar_parameter_weight(datum, a_value)
    mu = add(lam, datum.rho)
    rows = []
    if table_id == 3:
        header = ("pattern", "e6", "e7", "e8", "theta")
        for pat in _all_patterns(1):
            beta = sign_pattern_root(pat, 1)
            image = reflect(mu, beta)
            rows.append((pat, (image[5], image[6], image[7], theta_pairing(datum, image))))
    else:
        header = ("pattern", "e1", "e2", "e3", "e4", "e5")
        for pat in _all_patterns(1):
            if pat == "-----":
                continue
            beta = sign_pattern_root(pat, 1)
            image = reflect(mu, beta)
            rows.append((pat, tuple(image[:5])))
    meta = {"case": "EVII", "a": format_rational(a_value)}
    return header, rows, meta


def cmd_table(args) -> int:
    if args.table in (1, 2):
        if args.a is not None:
            raise ValueError(f"table {args.table} is at a fixed parameter; drop --a")
        a_value = None
    elif args.table == 3:
        if args.a is None:
            raise ValueError("table 3 requires --a")
        a_value = parse_rational(args.a)
    else:
        a_value = parse_rational(args.a) if args.a is not None else Fraction(-7)

    header, rows, meta = _table_rows(args.table, a_value)
    if args.format == "json":
        payload = {
            "table": args.table,
            **meta,
            "columns": list(header),
            "rows": [
                {"pattern": pat, "values": [format_rational(v) for v in vals]}
                for pat, vals in rows
            ],
        }
        print(json.dumps(payload, indent=2))
        return 0
    if args.format == "tsv":
        print("\t".join(header))
        for pat, vals in rows:
            print(pat + "\t" + "\t".join(format_rational(v) for v in vals))
        return 0
    tag = ", ".join(f"{k} = {v}" for k, v in meta.items())
    print(f"table {args.table}  ({tag})")
    cells = [[pat] + [format_rational(v) for v in vals] for pat, vals in rows]
    widths = [
        max(len(header[i]), max(len(row[i]) for row in cells)) for i in range(len(header))
    ]
    print("  ".join(h.rjust(w) for h, w in zip(header, widths)))
    for row in cells:
        print("  ".join(x.rjust(w) for x, w in zip(row, widths)))
    return 0


# ---------------------------------------------------------------------------
# crosscheck


def _crosscheck_instance(case: HermitianCase, window, step: Fraction) -> dict:
    datum = build_datum(case)
    constants = abc_constants(case)
    offset = line_offset(case)
    if window is None:
        lo = constants.a - 5 - offset
        hi = constants.b + 10 - offset
    else:
        lo, hi = window
    points = _grid(lo, hi, step)
    rows = _map_points(
        lambda c: _scan_row(case, datum, constants, offset, c), points
    )
    rows.sort(key=lambda r: r["c"])
    mismatches = [r for r in rows if not r["agree"]]
    contradictions = [
        r
        for r in rows
        if (r["abc_screen"] == KNOWN_SIMPLE and r["verdict"] == REDUCIBLE)
        or (r["abc_screen"] == KNOWN_REDUCIBLE and r["verdict"] != REDUCIBLE)
    ]
    return {
        "case": case,
        "window": (lo, hi),
        "rows": rows,
        "mismatches": mismatches,
        "contradictions": contradictions,
    }


def cmd_crosscheck(args) -> int:
    cases = _case_family(args, ranges=True)
    window = _parse_window(args.window) if args.window is not None else None
    step = parse_rational(args.step)
    results = [_crosscheck_instance(case, window, step) for case in cases]
    ok = all(not r["mismatches"] and not r["contradictions"] for r in results)

    if args.format == "json":
        payload = {
            "pass": ok,
            "instances": [
                {
                    "case": _case_json(r["case"]),
                    "label": r["case"].label,
                    "window": [format_rational(x) for x in r["window"]],
                    "step": format_rational(step),
                    "points": len(r["rows"]),
                    "reducible": sum(x["verdict"] == REDUCIBLE for x in r["rows"]),
                    "mismatches": [format_rational(x["c"]) for x in r["mismatches"]],
                    "contradictions": [
                        format_rational(x["c"]) for x in r["contradictions"]
                    ],
                }
                for r in results
            ],
        }
        print(json.dumps(payload, indent=2))
        return 0 if ok else 2

    total = 0
    for r in results:
        total += len(r["rows"])
        lo, hi = r["window"]
        print(
            f"{r['case'].label}: window {format_rational(lo)}..{format_rational(hi)}"
            f" points={len(r['rows'])}"
            f" reducible={sum(x['verdict'] == REDUCIBLE for x in r['rows'])}"
            f" mismatches={len(r['mismatches'])}"
            f" contradictions={len(r['contradictions'])}"
        )
        for x in r["mismatches"]:
            print(
                f"  MISMATCH c={format_rational(x['c'])}: oracle {x['verdict']}"
                f" vs closed form {str(x['closed_form']).lower()}"
            )
        for x in r["contradictions"]:
            print(
                f"  CONTRADICTION c={format_rational(x['c'])}: oracle {x['verdict']}"
                f" vs screen {x['abc_screen']}"
            )
    print(f"crosscheck: {'PASS' if ok else 'FAIL'} ({len(results)} instances, {total} points)")
    return 0 if ok else 2


# ---------------------------------------------------------------------------
# datum dump


def cmd_datum_dump(args) -> int:
    case = _single_case(args)
    datum = build_datum(case)
    payload = {
        "case": _case_json(case),
        "label": case.label,
        "ambient_dim": datum.ambient_dim,
        "simple_roots": [_w(a) for a in datum.simple_roots],
        "levi_simples": [_w(a) for a in datum.levi_simples],
        "noncompact_simple": _w(datum.noncompact_simple),
        "nilradical_roots": [_w(b) for b in datum.nilradical_roots],
        "rho": _w(datum.rho),
        "gamma": _w(datum.gamma),
        "zeta": _w(datum.zeta),
        "theta_u": _w(datum.theta_u),
    }
    notes = case_notes(case)
    if notes:
        payload["notes"] = list(notes)
    print(json.dumps(payload, indent=2))
    return 0


if __name__ == "__main__":
    run()
