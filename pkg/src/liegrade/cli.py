"""Command-line surface.

Subcommands:

  gradings FAMILY RMIN RMAX [--json|--table]
  fixed-points FAMILY RANK I K [--json|--table]
  jordan {invert,cremona,check} --element JSON
  flow limit --model A|B|C|D --n N --k K --dir 0|inf --matrix JSON
  report-tables OUT_DIR

Exit codes: 0 success, 2 argument error, 3 mathematical precondition
failure (non-short grading, singular element, non-isotropic point, ...),
4 resource cap exceeded.  The orbit cap is configurable through the
LIEGRADE_ORBIT_CAP environment variable.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import grassflow, jordan
from .characters import CharacterCapError
from .fixedpoints import chamber_count, enumerate_components  # noqa: F401
from .gradings import NotShortError, classify
from .ratlinalg import SingularMatrixError
from .rootcore import InvalidTypeError, build_root_datum, dynkin
from .weyl import OrbitCapExceeded

PRECONDITION_ERRORS = (
    NotShortError,
    InvalidTypeError,
    SingularMatrixError,
    jordan.SingularElementError,
    jordan.VariantMismatchError,
    grassflow.NotIsotropicError,
    grassflow.NotFixedError,
    grassflow.IndeterminacyError,
)
CAP_ERRORS = (OrbitCapExceeded, CharacterCapError)


def _render_table(rows, header):
    rows = [header] + [[str(x) for x in row] for row in rows]
    widths = [max(len(r[c]) for r in rows) for c in range(len(header))]
    lines = ["  ".join(x.ljust(w) for x, w in zip(row, widths)).rstrip() for row in rows]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# gradings


def cmd_gradings(args):
    reports = classify(args.family, args.rank_min, args.rank_max)
    payload = [g.to_payload() for g in reports]
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        rows = [
            [g.family + str(g.rank), g.node, "yes" if g.is_short else "no",
             {True: "yes", False: "no", None: "-"}[g.is_balanced],
             f"({g.dims[0]},{g.dims[1]},{g.dims[2]})"]
            for g in reports
        ]
        sys.stdout.write(_render_table(rows, ["type", "node", "short", "balanced", "dims"]))
    return 0


def cmd_fixed_points(args):
    datum = build_root_datum(dynkin(args.family, args.rank))
    report = enumerate_components(datum, args.i, args.k)
    if args.json:
        print(report.to_json())
    else:
        rows = [
            [c.mu, c.label, "{" + ",".join(map(str, c.marking)) + "}", c.dim,
             c.nu_minus, c.nu_plus, c.orbit_size]
            for c in report.components
        ]
        print(f"{args.family}{args.rank}({args.k}), action at node {args.i}: "
              f"dim {report.ambient_dim}, delta {report.delta}")
        sys.stdout.write(_render_table(rows, ["mu", "Y", "J", "dim", "nu-", "nu+", "fixed pts"]))
    return 0


# ---------------------------------------------------------------------------
# jordan


def cmd_jordan(args):
    x = jordan.from_json(args.element)
    if args.action == "invert":
        print(jordan.to_json(jordan.jinvert(x)))
    elif args.action == "cremona":
        print(jordan.to_json(jordan.cremona(x)))
    else:  # check
        one = jordan.unit(x)
        results = {
            "unit": jordan.jordan_product(one, x) == x,
            "inverse_axioms": None,
            "involution": None,
            "homogeneity": None,
            "coherence": None,
        }
        if jordan.norm(x) != 0:
            xi = jordan.jinvert(x)
            x2 = jordan.jordan_product(x, x)
            results["inverse_axioms"] = (
                jordan.jordan_product(x, xi) == one and jordan.jordan_product(x2, xi) == x
            )
            results["involution"] = jordan.jinvert(xi) == x
            results["homogeneity"] = all(
                jordan.equivariance_check(x, t) for t in (Fraction(5, 7), -2, Fraction(1, 3))
            )
            results["coherence"] = jordan.scale(jordan.norm(x), xi) == jordan.cremona(x)
        print(json.dumps({"norm": str(jordan.norm(x)), "checks": results}, indent=2))
        if not all(v in (True, None) for v in results.values()):
            return 3
    return 0


# ---------------------------------------------------------------------------
# flow


def _parse_matrix(text):
    data = json.loads(text)
    return [[Fraction(x) for x in row] for row in data]


def _matrix_payload(m):
    return [[str(x) for x in row] for row in m]


def cmd_flow(args):
    matrix = _parse_matrix(args.matrix)
    flow = grassflow.FlowSpec(args.model, args.n)
    point = grassflow.GrassPoint(matrix, args.model, args.n)
    if point.k != args.k:
        raise ValueError(f"matrix has {point.k} columns, expected k = {args.k}")
    limit = grassflow.flow_limit(point, flow, args.dir)
    descriptor = grassflow.component_membership(limit, flow)
    print(json.dumps({
        "limit": _matrix_payload(limit.basis),
        "profile": {str(w): d for w, d in descriptor.profile},
        "mu": descriptor.mu,
    }, indent=2))
    return 0


# ---------------------------------------------------------------------------
# report-tables


def _grading_rows(balanced_only):
    types = (
        [("A", r) for r in range(1, 7)]
        + [("B", r) for r in range(2, 7)]
        + [("C", r) for r in range(2, 7)]
        + [("D", r) for r in range(3, 7)]
        + [("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)]
    )
    rows = []
    for fam, r in types:
        reports = classify(fam, r, r)
        nodes = [g.node for g in reports if (g.is_balanced if balanced_only else g.is_short)]
        rows.append({"type": fam, "rank": r, "nodes": nodes})
    return rows


def _classical_rows():
    cases = []
    for n in (3, 4, 5):
        for i in range(1, n + 1):
            cases.append(("A", n, i))
        cases.append(("B", n, 1))
        cases.append(("C", n, n))
        cases.extend(("D", n, i) for i in (1, n - 1, n) if n >= 3)
    rows = []
    for fam, n, i in cases:
        try:
            datum = build_root_datum(dynkin(fam, n))
        except InvalidTypeError:
            continue
        for k in datum.nodes:
            report = enumerate_components(datum, i, k)
            rows.append(report.to_payload())
    return rows


def _e7_rows():
    datum = build_root_datum(dynkin("E", 7))
    rows = []
    for k in range(1, 8):
        report = enumerate_components(datum, 7, k)
        sink, source = report.sink, report.source
        rows.append({
            "k": k,
            "sink": sink.label,
            "source": source.label,
            "dim": sink.dim,
            "normal_rank": sink.nu_plus,
            "delta": report.delta,
        })
    return rows


def _write(out_dir, name, payload, table_text):
    with open(os.path.join(out_dir, name + ".json"), "w") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")
    with open(os.path.join(out_dir, name + ".txt"), "w") as fh:
        fh.write(table_text)


def cmd_report_tables(args):
    out_dir = args.out_dir
    os.makedirs(out_dir, exist_ok=True)

    short_rows = _grading_rows(balanced_only=False)
    _write(out_dir, "gradings_short", short_rows, _render_table(
        [[r["type"] + str(r["rank"]), ",".join(map(str, r["nodes"])) or "-"] for r in short_rows],
        ["type", "short nodes"]))

    balanced_rows = _grading_rows(balanced_only=True)
    _write(out_dir, "gradings_balanced", balanced_rows, _render_table(
        [[r["type"] + str(r["rank"]), ",".join(map(str, r["nodes"])) or "-"] for r in balanced_rows],
        ["type", "balanced nodes"]))

    e7 = _e7_rows()
    _write(out_dir, "e7_fixedpoints", e7, _render_table(
        [[r["k"], r["sink"], r["source"], r["dim"], r["normal_rank"], r["delta"]] for r in e7],
        ["k", "sink", "source", "dim", "normal rank", "delta"]))

    classical = _classical_rows()
    lines = []
    for rep in classical:
        amb = rep["ambient"]
        head = f'{amb["type"]}{amb["rank"]}({amb["k"]}) i={rep["i"]} dim={rep["dim"]} delta={rep["delta"]}'
        comps = "; ".join(
            f'mu={c["mu"]} {c["type"]} dim={c["dim"]} nu=({c["nu_minus"]},{c["nu_plus"]})'
            for c in rep["components"]
        )
        lines.append(head + ": " + comps)
    _write(out_dir, "classical_fixedpoints", classical, "\n".join(lines) + "\n")
    print(f"wrote 8 files to {out_dir}")
    return 0


# ---------------------------------------------------------------------------


def build_parser():
    parser = argparse.ArgumentParser(prog="liegrade")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gradings", help="classify short/balanced gradings")
    p.add_argument("family", choices=list("ABCDEFG"))
    p.add_argument("rank_min", type=int)
    p.add_argument("rank_max", type=int)
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--table", action="store_true")
    p.set_defaults(func=cmd_gradings)

    p = sub.add_parser("fixed-points", help="fixed-point data of a grading action")
    p.add_argument("family", choices=list("ABCDEFG"))
    p.add_argument("rank", type=int)
    p.add_argument("i", type=int, help="grading node")
    p.add_argument("k", type=int, help="marked node of the variety")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--table", action="store_true")
    p.set_defaults(func=cmd_fixed_points)

    p = sub.add_parser("jordan", help="Jordan algebra inversion / Cremona maps")
    p.add_argument("action", choices=["invert", "cremona", "check"])
    p.add_argument("--element", required=True, help='JSON element, e.g. {"kind":"full","entries":[["1","0"],["0","1"]]}')
    p.set_defaults(func=cmd_jordan)

    p = sub.add_parser("flow", help="matrix-model flows on Grassmannians")
    flow_sub = p.add_subparsers(dest="flow_command", required=True)
    q = flow_sub.add_parser("limit")
    q.add_argument("--model", required=True, choices=["A", "B", "C", "D"])
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--k", type=int, required=True)
    q.add_argument("--dir", required=True, choices=["0", "inf"])
    q.add_argument("--matrix", required=True, help="JSON array (ambient x k) of rationals as strings")
    q.set_defaults(func=cmd_flow)

    p = sub.add_parser("report-tables", help="regenerate the reference tables")
    p.add_argument("out_dir")
    p.set_defaults(func=cmd_report_tables)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except PRECONDITION_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except CAP_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except (ValueError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
