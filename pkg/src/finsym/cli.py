"""Command-line surface: parse the mini-language, dispatch, emit JSON/CSV/plain.

Every run is deterministic: no randomness anywhere, fixed iteration orders,
and sorted JSON keys.  Exact rationals print as "a/b"; floats print with 15
significant digits.  Exit codes: 0 success, 2 input error, 3 guard exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import anomaly, complexes, fusion, ising, pathintegral, tqft2d
from .groups import FiniteAbelianGroup, named_group, parse_abelian
from .limits import GuardExceeded


def fmt_fraction(x) -> str:
    f = Fraction(x)
    return f"{f.numerator}/{f.denominator}"


def fmt_float(x: float) -> str:
    return format(float(x), ".15g")


def parse_fraction(text: str) -> Fraction:
    return Fraction(text.strip())


def parse_manifold(text: str):
    name, _, param = text.partition(":")
    if param:
        return complexes.preset(name, int(param))
    return complexes.preset(name)


def parse_target(text: str) -> pathintegral.PiFiniteTarget:
    head, _, group_name = text.partition(":")
    if not group_name:
        raise ValueError(f"target must look like B2:Z2, got {text!r}")
    degree = int(head[1:]) if len(head) > 1 else 1
    if head[0] != "B" or degree < 1:
        raise ValueError(f"cannot parse target {text!r}")
    if group_name in ("S3", "D4", "Q8"):
        return pathintegral.PiFiniteTarget(named_group(group_name), degree)
    return pathintegral.PiFiniteTarget(parse_abelian(group_name), degree)


def _parse_subgroup(group: FiniteAbelianGroup, text: str):
    text = text.strip()
    if text in ("0", "trivial"):
        return []
    if text in ("full", str(group)):
        return [
            tuple(1 if j == i else 0 for j in range(group.rank))
            for i in range(group.rank)
        ]
    gens = []
    for part in text.split(";"):
        gens.append(tuple(int(x) for x in part.split(",")))
    return gens


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise SystemExit(2)


def build_parser() -> _Parser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "plain", "csv"), default="json")
    common.add_argument("--max-enum", type=int, default=None,
                        help="lower the enumeration guard (hard ceiling 2^24)")
    common.add_argument("--threads", type=int, default=1,
                        help="accepted for interface stability; computations "
                             "are deterministic and single-threaded")

    parser = _Parser(prog="finsym", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True,
                                parser_class=_Parser)

    def add_parser(name, **kwargs):
        return sub.add_parser(name, parents=[common], **kwargs)

    p = add_parser("cohomology", help="H^q(manifold; A) for a preset manifold")
    p.add_argument("--manifold", required=True)
    p.add_argument("--coefficients", required=True)
    p.add_argument("--degree", type=int, required=True)

    p = add_parser("partition", help="finite homotopy partition function")
    p.add_argument("--target", required=True, help="e.g. B2:Z2, B1:S3")
    p.add_argument("--manifold", required=True, help="e.g. torus:5, surface:2")

    p = add_parser("bordism", help="exact bordism matrix of the 2d gauge theory")
    p.add_argument("--group", required=True)
    p.add_argument("--shape", required=True,
                   choices=sorted(("cylinder", "pants", "copants", "cap", "cup",
                                   "torus", "sphere")))

    p = add_parser("fusion", help="fusion-ring reports and obstructions")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--ty", help="Tambara-Yamagami ring of an abelian group")
    src.add_argument("--group-ring", help="group ring of a preset group")
    p.add_argument("--report", default="dims,obstructions",
                   help="comma list from: dims, obstructions, table")

    p = add_parser("lines", help="line lattice selected by (A', q)")
    p.add_argument("--A", required=True, dest="ambient")
    p.add_argument("--Aprime", required=True, dest="sub",
                   help="'0', 'full', or generators like '1,0;0,2'")
    p.add_argument("--q", default="", help="comma list of q(generator) fractions")
    p.add_argument("--q-cross", default="", dest="q_cross",
                   help="cross terms like '0,1:1/2;0,2:1/4'")

    p = add_parser("anyons", help="anyon data of the minimal Z_N theory")
    p.add_argument("--N", type=int, required=True, dest="n")
    p.add_argument("--p", type=int, required=True)

    p = add_parser("anomaly", help="anomaly arithmetic")
    p.add_argument("--ym-theta-pi", type=int, dest="ym", default=None,
                   help="time reversal at theta = pi for SU(N)")
    p.add_argument("--fractional-instanton", nargs=2, type=int, default=None,
                   dest="frac", metavar=("N", "P"))
    p.add_argument("--spin", action="store_true",
                   help="restrict the Pontryagin input to spin manifolds")

    p = add_parser("gauss", help="Z_N Gauss-sum self-duality scalar")
    p.add_argument("--N", type=int, required=True, dest="n")
    p.add_argument("--p", type=int, required=True)

    p = add_parser("ising", help="square-torus Ising partition functions")
    p.add_argument("--L", type=int, required=True, dest="length")
    p.add_argument("--T", type=int, required=True, dest="time_steps")
    p.add_argument("--beta", type=float, default=None)
    p.add_argument("--sectors", choices=("all", "trivial"), default="all")
    p.add_argument("--gauge", action="store_true")
    p.add_argument("--method", choices=("bruteforce", "transfer"),
                   default="bruteforce")
    p.add_argument("--sweep", nargs=3, default=None,
                   metavar=("START", "STOP", "COUNT"),
                   help="beta grid for CSV export")

    p = add_parser("problem1", help="the d=2 pair-of-pants exercise")
    p.add_argument("--group", default="Z2")
    return parser


def _matrix_doc(mat: tqft2d.BordismMatrix) -> dict:
    return {
        "source_dim": mat.source.dim,
        "target_dim": mat.target.dim,
        "source_basis": [list(map(list, b)) for b in mat.source.basis],
        "target_basis": [list(map(list, b)) for b in mat.target.basis],
        "matrix": [[fmt_fraction(x) for x in row] for row in mat.entries],
    }


def _run_cohomology(args) -> dict:
    cx = parse_manifold(args.manifold)
    coeffs = parse_abelian(args.coefficients)
    h = complexes.cohomology(cx, coeffs, args.degree)
    return {
        "manifold": args.manifold,
        "coefficients": str(coeffs),
        "degree": args.degree,
        "group": str(h.group),
        "order": h.order,
    }


def _run_partition(args) -> dict:
    target = parse_target(args.target)
    cx = parse_manifold(args.manifold)
    value = pathintegral.partition(target, cx)
    return {"target": args.target, "manifold": args.manifold,
            "value": fmt_fraction(value)}


def _run_bordism(args) -> dict:
    group = parse_abelian(args.group)
    mat = tqft2d.bordism_matrix(tqft2d.bordism_preset(args.shape), group)
    doc = {"shape": args.shape, "group": str(group)}
    doc.update(_matrix_doc(mat))
    return doc


def _run_fusion(args) -> dict:
    if args.ty is not None:
        ring = fusion.tambara_yamagami(named_group(args.ty))
        doc = {"ring": f"TY({args.ty})"}
    else:
        ring = fusion.group_ring(named_group(args.group_ring))
        doc = {"ring": f"C[{args.group_ring}]"}
    doc["labels"] = list(ring.labels)
    wanted = [w.strip() for w in args.report.split(",") if w.strip()]
    for item in wanted:
        if item == "dims":
            doc["dims"] = [fmt_float(d) for d in fusion.pf_dimensions(ring)]
        elif item == "obstructions":
            ff = fusion.fiber_functor_obstruction(ring)
            sq = fusion.square_root_obstruction(ring)
            doc["fiber_functor"] = {"verdict": ff.verdict, "witness": ff.witness,
                                    "detail": ff.detail}
            doc["square_root"] = {"verdict": sq.verdict, "detail": sq.detail}
        elif item == "table":
            doc["N"] = [[list(row) for row in plane] for plane in ring.n_tensor]
            doc["dual"] = list(ring.dual)
            doc["unit"] = ring.unit
        else:
            raise ValueError(f"unknown report item {item!r}")
    return doc


def _run_lines(args) -> dict:
    ambient = parse_abelian(args.ambient)
    gens = _parse_subgroup(ambient, args.sub)
    gen_values = [parse_fraction(v) for v in args.q.split(",") if v.strip()]
    if len(gen_values) != len(gens):
        raise ValueError("need one --q value per subgroup generator")
    cross = {}
    for chunk in args.q_cross.split(";"):
        if not chunk.strip():
            continue
        pair, _, val = chunk.partition(":")
        i, j = (int(x) for x in pair.split(","))
        cross[(i, j)] = parse_fraction(val)
    lattice = anomaly.allowed_lines_from_generator_values(
        ambient, gens, gen_values, cross
    )
    return {
        "A": str(ambient),
        "Aprime_generators": [list(g) for g in gens],
        "pairs": [[list(m), list(e)] for m, e in lattice.pairs],
        "count": len(lattice.pairs),
    }


def _run_anyons(args) -> dict:
    table = anomaly.minimal_tft_data(anomaly.MinimalTFT(args.n, args.p))
    return {
        "N": args.n,
        "p": args.p,
        "anyons": [
            {"k": k, "spin": fmt_fraction(s), "charge": c}
            for k, (s, c) in enumerate(zip(table.spins, table.charges))
        ],
        "quantum_dim": fmt_float(anomaly.defect_quantum_dim(args.n)),
    }


def _run_anomaly(args) -> dict:
    doc = {}
    if args.ym is None and args.frac is None:
        raise ValueError("choose --ym-theta-pi and/or --fractional-instanton")
    if args.ym is not None:
        verdict = anomaly.ym_theta_pi_anomaly(args.ym)
        if verdict.anomalous:
            doc["verdict"] = "anomalous"
        else:
            doc["verdict"] = "counterterm"
            doc["k"] = verdict.counterterm
    if args.frac is not None:
        n, p = args.frac
        doc["fractional_instanton"] = fmt_fraction(
            anomaly.fractional_instanton(n, p, spin=args.spin)
        )
    return doc


def _run_gauss(args) -> dict:
    exact = anomaly.gauss_sum(args.n, args.p)
    direct = anomaly.gauss_sum_direct(args.n, args.p)
    return {
        "N": args.n,
        "p": args.p,
        "value": fmt_fraction(exact),
        "direct_real": fmt_float(direct.real),
        "direct_imag": fmt_float(direct.imag),
    }


def _sector_key(sector) -> str:
    return f"{sector[0]}{sector[1]}"


def _run_ising(args):
    if args.sweep is not None:
        start, stop, count = float(args.sweep[0]), float(args.sweep[1]), int(args.sweep[2])
        if count < 2 or not (start > 0 and stop > start):
            raise ValueError("sweep needs 0 < start < stop and count >= 2")
        betas = [start + i * (stop - start) / (count - 1) for i in range(count)]
    else:
        if args.beta is None:
            raise ValueError("--beta (or --sweep) is required")
        betas = [args.beta]
    rows = []
    for beta in betas:
        lat = ising.IsingLattice(args.length, args.time_steps, beta)
        row = {"beta": beta}
        if args.sectors == "all":
            for sector, z in ising.sector_partitions(lat, method=args.method).items():
                row[f"Z{_sector_key(sector)}"] = z
        else:
            row["Z00"] = (
                ising.partition_bruteforce(lat)
                if args.method == "bruteforce"
                else ising.partition_transfer(lat)
            )
        if args.gauge:
            row["gauged"] = ising.gauged_partition(lat, method=args.method)
        rows.append(row)
    header = list(rows[0])
    csv_rows = [header] + [[fmt_float(r[k]) for k in header] for r in rows]
    if args.sweep is not None:
        doc = {"L": args.length, "T": args.time_steps,
               "sweep": [{k: fmt_float(v) for k, v in r.items()} for r in rows]}
    else:
        doc = {"L": args.length, "T": args.time_steps,
               **{k: fmt_float(v) for k, v in rows[0].items()}}
    return doc, csv_rows


def _run_problem1(args) -> dict:
    report = tqft2d.solve_problem_one(parse_abelian(args.group))
    return {
        "group": report["group"],
        "state_space_dim": report["state_space_dim"],
        "state_space_basis": [list(map(list, b)) for b in report["state_space_basis"]],
        "pants": _matrix_doc(report["pants"]),
        "pants_provenance": report["pants_provenance"],
        "copants": _matrix_doc(report["copants"]),
        "copants_provenance": report["copants_provenance"],
        "cylinder_is_identity": report["cylinder_is_identity"],
        "trace_check": {
            "passed": report["trace_check"].passed,
            "cylinder_trace": fmt_fraction(report["trace_check"].cylinder_trace),
            "closed_torus_value": fmt_fraction(report["trace_check"].closed_torus_value),
        },
    }


def _emit_plain(doc, prefix="") -> list[str]:
    lines = []
    if isinstance(doc, dict):
        for k in doc:
            lines.extend(_emit_plain(doc[k], f"{prefix}{k}." if prefix else f"{k}."))
    elif isinstance(doc, list):
        for i, v in enumerate(doc):
            lines.extend(_emit_plain(v, f"{prefix}{i}."))
    else:
        lines.append(f"{prefix[:-1]} = {doc}")
    return lines


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.threads < 1:
        print("--threads must be >= 1", file=sys.stderr)
        return 2

    runners = {
        "cohomology": _run_cohomology,
        "partition": _run_partition,
        "bordism": _run_bordism,
        "fusion": _run_fusion,
        "lines": _run_lines,
        "anyons": _run_anyons,
        "anomaly": _run_anomaly,
        "gauss": _run_gauss,
        "problem1": _run_problem1,
    }
    saved_guard = os.environ.get("FINSYM_MAX_ENUM")
    try:
        if args.max_enum is not None:
            os.environ["FINSYM_MAX_ENUM"] = str(args.max_enum)
        csv_rows = None
        if args.command == "ising":
            doc, csv_rows = _run_ising(args)
        else:
            doc = runners[args.command](args)
    except GuardExceeded as exc:
        print(f"guard exceeded: {exc}", file=sys.stderr)
        return 3
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    finally:
        if saved_guard is None:
            os.environ.pop("FINSYM_MAX_ENUM", None)
        else:
            os.environ["FINSYM_MAX_ENUM"] = saved_guard

    if args.format == "json":
        print(json.dumps(doc, sort_keys=True, indent=2))
    elif args.format == "plain":
        for line in _emit_plain(doc):
            print(line)
    else:
        if csv_rows is None:
            print("error: CSV output is only available for ising runs", file=sys.stderr)
            return 2
        for row in csv_rows:
            print(",".join(str(x) for x in row))
    return 0


if __name__ == "__main__":
    sys.exit(main())
