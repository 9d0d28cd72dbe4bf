"""Command-line front end.

    slfmirror orbit   --type A2 --h0 1,0 --h 1,1
    slfmirror diamond flag|reflect|check ...
    slfmirror fukaya  lg2 | from-orbit ...
    slfmirror mirror  fiber --level 0 | critical-levels | consistency

JSON goes to stdout (or ``--out``). Every rational is written as "p/q" in
lowest terms with q > 0. Exit codes: 0 success, 2 input error, 3 orbit cap
exceeded (size-only report printed), 4 degenerate input (report printed).
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from pathlib import Path

from .fukaya import DirectedCategory, category_from_slf, hom_euler, lg2_category
from .hodge import HodgeDiamond, diamond_checks, flag_diamond, mirror_reflect
from .mirror import ComplexRational, classify_fiber, consistency_table, critical_levels, mirror_consistency_report
from .roots import DEFAULT_ORBIT_CAP, CartanType, InputError, OrbitTooLarge, RootSystem, build_root_system
from .slf import LEFSCHETZ, SLFReport, slf_report

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_CAP = 3
EXIT_DEGENERATE = 4

CAP_ENV = "SLFMIRROR_ORBIT_CAP"
SIMPLE_ROOT = "simple-root"
FUNDAMENTAL_WEIGHT = "fundamental-weight"


def fmt(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def fmt_vec(v) -> list[str]:
    return [fmt(x) for x in v]


def parse_rational(token: str) -> Fraction:
    try:
        return Fraction(token.strip())
    except (ValueError, ZeroDivisionError):
        raise InputError(f"bad rational {token!r}") from None


def parse_vector(text: str) -> list[Fraction]:
    if not text.strip():
        raise InputError("empty vector")
    return [parse_rational(tok) for tok in text.split(",")]


def parse_theta(text: str | None, rank: int) -> frozenset[int]:
    """1-based simple-root labels, comma separated; '' means the empty set."""
    if not text:
        return frozenset()
    out = set()
    for tok in text.split(","):
        try:
            i = int(tok)
        except ValueError:
            raise InputError(f"bad theta label {tok!r}") from None
        if not 1 <= i <= rank:
            raise InputError(f"theta label {i} outside 1..{rank}")
        out.add(i - 1)
    return frozenset(out)


def parse_hom(values: list[str] | None) -> dict[tuple[int, int], list[tuple[int, int]]]:
    """Each entry is 'i,j:deg:rank[,deg:rank...]', e.g. '0,1:0:1,1:1'."""
    data: dict[tuple[int, int], list[tuple[int, int]]] = {}
    for entry in values or []:
        pair, sep, rest = entry.partition(":")
        try:
            i, j = (int(x) for x in pair.split(","))
            entries = []
            for item in rest.split(",") if sep else []:
                deg, rank = item.split(":")
                entries.append((int(deg), int(rank)))
        except ValueError:
            raise InputError(f"bad --hom entry {entry!r} (expected i,j:deg:rank[,deg:rank...])") from None
        data.setdefault((i, j), []).extend(entries)
    return data


def default_cap() -> int:
    raw = os.environ.get(CAP_ENV)
    if raw is None:
        return DEFAULT_ORBIT_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise InputError(f"{CAP_ENV}={raw!r} is not an integer") from None
    if cap <= 0:
        raise InputError(f"{CAP_ENV} must be positive")
    return cap


def _root_system(args) -> RootSystem:
    return build_root_system(CartanType.parse(args.type))


def _to_simple_root(rs: RootSystem, coords: list[Fraction], basis: str) -> tuple:
    if len(coords) != rs.rank:
        raise InputError(f"vector {','.join(map(str, coords))} has length {len(coords)}, rank is {rs.rank}")
    if basis == FUNDAMENTAL_WEIGHT:
        return rs.from_weight_basis(coords)
    return tuple(coords)


def report_to_json(report: SLFReport, rs: RootSystem, input_basis: str) -> dict:
    out = {
        "kind": "slf_report",
        "cartan_type": report.cartan_type,
        "coordinates": SIMPLE_ROOT,
        "input_basis": input_basis,
        "h0": fmt_vec(report.h0),
        "h": fmt_vec(report.h),
        "h0_weight_coords": fmt_vec(rs.to_weight_basis(report.h0)),
        "h_weight_coords": fmt_vec(rs.to_weight_basis(report.h)),
        "h_regular": report.h_regular,
        "regularity_witness": None if report.regularity_witness is None else list(report.regularity_witness),
        "theta": sorted(i + 1 for i in report.theta.theta),
        "stabilizer_order": report.theta.stabilizer_order,
        "orbit_index": report.theta.orbit_index,
        "weyl_order": report.weyl_order,
        "k": report.k,
        "points_truncated": report.points_truncated,
        "critical_points": None if report.critical_points is None else [fmt_vec(p) for p in report.critical_points],
        "critical_values": None if report.critical_values is None else fmt_vec(report.critical_values),
        "value_collisions": report.value_collisions,
        "orbit_dim_complex": report.orbit_dim_complex,
        "orbit_dim_real": report.orbit_dim_real,
        "flag_dim_real": report.flag_dim_real,
        "flag_betti": report.flag_betti,
        "fiber_betti": report.fiber_betti,
        "middle_betti": report.middle_betti,
        "status": report.status,
        "explanation": report.explanation,
        "notes": report.notes,
    }
    return out


def report_text(report: SLFReport) -> str:
    lines = [
        f"type {report.cartan_type}   H0 = {_vec_str(report.h0)}   H = {_vec_str(report.h)}   (simple-root coords)",
        f"status: {report.status}",
        f"k = {report.k} critical points (|W| = {report.weyl_order}, |W_Theta| = {report.theta.stabilizer_order})",
        f"orbit dimension: complex {report.orbit_dim_complex}, real {report.orbit_dim_real}",
        f"flag Betti numbers:  {report.flag_betti}",
        f"fiber Betti numbers: {report.fiber_betti}   (middle = {report.middle_betti})",
    ]
    if report.critical_points is not None:
        lines.append("critical points -> values:")
        for p, v in zip(report.critical_points, report.critical_values):
            lines.append(f"  {_vec_str(p)} -> {v}")
    lines.extend(f"! {e}" for e in report.explanation)
    lines.extend(f"note: {n}" for n in report.notes)
    return "\n".join(lines)


def _vec_str(v) -> str:
    return "(" + ", ".join(str(x) for x in v) + ")"


def _orbit_report(args) -> tuple[SLFReport, RootSystem]:
    rs = _root_system(args)
    h0 = _to_simple_root(rs, parse_vector(args.h0), args.basis)
    h = _to_simple_root(rs, parse_vector(args.h), args.basis)
    cap = args.cap if args.cap is not None else default_cap()
    if cap <= 0:
        raise InputError("--cap must be positive")
    return slf_report(rs, h0, h, cap), rs


def cmd_orbit(args) -> tuple[dict, str, int]:
    report, rs = _orbit_report(args)
    code = EXIT_OK
    if report.points_truncated:
        code = EXIT_CAP
    elif report.status != LEFSCHETZ:
        code = EXIT_DEGENERATE
    return report_to_json(report, rs, args.basis), report_text(report), code


def _read_diamond(path: str) -> HodgeDiamond:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from None
    return HodgeDiamond.from_json(data)


def cmd_diamond(args) -> tuple[dict, str, int]:
    if args.diamond_cmd == "flag":
        rs = _root_system(args)
        theta = parse_theta(args.theta, rs.rank)
        cap = args.cap if args.cap is not None else default_cap()
        d = flag_diamond(rs, theta, cap)
        return d.to_json(), d.pretty(), EXIT_OK
    d = _read_diamond(args.input)
    if args.diamond_cmd == "reflect":
        r = mirror_reflect(d)
        return r.to_json(), r.pretty(), EXIT_OK
    checks = diamond_checks(d)
    payload = {
        "kind": "diamond_checks",
        "diamond": d.to_json(),
        "reflected": mirror_reflect(d).to_json(),
        "checks": checks.to_json(),
        "note": "vampire_flag: the reflected diamond fails Serre symmetry, conjugation "
        "symmetry or h^{0,0} = 1 (a necessary-condition screen only)",
    }
    text = d.pretty() + "\n\n" + "\n".join(f"{k}: {v}" for k, v in checks.to_json().items())
    return payload, text, EXIT_OK


def category_text(cat: DirectedCategory) -> str:
    lines = [f"objects: {', '.join(cat.objects)}"]
    for i in range(cat.size):
        for j in range(cat.size):
            ranks = cat.hom_ranks(i, j)
            if ranks:
                graded = " + ".join(f"Z[{-d}]^{r}" if d else f"Z^{r}" for d, r in ranks)
                lines.append(f"Hom({cat.objects[i]}, {cat.objects[j]}) = {graded}   (euler {hom_euler(cat, i, j)})")
    lines.append(f"products vanish except identity compositions: {cat.products_all_vanish_except_identity}")
    return "\n".join(lines)


def cmd_fukaya(args) -> tuple[dict, str, int]:
    if args.fukaya_cmd == "lg2":
        cat = lg2_category()
    else:
        report, _ = _orbit_report(args)
        cat = category_from_slf(report, parse_hom(args.hom))
    return cat.to_json(), category_text(cat), EXIT_OK


def cmd_mirror(args) -> tuple[dict, str, int]:
    if args.mirror_cmd == "fiber":
        rep = classify_fiber(ComplexRational.parse(args.level))
        lines = [f"level c = {rep.level}: {'critical' if rep.is_critical else 'regular'} fiber"]
        lines += [f"  component: {c.description} [{c.topology_tag}]" for c in rep.components]
        lines += [f"  node: y = {n.y}, x = {n.x.label}, [u:v] = [{n.uv[0]}:{n.uv[1]}]" for n in rep.nodes]
        lines.append(f"  euler characteristic {rep.euler_characteristic}")
        return rep.to_json(), "\n".join(lines), EXIT_OK
    if args.mirror_cmd == "critical-levels":
        levels = critical_levels()
        payload = {"kind": "mirror_critical_levels", "levels": [c.to_json() for c in levels]}
        return payload, "critical levels of g: " + ", ".join(str(c) for c in levels), EXIT_OK
    rep = mirror_consistency_report()
    return rep, consistency_table(rep), EXIT_OK


def _add_orbit_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--type", required=True, help="Cartan type, e.g. A2, B3, E8")
    p.add_argument("--h0", required=True, help="comma-separated rationals, e.g. 1,0 or 2/3,1/3")
    p.add_argument("--h", required=True, help="comma-separated rationals")
    p.add_argument("--basis", choices=[FUNDAMENTAL_WEIGHT, SIMPLE_ROOT], default=FUNDAMENTAL_WEIGHT)
    p.add_argument("--cap", type=int, default=None, help=f"orbit cap (default ${CAP_ENV} or {DEFAULT_ORBIT_CAP})")


def _add_output_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.add_argument("--out", default=None, help="write output to this file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="slfmirror", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("orbit", help="Lefschetz fibration report for (H0, H)")
    _add_orbit_args(p)
    _add_output_args(p)
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("diamond", help="flag-manifold Hodge diamonds and their reflection")
    dsub = p.add_subparsers(dest="diamond_cmd", required=True)
    q = dsub.add_parser("flag")
    q.add_argument("--type", required=True)
    q.add_argument("--theta", default="", help="1-based simple-root labels, e.g. 2 or 1,3")
    q.add_argument("--cap", type=int, default=None)
    _add_output_args(q)
    for name in ("reflect", "check"):
        q = dsub.add_parser(name)
        q.add_argument("--input", required=True, help="diamond JSON file")
        _add_output_args(q)
    p.set_defaults(func=cmd_diamond)

    p = sub.add_parser("fukaya", help="directed category of vanishing cycles (rank level)")
    fsub = p.add_subparsers(dest="fukaya_cmd", required=True)
    q = fsub.add_parser("lg2")
    _add_output_args(q)
    q = fsub.add_parser("from-orbit")
    _add_orbit_args(q)
    q.add_argument("--hom", action="append", help="i,j:deg:rank[,deg:rank...]; repeatable")
    _add_output_args(q)
    p.set_defaults(func=cmd_fukaya)

    p = sub.add_parser("mirror", help="fibers of the LG(2) mirror potential")
    msub = p.add_subparsers(dest="mirror_cmd", required=True)
    q = msub.add_parser("fiber")
    q.add_argument("--level", required=True, help="complex rational, e.g. 0, -5/3, 1+2i or re,im")
    _add_output_args(q)
    for name in ("critical-levels", "consistency"):
        q = msub.add_parser(name)
        _add_output_args(q)
    p.set_defaults(func=cmd_mirror)
    return parser


def dump_json(payload) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        payload, text, code = args.func(args)
    except OrbitTooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    output = dump_json(payload) if args.format == "json" else text + "\n"
    if args.out:
        Path(args.out).write_text(output, encoding="utf-8")
    else:
        sys.stdout.write(output)
    return code


if __name__ == "__main__":
    sys.exit(main())
