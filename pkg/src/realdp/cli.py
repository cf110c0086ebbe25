"""Command-line interface.

Every command accepts --format {text,json}; JSON payloads are emitted in a
canonical form (sorted keys, compact separators) so outputs are byte-stable
across runs.  Exit codes: 0 success / criterion verified, 1 check failed or
refuted, 2 invalid input.  Rationals travel as "p/q" strings in JSON.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .catalog import SURFACE_NAMES, builtin
from .conic import (
    BinaryForm,
    ConicMatrix,
    analyze,
    candidate_divisor,
    construct_section,
    discriminant,
    factored_str,
    necbundle_conditions,
    surface_class_identities,
)
from .search import check_conditions, format_table_text, render_divisor, row_to_json, search, table1
from .topology import GreatSubsphere, HypersurfaceSpec, PLCycle, hyperbolicity_check, linking_number


def canonical_json(payload) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def _fraction(value) -> Fraction:
    if isinstance(value, str):
        return Fraction(value)
    if isinstance(value, int):
        return Fraction(value)
    raise ValueError(f"expected an integer or 'p/q' string, got {value!r}")


def _fraction_str(value: Fraction) -> str:
    return str(value)


def _load_json(path):
    try:
        with open(path, encoding="utf-8") as handle:
            return json.load(handle)
    except OSError as exc:
        raise ValueError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ValueError(f"{path} is not valid JSON: {exc}") from exc


def _parse_conic_matrix(doc) -> ConicMatrix:
    try:
        splitting = tuple(int(a) for a in doc["splitting"])
        entries = tuple(
            tuple(
                BinaryForm(int(cell["degree"]), tuple(int(c) for c in cell["coeffs"]))
                for cell in row
            )
            for row in doc["entries"]
        )
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed conic matrix document: {exc}") from exc
    return ConicMatrix(splitting, entries)


def _conic_matrix_json(matrix: ConicMatrix):
    return {
        "splitting": list(matrix.splitting),
        "entries": [
            [{"degree": q.degree, "coeffs": list(q.coeffs)} for q in row]
            for row in matrix.entries
        ],
    }


def _parse_hypersurface(doc) -> HypersurfaceSpec:
    try:
        degree = int(doc["degree"])
        terms = tuple(
            (tuple(int(e) for e in term["exponents"]), _fraction(term["coeff"]))
            for term in doc["terms"]
        )
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed hypersurface document: {exc}") from exc
    return HypersurfaceSpec(degree, terms)


def _parse_cycle(doc) -> PLCycle:
    try:
        return PLCycle(
            int(doc["ambient"]),
            doc["closure"],
            tuple(tuple(_fraction(x) for x in p) for p in doc["points"]),
        )
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed cycle document: {exc}") from exc


def _parse_subspace(doc, ambient=None) -> GreatSubsphere:
    try:
        normals = tuple(tuple(_fraction(x) for x in n) for n in doc["normals"])
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed subspace document: {exc}") from exc
    if ambient is None:
        ambient = len(normals[0]) - 1
    return GreatSubsphere(ambient, normals)


# ---------------------------------------------------------------------------
# Command handlers: each returns (exit_code, payload, text)


def _cmd_table1(args):
    rows = table1()
    payload = [row_to_json(row) for row in rows]
    return 0, payload, format_table_text(rows)


def _cmd_enumerate(args):
    model = builtin(args.surface)
    payload = []
    lines = []
    for d in search(model):
        report = check_conditions(model, d)
        payload.append(
            {
                "divisor": {
                    "basis": list(model.real_lattice.basis_labels),
                    "coeffs": list(d.coeffs),
                },
                "rendered": render_divisor(model, d),
                "conditions": report.conditions_dict(),
                "ell": report.ell,
                "genus": report.genus,
                "very_ample": "yes" if report.very_ample else "no",
            }
        )
        lines.append(
            f"{render_divisor(model, d)}  l={report.ell}  g={report.genus}  "
            f"very_ample={'yes' if report.very_ample else 'no'}"
        )
    text = "\n".join(lines) if lines else f"no divisors satisfy the conditions on {args.surface}"
    return 0, payload, text


def _cmd_check(args):
    model = builtin(args.surface)
    if len(args.coeffs) != model.real_lattice.rank:
        raise ValueError(
            f"{args.surface} has real Picard rank {model.real_lattice.rank}, "
            f"got {len(args.coeffs)} coefficients"
        )
    d = model.real_lattice.vector(args.coeffs)
    report = check_conditions(model, d)
    payload = {
        "status": "pass" if report.passed else "fail",
        "surface": args.surface,
        "divisor": {
            "basis": list(model.real_lattice.basis_labels),
            "coeffs": list(d.coeffs),
        },
        "rendered": render_divisor(model, d),
        "conditions": report.conditions_dict(),
        "ell": report.ell,
        "genus": report.genus,
        "very_ample": None if report.very_ample is None else ("yes" if report.very_ample else "no"),
    }
    failed = [name for name, ok in report.conditions_dict().items() if not ok]
    text = (
        f"{render_divisor(model, d)} on {args.surface}: "
        + ("passes all conditions" if report.passed else f"fails {', '.join(failed)}")
    )
    return (0 if report.passed else 1), payload, text


def _cmd_conic(args):
    if args.subcommand == "conditions":
        report = necbundle_conditions(args.s, args.a, args.b)
        payload = {
            "s": args.s,
            "a": args.a,
            "b": args.b,
            "conditions": report.conditions_dict(),
            "status": "pass" if report.passed else "fail",
        }
        text = f"D = {args.a}F - {args.b}K with s={args.s}: " + (
            "all six conditions hold" if report.passed
            else "fails " + ", ".join(k for k, v in report.conditions_dict().items() if not v)
        )
        return (0 if report.passed else 1), payload, text
    if args.subcommand == "candidate":
        data = candidate_divisor(args.s)
        text = (
            f"D = {data['a']}F - {data['b']}K: genus {data['genus']}, "
            f"at least {data['ell_lower_bound']} sections"
        )
        return 0, data, text
    if args.subcommand == "chow":
        data = surface_class_identities(args.a, args.c)
        text = f"K_X^2 = {data['KX2']}, s = {data['s']}, O(1)|_X = {data['x']}F - K"
        return 0, data, text
    if args.subcommand == "discriminant":
        matrix = _parse_conic_matrix(_load_json(args.file))
        disc = discriminant(matrix)
        payload = {
            "degree": disc.degree,
            "coeffs": list(disc.coeffs),
            "rendered": factored_str(disc),
        }
        return 0, payload, factored_str(disc)
    if args.subcommand == "analyze":
        matrix = _parse_conic_matrix(_load_json(args.file))
        result = analyze(matrix)
        payload = {
            "total": result.total_fibers,
            "real": result.real_fibers,
            "squarefree": result.squarefree,
            "s": result.s,
            "smooth_necessary": result.smooth_necessary,
            "smooth_exact": result.smooth_exact,
        }
        text = (
            f"{result.total_fibers} singular fibers, {result.real_fibers} real, "
            f"squarefree={result.squarefree}, s={result.s}"
        )
        return (0 if result.squarefree else 1), payload, text
    if args.subcommand == "construct":
        doc = _load_json(args.file)
        try:
            a1, a2, a3 = (int(a) for a in doc["splitting"])
            roots = doc["roots"]
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed construction document: {exc}") from exc
        matrix = construct_section(a1, a2, a3, [[_fraction(r) for r in lst] for lst in roots])
        payload = _conic_matrix_json(matrix)
        return 0, payload, canonical_json(payload)
    raise ValueError(f"unknown conic subcommand {args.subcommand!r}")


def _cmd_hyp(args):
    surface = _parse_hypersurface(_load_json(args.polyfile))
    point = tuple(_fraction(x) for x in args.point.split(","))
    if len(point) != 4:
        raise ValueError("--point needs four comma-separated rationals")
    verdict = hyperbolicity_check(surface, point, args.trials, args.seed)
    payload = {
        "status": "refuted" if verdict.refuted else "supported",
        "trials": verdict.trials,
        "trial": verdict.trial,
        "witness": None if verdict.witness is None else [_fraction_str(x) for x in verdict.witness],
        "boundary_contacts": verdict.boundary_contacts,
    }
    if verdict.refuted:
        text = f"refuted at trial {verdict.trial}: witness {payload['witness']}"
    else:
        text = f"supported over {verdict.trials} trials ({verdict.boundary_contacts} boundary contacts)"
    return (1 if verdict.refuted else 0), payload, text


def _cmd_link(args):
    cycles_doc = _load_json(args.cycles)
    try:
        cycles = [_parse_cycle(doc) for doc in cycles_doc["cycles"]]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed cycles document: {exc}") from exc
    center_doc = _load_json(args.center)
    center = _parse_subspace(center_doc)
    chain = None
    if isinstance(center_doc, dict) and "chain" in center_doc:
        chain = _parse_subspace(center_doc["chain"], center.ambient)
    numbers = [linking_number(c, center, chain) for c in cycles]
    total = sum(abs(n) for n in numbers)
    ok = total == args.degree
    payload = {
        "linking_numbers": numbers,
        "sum_abs": total,
        "claimed_degree": args.degree,
        "hyperbolic": ok,
        "status": "ok" if ok else "fail",
    }
    text = f"sum |lk| = {total}, degree {args.degree}: criterion {'holds' if ok else 'fails'}"
    return (0 if ok else 1), payload, text


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="realdp",
        description="Exact lattice, conic-bundle and linking computations "
        "for real del Pezzo surfaces.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("table1", help="classification table over all built-in surfaces")
    add_format(p)
    p.set_defaults(handler=_cmd_table1)

    p = sub.add_parser("enumerate", help="divisor search on one surface")
    p.add_argument("surface", choices=SURFACE_NAMES)
    add_format(p)
    p.set_defaults(handler=_cmd_enumerate)

    p = sub.add_parser("check", help="condition report for an explicit divisor class")
    p.add_argument("surface", choices=SURFACE_NAMES)
    p.add_argument("coeffs", nargs="+", type=int, help="coefficients in the documented basis order")
    add_format(p)
    p.set_defaults(handler=_cmd_check)

    p = sub.add_parser("conic", help="minimal conic bundle computations")
    conic_sub = p.add_subparsers(dest="subcommand", required=True)
    q = conic_sub.add_parser("conditions", help="the six conditions for D = aF - bK")
    q.add_argument("s", type=int)
    q.add_argument("a", type=int)
    q.add_argument("b", type=int)
    add_format(q)
    q.set_defaults(handler=_cmd_conic)
    q = conic_sub.add_parser("candidate", help="the distinguished divisor (s-2)F - K")
    q.add_argument("s", type=int)
    add_format(q)
    q.set_defaults(handler=_cmd_conic)
    q = conic_sub.add_parser("chow", help="Chow-ring identities for the class 2H + aE")
    q.add_argument("a", type=int)
    q.add_argument("c", type=int)
    add_format(q)
    q.set_defaults(handler=_cmd_conic)
    q = conic_sub.add_parser("discriminant", help="determinant of a section matrix")
    q.add_argument("file")
    add_format(q)
    q.set_defaults(handler=_cmd_conic)
    q = conic_sub.add_parser("analyze", help="singular fiber analysis of a section matrix")
    q.add_argument("file")
    add_format(q)
    q.set_defaults(handler=_cmd_conic)
    q = conic_sub.add_parser("construct", help="diagonal section from prescribed roots")
    q.add_argument("file")
    add_format(q)
    q.set_defaults(handler=_cmd_conic)

    p = sub.add_parser("hyp", help="randomized hyperbolicity check for a hypersurface in P^3")
    p.add_argument("polyfile")
    p.add_argument("--point", required=True, help="center, four comma-separated rationals")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    add_format(p)
    p.set_defaults(handler=_cmd_hyp)

    p = sub.add_parser("link", help="linking-number criterion for PL cycles")
    p.add_argument("cycles")
    p.add_argument("center")
    p.add_argument("--degree", type=int, required=True)
    add_format(p)
    p.set_defaults(handler=_cmd_link)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code, payload, text = args.handler(args)
    except ValueError as exc:
        message = {"status": "error", "message": str(exc)}
        if getattr(args, "format", "text") == "json":
            print(canonical_json(message))
        else:
            print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.format == "json":
        print(canonical_json(payload))
    else:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
