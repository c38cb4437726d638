"""Command line front end.

Three file grammars, all JSON, all scalars as rational strings "p" or
"p/q" (lowest terms on output; no floats anywhere):

  algebra file   {"k0": 1, "l0": 0, "m": 1, "lambda": [["1"]]}
  cochain file   {"algebra": <algebra object or file path>,
                  "entries": {"s1": {"d1^d2": "1"}, "d1": {"s1^d1": "2/3"}}}
  bivector file  {"s1^d1": "1", "d1^d2": "-1/2"}

Basis names are s1..sK, z1..zL, d1..d2M; wedge names join basis names
with "^" in strictly increasing order. Parsing rejects, never repairs:
unknown names, reordered wedges, duplicate keys, and malformed scalars
are reported with their location and exit code 2.

Exit codes: 0 success, 1 mathematical failure or anomaly (non-cocycle
input to decompose, a failed bialgebra verdict, a verify-paper case not
passing), 2 malformed input or usage. The machine-form report (--format
json, also written via -o) is the contract; text output is derived.
"""

import argparse
import json
import os
import re
import sys
from fractions import Fraction

from .bialgebra import case_filter, cybe_classify, is_bialgebra, schouten
from .cohomology import (
    Cochain,
    NotCocycleError,
    coboundary_space,
    cocycle_space,
    decompose,
    invariants,
    lemma_inv_closed_form,
)
from .exteralg import Multivector, basis_keys
from .flatliealg import (
    AlgebraError,
    AnomalousAlgebraError,
    build_algebra,
    classify,
    curvature,
)
from .verify import CASE_NAMES, fmt_mv, fmt_scalar, mv_json, render_text, run


class InputError(Exception):
    """Anything wrong with an input file or flag combination (exit 2)."""


_SCALAR_RE = re.compile(r"^-?\d+(/[1-9]\d*)?$")


def _parse_scalar(value, where):
    if not isinstance(value, str) or not _SCALAR_RE.match(value):
        raise InputError(
            f"{where}: expected a rational string 'p' or 'p/q', got {value!r}")
    return Fraction(value)


def _reject_duplicates(pairs):
    out = {}
    for key, value in pairs:
        if key in out:
            raise ValueError(f"duplicate key {key!r}")
        out[key] = value
    return out


def _load_json(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh, object_pairs_hook=_reject_duplicates)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror or exc}")
    except ValueError as exc:
        raise InputError(f"{path}: invalid JSON: {exc}")


def _algebra_from_obj(obj, where):
    if not isinstance(obj, dict):
        raise InputError(f"{where}: expected an object with k0, l0, m, lambda")
    extra = sorted(set(obj) - {"k0", "l0", "m", "lambda"})
    if extra:
        raise InputError(f"{where}: unknown keys {extra}")
    for key in ("k0", "l0", "m", "lambda"):
        if key not in obj:
            raise InputError(f"{where}: missing key {key!r}")
    for key in ("k0", "l0", "m"):
        if isinstance(obj[key], bool) or not isinstance(obj[key], int):
            raise InputError(f"{where}: {key} must be an integer")
    lam = obj["lambda"]
    if not isinstance(lam, list) or not all(isinstance(r, list) for r in lam):
        raise InputError(f"{where}: lambda must be a list of rows")
    rows = [
        [_parse_scalar(x, f"{where}: lambda row {rno}") for x in row]
        for rno, row in enumerate(lam, 1)
    ]
    try:
        return build_algebra(obj["k0"], obj["l0"], obj["m"], rows)
    except AlgebraError as exc:
        raise InputError(f"{where}: {exc}")


def _load_algebra(path):
    return _algebra_from_obj(_load_json(path), path)


def _names(g):
    return {g.basis_name(i): i for i in range(g.dim)}


def _parse_wedge(key, names, where):
    parts = key.split("^") if isinstance(key, str) else []
    if len(parts) != 2:
        raise InputError(f"{where}: wedge {key!r} must be 'x^y'")
    idx = []
    for part in parts:
        if part not in names:
            raise InputError(
                f"{where}: unknown basis name {part!r} in wedge {key!r}")
        idx.append(names[part])
    if idx[0] >= idx[1]:
        raise InputError(
            f"{where}: wedge {key!r} is not in canonical increasing order")
    return tuple(idx)


def _same_algebra(a, b):
    return (a.k0, a.l0, a.m, a.lam.rows) == (b.k0, b.l0, b.m, b.lam.rows)


def _load_cochain(path, g_cli):
    obj = _load_json(path)
    if not isinstance(obj, dict):
        raise InputError(f"{path}: expected an object")
    extra = sorted(set(obj) - {"algebra", "entries"})
    if extra:
        raise InputError(f"{path}: unknown keys {extra}")
    if "algebra" not in obj or "entries" not in obj:
        raise InputError(f"{path}: cochain files need 'algebra' and 'entries'")
    alg = obj["algebra"]
    if isinstance(alg, str):
        ref = alg if os.path.isabs(alg) else os.path.join(
            os.path.dirname(path) or ".", alg)
        g = _load_algebra(ref)
    elif isinstance(alg, dict):
        g = _algebra_from_obj(alg, f"{path}: algebra")
    else:
        raise InputError(f"{path}: algebra must be an object or a file path")
    if g_cli is not None:
        if not _same_algebra(g_cli, g):
            raise InputError(
                f"{path}: algebra disagrees with the -a algebra file")
        g = g_cli
    entries = obj["entries"]
    if not isinstance(entries, dict):
        raise InputError(f"{path}: entries must be an object")
    names = _names(g)
    values = [Multivector.zero(g.dim, 2) for _ in range(g.dim)]
    for bname, vmap in entries.items():
        if bname not in names:
            raise InputError(f"{path}: entries: unknown basis name {bname!r}")
        if not isinstance(vmap, dict):
            raise InputError(f"{path}: entries.{bname} must be an object")
        coords = {}
        for wname, sval in vmap.items():
            key = _parse_wedge(wname, names, f"{path}: entries.{bname}")
            c = _parse_scalar(sval, f"{path}: entries.{bname}.{wname}")
            if c:
                coords[key] = c
        values[names[bname]] = Multivector(g.dim, 2, coords)
    return g, Cochain(g, values)


def _load_bivector(path, g):
    obj = _load_json(path)
    if not isinstance(obj, dict):
        raise InputError(f"{path}: expected a wedge-to-scalar object")
    names = _names(g)
    coords = {}
    for wname, sval in obj.items():
        key = _parse_wedge(wname, names, path)
        c = _parse_scalar(sval, f"{path}: {wname}")
        if c:
            coords[key] = c
    return Multivector(g.dim, 2, coords)


def _entries_json(g, cochain):
    out = {}
    for i in range(g.dim):
        v = cochain.value(i)
        if not v.is_zero():
            out[g.basis_name(i)] = mv_json(g, v)
    return out


def _basis_json(g, degree, space):
    keys = basis_keys(g.dim, degree)
    return [
        mv_json(g, Multivector.from_coords(g.dim, degree, vec, keys))
        for vec in space.vectors
    ]


# -- subcommands -----------------------------------------------------------


def _cmd_info(args):
    g = _load_algebra(args.algebra)
    report = classify(g)
    basis = [Multivector.basis_vector(g.dim, i) for i in range(g.dim)]
    flat = all(
        curvature(g, basis[i], basis[j], basis[k]).is_zero()
        for i in range(g.dim)
        for j in range(i + 1, g.dim)
        for k in range(g.dim)
    )
    doc = {
        "command": "info",
        "dim": g.dim,
        "k0": g.k0,
        "l0": g.l0,
        "m": g.m,
        "lambda": [[fmt_scalar(x) for x in row] for row in g.lam.rows],
        "degeneracy": {
            "nondegenerate": report.nondegenerate,
            "pairs": [
                {"i": i, "j": j, "eps": fmt_scalar(eps)}
                for i, j, eps in report.pairs
            ],
            "anomaly": report.anomaly,
        },
        "checks": {
            "jacobi": "pass",
            "unimodular": "pass",
            "flat": "pass" if flat else "fail",
        },
    }
    lines = [f"algebra: dim {g.dim}, k0={g.k0}, l0={g.l0}, m={g.m}"]
    for rno, row in enumerate(g.lam.rows, 1):
        lines.append(f"  lambda row {rno}: " +
                     " ".join(fmt_scalar(x) for x in row))
    if report.anomaly:
        lines.append(f"degeneracy: anomaly, {report.anomaly}")
    elif report.nondegenerate:
        lines.append("degeneracy: nondegenerate")
    else:
        pairs = ", ".join(
            f"({i},{j},eps={fmt_scalar(eps)})" for i, j, eps in report.pairs)
        lines.append(f"degeneracy: degenerate, pairs: {pairs}")
    lines.append("checks: jacobi pass, unimodular pass, "
                 f"flat {'pass' if flat else 'fail'}")
    code = 0 if flat and report.anomaly is None else 1
    return doc, lines, code


def _cmd_invariants(args):
    g = _load_algebra(args.algebra)
    if args.mode is None:
        args.mode = "both" if args.degree == 2 else "nullspace"
    if args.degree != 2 and args.mode != "nullspace":
        raise InputError("the closed form covers degree 2 only; "
                         "use --mode nullspace with --degree 3")
    doc = {"command": "invariants", "degree": args.degree, "mode": args.mode}
    lines = [f"degree {args.degree}, mode {args.mode}"]
    code = 0

    def side(space):
        return {"dim": space.dim, "basis": _basis_json(g, args.degree, space)}

    def side_lines(tag, space):
        keys = basis_keys(g.dim, args.degree)
        out = [f"{tag} dim {space.dim}:"]
        for vec in space.vectors:
            mv = Multivector.from_coords(g.dim, args.degree, vec, keys)
            out.append(f"  {fmt_mv(g, mv)}")
        return out

    if args.mode in ("nullspace", "both"):
        nul = invariants(g, args.degree)
    if args.mode in ("closed-form", "both"):
        try:
            closed = lemma_inv_closed_form(g)
        except AnomalousAlgebraError as exc:
            closed = None
            doc["anomaly"] = str(exc)
            lines.append(f"anomaly: {exc}")
            code = 1

    if args.mode == "nullspace":
        doc.update(side(nul))
        lines += side_lines("nullspace", nul)
    elif args.mode == "closed-form":
        if closed is not None:
            doc.update(side(closed))
            lines += side_lines("closed-form", closed)
    else:
        doc["nullspace"] = side(nul)
        lines += side_lines("nullspace", nul)
        if closed is not None:
            doc["closed_form"] = side(closed)
            lines += side_lines("closed-form", closed)
            equal = nul == closed
            doc["equal"] = equal
            lines.append(f"equal: {'yes' if equal else 'no'}")
            if not equal:
                code = 1
        else:
            doc["closed_form"] = None
            doc["equal"] = None
    return doc, lines, code


def _spaces_report(args, which):
    g = _load_algebra(args.algebra)
    zs = cocycle_space(g)
    bs = coboundary_space(g)
    shown = zs if which == "cocycles" else bs
    doc = {
        "command": which,
        "cocycle_dim": zs.dim,
        "coboundary_dim": bs.dim,
        "h1_dim": zs.dim - bs.dim,
        "basis": [
            _entries_json(g, Cochain.from_vec(g, list(vec)))
            for vec in shown.vectors
        ],
    }
    lines = [
        f"cocycle dim {zs.dim}, coboundary dim {bs.dim}, "
        f"H1 dim {zs.dim - bs.dim}",
        f"{which} basis:",
    ]
    for t, vec in enumerate(shown.vectors):
        xi = Cochain.from_vec(g, list(vec))
        terms = [
            f"{g.basis_name(i)} -> {fmt_mv(g, xi.value(i))}"
            for i in range(g.dim)
            if not xi.value(i).is_zero()
        ]
        lines.append(f"  [{t}] " + ("; ".join(terms) if terms else "0"))
    return doc, lines, 0


def _cmd_cocycles(args):
    return _spaces_report(args, "cocycles")


def _cmd_coboundaries(args):
    return _spaces_report(args, "coboundaries")


def _load_cochain_args(args):
    g_cli = _load_algebra(args.algebra) if args.algebra else None
    return _load_cochain(args.cochain, g_cli)


def _cmd_decompose(args):
    g, xi = _load_cochain_args(args)
    try:
        dec = decompose(g, xi)
    except NotCocycleError as exc:
        i, j = exc.pair
        doc = {
            "command": "decompose",
            "cocycle": False,
            "witness": {
                "pair": [g.basis_name(i), g.basis_name(j)],
                "residual": mv_json(g, exc.residual),
            },
        }
        lines = [
            "cocycle: no",
            f"residual on ({g.basis_name(i)}, {g.basis_name(j)}): "
            f"{fmt_mv(g, exc.residual)}",
        ]
        return doc, lines, 1
    doc = {
        "command": "decompose",
        "cocycle": True,
        "r0": mv_json(g, dec.r0),
        "residue": _entries_json(g, dec.R),
        "phi": [mv_json(g, p) for p in dec.phi],
    }
    lines = ["cocycle: yes", f"r0 = {fmt_mv(g, dec.r0)}", "residue:"]
    for i in range(g.dim):
        if not dec.R.value(i).is_zero():
            lines.append(f"  {g.basis_name(i)} -> {fmt_mv(g, dec.R.value(i))}")
    if len(lines) == 3:
        lines.append("  0")
    for ell, p in enumerate(dec.phi, 1):
        lines.append(f"phi plane {ell}: {fmt_mv(g, p)}")
    return doc, lines, 0


def _cmd_check_bialgebra(args):
    g, xi = _load_cochain_args(args)
    rep = is_bialgebra(g, xi)
    if not rep.cocycle_ok:
        (i, j), residual = rep.witness
        doc = {
            "command": "check-bialgebra",
            "cocycle": False,
            "bialgebra": False,
            "witness": {
                "pair": [g.basis_name(i), g.basis_name(j)],
                "residual": mv_json(g, residual),
            },
        }
        lines = [
            "cocycle: no",
            f"residual on ({g.basis_name(i)}, {g.basis_name(j)}): "
            f"{fmt_mv(g, residual)}",
        ]
        return doc, lines, 1
    filt, filt_lines = _filter_section(g, xi)
    if rep.ok:
        doc = {"command": "check-bialgebra", "cocycle": True,
               "bialgebra": True, "witness": None, "case_filter": filt}
        return doc, ["bialgebra: yes"] + filt_lines, 0
    a, b, c, jac = rep.witness
    trip = ", ".join(g.basis_name(i) + "*" for i in (a, b, c))
    doc = {
        "command": "check-bialgebra",
        "cocycle": True,
        "bialgebra": False,
        "witness": {"triple": [g.basis_name(i) + "*" for i in (a, b, c)],
                    "jacobiator": mv_json(g, jac, dual=True)},
        "case_filter": filt,
    }
    lines = ["bialgebra: no",
             f"witness: J({trip}) = {fmt_mv(g, jac, dual=True)}"] + filt_lines
    return doc, lines, 1


def _filter_section(g, xi):
    """Necessary-condition filter summary for check-bialgebra reports.

    Informational: the Jacobiator is the verdict authority. Skipped on
    degenerate algebras, where the per-plane tables are not stated."""
    if not classify(g).nondegenerate:
        note = "skipped: degenerate algebra"
        return {"skipped": note}, [f"case filter {note}"]
    fr = case_filter(g, xi)
    planes = []
    lines = []
    for pc in fr.planes:
        planes.append({
            "plane": pc.plane,
            "case": pc.case,
            "matches": list(pc.matches),
            "ab": None if pc.ab is None else [fmt_scalar(x) for x in pc.ab],
        })
        if pc.case is None:
            lines.append(f"case filter plane {pc.plane}: no case applies")
        else:
            alts = ", ".join(str(a) for a in pc.matches) or "none"
            lines.append(f"case filter plane {pc.plane}: case {pc.case}, "
                         f"matching alternatives: {alts}")
    return {"planes": planes, "ok": fr.ok}, lines


def _cmd_schouten(args):
    g = _load_algebra(args.algebra)
    rs = [_load_bivector(p, g) for p in args.bivector]
    if len(rs) == 1:
        left = right = rs[0]
        label = "[r,r]"
    elif len(rs) == 2:
        left, right = rs
        label = "[r1,r2]"
    else:
        raise InputError("schouten takes one or two -r files")
    out = schouten(g, left, right)
    doc = {"command": "schouten", "arguments": len(rs),
           "bracket": mv_json(g, out)}
    return doc, [f"{label} = {fmt_mv(g, out)}"], 0


def _cmd_cybe(args):
    g = _load_algebra(args.algebra)
    if len(args.bivector) != 1:
        raise InputError("cybe takes exactly one -r file")
    r = _load_bivector(args.bivector[0], g)
    verdict = cybe_classify(g, r)
    doc = {"command": "cybe", "class": verdict.class_,
           "bracket_square": mv_json(g, verdict.bracket_square)}
    lines = [f"class: {verdict.class_}",
             f"[r,r] = {fmt_mv(g, verdict.bracket_square)}"]
    return doc, lines, 0


def _cmd_verify_paper(args):
    names = None if args.case == "all" else [args.case]
    report = run(names, parallel=args.parallel)
    return report, render_text(report).splitlines(), (
        0 if report["verdict"] == "pass" else 1)


_DISPATCH = {
    "info": _cmd_info,
    "invariants": _cmd_invariants,
    "cocycles": _cmd_cocycles,
    "coboundaries": _cmd_coboundaries,
    "decompose": _cmd_decompose,
    "check-bialgebra": _cmd_check_bialgebra,
    "schouten": _cmd_schouten,
    "cybe": _cmd_cybe,
    "verify-paper": _cmd_verify_paper,
}


def _add_output_flags(sp):
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.add_argument("-o", dest="out", metavar="FILE",
                    help="also write the JSON report to FILE")


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="flatbialg",
        description="Flat Lie algebra bialgebra toolkit (exact arithmetic).")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_algebra(name, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("-a", dest="algebra", metavar="FILE", required=True,
                        help="algebra file")
        _add_output_flags(sp)
        return sp

    with_algebra("info", "structure, degeneracy, and self-checks")

    sp = with_algebra("invariants", "invariant multivectors")
    sp.add_argument("--degree", type=int, choices=(2, 3), default=2)
    sp.add_argument("--mode", choices=("nullspace", "closed-form", "both"),
                    default=None,
                    help="default: both for degree 2, nullspace for degree 3")

    with_algebra("cocycles", "cocycle space basis and dimensions")
    with_algebra("coboundaries", "coboundary space basis and dimensions")

    for name, help_ in (("decompose", "split a cocycle as ad r0 plus residue"),
                        ("check-bialgebra", "dual Jacobi identity verdict")):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("-a", dest="algebra", metavar="FILE",
                        help="algebra file (must agree with the cochain file)")
        sp.add_argument("-x", dest="cochain", metavar="FILE", required=True,
                        help="cochain file")
        _add_output_flags(sp)

    for name, help_ in (("schouten", "Schouten bracket of bivectors"),
                        ("cybe", "classify a bivector r by [r,r]")):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("-a", dest="algebra", metavar="FILE", required=True,
                        help="algebra file")
        sp.add_argument("-r", dest="bivector", metavar="FILE",
                        action="append", required=True,
                        help="bivector file (repeatable for schouten)")
        _add_output_flags(sp)

    sp = sub.add_parser("verify-paper",
                        help="run the reference-derivation check suite")
    sp.add_argument("--case", choices=CASE_NAMES + ("all",), default="all")
    sp.add_argument("--parallel", action="store_true",
                    help="run cases in a thread pool (same output)")
    _add_output_flags(sp)
    return parser


def main(argv=None):
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0
    try:
        doc, lines, code = _DISPATCH[args.command](args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    payload = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    sys.stdout.write(payload if args.format == "json"
                     else "\n".join(lines) + "\n")
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(payload)
    return code


if __name__ == "__main__":
    sys.exit(main())
