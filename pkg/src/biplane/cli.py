"""Command-line entry point.

Exit codes: 0 success / verified, 1 a verification or certification failed
(the failing check is named), 2 input or usage error. Every subcommand takes
--json for machine-readable output; table output is deterministic, so
identical inputs give byte-identical results. BIPLANE_THREADS caps worker
count for the difference-set scan (default 1).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import aut, cartdecomp, catalog, design, diffset, fixcert, perm
from .errors import BiplaneError, InputError

OK, CHECK_FAILED, USAGE = 0, 1, 2


def format_report(payload: dict, lines: list[str], as_json: bool) -> str:
    """Render one result: JSON with sorted keys, or the aligned table lines.

    Field names are stable; identical inputs give byte-identical text.
    """
    if as_json:
        return json.dumps(payload, indent=2, sort_keys=True)
    return "\n".join(lines)


def _emit(payload: dict, as_json: bool, lines: list[str]) -> None:
    print(format_report(payload, lines, as_json))


def _load_design(path: str) -> design.Design:
    try:
        with open(path) as fh:
            return design.Design.from_json_dict(json.load(fh))
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read design file {path}: {exc}") from exc


def _load_group(path: str) -> perm.PermGroup:
    try:
        with open(path) as fh:
            return perm.group_from_json_dict(json.load(fh))
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read group file {path}: {exc}") from exc


def _load_cd(path: str) -> cartdecomp.CartesianDecomposition:
    try:
        with open(path) as fh:
            return cartdecomp.CartesianDecomposition.from_json_dict(json.load(fh))
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read decomposition file {path}: {exc}") from exc


def _write_design(d: design.Design, path: str | None) -> None:
    if path:
        with open(path, "w") as fh:
            json.dump(d.to_json_dict(), fh, indent=2, sort_keys=True)
            fh.write("\n")


def _checks_payload(result: fixcert.CertResult) -> list[dict]:
    return [{"name": c.name, "status": c.status, "detail": c.detail}
            for c in result.checks]


def _checks_lines(result: fixcert.CertResult) -> list[str]:
    width = max(len(c.name) for c in result.checks)
    return [f"{c.name:<{width}}  {c.status:<4}  {c.detail}" for c in result.checks]


# -- subcommand handlers -----------------------------------------------------

def _cmd_catalog(args) -> int:
    if args.action == "list":
        entries = catalog.list_known()
        payload = {"entries": [
            {"name": e.name, "v": e.params.v, "k": e.params.k, "lambda": e.params.lam,
             "constructible": e.constructible, "examples_for_params": e.examples_for_params,
             "expected": e.expected} for e in entries]}
        lines = [f"{'name':<22}{'v':>5}{'k':>4}  {'#ex':>7}  constructible"]
        for e in entries:
            lines.append(f"{e.name:<22}{e.params.v:>5}{e.params.k:>4}  "
                         f"{e.examples_for_params:>7}  {'yes' if e.constructible else 'no'}")
        _emit(payload, args.json, lines)
        return OK
    d = catalog.build(args.name)
    _write_design(d, args.output)
    payload = d.to_json_dict()
    lines = [f"{args.name}: ({d.v},{d.k},{d.lam}) biplane, {len(d.blocks)} blocks"]
    if args.output:
        lines.append(f"written to {args.output}")
    _emit(payload, args.json, lines)
    return OK


def _cmd_verify(args) -> int:
    d = _load_design(args.design)
    report = design.verify_symmetric_design(d)
    payload = {"ok": report.ok,
               "violations": [list(map(str, v)) for v in report.violations[:20]]}
    lines = [f"verify ({d.v},{d.k},{d.lam}): {'ok' if report.ok else 'FAILED'}"]
    lines += [f"  {v}" for v in report.violations[:10]]
    _emit(payload, args.json, lines)
    return OK if report.ok else CHECK_FAILED


def _cmd_dual(args) -> int:
    d = _load_design(args.design)
    dd = design.dual(d)
    _write_design(dd, args.output)
    payload = dd.to_json_dict()
    lines = [f"dual of ({d.v},{d.k},{d.lam}) design computed"]
    if args.output:
        lines.append(f"written to {args.output}")
    _emit(payload, args.json, lines)
    return OK


def _cmd_aut(args) -> int:
    d = _load_design(args.design)
    result = aut.automorphism_group(d)
    payload = {"order": result.order,
               "generators": [g.cycle_string() for g in result.group.generators]}
    lines = [f"automorphism group order {result.order}"]
    lines += [f"  {g.cycle_string()}" for g in result.group.generators]
    _emit(payload, args.json, lines)
    return OK


def _cmd_iso(args) -> int:
    a = _load_design(args.design_a)
    b = _load_design(args.design_b)
    sigma = aut.are_isomorphic(a, b)
    payload = {"isomorphic": sigma is not None,
               "mapping": sigma.cycle_string() if sigma else None}
    lines = ["isomorphic: " + ("yes " + sigma.cycle_string() if sigma else "no")]
    _emit(payload, args.json, lines)
    return OK if sigma is not None else CHECK_FAILED


def _cmd_ds(args) -> int:
    if args.action == "lander":
        p = design.DesignParams(args.v, args.k, args.lam)
        witness = diffset.lander_excluded(p)
        payload = {"excluded": witness is not None,
                   "witness": list(witness) if witness else None}
        if witness:
            lines = [f"excluded: no ({p.v},{p.k},{p.lam}) difference set exists; "
                     f"witness (pdiv, q, j) = ({witness.pdiv}, {witness.q}, {witness.j})"]
        else:
            lines = ["no witness found; the test does not exclude these parameters"]
        _emit(payload, args.json, lines)
        return OK
    group = diffset.from_tag(args.group)
    if args.action == "search":
        found = diffset.search_difference_sets(group, args.k, args.lam)
        payload = {"group": group.name, "count": len(found),
                   "sets": [list(ds.elements) for ds in found]}
        lines = [f"{len(found)} difference set class(es) in {group.name}"]
        lines += [f"  {list(ds.elements)}" for ds in found]
        _emit(payload, args.json, lines)
        return OK
    # develop
    elements = [int(t) for t in args.set.split(",")]
    ds = diffset.DifferenceSet(group=group, elements=tuple(elements), lam=args.lam)
    d = diffset.develop(ds)
    _write_design(d, args.output)
    payload = d.to_json_dict()
    lines = [f"development: ({d.v},{d.k},{d.lam}) design with {len(d.blocks)} blocks"]
    if args.output:
        lines.append(f"written to {args.output}")
    _emit(payload, args.json, lines)
    return OK


def _cmd_fix(args) -> int:
    d = _load_design(args.design)
    x = perm.Permutation.from_cycles(args.perm, d.v)
    rep = fixcert.fix_report(d, x)
    result = fixcert.certify_fix_lemmas(d, x)
    payload = {
        "f_points": rep.f_points, "f_blocks": rep.f_blocks,
        "fixed_points": list(rep.fixed_points),
        "fixed_blocks": list(rep.fixed_blocks),
        "s_block": {str(k): v for k, v in rep.s_block.items()},
        "r_block": {str(k): v for k, v in rep.r_block.items()},
        "checks": _checks_payload(result),
        "ok": result.ok,
    }
    lines = [f"fixed points: {rep.f_points}  fixed blocks: {rep.f_blocks}"]
    lines += _checks_lines(result)
    _emit(payload, args.json, lines)
    return OK if result.ok else CHECK_FAILED


def _cmd_cert121(args) -> int:
    types = fixcert.admissible_cycle_types_121(args.order)
    payload = {"order": args.order,
               "types": [t.as_dict() for t in types]}
    if types:
        lines = [f"admissible cycle types of order {args.order} on 121 points:"]
        lines += [f"  {t}" for t in types]
    else:
        lines = [f"no admissible cycle types: order {args.order} cannot occur"]
    _emit(payload, args.json, lines)
    return OK


def _cmd_cert79(args) -> int:
    d = _load_design(args.design)
    cls = fixcert.certify_79(d)
    payload = {"order": cls.order, "order_allowed": cls.order_allowed,
               "consistent": cls.consistent, "note": cls.note,
               "three_element_checks": [
                   {"name": c.name, "status": c.status, "detail": c.detail}
                   for c in cls.three_element_checks]}
    lines = [f"automorphism group order {cls.order}: {cls.note}"]
    _emit(payload, args.json, lines)
    return OK if cls.consistent else CHECK_FAILED


def _cmd_cart(args) -> int:
    d = _load_design(args.design)
    cd = _load_cd(args.cd)
    report = cartdecomp.verify_cartesian(cd, d.v)
    payload = {"ok": report.ok, "homogeneous": report.homogeneous,
               "d": report.d, "part_counts": list(report.part_counts),
               "violations": list(report.violations)}
    lines = [f"cartesian: ok={report.ok} homogeneous={report.homogeneous} "
             f"d={report.d} parts={list(report.part_counts)}"]
    if not report.ok:
        _emit(payload, args.json, lines)
        return CHECK_FAILED
    if args.group:
        group = _load_group(args.group)
        preserved = cartdecomp.preserved_by(cd, group)
        payload["preserved"] = preserved
        lines.append(f"preserved by supplied group: {preserved}")
        if not preserved:
            _emit(payload, args.json, lines)
            return CHECK_FAILED
    if report.d == 2 and report.homogeneous:
        counts = cartdecomp.block_coordinate_pairs(d, cd)
        payload["block_pair_counts"] = sorted(set(counts))
        lines.append(f"coordinate-sharing pairs per block: {sorted(set(counts))}")
    _emit(payload, args.json, lines)
    return OK


def _cmd_pell(args) -> int:
    sols = cartdecomp.pell_solutions(args.n)
    payload = {"solutions": [
        {"n": s.n, "family": s.family, "x": s.x, "y": s.y, "u": s.u, "v": s.v}
        for s in sols]}
    lines = [f"{'x':>12} {'y':>12}   n family"]
    lines += [f"{s.x:>12} {s.y:>12}  {s.n:>2} {s.family:>6}" for s in sols]
    _emit(payload, args.json, lines)
    return OK


def _cmd_psp4(args) -> int:
    rep = cartdecomp.psp4_degree_excluded(args.q)
    payload = {"q": rep.q, "c": rep.c, "pell_value": rep.pell_value,
               "pell_value_is_square": rep.pell_value_is_square,
               "c_mod_3": rep.c_mod_3, "excluded": rep.excluded,
               "small_branches": rep.small_branches}
    lines = [f"q={rep.q}: c={rep.c}, 8c^2-7={rep.pell_value} "
             f"square={rep.pell_value_is_square}, c%3={rep.c_mod_3}, "
             f"excluded={rep.excluded}"]
    _emit(payload, args.json, lines)
    return OK if rep.excluded else CHECK_FAILED


def _cmd_feasible(args) -> int:
    if args.action == "params":
        p = design.params_from_k(args.k)
        payload = {"v": p.v, "k": p.k, "lambda": p.lam}
        _emit(payload, args.json, [f"k={p.k} forces (v,k,lambda) = ({p.v},{p.k},{p.lam})"])
        return OK
    p = design.DesignParams(args.v, args.k, args.lam)
    feasible = design.brc_feasible(p)
    payload = {"v": p.v, "k": p.k, "lambda": p.lam, "brc_feasible": feasible}
    _emit(payload, args.json,
          [f"({p.v},{p.k},{p.lam}): {'feasible' if feasible else 'excluded'}"])
    return OK


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="biplane",
        description="Construct, verify and analyze biplanes (symmetric 2-(v,k,2) designs).")
    sub = top.add_subparsers(dest="command", required=True)

    def add_json(p):
        p.add_argument("--json", action="store_true", help="emit JSON")

    p = sub.add_parser("catalog", help="list or build the known small biplanes")
    ssub = p.add_subparsers(dest="action", required=True)
    pl = ssub.add_parser("list")
    add_json(pl)
    pl.set_defaults(func=_cmd_catalog)
    pb = ssub.add_parser("build")
    pb.add_argument("name")
    pb.add_argument("-o", "--output")
    add_json(pb)
    pb.set_defaults(func=_cmd_catalog)

    p = sub.add_parser("verify", help="verify the symmetric design axioms")
    p.add_argument("design")
    add_json(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("dual", help="compute the dual design")
    p.add_argument("design")
    p.add_argument("-o", "--output")
    add_json(p)
    p.set_defaults(func=_cmd_dual)

    p = sub.add_parser("aut", help="automorphism group (point action)")
    p.add_argument("design")
    add_json(p)
    p.set_defaults(func=_cmd_aut)

    p = sub.add_parser("iso", help="isomorphism test between two designs")
    p.add_argument("design_a")
    p.add_argument("design_b")
    add_json(p)
    p.set_defaults(func=_cmd_iso)

    p = sub.add_parser("ds", help="difference sets: search, develop, lander")
    ssub = p.add_subparsers(dest="action", required=True)
    ps = ssub.add_parser("search")
    ps.add_argument("--group", required=True)
    ps.add_argument("--k", type=int, required=True)
    ps.add_argument("--lambda", dest="lam", type=int, default=2)
    add_json(ps)
    ps.set_defaults(func=_cmd_ds)
    pd = ssub.add_parser("develop")
    pd.add_argument("--group", required=True)
    pd.add_argument("--set", required=True, help="comma-separated elements, e.g. 1,3,4,5,9")
    pd.add_argument("--lambda", dest="lam", type=int, default=2)
    pd.add_argument("-o", "--output")
    add_json(pd)
    pd.set_defaults(func=_cmd_ds)
    pm = ssub.add_parser("lander")
    pm.add_argument("--v", type=int, required=True)
    pm.add_argument("--k", type=int, required=True)
    pm.add_argument("--lambda", dest="lam", type=int, default=2)
    add_json(pm)
    pm.set_defaults(func=_cmd_ds)

    p = sub.add_parser("fix", help="fixed-point report and lemma certification")
    p.add_argument("--design", required=True)
    p.add_argument("--perm", required=True, help='cycle notation, e.g. "(1,2)(3,4)"')
    add_json(p)
    p.set_defaults(func=_cmd_fix)

    p = sub.add_parser("cert121", help="admissible cycle types on 121 points")
    p.add_argument("--order", type=int, required=True)
    add_json(p)
    p.set_defaults(func=_cmd_cert121)

    p = sub.add_parser("cert79", help="classification checks for a (79,13,2) design")
    p.add_argument("--design", required=True)
    add_json(p)
    p.set_defaults(func=_cmd_cert79)

    p = sub.add_parser("cart", help="verify a cartesian decomposition against a design")
    ssub = p.add_subparsers(dest="action", required=True)
    pv = ssub.add_parser("verify")
    pv.add_argument("--design", required=True)
    pv.add_argument("--cd", required=True)
    pv.add_argument("--group")
    add_json(pv)
    pv.set_defaults(func=_cmd_cart)

    p = sub.add_parser("pell", help="solutions of 8x^2 - y^2 = 7")
    p.add_argument("--n", type=int, required=True)
    add_json(p)
    p.set_defaults(func=_cmd_pell)

    p = sub.add_parser("psp4", help="symplectic degree exclusion for even q >= 4")
    p.add_argument("--q", type=int, required=True)
    add_json(p)
    p.set_defaults(func=_cmd_psp4)

    p = sub.add_parser("feasible", help="parameter arithmetic and BRC feasibility")
    ssub = p.add_subparsers(dest="action", required=True)
    pp = ssub.add_parser("params")
    pp.add_argument("--k", type=int, required=True)
    add_json(pp)
    pp.set_defaults(func=_cmd_feasible)
    pb = ssub.add_parser("brc")
    pb.add_argument("--v", type=int, required=True)
    pb.add_argument("--k", type=int, required=True)
    pb.add_argument("--lambda", dest="lam", type=int, default=2)
    add_json(pb)
    pb.set_defaults(func=_cmd_feasible)

    return top


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code not in (0, None) else OK
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except BiplaneError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


def main() -> None:
    sys.exit(run())
