"""Command-line driver: ``polyface construct|fvector|check|verify|sweep``.

Exit codes: 0 everything passed, 1 a check or verification failed, 2 usage,
parse or input error, 3 a size cap was hit.
"""
from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import bounds as B
from .errors import PolyfaceError, SizeLimit, UnknownTheorem
from .io import lattice_to_json, read_lattice, write_lattice
from .lattice import (GradedLattice, check_upper_intervals_atleast_boolean, is_coatom_distinguishable,
                      is_diamond, is_lattice)
from .reports import CheckReport, dumps, row, rows_to_csv
from .specs import realize
from .topology import (check_d_plus_2_facets_polytopal, check_dual_simplicial, is_normal_pseudomanifold,
                       is_pseudomanifold)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_SIZE = 0, 1, 2, 3

CHECKS = ("lattice", "diamond", "coatom-dist", "boolean-intervals", "pure", "pseudomanifold",
          "normal", "grunbaum", "dual-simplicial", "d-plus-2")
THEOREMS = ("phi-minimizer", "ordering", "appendix", "two-part-2d1", "key-prop", "simple-case",
            "tdm-formula")
SWEEPS = ("tdm", "gmin", "nabla", "stack")


def load_input(text: str) -> GradedLattice:
    """A lattice JSON file if ``text`` names an existing file, else a spec string."""
    p = Path(text)
    if p.is_file():
        return read_lattice(p)
    if text.endswith(".json"):
        raise FileNotFoundError(f"no such file: {text}")
    return realize(text)


def pmap(fn, items, jobs: int) -> list:
    """Map in parameter order, optionally over worker processes."""
    items = list(items)
    if jobs <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        return list(ex.map(fn, items))


def emit(text: str, out) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def render(reports: list, fmt: str) -> str:
    if fmt == "json":
        return dumps(reports[0] if len(reports) == 1 else reports)
    if fmt == "csv":
        return rows_to_csv([r for rep in reports for r in rep.rows])
    return "".join(rep.summary() + "\n" for rep in reports)


# lattice checks

def _verdict_report(name: str, verdict, L: GradedLattice) -> CheckReport:
    w = verdict.witness
    if w is None:
        return CheckReport(name)
    w = w if isinstance(w, tuple) else (w,)
    # element ids come first in every verdict witness; show them by label
    shown = tuple(L.label(x) if i < 2 and isinstance(x, int) else x for i, x in enumerate(w))
    return CheckReport(name, [shown])


def run_check(name: str, L: GradedLattice) -> CheckReport:
    if name == "lattice":
        return _verdict_report(name, is_lattice(L), L)
    if name == "diamond":
        return _verdict_report(name, is_diamond(L), L)
    if name == "coatom-dist":
        return _verdict_report(name, is_coatom_distinguishable(L), L)
    if name == "boolean-intervals":
        v = check_upper_intervals_atleast_boolean(L)
        if v.witness is None:
            return CheckReport(name)
        t, r, count, need = v.witness
        return CheckReport(name, [(L.label(t), r, count, need)])
    if name == "pure":
        bad = [L.label(x) for x in L.lower_covers(L.top) if L.rank(x) != L.height - 1]
        return CheckReport(name, bad)
    if name == "pseudomanifold":
        return is_pseudomanifold(L)
    if name == "normal":
        return is_normal_pseudomanifold(L)
    if name == "dual-simplicial":
        rep = check_dual_simplicial(L)
        rep.data.pop("complex", None)
        return rep
    if name == "d-plus-2":
        return check_d_plus_2_facets_polytopal(L)
    if name == "grunbaum":
        d = L.height - 1
        s = len(L.atoms()) - d
        if not 1 <= s <= d:
            return CheckReport(name, skipped=True, params={"d": d, "s": s},
                               notes=f"s = {s} outside 1 <= s <= d; bound does not apply")
        if not is_diamond(L) or not is_lattice(L):
            return CheckReport(name, skipped=True, params={"d": d, "s": s},
                               notes="not a diamond lattice; bound does not apply")
        return B.verify_grunbaum(L)
    raise ValueError(name)


# theorem verifications; each returns one aggregated report

def _phi_minimizer_one(d: int) -> CheckReport:
    from .constructions import grunbaum_minimizer
    rep = CheckReport("phi-minimizer", params={"d": d})
    for s in range(2, d + 1):
        L = grunbaum_minimizer(d, s)
        g = B.verify_grunbaum(L)
        rep.rows.extend(g.rows)
        rep.witnesses.extend(("s", s) + tuple(w) for w in g.witnesses)
        for r in g.rows:
            if r["slack"] != 0:
                rep.witnesses.append(("not_equal", s, r["k"], r["lhs"], r["rhs"]))
    return rep


def _ordering_one(d: int) -> CheckReport:
    certs = B.verify_complete_ordering(d)
    rep = CheckReport("ordering", params={"d": d})
    for c in certs:
        rep.witnesses.extend(("class", c.facets) + tuple(v) for v in c.violations)
    rep.data["certificates"] = certs
    return rep


def _two_part_one(d: int) -> CheckReport:
    from .constructions import nabla, tdm_lattice
    from .lattice import dual
    rep = CheckReport("two-part-2d1", params={"d": d})
    cases = [("nabla", nabla(d))]
    if d % 2 == 0 and d >= 4:
        cases.append((f"dual(tdm({d},{d // 2 + 2},2))", dual(tdm_lattice(d, d // 2 + 2, 2))))
    for name, L in cases:
        r = B.verify_2d1_bound(L)
        rep.rows.extend(r.rows)
        rep.witnesses.extend((name,) + tuple(w) for w in r.witnesses)
        rep.data[name] = r.data
        if r.data["attained"] != list(range(1, d)):
            rep.witnesses.append((name, "not_attained", r.data["attained"]))
    return rep


def _key_prop_specs(d: int) -> list:
    specs = [f"simplex({d})", f"nabla({d})"] + [f"gmin({d},{s})" for s in range(2, d + 1)]
    specs += [f"dual(tdm({d},{i},{m}))" for i in range(2, d + 1) for m in range(1, i // 2 + 1)]
    return specs


def _key_prop_one(args) -> CheckReport:
    spec, seed = args
    return B.key_prop_sweep(realize(spec), seed=seed, name=spec)


def _simple_one(d: int) -> CheckReport:
    return B.verify_simple_case(d)


def _tdm_one(d: int) -> CheckReport:
    from .constructions import tdm_lattice
    rep = CheckReport("tdm-formula", params={"d": d})
    for i in range(2, d + 1):
        for m in range(1, i // 2 + 1):
            fv = tdm_lattice(d, i, m).f_vector()
            for k in range(d):
                rep.rows.append(row(d, k, fv[k], B.fvec_tdm_formula(d, i, m, k), i=i, m=m))
            if fv[d - 1] != B.tdm_facet_count(d, i, m):
                rep.witnesses.append(("facets", i, m, fv[d - 1]))
    rep.witnesses.extend(("f", r["i"], r["m"], r["k"], r["lhs"], r["rhs"])
                         for r in rep.rows if r["slack"])
    return rep


def _merge(name: str, parts: list, params: dict, seed=None) -> CheckReport:
    rep = CheckReport(name, params=params, seed=seed)
    for p in parts:
        rep.rows.extend(p.rows)
        rep.witnesses.extend(p.witnesses)
        if p.data:
            key = ",".join(f"{k}={v}" for k, v in sorted(p.params.items()))
            rep.data[key] = p.data
    return rep


def run_verify(name: str, d: int | None, dmax: int | None, seed: int, jobs: int) -> CheckReport:
    if name not in THEOREMS:
        raise UnknownTheorem(f"unknown theorem {name!r}; expected one of {', '.join(THEOREMS)}")

    def dims(lo, default):
        if d is not None:
            return [d]
        return list(range(lo, (dmax if dmax is not None else default) + 1))

    params = {"d": d, "dmax": dmax}
    if name == "appendix":
        return B.verify_appendix(dmax if dmax is not None else (d if d is not None else 200))
    if name == "phi-minimizer":
        return _merge(name, pmap(_phi_minimizer_one, dims(2, 8), jobs), params)
    if name == "ordering":
        rep = _merge(name, pmap(_ordering_one, dims(2, 12), jobs), params)
        top = max(dims(2, 12))
        rel = B.verify_relations(top)
        rep.witnesses.extend(("relations",) + tuple(w) for w in rel.witnesses)
        rep.data["relations"] = rel.data
        return rep
    if name == "two-part-2d1":
        return _merge(name, pmap(_two_part_one, dims(3, 8), jobs), params)
    if name == "key-prop":
        items = [(s, seed) for dd in dims(2, 6) for s in _key_prop_specs(dd)]
        parts = pmap(_key_prop_one, items, jobs)
        rep = _merge(name, parts, params, seed=seed)
        rep.data = {"subsets": sum(p.data["subsets"] for p in parts), "lattices": len(parts)}
        return rep
    if name == "simple-case":
        return _merge(name, pmap(_simple_one, dims(3, 12), jobs), params)
    return _merge(name, pmap(_tdm_one, dims(2, 8), jobs), params)


# sweeps: construction versus formula

def _sweep_one(args) -> CheckReport:
    target, d = args
    from . import constructions as C
    rep = CheckReport(f"sweep-{target}", params={"d": d})
    if target == "tdm":
        return _tdm_one(d)
    if target == "gmin":
        for s in range(2, d + 1):
            fv = C.grunbaum_minimizer(d, s).f_vector()
            for k in range(d):
                rep.rows.append(row(d, k, fv[k], B.phi(k, d + s, d), s=s))
    elif target == "nabla":
        fv = C.nabla(d).f_vector()
        rep.rows.append(row(d, 0, fv[0], 2 * d + 1))
        for m in range(1, d):
            rep.rows.append(row(d, m, fv[m], B.bound_B(m, d), m=m))
    elif target == "stack":
        fv = C.stacked_polytope(d, d + 3).f_vector()
        for j in range(d - 1):
            rep.rows.append(row(d, j, fv[j], B.stacked_lbt_fvector(d, d + 3, j), m=d - 1 - j))
    rep.witnesses.extend((r["d"], r["k"], r["lhs"], r["rhs"]) for r in rep.rows if r["slack"])
    return rep


def run_sweep(target: str, dmin: int, dmax: int, jobs: int) -> CheckReport:
    lo = {"tdm": 2, "gmin": 2, "nabla": 2, "stack": 3}[target]
    items = [(target, d) for d in range(max(lo, dmin), dmax + 1)]
    return _merge(f"sweep-{target}", pmap(_sweep_one, items, jobs), {"dmin": dmin, "dmax": dmax})


# argument parsing

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--out", "-o", help="write output to this path instead of stdout")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized subset tests")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for sweeps")

    p = argparse.ArgumentParser(prog="polyface",
                                description="Face lattices, bounds and topological checks.")
    sub = p.add_subparsers(dest="verb", required=True)

    c = sub.add_parser("construct", parents=[common], help="build a lattice from a spec string")
    c.add_argument("spec")

    f = sub.add_parser("fvector", parents=[common], help="print the f-vector")
    f.add_argument("input", help="lattice JSON file or spec string")

    ch = sub.add_parser("check", parents=[common], help="run structural and topological checks")
    ch.add_argument("input", help="lattice JSON file or spec string")
    for name in CHECKS:
        ch.add_argument(f"--{name}", action="store_true", dest=name.replace("-", "_"))

    v = sub.add_parser("verify", parents=[common], help="run a theorem verification sweep")
    v.add_argument("theorem", help=", ".join(THEOREMS))
    v.add_argument("--d", type=int, help="single dimension")
    v.add_argument("--dmax", type=int, help="largest dimension of the sweep")

    s = sub.add_parser("sweep", parents=[common], help="tabulate constructions against formulas")
    s.add_argument("target", choices=SWEEPS)
    s.add_argument("--dmin", type=int, default=2)
    s.add_argument("--dmax", type=int, default=8)
    return p


def _cmd_construct(args) -> int:
    L = realize(args.spec)
    fv = L.f_vector()
    if args.out:
        write_lattice(L, args.out)
    if args.format == "json" and not args.out:
        sys.stdout.write(dumps(lattice_to_json(L)))
        return EXIT_OK
    summary = {"spec": args.spec, "rank": L.height, "atoms": len(L.atoms()),
               "coatoms": len(L.coatoms()), "fvector": list(fv)}
    if args.format == "json":
        sys.stdout.write(dumps(summary))
    elif args.format == "csv":
        sys.stdout.write(",".join(map(str, fv)) + "\n")
    else:
        sys.stdout.write(f"{args.spec}: rank {L.height}, {summary['atoms']} atoms, "
                         f"{summary['coatoms']} coatoms, f = ({', '.join(map(str, fv))})\n")
    return EXIT_OK


def _cmd_fvector(args) -> int:
    fv = load_input(args.input).f_vector()
    chi = fv.euler_characteristic()
    if args.format == "csv":
        text = ",".join(map(str, fv)) + "\n"
    elif args.format == "json":
        text = dumps({"fvector": list(fv), "euler": chi})
    else:
        text = f"f = ({', '.join(map(str, fv))})\neuler = {chi}\n"
    emit(text, args.out)
    return EXIT_OK


def _cmd_check(args) -> int:
    L = load_input(args.input)
    chosen = [n for n in CHECKS if getattr(args, n.replace("-", "_"))]
    if not chosen:
        chosen = [n for n in CHECKS if n not in ("dual-simplicial", "d-plus-2")]
    reports = [run_check(n, L) for n in chosen]
    for r in reports:
        r.params.setdefault("input", args.input)
    emit(render(reports, args.format), args.out)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def _cmd_verify(args) -> int:
    rep = run_verify(args.theorem, args.d, args.dmax, args.seed, args.jobs)
    emit(render([rep], args.format), args.out)
    return EXIT_OK if rep.passed else EXIT_FAIL


def _cmd_sweep(args) -> int:
    rep = run_sweep(args.target, args.dmin, args.dmax, args.jobs)
    fmt = args.format if args.format != "text" else "csv"
    emit(render([rep], fmt), args.out)
    return EXIT_OK if rep.passed else EXIT_FAIL


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    handler = {"construct": _cmd_construct, "fvector": _cmd_fvector, "check": _cmd_check,
               "verify": _cmd_verify, "sweep": _cmd_sweep}[args.verb]
    try:
        return handler(args)
    except SizeLimit as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SIZE
    except (PolyfaceError, OSError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
