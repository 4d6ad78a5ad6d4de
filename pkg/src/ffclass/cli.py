"""Command line front end.

    ffclass classify --p 3 --alpha "x^3+x+1"
    ffclass compose  --p 3 --alpha "x^3+x+1" --i1 "x;2" --i2 "x;1"
    ffclass equiv    --p 3 --alpha "x^3+x+1" --f1 "x,2,2x^2+2" --f2 "x,1,2x^2+2"

Exit status: 0 on success, 1 when a mathematical precondition fails,
2 on usage errors.
"""
from __future__ import annotations

import argparse
import json
import os
import re
import sys
from dataclasses import dataclass

from .classgroup import (ClassGroupTable, cg_cl, cg_enumerate, cg_h1_order,
                         cg_inherits_group, invariant_factors_from_orders)
from .elliptic import (EllipticCurve, ec_enumerate, ec_point_to_class,
                       ec_verify_isomorphism)
from .errors import FFClassError
from .ff import PrimeField
from .genus import gen_genus, gen_is_principal, gen_partition
from .ideal import MumfordIdeal, jac_compose, jac_order, jac_validate
from .oracle import oracle_classes
from .poly import Poly, format_poly
from .quadform import (QuadForm, is_reduced_form, mumford_to_qf,
                       qf_proper_equiv, qf_reduce, qf_to_mumford)

DEFAULT_SEED = 1729
COMMANDS = ("classify", "reduce", "compose", "equiv", "genus", "elliptic", "oracle", "selftest")


def default_seed() -> int:
    return int(os.environ.get("FFCLASS_SEED", DEFAULT_SEED))


class PolySyntaxError(ValueError):
    def __init__(self, msg: str, text: str, pos: int):
        super().__init__(f"{msg} at position {pos} in {text!r}")
        self.pos = pos


class UsageError(ValueError):
    pass


_TERM = re.compile(r"(\d+)?(\*)?(x)?(\^(\d+))?")


def parse_poly(s: str, p: int) -> Poly:
    """Parse e.g. "x^3+x+1", "4x^3+4*x", "2 - x". Coefficients are reduced mod p."""
    text = s
    if not s or not s.strip():
        raise PolySyntaxError("empty polynomial", text, 0)
    # keep original positions for error messages
    chars = [(i, ch) for i, ch in enumerate(s) if not ch.isspace()]
    src = "".join(ch for _, ch in chars)

    def where(k):
        return chars[k][0] if k < len(chars) else len(s)

    coeffs: dict[int, int] = {}
    k, sign, first = 0, 1, True
    while k < len(src):
        if src[k] in "+-":
            sign = -1 if src[k] == "-" else 1
            k += 1
        elif not first:
            raise PolySyntaxError("expected '+' or '-'", text, where(k))
        m = _TERM.match(src, k)
        coef, star, var, _, exp = m.groups()
        if m.end() == k:
            raise PolySyntaxError("expected a term", text, where(k))
        if star and not (coef and var):
            raise PolySyntaxError("'*' must join a coefficient and x", text, where(k))
        if exp is not None and not var:
            raise PolySyntaxError("exponent without x", text, where(k))
        c = int(coef) if coef else 1
        e = (int(exp) if exp else 1) if var else 0
        coeffs[e] = coeffs.get(e, 0) + sign * c
        k, sign, first = m.end(), 1, False
    if not coeffs:
        raise PolySyntaxError("expected a term", text, where(k))
    deg = max(coeffs)
    return Poly([coeffs.get(i, 0) for i in range(deg + 1)], p)


def parse_ideal(s: str, p: int, alpha: Poly) -> MumfordIdeal:
    parts = s.split(";")
    if len(parts) != 2:
        raise UsageError(f"ideal literal must be 'u;v', got {s!r}")
    I = MumfordIdeal(parse_poly(parts[0], p), parse_poly(parts[1], p), alpha)
    if not jac_validate(I):
        raise FFClassError(f"invalid ideal {I}: need u monic, deg v < deg u, u | v^2 - alpha")
    return I


def parse_form(s: str, p: int) -> QuadForm:
    parts = s.split(",")
    if len(parts) != 3:
        raise UsageError(f"form literal must be 'a,b,c', got {s!r}")
    return QuadForm(*(parse_poly(t, p) for t in parts))


def form_json(q: QuadForm) -> list[str]:
    return [format_poly(q.a), format_poly(q.b), format_poly(q.c)]


def ideal_json(I: MumfordIdeal) -> dict:
    return {"u": format_poly(I.u), "v": format_poly(I.v)}


@dataclass
class RunConfig:
    p: int
    alpha: Poly | None
    command: str
    output: str = "text"
    degree_bound: int | None = None
    args: argparse.Namespace | None = None


def classify_json(table: ClassGroupTable) -> dict:
    part = gen_partition(table)
    merged = cg_cl(table)
    classes = []
    for i, (I, q) in enumerate(zip(table.classes, table.forms)):
        classes.append({
            **ideal_json(I),
            "form": form_json(q),
            "order": table.orders[i],
            "genus": list(part.labels[i]),
            "principal": i in part.principal,
        })
    return {
        "p": table.p,
        "alpha": format_poly(table.alpha),
        "classes": classes,
        "invariant_factors": list(table.invariant_factors),
        "num_genera": part.count,
        "cl_merged": merged,
        "class_number": table.class_number,
        "h1_order": cg_h1_order(table),
        "inherits_group": cg_inherits_group(table),
    }


def table_from_json(data: dict) -> ClassGroupTable:
    """Rebuild a class table from classify JSON (ideals are authoritative)."""
    p = int(data["p"])
    alpha = parse_poly(data["alpha"], p)
    classes = tuple(parse_ideal(f"{c['u']};{c['v']}", p, alpha) for c in data["classes"])
    orders = tuple(jac_order(I) for I in classes)
    return ClassGroupTable(
        alpha, classes, tuple(mumford_to_qf(I) for I in classes), orders,
        invariant_factors_from_orders(orders),
        {(I.u, I.v): i for i, I in enumerate(classes)},
    )


def _structure_str(factors) -> str:
    return " x ".join(f"Z/{d}" for d in factors) if factors else "trivial"


def classify_text(data: dict) -> str:
    lines = [f"p = {data['p']}, alpha = {data['alpha']}",
             f"class number {data['class_number']}, structure "
             f"{_structure_str(data['invariant_factors'])}, H^1 order {data['h1_order']}",
             f"{'i':>3}  {'ideal (u;v)':<20} {'form (a,b,c)':<36} order  genus  principal"]
    for i, c in enumerate(data["classes"]):
        form = "(" + ",".join(c["form"]) + ")"
        genus = "".join(map(str, c["genus"]))
        lines.append(f"{i:>3}  {c['u'] + ';' + c['v']:<20} {form:<36} "
                     f"{c['order']:>5}  {genus:>5}  {'yes' if c['principal'] else 'no'}")
    lines.append(f"improper classes (I ~ I^-1): {len(data['cl_merged'])} -> {data['cl_merged']}"
                 f"; group structure inherited: {'yes' if data['inherits_group'] else 'no'}")
    lines.append(f"genera: {data['num_genera']}")
    return "\n".join(lines)


def elliptic_json(E: EllipticCurve) -> dict:
    rep = ec_verify_isomorphism(E)
    points = []
    for P in ec_enumerate(E):
        I = ec_point_to_class(P, E)
        points.append({"point": [P.A, P.B, P.C], "ideal": ideal_json(I),
                       "form": form_json(mumford_to_qf(I)), "order": jac_order(I)})
    return {"p": E.p, "alpha": format_poly(E.alpha), "points": points,
            "n_points": rep.n_points, "class_number": rep.class_number,
            "hasse": rep.hasse, "invariant_factors": list(rep.invariant_factors),
            "isomorphism_ok": rep.ok, "violations": rep.violations}


def _emit(cfg: RunConfig, data: dict, text: str, out):
    if cfg.output == "json":
        json.dump(data, out, indent=2, sort_keys=False)
        out.write("\n")
    else:
        out.write(text + "\n")


def _need(ns, *names):
    missing = [n for n in names if getattr(ns, n, None) is None]
    if missing:
        raise UsageError(f"missing --{', --'.join(m.replace('_', '-') for m in missing)}")


def run(cfg: RunConfig, out=None) -> int:
    out = sys.stdout if out is None else out
    ns, p, alpha = cfg.args, cfg.p, cfg.alpha
    cmd = cfg.command
    if cmd == "classify":
        if ns is not None and getattr(ns, "table", None):
            with open(ns.table) as fh:
                table = table_from_json(json.load(fh))
        else:
            table = cg_enumerate(alpha)
        data = classify_json(table)
        _emit(cfg, data, classify_text(data), out)
    elif cmd == "reduce":
        _need(ns, "form")
        q = parse_form(ns.form, p)
        r, T = qf_reduce(q, alpha)
        data = {"input": form_json(q), "reduced": form_json(r),
                "transform": [format_poly(e) for e in (T.r, T.s, T.t, T.u)],
                "ideal": ideal_json(qf_to_mumford(r, alpha))}
        _emit(cfg, data, f"{q} -> {r}  via T = [[{T.r}, {T.s}], [{T.t}, {T.u}]]", out)
    elif cmd == "compose":
        _need(ns, "i1", "i2")
        I1, I2 = parse_ideal(ns.i1, p, alpha), parse_ideal(ns.i2, p, alpha)
        I3 = jac_compose(I1, I2)
        data = {"i1": ideal_json(I1), "i2": ideal_json(I2), "product": ideal_json(I3),
                "form": form_json(mumford_to_qf(I3)), "identity": I3.is_identity()}
        text = f"{I1} * {I2} = {I3}" + ("  (identity)" if I3.is_identity() else "")
        _emit(cfg, data, text, out)
    elif cmd == "equiv":
        _need(ns, "f1", "f2")
        q1, q2 = parse_form(ns.f1, p), parse_form(ns.f2, p)
        eq = qf_proper_equiv(q1, q2, alpha)
        data = {"f1": form_json(q1), "f2": form_json(q2), "properly_equivalent": eq}
        _emit(cfg, data, f"{q1} and {q2} are {'' if eq else 'not '}properly equivalent", out)
    elif cmd == "genus":
        _need(ns, "form")
        q = parse_form(ns.form, p)
        if not is_reduced_form(q, alpha):
            q = qf_reduce(q, alpha)[0]
        gv = gen_genus(q, alpha)
        principal = gen_is_principal(q, alpha)
        data = {"form": form_json(q), "characters": list(gv.chars),
                "genus": list(gv.normalized), "principal": principal}
        _emit(cfg, data, f"{q}: characters {list(gv.chars)}, genus "
                         f"{''.join(map(str, gv.normalized))}, "
                         f"{'principal' if principal else 'not principal'}", out)
    elif cmd == "elliptic":
        E = EllipticCurve(PrimeField(p), alpha)
        data = elliptic_json(E)
        lines = [f"y^2 = {data['alpha']} over F_{p}: {data['n_points']} points, "
                 f"class number {data['class_number']}, Hasse {'ok' if data['hasse'] else 'FAILS'}"]
        for pt in data["points"]:
            A, B, C = pt["point"]
            lines.append(f"  ({A}:{B}:{C}) -> ({pt['ideal']['u']};{pt['ideal']['v']}) "
                         f"-> ({','.join(pt['form'])}), order {pt['order']}")
        lines.append("isomorphism: " + ("ok" if data["isomorphism_ok"] else
                                        "; ".join(data["violations"])))
        _emit(cfg, data, "\n".join(lines), out)
        if not data["isomorphism_ok"]:
            return 1
    elif cmd == "oracle":
        D = cfg.degree_bound if cfg.degree_bound is not None else alpha.degree
        rep = oracle_classes(alpha, D, check_bound=bool(getattr(ns, "check_bound", False)))
        data = {"p": p, "alpha": format_poly(alpha), "degree_bound": D,
                "orbit_count": rep.orbit_count, "total_orbits": rep.total_orbits,
                "orbit_reps": [form_json(q) for q in rep.orbit_reps],
                "escaped": rep.escaped, "n_forms": rep.n_forms, "warnings": rep.warnings}
        text = (f"{rep.n_forms} forms with deg <= {D}: {rep.total_orbits} SL_2 orbits, "
                f"{rep.orbit_count} positive\n" +
                "\n".join(f"  {q}" for q in rep.orbit_reps) +
                "".join(f"\nwarning: {w}" for w in rep.warnings))
        _emit(cfg, data, text, out)
    elif cmd == "selftest":
        from .acceptance import run_all
        seed = ns.seed if ns is not None and ns.seed is not None else default_seed()
        results = run_all(seed=seed, quick=bool(getattr(ns, "quick", False)))
        data = {"seed": seed, "criteria": [r.as_dict() for r in results]}
        _emit(cfg, data, "\n".join(r.line() for r in results), out)
        return 0 if all(r.passed for r in results) else 1
    else:
        raise UsageError(f"unknown command {cmd!r}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="ffclass",
                                 description="Binary quadratic forms over F_p[x] and class groups.")
    sub = ap.add_subparsers(dest="command", required=True)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--p", type=int, required=True, help="odd prime")
    common.add_argument("--alpha", required=True, help='monic squarefree odd-degree polynomial, e.g. "x^3+x+1"')
    common.add_argument("--output", choices=("text", "json"), default="text")
    common.add_argument("--json", dest="output", action="store_const", const="json",
                        help="shorthand for --output json")
    for name in COMMANDS:
        if name == "selftest":
            sp = sub.add_parser(name, help="run the acceptance checks")
            sp.add_argument("--seed", type=int, default=None)
            sp.add_argument("--quick", action="store_true", help="smaller oracle sweep")
            sp.add_argument("--output", choices=("text", "json"), default="text")
            continue
        sp = sub.add_parser(name, parents=[common])
        if name in ("reduce", "genus"):
            sp.add_argument("--form", help='"a,b,c"')
        if name == "compose":
            sp.add_argument("--i1", help='"u;v"')
            sp.add_argument("--i2", help='"u;v"')
        if name == "equiv":
            sp.add_argument("--f1")
            sp.add_argument("--f2")
        if name == "oracle":
            sp.add_argument("--degree-bound", type=int, default=None)
            sp.add_argument("--check-bound", action="store_true",
                            help="rerun with degree bound + 1 and warn on disagreement")
        if name == "classify":
            sp.add_argument("--table", help="re-ingest a classify JSON file instead of enumerating")
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    ns = ap.parse_args(argv)
    try:
        if ns.command == "selftest":
            cfg = RunConfig(0, None, "selftest", ns.output, args=ns)
        else:
            p = PrimeField(ns.p).p
            alpha = parse_poly(ns.alpha, p)
            if ns.command != "classify" or not getattr(ns, "table", None):
                from .classgroup import check_alpha
                check_alpha(alpha)
            cfg = RunConfig(p, alpha, ns.command, ns.output,
                            getattr(ns, "degree_bound", None), ns)
        return run(cfg)
    except (UsageError, PolySyntaxError) as exc:
        print(f"ffclass: usage error: {exc}", file=sys.stderr)
        return 2
    except (FFClassError, ZeroDivisionError) as exc:
        print(f"ffclass: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
