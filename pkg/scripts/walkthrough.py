"""Walk through the two worked examples: class table, composition, genera,
the elliptic curve picture, the brute-force orbit count and the golden diff."""
from ffclass.classgroup import cg_enumerate
from ffclass.cli import classify_json, classify_text, parse_ideal, parse_poly
from ffclass.elliptic import EllipticCurve, ec_enumerate, ec_point_to_class
from ffclass.ff import PrimeField
from ffclass.golden import builtin_cases, run_golden
from ffclass.ideal import jac_compose
from ffclass.oracle import oracle_classes
from ffclass.quadform import mumford_to_qf


def show(p, alpha_text, products):
    alpha = parse_poly(alpha_text, p)
    print(f"=== y^2 = {alpha_text} over F_{p} ===")
    table = cg_enumerate(alpha)
    print(classify_text(classify_json(table)))
    for a, b in products:
        I, J = parse_ideal(a, p, alpha), parse_ideal(b, p, alpha)
        print(f"{I} * {J} = {jac_compose(I, J)}")
    E = EllipticCurve(PrimeField(p), alpha)
    print("points -> ideals -> forms:")
    for P in ec_enumerate(E):
        I = ec_point_to_class(P, E)
        print(f"  {P} -> {I} -> {mumford_to_qf(I)}")
    rep = oracle_classes(alpha, 3)
    print(f"brute force: {rep.n_forms} forms, {rep.total_orbits} SL_2 orbits, "
          f"{rep.orbit_count} positive")
    print()


def main():
    show(3, "x^3+x+1", [("x;2", "x;1"), ("x;2", "x;2")])
    show(5, "x^3+x", [("x;0", "x+2;0"), ("x+3;0", "x+3;0")])
    for case in builtin_cases():
        diffs = run_golden(case)
        print(f"golden {case.name}: {'pass' if not diffs else 'FAIL'}")
        for d in diffs:
            print("  " + d)


if __name__ == "__main__":
    main()
