"""Acceptance checks, shared by `ffclass selftest` and tests/test_acceptance.py.

Every check returns a CriterionResult; nothing here raises on a mathematical
mismatch, the mismatch is reported in the result instead.
"""
from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field

from .classgroup import (cg_cl, cg_enumerate, cg_h1_order, cg_inherits_group,
                         cg_structure, ramified_primes)
from .elliptic import EllipticCurve, ec_verify_isomorphism
from .ff import PrimeField
from .genus import gen_characters, gen_is_principal, gen_partition
from .ideal import (MumfordIdeal, identity, jac_compose, jac_inverse,
                    jac_validate)
from .oracle import oracle_classes
from .poly import (Poly, monic_irreducibles, poly_is_squarefree, polys_up_to,
                   residue_symbol)
from .quadform import (Mat2, QuadForm, is_reduced_form, mumford_to_qf,
                       qf_apply, qf_neg_detB, qf_reduce)

PROPERTY_CASES = 1000


@dataclass
class CriterionResult:
    key: str
    name: str
    passed: bool
    seconds: float
    detail: str = ""
    failures: list[str] = field(default_factory=list)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f": {self.detail}" if self.detail else ""
        return f"[{status}] {self.key} {self.name} ({self.seconds:.2f} s){extra}"

    def as_dict(self) -> dict:
        return {"key": self.key, "name": self.name, "passed": self.passed,
                "seconds": round(self.seconds, 3), "detail": self.detail,
                "failures": self.failures[:20]}


def _poly(s, p):
    from .cli import parse_poly
    return parse_poly(s, p)


def form(a, b, c, p) -> QuadForm:
    return QuadForm(_poly(a, p), _poly(b, p), _poly(c, p))


def squarefree_monics(p: int, degree: int) -> list[Poly]:
    out = []
    for tail in itertools.product(range(p), repeat=degree):
        f = Poly(tail + (1,), p)
        if poly_is_squarefree(f):
            out.append(f)
    return out


def _timed(key, name, fn) -> CriterionResult:
    t0 = time.perf_counter()
    failures, detail = fn()
    dt = time.perf_counter() - t0
    return CriterionResult(key, name, not failures, dt, detail, failures)


# -- criterion 1 -------------------------------------------------------------

def example1_reproduction() -> CriterionResult:
    p = 3

    def body():
        failures = []
        t0 = time.perf_counter()
        alpha = _poly("x^3+x+1", p)
        table = cg_enumerate(alpha)
        elapsed = time.perf_counter() - t0
        want = {form("x-1", "0", "2x^2+2x+1", p), form("x", "2", "2x^2+2", p),
                form("x", "1", "2x^2+2", p), form("1", "0", "2x^3+2x+2", p)}
        if table.class_number != 4:
            failures.append(f"class number {table.class_number} != 4")
        if set(table.forms) != want:
            failures.append(f"forms {sorted(map(str, table.forms))}")
        if sorted(table.orders) != [1, 2, 4, 4]:
            failures.append(f"orders {sorted(table.orders)}")
        if cg_structure(table) != (4,):
            failures.append(f"invariant factors {cg_structure(table)}")
        if elapsed >= 1.0:
            failures.append(f"runtime {elapsed:.3f} s >= 1 s")
        return failures, f"4 classes, orders {{1,2,4,4}}, Z/4 in {elapsed * 1000:.1f} ms"

    return _timed("C1", "Example 1 reproduction", body)


# -- criterion 2 -------------------------------------------------------------

def composition_laws() -> CriterionResult:
    p = 3

    def body():
        alpha = _poly("x^3+x+1", p)
        I2 = MumfordIdeal(_poly("x", p), _poly("2", p), alpha)
        I3 = MumfordIdeal(_poly("x", p), _poly("1", p), alpha)
        failures = []
        prod = jac_compose(I2, I3)
        if not prod.is_identity():
            failures.append(f"(x;2)*(x;1) = {prod}")
        sq = jac_compose(I2, I2)
        if sq != MumfordIdeal(_poly("x-1", p), _poly("0", p), alpha):
            failures.append(f"(x;2)^2 = {sq}")
        return failures, f"(x;2)*(x;1) = {prod}, (x;2)^2 = {sq}"

    return _timed("C2", "Composition laws", body)


# -- criterion 3 -------------------------------------------------------------

def improper_quotient() -> CriterionResult:
    def body():
        failures = []
        t1 = cg_enumerate(_poly("x^3+x+1", 3))
        t2 = cg_enumerate(_poly("x^3+x", 5))
        m1, m2 = cg_cl(t1), cg_cl(t2)
        if len(m1) != 3:
            failures.append(f"Example 1: {len(m1)} merged classes")
        if cg_inherits_group(t1):
            failures.append("Example 1 inherits a group structure")
        if len(m2) != 4:
            failures.append(f"Example 2: {len(m2)} merged classes")
        if cg_structure(t2) != (2, 2) or not cg_inherits_group(t2):
            failures.append(f"Example 2 structure {cg_structure(t2)}")
        return failures, (f"Example 1: {len(m1)} merged, inherits={cg_inherits_group(t1)}; "
                          f"Example 2: {len(m2)} merged, {list(cg_structure(t2))}, "
                          f"inherits={cg_inherits_group(t2)}")

    return _timed("C3", "Improper quotient", body)


# -- criterion 4 -------------------------------------------------------------

def genus_alphas(quick: bool, rng: random.Random) -> list[Poly]:
    alphas = []
    for p in (3, 5, 7):
        alphas += squarefree_monics(p, 3)
    quintics3 = squarefree_monics(3, 5)
    alphas += rng.sample(quintics3, 20) if quick else quintics3
    alphas += rng.sample(squarefree_monics(5, 5), 10 if quick else 40)
    alphas += rng.sample(squarefree_monics(3, 7), 3 if quick else 10)
    return alphas


def genus_suite(quick: bool = False, seed: int = 0) -> CriterionResult:
    def body():
        failures = []
        t1 = cg_enumerate(_poly("x^3+x+1", 3))
        g1 = gen_partition(t1)
        want1 = {(_poly("1", 3), _poly("0", 3)), (_poly("x-1", 3), _poly("0", 3))}
        got1 = {(t1.classes[i].u, t1.classes[i].v) for i in g1.principal}
        if g1.count != 2 or got1 != want1:
            failures.append(f"Example 1: {g1.count} genera, principal {sorted(map(str, got1))}")
        t2 = cg_enumerate(_poly("x^3+x", 5))
        g2 = gen_partition(t2)
        if g2.count != 4 or [t2.classes[i] for i in g2.principal] != [identity(t2.alpha)]:
            failures.append(f"Example 2: {g2.count} genera, principal {g2.principal}")
        alphas = genus_alphas(quick, random.Random(seed))
        for alpha in alphas:
            table = cg_enumerate(alpha)
            try:
                part = gen_partition(table, check=False)
            except Exception as exc:  # noqa: BLE001 - reported, not raised
                failures.append(f"p={alpha.p} alpha={alpha}: {exc}")
                continue
            r = len(ramified_primes(alpha))
            if part.count != 2 ** (r - 1):
                failures.append(f"p={alpha.p} alpha={alpha}: {part.count} genera, r={r}")
            if len({len(g) for g in part.genera}) != 1:
                failures.append(f"p={alpha.p} alpha={alpha}: genera of unequal sizes")
            squares = {table.index(jac_compose(I, I)) for I in table.classes}
            if squares != set(part.principal):
                failures.append(f"p={alpha.p} alpha={alpha}: principal genus != squares")
            for I in table.classes:
                if not gen_is_principal(mumford_to_qf(jac_compose(I, I)), alpha):
                    failures.append(f"p={alpha.p} alpha={alpha}: square of {I} not principal")
        return failures, (f"Example 1: 2 genera, Example 2: 4 genera; "
                          f"{len(alphas)} further alphas checked")

    return _timed("C4", "Genus suite", body)


# -- criterion 5 -------------------------------------------------------------

def elliptic_sweep(seed: int = 0, samples: int = 10) -> CriterionResult:
    def body():
        failures = []
        rng = random.Random(seed)
        t0 = time.perf_counter()
        curves = []
        for p in (3, 5, 7):
            curves += squarefree_monics(p, 3)
        for p in (11, 13):
            curves += rng.sample(squarefree_monics(p, 3), samples)
        for alpha in curves:
            rep = ec_verify_isomorphism(EllipticCurve(PrimeField(alpha.p), alpha))
            if not rep.ok:
                failures.append(f"p={alpha.p} alpha={alpha}: {rep.violations[:3]}")
        elapsed = time.perf_counter() - t0
        if elapsed >= 60:
            failures.append(f"runtime {elapsed:.1f} s >= 60 s")
        return failures, f"{len(curves)} curves, #points = class number, homomorphism on all pairs"

    return _timed("C5", "Elliptic isomorphism sweep", body)


# -- criterion 6 -------------------------------------------------------------

def oracle_check(alpha: Poly, D: int = 3) -> list[str]:
    failures = []
    table = cg_enumerate(alpha)
    rep = oracle_classes(alpha, D)
    tag = f"p={alpha.p} alpha={alpha}"
    if rep.warnings:
        failures.append(f"{tag}: {rep.warnings}")
    if rep.orbit_count != table.class_number:
        failures.append(f"{tag}: {rep.orbit_count} orbits vs class number {table.class_number}")
    if rep.total_orbits != cg_h1_order(table):
        failures.append(f"{tag}: {rep.total_orbits} SL2 orbits vs 2h = {cg_h1_order(table)}")
    for orb in rep.orbits:
        fixed = [q for q in orb if is_reduced_form(q, alpha)]
        if orb[0] in rep.orbit_reps:
            if len(fixed) != 1:
                failures.append(f"{tag}: orbit of {orb[0]} has {len(fixed)} reduced forms")
        elif fixed:
            failures.append(f"{tag}: non-positive orbit of {orb[0]} contains {fixed[0]}")
    return failures


def oracle_crosscheck(quick: bool = False, seed: int = 0) -> CriterionResult:
    def body():
        alphas = squarefree_monics(3, 3)
        five = squarefree_monics(5, 3)
        alphas += random.Random(seed).sample(five, 10) if quick else five
        failures = []
        for alpha in alphas:
            failures += oracle_check(alpha)
        return failures, f"{len(alphas)} cubics: orbit count = class number, one reduced form per orbit"

    return _timed("C6", "Oracle cross-check", body)


# -- criterion 7 -------------------------------------------------------------

class _Pool:
    """Cached class tables for random property checks."""

    def __init__(self, rng: random.Random, n_alpha: int = 24):
        self.rng = rng
        self.tables = []
        choices = [(3, 3), (5, 3), (7, 3), (3, 5), (5, 5), (3, 7)]
        for i in range(n_alpha):
            p, d = choices[i % len(choices)]
            while True:
                f = Poly([rng.randrange(p) for _ in range(d)] + [1], p)
                if poly_is_squarefree(f):
                    break
            self.tables.append(cg_enumerate(f))

    def table(self):
        return self.rng.choice(self.tables)

    def ideals(self, k):
        t = self.table()
        return t, [self.rng.choice(t.classes) for _ in range(k)]


def random_unimodular(rng: random.Random, p: int, max_len: int = 6) -> Mat2:
    T = Mat2.identity(p)
    for _ in range(rng.randint(1, max_len)):
        kind = rng.randrange(3)
        if kind == 0:
            m = Poly([rng.randrange(p) for _ in range(rng.randint(1, 3))], p)
            T = T @ Mat2.translation(m)
        elif kind == 1:
            T = T @ Mat2.swap(p)
        else:
            s = rng.randrange(1, p)
            T = T @ Mat2.diag(s, pow(s, -1, p), p)
    return T


def prop_cantor_validity(pool, n):
    bad = []
    for _ in range(n):
        t, (I1, I2) = pool.ideals(2)
        I3 = jac_compose(I1, I2)
        if not (jac_validate(I3) and I3.u.degree <= I3.genus):
            bad.append(f"{I1}*{I2} = {I3} invalid")
    return bad


def prop_disc_preserved(pool, n):
    bad = []
    for _ in range(n):
        t, (I1, I2) = pool.ideals(2)
        q = mumford_to_qf(jac_compose(I1, I2))
        if qf_neg_detB(q) != t.alpha:
            bad.append(f"{I1}*{I2}: form {q} has wrong determinant")
    return bad


def prop_group_laws(pool, n):
    bad = []
    for _ in range(n):
        t, (I1, I2, I3) = pool.ideals(3)
        e = identity(t.alpha)
        if jac_compose(I1, e) != I1:
            bad.append(f"identity law fails for {I1}")
        if not jac_compose(I1, jac_inverse(I1)).is_identity():
            bad.append(f"inverse law fails for {I1}")
        if jac_compose(I1, I2) != jac_compose(I2, I1):
            bad.append(f"commutativity fails for {I1}, {I2}")
        if jac_compose(jac_compose(I1, I2), I3) != jac_compose(I1, jac_compose(I2, I3)):
            bad.append(f"associativity fails for {I1}, {I2}, {I3}")
    return bad


def prop_reduce(pool, n):
    bad = []
    for _ in range(n):
        t = pool.table()
        q = pool.rng.choice(t.forms)
        r, T = qf_reduce(q, t.alpha)
        if r != q or T != Mat2.identity(t.p):
            bad.append(f"reduce not idempotent on {q}")
        A = random_unimodular(pool.rng, t.p)
        q2 = qf_apply(q, A)
        r2, T2 = qf_reduce(q2, t.alpha)
        if r2 != q:
            bad.append(f"reduce({q} o A) = {r2}")
        if qf_apply(q2, T2) != r2:
            bad.append(f"returned transform wrong for {q2}")
    return bad


def _square_table(Pm: Poly) -> set:
    p, d = Pm.p, Pm.degree
    return {(r * r % Pm).coeffs for r in polys_up_to(p, d - 1) if r}


def prop_residue(rng, n):
    bad = []
    moduli = [Pm for p in (3, 5, 7) for d in (1, 2) for Pm in monic_irreducibles(p, d)]
    tables = {Pm: _square_table(Pm) for Pm in moduli}
    for _ in range(n):
        Pm = rng.choice(moduli)
        p = Pm.p
        v = Poly([rng.randrange(p) for _ in range(rng.randint(1, 5))], p)
        w = Poly([rng.randrange(p) for _ in range(rng.randint(1, 5))], p)
        sv, sw = residue_symbol(v, Pm), residue_symbol(w, Pm)
        if sv and sw and residue_symbol(v * w, Pm) != sv * sw:
            bad.append(f"multiplicativity fails: {v}, {w} mod {Pm}")
        r = v % Pm
        expected = 0 if not r else (1 if r.coeffs in tables[Pm] else -1)
        if sv != expected:
            bad.append(f"symbol({v}, {Pm}) = {sv}, table says {expected}")
    return bad


def prop_characters(pool, n):
    bad = []
    rng = pool.rng
    done = 0
    while done < n:
        t = pool.table()
        i = rng.randrange(t.class_number)
        q = t.forms[i]
        chars = gen_characters(q, t.alpha)
        primes = ramified_primes(t.alpha)
        k = rng.randrange(len(primes))
        s = Poly([rng.randrange(t.p) for _ in range(3)], t.p)
        u = Poly([rng.randrange(t.p) for _ in range(3)], t.p)
        val = q(s, u)
        sym = residue_symbol(val, primes[k])
        if sym == 0:
            continue
        done += 1
        if sym != chars[k]:
            bad.append(f"character of {q} at {primes[k]}: value {val} gives {sym}, expected {chars[k]}")
    return bad


def property_suites(seed: int = 0, cases: int = PROPERTY_CASES) -> CriterionResult:
    def body():
        rng = random.Random(seed)
        pool = _Pool(rng)
        suites = {
            "cantor validity": prop_cantor_validity(pool, cases),
            "disc preservation": prop_disc_preserved(pool, cases),
            "identity/inverse laws": prop_group_laws(pool, cases),
            "reduce idempotence + orbit invariance": prop_reduce(pool, cases),
            "residue symbol": prop_residue(rng, cases),
            "character well-definedness": prop_characters(pool, cases),
        }
        failures = [f"{name}: {msg}" for name, msgs in suites.items() for msg in msgs]
        summary = ", ".join(f"{name} {len(msgs)} fail" for name, msgs in suites.items())
        return failures, f"{len(suites)} suites x {cases} cases (seed {seed}); {summary}"

    return _timed("C7", "Property suites", body)


def run_all(seed: int = 0, quick: bool = False) -> list[CriterionResult]:
    return [
        example1_reproduction(),
        composition_laws(),
        improper_quotient(),
        genus_suite(quick=quick, seed=seed),
        elliptic_sweep(seed=seed),
        oracle_crosscheck(quick=quick, seed=seed),
        property_suites(seed=seed),
    ]

