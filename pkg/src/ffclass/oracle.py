"""Independent class count by brute force.

All primitive forms (a, b, c) with b^2/4 - ac = alpha and every coefficient
of degree <= D are enumerated, then glued into SL_2(F_p[x])-orbits with a
union-find over elementary moves (translations, the swap, diag(s, 1/s)).
No reduction theory and no ideal arithmetic is used here.

Proper classes of discriminant alpha come in pairs {q, lambda*q}; within an
orbit the forms whose a-coefficient has minimal degree all share the square
class of lc(a), and the orbit counts as positive when that class is trivial.
"""
from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass, field

from .errors import FFClassError
from .ff import is_square_mod
from .poly import Poly, poly_factor, polys_up_to
from .quadform import QuadForm, qf_is_primitive


class UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return
        # keep the smaller key as root so the result is schedule independent
        if ry < rx:
            rx, ry = ry, rx
        self.parent[ry] = rx

    def classes(self):
        out: dict = {}
        for x in self.parent:
            out.setdefault(self.find(x), []).append(x)
        return out


def _key(q: QuadForm):
    return q.key()


@dataclass
class OrbitReport:
    alpha: Poly
    degree_bound: int
    orbit_count: int
    orbit_reps: list[QuadForm]
    escaped: int
    total_orbits: int = 0
    negative_reps: list[QuadForm] = field(default_factory=list)
    n_forms: int = 0
    orbits: list[list[QuadForm]] = field(default_factory=list, repr=False)
    warnings: list[str] = field(default_factory=list)


def _divisors(N: Poly):
    """Monic divisors of N."""
    fac = poly_factor(N) if N.degree >= 1 else []
    for exps in itertools.product(*(range(m + 1) for _, m in fac)):
        d = Poly((1,), N.p)
        for (P, _), e in zip(fac, exps):
            if e:
                d = d * P ** e
        yield d


def enumerate_forms(alpha: Poly, D: int) -> list[QuadForm]:
    p = alpha.p
    quarter = pow(4, -1, p)
    forms = []
    for b in polys_up_to(p, D):
        N = (b * b).scale(quarter) - alpha  # = a*c
        for d in _divisors(N):
            if d.degree > D:
                continue
            cof = N.exact_div(d)
            if cof.degree > D:
                continue
            for k in range(1, p):
                q = QuadForm(d.scale(k), b, cof.scale(pow(k, -1, p)))
                if qf_is_primitive(q):
                    forms.append(q)
    return forms


def oracle_classes(alpha: Poly, D: int, schedule: str = "forward",
                   check_bound: bool = False) -> OrbitReport:
    if D < alpha.degree:
        raise FFClassError(f"degree bound {D} below deg alpha = {alpha.degree}")
    p = alpha.p
    forms = enumerate_forms(alpha, D)
    by_key = {_key(q): q for q in forms}
    uf = UnionFind(by_key)
    small = {k: list(polys_up_to(p, k)) for k in range(D + 1)}
    units = range(1, p)
    order = sorted(by_key) if schedule == "forward" else sorted(by_key, reverse=True)
    escaped = 0
    half = pow(2, -1, p)
    zero = Poly((), p)

    for key in order:
        q = by_key[key]
        a, b, c = q.a, q.b, q.c
        moves = [QuadForm(c, -b, a)]
        for s in units:
            s2 = s * s % p
            moves.append(QuadForm(a.scale(s2), b, c.scale(pow(s2, -1, p))))
        # translations (X, Y) -> (X + mY, Y). With w = b/2 + am the new
        # c-coefficient is (w^2 - alpha)/a, so the move stays in the box iff
        # deg w <= min(D, (D + deg a) // 2). Write b/2 = qa + r; then
        # w = r + a*n with n = q + m, and only n of degree <= bound - deg a
        # (or n = 0) can qualify.
        bound = min(D, (D + a.degree) // 2)
        quo = b.scale(half) // a
        if bound >= a.degree:
            candidates = small[bound - a.degree]
        else:
            candidates = [zero]
        for n in candidates:
            m = n - quo
            if not m:
                continue
            c2 = a * m * m + b * m + c
            b2 = b + (a * m).scale(2)
            if c2.degree > D or b2.degree > D:
                escaped += 1
                continue
            moves.append(QuadForm(a, b2, c2))
        if schedule != "forward":
            moves.reverse()
        for q2 in moves:
            k2 = _key(q2)
            if k2 not in by_key:
                raise FFClassError(f"move left the enumerated set: {q2}")
            uf.union(key, k2)

    orbits = [sorted((by_key[k] for k in ks), key=_key)
              for _, ks in sorted(uf.classes().items())]
    rep = OrbitReport(alpha, D, 0, [], escaped, total_orbits=len(orbits),
                      n_forms=len(forms), orbits=orbits)
    for orb in orbits:
        dmin = min(q.a.degree for q in orb)
        classes = {is_square_mod(q.a.lc, p) for q in orb if q.a.degree == dmin}
        if len(classes) != 1:
            rep.warnings.append(f"orbit of {orb[0]} mixes square classes at minimal deg a")
        if classes == {True}:
            rep.orbit_reps.append(orb[0])
        else:
            rep.negative_reps.append(orb[0])
    rep.orbit_count = len(rep.orbit_reps)
    if check_bound:
        bigger = oracle_classes(alpha, D + 1)
        if bigger.orbit_count != rep.orbit_count:
            msg = (f"degree bound {D} looks too small: {rep.orbit_count} orbits vs "
                   f"{bigger.orbit_count} at D = {D + 1}")
            rep.warnings.append(msg)
            warnings.warn(msg)
    return rep


def orbit_partition(report: OrbitReport) -> set[frozenset]:
    return {frozenset(_key(q) for q in orb) for orb in report.orbits}
