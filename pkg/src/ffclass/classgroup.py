"""Brute-force enumeration of Pic(F_p[x][sqrt(alpha)]) and its structure."""
from __future__ import annotations

import itertools

from collections import Counter
from dataclasses import dataclass, field
from math import gcd, lcm

from .errors import FFClassError
from .ideal import MumfordIdeal, identity, jac_compose, jac_inverse, jac_order
from .poly import Poly, monic_polys, poly_factor, poly_is_squarefree
from .quadform import QuadForm, mumford_to_qf


def check_alpha(alpha: Poly):
    if alpha.is_zero() or not alpha.is_monic():
        raise FFClassError("not monic")
    if alpha.degree % 2 == 0:
        raise FFClassError("even degree")
    if alpha.degree < 3:
        raise FFClassError("degree must be at least 3")
    if not poly_is_squarefree(alpha):
        raise FFClassError("not squarefree")


@dataclass(frozen=True)
class ClassGroupTable:
    alpha: Poly
    classes: tuple[MumfordIdeal, ...]
    forms: tuple[QuadForm, ...]
    orders: tuple[int, ...]
    invariant_factors: tuple[int, ...]
    _index: dict = field(default=None, compare=False, repr=False)

    @property
    def p(self) -> int:
        return self.alpha.p

    @property
    def class_number(self) -> int:
        return len(self.classes)

    def index(self, I: MumfordIdeal) -> int:
        return self._index[(I.u, I.v)]

    def compose(self, i: int, j: int) -> int:
        return self.index(jac_compose(self.classes[i], self.classes[j]))

    def inverse(self, i: int) -> int:
        return self.index(jac_inverse(self.classes[i]))


def reduced_ideals(alpha: Poly) -> list[MumfordIdeal]:
    """Every reduced Mumford pair, ordered by (deg u, lex u, lex v)."""
    p = alpha.p
    g = (alpha.degree - 1) // 2
    out = []
    for d in range(g + 1):
        for u in monic_polys(p, d):
            if d == 0:
                out.append(identity(alpha))
                continue
            for vc in itertools.product(range(p), repeat=d):
                v = Poly(vc, p)
                if u.divides(v * v - alpha):
                    out.append(MumfordIdeal(u, v, alpha))
    return out


def cg_enumerate(alpha: Poly) -> ClassGroupTable:
    check_alpha(alpha)
    classes = reduced_ideals(alpha)
    classes.sort(key=lambda I: (I.u.sort_key(), I.v.sort_key()))
    forms = tuple(mumford_to_qf(I) for I in classes)
    orders = tuple(jac_order(I) for I in classes)
    index = {(I.u, I.v): i for i, I in enumerate(classes)}
    return ClassGroupTable(
        alpha, tuple(classes), forms, orders,
        invariant_factors_from_orders(orders), index,
    )


def _prime_powers(n: int) -> dict[int, int]:
    out, d = {}, 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def invariant_factors_from_orders(orders) -> tuple[int, ...]:
    """Invariant factors d1 | d2 | ... | dk of a finite abelian group, given
    the multiset of its element orders.

    For each prime l, #{x : l^k x = 0} = l^(sum_i min(k, e_i)) determines the
    exponents e_i of the l-primary cyclic factors.
    """
    h = len(orders)
    cyclic: list[list[int]] = []
    for ell, e in _prime_powers(h).items():
        sizes = [0]
        k = 0
        while sizes[-1] < e:
            k += 1
            n = sum(1 for o in orders if (ell ** k) % o == 0)
            sizes.append(_exact_log(n, ell))
        # number of factors of exponent >= k is sizes[k] - sizes[k-1]
        counts = [sizes[i] - sizes[i - 1] for i in range(1, len(sizes))]
        exps = []
        for i, c in enumerate(counts):
            nxt = counts[i + 1] if i + 1 < len(counts) else 0
            exps += [i + 1] * (c - nxt)
        cyclic.append(sorted((ell ** x for x in exps), reverse=True))
    width = max((len(c) for c in cyclic), default=0)
    factors = []
    for i in range(width):
        d = 1
        for c in cyclic:
            if i < len(c):
                d *= c[i]
        factors.append(d)
    return tuple(sorted(factors))


def _exact_log(n: int, ell: int) -> int:
    k = 0
    while n > 1:
        if n % ell:
            raise FFClassError("element orders do not come from an abelian group")
        n //= ell
        k += 1
    return k


def cg_structure(table: ClassGroupTable) -> tuple[int, ...]:
    return table.invariant_factors


def cg_cl(table: ClassGroupTable) -> list[list[int]]:
    """Classes with each I merged with its inverse (improper classification)."""
    merged, seen = [], set()
    for i in range(table.class_number):
        if i in seen:
            continue
        j = table.inverse(i)
        group = sorted({i, j})
        seen.update(group)
        merged.append(group)
    return merged


def cg_inherits_group(table: ClassGroupTable) -> bool:
    return all(d <= 2 for d in table.invariant_factors)


def cg_h1_order(table: ClassGroupTable) -> int:
    return 2 * table.class_number


def order_multiset(invariant_factors) -> Counter:
    """Element-order multiset of Z/d1 x ... x Z/dk, by direct enumeration."""
    counts: Counter = Counter()
    for elt in itertools.product(*(range(d) for d in invariant_factors)):
        o = 1
        for x, d in zip(elt, invariant_factors):
            o = lcm(o, d // gcd(x, d))
        counts[o] += 1
    return counts


def ramified_primes(alpha: Poly) -> list[Poly]:
    return [P for P, _ in poly_factor(alpha)]
