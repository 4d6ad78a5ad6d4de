"""Ideal classes of F_p[x][sqrt(alpha)] in Mumford form (u, v).

The pair (u, v) stands for the ideal generated by u and y - v, where
y^2 = alpha. A pair is reduced when deg u <= g = (deg alpha - 1) / 2.
Composition is Cantor's algorithm.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import FFClassError
from .poly import Poly, poly_gcd_x


@dataclass(frozen=True)
class MumfordIdeal:
    u: Poly
    v: Poly
    alpha: Poly

    @property
    def p(self) -> int:
        return self.alpha.p

    @property
    def genus(self) -> int:
        return (self.alpha.degree - 1) // 2

    def is_identity(self) -> bool:
        return self.u.is_one()

    def key(self):
        return (self.u.sort_key(), self.v.sort_key())

    def __str__(self):
        return f"({self.u};{self.v})"


def identity(alpha: Poly) -> MumfordIdeal:
    p = alpha.p
    return MumfordIdeal(Poly((1,), p), Poly((), p), alpha)


def jac_validate(I: MumfordIdeal) -> bool:
    u, v = I.u, I.v
    if u.is_zero() or not u.is_monic():
        return False
    if v.degree >= u.degree:
        return False
    return u.divides(v * v - I.alpha)


def is_reduced(I: MumfordIdeal) -> bool:
    return jac_validate(I) and I.u.degree <= I.genus


def jac_reduce(u: Poly, v: Poly, alpha: Poly) -> MumfordIdeal:
    if u.is_zero() or not u.is_monic() or not u.divides(v * v - alpha):
        raise FFClassError(f"invalid Mumford pair ({u};{v})")
    g = (alpha.degree - 1) // 2
    v = v % u
    while u.degree > g:
        u = (alpha - v * v).exact_div(u).monic()
        v = (-v) % u
    return MumfordIdeal(u, v, alpha)


def _check_pair(I1: MumfordIdeal, I2: MumfordIdeal):
    if I1.alpha != I2.alpha:
        raise FFClassError("ideals over different alpha")
    for I in (I1, I2):
        if not jac_validate(I):
            raise FFClassError(f"invalid Mumford pair {I}")


def jac_compose(I1: MumfordIdeal, I2: MumfordIdeal) -> MumfordIdeal:
    _check_pair(I1, I2)
    alpha = I1.alpha
    u1, v1, u2, v2 = I1.u, I1.v, I2.u, I2.v
    # d = c1*u1 + c2*u2 + c3*(v1 + v2), as two nested two-term gcds
    d0, e1, e2 = poly_gcd_x(u1, u2)
    d, f1, c3 = poly_gcd_x(d0, v1 + v2)
    c1, c2 = f1 * e1, f1 * e2
    u3 = (u1 * u2).exact_div(d * d)
    v3 = (c1 * u1 * v2 + c2 * u2 * v1 + c3 * (v1 * v2 + alpha)).exact_div(d) % u3
    return jac_reduce(u3, v3, alpha)


def jac_inverse(I: MumfordIdeal) -> MumfordIdeal:
    return MumfordIdeal(I.u, (-I.v) % I.u, I.alpha)


def jac_pow(I: MumfordIdeal, n: int) -> MumfordIdeal:
    if n < 0:
        I, n = jac_inverse(I), -n
    result, base = identity(I.alpha), I
    while n:
        if n & 1:
            result = jac_compose(result, base)
        base = jac_compose(base, base)
        n >>= 1
    return result


def jac_order(I: MumfordIdeal) -> int:
    n, acc = 1, I
    while not acc.is_identity():
        acc = jac_compose(acc, I)
        n += 1
    return n
