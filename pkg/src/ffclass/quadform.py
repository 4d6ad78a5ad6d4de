"""Binary quadratic forms aX^2 + bXY + cY^2 over F_p[x].

Throughout, a form is attached to alpha through its "negated determinant"
b^2/4 - ac (the determinant of the Gram matrix [[a, b/2], [b/2, c]] with
its sign flipped). The identity class is (1, 0, -alpha).
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import FFClassError, NotPositiveError
from .ff import is_square_mod, sqrt_mod
from .ideal import MumfordIdeal, jac_validate
from .poly import Poly, poly_gcd


class DegenerateFormError(FFClassError):
    pass


@dataclass(frozen=True)
class QuadForm:
    a: Poly
    b: Poly
    c: Poly

    @property
    def p(self) -> int:
        return self.a.p

    def __iter__(self):
        return iter((self.a, self.b, self.c))

    def __call__(self, s: Poly, t: Poly) -> Poly:
        return self.a * s * s + self.b * s * t + self.c * t * t

    def scale(self, k: int) -> QuadForm:
        return QuadForm(self.a.scale(k), self.b.scale(k), self.c.scale(k))

    def key(self):
        return (self.a.sort_key(), self.b.sort_key(), self.c.sort_key())

    def __str__(self):
        return f"({self.a},{self.b},{self.c})"


@dataclass(frozen=True)
class Mat2:
    """[[r, s], [t, u]] acting on column vectors (X, Y)."""
    r: Poly
    s: Poly
    t: Poly
    u: Poly

    @classmethod
    def identity(cls, p: int) -> Mat2:
        one, zero = Poly((1,), p), Poly((), p)
        return cls(one, zero, zero, one)

    @classmethod
    def translation(cls, m: Poly) -> Mat2:
        """(X, Y) -> (X + mY, Y)."""
        one, zero = Poly((1,), m.p), Poly((), m.p)
        return cls(one, m, zero, one)

    @classmethod
    def swap(cls, p: int) -> Mat2:
        """The SL_2 swap antidiag(1, -1): (a, b, c) -> (c, -b, a)."""
        zero = Poly((), p)
        return cls(zero, Poly((1,), p), Poly((-1,), p), zero)

    @classmethod
    def diag(cls, d1: int, d2: int, p: int) -> Mat2:
        zero = Poly((), p)
        return cls(Poly((d1,), p), zero, zero, Poly((d2,), p))

    def det(self) -> Poly:
        return self.r * self.u - self.s * self.t

    def __matmul__(self, other: Mat2) -> Mat2:
        return Mat2(
            self.r * other.r + self.s * other.t,
            self.r * other.s + self.s * other.u,
            self.t * other.r + self.u * other.t,
            self.t * other.s + self.u * other.u,
        )


def _half(p: int) -> int:
    return pow(2, -1, p)


def qf_neg_detB(q: QuadForm) -> Poly:
    """b^2/4 - ac."""
    quarter = pow(4, -1, q.p)
    return (q.b * q.b).scale(quarter) - q.a * q.c


def qf_disc(q: QuadForm) -> Poly:
    return q.b * q.b - (q.a * q.c).scale(4)


def qf_is_primitive(q: QuadForm) -> bool:
    if q.a.is_zero() and q.b.is_zero() and q.c.is_zero():
        raise FFClassError("zero form")
    g = q.a
    for h in (q.b, q.c):
        if g.is_zero():
            g = h
        elif h:
            g = poly_gcd(g, h)
    return g.degree == 0


def qf_apply(q: QuadForm, A: Mat2) -> QuadForm:
    """The form v -> q(A v), i.e. Gram matrix A^t B_q A."""
    if A.det().is_zero():
        raise FFClassError("singular transformation")
    r, s, t, u = A.r, A.s, A.t, A.u
    a, b, c = q.a, q.b, q.c
    return QuadForm(
        a * r * r + b * r * t + c * t * t,
        (a * r * s + c * t * u).scale(2) + b * (r * u + s * t),
        a * s * s + b * s * u + c * u * u,
    )


def qf_opposite(q: QuadForm) -> QuadForm:
    return QuadForm(q.a, -q.b, q.c)


def _translate(q: QuadForm, m: Poly) -> QuadForm:
    a, b, c = q.a, q.b, q.c
    return QuadForm(a, b + (a * m).scale(2), a * m * m + b * m + c)


def _check_alpha_form(q: QuadForm, alpha: Poly):
    if qf_disc(q).is_zero():
        raise DegenerateFormError("degenerate form (disc = 0)")
    if qf_neg_detB(q) != alpha:
        raise FFClassError("wrong determinant")
    if not qf_is_primitive(q):
        raise FFClassError("form not primitive")


def _reduce_unnormalized(q: QuadForm, alpha: Poly) -> tuple[QuadForm, Mat2]:
    g = (alpha.degree - 1) // 2
    p = q.p
    T = Mat2.identity(p)
    swap = Mat2.swap(p)
    while True:
        m = -(q.b // q.a.scale(2))
        if m:
            q = _translate(q, m)
            T = T @ Mat2.translation(m)
        if q.a.degree <= g:
            return q, T
        q = QuadForm(q.c, -q.b, q.a)
        T = T @ swap


def qf_reduce(q: QuadForm, alpha: Poly) -> tuple[QuadForm, Mat2]:
    """Reduced representative r = q o T of the proper class of q.

    r = (a, b, c) has a monic, deg(b) < deg(a) <= g and the same
    negated determinant alpha. Raises NotPositiveError if lc(a) ends up a
    non-square, i.e. q is not positive with respect to alpha.
    """
    _check_alpha_form(q, alpha)
    r, T = _reduce_unnormalized(q, alpha)
    lc = r.a.lc
    if not is_square_mod(lc, q.p):
        raise NotPositiveError("not positive w.r.t. alpha")
    s = sqrt_mod(pow(lc, -1, q.p), q.p)
    if s != 1:
        D = Mat2.diag(s, pow(s, -1, q.p), q.p)
        r = qf_apply(r, D)
        T = T @ D
    return r, T


def qf_is_positive(q: QuadForm, alpha: Poly) -> bool:
    nd = qf_neg_detB(q)
    if nd.is_zero():
        raise DegenerateFormError("degenerate form (disc = 0)")
    k, rem = divmod(nd, alpha)
    if rem or k.degree != 0 or not is_square_mod(k.coeffs[0], q.p):
        raise FFClassError("discriminant mismatch")
    if not k.is_one():
        return False
    if not qf_is_primitive(q):
        raise FFClassError("form not primitive")
    r, _ = _reduce_unnormalized(q, alpha)
    return is_square_mod(r.a.lc, q.p)


def qf_proper_equiv(q1: QuadForm, q2: QuadForm, alpha: Poly) -> bool:
    return qf_reduce(q1, alpha)[0] == qf_reduce(q2, alpha)[0]


def is_reduced_form(q: QuadForm, alpha: Poly) -> bool:
    g = (alpha.degree - 1) // 2
    return (
        q.a.is_monic()
        and q.a.degree <= g
        and q.b.degree < q.a.degree
        and qf_neg_detB(q) == alpha
    )


def qf_to_mumford(q: QuadForm, alpha: Poly) -> MumfordIdeal:
    if not is_reduced_form(q, alpha):
        raise FFClassError("reduce first")
    v = q.b.scale(_half(q.p)) % q.a
    return MumfordIdeal(q.a, v, alpha)


def mumford_to_qf(I: MumfordIdeal, alpha: Poly | None = None) -> QuadForm:
    alpha = I.alpha if alpha is None else alpha
    if alpha != I.alpha or not jac_validate(I):
        raise FFClassError(f"invalid Mumford pair {I}")
    return QuadForm(I.u, I.v.scale(2), (I.v * I.v - alpha).exact_div(I.u))


def identity_form(alpha: Poly) -> QuadForm:
    p = alpha.p
    return QuadForm(Poly((1,), p), Poly((), p), -alpha)
