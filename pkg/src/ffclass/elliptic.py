"""Elliptic curves y^2 = alpha(x), alpha a monic squarefree cubic over F_p,
and their identification with the ideal class group."""
from __future__ import annotations

from dataclasses import dataclass, field

from .classgroup import cg_enumerate
from .errors import FFClassError
from .ff import PrimeField, sqrt_mod
from .ideal import MumfordIdeal, identity, jac_compose
from .poly import Poly, poly_is_squarefree


@dataclass(frozen=True)
class EllipticCurve:
    field: PrimeField
    alpha: Poly

    def __post_init__(self):
        if self.alpha.p != self.field.p:
            raise FFClassError("alpha is over a different field")
        if self.alpha.degree != 3 or not self.alpha.is_monic():
            raise FFClassError("alpha must be a monic cubic")
        if not poly_is_squarefree(self.alpha):
            raise FFClassError("not squarefree (singular curve)")

    @property
    def p(self) -> int:
        return self.field.p


@dataclass(frozen=True)
class ProjPoint:
    """(A:B:C), normalized to C = 1 or to (0:1:0)."""
    A: int
    B: int
    C: int

    @classmethod
    def infinity(cls) -> ProjPoint:
        return cls(0, 1, 0)

    @classmethod
    def affine(cls, x: int, y: int, p: int) -> ProjPoint:
        return cls(x % p, y % p, 1)

    @classmethod
    def normalized(cls, A: int, B: int, C: int, p: int) -> ProjPoint:
        A, B, C = A % p, B % p, C % p
        if C == 0:
            if A != 0 or B == 0:
                raise FFClassError(f"({A}:{B}:{C}) is not a point of a Weierstrass cubic")
            return cls.infinity()
        inv = pow(C, -1, p)
        return cls(A * inv % p, B * inv % p, 1)

    @property
    def is_infinity(self) -> bool:
        return self.C == 0

    def __str__(self):
        return f"({self.A}:{self.B}:{self.C})"


def ec_on_curve(P: ProjPoint, E: EllipticCurve) -> bool:
    p = E.p
    A, B, C = P.A % p, P.B % p, P.C % p
    if (A, B, C) == (0, 0, 0):
        return False
    # homogenized: B^2 C = A^3 + a2 A^2 C + a1 A C^2 + a0 C^3
    a = list(E.alpha.coeffs) + [0] * (4 - len(E.alpha.coeffs))
    rhs = sum(a[i] * pow(A, i, p) * pow(C, 3 - i, p) for i in range(4))
    return (B * B * C - rhs) % p == 0


def _require(P: ProjPoint, E: EllipticCurve):
    if not ec_on_curve(P, E):
        raise FFClassError(f"{P} is not on the curve")


def ec_add(P: ProjPoint, Q: ProjPoint, E: EllipticCurve) -> ProjPoint:
    _require(P, E)
    _require(Q, E)
    if P.is_infinity:
        return Q
    if Q.is_infinity:
        return P
    p = E.p
    x1, y1, x2, y2 = P.A, P.B, Q.A, Q.B
    if x1 == x2 and (y1 + y2) % p == 0:
        return ProjPoint.infinity()
    if x1 == x2:
        lam = E.alpha.derivative()(x1) * pow(2 * y1, -1, p) % p
    else:
        lam = (y2 - y1) * pow(x2 - x1, -1, p) % p
    a2 = E.alpha.coeffs[2] if len(E.alpha.coeffs) > 2 else 0
    x3 = (lam * lam - a2 - x1 - x2) % p
    y3 = (lam * (x1 - x3) - y1) % p
    return ProjPoint(x3, y3, 1)


def ec_neg(P: ProjPoint, E: EllipticCurve) -> ProjPoint:
    if P.is_infinity:
        return P
    return ProjPoint(P.A, (-P.B) % E.p, 1)


def ec_enumerate(E: EllipticCurve) -> list[ProjPoint]:
    p = E.p
    pts = [ProjPoint.infinity()]
    for x0 in range(p):
        r = sqrt_mod(E.alpha(x0), p)
        if r is None:
            continue
        pts.append(ProjPoint(x0, r, 1))
        if r:
            pts.append(ProjPoint(x0, p - r, 1))
    return pts


def hasse_ok(n_points: int, p: int) -> bool:
    return (n_points - p - 1) ** 2 <= 4 * p


def ec_point_to_class(P: ProjPoint, E: EllipticCurve) -> MumfordIdeal:
    """Infinity -> (1;0); (x0, y0) -> (x - x0; y0), the ideal (x - x0, y - y0)."""
    _require(P, E)
    if P.is_infinity:
        return identity(E.alpha)
    p = E.p
    return MumfordIdeal(Poly((-P.A, 1), p), Poly((P.B,), p), E.alpha)


@dataclass
class IsomorphismReport:
    p: int
    alpha: Poly
    n_points: int
    class_number: int
    hasse: bool
    invariant_factors: tuple[int, ...] = ()
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def ec_verify_isomorphism(E: EllipticCurve) -> IsomorphismReport:
    pts = ec_enumerate(E)
    table = cg_enumerate(E.alpha)
    rep = IsomorphismReport(E.p, E.alpha, len(pts), table.class_number,
                            hasse_ok(len(pts), E.p), table.invariant_factors)
    if not rep.hasse:
        rep.violations.append(f"Hasse bound fails: #C = {len(pts)}, p = {E.p}")
    if len(pts) != table.class_number:
        rep.violations.append(f"#C = {len(pts)} but class number {table.class_number}")
    image = {}
    for P in pts:
        I = ec_point_to_class(P, E)
        key = (I.u, I.v)
        if key not in table._index:
            rep.violations.append(f"{P} maps outside the class table: {I}")
        elif key in image:
            rep.violations.append(f"{P} and {image[key]} map to the same class {I}")
        image[key] = P
    if len(image) != table.class_number:
        rep.violations.append("point map is not onto the class group")
    cls = [ec_point_to_class(P, E) for P in pts]
    for i, P in enumerate(pts):
        for j in range(len(pts)):
            lhs = ec_point_to_class(ec_add(P, pts[j], E), E)
            rhs = jac_compose(cls[i], cls[j])
            if lhs != rhs:
                rep.violations.append(f"{P} + {pts[j]}: {lhs} != {rhs}")
    return rep
