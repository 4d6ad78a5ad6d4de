"""Dense univariate polynomials over F_p.

Coefficients are stored as a tuple of residues in ascending order of
power, trimmed so the last entry is nonzero. The zero polynomial has an
empty tuple and degree -1 (used as the -infinity sentinel).
"""
from __future__ import annotations

import itertools
from functools import lru_cache

from .errors import FFClassError
from .ff import PrimeField, FieldElement, is_square_mod


def _trim(coeffs) -> tuple[int, ...]:
    n = len(coeffs)
    while n and coeffs[n - 1] == 0:
        n -= 1
    return tuple(coeffs[:n])


class Poly:
    __slots__ = ("p", "coeffs", "_hash")

    def __init__(self, coeffs, p: int):
        self.p = p
        self.coeffs = _trim([int(c) % p for c in coeffs])
        self._hash = None

    @classmethod
    def _raw(cls, coeffs: tuple[int, ...], p: int) -> Poly:
        # coeffs already reduced and trimmed
        obj = object.__new__(cls)
        obj.p = p
        obj.coeffs = coeffs
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c: int, p: int) -> Poly:
        return cls((c,), p)

    @classmethod
    def x(cls, p: int) -> Poly:
        return cls((0, 1), p)

    @property
    def field(self) -> PrimeField:
        return PrimeField(self.p)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == (1,)

    def is_unit(self) -> bool:
        return len(self.coeffs) == 1

    def is_monic(self) -> bool:
        return self.lc == 1

    def coefficient(self, i: int) -> FieldElement:
        c = self.coeffs[i] if 0 <= i < len(self.coeffs) else 0
        return FieldElement(c, self.field)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.p == other.p and self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == _trim([other % self.p])
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.p, self.coeffs))
        return self._hash

    def __bool__(self):
        return bool(self.coeffs)

    def sort_key(self):
        return (len(self.coeffs), self.coeffs)

    def _lift(self, other) -> Poly:
        if isinstance(other, Poly):
            if other.p != self.p:
                raise FFClassError("polynomials over different fields")
            return other
        if isinstance(other, FieldElement):
            return Poly((other.value,), self.p)
        if isinstance(other, int):
            return Poly((other,), self.p)
        raise TypeError(f"cannot combine Poly with {type(other).__name__}")

    def __add__(self, other):
        other = self._lift(other)
        a, b, p = self.coeffs, other.coeffs, self.p
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = (out[i] + c) % p
        return Poly._raw(_trim(out), p)

    __radd__ = __add__

    def __neg__(self):
        p = self.p
        return Poly._raw(tuple((p - c) % p for c in self.coeffs), p)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        other = self._lift(other)
        a, b, p = self.coeffs, other.coeffs, self.p
        if not a or not b:
            return Poly._raw((), p)
        if len(b) == 1:
            k = b[0]
            return Poly._raw(tuple(c * k % p for c in a), p)
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return Poly._raw(_trim([c % p for c in out]), p)

    __rmul__ = __mul__

    def scale(self, k: int) -> Poly:
        k %= self.p
        if k == 0:
            return Poly._raw((), self.p)
        return Poly._raw(tuple(c * k % self.p for c in self.coeffs), self.p)

    def __pow__(self, n: int):
        result = Poly._raw((1,), self.p)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other):
        other = self._lift(other)
        if other.is_zero():
            raise ZeroDivisionError("zero divisor")
        p = self.p
        rem = list(self.coeffs)
        db = other.degree
        if len(rem) <= db:
            return Poly._raw((), p), self
        inv = pow(other.coeffs[-1], -1, p)
        b = other.coeffs
        quot = [0] * (len(rem) - db)
        for k in range(len(rem) - 1 - db, -1, -1):
            c = rem[k + db] * inv % p
            quot[k] = c
            if c:
                for j in range(db + 1):
                    rem[k + j] = (rem[k + j] - c * b[j]) % p
        return Poly._raw(_trim(quot), p), Poly._raw(_trim(rem[:db]), p)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other) -> Poly:
        q, r = divmod(self, other)
        if r:
            raise FFClassError(f"{other} does not divide {self}")
        return q

    def divides(self, other: Poly) -> bool:
        return not (other % self)

    def __call__(self, x):
        x = int(x) % self.p
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % self.p
        return acc

    def eval(self, x) -> FieldElement:
        return FieldElement(self(x), self.field)

    def derivative(self) -> Poly:
        p = self.p
        return Poly._raw(_trim([i * c % p for i, c in enumerate(self.coeffs)][1:]), p)

    def monicize(self) -> tuple[Poly, int]:
        """Return (f / lc(f), lc(f))."""
        if self.is_zero():
            raise FFClassError("cannot make the zero polynomial monic")
        lc = self.lc
        return self.scale(pow(lc, -1, self.p)), lc

    def monic(self) -> Poly:
        return self.monicize()[0]

    def __repr__(self):
        return f"Poly({format_poly(self)!r}, p={self.p})"

    def __str__(self):
        return format_poly(self)


def format_poly(f: Poly, var: str = "x") -> str:
    """Descending powers, zero terms omitted, unit coefficients omitted except
    on the constant term."""
    if f.is_zero():
        return "0"
    parts = []
    for i in range(f.degree, -1, -1):
        c = f.coeffs[i]
        if c == 0:
            continue
        if i == 0:
            mono = str(c)
        else:
            mono = ("" if c == 1 else str(c)) + var + (f"^{i}" if i > 1 else "")
        parts.append(mono)
    return "+".join(parts)


def poly_gcd_x(f: Poly, g: Poly) -> tuple[Poly, Poly, Poly]:
    """Extended gcd: (d, s, t) with d monic and d = s*f + t*g."""
    if f.is_zero() and g.is_zero():
        raise FFClassError("gcd of zeros")
    p = f.p
    one, zero = Poly._raw((1,), p), Poly._raw((), p)
    r0, r1, s0, s1, t0, t1 = f, g, one, zero, zero, one
    while r1:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    inv = pow(r0.lc, -1, p)
    return r0.scale(inv), s0.scale(inv), t0.scale(inv)


def poly_gcd(f: Poly, g: Poly) -> Poly:
    if f.is_zero() and g.is_zero():
        raise FFClassError("gcd of zeros")
    while g:
        f, g = g, f % g
    return f.monic()


def poly_is_squarefree(f: Poly) -> bool:
    if f.is_zero():
        raise FFClassError("squarefree test of the zero polynomial")
    d = f.derivative()
    if d.is_zero():
        # f is a p-th power (or a constant)
        return f.degree <= 0
    return poly_gcd(f, d).is_one()


def monic_polys(p: int, degree: int):
    """All monic polynomials of the given degree, in (lex ascending) order."""
    for tail in itertools.product(range(p), repeat=degree):
        yield Poly._raw(tail + (1,), p)


def polys_up_to(p: int, degree: int):
    """All polynomials of degree <= degree, zero included."""
    for coeffs in itertools.product(range(p), repeat=degree + 1):
        yield Poly(coeffs, p)


def _powmod(base: Poly, e: int, mod: Poly) -> Poly:
    result = Poly._raw((1,), base.p) % mod
    base = base % mod
    while e:
        if e & 1:
            result = result * base % mod
        base = base * base % mod
        e >>= 1
    return result


def _prime_divisors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


@lru_cache(maxsize=65536)
def is_irreducible(f: Poly) -> bool:
    """Rabin's test."""
    n = f.degree
    if n < 1:
        return False
    if n == 1:
        return True
    f = f.monic()
    p = f.p
    x = Poly.x(p)

    def frob(k):
        r = x
        for _ in range(k):
            r = _powmod(r, p, f)
        return r

    if frob(n) != x % f:
        return False
    for r in _prime_divisors(n):
        h = frob(n // r) - x
        if not poly_gcd(f, h).is_one():
            return False
    return True


@lru_cache(maxsize=None)
def monic_irreducibles(p: int, degree: int) -> tuple[Poly, ...]:
    """Monic irreducibles of one degree, lex ordered; cached per (p, degree)."""
    if degree == 1:
        return tuple(Poly._raw((c, 1), p) for c in range(p))
    return tuple(f for f in monic_polys(p, degree) if is_irreducible(f))


def poly_factor(f: Poly) -> list[tuple[Poly, int]]:
    """Monic irreducible factorization, sorted by (degree, lex coefficients)."""
    if f.is_zero() or f.degree < 1:
        raise FFClassError("no prime factors")
    rest = f.monic()
    out: list[tuple[Poly, int]] = []
    d = 1
    while 2 * d <= rest.degree:
        for P in monic_irreducibles(f.p, d):
            if 2 * d > rest.degree:
                break
            m = 0
            while True:
                q, r = divmod(rest, P)
                if r:
                    break
                rest, m = q, m + 1
            if m:
                out.append((P, m))
        d += 1
    if rest.degree >= 1:
        # leftover is irreducible; it may repeat an already found factor
        for i, (P, m) in enumerate(out):
            if P == rest:
                out[i] = (P, m + 1)
                break
        else:
            out.append((rest, 1))
    out.sort(key=lambda pm: pm[0].sort_key())
    return out


def residue_symbol(v: Poly, P: Poly) -> int:
    """Quadratic residue symbol of v modulo the monic irreducible P."""
    if not P.is_monic() or not is_irreducible(P):
        raise FFClassError("modulus not prime")
    r = v % P
    if r.is_zero():
        return 0
    if P.degree == 1:
        # residue field is F_p itself
        return 1 if is_square_mod(r.coeffs[0], P.p) else -1
    e = (P.p ** P.degree - 1) // 2
    s = _powmod(r, e, P)
    if s.is_one():
        return 1
    if s == Poly.const(-1, P.p):
        return -1
    raise FFClassError("modulus not prime")
