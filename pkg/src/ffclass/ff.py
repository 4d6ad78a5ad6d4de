"""Arithmetic in a prime field F_p, p odd."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import FFClassError

_EXHAUSTIVE_SQRT_LIMIT = 10_000


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class PrimeField:
    p: int

    def __post_init__(self):
        if not (3 <= self.p < 2**31) or not _is_prime(self.p):
            raise FFClassError(f"p={self.p} is not an odd prime below 2^31")

    def __call__(self, value: int) -> FieldElement:
        return FieldElement(value % self.p, self)

    def elements(self):
        return [FieldElement(v, self) for v in range(self.p)]


@dataclass(frozen=True)
class FieldElement:
    value: int
    field: PrimeField

    def __post_init__(self):
        if not 0 <= self.value < self.field.p:
            raise FFClassError(f"{self.value} not reduced mod {self.field.p}")

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FFClassError("cannot mix elements of different fields")
            return other.value
        return int(other)

    def __add__(self, other):
        return self.field(self.value + self._coerce(other))

    __radd__ = __add__

    def __sub__(self, other):
        return self.field(self.value - self._coerce(other))

    def __rsub__(self, other):
        return self.field(self._coerce(other) - self.value)

    def __mul__(self, other):
        return self.field(self.value * self._coerce(other))

    __rmul__ = __mul__

    def __neg__(self):
        return self.field(-self.value)

    def __pow__(self, n: int):
        return self.field(pow(self.value, n, self.field.p))

    def inverse(self) -> FieldElement:
        if self.value == 0:
            raise ZeroDivisionError("zero has no inverse")
        return self.field(pow(self.value, -1, self.field.p))

    def __truediv__(self, other):
        return self * self.field(self._coerce(other)).inverse()

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"{self.value} (mod {self.field.p})"


# Integer-level helpers; the rest of the package works on raw residues.

def is_square_mod(x: int, p: int) -> bool:
    x %= p
    return x == 0 or pow(x, (p - 1) // 2, p) == 1


def _tonelli_shanks(n: int, p: int) -> int:
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while is_square_mod(z, p):
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(n, q, p), pow(n, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r


@lru_cache(maxsize=None)
def _sqrt_table(p: int) -> dict[int, int]:
    table: dict[int, int] = {}
    for y in range(p):
        table.setdefault(y * y % p, y)
    return table


def sqrt_mod(x: int, p: int) -> int | None:
    """Smaller of the two square roots of x mod p, or None."""
    x %= p
    if p < _EXHAUSTIVE_SQRT_LIMIT:
        return _sqrt_table(p).get(x)
    if not is_square_mod(x, p):
        return None
    if x == 0:
        return 0
    r = _tonelli_shanks(x, p)
    return min(r, p - r)


@lru_cache(maxsize=None)
def smallest_nonsquare_mod(p: int) -> int:
    for z in range(2, p):
        if not is_square_mod(z, p):
            return z
    raise FFClassError(f"no non-square mod {p}")


def fe_is_square(x: FieldElement) -> bool:
    return is_square_mod(x.value, x.field.p)


def fe_sqrt(x: FieldElement) -> FieldElement | None:
    r = sqrt_mod(x.value, x.field.p)
    return None if r is None else x.field(r)


def fe_smallest_nonsquare(field: PrimeField) -> FieldElement:
    return field(smallest_nonsquare_mod(field.p))
