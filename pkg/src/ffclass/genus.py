"""Genus characters of forms of negated determinant alpha.

Each monic irreducible factor P of alpha gives a character: the quadratic
residue symbol mod P of any value of the form prime to P. Character
vectors are compared modulo the twist tau = (symbol(lambda, P))_P of a
fixed non-square unit lambda.
"""
from __future__ import annotations

from dataclasses import dataclass

from .classgroup import ClassGroupTable, ramified_primes
from .errors import FFClassError, GenusConsistencyError
from .ff import smallest_nonsquare_mod
from .ideal import jac_compose
from .poly import Poly, residue_symbol
from .quadform import QuadForm, identity_form, mumford_to_qf


@dataclass(frozen=True)
class GenusVector:
    chars: tuple[int, ...]
    normalized: tuple[int, ...]


def twist_vector(alpha: Poly) -> tuple[int, ...]:
    lam = Poly((smallest_nonsquare_mod(alpha.p),), alpha.p)
    return tuple(residue_symbol(lam, P) for P in ramified_primes(alpha))


def gen_characters(q: QuadForm, alpha: Poly) -> tuple[int, ...]:
    values = (q.a, q.c, q.a + q.b + q.c)
    chars = []
    for P in ramified_primes(alpha):
        for val in values:
            s = residue_symbol(val, P)
            if s:
                chars.append(s)
                break
        else:
            raise FFClassError("form not primitive")
    return tuple(chars)


def _bits(chars) -> tuple[int, ...]:
    return tuple(0 if c == 1 else 1 for c in chars)


def normalize(chars, tau) -> tuple[int, ...]:
    twisted = tuple(c * t for c, t in zip(chars, tau))
    return min(_bits(chars), _bits(twisted))


def gen_genus(q: QuadForm, alpha: Poly) -> GenusVector:
    chars = gen_characters(q, alpha)
    return GenusVector(chars, normalize(chars, twist_vector(alpha)))


def gen_is_principal(q: QuadForm, alpha: Poly) -> bool:
    return gen_genus(q, alpha).normalized == gen_genus(identity_form(alpha), alpha).normalized


@dataclass(frozen=True)
class GenusPartition:
    genera: tuple[tuple[int, ...], ...]
    labels: tuple[tuple[int, ...], ...]
    principal: tuple[int, ...]

    @property
    def count(self) -> int:
        return len(self.genera)


def gen_partition(table: ClassGroupTable, check: bool = True) -> GenusPartition:
    alpha = table.alpha
    tau = twist_vector(alpha)
    labels = [normalize(gen_characters(q, alpha), tau) for q in table.forms]
    groups: dict[tuple[int, ...], list[int]] = {}
    for i, lab in enumerate(labels):
        groups.setdefault(lab, []).append(i)
    genera = tuple(tuple(g) for g in groups.values())
    principal = tuple(groups[labels[0]])  # class 0 is the identity
    part = GenusPartition(genera, tuple(labels), principal)
    if check:
        _check_partition(table, part)
    return part


def _check_partition(table: ClassGroupTable, part: GenusPartition):
    r = len(ramified_primes(table.alpha))
    if part.count != 2 ** (r - 1):
        raise GenusConsistencyError(
            f"{part.count} genera, expected 2^(r-1) = {2 ** (r - 1)} for r = {r}")
    sizes = {len(g) for g in part.genera}
    if len(sizes) != 1:
        raise GenusConsistencyError(f"genera of unequal sizes {sorted(sizes)}")
    squares = sorted({table.index(jac_compose(I, I)) for I in table.classes})
    if sorted(part.principal) != squares:
        raise GenusConsistencyError(
            f"principal genus {sorted(part.principal)} != squares {squares}")


def square_is_principal(I, alpha: Poly) -> bool:
    return gen_is_principal(mumford_to_qf(jac_compose(I, I)), alpha)
