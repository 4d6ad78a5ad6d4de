import itertools

import pytest
from hypothesis import assume, given, strategies as st

from ffclass.cli import parse_poly
from ffclass.errors import FFClassError
from ffclass.poly import (Poly, format_poly, is_irreducible, monic_irreducibles,
                          poly_factor, poly_gcd_x, poly_is_squarefree, polys_up_to,
                          residue_symbol)
from strategies import PRIMES, polys, prime_and_polys


def P(s, p):
    return parse_poly(s, p)


def test_divmod_example():
    assert divmod(P("x^3+x+1", 3), P("x-1", 3)) == (P("x^2+x+2", 3), P("0", 3))


def test_derivative_char3():
    assert P("x^3+x+1", 3).derivative() == P("1", 3)


def test_eval():
    assert P("x^3+x", 5)(2) == 0
    assert P("x^3+x", 5).eval(2).value == 0


@pytest.mark.parametrize("f,g,p,d", [
    ("x^3+x+1", "1", 3, "1"),
    ("x^3+x+1", "3x^2+1", 3, "1"),
    ("x^2", "x^2+x", 5, "x"),
])
def test_gcd_examples(f, g, p, d):
    assert poly_gcd_x(P(f, p), P(g, p))[0] == P(d, p)


def test_gcd_of_zeros():
    with pytest.raises(FFClassError):
        poly_gcd_x(Poly((), 3), Poly((), 3))


@pytest.mark.parametrize("f,p,want", [("x^3+x+1", 3, True), ("x^2", 3, False), ("x^3+x", 5, True)])
def test_squarefree(f, p, want):
    assert poly_is_squarefree(P(f, p)) is want


@pytest.mark.parametrize("f,p,want", [
    ("x^3+x+1", 3, [("x+2", 1), ("x^2+x+2", 1)]),
    ("x^3+x", 5, [("x", 1), ("x+2", 1), ("x+3", 1)]),
    ("x^2", 3, [("x", 2)]),
])
def test_factor_examples(f, p, want):
    assert poly_factor(P(f, p)) == [(P(g, p), m) for g, m in want]


@pytest.mark.parametrize("v,P_,p,want", [
    ("2", "x+2", 3, -1),
    ("x+2", "x^2+x+2", 3, 1),
    ("x", "x^2+x+2", 3, -1),
    ("x^2+x+2", "x^2+x+2", 3, 0),
])
def test_residue_symbol_examples(v, P_, p, want):
    assert residue_symbol(P(v, p), P(P_, p)) == want


def test_residue_symbol_rejects_reducible_modulus():
    with pytest.raises(FFClassError):
        residue_symbol(P("x", 3), P("x^2+2", 3))


def test_zero_division():
    with pytest.raises(ZeroDivisionError):
        divmod(P("x", 3), Poly((), 3))


def test_zero_polynomial():
    z = Poly((), 5)
    assert z.degree == -1 and z.is_zero() and format_poly(z) == "0"


@pytest.mark.parametrize("p", [3, 5])
def test_factor_remultiplies_all_monic_cubics(p):
    for tail in itertools.product(range(p), repeat=3):
        f = Poly(tail + (1,), p)
        prod = Poly((1,), p)
        for g, m in poly_factor(f):
            assert is_irreducible(g) and g.is_monic()
            prod = prod * g ** m
        assert prod == f


@pytest.mark.parametrize("p,d,count", [(3, 1, 3), (3, 2, 3), (3, 3, 8), (5, 2, 10), (7, 2, 21)])
def test_irreducible_counts(p, d, count):
    assert len(monic_irreducibles(p, d)) == count


@given(prime_and_polys(2))
def test_divmod_round_trip(args):
    p, f, g = args
    assume(g)
    q, r = divmod(f, g)
    assert q * g + r == f and r.degree < g.degree


@given(prime_and_polys(2))
def test_gcd_bezout_and_symmetry(args):
    p, f, g = args
    assume(f or g)
    d, s, t = poly_gcd_x(f, g)
    assert s * f + t * g == d and d.is_monic()
    assert d.divides(f) and d.divides(g)
    assert poly_gcd_x(g, f)[0] == d


@given(prime_and_polys(3, max_deg=3))
def test_ring_axioms(args):
    p, f, g, h = args
    assert (f + g) * h == f * h + g * h
    assert f * g == g * f
    assert (f - g) + g == f


@st.composite
def symbol_case(draw):
    p = draw(st.sampled_from(PRIMES))
    d = draw(st.sampled_from((1, 2)))
    Pm = draw(st.sampled_from(monic_irreducibles(p, d)))
    return Pm, draw(polys(p, 5)), draw(polys(p, 5))


_squares = {}


def _square_residues(Pm):
    if Pm not in _squares:
        _squares[Pm] = {(r * r % Pm) for r in polys_up_to(Pm.p, Pm.degree - 1) if r}
    return _squares[Pm]


@given(symbol_case())
def test_residue_symbol_multiplicative(case):
    Pm, v, w = case
    sv, sw = residue_symbol(v, Pm), residue_symbol(w, Pm)
    assume(sv and sw)
    assert residue_symbol(v * w, Pm) == sv * sw


@given(symbol_case())
def test_residue_symbol_matches_square_table(case):
    Pm, v, _ = case
    r = v % Pm
    want = 0 if not r else (1 if r in _square_residues(Pm) else -1)
    assert residue_symbol(v, Pm) == want


@given(prime_and_polys(1, max_deg=6))
def test_format_parse_round_trip(args):
    p, f = args
    s = format_poly(f)
    assert P(s, p) == f
    assert format_poly(P(s, p)) == s
