import pytest
from hypothesis import given, strategies as st

from ffclass.errors import FFClassError
from ffclass.ff import (PrimeField, fe_is_square, fe_smallest_nonsquare, fe_sqrt,
                        is_square_mod, sqrt_mod)

SMALL_PRIMES = [p for p in range(3, 101) if all(p % d for d in range(2, p))]


@pytest.mark.parametrize("p,x,want", [(3, 1, True), (3, 2, False), (5, 4, True)])
def test_is_square_examples(p, x, want):
    assert fe_is_square(PrimeField(p)(x)) is want


@pytest.mark.parametrize("p,x,want", [(5, 4, 2), (3, 0, 0), (3, 2, None)])
def test_sqrt_examples(p, x, want):
    r = fe_sqrt(PrimeField(p)(x))
    assert (None if r is None else r.value) == want


@pytest.mark.parametrize("p,want", [(3, 2), (5, 2), (7, 3)])
def test_smallest_nonsquare(p, want):
    assert fe_smallest_nonsquare(PrimeField(p)).value == want


@pytest.mark.parametrize("bad", [1, 2, 4, 9, 15, 2**31 + 11])
def test_field_rejects_non_odd_primes(bad):
    with pytest.raises(FFClassError):
        PrimeField(bad)


def test_field_arithmetic():
    F = PrimeField(7)
    a, b = F(3), F(5)
    assert (a + b).value == 1 and (a * b).value == 1 and (a - b).value == 5
    assert (a / b).value == 2 and a.inverse() * a == F(1) and (a ** 6).value == 1
    with pytest.raises(ZeroDivisionError):
        F(0).inverse()


@pytest.mark.parametrize("p", SMALL_PRIMES)
def test_exactly_half_the_units_are_squares(p):
    assert sum(is_square_mod(x, p) for x in range(1, p)) == (p - 1) // 2


def test_tonelli_shanks_branch():
    p = 1_000_003  # above the table cutoff
    for x in (2, 3, 5, 12345, 999_999):
        r = sqrt_mod(x, p)
        assert (r is not None) == is_square_mod(x, p)
        if r is not None:
            assert r * r % p == x and r <= p - r


@given(st.sampled_from(SMALL_PRIMES), st.integers(1, 10**6))
def test_nonsquare_flips_square_class(p, x):
    F = PrimeField(p)
    x = F(x % (p - 1) + 1)
    lam = fe_smallest_nonsquare(F)
    assert fe_is_square(x) != fe_is_square(x * lam)


@given(st.sampled_from(SMALL_PRIMES), st.integers(0, 10**6))
def test_sqrt_iff_square(p, x):
    x = PrimeField(p)(x)
    r = fe_sqrt(x)
    assert (r is not None) == fe_is_square(x)
    if r is not None:
        assert r * r == x
