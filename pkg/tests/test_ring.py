import pytest
import sympy
from hypothesis import given, strategies as st

from app.models.factorization import Factorization, ShapeTag
from app.services.ring_service import RingService
from app.utils.errors import DomainError


@pytest.mark.parametrize('n, factors', [
    (12, ((2, 2), (3, 1))),
    (17, ((17, 1),)),
    (225, ((3, 2), (5, 2))),
])
def test_factorize_examples(n, factors):
    assert RingService.factorize(n).factors == factors


@pytest.mark.parametrize('bad', [0, 1, -6, True, 2.5, '12'])
def test_factorize_rejects_non_moduli(bad):
    with pytest.raises(DomainError):
        RingService.factorize(bad)


def test_factorization_checks_its_invariants():
    with pytest.raises(ValueError):
        Factorization(12, ((3, 1), (2, 2)))
    with pytest.raises(ValueError):
        Factorization(12, ((2, 1), (3, 1)))
    with pytest.raises(ValueError):
        Factorization(6, ((6, 1),))
    with pytest.raises(ValueError):
        Factorization(12, ((3, 1), (4, 1)))
    with pytest.raises(ValueError):
        Factorization(1, ((1, 1),))


def test_prime_powers_have_only_nilpotent_zero_divisors():
    for n in range(2, 1025):
        if len(sympy.factorint(n)) == 1:
            assert RingService.nilpotents(n) == RingService.zero_divisors(n), n
            assert not RingService.non_nilpotent_zero_divisors(n)


@given(st.integers(min_value=2, max_value=10_000))
def test_factorize_agrees_with_sympy(n):
    assert dict(RingService.factorize(n).factors) == sympy.factorint(n)


@pytest.mark.parametrize('n, expected', [
    (6, (2, 3, 4)),
    (7, ()),
    (16, (2, 4, 6, 8, 10, 12, 14)),
])
def test_zero_divisors_examples(n, expected):
    assert RingService.zero_divisors(n) == expected


@given(st.integers(min_value=2, max_value=10_000))
def test_zero_divisor_count_is_n_minus_totient_minus_one(n):
    assert len(RingService.zero_divisors(n)) == n - sympy.totient(n) - 1


@pytest.mark.parametrize('n, expected', [
    (16, (2, 4, 6, 8, 10, 12, 14)),
    (18, (6, 12)),
    (30, ()),
])
def test_nilpotents_examples(n, expected):
    assert RingService.nilpotents(n) == expected


@given(st.integers(min_value=2, max_value=600))
def test_nilpotents_are_exactly_the_zero_divisors_with_a_vanishing_power(n):
    top = max(e for _, e in RingService.factorize(n).factors)
    nilpotents = set(RingService.nilpotents(n))
    for k in RingService.zero_divisors(n):
        assert (pow(k, top, n) == 0) == (k in nilpotents)
    assert set(RingService.non_nilpotent_zero_divisors(n)) == set(RingService.zero_divisors(n)) - nilpotents


@pytest.mark.parametrize('n, tag, primes', [
    (7, ShapeTag.PRIME, (7,)),
    (30, ShapeTag.SQUAREFREE_COMPOSITE, (2, 3, 5)),
    (9, ShapeTag.P_SQUARED, (3,)),
    (8, ShapeTag.P_CUBED, (2,)),
    (12, ShapeTag.P_SQUARED_Q, (2, 3)),
    (18, ShapeTag.P_SQUARED_Q, (3, 2)),
    (441, ShapeTag.P_SQUARED_Q_SQUARED, (3, 7)),
    (16, ShapeTag.OTHER, (2,)),
    (360, ShapeTag.OTHER, (2, 3, 5)),
])
def test_classify(n, tag, primes):
    shape = RingService.shape_of(n)
    assert shape.tag is tag
    assert shape.primes == primes


def test_squarefree_shape_reports_prime_count():
    assert RingService.shape_of(30).m == 3
    assert RingService.shape_of(15).m == 2
    assert str(RingService.shape_of(12)) == 'p^2q'


def test_is_prime():
    assert [k for k in range(2, 30) if RingService.is_prime(k)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert not RingService.is_prime(1)
