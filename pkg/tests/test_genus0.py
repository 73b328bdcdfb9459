from fractions import Fraction

import pytest

from cuspmotive import genus0, symfunc as sf
from cuspmotive.combinatorics import Partition, moebius, partitions_of
from cuspmotive.motive import L, ONE, MotiveClass


def P(*parts):
    return Partition(parts)


def R(x):
    return MotiveClass.from_rational(Fraction(x))


def test_closed_point_counts():
    assert genus0.closed_point_count(1) == L + ONE
    two = genus0.closed_point_count(2)
    assert 2 * two == L * L - L
    three = genus0.closed_point_count(3)
    assert 3 * three == L**3 - L


def test_a0_degree_three():
    a0 = genus0.a0_series(3)
    assert a0.coefficient(P(1, 1, 1)) == R(Fraction(1, 6))
    assert a0.coefficient(P(2, 1)) == R(Fraction(1, 2))
    assert a0.coefficient(P(3)) == R(Fraction(1, 3))
    assert a0.coefficient(P(1)).is_zero()
    assert a0.coefficient(P(2)).is_zero()


def test_a0_degree_four_frozen():
    a0 = genus0.a0_series(4)
    quarter = Fraction(1, 4)
    assert a0.coefficient(P(1, 1, 1, 1)) == Fraction(1, 24) * (L - 2 * ONE)
    assert a0.coefficient(P(2, 1, 1)) == quarter * L
    assert a0.coefficient(P(2, 2)) == Fraction(1, 8) * (L - 2 * ONE)
    assert a0.coefficient(P(3, 1)) == Fraction(1, 3) * (L + ONE)
    assert a0.coefficient(P(4)) == quarter * L


def test_a0_nonequivariant_ranks():
    # e_c of the open configuration spaces modulo automorphisms
    assert genus0.a0_series(3).dimension(3) == ONE
    assert genus0.a0_series(4).dimension(4) == L - 2 * ONE
    assert genus0.a0_series(5).dimension(5) == L * L - 5 * L + 6 * ONE


def test_a0_weight_bounds():
    a0 = genus0.a0_series(8)
    for n in range(3, 9):
        for lam, coeff in a0.degree_terms(n).items():
            assert coeff.is_tate_only()
            for j, c in coeff.tate_items():
                assert 0 <= j <= n - 3


def test_twisted_count_divisibility_is_enforced():
    # every partition of every degree must divide exactly; spot-check deg 6
    for lam in partitions_of(6):
        genus0.twisted_count_poly(lam)  # raises ArithmeticError on failure


def test_derivatives_shift_degree():
    a0p = genus0.a0_first_derivative(4)
    assert a0p.max_degree == 4
    assert a0p.degree_terms(2) == sf.complete(2, 4).degree_terms(2)
    a0pp = genus0.a0_second_derivative(4)
    assert a0pp.coefficient(P(1)) == ONE


def test_ch_lie_low_degrees():
    lie = genus0.ch_lie(6)
    assert not lie.degree_terms(1)
    assert not lie.degree_terms(2)
    assert lie.degree_terms(3) == sf.elementary(3, 6).degree_terms(3)


def test_signed_lie_closed_form():
    n = 8
    signed = genus0.signed_lie(n)
    total = sf.zero(n)
    for m in range(1, n + 1):
        pm = sf.power_sum(m, n)
        total = total - sf.log_one_minus(pm.scaled(-1)).scaled(Fraction(moebius(m), m))
    closed = (
        total * (sf.one(n) + sf.power_sum(1, n))
        + sf.complete(1, n)
        + sf.elementary(2, n)
    )
    assert signed == closed


def test_signed_lie_derivative_identities():
    n = 9
    signed = genus0.signed_lie(n)
    d1 = signed.p_derivative(1).p_derivative(1)
    # p1/(1+p1) = sum (-1)^(m-1) p1^m
    for m in range(1, n - 1):
        assert d1.coefficient(P(*([1] * m))) == R((-1) ** (m - 1))
    d2 = signed.p_derivative(2)
    geom = sf.geometric(sf.power_sum(2, n - 2).scaled(-1))
    closed = (sf.power_sum(1, n - 2) - sf.power_sum(2, n - 2)).scaled(
        Fraction(1, 2)
    ) * geom
    assert d2 == closed


def test_lie_layer_of_point_count():
    n = 8
    assert genus0.a0_series(n).tate_layer(0) == genus0.signed_lie(n)


def test_b0_prime_low_degrees():
    b = genus0.b0_prime(4)
    assert b.degree_terms(2) == sf.complete(2, 4).degree_terms(2)
    deg3 = sf.complete(3, 4).scaled(L + ONE)
    assert b.degree_terms(3) == deg3.degree_terms(3)
    assert not b.degree_terms(1)


def test_b0_prime_betti_numbers():
    b = genus0.b0_prime(4)
    ranks = [b.tate_layer(j).dimension(4).as_rational() for j in range(3)]
    assert ranks == [1, 5, 1]
    assert b.tate_layer(3).dimension(4).is_zero()


def test_b0_prime_palindromic():
    b = genus0.b0_prime(8)
    for n in range(2, 9):
        for lam, coeff in b.degree_terms(n).items():
            assert coeff == coeff.dual_in_dimension(n - 2)


def test_b0_prime_solves_fixed_point():
    n = 7
    b = genus0.b0_prime(n)
    a0p = genus0.a0_first_derivative(n)
    assert a0p.plethysm(sf.complete(1, n) + b) == b


def test_poincare_schur_small():
    t4 = genus0.poincare_schur(4)
    assert t4[0] == {P(4): 1}
    assert t4[1] == {P(2, 2): 1}
    assert len(t4) == 2
    t3 = genus0.poincare_schur(3)
    assert t3 == [{P(3): 1}]


def test_poincare_schur_row_bounds():
    for n in range(3, 8):
        for i, rep in enumerate(genus0.poincare_schur(n)):
            for lam in rep:
                assert lam.rows <= i + 1
                assert rep[lam] > 0


def test_range_guards():
    with pytest.raises(ValueError):
        genus0.a0_series(2)
    with pytest.raises(ValueError):
        genus0.poincare_schur(2)
    with pytest.raises(ValueError):
        genus0.poincare_schur(11)
