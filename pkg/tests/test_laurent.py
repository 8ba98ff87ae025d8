import pytest

from dahaverify.errors import DivisionByZero, NonDominantWeight, UnequalDegree
from dahaverify.laurent import (
    LaurentPoly,
    RationalCoeff,
    act_shift,
    act_symmetry,
    check_dominant,
    compose_perms,
    dominance_leq,
    dominant_weights,
    from_symmetric_expansion,
    inverse_perm,
    monomial_symmetric,
    perm_length,
    power_sum,
    symmetric_expansion,
    transposition,
)


def x(field, n, i, power=1):
    return LaurentPoly.variable(field, n, i, power)


@pytest.mark.unit
class TestWeights:
    def test_dominance(self):
        assert dominance_leq((1, 1), (2, 0))
        assert not dominance_leq((2, 0), (1, 1))
        assert dominance_leq((1, 0, -1), (1, 0, -1))

    def test_dominance_needs_equal_degree(self):
        with pytest.raises(UnequalDegree):
            dominance_leq((1, 0), (1, 1))

    def test_dominant_weights(self):
        assert dominant_weights(2, 2) == [(2, 0), (1, 1)]
        assert dominant_weights(3, 2) == [(2, 0, 0), (1, 1, 0)]
        assert dominant_weights(2, 0, lower=-1) == [(1, -1), (0, 0)]

    def test_check_dominant(self):
        assert check_dominant([2, 1, 1]) == (2, 1, 1)
        with pytest.raises(NonDominantWeight):
            check_dominant((0, 1))

    def test_permutations(self):
        w = (1, 2, 0)
        assert compose_perms(w, inverse_perm(w)) == (0, 1, 2)
        assert perm_length(transposition(3, 1)) == 1
        assert perm_length((2, 1, 0)) == 3


@pytest.mark.unit
class TestLaurentPoly:
    def test_arithmetic(self, exact):
        p = x(exact, 2, 0) + x(exact, 2, 1)
        assert p * p == x(exact, 2, 0, 2) + x(exact, 2, 1, 2) + (x(exact, 2, 0) * x(exact, 2, 1)).scale(exact.from_int(2))
        assert (p - p).is_zero()
        assert p ** 0 == LaurentPoly.one(exact, 2)

    def test_permute(self, exact):
        assert act_symmetry(x(exact, 2, 0), (1, 0)) == x(exact, 2, 1)
        mono = LaurentPoly.monomial(exact, 3, (2, 1, 0))
        assert mono.permute((1, 2, 0)) == LaurentPoly.monomial(exact, 3, (0, 2, 1))

    def test_shift_is_base_q(self, exact):
        p = x(exact, 2, 0, 2) * x(exact, 2, 1, -1)
        assert act_shift(p, (1, 1)) == p.scale(exact.q)
        assert p.shift((0, 0)) is p

    def test_evaluate(self, exact):
        p = x(exact, 2, 0) + x(exact, 2, 1, -1)
        value = p.evaluate((exact.from_int(2), exact.from_int(4)))
        assert value == exact.from_int(9) / exact.from_int(4)

    def test_symmetry(self, exact):
        assert power_sum(exact, 3, 2).is_symmetric()
        assert not x(exact, 3, 0).is_symmetric()
        assert set(power_sum(exact, 2, -1).terms) == {(-1, 0), (0, -1)}

    def test_monomial_symmetric(self, exact):
        assert set(monomial_symmetric((1, 0), 2, exact).terms) == {(1, 0), (0, 1)}
        assert len(monomial_symmetric((2, 1, 0), 3, exact).terms) == 6
        with pytest.raises(NonDominantWeight):
            monomial_symmetric((1, 0), 3, exact)

    def test_symmetric_expansion(self, exact):
        three = exact.from_int(3)
        expansion = {(2, 0): exact.one, (1, 1): three}
        p = from_symmetric_expansion(expansion, 2, exact)
        assert symmetric_expansion(p) == expansion

    def test_render(self, exact):
        assert LaurentPoly.zero(exact, 2).render() == "0"
        assert "x1^2" in x(exact, 2, 0, 2).render()


@pytest.mark.unit
class TestRationalCoeff:
    def test_exact_division(self, exact):
        num = x(exact, 2, 0, 2) - x(exact, 2, 1, 2)
        quotient = RationalCoeff(num, {(0, 1, 0, 0): 1}).to_laurent()
        assert quotient == x(exact, 2, 0) + x(exact, 2, 1)

    def test_nondivisible_stays_rational(self, exact):
        coef = RationalCoeff(x(exact, 2, 0), {(0, 1, 0, 0): 1})
        assert coef.to_laurent() is None
        assert not coef.is_polynomial()

    def test_orientation(self, exact):
        coef = RationalCoeff(LaurentPoly.one(exact, 2), {(1, 0, 0, 0): 1})
        assert coef.den == {(0, 1, 0, 0): 1}
        assert coef.num == LaurentPoly.constant(exact, 2, -exact.one)

    def test_degenerate_factor(self, exact):
        with pytest.raises(DivisionByZero):
            RationalCoeff(LaurentPoly.one(exact, 2), {(0, 0, 0, 0): 1})

    def test_cross_multiplied_equality(self, exact):
        a = RationalCoeff(x(exact, 2, 0), {(0, 1, 0, 0): 1})
        b = RationalCoeff(x(exact, 2, 0) * x(exact, 2, 1), {(0, 1, 0, 0): 1}) * RationalCoeff(x(exact, 2, 1, -1))
        assert a.equals(b)

    def test_evaluate_at_pole(self, exact):
        coef = RationalCoeff(LaurentPoly.one(exact, 2), {(0, 1, 0, 0): 1})
        with pytest.raises(DivisionByZero):
            coef.evaluate((exact.one, exact.one))
        assert coef.evaluate((exact.from_int(3), exact.one)) == exact.inv(exact.from_int(2))

    def test_shift_moves_the_factor(self, exact):
        coef = RationalCoeff(LaurentPoly.one(exact, 2), {(0, 1, 0, 0): 1})
        shifted = coef.shift((2, 0))
        point = (exact.from_int(2), exact.from_int(3))
        moved = (exact.q_pow(2) * point[0], point[1])
        assert shifted.evaluate(point) == coef.evaluate(moved)
