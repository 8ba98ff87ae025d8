from fractions import Fraction

import pytest

from dahaverify.errors import ConfigError, DivisionByZero, ExhaustedDraws, InvalidArgument
from dahaverify.scalars import (
    MERSENNE_61,
    ExactField,
    ModPField,
    ParamContext,
    RationalField,
    _blacklisted,
    draw_params,
    make_field,
    param_names,
    scalar_arith,
)


@pytest.mark.unit
class TestModPField:
    @pytest.fixture
    def f7(self):
        return ModPField(0, 7, {"q": 3, "t": 2})

    def test_arithmetic(self, f7):
        a = f7.q
        assert a + 5 == 1
        assert a * 4 == 5
        assert 2 - a == 6
        assert -a == 4

    def test_inverse(self, f7):
        assert f7.inv(f7.q) == 5
        assert f7.power(f7.t, -1) == 4
        assert f7.div(f7.one, f7.from_int(3)) == 5
        assert f7.q_pow(-2) * f7.q_pow(2) == f7.one

    def test_inverse_of_zero(self, f7):
        with pytest.raises(DivisionByZero):
            f7.inv(f7.from_int(7))

    def test_fractions(self, f7):
        assert f7.from_fraction(Fraction(1, 2)) == 4
        with pytest.raises(DivisionByZero):
            f7.from_fraction(Fraction(1, 7))

    def test_truthiness(self, f7):
        assert not f7.from_int(7)
        assert f7.from_int(8)

    def test_residues(self, f7):
        assert f7.residue(f7.from_int(-1)) == 6
        assert f7.render(-f7.one) == "6"


@pytest.mark.unit
class TestExactField:
    def test_parameters(self, exact1):
        assert param_names(1) == ["q", "t", "Z1"]
        assert exact1.q * exact1.inv(exact1.q) == exact1.one
        assert exact1.qt(1, 1) == exact1.q * exact1.t
        assert exact1.z_values() == [exact1.z(1)]

    def test_unknown_parameter(self, exact):
        with pytest.raises(ConfigError):
            exact.z(1)

    def test_division_by_zero(self, exact):
        with pytest.raises(DivisionByZero):
            exact.div(exact.one, exact.zero)
        with pytest.raises(ZeroDivisionError):
            exact.inv(exact.zero)

    def test_negative_powers(self, exact):
        assert exact.power(exact.q, -2) * exact.q_pow(2) == exact.one
        assert exact.q_pow(-3) == exact.inv(exact.q ** 3)

    def test_from_fraction(self, exact):
        assert exact.from_fraction(Fraction(1, 2)) * 2 == exact.one

    def test_specialize_t(self, exact):
        x = (exact.one - exact.t_pow(2)) / (exact.one - exact.qt(2, 2))
        expected = (exact.one - exact.q_pow(4)) / (exact.one - exact.q_pow(6))
        assert exact.specialize_t(x, 2) == expected
        assert exact.specialize_t(exact.t, 0) == exact.one

    def test_specialize_t_rejects_negative_exponent(self, exact):
        with pytest.raises(ConfigError):
            exact.specialize_t(exact.t, -1)

    def test_t_exponent_field(self):
        f = ExactField(0, t_exponent=2)
        assert f.t == f.q ** 2


@pytest.mark.unit
class TestRandomBackends:
    def test_modp_field(self, modp):
        assert modp.mode == "modp-random"
        assert modp.prime == MERSENNE_61
        assert modp.q * modp.inv(modp.q) == 1
        assert modp.from_fraction(Fraction(1, 2)) * 2 == modp.one

    def test_modp_cannot_specialize(self, modp):
        with pytest.raises(ConfigError):
            modp.specialize_t(modp.t, 2)

    def test_rational_field(self):
        f = make_field("rational-random", seed=3)
        assert isinstance(f, RationalField)
        assert isinstance(f.q, Fraction)
        assert f.q != 0 and f.q != 1

    def test_missing_parameter(self, modp):
        with pytest.raises(ConfigError):
            modp.z(2)


@pytest.mark.unit
class TestParamContext:
    def test_unknown_mode(self):
        with pytest.raises(ConfigError):
            ParamContext(mode="symbolic")

    def test_negative_ell(self):
        with pytest.raises(ConfigError):
            ParamContext(ell=-1)

    def test_exact_mode_takes_no_assignments(self):
        with pytest.raises(ConfigError):
            ParamContext(mode="exact", assignments={"q": 2})

    def test_draw_is_deterministic(self):
        ctx = ParamContext(mode="modp-random", seed=11, ell=2)
        first, second = draw_params(ctx), draw_params(ctx)
        assert first.assignments == second.assignments
        assert set(first.assignments) == {"q", "t", "Z1", "Z2"}
        assert all(v not in (0, 1) for v in first.assignments.values())
        assert first.prime == MERSENNE_61

    def test_seeds_differ(self):
        a = draw_params(ParamContext(mode="modp-random", seed=1))
        b = draw_params(ParamContext(mode="modp-random", seed=2))
        assert a.assignments != b.assignments

    def test_rational_draw(self):
        ctx = draw_params(ParamContext(mode="rational-random", seed=5))
        assert ctx.prime is None
        assert all(isinstance(v, Fraction) for v in ctx.assignments.values())

    def test_draw_needs_random_mode(self):
        with pytest.raises(ConfigError):
            draw_params(ParamContext(mode="exact"))

    def test_exhausted_budget(self):
        with pytest.raises(ExhaustedDraws):
            draw_params(ParamContext(mode="modp-random", seed=1), budget=0)

    def test_make_field_reuses_assignments(self):
        ctx = draw_params(ParamContext(mode="modp-random", seed=4))
        assert ctx.make_field().q == ctx.assignments["q"]


@pytest.mark.unit
class TestBlacklist:
    def test_pure_q_root_of_unity(self):
        assert _blacklisted({"q": Fraction(-1), "t": Fraction(3, 7)}, 48, Fraction(1))

    def test_pure_t_root_of_unity(self):
        assert _blacklisted({"q": Fraction(3, 7), "t": Fraction(-1)}, 48, Fraction(1))

    def test_mixed_relation(self):
        assert _blacklisted({"q": Fraction(2), "t": Fraction(1, 4)}, 4, Fraction(1))
        assert not _blacklisted({"q": Fraction(2), "t": Fraction(1, 4)}, 1, Fraction(1))

    def test_generic_values_pass(self):
        assert not _blacklisted({"q": Fraction(3, 7), "t": Fraction(5, 11)}, 48, Fraction(1))

    @pytest.mark.parametrize("seed", [1162, 1336, 1420, 1460, 1493])
    def test_rational_draws_avoid_minus_one(self, seed):
        ctx = draw_params(ParamContext(mode="rational-random", seed=seed, n=3))
        assert ctx.assignments["q"] != -1
        assert ctx.assignments["t"] != -1


@pytest.mark.unit
def test_scalar_arith(exact):
    assert scalar_arith(exact, exact.q, exact.q, "mul") == exact.q_pow(2)
    with pytest.raises(DivisionByZero):
        scalar_arith(exact, exact.one, exact.zero, "div")
    with pytest.raises(InvalidArgument):
        scalar_arith(exact, exact.one, exact.one, "pow")
