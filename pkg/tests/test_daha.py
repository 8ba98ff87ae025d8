import pytest

from dahaverify.daha import (
    CyclotomicParams,
    DahaGenSymbol,
    dunkl,
    eps_dunkl,
    power_sum_element,
    rep_generator,
    representation,
    verify_daha_presentation,
    verify_dunkl_commutativity,
    verify_power_sums,
    verify_symmetrizer,
)
from dahaverify.errors import BadIndex, ConfigError
from dahaverify.laurent import LaurentPoly, RationalCoeff, monomial_symmetric
from dahaverify.qdo import DRO, dro_apply_poly, dro_compose, dro_equal
from dahaverify.report import CheckStatus
from dahaverify.scalars import ParamContext


@pytest.mark.unit
class TestGeneratorSymbols:
    def test_parse(self):
        assert DahaGenSymbol.parse("Yinv2") == DahaGenSymbol("Yinv", 2)
        assert DahaGenSymbol.parse("T1") == DahaGenSymbol("T", 1)
        assert DahaGenSymbol.parse("pi") == DahaGenSymbol("pi", 0)
        assert DahaGenSymbol.parse("piinv") == DahaGenSymbol("piinv", 0)

    def test_parse_unknown(self):
        with pytest.raises(BadIndex):
            DahaGenSymbol.parse("Q1")

    def test_validate_ranges(self):
        DahaGenSymbol("T", 1).validate(2)
        with pytest.raises(BadIndex):
            DahaGenSymbol("T", 2).validate(2)
        with pytest.raises(BadIndex):
            DahaGenSymbol("Y", 0).validate(2)

    def test_rep_generator(self, exact):
        op = rep_generator(DahaGenSymbol.parse("X2"), 2, exact)
        assert dro_equal(op, DRO.multiplication(LaurentPoly.variable(exact, 2, 1)))


@pytest.mark.unit
class TestCyclotomicParams:
    def test_generic(self, exact1):
        params = CyclotomicParams.generic(exact1, 2)
        assert params.ell == 1
        assert params.z_product() == exact1.z(1)

    def test_literals(self, exact):
        params = CyclotomicParams.from_literals(exact, 2, ["1/2", 3])
        assert params.Z == (exact.from_int(1) / 2, exact.from_int(3))

    def test_zero_entry(self, exact):
        with pytest.raises(ConfigError):
            CyclotomicParams.from_literals(exact, 2, [0])


@pytest.mark.unit
class TestRepresentation:
    def test_t_preserves_symmetric(self, exact):
        rep = representation(exact, 2)
        m = monomial_symmetric((1, 0), 2, exact)
        assert dro_apply_poly(rep.T(1), m) == m.scale(exact.t)

    def test_hecke_inverse(self, exact):
        rep = representation(exact, 2)
        assert dro_equal(dro_compose(rep.T(1), rep.T_inv(1)), rep.identity())

    def test_pi_shape_rank_one(self, exact):
        rep = representation(exact, 1)
        assert dro_equal(rep.Y_inv(1), DRO.shift_operator(exact, 1, (-2,)))
        assert dro_equal(rep.Y(1), DRO.shift_operator(exact, 1, (2,)))

    def test_symmetrizer_rank_two(self, exact):
        rep = representation(exact, 2)
        t = exact.t
        expected = (rep.identity() + rep.T(1).scale(t)).scale(exact.inv(exact.one + t * t))
        assert dro_equal(rep.symmetrizer(), expected)


@pytest.mark.integration
class TestDahaRelations:
    def test_presentation_rank_two(self, exact_ctx):
        report = verify_daha_presentation(2, exact_ctx)
        assert report.ok
        assert report.summary.inconclusive == 0
        assert report.check("hecke_quadratic[1]").status == CheckStatus.PASS
        assert report.check("x1_y2").status == CheckStatus.PASS

    @pytest.mark.slow
    def test_presentation_rank_three(self):
        report = verify_daha_presentation(3, ParamContext(mode="modp-random", seed=2, n=3))
        assert report.ok
        assert "braid[1]" in report.statuses()

    def test_symmetrizer(self, exact_ctx):
        report = verify_symmetrizer(2, exact_ctx)
        assert report.ok
        assert set(report.statuses()) == {"idempotent", "absorbs_t[1]", "sts[1]", "symmetric_image"}


@pytest.mark.unit
class TestDunkl:
    def test_rank_one_terms(self, exact1):
        params = CyclotomicParams.generic(exact1, 1, 1)
        assert set(dunkl(1, params).terms) == {((0,), (-2,)), ((0,), (0,))}

    def test_untwisted_is_x_inverse(self, exact):
        params = CyclotomicParams.generic(exact, 2, 0)
        assert dro_equal(dunkl(1, params), DRO.multiplication(LaurentPoly.variable(exact, 2, 0, -1)))

    def test_index_range(self, exact):
        with pytest.raises(BadIndex):
            dunkl(3, CyclotomicParams.generic(exact, 2, 0))

    def test_anchor_on_constants(self, exact1):
        params = CyclotomicParams.generic(exact1, 2, 1)
        one = LaurentPoly.one(exact1, 2)
        scale = exact1.q_pow(-1) - exact1.z(1)
        for i in (1, 2):
            image = dro_apply_poly(dunkl(i, params), one)
            assert image == LaurentPoly.variable(exact1, 2, i - 1, -1).scale(scale)

    def test_eps_dunkl_rank_one(self, exact1):
        params = CyclotomicParams.generic(exact1, 1, 1)
        coef = LaurentPoly(exact1, 1, {(-1,): exact1.q, (0,): -exact1.z(1)})
        expected = DRO.term(exact1, 1, RationalCoeff(coef), shift=(-2,))
        assert dro_equal(eps_dunkl(params), expected)

    def test_power_sum_element_symmetric(self, exact):
        params = CyclotomicParams.generic(exact, 2, 0)
        op = power_sum_element(1, 0, 0, params)
        image = dro_apply_poly(op, monomial_symmetric((1, 0), 2, exact))
        assert image.is_symmetric()


@pytest.mark.integration
class TestDunklSuites:
    def test_untwisted_commutativity(self, exact_ctx):
        report = verify_dunkl_commutativity(2, 0, exact_ctx)
        assert report.statuses() == {"commute[1,2]": CheckStatus.PASS, "eps_dunkl_ell0": CheckStatus.PASS}

    @pytest.mark.slow
    def test_twisted_commutativity(self):
        report = verify_dunkl_commutativity(2, 1, ParamContext(mode="modp-random", seed=3, ell=1, n=2))
        assert report.ok

    def test_twisted_commutativity_exact(self, exact_ctx1):
        report = verify_dunkl_commutativity(2, 1, exact_ctx1)
        assert report.statuses() == {"commute[1,2]": CheckStatus.PASS}

    @pytest.mark.slow
    @pytest.mark.parametrize("n,ell", [(2, 2), (3, 1), (3, 2)])
    @pytest.mark.parametrize("seed", [1, 2, 3])
    def test_twisted_commutativity_larger(self, n, ell, seed):
        report = verify_dunkl_commutativity(n, ell, ParamContext(mode="modp-random", seed=seed, ell=ell, n=n))
        assert report.ok
        assert len(report.checks) == n * (n - 1) // 2

    def test_power_sums(self):
        report = verify_power_sums(2, 0, ParamContext(mode="modp-random", seed=1, n=2), degree=1)
        assert report.ok
        assert len(report.checks) == 4
