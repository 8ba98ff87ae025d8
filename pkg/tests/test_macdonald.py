import pytest

from dahaverify.daha import CyclotomicParams
from dahaverify.errors import NonDominantWeight, PochhammerPole
from dahaverify.laurent import LaurentPoly, monomial_symmetric, power_sum
from dahaverify.macdonald import (
    dual_macdonald_eigenvalue,
    gamma_eigenvalue,
    gamma_window,
    macdonald_eigenvalue,
    macdonald_operator,
    macdonald_poly,
    macdonald_table,
    pochhammer,
    render_expansion,
    verify_gamma_conjugation,
    verify_macdonald,
    y_eigenvalue,
    y_spectrum,
)
from dahaverify.qdo import dro_apply_poly
from dahaverify.report import CheckStatus
from dahaverify.scalars import ParamContext


@pytest.mark.unit
class TestEigenvalues:
    def test_macdonald_eigenvalue(self, exact):
        assert macdonald_eigenvalue((1, 0), exact) == exact.qt(2, 2) + exact.one
        assert dual_macdonald_eigenvalue((1, 0), exact) == exact.qt(-2, -2) + exact.one

    def test_y_spectrum(self, exact):
        assert y_spectrum((1, 0), exact) == (exact.qt(2, 1), exact.qt(0, -1))

    def test_y_eigenvalue(self, exact):
        p1 = power_sum(exact, 2, 1)
        assert y_eigenvalue((1, 0), p1) == exact.qt(2, 1) + exact.inv(exact.t)

    def test_y_eigenvalue_needs_dominant(self, exact):
        with pytest.raises(NonDominantWeight):
            y_eigenvalue((0, 1), power_sum(exact, 2, 1))


@pytest.mark.unit
class TestMacdonaldTable:
    def test_two_row(self, exact):
        q, t = exact.q, exact.t
        expansion = macdonald_table(exact, 2).expansion((2, 0))
        c = (exact.one + q ** 2) * (exact.one - t ** 2) / (exact.one - q ** 2 * t ** 2)
        assert expansion == {(2, 0): exact.one, (1, 1): c}

    def test_minimal_weights(self, exact):
        table = macdonald_table(exact, 2)
        assert table.expansion((1, 0)) == {(1, 0): exact.one}
        assert table.expansion((1, 1)) == {(1, 1): exact.one}

    def test_negative_weights_shift(self, exact):
        assert macdonald_table(exact, 2).expansion((0, -1)) == {(0, -1): exact.one}

    def test_eigenvector(self, exact):
        table = macdonald_table(exact, 2)
        p = table.poly((2, 0))
        image = dro_apply_poly(macdonald_operator(2, exact), p)
        assert image == p.scale(macdonald_eigenvalue((2, 0), exact))

    def test_expand_round_trip(self, exact):
        table = macdonald_table(exact, 2)
        p = table.poly((2, 0)) + table.poly((1, 1)).scale(exact.q)
        assert table.expand(p) == {(2, 0): exact.one, (1, 1): exact.q}

    def test_table_is_cached_per_field(self, exact, exact1):
        assert macdonald_table(exact, 2) is macdonald_table(exact, 2)
        assert macdonald_table(exact, 2) is not macdonald_table(exact1, 2)

    def test_render(self, exact):
        assert render_expansion({(1, 1): exact.one}, exact) == "m[1,1]"
        assert render_expansion({(1, 0): exact.one}, exact) == "m[1]"
        assert render_expansion({}, exact) == "0"
        three = {(2, 0): exact.one, (1, 1): exact.from_int(3)}
        assert render_expansion(three, exact) == "m[2] + (3)*m[1,1]"


@pytest.mark.unit
class TestPochhammer:
    def test_positive(self, exact):
        x, q = exact.t, exact.q
        assert pochhammer(x, q, 0, exact) == exact.one
        assert pochhammer(x, q, 2, exact) == (exact.one - x) * (exact.one - x * q)

    def test_negative(self, exact):
        x, q = exact.t, exact.q
        assert pochhammer(x, q, -1, exact) == exact.inv(exact.one - x * exact.inv(q))

    def test_pole(self, exact):
        with pytest.raises(PochhammerPole):
            pochhammer(exact.one, exact.q, 1, exact)
        with pytest.raises(PochhammerPole):
            pochhammer(exact.q, exact.q, -1, exact)


@pytest.mark.unit
class TestGamma:
    def test_rank_one_eigenvalue(self, exact1):
        params = CyclotomicParams.generic(exact1, 1, 1)
        z = exact1.z(1)
        expected = exact1.inv(exact1.one - exact1.q_pow(-3) * exact1.inv(z))
        assert gamma_eigenvalue((1,), params) == expected
        assert gamma_eigenvalue((0,), params) == exact1.one

    def test_rank_two_eigenvalues(self, exact1):
        params = CyclotomicParams.generic(exact1, 2, 1)
        zi = exact1.inv(exact1.z(1))
        assert gamma_eigenvalue((0, -1), params) == exact1.one - exact1.q_pow(-1) * zi
        expected = exact1.inv(exact1.one - exact1.qt(-3, -2) * zi)
        assert gamma_eigenvalue((1, 0), params) == expected

    def test_window(self):
        window = gamma_window(2, 1)
        assert (0, 0) in window and (1, 0) in window and (0, -1) in window
        assert all(sum(abs(x) for x in lam) <= 1 for lam in window)
        assert len(window) == 3

    def test_conjugation_rank_one(self, exact1):
        params = CyclotomicParams.generic(exact1, 1, 1)
        report = verify_gamma_conjugation(1, params, 2)
        assert report.ok
        assert report.summary.passed > 0

    def test_conjugation_rank_two_exact(self, exact1):
        params = CyclotomicParams.generic(exact1, 2, 1)
        report = verify_gamma_conjugation(2, params, 1)
        assert report.ok
        assert report.statuses()["entry[0,0->0,-1]"] == CheckStatus.PASS
        assert report.summary.passed >= 2

    @pytest.mark.slow
    @pytest.mark.parametrize("seed", [1, 2, 3])
    def test_conjugation_rank_two_modp(self, seed):
        ctx = ParamContext(mode="modp-random", seed=seed, ell=2, n=2)
        params = CyclotomicParams.generic(ctx.make_field(), 2, 2)
        report = verify_gamma_conjugation(2, params, 3, ctx)
        assert report.summary.fail == 0
        assert report.summary.passed > 0
        assert report.statuses()["entry[1,0->0,0]"] == CheckStatus.PASS


@pytest.mark.integration
class TestVerifyMacdonald:
    def test_exact_rank_two(self, exact_ctx):
        report = verify_macdonald(2, 2, exact_ctx)
        assert report.ok
        statuses = report.statuses()
        assert statuses["eigen[2,0]"] == CheckStatus.PASS
        assert statuses["twist[1,0]"] == CheckStatus.PASS
        assert statuses["y_spectrum[1,0,p2]"] == CheckStatus.PASS
        assert "specialize[t=q^2][1,1]" in statuses

    def test_modp_rank_three(self):
        report = verify_macdonald(3, 2, ParamContext(mode="modp-random", seed=1, n=3))
        assert report.ok
        assert not any(name.startswith("specialize") for name in report.statuses())


@pytest.mark.unit
def test_symmetric_images_are_symmetric(exact):
    table = macdonald_table(exact, 3)
    p = table.poly((1, 1, 0))
    assert p.is_symmetric()
    assert p == monomial_symmetric((1, 1, 0), 3, exact)
    assert LaurentPoly.one(exact, 3) == table.poly((0, 0, 0))


@pytest.mark.unit
def test_macdonald_poly_two_row(exact):
    q, t = exact.q, exact.t
    c = (exact.one + q ** 2) * (exact.one - t ** 2) / (exact.one - q ** 2 * t ** 2)
    expected = monomial_symmetric((2, 0), 2, exact) + monomial_symmetric((1, 1), 2, exact).scale(c)
    assert macdonald_poly((2, 0), 2, exact) == expected
