import pytest

from dahaverify.errors import DegreeOverflow, UnknownPresentation
from dahaverify.ncverify.freealg import FreeAlgElem, FreeMatrix
from dahaverify.ncverify.identities import (
    check_matrix_identity,
    determinant_identities,
    identity_suite,
    quantum_determinant,
    weyl_identities,
    x_circ,
)
from dahaverify.ncverify.morphisms import build_morphism, check_morphism, parse_morphism_name
from dahaverify.ncverify.presentations import build_presentation
from dahaverify.scalars import ParamContext


def _moment_identity(pres):
    f = pres.field
    X, D = pres.matrices["X"], pres.matrices["D"]
    q2 = f.q_pow(2)
    rhs = (X * D).scale(q2) + FreeMatrix.identity(f, pres.n).scale(q2 - f.one)
    return D * X, rhs


@pytest.mark.unit
class TestMatrixIdentity:
    def test_rank_one_commutation(self, exact):
        pres = build_presentation("D1", 1, exact)
        lhs, rhs = _moment_identity(pres)
        report = check_matrix_identity(pres, lhs, rhs, 2, name="dx")
        assert report.ok
        assert list(report.statuses()) == ["dx[11,11]"]

    def test_wrong_identity_fails(self, exact):
        pres = build_presentation("D1", 1, exact)
        lhs, _ = _moment_identity(pres)
        report = check_matrix_identity(pres, lhs, pres.matrices["X"] * pres.matrices["D"], 2, name="dx")
        assert not report.ok

    def test_degree_overflow(self, exact):
        pres = build_presentation("D1", 1, exact)
        lhs, rhs = _moment_identity(pres)
        with pytest.raises(DegreeOverflow):
            check_matrix_identity(pres, lhs, rhs, 1)

    def test_rank_one_determinant(self, exact):
        m = FreeMatrix.generators(exact, 1, lambda i, j: f"m{i}{j}")
        assert quantum_determinant(exact, m) == FreeAlgElem.gen(exact, "m11")

    def test_rank_two_determinant(self, exact):
        m = FreeMatrix.generators(exact, 2, lambda i, j: f"m{i}{j}")
        det = quantum_determinant(exact, m)
        expected = FreeAlgElem.word(exact, ("m11", "m22")) - FreeAlgElem.word(exact, ("m21", "m12"), exact.q)
        assert det == expected
        row = quantum_determinant(exact, m, column=False)
        assert row == FreeAlgElem.word(exact, ("m11", "m22")) - FreeAlgElem.word(exact, ("m12", "m21"), exact.q)


@pytest.mark.integration
class TestIdentityFamilies:
    def test_weyl_r_form(self, modp):
        pres = build_presentation("W", 2, modp)
        for name, lhs, rhs in weyl_identities(pres):
            assert check_matrix_identity(pres, lhs, rhs, 2, name=name).ok, name

    def test_x_circ_rank_one(self, exact):
        pres = build_presentation("Dl", 1, exact, ell=3)
        assert x_circ(pres)[0, 0] == FreeAlgElem.word(exact, ("x1_11", "x2_11", "x3_11"))

    def test_determinant_central_rank_one(self, modp):
        pres = build_presentation("Dl", 1, modp)
        ((name, lhs, rhs),) = determinant_identities(pres)
        assert name == "det_central(1)"
        assert check_matrix_identity(pres, lhs, rhs, 2, name=name).ok

    @pytest.mark.slow
    def test_suite_rank_two(self):
        report = identity_suite(2, 2, ParamContext(mode="modp-random", seed=1, ell=1, n=2))
        assert report.summary.fail == 0


@pytest.mark.unit
class TestMorphismNames:
    def test_parse(self):
        assert parse_morphism_name("PhiEll") == ("PhiEll", None)
        assert parse_morphism_name("PhiEll(3)") == ("PhiEll", 3)
        assert parse_morphism_name("Psi1Z") == ("Psi1Z", None)

    def test_unknown(self):
        with pytest.raises(UnknownPresentation):
            parse_morphism_name("Phi")
        with pytest.raises(UnknownPresentation):
            parse_morphism_name("PhiEll(x)")

    def test_images(self):
        morphism = build_morphism("PhiEll(2)", 1, ParamContext(mode="modp-random", seed=1, ell=1, n=1))
        assert morphism.source.title == "D0IV"
        assert morphism.target.title == "Dl(2)"
        assert morphism.images["a11"] == FreeAlgElem.word(morphism.target.field, ("x1_11", "x2_11"))


@pytest.mark.integration
class TestMorphisms:
    def test_psi_rank_one(self):
        ctx = ParamContext(mode="modp-random", seed=1, ell=1, n=1)
        report = check_morphism("Psi1Z", 1, 3, ctx)
        assert report.ok
        assert "image:rel3[11,11]" in report.statuses()

    def test_degree_bound(self):
        ctx = ParamContext(mode="modp-random", seed=1, ell=1, n=1)
        with pytest.raises(DegreeOverflow):
            check_morphism("Psi1Z", 1, 2, ctx)

    @pytest.mark.slow
    def test_phi_rank_one(self):
        ctx = ParamContext(mode="modp-random", seed=1, ell=1, n=1)
        report = check_morphism("PhiEll(2)", 1, 4, ctx)
        assert report.ok
        assert report.params["target"] == "Dl(2)"
