import pytest

from dahaverify.errors import BadIndex
from dahaverify.ncverify.rmatrix import (
    check_r_constants,
    hecke_defect,
    identity,
    invert,
    is_zero_matrix,
    matmul,
    qybe_sides,
    r_matrix,
)
from dahaverify.report import CheckStatus
from dahaverify.scalars import ParamContext


@pytest.mark.unit
class TestRMatrix:
    def test_entries(self, exact):
        r = r_matrix(2, exact)
        m = r.matrix
        assert m[0, 0] == exact.q and m[3, 3] == exact.q
        assert m[1, 1] == exact.one and m[2, 2] == exact.one
        assert m[1, 2] == exact.q - exact.inv(exact.q)
        assert exact.is_zero(m[2, 1])

    def test_inverse(self, exact):
        r = r_matrix(2, exact)
        assert is_zero_matrix(matmul(r.matrix, r.inverse, exact) - identity(exact, 4), exact)

    def test_hecke_condition(self, exact):
        assert is_zero_matrix(hecke_defect(r_matrix(2, exact)), exact)

    def test_qybe(self, modp):
        lhs, rhs = qybe_sides(r_matrix(2, modp))
        assert is_zero_matrix(lhs - rhs, modp)

    def test_free_forms(self, exact):
        r = r_matrix(2, exact)
        assert r.free("I").shape == (4, 4)
        assert r.free("Omega")[1, 2].terms == {(): exact.one}
        with pytest.raises(BadIndex):
            r.free("S")

    def test_rank_must_be_positive(self, exact):
        with pytest.raises(BadIndex):
            r_matrix(0, exact)

    def test_singular_inverse(self, exact):
        with pytest.raises(ZeroDivisionError):
            invert(identity(exact, 2) - identity(exact, 2), exact)


@pytest.mark.integration
class TestRConstants:
    def test_exact_rank_two(self):
        report = check_r_constants(2)
        assert report.ok
        assert report.statuses() == {
            "hecke": CheckStatus.PASS,
            "inverse": CheckStatus.PASS,
            "qybe": CheckStatus.PASS,
            "r21_flip": CheckStatus.PASS,
        }

    def test_modp_rank_three(self):
        assert check_r_constants(3, ParamContext(mode="modp-random", seed=5, n=3)).ok
