import pytest

from dahaverify.errors import BadIndex, ShapeMismatch, UnknownPresentation
from dahaverify.ncverify import audit
from dahaverify.ncverify.audit import cross_check_field, golden_audit, load_golden
from dahaverify.ncverify.freealg import FreeAlgElem, FreeMatrix, slot1, slot2
from dahaverify.ncverify.presentations import (
    PRESENTATION_NAMES,
    build_presentation,
    ml_weight,
    parse_presentation_name,
    word_of,
)
from dahaverify.ncverify.rewriting import rewrite_system
from dahaverify.report import CheckStatus
from dahaverify.scalars import ExactField

GOLDEN = load_golden()["presentations"]


@pytest.mark.unit
class TestFreeAlgebra:
    def test_products_do_not_commute(self, exact):
        a, b = FreeAlgElem.gen(exact, "a"), FreeAlgElem.gen(exact, "b")
        assert a * b != b * a
        assert (a * b).degree() == 2
        assert FreeAlgElem.zero(exact).degree() == -1

    def test_substitute(self, exact):
        a, b = FreeAlgElem.gen(exact, "a"), FreeAlgElem.gen(exact, "b")
        elem = a * b - (b * a).scale(exact.q)
        image = elem.substitute({"a": b + FreeAlgElem.one(exact)})
        assert image == b * b + b - (b * b + b).scale(exact.q)

    def test_slots(self, exact):
        m = FreeMatrix.generators(exact, 2, lambda i, j: f"m{i}{j}")
        s1, s2 = slot1(m), slot2(m)
        # ((i,k),(j,l)) -> (i * 2 + k, j * 2 + l)
        assert s1[1, 3] == FreeAlgElem.gen(exact, "m12")
        assert s1[0, 3].is_zero()
        assert s2[2, 3] == FreeAlgElem.gen(exact, "m12")
        assert s2[0, 3].is_zero()

    def test_matrix_shapes(self, exact):
        m = FreeMatrix.identity(exact, 2)
        with pytest.raises(ShapeMismatch):
            m * FreeMatrix.identity(exact, 3)
        with pytest.raises(ShapeMismatch):
            m + FreeMatrix.identity(exact, 3)
        assert (m * m - m).is_zero()


@pytest.mark.unit
class TestNames:
    def test_parse(self):
        assert parse_presentation_name("Dl") == ("Dl", 2)
        assert parse_presentation_name("Ml(3)") == ("Ml", 3)
        assert parse_presentation_name("D1") == ("D1", 0)
        assert parse_presentation_name("Dl", ell=3) == ("Dl", 3)

    def test_unknown(self):
        with pytest.raises(UnknownPresentation):
            parse_presentation_name("Foo")
        with pytest.raises(UnknownPresentation):
            parse_presentation_name("Dl(x)")

    def test_dell_needs_two_factors(self, modp):
        with pytest.raises(BadIndex):
            build_presentation("Dl(1)", 2, modp)

    def test_rank_positive(self, modp):
        with pytest.raises(BadIndex):
            build_presentation("W", 0, modp)


@pytest.mark.unit
class TestRankOne:
    def test_d1_single_relation(self, exact):
        pres = build_presentation("D1", 1, exact)
        assert pres.generators == ("d11", "x11")
        assert pres.labels == ["rel3[11,11]"]
        assert pres.entries == 3
        q2 = exact.q_pow(2)
        expected = (
            FreeAlgElem.word(exact, ("d11", "x11"))
            - FreeAlgElem.word(exact, ("x11", "d11"), q2)
            - FreeAlgElem.scalar(exact, q2 - exact.one)
        )
        assert pres.relation("rel3[11,11]") == expected

    def test_weyl_rank_one(self, exact):
        pres = build_presentation("W", 1, exact)
        assert pres.generators == ("x1", "d1")
        assert pres.labels == ["dx[1,1]"]

    def test_word_of(self, exact):
        pres = build_presentation("W", 1, exact)
        assert word_of(pres, ["x1", "d1"]).degree() == 2
        with pytest.raises(BadIndex):
            word_of(pres, ["y1"])


@pytest.mark.integration
class TestGoldenCounts:
    @pytest.mark.parametrize("title", sorted(GOLDEN))
    def test_generators_and_entries(self, title, modp):
        pres = build_presentation(title, 2, modp)
        assert len(pres.generators) == GOLDEN[title]["generators"]
        assert pres.entries == GOLDEN[title]["entries"]
        assert len(pres.relations) == len(pres.labels) <= pres.entries

    @pytest.mark.parametrize("title", ["Ref", "W", "D1", "D0IV"])
    def test_rules(self, title, modp):
        pres = build_presentation(title, 2, modp)
        assert len(rewrite_system(pres)) == GOLDEN[title]["rules"]

    @pytest.mark.slow
    def test_golden_suite(self, modp_ctx):
        report = golden_audit(modp_ctx)
        assert report.ok
        assert report.summary.skipped == 0
        assert report.check("Dl(2):rules").status == CheckStatus.PASS
        assert all(report.check(f"{title}:fingerprint").status == CheckStatus.PASS for title in GOLDEN)

    def _pinned(self, monkeypatch, fingerprint):
        golden = load_golden()
        golden["presentations"] = {"W": dict(golden["presentations"]["W"], fingerprint=fingerprint)}
        monkeypatch.setattr(audit, "load_golden", lambda: golden)

    def test_recorded_fingerprint_matches(self, monkeypatch, modp, modp_ctx):
        self._pinned(monkeypatch, build_presentation("W", 2, modp).fingerprint())
        report = golden_audit(modp_ctx)
        assert report.check("W:fingerprint").status == CheckStatus.PASS
        assert report.summary.skipped == 0

    def test_recorded_fingerprint_mismatch_fails(self, monkeypatch, modp_ctx):
        self._pinned(monkeypatch, "0" * 64)
        report = golden_audit(modp_ctx)
        assert not report.ok
        assert report.check("W:fingerprint").status == CheckStatus.FAIL

    def test_unrecorded_fingerprint_is_cross_checked(self, monkeypatch, exact_ctx1):
        self._pinned(monkeypatch, None)
        report = golden_audit(exact_ctx1)
        assert report.ok
        assert report.check("W:fingerprint").status == CheckStatus.PASS

    def test_known_names(self):
        assert set(PRESENTATION_NAMES) == {"Ref", "W", "D0IV", "D0loc", "D1", "Dl", "Ml"}


@pytest.mark.unit
class TestStructure:
    def test_fingerprint_is_stable(self, modp, exact):
        a = build_presentation("D1", 2, modp)
        b = build_presentation("D1", 2, exact)
        assert len(a.fingerprint()) == 64
        assert a.fingerprint() == b.fingerprint()
        assert a.fingerprint() != build_presentation("D0IV", 2, modp).fingerprint()

    def test_cross_check_field_switches_backend(self, exact_ctx1, modp_ctx):
        assert isinstance(cross_check_field(modp_ctx), ExactField)
        assert not isinstance(cross_check_field(exact_ctx1), ExactField)
        assert cross_check_field(exact_ctx1).ell == 1

    def test_cached_per_field(self, modp):
        assert build_presentation("W", 2, modp) is build_presentation("W", 2, modp)

    def test_standard_counts(self, modp):
        pres = build_presentation("W", 2, modp)
        assert pres.standard_count(2) == 15
        assert pres.standard_count(2, exact_degree=True) == 10
        assert len(pres.descending_pairs()) == 6

    def test_ml_weights(self):
        assert ml_weight("wx1", 2, 2) == (-1, 0)
        assert ml_weight("wd2", 2, 2) == (0, 1)
        assert ml_weight("x1_12", 2, 2) == (-1, 0)
        assert ml_weight("x2_12", 2, 2) == (0, 1)
        assert ml_weight("d2_12", 2, 2) == (-1, 0)
        assert ml_weight("x2_12", 2, 3) == (0, 0)

    def test_ml_matrices(self, modp):
        pres = build_presentation("Ml(2)", 2, modp)
        assert {"X1", "X2", "D1", "D2"} <= set(pres.matrices)
        assert any(label.startswith("cross[") for label in pres.labels)
