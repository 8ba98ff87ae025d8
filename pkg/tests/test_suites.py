import pytest

from dahaverify.config import SUITES, build_config
from dahaverify.report import CheckStatus
from dahaverify.suites import SUITE_RUNNERS, run_once, run_suite


@pytest.mark.unit
def test_every_suite_has_a_runner():
    assert set(SUITE_RUNNERS) == set(SUITES)


@pytest.mark.integration
class TestRunSuite:
    def test_exact_single_run(self):
        report = run_suite(build_config(suite="r-constants", mode="exact"))
        assert report.ok
        assert report.params["runs"].keys() == {"0"}
        assert "qybe" in report.statuses()

    def test_seed_prefixes(self):
        report = run_suite(build_config(suite="symmetrizer", seeds="1,2"))
        names = report.statuses()
        assert "seed[1]:idempotent" in names and "seed[2]:idempotent" in names
        assert report.params["seeds"] == [1, 2]

    def test_setup_errors_become_a_failed_check(self):
        config = build_config(suite="pbw-audit", presentation="Nope", seeds=1)
        report = run_once(config, 1)
        assert report.statuses() == {"setup": CheckStatus.FAIL}
        assert "UnknownPresentation" in report.check("setup").witness

    def test_foreign_errors_become_a_failed_check(self, monkeypatch):
        def broken(config, seed):
            raise KeyError("missing table")

        monkeypatch.setitem(SUITE_RUNNERS, "r-constants", broken)
        report = run_suite(build_config(suite="r-constants", mode="exact"))
        assert report.statuses() == {"setup": CheckStatus.FAIL}
        assert report.check("setup").witness.startswith("KeyError")
        assert report.exit_code == 1

    def test_pbw_audit(self):
        report = run_suite(build_config(suite="pbw-audit", presentation="W", seeds=1))
        assert report.ok
        assert report.params["degree"] == 2

    def test_macdonald_exact(self):
        report = run_suite(build_config(suite="macdonald", mode="exact", degree=2))
        assert report.ok

    def test_toroidal_window(self):
        config = build_config(suite="toroidal-relations", n=1, rmin=0, rmax=1, seeds=1)
        assert run_suite(config).ok

    @pytest.mark.slow
    def test_parallel_seeds(self):
        config = build_config(suite="dunkl-commutativity", ell=1, seeds="1,2", jobs=2)
        report = run_suite(config)
        assert report.ok
        assert "seed[2]:commute[1,2]" in report.statuses()
