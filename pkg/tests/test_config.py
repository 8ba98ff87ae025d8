import json
from fractions import Fraction

import pytest

from dahaverify.config import (
    SUITE_DEGREES,
    SUITES,
    build_config,
    load_config_file,
    merge_config,
)
from dahaverify.errors import ConfigError


@pytest.mark.unit
class TestBuildConfig:
    def test_defaults(self):
        config = build_config(suite="macdonald")
        assert config.n == 2
        assert config.mode == "modp-random"
        assert config.run_seeds() == [1, 2, 3]
        assert config.effective_degree == SUITE_DEGREES["macdonald"]

    def test_none_values_ignored(self):
        assert build_config(suite="golden", n=None).n == 2

    def test_exact_runs_once(self):
        assert build_config(suite="r-constants", mode="exact").run_seeds() == [0]

    def test_seed_strings(self):
        assert build_config(suite="golden", seeds="4, 5").seeds == [4, 5]
        assert build_config(suite="golden", seeds=7).seeds == [7]

    def test_z_literals(self):
        config = build_config(suite="gamma-conjugation", ell=2, z="1/2,3")
        assert config.z_literals == [Fraction(1, 2), Fraction(3)]
        assert build_config(suite="gamma-conjugation").z_literals is None

    @pytest.mark.parametrize(
        "values",
        [
            {"suite": "nope"},
            {"suite": "golden", "n": 9},
            {"suite": "golden", "n": 0},
            {"suite": "golden", "ell": 4},
            {"suite": "golden", "degree": 7},
            {"suite": "golden", "rmin": 2, "rmax": 1},
            {"suite": "golden", "rmin": -3, "rmax": 3},
            {"suite": "golden", "mode": "float"},
            {"suite": "golden", "seeds": []},
            {"suite": "golden", "ell": 1, "z": "1,2"},
            {"suite": "golden", "ell": 1, "z": "0"},
            {"suite": "golden", "ell": 1, "z": "x"},
            {"suite": "golden", "slack": -1},
            {"suite": "golden", "jobs": 0},
            {"suite": "golden", "colour": "red"},
        ],
    )
    def test_rejects(self, values):
        with pytest.raises(ConfigError):
            build_config(**values)

    def test_params_echo(self, tmp_path):
        config = build_config(suite="pbw-audit", output=tmp_path / "out.json", jobs=2)
        params = config.params()
        assert "output" not in params and "limits" not in params and "jobs" not in params
        assert params["degree"] == SUITE_DEGREES["pbw-audit"]
        assert params["presentation"] == "D1"

    def test_context(self):
        config = build_config(suite="macdonald", n=3, ell=1, degree=2)
        ctx = config.context(5)
        assert (ctx.n, ctx.ell, ctx.seed, ctx.max_degree) == (3, 1, 5, 2)
        assert config.context(5, ell=0).ell == 0

    def test_every_suite_known(self):
        for name in SUITES:
            assert build_config(suite=name).suite == name


@pytest.mark.unit
class TestConfigFiles:
    def test_yaml(self, tmp_path):
        path = tmp_path / "suite.yaml"
        path.write_text("suite: pbw-audit\nn: 2\npresentation: W\n")
        assert load_config_file(path) == {"suite": "pbw-audit", "n": 2, "presentation": "W"}

    def test_json(self, tmp_path):
        path = tmp_path / "suite.json"
        path.write_text(json.dumps({"suite": "golden", "seeds": [1]}))
        assert load_config_file(path)["seeds"] == [1]

    def test_empty_yaml(self, tmp_path):
        path = tmp_path / "empty.yml"
        path.write_text("")
        assert load_config_file(path) == {}

    @pytest.mark.parametrize(
        "name,text",
        [("suite.toml", "suite = 1"), ("bad.json", "{"), ("list.yaml", "- 1\n- 2\n")],
    )
    def test_bad_files(self, tmp_path, name, text):
        path = tmp_path / name
        path.write_text(text)
        with pytest.raises(ConfigError):
            load_config_file(path)

    def test_missing_file(self, tmp_path):
        with pytest.raises(ConfigError):
            load_config_file(tmp_path / "absent.yaml")

    def test_flags_win(self):
        config = merge_config({"suite": "pbw-audit", "n": 3, "presentation": "W"}, {"n": 2, "degree": None})
        assert config.n == 2
        assert config.presentation == "W"
        assert config.degree is None
