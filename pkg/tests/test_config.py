import os

import pytest

from tools import Format, InputError, json
from tools.config import RunConfig, ENV_MAX_COSETS
from tools.obstruction import s16_demo

def test_defaults(monkeypatch):
    monkeypatch.delenv(ENV_MAX_COSETS, raising=False)
    config = RunConfig.from_env()
    assert config.max_cosets == 10**6
    assert config.max_enumeration_order == 2 * 10**7
    assert config.max_subgroup_order == 512
    assert config.workers == 1
    assert config.output == Format.text
    assert config.export()["output"] == "text"

@pytest.mark.parametrize("kwargs", [
    {"workers": 0},
    {"max_cosets": -1},
    {"hom_budget": 0},
    {"max_subgroup_order": True},
])
def test_validation(kwargs):
    with pytest.raises(InputError):
        RunConfig(**kwargs)

def test_environment_override(monkeypatch):
    monkeypatch.setenv(ENV_MAX_COSETS, "500")
    assert RunConfig.from_env().max_cosets == 500
    assert RunConfig.from_env(max_cosets=20).max_cosets == 20
    monkeypatch.setenv(ENV_MAX_COSETS, "0")
    with pytest.raises(InputError):
        RunConfig.from_env()
    monkeypatch.setenv(ENV_MAX_COSETS, "1e6")
    with pytest.raises(InputError):
        RunConfig.from_env()

def test_dumps_pretty_is_valid_json():
    data = {
        "group": "16Γ2c1",
        "counts": [1, 7, 8],
        "nested": {"empty": [], "flag": False, "missing": None, "rows": [[1, 0], [0, 2]]},
        "classes": [{"key": "2^8", "inH": 7, "inK": 7}]
    }
    dump = json.dumps_pretty(data)
    assert "16Γ2c1" in dump
    assert "[1,7,8]" in dump
    assert json.loads(dump) == data

def test_dumps_pretty_rejects_floats():
    with pytest.raises(ValueError):
        json.dumps_pretty({"ratio": 0.5})

def test_report_save(tmp_path):
    report = s16_demo()
    path = report.save(str(tmp_path), "s16")
    assert os.path.basename(path) == "s16.json"
    with open(path, "r", encoding="utf-8") as f:
        assert json.load(f)["csinv"] == 1

    text_path = report.save(str(tmp_path), "s16", Format.text)
    with open(text_path, "r", encoding="utf-8") as f:
        assert f.read().rstrip().endswith("verdict: obstructed")

    with pytest.raises(InputError):
        report.save(str(tmp_path), "s16")
    with pytest.raises(InputError):
        report.save(str(tmp_path / "missing"), "s16")
