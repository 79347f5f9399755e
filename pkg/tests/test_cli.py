import json
import os

import pytest

from tools import catalog
from tools.cli import main, EXIT_OK, EXIT_FOUND, EXIT_INPUT, EXIT_LIMIT
from tools.perm import format_pgrp

@pytest.fixture
def data(data_dir):
    return lambda name: os.path.join(data_dir, name)

@pytest.fixture
def s3_file(tmp_path):
    path = tmp_path / "s3.pgrp"
    path.write_text(format_pgrp(catalog.symmetric_group(3)), encoding="utf-8")
    return str(path)

def test_coset_enumeration(data, capsys):
    assert main(["coset-enum", data("von_dyck_235.fp"), "--subgroup", "a"]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "index = 30"

def test_coset_enumeration_json(data, capsys):
    assert main(["--json", "coset-enum", data("von_dyck_235.fp")]) == EXIT_OK
    output = json.loads(capsys.readouterr().out)
    assert output["index"] == 60
    assert output["subgroup"] == []

def test_coset_limit(data, capsys):
    assert main(["--max-cosets", "100", "coset-enum", data("free2.fp")]) == EXIT_LIMIT
    assert "limit exceeded" in capsys.readouterr().err

def test_coset_limit_from_the_environment(data, monkeypatch):
    monkeypatch.setenv("GASSMANN_MAX_COSETS", "50")
    assert main(["coset-enum", data("free2.fp")]) == EXIT_LIMIT
    monkeypatch.setenv("GASSMANN_MAX_COSETS", "many")
    assert main(["coset-enum", data("free2.fp")]) == EXIT_INPUT

def test_hom_search(data, s3_file, capsys):
    assert main(["hom-search", data("free2.fp"), s3_file]) == EXIT_OK
    assert capsys.readouterr().out.startswith("18 surjections\n")
    assert main(["--json", "hom-search", data("free2.fp"), s3_file, "--all"]) == EXIT_OK
    output = json.loads(capsys.readouterr().out)
    assert output["count"] == 36
    assert output["exhaustive"] is True

def test_s_invariant_of_a_presentation(data, capsys):
    assert main(["s-invariant", data("16gamma2c1.fp")]) == EXIT_OK
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[-2:] == ["abelianization = Z/2 + Z/4", "S = 0"]

def test_s_invariant_of_a_subgroup(data, capsys):
    assert main(["--json", "s-invariant", data("q8.fp"), "--subgroup", "x^2"]) == EXIT_OK
    output = json.loads(capsys.readouterr().out)
    assert output["abelianization"] == {"torsion": [2], "free_rank": 0}
    assert output["S"] == 1

def test_s_invariant_of_a_permutation_group(data, capsys):
    assert main(["s-invariant", data("s4.pgrp")]) == EXIT_OK
    assert capsys.readouterr().out.strip().endswith("S = 1")
    assert main(["s-invariant", data("s4.pgrp"), "--subgroup", "x"]) == EXIT_INPUT

def test_check_gassmann(data, capsys):
    assert main(["check-gassmann", data("agl1z8.pgrp"), data("agl1z8_h.pgrp"), data("agl1z8_k.pgrp")]) == EXIT_OK
    assert "almost-conjugate: yes" in capsys.readouterr().out
    arguments = ["check-gassmann", data("s4.pgrp"), data("s4_transposition.pgrp"), data("s4_double_transposition.pgrp")]
    assert main(arguments) == EXIT_FOUND
    assert "almost-conjugate: no" in capsys.readouterr().out

def test_csinv(data, capsys):
    triple = [data("agl1z8.pgrp"), data("agl1z8_h.pgrp"), data("agl1z8_k.pgrp")]
    assert main(["--json", "csinv", "--pi", data("agl1z8.pgrp"), "--triple"] + triple) == EXIT_OK
    output = json.loads(capsys.readouterr().out)
    assert output["csinv"] == 0
    assert output["verdict"] == "consistent"

def test_csinv_of_a_pair_that_is_not_almost_conjugate(data, capsys):
    triple = [data("s4.pgrp"), data("s4_transposition.pgrp"), data("s4_double_transposition.pgrp")]
    assert main(["csinv", "--pi", data("s4.pgrp"), "--triple"] + triple) == EXIT_INPUT

def test_s16_demo(capsys):
    assert main(["demo", "s16"]) == EXIT_FOUND
    output = capsys.readouterr().out
    assert "csinv = 1" in output
    assert "verdict: obstructed" in output

def test_verify_cs(data, capsys):
    assert main(["verify-cs", data("s4.pgrp")]) == EXIT_OK
    assert capsys.readouterr().out.strip().endswith("verdict: satisfies CS (exhaustive)")
    assert main(["--max-subgroup-order", "10", "verify-cs", data("s4.pgrp")]) == EXIT_LIMIT

def test_verify_cs_q8abc(capsys):
    assert main(["verify-cs-q8abc", "1", "3", "1"]) == EXIT_OK
    assert main(["verify-cs-q8abc", "1", "3", "3"]) == EXIT_INPUT
    assert main(["--max-group-order", "100", "verify-cs-q8abc", "1", "5", "3"]) == EXIT_LIMIT

def test_search_pairs(data, capsys):
    assert main(["search-pairs", data("agl1z8.pgrp")]) == EXIT_OK
    assert "non-conjugate Gassmann pairs" in capsys.readouterr().out
    assert main(["--json", "search-pairs", data("s4.pgrp")]) == EXIT_OK
    assert json.loads(capsys.readouterr().out)["pairs"] == []

def test_input_errors(data, tmp_path, capsys):
    assert main(["verify-cs", str(tmp_path / "missing.pgrp")]) == EXIT_INPUT
    assert main(["verify-cs", data("q8.fp")]) == EXIT_INPUT
    unknown = tmp_path / "group.txt"
    unknown.write_text("degree 2\n(1 2)\n", encoding="utf-8")
    assert main(["verify-cs", str(unknown)]) == EXIT_INPUT
    malformed = tmp_path / "broken.pgrp"
    malformed.write_text("degree 3\n(1 2\n", encoding="utf-8")
    assert main(["verify-cs", str(malformed)]) == EXIT_INPUT
    assert "line 2" in capsys.readouterr().err

def test_invalid_limits():
    assert main(["--workers", "0", "verify-cs-q8abc", "1", "1", "1"]) == EXIT_INPUT

def test_global_options_after_the_subcommand(capsys):
    assert main(["demo", "s16", "--json"]) == EXIT_FOUND
    output = json.loads(capsys.readouterr().out)
    assert (output["sH"], output["sK"], output["csinv"]) == (1, 0, 1)
    assert output["verdict"] == "obstructed"

def test_global_options_before_the_subcommand_are_kept(data, capsys):
    assert main(["--max-cosets", "100", "coset-enum", data("free2.fp")]) == EXIT_LIMIT
    assert main(["coset-enum", data("free2.fp"), "--max-cosets", "100"]) == EXIT_LIMIT
    assert main(["--json", "coset-enum", data("von_dyck_235.fp"), "--subgroup", "a"]) == EXIT_OK
    assert json.loads(capsys.readouterr().out)["index"] == 30

def test_json_reports_do_not_depend_on_the_worker_count(capsys):
    dumps = []
    for workers in ("1", "4", "1"):
        assert main(["demo", "s16", "--json", "--workers", workers]) == EXIT_FOUND
        dumps.append(capsys.readouterr().out.encode("utf-8"))
    assert dumps[0] == dumps[1] == dumps[2]

def test_verification_json_does_not_depend_on_the_worker_count(data, capsys):
    dumps = []
    for workers in ("1", "2"):
        assert main(["--workers", workers, "--json", "verify-cs", data("agl1z8.pgrp")]) in (EXIT_OK, EXIT_FOUND)
        dumps.append(capsys.readouterr().out)
    assert dumps[0] == dumps[1]
