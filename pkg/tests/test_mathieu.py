import os
from collections import Counter

import pytest

from tools import DataError, Verdict, Format
from tools.mathieu import (
    M23_DATA, M23_ORDER, M23Report, build_m23, golay_code, golay_heptads, m23_index253_actions, m23_demo
)
from tools.obstruction import s16_demo

pytestmark = pytest.mark.skipif(not os.path.isfile(M23_DATA), reason="M23 generator file not shipped")

@pytest.fixture(scope="module")
def m23():
    return build_m23()

@pytest.fixture(scope="module")
def heptads(m23):
    return golay_heptads(m23)

def test_m23_order(m23):
    assert m23.order == M23_ORDER
    assert m23.degree == 23
    assert m23.name == "M23"

def test_golay_weight_distribution(m23):
    codewords = golay_code(m23)
    assert codewords.shape == (4096, 23)
    weights = Counter(codewords.sum(axis=1).tolist())
    assert weights == {0: 1, 7: 253, 8: 506, 11: 1288, 12: 1288, 15: 506, 16: 253, 23: 1}

def test_heptads(heptads):
    assert len(heptads) == 253
    assert all(len(x) == 7 for x in heptads)
    # every 4-subset of points lies in exactly one heptad
    assert sum(1 for x in heptads if {0, 1, 2, 3} <= x) == 1

def test_index253_actions(m23, heptads):
    pairs, blocks = m23_index253_actions(m23, heptads)
    assert pairs.degree == blocks.degree == 253
    assert pairs.stabilizer_order() == blocks.stabilizer_order() == 40320

def test_bad_generator_files(data_dir, tmp_path):
    with pytest.raises(DataError):
        build_m23(os.path.join(data_dir, "s4.pgrp"))
    with pytest.raises(DataError):
        build_m23(str(tmp_path / "missing.pgrp"))

@pytest.fixture(scope="module")
def obstructed_report():
    return s16_demo()

def test_confirmed_report_keeps_the_csinv_verdict(obstructed_report):
    report = M23Report(M23_ORDER, True, 253, (40320, 40320), True, obstructed_report)
    assert report.verdict == Verdict.obstructed
    assert report.export(Format.json)["verdict"] == "obstructed"
    assert "not confirmed" not in report.dumps(Format.text)

def test_unconfirmed_scan_certificate_gives_an_unknown_verdict(obstructed_report):
    report = M23Report(M23_ORDER, True, 253, (40320, 40320), False, obstructed_report)
    assert report.verdict == Verdict.unknown
    assert report.report.verdict == Verdict.obstructed
    data = report.export(Format.json)
    assert data["verdict"] == "unknown"
    assert data["report"]["verdict"] == "obstructed"
    assert report.dumps(Format.text).endswith("overall verdict: unknown")

@pytest.mark.slow
def test_m23_demo():
    report = m23_demo()
    assert report.heptads == 253
    assert report.stabilizer_orders == (40320, 40320)
    assert report.equivalent
    assert (report.report.s_h, report.report.s_k) == (0, 1)
    assert report.verdict == Verdict.obstructed
