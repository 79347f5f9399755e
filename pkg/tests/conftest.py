import os

import pytest

from tools import catalog
from tools.perm import read_pgrp

DATA = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "data")

def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long running exhaustive checks")

@pytest.fixture
def data_dir():
    return DATA

@pytest.fixture
def s3():
    return catalog.symmetric_group(3)

@pytest.fixture
def s4():
    return catalog.symmetric_group(4)

@pytest.fixture
def a5():
    return read_pgrp(os.path.join(DATA, "a5.pgrp"))

@pytest.fixture
def q8():
    return catalog.quaternion_group()

@pytest.fixture
def affine_pair():
    return catalog.affine_z8_pair()

