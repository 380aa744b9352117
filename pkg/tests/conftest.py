from pathlib import Path

import pytest

from monosing.presentation import parse_presentation_file

ROOT = Path(__file__).resolve().parents[1]
FIXTURES = ROOT / "fixtures"

FIXTURE_NAMES = ["z3r2", "z2r3", "lin", "her", "glu", "z6r3"]


def load(name):
    return parse_presentation_file(FIXTURES / f"{name}.quiver")


@pytest.fixture
def z3r2():
    return load("z3r2")


@pytest.fixture
def z2r3():
    return load("z2r3")


@pytest.fixture
def lin():
    return load("lin")


@pytest.fixture
def her():
    return load("her")


@pytest.fixture
def glu():
    return load("glu")


@pytest.fixture
def z6r3():
    return load("z6r3")


def fixture_path(name):
    return str(FIXTURES / f"{name}.quiver")
