import sys
from pathlib import Path

import pytest

from toricarr import make_arrangement

ROOT = Path(__file__).resolve().parents[1]
CORPUS = ROOT / "corpus"
sys.path.insert(0, str(Path(__file__).parent))

COORD_DIAG = [((1, 0), 0), ((0, 1), 0), ((1, 1), 0)]
CROSS = [((1, 1), 0), ((1, -1), 0)]
WEYL_A2 = [((2, -1), 0), ((-1, 2), 0), ((1, 1), 0)]


def points(k):
    return make_arrangement(1, [((1,), f"{j}/{k}") for j in range(k)])


@pytest.fixture
def coord_diag():
    return make_arrangement(2, COORD_DIAG)


@pytest.fixture
def cross():
    return make_arrangement(2, CROSS)


@pytest.fixture
def weyl_a2():
    return make_arrangement(2, WEYL_A2)


@pytest.fixture
def corpus_files():
    return sorted(CORPUS.glob("*.json"))
