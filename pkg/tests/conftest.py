import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

TABLE1_WORD = [0, 1, 1, 0, 1, 0, 0, 0, 1, 0, 1, 1, 0, 0, 1]
ALG1_MESSAGE = [1, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 1, 1, 0, 1]
ALG1_ENCODED = [1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 1, 1, 0, 1]
TABLE2_MEMBERS = (
    list(range(16, 32)) + list(range(48, 64)) + list(range(80, 96)) + list(range(112, 128))
)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)
