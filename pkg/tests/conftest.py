import logging

import numpy as np
import pytest

from pcm_sparsify.core.matrix import BinaryMatrix, save_alist

from tests.helpers import H15_ROWS, bch63

# Configure logging
logging.basicConfig(
    level=logging.INFO,
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
)


@pytest.fixture
def h15() -> BinaryMatrix:
    """The (15, 7) BCH parity-check matrix with 34 ones."""
    return BinaryMatrix.from_strings(H15_ROWS)


@pytest.fixture
def h15_sparse(h15: BinaryMatrix) -> BinaryMatrix:
    """h15 after adding row 1 into row 0; 32 ones, locally and globally optimal."""
    H = h15.copy()
    H.row_add(1, 0)
    return H


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240501)


@pytest.fixture
def h15_alist(tmp_path, h15):
    path = tmp_path / "h15.alist"
    save_alist(h15, path)
    return path


@pytest.fixture
def bch63_57() -> BinaryMatrix:
    return bch63(57)


@pytest.fixture(autouse=True)
def _isolated_env(monkeypatch):
    """Keep user settings out of the tests."""
    monkeypatch.delenv("PCM_THREADS", raising=False)
    monkeypatch.delenv("PCM_CONFIG", raising=False)
