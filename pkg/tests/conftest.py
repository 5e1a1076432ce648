import pytest

from magicount import sequences
from magicount.tensors import MagicTensor

DIMS = (2, 3, 4, 5)


@pytest.fixture(scope="session")
def u_tables():
    return {d: sequences.compute_u(d, 40) for d in DIMS}


@pytest.fixture(scope="session")
def v_tables():
    return {d: sequences.compute_v(d, 40) for d in DIMS}


@pytest.fixture(scope="session")
def w_tables():
    return {d: sequences.compute_w(d, 40) for d in DIMS}


@pytest.fixture(scope="session")
def w2_long():
    return sequences.compute_w(2, 200)


@pytest.fixture
def counterexample():
    """The 3-dimensional size-3 tensor that is 2-magic and indecomposable
    yet not a sum of two 1-magic tensors."""
    cells = {
        (1, 1, 1): 1,
        (1, 2, 3): 1,
        (2, 1, 2): 1,
        (2, 2, 1): 1,
        (3, 3, 2): 1,
        (3, 3, 3): 1,
    }
    return MagicTensor(3, 3, cells)
