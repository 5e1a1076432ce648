import pytest

from magicount import kernels
from magicount.errors import BudgetExceededError

BACKENDS = kernels.available_backends()

TUPLE_GRID = [(2, n) for n in range(1, 7)] + [(3, n) for n in range(1, 5)] + [
    (4, 1), (4, 2), (4, 3),
]
TENSOR_GRID = [(1, 1), (1, 3), (2, 1), (2, 2), (2, 3), (2, 4), (3, 1), (3, 2), (3, 3)]


def test_backend_is_selected():
    assert kernels.BACKEND in BACKENDS


@pytest.mark.parametrize("name", sorted(BACKENDS))
@pytest.mark.parametrize("d,n", TUPLE_GRID)
def test_transitive_tuple_counts_per_backend(name, d, n):
    assert BACKENDS[name].count_transitive_tuples(d, n) == (
        kernels.count_transitive_tuples(d, n)
    )


@pytest.mark.parametrize("name", sorted(BACKENDS))
@pytest.mark.parametrize("d,n", TENSOR_GRID)
def test_tensor_counts_per_backend(name, d, n):
    assert BACKENDS[name].count_tensor_kinds(d, n, 10**8) == (
        kernels.count_tensor_kinds(d, n, 10**8)
    )


@pytest.mark.skipif(len(BACKENDS) < 2, reason="compiled backend not built")
def test_backends_agree_on_larger_inputs():
    pure, compiled = BACKENDS["pure"], BACKENDS["compiled"]
    assert pure.count_transitive_tuples(3, 4) == compiled.count_transitive_tuples(3, 4)
    assert pure.count_tensor_kinds(2, 5, 10**8) == compiled.count_tensor_kinds(
        2, 5, 10**8
    )


@pytest.mark.parametrize("name", sorted(BACKENDS))
def test_budget_exhaustion_per_backend(name):
    with pytest.raises(BudgetExceededError):
        BACKENDS[name].count_tensor_kinds(2, 4, 10)


@pytest.mark.parametrize("name", sorted(BACKENDS))
def test_kernel_argument_errors(name):
    with pytest.raises(ValueError):
        BACKENDS[name].count_transitive_tuples(1, 2)
    with pytest.raises(ValueError):
        BACKENDS[name].count_tensor_kinds(2, 0, 100)
