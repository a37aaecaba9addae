import numpy as np
import pytest

from szl.errors import DimensionMismatch, InvalidChain, UnknownVertex
from szl.markov import BirthDeathChain, Distribution, StochasticMatrix


def test_from_dense_drops_zeros_and_indexes_vertices() -> None:
    p = StochasticMatrix.from_dense(("a", "b"), [[0.0, 1.0], [0.5, 0.5]])

    assert p.probabilities.nnz == 3
    assert p.entry("b", "a") == 0.5
    assert p.position("b") == 1


def test_rows_must_sum_to_one() -> None:
    with pytest.raises(InvalidChain) as info:
        StochasticMatrix.from_dense(("a", "b"), [[0.5, 0.4], [0.0, 1.0]])
    assert info.value.witness["vertex"] == "a"


def test_negative_entries_are_rejected() -> None:
    with pytest.raises(InvalidChain):
        StochasticMatrix.from_dense(("a", "b"), [[1.5, -0.5], [0.0, 1.0]])


def test_shape_must_match_vertices() -> None:
    with pytest.raises(DimensionMismatch):
        StochasticMatrix.from_dense(("a",), [[0.5, 0.5], [0.5, 0.5]])


def test_distribution_delta_and_lookup() -> None:
    dist = Distribution.delta(("a", "b"), "b")
    assert dist.as_dict() == {"a": 0.0, "b": 1.0}
    with pytest.raises(UnknownVertex):
        dist.get("z")
    with pytest.raises(InvalidChain):
        Distribution(vertices=("a",), probabilities=np.array([0.5]))


def test_birth_death_chain_boundaries() -> None:
    with pytest.raises(InvalidChain):
        BirthDeathChain(p=(1.0, 0.5), q=(0.0, 0.5), r=(0.0, 0.0))
    with pytest.raises(InvalidChain):
        BirthDeathChain(p=(0.5, 0.0), q=(0.0, 1.0), r=(0.0, 0.0))
    assert BirthDeathChain(p=(1.0, 0.0), q=(0.0, 1.0), r=(0.0, 0.0)).size == 2
