import numpy as np
import pytest

from szl.errors import InvalidPartition, NotLumpable
from szl.graphs import VertexPartition, distance_partition, generate
from szl.markov import Distribution, homogeneous_walk, lump, lump_distribution


def test_hexahedron_lumps_to_birth_death_path(hexahedron) -> None:
    lumped = lump(homogeneous_walk(hexahedron), distance_partition(hexahedron, "000"))

    assert lumped.vertices == ("A", "B", "C", "D")
    expected = np.array([[0, 3, 0, 0], [1, 0, 2, 0], [0, 2, 0, 1], [0, 0, 3, 0]]) / 3
    np.testing.assert_allclose(lumped.dense(), expected, atol=1e-15)


def test_icosahedron_lumped_matrix() -> None:
    g = generate("icosahedron")
    lumped = lump(homogeneous_walk(g), distance_partition(g, "12"))

    expected = np.array([[0, 5, 0, 0], [1, 2, 2, 0], [0, 2, 2, 1], [0, 0, 5, 0]]) / 5
    np.testing.assert_allclose(lumped.dense(), expected, atol=1e-15)


def test_non_lumpable_partition_names_witness(hexahedron) -> None:
    part = VertexPartition(blocks=(("001", "010"), ("000", "011", "110", "101"), ("100", "111")))

    with pytest.raises(NotLumpable) as info:
        lump(homogeneous_walk(hexahedron), part)
    assert info.value.witness["u"] == "B"
    assert info.value.witness["i1"] == "000"


def test_singletons_partition_reproduces_chain(hexahedron) -> None:
    p = homogeneous_walk(hexahedron)
    lumped = lump(p, VertexPartition.singletons(p.vertices))
    np.testing.assert_allclose(lumped.dense(), p.dense())


def test_lump_requires_a_covering_partition(hexahedron) -> None:
    with pytest.raises(InvalidPartition):
        lump(homogeneous_walk(hexahedron), VertexPartition(blocks=(("000",),)))


def test_lump_distribution_sums_blocks(hexahedron) -> None:
    part = distance_partition(hexahedron, "000")
    dist = Distribution(vertices=hexahedron.vertices, probabilities=np.full(8, 1 / 8))

    lumped = lump_distribution(dist, part)

    np.testing.assert_allclose(lumped.probabilities, [1 / 8, 3 / 8, 3 / 8, 1 / 8])
