import math

import numpy as np
import pytest

from szl.analysis import (
    DensityMatrix,
    entanglement_entropy,
    expand_spectrum,
    hypercube_entropy_spectrum,
    reduce_density_coin,
    von_neumann_entropy,
)
from szl.errors import InvalidParams, NotDensity
from szl.errors.config import ToleranceConfig
from szl.graphs import distance_partition, generate
from szl.markov import homogeneous_walk
from szl.pipeline.workflows import aggregate, lump_walk
from szl.szegedy import SzegedyOperator, phi_vector


@pytest.fixture(scope="module")
def hexahedron_basis():
    g = generate("hexahedron")
    tolerances = ToleranceConfig()
    walk = lump_walk(homogeneous_walk(g), distance_partition(g, "000"), tolerances)
    return aggregate(walk, tolerances).basis


def test_aggregated_state_spectrum_on_cube(hexahedron_basis) -> None:
    rho = reduce_density_coin(hexahedron_basis.state("B", "C"))

    assert rho.vertices == ("001", "010", "100")
    np.testing.assert_allclose(rho.eigenvalues, [1 / 6, 1 / 6, 2 / 3], atol=1e-12)


def test_entropy_in_bits(hexahedron_basis) -> None:
    bits = entanglement_entropy(hexahedron_basis.state("B", "C"), base=2)
    nats = entanglement_entropy(hexahedron_basis.state("B", "C"))

    assert bits == pytest.approx(math.log2(3) - 1 / 3, abs=1e-12)
    assert nats == pytest.approx(bits * math.log(2), abs=1e-12)


def test_phi_state_is_pure() -> None:
    op = SzegedyOperator(homogeneous_walk(generate("tetrahedron")))
    s = phi_vector(op, "0")

    rho = reduce_density_coin(s)

    assert rho.vertices == ("0",)
    assert entanglement_entropy(s) == pytest.approx(0.0, abs=1e-14)


def test_entropy_base_must_be_positive_and_not_one() -> None:
    d = DensityMatrix(vertices=("a",), matrix=np.ones((1, 1)))
    for base in (1.0, 0.0, -2.0):
        with pytest.raises(InvalidParams):
            von_neumann_entropy(d, base=base)


def test_entropy_base_below_one_flips_sign(hexahedron_basis) -> None:
    rho = reduce_density_coin(hexahedron_basis.state("B", "C"))

    assert von_neumann_entropy(rho, base=0.5) == pytest.approx(-von_neumann_entropy(rho, base=2))


@pytest.mark.parametrize(
    "matrix, field",
    [
        (np.array([[0.5, 0.1], [0.0, 0.5]]), "asymmetry"),
        (np.eye(2), "trace"),
        (np.array([[1.5, 0.0], [0.0, -0.5]]), "eigenvalue"),
    ],
)
def test_density_validation(matrix: np.ndarray, field: str) -> None:
    with pytest.raises(NotDensity) as info:
        DensityMatrix(vertices=("a", "b"), matrix=matrix)
    assert field in info.value.witness


def test_hypercube_closed_form_spectrum() -> None:
    assert hypercube_entropy_spectrum(3, 1) == [(pytest.approx(1 / 6), 2), (pytest.approx(2 / 3), 1)]
    assert hypercube_entropy_spectrum(4, 0) == [(pytest.approx(1.0), 1)]
    assert hypercube_entropy_spectrum(4, 2) == [
        (pytest.approx(0.0), 2),
        (pytest.approx(1 / 6), 3),
        (pytest.approx(1 / 2), 1),
    ]
    spectrum = expand_spectrum(hypercube_entropy_spectrum(5, 2))
    assert len(spectrum) == 10
    assert spectrum.sum() == pytest.approx(1.0)


@pytest.mark.parametrize("n", [4, 5])
def test_hypercube_spectrum_matches_partial_trace(n: int) -> None:
    g = generate("hypercube", n=n)
    tolerances = ToleranceConfig()
    walk = lump_walk(homogeneous_walk(g), distance_partition(g, "0" * n), tolerances)
    basis = aggregate(walk, tolerances).basis
    labels = walk.partition.labels

    for k in range(n):
        rho = reduce_density_coin(basis.state(labels[k], labels[k + 1]))
        expected = expand_spectrum(hypercube_entropy_spectrum(n, k))
        np.testing.assert_allclose(rho.eigenvalues, expected, atol=1e-10)


@pytest.mark.parametrize("n, k", [(0, 0), (3, 3), (3, -1)])
def test_hypercube_spectrum_rejects_bad_indices(n: int, k: int) -> None:
    with pytest.raises(InvalidParams):
        hypercube_entropy_spectrum(n, k)
