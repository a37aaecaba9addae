import math

import numpy as np
import pytest

from szl.aggregation import aggregated_basis, aggregated_phi, solve_linking, verify_reduction
from szl.errors import BasisMismatch
from szl.graphs import distance_partition, generate
from szl.markov import homogeneous_walk, lump
from szl.szegedy import SzegedyOperator, apply_U, phi_vector


def _aggregate(g, root):
    p = homogeneous_walk(g)
    part = distance_partition(g, root)
    lumped = lump(p, part)
    basis = aggregated_basis(p, part, lumped, solve_linking(p, part, lumped))
    return p, lumped, basis


def test_hexahedron_basis_is_orthonormal(hexahedron) -> None:
    _, lumped, basis = _aggregate(hexahedron, "000")

    assert basis.pairs == (("A", "B"), ("B", "A"), ("B", "C"), ("C", "B"), ("C", "D"), ("D", "C"))
    np.testing.assert_allclose(basis.gram(), np.eye(6), atol=1e-14)
    bc = basis.state("B", "C")
    assert bc.amplitude("001", "011") == pytest.approx(1 / math.sqrt(6))


def test_aggregated_phi_of_a_singleton_block_is_phi_root(hexahedron) -> None:
    p, lumped, basis = _aggregate(hexahedron, "000")
    op = SzegedyOperator(p)

    assert aggregated_phi(basis, lumped, "A").distance(phi_vector(op, "000")) < 1e-14


@pytest.mark.parametrize(("family", "root"), [("octahedron", "-1"), ("icosahedron", "12"), ("dodecahedron", "31")])
def test_reduction_is_exact_on_platonic_solids(family: str, root: str) -> None:
    p, lumped, basis = _aggregate(generate(family), root)

    assert verify_reduction(SzegedyOperator(p), basis, SzegedyOperator(lumped)) < 1e-12


def test_step_keeps_aggregated_states_in_their_span(hexahedron) -> None:
    p, lumped, basis = _aggregate(hexahedron, "000")
    image = apply_U(SzegedyOperator(p), basis.state("B", "C"))

    coefficients = basis.matrix() @ image.amplitudes
    assert np.linalg.norm(coefficients) == pytest.approx(1.0)
    assert coefficients[basis.index[("C", "B")]] == pytest.approx(1 / 3)
    assert coefficients[basis.index[("A", "B")]] == pytest.approx(2 * math.sqrt(2) / 3)


def test_verify_reduction_rejects_foreign_basis(hexahedron) -> None:
    _, lumped, basis = _aggregate(hexahedron, "000")
    other = SzegedyOperator(homogeneous_walk(generate("tetrahedron")))

    with pytest.raises(BasisMismatch):
        verify_reduction(other, basis, SzegedyOperator(lumped))
