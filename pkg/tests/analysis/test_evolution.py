import numpy as np
import pytest

from szl.analysis import position_distribution, simulate_quantum
from szl.errors import InvalidParams, NormDrift
from szl.graphs import distance_partition
from szl.markov import homogeneous_walk, lump
from szl.szegedy import SzegedyOperator, WalkerState, phi_vector


def test_first_step_spreads_to_neighbours(hexahedron) -> None:
    op = SzegedyOperator(homogeneous_walk(hexahedron))

    series = simulate_quantum(op, phi_vector(op, "000"), steps=3)

    assert len(series) == 4
    assert series[0].get("000") == pytest.approx(1.0)
    for v in ("001", "010", "100"):
        assert series[1].get(v) == pytest.approx(1 / 3)
    for dist in series:
        assert dist.probabilities.sum() == pytest.approx(1.0)


def test_full_walk_projects_onto_lumped_walk(hexahedron) -> None:
    p = homogeneous_walk(hexahedron)
    part = distance_partition(hexahedron, "000")
    full, lumped = SzegedyOperator(p), SzegedyOperator(lump(p, part))

    full_series = simulate_quantum(full, phi_vector(full, "000"), steps=8)
    lumped_series = simulate_quantum(lumped, phi_vector(lumped, "A"), steps=8)

    for big, small in zip(full_series, lumped_series):
        for label, block in zip(part.labels, part.blocks):
            assert sum(big.get(v) for v in block) == pytest.approx(small.get(label), abs=1e-12)


def test_position_distribution_of_arc_state(hexahedron) -> None:
    op = SzegedyOperator(homogeneous_walk(hexahedron))
    s = WalkerState.from_amplitudes(op.basis, {("000", "001"): 0.6, ("011", "001"): 0.8})

    dist = position_distribution(s)

    assert dist.get("000") == pytest.approx(0.36)
    assert dist.get("011") == pytest.approx(0.64)
    assert np.count_nonzero(dist.probabilities) == 2


def test_negative_steps_are_rejected(hexahedron) -> None:
    op = SzegedyOperator(homogeneous_walk(hexahedron))
    with pytest.raises(InvalidParams):
        simulate_quantum(op, phi_vector(op, "000"), steps=-1)


def test_position_distribution_rejects_off_unit_weights(hexahedron) -> None:
    op = SzegedyOperator(homogeneous_walk(hexahedron))
    s = WalkerState.from_amplitudes(op.basis, {("000", "001"): 0.5}, unnormalized=True)

    with pytest.raises(NormDrift) as info:
        position_distribution(s)
    assert info.value.witness["sum"] == pytest.approx(0.25)
