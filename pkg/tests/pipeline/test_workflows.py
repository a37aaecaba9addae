from pathlib import Path

import numpy as np
import pytest

from szl.cmv import VerblunskySequence
from szl.errors import ConfigError, InconsistentConstraints, ToleranceConfig, UnknownVertex
from szl.graphs import VertexPartition, generate
from szl.io import dump_graph, write_json
from szl.markov import StochasticMatrix, homogeneous_walk
from szl.pipeline.workflows import (
    aggregate,
    full_verblunsky,
    lump_walk,
    lumped_verblunsky,
    orthonormalized_cmv,
    resolve_graph,
    resolve_partition,
    root_block,
    start_vector,
    trust_free_ball,
)

TOL = ToleranceConfig()
ALTERNATIVE_BLOCKS = (("001", "010"), ("000", "011"), ("110", "101"), ("100", "111"))


def test_resolve_graph_family_and_file(tmp_path: Path) -> None:
    g, family = resolve_graph(" Hypercube ", n=3)
    assert family == "hypercube"
    assert len(g.vertices) == 8

    write_json(dump_graph(g), tmp_path / "cube.json")
    loaded, none = resolve_graph(f"file:{tmp_path / 'cube.json'}")
    assert none is None
    assert loaded.vertices == g.vertices


def test_resolve_partition_forms(hexahedron) -> None:
    default = resolve_partition(None, hexahedron, "hexahedron")
    assert default.blocks[0] == ("000",)

    shifted = resolve_partition("distance:111", hexahedron, None)
    assert shifted.blocks[0] == ("111",)

    singletons = resolve_partition("singletons", hexahedron, None)
    assert len(singletons.blocks) == 8


@pytest.mark.parametrize("spec", ["distance", "bogus"])
def test_resolve_partition_errors(hexahedron, spec: str) -> None:
    with pytest.raises(ConfigError):
        resolve_partition(spec, hexahedron, None)


def test_alternative_partition_aggregates() -> None:
    g = generate("hexahedron")
    walk = lump_walk(homogeneous_walk(g), VertexPartition(blocks=ALTERNATIVE_BLOCKS), TOL)

    result = aggregate(walk, TOL)

    assert result.report.passed
    assert result.residual < 1e-10
    v, _ = full_verblunsky(walk, "A", TOL, result.basis)
    np.testing.assert_allclose(v.alphas, (0.0, 1 / 9, 0.0, 3 / 5, 0.0, 1.0), atol=1e-9)


def test_failed_condition_raises_with_its_name() -> None:
    p = StochasticMatrix.from_dense(
        ("a", "b", "c", "d"),
        [[0, 0.9, 0, 0.1], [0.5, 0, 0.5, 0], [0, 0.5, 0, 0.5], [0.5, 0, 0.5, 0]],
    )
    walk = lump_walk(p, VertexPartition(blocks=(("a", "c"), ("b", "d"))), TOL)

    with pytest.raises(InconsistentConstraints) as info:
        aggregate(walk, TOL)
    assert info.value.witness["condition"] == "cycle_condition"


def test_full_start_of_wide_block_needs_basis() -> None:
    g = generate("hexahedron")
    walk = lump_walk(homogeneous_walk(g), VertexPartition(blocks=ALTERNATIVE_BLOCKS), TOL)

    with pytest.raises(ConfigError, match="aggregated basis"):
        start_vector(walk, "A", full=True)


def test_orthonormalization_matches_recurrence() -> None:
    g = generate("octahedron")
    walk = lump_walk(homogeneous_walk(g), resolve_partition(None, g, "octahedron"), TOL)

    recurrence, _ = lumped_verblunsky(walk, "A", TOL)
    orthonormalized, c = orthonormalized_cmv(*start_vector(walk, "A", full=False), TOL)

    np.testing.assert_allclose(orthonormalized.alphas, recurrence.alphas, atol=1e-9)
    np.testing.assert_allclose(recurrence.alphas, (0.0, -1 / 2, 2 / 3, 1 / 5, 1.0), atol=1e-9)
    assert c.size == 5


def test_root_block(hexahedron) -> None:
    part = resolve_partition(None, hexahedron, "hexahedron")
    assert root_block(part, "011") == "C"
    with pytest.raises(UnknownVertex):
        root_block(part, "222")


def test_trust_free_ball_marks_boundary() -> None:
    v = VerblunskySequence((0.0, -0.5, 0.0, -0.5, 0.0, 1.0))

    trusted = trust_free_ball(v, radius=3)

    assert trusted.boundary_trusted_up_to == 2
    assert trusted.trusted(2) and not trusted.trusted(3)
    assert trust_free_ball(v, radius=1).boundary_trusted_up_to == -1
    assert trust_free_ball(v, radius=6).boundary_trusted_up_to == 8
