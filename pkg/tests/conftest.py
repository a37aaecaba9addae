from __future__ import annotations

import sys
from pathlib import Path

import numpy as np
import pytest


SRC_DIR = Path(__file__).resolve().parents[1] / "src"
sys.path.insert(0, str(SRC_DIR))


@pytest.fixture
def rng() -> np.random.Generator:
    from szl.errors.config import resolve_seed

    return np.random.default_rng(resolve_seed())


@pytest.fixture
def hexahedron():
    from szl.graphs import generate

    return generate("hexahedron")


@pytest.fixture
def skew_triangle():
    """Lumpable, weakly reversible chain whose triangle a-b1-c disagrees with its lumped image."""
    from szl.graphs import VertexPartition
    from szl.markov import StochasticMatrix, lump

    p = StochasticMatrix.from_dense(
        ("a", "b1", "b2", "c"),
        [
            [0.0, 0.2, 0.4, 0.4],
            [0.5, 0.0, 0.0, 0.5],
            [0.5, 0.0, 0.0, 0.5],
            [0.4, 0.3, 0.3, 0.0],
        ],
    )
    part = VertexPartition(blocks=(("a",), ("b1", "b2"), ("c",)), labels=("U", "V", "W"))
    return p, part, lump(p, part)
