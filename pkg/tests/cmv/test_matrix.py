import numpy as np
import pytest

from szl.cmv import (
    CmvMatrix,
    VerblunskySequence,
    build_cmv_matrix,
    jacobi_from_verblunsky,
    jacobi_matrix,
    lm_factors,
    restricted_symmetric_part,
    verblunsky_from_cmv_matrix,
)
from szl.errors import InvalidSequence, NotCmvShaped

HEXAHEDRON = VerblunskySequence((0.0, -1 / 3, 0.0, 1 / 3, 0.0, 1.0))


def test_sequence_validation_and_snapping() -> None:
    v = VerblunskySequence((0.5, 1.0 - 1e-12))
    assert v.alphas == (0.5, 1.0)
    assert v.alpha(-1) == -1.0
    assert v.alpha(7) == 0.0
    assert v.rho(0) == pytest.approx(np.sqrt(0.75))
    with pytest.raises(InvalidSequence):
        VerblunskySequence((1.0, 1.0))
    with pytest.raises(InvalidSequence):
        VerblunskySequence((0.0, 0.5))


def test_lm_factors_are_symmetric_involutions() -> None:
    ell, em = lm_factors(HEXAHEDRON)

    for factor in (ell, em):
        np.testing.assert_allclose(factor, factor.T)
        np.testing.assert_allclose(factor @ factor, np.eye(6), atol=1e-14)
    assert em[0, 0] == 1.0
    assert ell[5, 5] == 0.0 and em[5, 5] == 1.0


def test_cmv_matrix_is_pentadiagonal_and_orthogonal() -> None:
    c = build_cmv_matrix(HEXAHEDRON)

    assert c.size == 6
    assert c.entries[0, 0] == 0.0
    assert c.entries[1, 0] == pytest.approx(1.0)
    np.testing.assert_allclose(c.entries.T @ c.entries, np.eye(6), atol=1e-14)


def test_extraction_recovers_the_sequence(rng: np.random.Generator) -> None:
    alphas = tuple(rng.uniform(-0.9, 0.9, size=7)) + (-1.0,)
    v = VerblunskySequence(alphas)

    recovered = verblunsky_from_cmv_matrix(build_cmv_matrix(v))

    np.testing.assert_allclose(recovered.alphas, v.alphas, atol=1e-12)


def test_cmv_matrix_rejects_non_orthogonal_and_wide_band() -> None:
    with pytest.raises(NotCmvShaped, match="not orthogonal"):
        CmvMatrix(np.array([[1.0, 1.0], [0.0, 1.0]]))
    permutation = np.eye(4)[[3, 1, 2, 0]]
    with pytest.raises(NotCmvShaped, match="pentadiagonal") as info:
        CmvMatrix(permutation)
    assert info.value.witness["row"] == 0 and info.value.witness["column"] == 3


def test_extraction_rejects_early_vanishing_rho() -> None:
    with pytest.raises(NotCmvShaped, match="vanishes"):
        verblunsky_from_cmv_matrix(CmvMatrix(np.eye(3)))


def test_jacobi_of_tetrahedron_symmetrizes_lumped_walk() -> None:
    j = jacobi_from_verblunsky(VerblunskySequence((0.0, -1 / 3, 1.0)))

    assert j.r == pytest.approx((0.0, 2 / 3))
    assert j.s == pytest.approx((1 / np.sqrt(3),))
    np.testing.assert_allclose(np.linalg.eigvalsh(jacobi_matrix(j)), [-1 / 3, 1.0], atol=1e-14)


def test_restricted_symmetric_part_matches_jacobi_spectrum() -> None:
    v = HEXAHEDRON
    c = build_cmv_matrix(v)
    _, em = lm_factors(v)

    restricted = restricted_symmetric_part(c, em)
    jacobi = np.linalg.eigvalsh(jacobi_matrix(jacobi_from_verblunsky(v)))

    np.testing.assert_allclose(restricted, jacobi, atol=1e-12)
    np.testing.assert_allclose(jacobi, [-1.0, -1 / 3, 1 / 3, 1.0], atol=1e-12)


def test_extraction_round_trips_random_sequences(rng: np.random.Generator) -> None:
    for _ in range(100):
        length = int(rng.integers(2, 12))
        closing = float(rng.choice([-1.0, 1.0]))
        alphas = tuple(rng.uniform(-0.99, 0.99, size=length - 1)) + (closing,)
        v = VerblunskySequence(alphas)

        recovered = verblunsky_from_cmv_matrix(build_cmv_matrix(v))

        np.testing.assert_allclose(recovered.alphas, v.alphas, atol=1e-9)


def test_jacobi_of_vanishing_sequence_is_free_in_the_interior() -> None:
    j = jacobi_from_verblunsky(VerblunskySequence((0.0,) * 9 + (1.0,)))

    assert j.r == pytest.approx((0.0,) * 6)
    assert j.s[1:-1] == pytest.approx((0.5,) * 3)
    assert j.s[0] == pytest.approx(np.sqrt(0.5))
    assert j.s[-1] == pytest.approx(np.sqrt(0.5))


@pytest.mark.parametrize("a", [-0.6, 0.0, 0.25])
def test_jacobi_of_two_coefficient_sequence(a: float) -> None:
    closed = jacobi_from_verblunsky(VerblunskySequence((a, -1.0)))
    assert closed.r == pytest.approx((a,))
    assert closed.s == ()

    j = jacobi_from_verblunsky(VerblunskySequence((a, 1.0)))
    assert j.r[0] == pytest.approx(a)
    np.testing.assert_allclose(np.linalg.eigvalsh(jacobi_matrix(j)), [-1.0, 1.0], atol=1e-12)
