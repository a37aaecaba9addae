import numpy as np
import pytest

from szl.cmv import VerblunskySequence, geronimus_pqr, verblunsky_from_pqr
from szl.errors import DegenerateChain, InconsistentR, NotStochastic
from szl.markov import BirthDeathChain, ehrenfest_chain


def test_hexahedron_sequence_gives_lumped_path() -> None:
    chain = geronimus_pqr(VerblunskySequence((0.0, -1 / 3, 0.0, 1 / 3, 0.0, 1.0)))

    assert chain.p == pytest.approx((1.0, 2 / 3, 1 / 3, 0.0))
    assert chain.q == pytest.approx((0.0, 1 / 3, 2 / 3, 1.0))
    assert chain.r == pytest.approx((0.0, 0.0, 0.0, 0.0))


def test_straightened_chain_of_alternative_partition() -> None:
    chain = geronimus_pqr(VerblunskySequence((0.0, 1 / 9, 0.0, 3 / 5, 0.0, 1.0)))

    assert chain.q == pytest.approx((0.0, 5 / 9, 4 / 5, 1.0))
    assert chain.p == pytest.approx((1.0, 4 / 9, 1 / 5, 0.0))


def test_holding_probability_comes_from_even_coefficients() -> None:
    chain = geronimus_pqr(VerblunskySequence((0.0, -1 / 3, 1.0)))
    assert chain.r == pytest.approx((0.0, 2 / 3))


@pytest.mark.parametrize("n", [2, 3, 6, 11])
def test_ehrenfest_chain_round_trips(n: int) -> None:
    urn = ehrenfest_chain(n)
    v = verblunsky_from_pqr(urn)

    assert v.alphas[0::2] == pytest.approx([0.0] * n)
    odd = [(2 * k - n) / n for k in range(1, n + 1)]
    assert v.alphas[1::2] == pytest.approx(odd)

    back = geronimus_pqr(v)
    np.testing.assert_allclose(back.p, urn.p, atol=1e-12)
    np.testing.assert_allclose(back.q, urn.q, atol=1e-12)


def test_single_state_chain_is_alpha_one() -> None:
    assert verblunsky_from_pqr(BirthDeathChain(p=(0.0,), q=(0.0,), r=(1.0,))).alphas == (1.0,)


def test_reducible_chain_has_inconsistent_holding_probability() -> None:
    chain = BirthDeathChain(p=(0.5, 0.0), q=(0.0, 0.0), r=(0.5, 1.0))
    with pytest.raises(InconsistentR) as info:
        verblunsky_from_pqr(chain)
    assert info.value.witness["state"] == 1


def test_sequence_closing_early_is_degenerate() -> None:
    chain = BirthDeathChain(p=(1.0, 0.0, 0.0), q=(0.0, 1.0, 1.0), r=(0.0, 0.0, 0.0))
    with pytest.raises(DegenerateChain):
        verblunsky_from_pqr(chain)


def test_negative_probabilities_are_not_stochastic() -> None:
    with pytest.raises(NotStochastic):
        geronimus_pqr(VerblunskySequence((-0.5, 1.0)))
