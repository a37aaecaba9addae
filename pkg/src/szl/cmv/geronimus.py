"""
Geronimus relations between real Verblunsky coefficients, birth-death chains and Jacobi matrices.

With ``a(k)`` the coefficient ``alpha_k`` (``a(-1) = -1``, zero past the end)::

    q_k = (1 + a(2k-2)) (1 + a(2k-1)) / 2
    p_k = (1 - a(2k-1)) (1 - a(2k)) / 2
    r_k = (a(2k) (1 - a(2k-1)) - a(2k-2) (1 + a(2k-1))) / 2
    s_k = sqrt((1 - a(2k-1)) (1 - a(2k)^2) (1 + a(2k+1))) / 2
"""

from __future__ import annotations

import math

import numpy as np

from szl.cmv.types import JacobiCoefficients, VerblunskySequence
from szl.errors import DegenerateChain, InconsistentR, InvalidChain, NegativeRadicand, NotStochastic
from szl.markov.types import BirthDeathChain

PROBABILITY_TOL = 1e-10
RESIDUAL_TOL = 1e-9
DIVISION_FLOOR = 1e-12
BOUNDARY_TOL = 1e-9
RADICAND_TOL = 1e-12


def _state_count(v: VerblunskySequence) -> int:
    return len(v) // 2 + 1


def _up(v: VerblunskySequence, k: int) -> float:
    return 0.5 * (1.0 - v.alpha(2 * k - 1)) * (1.0 - v.alpha(2 * k))


def _down(v: VerblunskySequence, k: int) -> float:
    return 0.5 * (1.0 + v.alpha(2 * k - 2)) * (1.0 + v.alpha(2 * k - 1))


def _stay(v: VerblunskySequence, k: int) -> float:
    return 0.5 * (v.alpha(2 * k) * (1.0 - v.alpha(2 * k - 1)) - v.alpha(2 * k - 2) * (1.0 + v.alpha(2 * k - 1)))


def geronimus_pqr(v: VerblunskySequence) -> BirthDeathChain:
    """
    Birth-death chain of ``n // 2 + 1`` states encoded by ``v``.

    Raises
    ------
    NotStochastic
        When some ``p_k``, ``q_k`` or ``r_k`` falls outside ``[0, 1]`` by more than ``1e-10``,
        or the last state can still step up.

    Usage example
    -------------
        geronimus_pqr(VerblunskySequence((0.0, 1 / 9, 0.0, 3 / 5, 0.0, 1.0))).q  # (0, 5/9, 4/5, 1)
    """
    p, q, r = [], [], []
    for k in range(_state_count(v)):
        triple = (_up(v, k), _down(v, k), _stay(v, k))
        for name, value in zip("pqr", triple):
            if value < -PROBABILITY_TOL or value > 1.0 + PROBABILITY_TOL:
                raise NotStochastic(
                    f"{name}_{k} = {value!r} is not a probability.",
                    witness={"state": k, name: value},
                )
        up, down, stay = (min(max(value, 0.0), 1.0) for value in triple)
        p.append(up)
        q.append(down)
        r.append(stay)
    if p[-1] > PROBABILITY_TOL:
        raise NotStochastic(
            f"Last state {len(p) - 1} still steps up with p = {p[-1]!r}.",
            witness={"state": len(p) - 1, "p": p[-1]},
        )
    p[-1] = 0.0
    q[0] = 0.0
    try:
        return BirthDeathChain(p=tuple(p), q=tuple(q), r=tuple(r))
    except InvalidChain as exc:
        raise NotStochastic(str(exc), witness=exc.witness) from exc


def verblunsky_from_pqr(c: BirthDeathChain) -> VerblunskySequence:
    """
    Invert the Geronimus relations.

    ``alpha_0 = r_0``; then per state ``alpha_{2k-1} = 2 q_k / (1 + alpha_{2k-2}) - 1`` and
    ``alpha_{2k} = 1 - 2 p_k / (1 - alpha_{2k-1})``. The first coefficient of modulus one ends
    the sequence and must fall on the last state.

    Raises
    ------
    DegenerateChain
        On a vanishing divisor, a coefficient of modulus above one, or a sequence that ends
        before (or after) the last state.
    InconsistentR
        When ``r_k`` disagrees with the coefficients recovered from ``p_k`` and ``q_k``.
    """
    n = c.size
    alphas = [c.r[0]]

    def closes(alpha: float) -> bool:
        return abs(abs(alpha) - 1.0) <= BOUNDARY_TOL

    def admit(alpha: float, index: int) -> float:
        if abs(alpha) > 1.0 + BOUNDARY_TOL:
            raise DegenerateChain(
                f"alpha_{index} = {alpha!r} has modulus above 1.",
                witness={"index": index, "alpha": alpha},
            )
        return float(np.sign(alpha)) if closes(alpha) else alpha

    alphas[0] = admit(alphas[0], 0)
    if closes(alphas[0]):
        if n != 1:
            raise DegenerateChain(
                "Sequence closes at state 0 before the last state.",
                witness={"state": 0, "states": n},
            )
        return VerblunskySequence(tuple(alphas))

    for k in range(1, n):
        divisor = 1.0 + alphas[2 * k - 2]
        if divisor < DIVISION_FLOOR:
            raise DegenerateChain(
                f"1 + alpha_{2 * k - 2} vanishes.",
                witness={"state": k, "index": 2 * k - 2},
            )
        odd = admit(2.0 * c.q[k] / divisor - 1.0, 2 * k - 1)
        alphas.append(odd)
        if closes(odd):
            even = 0.0
        else:
            even = admit(1.0 - 2.0 * c.p[k] / (1.0 - odd), 2 * k)
            alphas.append(even)

        expected = 0.5 * (even * (1.0 - odd) - alphas[2 * k - 2] * (1.0 + odd))
        if abs(expected - c.r[k]) > RESIDUAL_TOL:
            raise InconsistentR(
                f"r_{k} = {c.r[k]!r} but the recovered coefficients give {expected!r}.",
                witness={"state": k, "r": c.r[k], "expected": expected},
            )
        if closes(alphas[-1]):
            if k != n - 1:
                raise DegenerateChain(
                    f"Sequence closes at state {k} before the last state {n - 1}.",
                    witness={"state": k, "states": n},
                )
            return VerblunskySequence(tuple(alphas))

    raise DegenerateChain(
        "Sequence never reaches a coefficient of modulus one.",
        witness={"states": n},
    )


def jacobi_from_verblunsky(v: VerblunskySequence) -> JacobiCoefficients:
    """
    Jacobi coefficients ``(r_k, s_k)`` of ``v``.

    The matrix has ``n // 2 + 1`` rows, one fewer when ``n`` is even and the sequence ends in ``-1``.

    Raises
    ------
    NegativeRadicand
        When a radicand is negative beyond ``1e-12``.
    """
    size = _state_count(v)
    if len(v) % 2 == 0 and v.alphas[-1] < 0.0:
        size -= 1
    r = tuple(_stay(v, k) for k in range(size))
    s = []
    for k in range(size - 1):
        radicand = (1.0 - v.alpha(2 * k - 1)) * (1.0 - v.alpha(2 * k) ** 2) * (1.0 + v.alpha(2 * k + 1))
        if radicand < -RADICAND_TOL:
            raise NegativeRadicand(
                f"s_{k} has radicand {radicand!r}.",
                witness={"index": k, "radicand": radicand},
            )
        s.append(0.5 * math.sqrt(max(radicand, 0.0)))
    return JacobiCoefficients(r=r, s=tuple(s))


def jacobi_matrix(j: JacobiCoefficients) -> np.ndarray:
    """Dense symmetric tridiagonal matrix with diagonal ``r`` and off-diagonal ``s``."""
    off = np.asarray(j.s, dtype=float)
    return np.diag(np.asarray(j.r, dtype=float)) + np.diag(off, 1) + np.diag(off, -1)
