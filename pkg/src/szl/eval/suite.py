"""Golden reproduction cases for ``szl verify``."""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Callable, Optional, Sequence

import numpy as np

from szl.aggregation import aggregated_phi
from szl.analysis import (
    entanglement_entropy,
    expand_spectrum,
    hypercube_entropy_spectrum,
    reduce_density_coin,
)
from szl.cmv import (
    VerblunskySequence,
    build_cmv_matrix,
    geronimus_pqr,
    jacobi_from_verblunsky,
    jacobi_matrix,
    lm_factors,
    restricted_symmetric_part,
    verblunsky_from_cmv_matrix,
    verblunsky_via_recurrence,
)
from szl.errors import ConfigError, NotLumpable, SzlError, ToleranceConfig
from szl.errors.config import resolve_seed
from szl.graphs import VertexPartition, canonical_root, distance_partition, generate
from szl.markov import (
    BirthDeathChain,
    Distribution,
    birth_death_matrix,
    classical_evolve,
    ehrenfest_chain,
    homogeneous_walk,
    lump,
)
from szl.pipeline.workflows import (
    AggregationResult,
    LumpedWalk,
    aggregate,
    full_verblunsky,
    lump_walk,
    lumped_verblunsky,
    trust_free_ball,
)
from szl.szegedy import (
    SzegedyOperator,
    WalkerState,
    apply_reflection,
    apply_swap,
    apply_U,
    combine,
    phi_vector,
)

SUITES: tuple[str, ...] = ("golden", "paper")
SECTIONS: tuple[str, ...] = (
    "hexahedron",
    "platonic",
    "alternative_partition",
    "hypercube",
    "free_group",
    "cmv",
)

EXACT_TOL = 1e-12
ALPHA_TOL = 1e-9
REDUCTION_TOL = 1e-10
FREE_GROUP_TOL = 1e-8
ROUNDTRIP_TOL = 1e-8

ALTERNATIVE = "hexahedron_abcd"
ALTERNATIVE_BLOCKS = (("001", "010"), ("000", "011"), ("110", "101"), ("100", "111"))
NON_LUMPABLE_BLOCKS = (("001", "010"), ("000", "011", "110", "101"), ("100", "111"))

SOLIDS = ("tetrahedron", "octahedron", "hexahedron", "icosahedron", "dodecahedron")

LUMPED: dict[str, tuple[int, tuple[tuple[int, ...], ...]]] = {
    "tetrahedron": (3, ((0, 3), (1, 2))),
    "octahedron": (4, ((0, 4, 0), (1, 2, 1), (0, 4, 0))),
    "hexahedron": (3, ((0, 3, 0, 0), (1, 0, 2, 0), (0, 2, 0, 1), (0, 0, 3, 0))),
    "icosahedron": (5, ((0, 5, 0, 0), (1, 2, 2, 0), (0, 2, 2, 1), (0, 0, 5, 0))),
    "dodecahedron": (
        3,
        (
            (0, 3, 0, 0, 0, 0),
            (1, 0, 2, 0, 0, 0),
            (0, 1, 1, 1, 0, 0),
            (0, 0, 1, 1, 1, 0),
            (0, 0, 0, 2, 0, 1),
            (0, 0, 0, 0, 3, 0),
        ),
    ),
    ALTERNATIVE: (3, ((0, 2, 1, 0), (2, 0, 0, 1), (1, 0, 0, 2), (0, 1, 2, 0))),
}

ALPHAS: dict[str, tuple[float, ...]] = {
    "tetrahedron": (0.0, -1 / 3, 1.0),
    "octahedron": (0.0, -1 / 2, 2 / 3, 1 / 5, 1.0),
    "hexahedron": (0.0, -1 / 3, 0.0, 1 / 3, 0.0, 1.0),
    "icosahedron": (0.0, -3 / 5, 1 / 2, -7 / 15, 8 / 11, 3 / 19, 1.0),
    "dodecahedron": (0.0, -1 / 3, 0.0, -1 / 3, 1 / 2, -5 / 9, 4 / 7, -5 / 33, 8 / 19, 11 / 27, 1.0),
    ALTERNATIVE: (0.0, 1 / 9, 0.0, 3 / 5, 0.0, 1.0),
}

STRAIGHTENED_ROWS = ((0, 1, 0, 0), (5 / 9, 0, 4 / 9, 0), (0, 4 / 5, 0, 1 / 5), (0, 0, 1, 0))

# (num_generators, involutive, radius, odd coefficient)
FREE_BALLS = ((3, True, 8, -1 / 3), (2, False, 7, -1 / 2))


class GoldenMismatch(SzlError):
    """A golden case measured a residual above its tolerance or a result of the wrong shape."""


@dataclass(frozen=True)
class GoldenCase:
    """
    One named reproduction check.

    ``check`` returns the largest deviation from the expected values; the case passes when it
    does not exceed ``tolerance``.
    """

    name: str
    section: str
    tolerance: float
    check: Callable[[], float]
    deps: tuple[str, ...] = ()


def max_deviation(actual: Sequence[float] | np.ndarray, expected: Sequence[float] | np.ndarray) -> float:
    """Largest entrywise ``|actual - expected|``; a shape difference raises GoldenMismatch."""
    a = np.asarray(actual, dtype=float)
    e = np.asarray(expected, dtype=float)
    if a.shape != e.shape:
        raise GoldenMismatch(
            f"Result has shape {a.shape}, expected {e.shape}.",
            witness={"actual_shape": list(a.shape), "expected_shape": list(e.shape)},
        )
    return float(np.max(np.abs(a - e))) if a.size else 0.0


class _Fixtures:
    """Lumped walks and aggregations shared by the cases of one suite run."""

    def __init__(self, tolerances: ToleranceConfig) -> None:
        self.tolerances = tolerances
        self._walks: dict[str, LumpedWalk] = {}
        self._aggregations: dict[str, AggregationResult] = {}

    def walk(self, name: str) -> LumpedWalk:
        if name not in self._walks:
            self._walks[name] = self._build_walk(name)
        return self._walks[name]

    def _build_walk(self, name: str) -> LumpedWalk:
        if name == ALTERNATIVE:
            g = generate("hexahedron")
            part = VertexPartition(blocks=ALTERNATIVE_BLOCKS)
        elif name.startswith("hypercube"):
            g = generate("hypercube", n=int(name[len("hypercube") :]))
            part = distance_partition(g, g.vertices[0])
        elif name.startswith("free_ball"):
            _, num, involutive, radius = name.split(":")
            g = generate(
                "free_ball",
                num_generators=int(num),
                involutive=involutive == "involutive",
                radius=int(radius),
            )
            part = distance_partition(g, canonical_root("free_ball", g))
        else:
            g = generate(name)
            part = distance_partition(g, canonical_root(name, g))
        return lump_walk(homogeneous_walk(g), part, self.tolerances)

    def aggregation(self, name: str) -> AggregationResult:
        if name not in self._aggregations:
            self._aggregations[name] = aggregate(self.walk(name), self.tolerances)
        return self._aggregations[name]

    def lumped_alphas(self, name: str) -> VerblunskySequence:
        walk = self.walk(name)
        return lumped_verblunsky(walk, walk.partition.labels[0], self.tolerances)[0]

    def full_alphas(self, name: str) -> VerblunskySequence:
        walk = self.walk(name)
        root = walk.partition.labels[0]
        basis = None if len(walk.partition.block(root)) == 1 else self.aggregation(name).basis
        return full_verblunsky(walk, root, self.tolerances, basis)[0]


def _free_ball_name(num: int, involutive: bool, radius: int) -> str:
    return f"free_ball:{num}:{'involutive' if involutive else 'free'}:{radius}"


# ##########  checks  ##########


def _lumped_matrix(fx: _Fixtures, name: str) -> float:
    denominator, rows = LUMPED[name]
    return max_deviation(fx.walk(name).lumped.dense(), np.asarray(rows, dtype=float) / denominator)


def _hexahedron_walk(fx: _Fixtures) -> float:
    p = fx.walk("hexahedron").chain
    expected = np.zeros((p.size, p.size))
    for i in p.vertices:
        for j in p.vertices:
            if sum(a != b for a, b in zip(i, j)) == 1:
                expected[p.index[i], p.index[j]] = 1 / 3
    return max_deviation(p.dense(), expected)


def _hexahedron_action(fx: _Fixtures) -> float:
    op = SzegedyOperator(fx.walk("hexahedron").chain)
    arcs = op.basis
    image = apply_U(op, WalkerState.basis_vector(arcs, "001", "101"))
    expected = combine(
        arcs,
        [
            (2 / 3, WalkerState.basis_vector(arcs, "000", "001")),
            (2 / 3, WalkerState.basis_vector(arcs, "011", "001")),
            (-1 / 3, WalkerState.basis_vector(arcs, "101", "001")),
        ],
    )
    return image.distance(expected)


def _lumped_action(
    fx: _Fixtures, name: str, start: tuple[str, str], terms: Sequence[tuple[float, tuple[str, str]]]
) -> float:
    op = SzegedyOperator(fx.walk(name).lumped)
    arcs = op.basis
    image = apply_U(op, WalkerState.basis_vector(arcs, *start))
    expected = combine(arcs, [(c, WalkerState.basis_vector(arcs, *arc)) for c, arc in terms])
    return image.distance(expected)


def _hexahedron_lumped_action(fx: _Fixtures) -> float:
    root2 = math.sqrt(2.0)
    return max(
        _lumped_action(fx, "hexahedron", ("B", "A"), [(-1 / 3, ("A", "B")), (2 * root2 / 3, ("C", "B"))]),
        _lumped_action(fx, "hexahedron", ("D", "C"), [(1.0, ("C", "D"))]),
    )


def _tetrahedron_lumped_action(fx: _Fixtures) -> float:
    root2 = math.sqrt(2.0)
    return max(
        _lumped_action(fx, "tetrahedron", ("A", "B"), [(1.0, ("B", "A"))]),
        _lumped_action(fx, "tetrahedron", ("B", "A"), [(-1 / 3, ("A", "B")), (2 * root2 / 3, ("B", "B"))]),
        _lumped_action(fx, "tetrahedron", ("B", "B"), [(2 * root2 / 3, ("A", "B")), (1 / 3, ("B", "B"))]),
    )


def _hexahedron_linking(fx: _Fixtures) -> float:
    s = fx.aggregation("hexahedron").linking
    deviations = [abs(s.get("000", "B") - 1.0)]
    deviations += [abs(s.get(i, "C") - 1 / math.sqrt(2.0)) for i in ("001", "010", "100")]
    return max(deviations)


def _hexahedron_classical(fx: _Fixtures) -> float:
    lumped = fx.walk("hexahedron").lumped
    evolved = classical_evolve(lumped, Distribution.delta(lumped.vertices, "A"), 2)
    return max_deviation(evolved.probabilities, (1 / 3, 0.0, 2 / 3, 0.0))


def _hexahedron_cmv_basis(fx: _Fixtures) -> float:
    walk = fx.walk("hexahedron")
    states = lumped_verblunsky(walk, "A", fx.tolerances)[1]
    arcs = states[0].basis
    order = (("A", "B"), ("B", "A"), ("B", "C"), ("C", "B"), ("C", "D"), ("D", "C"))
    if len(states) != len(order):
        raise GoldenMismatch(
            f"{len(states)} basis vectors, expected {len(order)}.",
            witness={"count": len(states)},
        )
    return max(state.distance(WalkerState.basis_vector(arcs, *arc)) for state, arc in zip(states, order))


def _hexahedron_entropy(fx: _Fixtures) -> float:
    state = fx.aggregation("hexahedron").basis.state("B", "C")
    eigen = max_deviation(reduce_density_coin(state).eigenvalues, (1 / 6, 1 / 6, 2 / 3))
    bits = abs(entanglement_entropy(state, base=2.0) - (math.log2(3.0) - 1 / 3))
    return max(eigen, bits)


def _hexahedron_entropy_pullback(fx: _Fixtures) -> float:
    result = fx.aggregation("hexahedron")
    phi = aggregated_phi(result.basis, result.walk.lumped, "B")
    return max_deviation(reduce_density_coin(phi).eigenvalues, (1 / 9, 1 / 9, 7 / 9))


def _alphas(fx: _Fixtures, name: str, full: bool) -> float:
    v = fx.full_alphas(name) if full else fx.lumped_alphas(name)
    return max_deviation(v.alphas, ALPHAS[name])


def _not_lumpable() -> float:
    g = generate("hexahedron")
    try:
        lump(homogeneous_walk(g), VertexPartition(blocks=NON_LUMPABLE_BLOCKS))
    except NotLumpable:
        return 0.0
    raise GoldenMismatch("Partition K, L, M lumped although its row sums differ.")


def _straightened_chain() -> float:
    chain = geronimus_pqr(VerblunskySequence(ALPHAS[ALTERNATIVE]))
    return max_deviation(birth_death_matrix(chain).dense(), STRAIGHTENED_ROWS)


def _ehrenfest_alphas(n: int) -> tuple[float, ...]:
    alphas = [0.0] * (2 * n)
    for k in range(1, n + 1):
        alphas[2 * k - 1] = (2 * k - n) / n
    return tuple(alphas)


def _ehrenfest(fx: _Fixtures, n: int) -> float:
    name = f"hypercube{n}"
    expected = _ehrenfest_alphas(n)
    urn = SzegedyOperator(birth_death_matrix(ehrenfest_chain(n)))
    from_urn = verblunsky_via_recurrence(
        apply_swap, lambda s: apply_reflection(urn, s), phi_vector(urn, "0"), fx.tolerances.dependence
    )[0]
    return max(
        max_deviation(fx.full_alphas(name).alphas, expected),
        max_deviation(fx.lumped_alphas(name).alphas, expected),
        max_deviation(from_urn.alphas, expected),
    )


def _hypercube_action(fx: _Fixtures, n: int = 4) -> float:
    result = fx.aggregation(f"hypercube{n}")
    labels = result.walk.partition.labels
    deviation = result.residual
    for k in range(n):
        terms = [((n - 2 * k) / n, (labels[k + 1], labels[k]))]
        if k > 0:
            terms.append((2 * math.sqrt(k * (n - k)) / n, (labels[k - 1], labels[k])))
        deviation = max(deviation, _lumped_action(fx, f"hypercube{n}", (labels[k], labels[k + 1]), terms))
        image = apply_U(result.operator, result.basis.state(labels[k], labels[k + 1]))
        expected = combine(result.basis.arc_basis, [(c, result.basis.state(*arc)) for c, arc in terms])
        deviation = max(deviation, image.distance(expected))
    return deviation


def _hypercube_entropy(fx: _Fixtures, n: int) -> float:
    result = fx.aggregation(f"hypercube{n}")
    labels = result.walk.partition.labels
    deviation = 0.0
    for k in range(n):
        density = reduce_density_coin(result.basis.state(labels[k], labels[k + 1]))
        expected_spectrum = expand_spectrum(hypercube_entropy_spectrum(n, k))
        deviation = max(deviation, max_deviation(density.eigenvalues, expected_spectrum))
    return deviation


def _free_ball(fx: _Fixtures, num: int, involutive: bool, radius: int, odd: float, full: bool) -> float:
    name = _free_ball_name(num, involutive, radius)
    v = fx.full_alphas(name) if full else fx.lumped_alphas(name)
    v = trust_free_ball(v, radius)
    deviations = [abs(a - (odd if k % 2 else 0.0)) for k, a in enumerate(v.alphas) if v.trusted(k)]
    if not deviations:
        raise GoldenMismatch(
            f"No trusted coefficients at radius {radius}.",
            witness={"radius": radius},
        )
    return max(deviations)


def _jacobi_restriction(name: str) -> float:
    v = VerblunskySequence(ALPHAS[name])
    c = build_cmv_matrix(v)
    _, em = lm_factors(v)
    jacobi = np.linalg.eigvalsh(jacobi_matrix(jacobi_from_verblunsky(v)))
    return max_deviation(restricted_symmetric_part(c, em), jacobi)


def _cmv_structure(v: VerblunskySequence) -> float:
    ell, em = lm_factors(v)
    c = build_cmv_matrix(v)
    entries = c.entries
    n = c.size
    identity = np.eye(n)
    band = np.abs(np.subtract.outer(np.arange(n), np.arange(n))) > 2
    return max(
        max_deviation(entries.T @ entries, identity),
        float(np.max(np.abs(entries[band]))) if band.any() else 0.0,
        max_deviation(entries, ell @ em),
        max_deviation(ell @ ell, identity),
        max_deviation(em @ em, identity),
        max_deviation(verblunsky_from_cmv_matrix(c).alphas, v.alphas),
    )


def random_birth_death_chain(rng: np.random.Generator, n: int) -> BirthDeathChain:
    """Chain on ``n >= 2`` states with ``p, q, r`` drawn in ``[0.05, 0.95]`` and normalized."""
    raw = rng.uniform(0.05, 0.95, size=(n, 3))
    raw[0, 1] = 0.0
    raw[-1, 0] = 0.0
    raw /= raw.sum(axis=1, keepdims=True)
    return BirthDeathChain(p=tuple(raw[:, 0]), q=tuple(raw[:, 1]), r=tuple(raw[:, 2]))


def random_verblunsky(rng: np.random.Generator, n: int) -> VerblunskySequence:
    inner = rng.uniform(-0.95, 0.95, size=n - 1)
    return VerblunskySequence(tuple(inner) + (float(rng.choice((-1.0, 1.0))),))


def geronimus_roundtrip(c: BirthDeathChain, dep_tol: float) -> float:
    """Deviation of ``geronimus_pqr`` of the quantized chain from ``c``."""
    op = SzegedyOperator(birth_death_matrix(c))
    e0 = phi_vector(op, "0")
    v, _ = verblunsky_via_recurrence(apply_swap, lambda s: apply_reflection(op, s), e0, dep_tol)
    back = geronimus_pqr(v)
    return max(max_deviation(back.p, c.p), max_deviation(back.q, c.q), max_deviation(back.r, c.r))


def _random_roundtrips(fx: _Fixtures, count: int = 200) -> float:
    rng = np.random.default_rng(resolve_seed())
    sizes = rng.integers(2, 51, size=count)
    dep_tol = fx.tolerances.dependence
    return max(geronimus_roundtrip(random_birth_death_chain(rng, int(n)), dep_tol) for n in sizes)


def _random_structures(count: int = 100) -> float:
    rng = np.random.default_rng(resolve_seed())
    sequences = [random_verblunsky(rng, int(n)) for n in rng.integers(1, 21, size=count)]
    sequences += [VerblunskySequence(alphas) for alphas in ALPHAS.values()]
    return max(_cmv_structure(v) for v in sequences)


# ##########  suite assembly  ##########


def _hexahedron_cases(fx: _Fixtures) -> list[GoldenCase]:
    section = "hexahedron"
    return [
        GoldenCase("hexahedron.walk", section, EXACT_TOL, lambda: _hexahedron_walk(fx)),
        GoldenCase("hexahedron.action", section, EXACT_TOL, lambda: _hexahedron_action(fx)),
        GoldenCase(
            "hexahedron.lumped_action", section, EXACT_TOL, lambda: _hexahedron_lumped_action(fx)
        ),
        GoldenCase("hexahedron.classical", section, EXACT_TOL, lambda: _hexahedron_classical(fx)),
        GoldenCase("hexahedron.linking", section, EXACT_TOL, lambda: _hexahedron_linking(fx)),
        GoldenCase("hexahedron.cmv_basis", section, ALPHA_TOL, lambda: _hexahedron_cmv_basis(fx)),
        GoldenCase("hexahedron.entropy", section, REDUCTION_TOL, lambda: _hexahedron_entropy(fx)),
        GoldenCase(
            "hexahedron.entropy_pullback",
            section,
            REDUCTION_TOL,
            lambda: _hexahedron_entropy_pullback(fx),
        ),
    ]


def _family_cases(fx: _Fixtures, name: str, section: str) -> list[GoldenCase]:
    lumped = f"{name}.lump"
    reduction = f"{name}.reduction"
    full_deps = (reduction,) if name == ALTERNATIVE else ()
    return [
        GoldenCase(lumped, section, EXACT_TOL, lambda: _lumped_matrix(fx, name)),
        GoldenCase(
            reduction, section, REDUCTION_TOL, lambda: fx.aggregation(name).residual, deps=(lumped,)
        ),
        GoldenCase(
            f"{name}.verblunsky_lumped",
            section,
            ALPHA_TOL,
            lambda: _alphas(fx, name, False),
            deps=(lumped,),
        ),
        GoldenCase(
            f"{name}.verblunsky_full",
            section,
            ALPHA_TOL,
            lambda: _alphas(fx, name, True),
            deps=full_deps,
        ),
        GoldenCase(f"{name}.jacobi", "cmv", FREE_GROUP_TOL, lambda: _jacobi_restriction(name)),
    ]


def _hypercube_cases(fx: _Fixtures) -> list[GoldenCase]:
    cases = [GoldenCase("hypercube4.action", "hypercube", EXACT_TOL, lambda: _hypercube_action(fx))]
    for n in range(2, 11):
        cases.append(
            GoldenCase(f"hypercube{n}.ehrenfest", "hypercube", ALPHA_TOL, lambda n=n: _ehrenfest(fx, n))
        )
    for n in range(3, 7):
        entropy = f"hypercube{n}.entropy"
        cases.append(
            GoldenCase(entropy, "hypercube", REDUCTION_TOL, lambda n=n: _hypercube_entropy(fx, n))
        )
    return cases


def _free_group_cases(fx: _Fixtures) -> list[GoldenCase]:
    cases = []
    for num, involutive, radius, odd in FREE_BALLS:
        stem = f"free_ball{num}{'i' if involutive else ''}_r{radius}"
        for full in (False, True):
            cases.append(
                GoldenCase(
                    f"{stem}.verblunsky_{'full' if full else 'lumped'}",
                    "free_group",
                    FREE_GROUP_TOL,
                    lambda num=num, involutive=involutive, radius=radius, odd=odd, full=full: _free_ball(
                        fx, num, involutive, radius, odd, full
                    ),
                )
            )
    return cases


def load_suite(
    name: str, tolerances: ToleranceConfig, sections: Optional[Sequence[str]] = None
) -> list[GoldenCase]:
    """
    Return the cases of a named suite, optionally restricted to some sections.

    ``golden`` and ``paper`` name the same cases.

    Raises
    ------
    ConfigError
        On an unknown suite name.

    Usage example
    -------------
        cases = load_suite("golden", ToleranceConfig(), sections=["hexahedron"])
    """
    if name.strip().lower() not in SUITES:
        raise ConfigError(
            f"Unknown verification suite '{name}'; expected one of {', '.join(SUITES)}."
        )

    fx = _Fixtures(tolerances)
    cases = _hexahedron_cases(fx)
    for solid in SOLIDS:
        cases += _family_cases(fx, solid, "platonic")
    cases.append(
        GoldenCase("tetrahedron.lumped_action", "platonic", EXACT_TOL, lambda: _tetrahedron_lumped_action(fx))
    )
    cases += _family_cases(fx, ALTERNATIVE, "alternative_partition")
    cases += [
        GoldenCase(f"{ALTERNATIVE}.not_lumpable", "alternative_partition", 0.0, _not_lumpable),
        GoldenCase(
            f"{ALTERNATIVE}.straightened", "alternative_partition", REDUCTION_TOL, _straightened_chain
        ),
    ]
    cases += _hypercube_cases(fx)
    cases += _free_group_cases(fx)
    cases += [
        GoldenCase("cmv.structure", "cmv", REDUCTION_TOL, _random_structures),
        GoldenCase("cmv.geronimus_roundtrip", "cmv", ROUNDTRIP_TOL, lambda: _random_roundtrips(fx)),
    ]

    selected = set(sections or ())
    if not selected:
        return cases
    kept = [case for case in cases if case.section in selected or case.name in selected]
    names = {case.name for case in kept}
    return [replace(case, deps=tuple(dep for dep in case.deps if dep in names)) for case in kept]
