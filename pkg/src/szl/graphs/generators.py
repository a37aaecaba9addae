"""Generators for the graph families used by the golden examples.

Every generator returns a symmetric :class:`DirectedGraph` (each edge as two arcs)
with vertices in lexicographic label order.
"""

from __future__ import annotations

import itertools
from typing import Any, Callable

from szl.errors import InvalidParams
from szl.graphs.types import Arc, DirectedGraph, Vertex

FAMILIES: tuple[str, ...] = (
    "hypercube",
    "hexahedron",
    "tetrahedron",
    "octahedron",
    "icosahedron",
    "dodecahedron",
    "complete",
    "free_ball",
)

IDENTITY_WORD = "1"


def _is_even_permutation(seq: tuple[int, ...]) -> bool:
    inversions = sum(1 for a, b in itertools.combinations(seq, 2) if a > b)
    return inversions % 2 == 0


def _undirected(vertices: list[Vertex], adjacent: Callable[[Vertex, Vertex], bool]) -> DirectedGraph:
    ordered = sorted(vertices)
    arcs = [(i, j) for i in ordered for j in ordered if i != j and adjacent(i, j)]
    return DirectedGraph.build(ordered, arcs)


def _require_int(name: str, value: Any, minimum: int) -> int:
    if isinstance(value, bool) or not isinstance(value, int) or value < minimum:
        raise InvalidParams(
            f"{name} must be an integer >= {minimum}, got {value!r}.",
            witness={name: value},
        )
    return value


def hypercube(n: int) -> DirectedGraph:
    """Binary words of length ``n``; arcs join words at Hamming distance 1."""
    n = _require_int("n", n, 1)
    words = ["".join(bits) for bits in itertools.product("01", repeat=n)]
    flip = {"0": "1", "1": "0"}
    arcs = [(w, w[:k] + flip[w[k]] + w[k + 1 :]) for w in words for k in range(n)]
    return DirectedGraph.build(words, arcs)


def complete(n: int) -> DirectedGraph:
    """Complete graph on vertices ``"0" .. str(n-1)``."""
    n = _require_int("n", n, 1)
    return _undirected([str(k) for k in range(n)], lambda a, b: True)


def tetrahedron() -> DirectedGraph:
    return complete(4)


def octahedron() -> DirectedGraph:
    """Vertices ±1, ±2, ±3; every pair except antipodes is adjacent."""
    labels = [str(sign * k) for k in (1, 2, 3) for sign in (1, -1)]
    return _undirected(labels, lambda a, b: int(a) != -int(b))


def icosahedron() -> DirectedGraph:
    """
    Ordered pairs ``ij`` of distinct elements of {1..4}.

    ``ij`` and ``kl`` are adjacent if ``i == k`` or ``j == l``, or if all four entries are
    distinct and ``(i, j, k, l)`` is an even permutation.
    """

    def adjacent(a: Vertex, b: Vertex) -> bool:
        i, j, k, l = (int(c) for c in a + b)
        if i == k or j == l:
            return True
        return len({i, j, k, l}) == 4 and _is_even_permutation((i, j, k, l))

    pairs = [f"{i}{j}" for i, j in itertools.permutations(range(1, 5), 2)]
    return _undirected(pairs, adjacent)


def dodecahedron() -> DirectedGraph:
    """
    Ordered pairs ``ij`` of distinct elements of {1..5}.

    ``ij`` and ``kl`` are adjacent if the four entries are distinct and ``(i, j, k, l, m)``,
    with ``m`` the missing element, is an even permutation.
    """

    def adjacent(a: Vertex, b: Vertex) -> bool:
        quad = tuple(int(c) for c in a + b)
        if len(set(quad)) != 4:
            return False
        (m,) = set(range(1, 6)) - set(quad)
        return _is_even_permutation(quad + (m,))

    pairs = [f"{i}{j}" for i, j in itertools.permutations(range(1, 6), 2)]
    return _undirected(pairs, adjacent)


def free_ball(num_generators: int, involutive: bool, radius: int) -> DirectedGraph:
    """
    Ball of the Cayley graph of a free group (or free product of Z2's).

    Words use generators ``a, b, c, ...``. In non-involutive mode their inverses are the
    uppercase letters and a letter may not be followed by its inverse; in involutive
    mode every generator is its own inverse, so a letter may not repeat. The identity is
    labelled ``"1"``. Arcs join ``w`` to the reduced product ``w x`` for every letter ``x``
    whenever the product stays in the ball, so boundary words keep only their inward arc.

    Usage example
    -------------
        ball = free_ball(2, involutive=False, radius=3)
    """
    num_generators = _require_int("num_generators", num_generators, 1)
    radius = _require_int("radius", radius, 1)
    if num_generators > 26:
        raise InvalidParams(
            "At most 26 generators are supported.",
            witness={"num_generators": num_generators},
        )

    letters = [chr(ord("a") + k) for k in range(num_generators)]
    alphabet = letters if involutive else letters + [x.upper() for x in letters]

    def inverse(x: str) -> str:
        return x if involutive else x.swapcase()

    def multiply(word: str, x: str) -> str:
        if word and word[-1] == inverse(x):
            return word[:-1]
        return word + x

    words = [""]
    sphere = [""]
    for _ in range(radius):
        sphere = [w + x for w in sphere for x in alphabet if not (w and w[-1] == inverse(x))]
        words.extend(sphere)

    def label(word: str) -> Vertex:
        return word if word else IDENTITY_WORD

    arcs: list[Arc] = []
    for w in words:
        for x in alphabet:
            target = multiply(w, x)
            if len(target) <= radius:
                arcs.append((label(w), label(target)))
    return DirectedGraph.build(sorted(label(w) for w in words), arcs)


def generate(family: str, **params: Any) -> DirectedGraph:
    """
    Build a graph of a named family.

    Parameters
    ----------
    family
        One of :data:`FAMILIES`.
    params
        ``n`` for hypercube/complete; ``num_generators``, ``involutive`` and ``radius``
        for free_ball. Other families take no parameters.

    Usage example
    -------------
        generate("free_ball", num_generators=3, involutive=True, radius=2)
    """
    name = family.strip().lower()
    if name == "hypercube":
        return hypercube(params.get("n", 3))
    if name == "hexahedron":
        return hypercube(3)
    if name == "complete":
        return complete(params.get("n", 4))
    if name == "tetrahedron":
        return tetrahedron()
    if name == "octahedron":
        return octahedron()
    if name == "icosahedron":
        return icosahedron()
    if name == "dodecahedron":
        return dodecahedron()
    if name == "free_ball":
        return free_ball(
            params.get("num_generators", 2),
            bool(params.get("involutive", False)),
            params.get("radius", 2),
        )
    raise InvalidParams(
        f"Unknown graph family {family!r}.",
        witness={"family": family, "known": list(FAMILIES)},
    )


_CANONICAL_ROOTS = {
    "tetrahedron": "0",
    "complete": "0",
    "octahedron": "-1",
    "icosahedron": "12",
    "dodecahedron": "31",
    "free_ball": IDENTITY_WORD,
}


def canonical_root(family: str, g: DirectedGraph) -> Vertex:
    """Root vertex of the distance partition used for ``family`` in the golden examples."""
    name = family.strip().lower()
    if name in ("hypercube", "hexahedron"):
        return g.vertices[0]
    try:
        return _CANONICAL_ROOTS[name]
    except KeyError as exc:
        raise InvalidParams(f"Unknown graph family {family!r}.", witness={"family": family}) from exc
