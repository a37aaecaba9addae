import pytest

from szl.errors import InvalidParams
from szl.graphs import FAMILIES, canonical_root, generate


@pytest.mark.parametrize(
    ("family", "vertices", "degree"),
    [
        ("tetrahedron", 4, 3),
        ("octahedron", 6, 4),
        ("hexahedron", 8, 3),
        ("icosahedron", 12, 5),
        ("dodecahedron", 20, 3),
    ],
)
def test_platonic_solids_are_regular_and_symmetric(family: str, vertices: int, degree: int) -> None:
    g = generate(family)

    assert len(g.vertices) == vertices
    assert all(g.out_degree(v) == degree for v in g.vertices)
    assert g.is_symmetric()
    assert not any(i == j for i, j in g.arcs)


def test_hypercube_words_and_hamming_arcs() -> None:
    g = generate("hypercube", n=4)

    assert len(g.vertices) == 16
    assert g.vertices[0] == "0000"
    assert g.has_arc("0000", "0100")
    assert not g.has_arc("0000", "0110")


def test_octahedron_skips_antipodes() -> None:
    g = generate("octahedron")
    assert not g.has_arc("1", "-1")
    assert g.has_arc("1", "2")


def test_free_ball_counts_and_inward_boundary() -> None:
    ball = generate("free_ball", num_generators=2, involutive=False, radius=3)

    # 1 + 4 + 12 + 36 reduced words
    assert len(ball.vertices) == 53
    assert ball.vertices[0] == "1"
    assert ball.out_degree("1") == 4
    assert ball.out_degree("ab") == 4
    assert ball.out_degree("abA") == 1
    assert ball.has_arc("abA", "ab")


def test_involutive_free_ball_letters_do_not_repeat() -> None:
    ball = generate("free_ball", num_generators=3, involutive=True, radius=2)

    # 1 + 3 + 6
    assert len(ball.vertices) == 10
    assert "aa" not in ball.vertices
    assert ball.has_arc("ab", "a")


def test_generate_rejects_unknown_family_and_bad_params() -> None:
    with pytest.raises(InvalidParams, match="Unknown graph family"):
        generate("torus")
    with pytest.raises(InvalidParams):
        generate("hypercube", n=0)
    with pytest.raises(InvalidParams):
        generate("free_ball", num_generators=2, radius=True)


def test_canonical_roots_are_vertices() -> None:
    for family in FAMILIES:
        g = generate(family)
        assert canonical_root(family, g) in g.index
