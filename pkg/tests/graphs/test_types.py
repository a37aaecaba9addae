import networkx as nx
import pytest

from szl.errors import InvalidPartition, UnknownVertex
from szl.graphs import DirectedGraph, VertexPartition, block_labels


def test_block_labels_are_spreadsheet_style() -> None:
    assert block_labels(3) == ("A", "B", "C")
    labels = block_labels(28)
    assert labels[25:] == ("Z", "AA", "AB")


def test_build_sorts_arcs_by_vertex_order() -> None:
    g = DirectedGraph.build(["b", "a"], [("a", "b"), ("b", "a"), ("b", "b")])

    assert g.arcs == (("b", "a"), ("b", "b"), ("a", "b"))
    assert g.successors["b"] == ("a", "b")
    assert g.is_symmetric()


def test_graph_rejects_unknown_endpoints() -> None:
    with pytest.raises(UnknownVertex):
        DirectedGraph.build(["a"], [("a", "z")])


def test_to_networkx_round_trips_arcs() -> None:
    g = DirectedGraph.build(["a", "b"], [("a", "b")])
    nxg = g.to_networkx()
    assert isinstance(nxg, nx.DiGraph)
    assert list(nxg.edges) == [("a", "b")]


def test_partition_rejects_overlap_and_empty_blocks() -> None:
    with pytest.raises(InvalidPartition) as info:
        VertexPartition(blocks=(("a", "b"), ("b",)))
    assert info.value.witness == {"vertex": "b", "blocks": ["A", "B"]}
    with pytest.raises(InvalidPartition):
        VertexPartition(blocks=(("a",), ()))


def test_partition_validate_for_reports_missing_and_extra() -> None:
    part = VertexPartition(blocks=(("a",), ("b",)))
    with pytest.raises(InvalidPartition, match="'c' is in no block"):
        part.validate_for(["a", "b", "c"])
    with pytest.raises(InvalidPartition, match="not a graph vertex"):
        part.validate_for(["a"])


def test_singletons_are_labelled_by_vertex() -> None:
    part = VertexPartition.singletons(["x", "y"])
    assert part.labels == ("x", "y")
    assert part.block_of["y"] == "y"
    assert part.size("x") == 1
