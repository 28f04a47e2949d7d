import pytest
from hypothesis import given

from mdsenum import Graph, InputError
from mdsenum.io import (
    CnfFormula,
    format_solution,
    label_key,
    parse_dimacs_cnf,
    parse_graph,
    parse_vertex_list,
    serialize_graph,
)

from helpers import graphs, path


def test_parse_edges_and_dimacs():
    assert parse_graph("0 1\n1 2") == path(3)
    d = parse_graph("p edge 3 2\ne 1 2\ne 2 3", "dimacs")
    assert d == path(3)
    assert d.labels == ("1", "2", "3")


def test_parse_edges_labels_and_comments():
    g = parse_graph("# a comment\nb a\n\na c\nlonely\nb a\n")
    assert g.labels == ("b", "a", "c", "lonely")
    assert list(g.edges()) == [(0, 1), (1, 2)]


@pytest.mark.parametrize(
    "text, fmt",
    [
        ("0 0", "edges"),
        ("0 1 2", "edges"),
        ("p edge 2 1\ne 1 3", "dimacs"),
        ("p edge 2 1\ne 1 1", "dimacs"),
        ("e 1 2", "dimacs"),
        ("p edge x 1", "dimacs"),
        ("q 1 2", "dimacs"),
        ("", "dimacs"),
        ("0 1", "gml"),
    ],
)
def test_parse_errors(text, fmt):
    with pytest.raises(InputError):
        parse_graph(text, fmt)


@given(graphs(max_n=8))
def test_round_trip_edges(g):
    text = serialize_graph(g)
    again = parse_graph(text)
    assert again == g
    assert serialize_graph(again) == text


@given(graphs(max_n=8))
def test_round_trip_dimacs(g):
    text = serialize_graph(g, "dimacs")
    assert parse_graph(text, "dimacs") == g
    assert serialize_graph(parse_graph(text, "dimacs"), "dimacs") == text


def test_vertex_list():
    g = parse_graph("a b\nb c\n")
    assert parse_vertex_list("a\n# skip\nc\n", g) == 0b101
    with pytest.raises(InputError):
        parse_vertex_list("d\n", g)


def test_solution_format_sorts_numerically():
    g = Graph(12, labels=[str(v) for v in range(12)])
    assert format_solution(g, {10, 2, 1}) == "1 2 10"
    assert sorted(["b", "10", "a", "9"], key=label_key) == ["9", "10", "a", "b"]


def test_cnf_parsing():
    f = parse_dimacs_cnf("c demo\np cnf 3 2\n1 -2 0\n2 3\n-1 0\n")
    assert f == CnfFormula.of(3, [[1, -2], [2, 3, -1]])
    for bad in ("1 2 0", "p cnf 1 1\n2 0", "p cnf 1 1\nx 0", "p sat 1 1"):
        with pytest.raises(InputError):
            parse_dimacs_cnf(bad)
    with pytest.raises(InputError):
        CnfFormula.of(1, [[]])
