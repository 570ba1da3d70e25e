import json

import pytest

from cartprod import (
    Matrix,
    ParseError,
    Scalar,
    cycle_graph,
    format_edge_list,
    load_graph,
    load_matrix,
    matrix_from_json,
    matrix_to_json,
    parse_edge_list,
    parse_matrix_text,
)
from cartprod.scalar import Mode

from conftest import m


def test_matrix_json_layout():
    M = Matrix(1, 2, (Scalar.exact(1, -2), Scalar.exact(3)))
    assert matrix_to_json(M) == {"rows": 1, "cols": 2, "mode": "exact", "entries": [[1, -2], [3, 0]]}


def test_matrix_json_accepts_short_entries():
    M = matrix_from_json({"rows": 2, "cols": 2, "entries": [1, [2], [3, 4], 5]})
    assert M.mode is Mode.EXACT
    assert M.to_rows() == [[1, 2], [Scalar.exact(3, 4), 5]]


def test_matrix_json_exact_accepts_integral_floats():
    M = matrix_from_json({"rows": 1, "cols": 1, "mode": "exact", "entries": [[2.0, 0.0]]})
    assert M[0, 0] == 2


def test_approx_matrix_from_json():
    M = parse_matrix_text('{"rows": 1, "cols": 2, "mode": "approx", "entries": [[0.5, 0], [1, -1]]}')
    assert M.mode is Mode.APPROX
    assert M[0, 1] == complex(1, -1)


@pytest.mark.parametrize("doc", [
    "[1, 2]",
    '{"rows": 1, "cols": 1}',
    '{"rows": 0, "cols": 1, "entries": []}',
    '{"rows": 1, "cols": 2, "entries": [1]}',
    '{"rows": 1, "cols": 1, "mode": "fuzzy", "entries": [1]}',
    '{"rows": 1, "cols": 1, "entries": [1.5]}',
    '{"rows": 1, "cols": 1, "entries": ["1"]}',
    '{"rows": 1, "cols": 1, "entries": [[1, 2, 3]]}',
    '{"rows": 1, "cols": 1, "entries": [true]}',
    '{"rows": 1, "cols": 1, "entries": [1e30]}',
    '{"rows": 1, "cols": 1, "mode": "approx", "entries": [NaN]}',
    '{"rows": 1, "cols": 1, "mode": "approx", "entries": [[0, Infinity]]}',
    '{"rows": 1, "cols": 1, "entries": [-Infinity]}',
    '{"rows": 1, "cols": 1, "entries": [1' + "0" * 400 + ']}',
    '{"rows": 1, "cols": 1, "mode": "approx", "entries": [1' + "0" * 400 + ']}',
    "{not json",
])
def test_malformed_matrix_documents(doc):
    with pytest.raises(ParseError):
        parse_matrix_text(doc)


def test_load_matrix(tmp_path):
    path = tmp_path / "m.json"
    path.write_text(json.dumps(matrix_to_json(m([[1, 2], [3, 4]]))))
    assert load_matrix(path) == m([[1, 2], [3, 4]])


@pytest.mark.parametrize("loader", [load_graph, load_matrix])
def test_undecodable_file_is_a_parse_error(tmp_path, loader):
    path = tmp_path / "bad.txt"
    path.write_bytes(b"p 2\ne 1 \xff2\n")
    with pytest.raises(ParseError, match="UTF-8"):
        loader(path)


def test_parse_edge_list():
    G = parse_edge_list("c a path\np 3\ne 1 2\ne 2 3\n")
    assert G.vertex_count == 3
    assert G.sorted_edges() == [(0, 1), (1, 2)]


def test_parse_dimacs_header():
    G = parse_edge_list("p edge 4 2\ne 1 2\ne 3 4\n")
    assert G.vertex_count == 4
    assert len(G.edges) == 2


def test_single_vertex_graph():
    G = parse_edge_list("p 1\n")
    assert G.vertex_count == 1
    assert not G.edges


@pytest.mark.parametrize("text,where", [
    ("e 1 2\n", "line 1"),
    ("p 2\ne 1 3\n", "line 2"),
    ("p 2\ne 1\n", "line 2"),
    ("p 2\ne a b\n", "line 2"),
    ("p 2\np 2\n", "line 2"),
    ("p 0\n", "line 1"),
    ("p 2\nx 1 2\n", "line 2"),
])
def test_malformed_edge_lists_report_line(text, where):
    with pytest.raises(ParseError, match=where):
        parse_edge_list(text)


@pytest.mark.parametrize("text", ["", "c nothing\n", "p 2\ne 1 1\n", "p 2\ne 1 2\ne 2 1\n"])
def test_invalid_graphs(text):
    with pytest.raises(ParseError):
        parse_edge_list(text)


def test_edge_list_round_trip(tmp_path):
    C4 = cycle_graph(4)
    text = format_edge_list(C4)
    assert text.splitlines()[0] == "p 4"
    path = tmp_path / "c4.txt"
    path.write_text(text)
    assert load_graph(path).sorted_edges() == C4.sorted_edges()
