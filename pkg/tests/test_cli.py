import json

import pytest

from cartprod import matrix_to_json
from cartprod.products import cartesian, identity

import cartprod_cli
from conftest import m

C4_TEXT = "p 4\ne 1 2\ne 2 3\ne 3 4\ne 4 1\n"
K2_TEXT = "p 2\ne 1 2\n"
P3_TEXT = "p 3\ne 1 2\ne 2 3\n"


@pytest.fixture
def write(tmp_path):
    def _write(name, content):
        path = tmp_path / name
        path.write_text(content if isinstance(content, str) else json.dumps(content))
        return str(path)
    return _write


def run(capsys, *argv):
    code = cartprod_cli.main(list(argv))
    captured = capsys.readouterr()
    payload = json.loads(captured.out) if captured.out else None
    return code, payload, captured.err


def test_invariants_of_four_cycle(capsys, write):
    code, payload, _ = run(capsys, "invariants", write("c4.txt", C4_TEXT))
    assert code == 0
    assert payload["status"] == "ok"
    assert payload["wiener"] == 8
    assert payload["transmissions"] == [4, 4, 4, 4]
    assert payload["transmission_regular"] is True
    assert payload["rho"] == pytest.approx(4.0)
    assert payload["inertia"] == [1, 1, 2]


def test_invariants_of_k2(capsys, write):
    code, payload, _ = run(capsys, "invariants", write("k2.txt", K2_TEXT))
    assert code == 0
    assert payload["wiener"] == 1
    assert payload["rho"] == pytest.approx(1.0)
    assert payload["inertia"] == [1, 0, 1]


@pytest.mark.parametrize("text", ["p 2\ne 1 5\n", "p 3\ne 1 2\n"])
def test_invariants_input_errors_exit_2(capsys, write, text):
    code, payload, err = run(capsys, "invariants", write("bad.txt", text))
    assert code == 2
    assert payload is None
    assert "Error" in err


def test_missing_file_exits_2(capsys, tmp_path):
    code, payload, _ = run(capsys, "invariants", str(tmp_path / "nope.txt"))
    assert code == 2 and payload is None


def test_product_of_two_edges_is_four_cycle(capsys, write):
    k2 = write("k2.txt", K2_TEXT)
    code, payload, _ = run(capsys, "product", k2, k2)
    assert code == 0
    assert payload["vertices"] == 4 and payload["edges"] == 4
    assert payload["cartesian_identity_holds"] is True
    assert payload["graph"].startswith("p 4\n")
    assert payload["distance_matrix"]["rows"] == 4


def test_product_emit_options(capsys, write):
    k2, p3 = write("k2.txt", K2_TEXT), write("p3.txt", P3_TEXT)
    _, payload, _ = run(capsys, "product", k2, p3, "--emit", "graph")
    assert payload["edges"] == 7
    assert "distance_matrix" not in payload
    _, payload, _ = run(capsys, "product", k2, p3, "--emit", "dist")
    assert "graph" not in payload
    assert payload["distance_matrix"]["rows"] == 6


def test_product_of_single_vertices(capsys, write):
    k1 = write("k1.txt", "p 1\n")
    code, payload, _ = run(capsys, "product", k1, k1)
    assert code == 0
    assert payload["vertices"] == 1
    assert payload["cartesian_identity_holds"] is True


def test_factorize(capsys, write):
    M = cartesian(m([[1, 2], [3, 4]]), m([[5, 6], [7, 8]]))
    code, payload, _ = run(capsys, "factorize", write("m.json", matrix_to_json(M)), "--split", "2,2")
    assert code == 0
    assert payload["A"]["entries"] == [[6, 0], [7, 0], [8, 0], [9, 0]]
    assert payload["B"]["entries"] == [[0, 0], [1, 0], [2, 0], [3, 0]]


def test_factorize_identity_is_not_a_product(capsys, write):
    code, payload, _ = run(capsys, "factorize", write("i.json", matrix_to_json(identity(4))), "--split", "2,2")
    assert code == 1
    assert payload["status"] == "not_a_cartesian_product"


def test_factorize_dimension_mismatch(capsys, write):
    code, payload, _ = run(capsys, "factorize", write("i6.json", matrix_to_json(identity(6))), "--split", "2,2")
    assert code == 2 and payload is None


def test_spectrum_of_graph_and_matrix(capsys, write):
    code, payload, _ = run(capsys, "spectrum", write("c4.txt", C4_TEXT))
    assert code == 0
    assert payload["source"] == "graph"
    assert payload["eigenvalues"] == pytest.approx([4.0, 0.0, -2.0, -2.0], abs=1e-9)
    code, payload, _ = run(capsys, "spectrum", write("s.json", matrix_to_json(m([[0, 1], [1, 0]]))), "--tol", "1e-12")
    assert code == 0
    assert payload["source"] == "matrix"
    assert payload["inertia"] == [1, 0, 1]


def test_spectrum_rejects_non_symmetric(capsys, write):
    code, payload, _ = run(capsys, "spectrum", write("n.json", matrix_to_json(m([[0, 1], [2, 0]]))))
    assert code == 2 and payload is None


def test_spectrum_rejects_non_finite_entries(capsys, write):
    doc = '{"rows": 2, "cols": 2, "mode": "approx", "entries": [NaN, 1, 1, 0]}'
    code, payload, err = run(capsys, "spectrum", write("nan.json", doc))
    assert code == 2 and payload is None
    assert "finite" in err


@pytest.mark.parametrize("command", ["invariants", "spectrum"])
def test_undecodable_input_exits_2(capsys, tmp_path, command):
    path = tmp_path / "bad.txt"
    path.write_bytes(b"p 2\ne 1 \xff2\n")
    code, payload, err = run(capsys, command, str(path))
    assert code == 2 and payload is None
    assert "UTF-8" in err


def test_verify_single_suite(capsys):
    code, payload, _ = run(capsys, "--quiet", "verify", "--suite", "trace_cartesian", "--trials", "50", "--seed", "42")
    assert code == 0
    assert payload["status"] == "ok"
    assert payload["failures"] == 0
    [report] = payload["reports"]
    assert report == {"suite": "trace_cartesian", "trials": 50, "failures": 0, "seed": 42, "counterexamples": []}


def test_verify_all_is_deterministic(capsys):
    argv = ["-q", "verify", "--suite", "all", "--trials", "3", "--seed", "7", "--max-order", "2"]
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first[0] == 0
    assert first[1] == second[1]
    assert len(first[1]["reports"]) == len(cartprod_cli.SUITE_REGISTRY)


def test_verify_unknown_suite_exits_2(capsys):
    code, payload, err = run(capsys, "verify", "--suite", "bogus", "--trials", "10", "--seed", "1", "--max-order", "2")
    assert code == 2
    assert payload is None
    assert "bogus" in err


@pytest.mark.parametrize("argv", [
    ["verify", "--trials", "0"],
    ["verify", "--max-order", "5"],
    ["verify", "--seed", "-1"],
    ["verify", "--seed", str(2 ** 64)],
    ["factorize", "m.json", "--split", "2"],
    ["spectrum", "x", "--tol", "0"],
    ["--capacity", "0", "verify"],
])
def test_usage_errors_exit_2(capsys, argv):
    with pytest.raises(SystemExit) as excinfo:
        cartprod_cli.main(argv)
    assert excinfo.value.code == 2
    assert capsys.readouterr().out == ""


def test_capacity_flag_limits_products(capsys, write):
    k2 = write("k2.txt", K2_TEXT)
    code, payload, err = run(capsys, "--capacity", "8", "product", k2, k2)
    assert code == 2 and payload is None
    assert "capacity" in err


def test_quiet_still_shows_errors(capsys, write):
    code, _, err = run(capsys, "-q", "invariants", write("bad.txt", "p 2\ne 1 5\n"))
    assert code == 2
    assert "Error" in err


def test_status_lines_go_to_stderr(capsys, write):
    code, payload, err = run(capsys, "product", write("k2.txt", K2_TEXT), write("k2b.txt", K2_TEXT))
    assert code == 0 and payload is not None
    assert "D(G1 x G2)" in err


def test_command_result_status_must_match_exit_code():
    with pytest.raises(ValueError):
        cartprod_cli.CommandResult(0, {"status": "verification_failed"})
    with pytest.raises(ValueError):
        cartprod_cli.CommandResult(1, {"status": "ok"})
