import json

import pytest

from domset.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_gen_cycle_bytes(capsys):
    code, out, _ = run(capsys, "gen", "cycle", "4")
    assert code == 0
    assert out == "4 4\n0 1\n0 3\n1 2\n2 3\n"


def test_gen_complete_bytes(capsys):
    code, out, _ = run(capsys, "gen", "complete", "3")
    assert code == 0
    assert out == "3 3\n0 1\n0 2\n1 2\n"


def test_gen_deterministic_files(capsys, tmp_path):
    a, b = tmp_path / "a.txt", tmp_path / "b.txt"
    assert run(capsys, "gen", "random_regular", "10", "3", "--seed", "7", "--out", str(a))[0] == 0
    assert run(capsys, "gen", "random_regular", "10", "3", "--seed", "7", "--out", str(b))[0] == 0
    assert a.read_bytes() == b.read_bytes()


def test_gen_infeasible_params(capsys):
    code, _, err = run(capsys, "gen", "random_regular", "4", "5")
    assert code == 2
    assert "error" in err


@pytest.fixture
def p4_file(capsys, tmp_path):
    path = tmp_path / "p4.txt"
    assert run(capsys, "gen", "path", "4", "--out", str(path))[0] == 0
    return str(path)


def test_verify_dominating(capsys, p4_file):
    code, out, _ = run(capsys, "verify", "--graph", p4_file, "--set", "0,3", "--triple", "0,1,1")
    assert code == 0
    assert json.loads(out)["dominating"] is True


def test_verify_violation(capsys, p4_file):
    code, out, _ = run(capsys, "verify", "--graph", p4_file, "--set", "1", "--triple", "0,1,1")
    assert code == 1
    payload = json.loads(out)
    assert payload["dominating"] is False
    assert any(v["vertex"] == 3 for v in payload["violations"])


def test_verify_empty_set(capsys, tmp_path):
    c4 = tmp_path / "c4.txt"
    run(capsys, "gen", "cycle", "4", "--out", str(c4))
    code, out, _ = run(capsys, "verify", "--graph", str(c4), "--set", "", "--triple", "0,0,1")
    assert code == 0


def test_bound_json(capsys, tmp_path):
    k6 = tmp_path / "k6.txt"
    run(capsys, "gen", "complete", "6", "--out", str(k6))
    code, out, _ = run(capsys, "bound", "--graph", str(k6), "--triple", "1,2,1")
    assert code == 0
    payload = json.loads(out)
    assert payload["lb_general"] == 2
    assert payload["ub_construct"] == 2


def test_construct_json(capsys, tmp_path):
    k6 = tmp_path / "k6.txt"
    run(capsys, "gen", "complete", "6", "--out", str(k6))
    code, out, _ = run(capsys, "construct", "--graph", str(k6), "--triple", "1,2,1")
    assert code == 0
    lines = out.strip().split("\n")
    payload = json.loads(lines[-1])
    assert payload == {"part": 1, "size": 2, "valid": True}
    assert len(lines[0].split()) == 2  # the witness vertices


def test_construct_inapplicable(capsys, p4_file):
    code, out, _ = run(capsys, "construct", "--graph", p4_file, "--triple", "1,2,1")
    assert code == 1
    assert json.loads(out.strip().split("\n")[-1])["valid"] is False


def test_solve_infeasible(capsys, tmp_path):
    star = tmp_path / "star.txt"
    run(capsys, "gen", "star", "4", "--out", str(star))
    code, out, _ = run(capsys, "solve", "--graph", str(star), "--triple", "2,1,0")
    assert code == 0
    payload = json.loads(out)
    assert payload["status"] == "infeasible"
    assert payload["gamma"] is None


def test_solve_result_schema(capsys, p4_file):
    code, out, _ = run(capsys, "solve", "--graph", p4_file, "--triple", "0,1,1")
    assert code == 0
    payload = json.loads(out)
    assert set(payload) == {"status", "gamma", "witness", "nodes", "elapsed_ms"}
    assert payload["gamma"] == 2
    assert sorted(payload["witness"]) == payload["witness"]


def test_solve_budget_exit_code(capsys, tmp_path):
    big = tmp_path / "big.txt"
    run(capsys, "gen", "random_gnp", "18", "0.5", "--seed", "4", "--out", str(big))
    code, out, _ = run(capsys, "solve", "--graph", str(big), "--triple", "1,1,1",
                       "--budget-nodes", "3")
    assert code == 3
    assert json.loads(out)["status"] == "budget_exceeded"


def test_usage_error_exit_code(capsys, p4_file):
    code, _, err = run(capsys, "verify", "--graph", p4_file, "--set", "0", "--triple", "nope")
    assert code == 2


def test_sweep_cubic_rows(capsys, tmp_path):
    out_csv = tmp_path / "sweep.csv"
    code, _, _ = run(capsys, "sweep", "--family", "random_regular", "--degree", "3",
                     "--n", "4", "--n", "6", "--n", "8",
                     "--seed", "1", "--seed", "2",
                     "--triple", "0,1,1", "--out", str(out_csv))
    assert code == 0
    lines = out_csv.read_text().strip().split("\n")
    header = lines[0].split(",")
    idx = {name: i for i, name in enumerate(header)}
    assert lines[1:]
    for line in lines[1:]:
        cells = line.split(",")
        n = int(cells[idx["n"]])
        assert int(cells[idx["lb_general"]]) == -(-n // 4)
        assert int(cells[idx["exact_gamma"]]) >= int(cells[idx["lb_general"]])
        assert cells[idx["dominance_ok"]] == "true"


def test_sweep_byte_stable(capsys, tmp_path):
    args = ("sweep", "--family", "random_tree", "--n", "5", "--n", "7",
            "--seed", "3", "--triple", "1,1,1", "--triple", "0,1,1")
    a = tmp_path / "a.csv"
    b = tmp_path / "b.csv"
    assert run(capsys, *args, "--out", str(a))[0] == 0
    assert run(capsys, *args, "--out", str(b))[0] == 0
    assert a.read_bytes() == b.read_bytes()


def test_sweep_matches_library(capsys, tmp_path):
    from domset import bound_report, generate, solve_exact
    from domset.params import ParamTriple

    out_csv = tmp_path / "s.csv"
    code, _, _ = run(capsys, "sweep", "--family", "complete", "--n", "6",
                     "--triple", "1,2,1", "--out", str(out_csv))
    assert code == 0
    header, row = out_csv.read_text().strip().split("\n")
    idx = {name: i for i, name in enumerate(header.split(","))}
    cells = row.split(",")
    g = generate("complete", [6])
    p = ParamTriple(1, 2, 1)
    assert int(cells[idx["exact_gamma"]]) == solve_exact(g, p).gamma
    assert int(cells[idx["lb_general"]]) == bound_report(g, p).lb_general
    assert cells[idx["ub_tight"]] == "true"
