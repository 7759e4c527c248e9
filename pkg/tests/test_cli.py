import json

import pytest

from cactuspaths.cli import EXIT_BUDGET, EXIT_INVALID, EXIT_OK, EXIT_VERIFY, main
from cactuspaths.families import complete_graph, pseudo_triangle_chain
from cactuspaths.graphs import to_edge_list_text


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.fixture
def k4_file(tmp_path):
    path = tmp_path / "k4.edges"
    path.write_text(to_edge_list_text(complete_graph(4)))
    return str(path)


def test_pn_family_cycle(capsys):
    code, out, _ = run(capsys, ["pn", "--family", "cycle", "--n", "5"])
    assert code == EXIT_OK and out == "25\n"


def test_pn_family_ptc(capsys):
    code, out, _ = run(capsys, ["pn", "--family", "ptc", "--n", "14", "--k", "5"])
    assert code == EXIT_OK and out == "904\n"


def test_pn_oracle_on_file(capsys, k4_file):
    code, out, _ = run(capsys, ["pn", "--in", k4_file, "--oracle"])
    assert code == EXIT_OK and out == "34\n"


def test_pn_non_cactus_falls_back_to_oracle(capsys, k4_file):
    code, out, _ = run(capsys, ["pn", "--in", k4_file])
    assert code == EXIT_OK and out == "34\n"


def test_pn_check_mode(capsys):
    code, out, _ = run(capsys, ["pn", "--family", "pfg", "--n", "10", "--k", "3", "--check"])
    assert code == EXIT_OK
    assert out == "fast 118\noracle 118\n"


def test_pn_check_overrides_oracle_flag(capsys):
    code, out, _ = run(
        capsys, ["pn", "--family", "cycle", "--n", "6", "--oracle", "--check"]
    )
    assert code == EXIT_OK and out == "fast 36\noracle 36\n"


def test_pn_check_rejects_non_cactus(capsys, k4_file):
    code, _, err = run(capsys, ["pn", "--in", k4_file, "--check"])
    assert code == EXIT_INVALID and "cactus" in err


def test_pn_json_format(capsys):
    code, out, _ = run(capsys, ["pn", "--family", "cycle", "--n", "6", "--format", "json"])
    assert code == EXIT_OK and json.loads(out) == {"pn": "36"}


def test_family_output_parses_back(capsys):
    code, out, _ = run(capsys, ["family", "ptc", "--n", "9", "--k", "3"])
    assert code == EXIT_OK
    from cactuspaths.graphs import parse_edge_list

    assert parse_edge_list(out) == pseudo_triangle_chain(9, 3)


def test_family_missing_parameter(capsys):
    code, _, err = run(capsys, ["family", "ptc", "--n", "9"])
    assert code == EXIT_INVALID and "--k" in err


def test_family_end_triangle(capsys):
    code, out, _ = run(
        capsys,
        [
            "family",
            "end_triangle",
            "--tree-n",
            "4",
            "--tree-edges",
            "0-1,0-2,0-3",
            "--attach",
            "0,0,0",
        ],
    )
    assert code == EXIT_OK
    from cactuspaths.census import canonical_key
    from cactuspaths.families import pseudo_friendship
    from cactuspaths.graphs import parse_edge_list

    assert canonical_key(parse_edge_list(out)) == canonical_key(pseudo_friendship(10, 3))


def test_reconcile_table(capsys):
    code, out, _ = run(
        capsys, ["reconcile", "--n-min", "7", "--n-max", "9", "--k-max", "3"]
    )
    assert code == EXIT_OK
    lines = out.strip().splitlines()
    assert lines[0] == "n,k,oracle,summation,printed,printed_minus_summation"
    assert "7,2,67,67,83,16" in lines
    assert "8,2,88,88,209/2,33/2" in lines
    assert "9,3,159,159,175,16" in lines


def test_reconcile_empty_range(capsys):
    code, out, _ = run(capsys, ["reconcile", "--n-min", "9", "--n-max", "8", "--k-max", "2"])
    assert code == EXIT_OK
    assert out == "n,k,oracle,summation,printed,printed_minus_summation\n"


def test_reconcile_out_file(capsys, tmp_path):
    target = tmp_path / "table.csv"
    code, out, _ = run(
        capsys,
        ["reconcile", "--n-min", "7", "--n-max", "7", "--k-max", "2", "--out", str(target)],
    )
    assert code == EXIT_OK and "wrote 1 rows" in out
    assert target.read_text().count("\n") == 2


def test_transform_cli(capsys, tmp_path):
    path = tmp_path / "g.edges"
    path.write_text("4 4\n0 1\n1 2\n0 2\n2 3\n")
    code, out, _ = run(capsys, ["transform", "--rule", "bridge-slide", "--in", str(path)])
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["pn_before"] == "15" and data["pn_after"] == "16"
    assert data["rule"] == "bridge-slide"
    assert data["before"]["n"] == data["after"]["n"] == 4


def test_transform_cli_precondition_error(capsys, tmp_path):
    path = tmp_path / "c5.edges"
    path.write_text("5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n")
    code, _, err = run(capsys, ["transform", "--rule", "bridge-slide", "--in", str(path)])
    assert code == EXIT_INVALID and "bridge" in err


def test_sweep_csv(capsys):
    code, out, _ = run(capsys, ["sweep", "--n", "5", "--k", "2", "--invariant", "pn"])
    assert code == EXIT_OK
    lines = out.strip().splitlines()
    assert lines[0] == "canonical_key,value,is_argmin,is_argmax,representative_edges"
    assert len(lines) == 2 and ",33,true,true," in lines[1]


def test_verify_cli_pass(capsys):
    code, out, _ = run(capsys, ["verify", "--n", "6", "--k", "2"])
    assert code == EXIT_OK
    assert json.loads(out)["all_passed"] is True


def test_verify_cli_pn_only(capsys):
    code, out, _ = run(capsys, ["verify", "--n", "10", "--k", "3", "--invariant", "pn"])
    assert code == EXIT_OK
    data = json.loads(out)
    min_check = next(c for c in data["checks"] if c["name"] == "pn_min_is_end_triangle_family")
    assert min_check["passed"] is True
    assert "wiener_min_is_pfg" not in {c["name"] for c in data["checks"]}


def test_verify_cli_failure_exit_code(capsys, monkeypatch):
    import cactuspaths.cli as cli
    from cactuspaths.extremal import Check, VerificationReport

    def fake(*args, **kwargs):
        return VerificationReport(6, 2, (Check("pn_max_is_ptc", True, False, "forced"),))

    monkeypatch.setattr(cli, "verify_theorems", fake)
    code, out, _ = run(capsys, ["verify", "--n", "6", "--k", "2"])
    assert code == EXIT_VERIFY
    assert json.loads(out)["all_passed"] is False


def test_indices_cli(capsys, tmp_path):
    path = tmp_path / "pfg.edges"
    from cactuspaths.families import pseudo_friendship

    path.write_text(to_edge_list_text(pseudo_friendship(10, 3)))
    code, out, _ = run(capsys, ["indices", str(path)])
    assert code == EXIT_OK
    assert json.loads(out) == {"pn": "118", "wiener": "78", "subtrees": "1740"}


def test_profile_cli(capsys):
    code, out, _ = run(capsys, ["profile", "--family", "pfg", "--n", "10", "--k", "3"])
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["k"] == 3 and data["intersection_vertices"] == [0]
    assert len(data["cycles"]) == 3 and len(data["bridges"]) == 3
    assert data["graph"]["n"] == 10


def test_profile_cli_rejects_non_cactus(capsys, k4_file):
    code, _, err = run(capsys, ["profile", "--in", k4_file])
    assert code == EXIT_INVALID and "neither an edge nor a cycle" in err


def test_parse_error_exit_code(capsys, tmp_path):
    path = tmp_path / "bad.edges"
    path.write_text("3 1\n0 0\n")
    code, _, err = run(capsys, ["pn", "--in", str(path)])
    assert code == EXIT_INVALID and "self-loop" in err


def test_missing_input_exit_code(capsys):
    code, _, err = run(capsys, ["pn"])
    assert code == EXIT_INVALID and "--family" in err


def test_budget_exit_code(capsys):
    code, _, err = run(
        capsys, ["--budget", "5", "pn", "--family", "cycle", "--n", "12", "--oracle"]
    )
    assert code == EXIT_BUDGET and "extension steps" in err


def test_budget_env_var(capsys, monkeypatch):
    monkeypatch.setenv("CACTUSPATHS_BUDGET", "5")
    code, _, _ = run(capsys, ["pn", "--family", "cycle", "--n", "12", "--oracle"])
    assert code == EXIT_BUDGET


def test_census_guard_exit_code(capsys):
    code, _, err = run(capsys, ["--guard", "3", "sweep", "--n", "8", "--k", "2"])
    assert code == EXIT_BUDGET and "guard" in err


def test_bad_config_rejected(capsys):
    code, _, err = run(capsys, ["--jobs", "0", "pn", "--family", "cycle", "--n", "5"])
    assert code == EXIT_INVALID


def test_outputs_are_reproducible(capsys):
    argv = ["verify", "--n", "7", "--k", "2", "--invariant", "pn"]
    code1, out1, _ = run(capsys, argv)
    code2, out2, _ = run(capsys, argv)
    assert (code1, out1) == (code2, out2)
    argv = ["sweep", "--n", "6", "--k", "2"]
    _, out1, _ = run(capsys, argv)
    _, out2, _ = run(capsys, argv)
    assert out1 == out2
