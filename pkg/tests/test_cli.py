"""End-to-end checks of the command line interface via main(argv)."""

import json

from conftest import GAME_D_IMAGE, GAME_RESULT, GAME_SCRIPT, GAME_START
from subdivalg import cli
from subdivalg.algebra import CountTable


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out.splitlines(), captured.err


def test_reduce_forkless_golden(capsys):
    code, out, err = run(
        capsys, "reduce", "--n", "3", "--mode", "forkless", "x[1,3]*x[1,2]"
    )
    assert code == 0
    assert err == ""
    assert out == ["x[1,2]*x[2,3] - x[1,3]*x[2,3] - b*x[1,3] - a"]


def test_reduce_forkless_kills_generator(capsys):
    generator = "x[1,2]*x[2,3] - x[1,3]*x[1,2] - x[1,3]*x[2,3] - b*x[1,3] - a"
    code, out, _ = run(capsys, "reduce", "--n", "3", "--mode", "forkless", generator)
    assert code == 0
    assert out == ["0"]


def test_reduce_script_reproduces_game(capsys, tmp_path):
    script = tmp_path / "game.txt"
    script.write_text(GAME_SCRIPT, encoding="utf-8")
    code, out, _ = run(
        capsys,
        "reduce", "--n", "4", "--mode", "pathless",
        "--strategy", "script", "--script-file", str(script),
        "--beta", "1", "--alpha", "0",
        GAME_START,
    )
    assert code == 0
    assert out == [GAME_RESULT]


def test_reduce_script_with_trace_and_d_image(capsys, tmp_path):
    script = tmp_path / "game.txt"
    script.write_text(GAME_SCRIPT, encoding="utf-8")
    code, out, _ = run(
        capsys,
        "reduce", "--n", "4", "--mode", "pathless",
        "--strategy", "script", "--script-file", str(script),
        "--beta", "1", "--alpha", "0", "--trace", "--d-image",
        GAME_START,
    )
    assert code == 0
    assert len(out) == 7  # five steps, the result, its image
    assert all(line.startswith("m=") for line in out[:5])
    assert out[5] == GAME_RESULT
    assert out[6] == f"d-image: {GAME_D_IMAGE}"


def test_reduce_random_prints_seed(capsys):
    code, out, _ = run(
        capsys,
        "reduce", "--n", "3", "--mode", "pathless",
        "--strategy", "random", "--seed", "9",
        "x[1,2]*x[2,3]",
    )
    assert code == 0
    assert out[0] == "seed: 9"
    assert len(out) == 2


def test_reduce_default_strategy_is_deterministic(capsys):
    code1, out1, _ = run(
        capsys, "reduce", "--n", "3", "--mode", "pathless", "x[1,2]*x[2,3]"
    )
    code2, out2, _ = run(
        capsys,
        "reduce", "--n", "3", "--mode", "pathless", "--strategy", "first",
        "x[1,2]*x[2,3]",
    )
    assert code1 == code2 == 0
    assert out1 == out2 == ["x[1,2]*x[1,3] + x[1,3]*x[2,3] + b*x[1,3] + a"]


def test_reduce_json_round_trip(capsys, tmp_path):
    script = tmp_path / "game.txt"
    script.write_text(GAME_SCRIPT, encoding="utf-8")
    code, out, _ = run(
        capsys,
        "reduce", "--n", "4", "--mode", "pathless",
        "--strategy", "script", "--script-file", str(script),
        "--beta", "1", "--alpha", "0", "--trace", "--d-image", "--json",
        GAME_START,
    )
    assert code == 0
    assert len(out) == 1
    payload = json.loads(out[0])
    assert payload["command"] == "reduce"
    assert payload["mode"] == "pathless"
    assert payload["n"] == 4
    assert payload["result"] == GAME_RESULT
    assert payload["d_image"] == GAME_D_IMAGE
    assert len(payload["trace"]) == 5
    assert json.dumps(payload, sort_keys=True) == out[0]


def test_reduce_usage_errors(capsys, tmp_path):
    code, _, err = run(
        capsys,
        "reduce", "--n", "3", "--mode", "forkless", "--trace", "x[1,2]",
    )
    assert code == 2
    assert "pathless mode only" in err

    code, _, err = run(
        capsys,
        "reduce", "--n", "3", "--mode", "pathless", "--strategy", "script",
        "x[1,2]",
    )
    assert code == 2
    assert "--script-file" in err

    missing = tmp_path / "absent.txt"
    code, _, err = run(
        capsys,
        "reduce", "--n", "3", "--mode", "pathless", "--strategy", "script",
        "--script-file", str(missing), "x[1,2]",
    )
    assert code == 2
    assert err.startswith("error:")


def test_parse_error_reports_position(capsys):
    code, _, err = run(capsys, "reduce", "--n", "3", "--mode", "forkless", "x[1,2] +")
    assert code == 2
    assert err.startswith("error:")


def test_bad_parameter_value(capsys):
    code, _, err = run(
        capsys, "reduce", "--n", "3", "--mode", "forkless", "--beta", "x", "x[1,2]"
    )
    assert code == 2
    assert "expected 'sym' or a rational" in err


def test_bad_verify_choice(capsys):
    code, _, err = run(capsys, "verify", "--n", "3", "bogus")
    assert code == 2
    assert "invalid choice" in err


def test_missing_n_flag(capsys):
    code, _, err = run(capsys, "count", "forkless", "--max-degree", "2")
    assert code == 2


def test_help_exits_zero(capsys):
    code, out, _ = run(capsys, "--help")
    assert code == 0
    assert any("reduce" in line for line in out)


def test_verify_groebner(capsys):
    code, out, _ = run(capsys, "verify", "--n", "4", "groebner")
    assert code == 0
    assert out[0] == "basis elements: 4"
    assert out[-1] == "verify groebner: PASS"


def test_verify_t_unique(capsys):
    code, out, _ = run(
        capsys,
        "verify", "--n", "3", "t-unique", "--trials", "5", "--strategies", "3",
    )
    assert code == 0
    assert out[0] == "seed: 0"
    assert out[1] == "trials checked: 5 with 3 strategies"
    assert out[-1] == "verify t-unique: PASS"


def test_verify_a_kills_j(capsys):
    code, out, _ = run(capsys, "verify", "--n", "3", "a-kills-j", "--samples", "5")
    assert code == 0
    assert out[-1] == "verify a-kills-j: PASS"


def test_verify_ed_ba(capsys):
    code, out, _ = run(
        capsys,
        "verify", "--n", "3", "ed-ba", "--max-degree", "2", "--w-order", "3",
    )
    assert code == 0
    assert out[0].startswith("pathless monomials checked:")
    assert out[-1] == "verify ed-ba: PASS"


def test_verify_symmetry(capsys):
    code, out, _ = run(capsys, "verify", "--n", "3", "symmetry", "--samples", "2")
    assert code == 0
    assert out[-1] == "verify symmetry: PASS"


def test_verify_e_inverse(capsys):
    code, out, _ = run(capsys, "verify", "--n", "3", "e-inverse", "--samples", "10")
    assert code == 0
    assert out[1] == "samples checked: 10"
    assert out[-1] == "verify e-inverse: PASS"


def test_verify_specialized_parameters(capsys):
    code, out, _ = run(
        capsys,
        "verify", "--n", "3", "groebner", "--beta", "1", "--alpha", "0",
    )
    assert code == 0
    assert out[-1] == "verify groebner: PASS"


def test_verify_failure_exit_code(capsys, monkeypatch):
    monkeypatch.setattr(cli, "buchberger_check", lambda basis: False)
    code, out, _ = run(capsys, "verify", "--n", "3", "groebner")
    assert code == 1
    assert out[-1] == "verify groebner: FAIL"


def test_verify_json_payload(capsys):
    code, out, _ = run(capsys, "verify", "--n", "4", "groebner", "--json")
    assert code == 0
    payload = json.loads(out[0])
    assert payload["ok"] is True
    assert payload["which"] == "groebner"
    assert payload["elements"] == 4
    assert json.dumps(payload, sort_keys=True) == out[0]


def test_count_golden(capsys):
    code, out, _ = run(
        capsys, "count", "--n", "4", "forkless", "--max-degree", "3", "--check-gf"
    )
    assert code == 0
    assert out == ["0,1", "1,6", "2,17", "3,34", "generating function agrees"]


def test_count_small_tables(capsys):
    code, out, _ = run(capsys, "count", "--n", "2", "forkless", "--max-degree", "4")
    assert code == 0
    assert out == ["0,1", "1,1", "2,1", "3,1", "4,1"]

    code, out, _ = run(capsys, "count", "--n", "3", "forkless", "--max-degree", "2")
    assert code == 0
    assert out == ["0,1", "1,3", "2,5"]


def test_count_mismatch_exit_code(capsys, monkeypatch):
    monkeypatch.setattr(
        cli, "gf_coeffs", lambda n, d: CountTable(n, tuple(range(d + 1)))
    )
    code, out, _ = run(
        capsys, "count", "--n", "3", "forkless", "--max-degree", "2", "--check-gf"
    )
    assert code == 1
    assert out[-1].startswith("generating function disagrees")


def test_count_json(capsys):
    code, out, _ = run(
        capsys, "count", "--n", "4", "forkless", "--max-degree", "3",
        "--check-gf", "--json",
    )
    assert code == 0
    payload = json.loads(out[0])
    assert payload["counts"] == [1, 6, 17, 34]
    assert payload["gf_match"] is True


def test_basis_golden(capsys):
    code, out, _ = run(capsys, "basis", "--n", "3", "forkless", "--degree", "2")
    assert code == 0
    assert out == [
        "x[1,2]^2",
        "x[1,2]*x[2,3]",
        "x[1,3]^2",
        "x[1,3]*x[2,3]",
        "x[2,3]^2",
    ]


def test_basis_edge_cases(capsys):
    code, out, _ = run(capsys, "basis", "--n", "2", "forkless", "--degree", "3")
    assert code == 0
    assert out == ["x[1,2]^3"]

    code, out, _ = run(capsys, "basis", "--n", "3", "forkless", "--degree", "0")
    assert code == 0
    assert out == ["1"]


def test_d_image_command(capsys):
    code, out, _ = run(capsys, "d-image", "--n", "4", "x[1,2]*x[2,3]*x[3,4]")
    assert code == 0
    assert out == ["t[1]*t[2]*t[3]"]


def test_d_image_json(capsys):
    code, out, _ = run(capsys, "d-image", "--n", "4", "--json", GAME_RESULT)
    assert code == 0
    payload = json.loads(out[0])
    assert payload["result"] == GAME_D_IMAGE
