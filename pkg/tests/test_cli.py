import json

import numpy as np
import pytest

from fuzzysoft import load_fss, make_fuzzy_soft_set, save_fss
from fuzzysoft.cli import run_cli


@pytest.fixture
def files(tmp_path):
    a = make_fuzzy_soft_set(["u1", "u2"], {"a1": (0.3, 0.7)})
    b = make_fuzzy_soft_set(["u1", "u2"], {"b1": (0.5, 0.2)})
    w = make_fuzzy_soft_set(["w1"], {"c1": (0.5,)})
    paths = {}
    for name, value in (("a", a), ("b", b), ("w", w)):
        paths[name] = tmp_path / f"{name}.fss"
        save_fss(value, paths[name])
    return tmp_path, paths


def test_check_pass_exit_zero(capsys):
    code = run_cli(["check", "--kind", "tnorm", "--expr", "x*y",
                    "--grid", "16", "--samples", "100"])
    out = capsys.readouterr().out
    assert code == 0
    assert "verdict: PASS" in out
    assert out.count("pass (") == 6


def test_check_failure_exit_one(capsys):
    code = run_cli(["check", "--kind", "tnorm", "--expr", "x+y-x*y",
                    "--grid", "16", "--samples", "100"])
    out = capsys.readouterr().out
    assert code == 1
    assert "verdict: FAIL" in out
    assert "FAIL at (1, 0)" in out


def test_check_parse_error_exit_two(capsys):
    code = run_cli(["check", "--kind", "tnorm", "--expr", "x+*y"])
    assert code == 2


def test_check_unknown_builtin_exit_two():
    assert run_cli(["check", "--kind", "tnorm", "--builtin", "einstein"]) == 2


def test_check_usage_error_exit_two():
    assert run_cli(["check", "--kind", "tnorm"]) == 2
    assert run_cli(["check", "--kind", "nonsense", "--expr", "x*y"]) == 2
    assert run_cli([]) == 2


def test_check_negation_builtin(capsys):
    code = run_cli(["check", "--kind", "negation", "--builtin", "sugeno(1)",
                    "--grid", "16", "--samples", "100"])
    assert code == 0


def test_check_json_format_is_deterministic_and_complete(capsys):
    argv = ["check", "--kind", "tnorm", "--builtin", "probsum",
            "--grid", "16", "--samples", "50", "--seed", "9", "--format", "json"]
    assert run_cli(argv) == 1
    first = capsys.readouterr().out
    assert run_cli(argv) == 1
    second = capsys.readouterr().out
    assert first == second
    doc = json.loads(first)
    assert doc["passed"] is False
    failed = [c for c in doc["checks"] if not c["passed"]]
    assert failed and all(c["witness"] is not None for c in failed)
    # witnesses re-evaluate exactly from the JSON floats
    for check in failed:
        if check["label"] == "i":
            x, y = check["witness"]["args"]
            assert x + y - x * y == check["witness"]["got"]


def test_classify_text_output(capsys):
    code = run_cli(["classify", "--builtin", "lukasiewicz", "--grid", "10"])
    out = capsys.readouterr().out
    assert code == 0
    # values print with 17 significant digits so they re-evaluate exactly
    assert "0.80000000000000004 (witness 0.10000000000000001)" in out
    assert float("0.80000000000000004") == 0.8


def test_classify_expect_none_hits_exit_one(capsys):
    assert run_cli(["classify", "--builtin", "lukasiewicz", "--grid", "10",
                    "--expect-none", "zero-divisors"]) == 1
    assert run_cli(["classify", "--builtin", "product", "--grid", "10",
                    "--expect-none", "zero-divisors",
                    "--expect-none", "nonzero-nilpotents"]) == 0


def test_classify_json(capsys):
    assert run_cli(["classify", "--builtin", "minimum", "--grid", "4",
                    "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["idempotents"] == [0.0, 0.25, 0.5, 0.75, 1.0]
    assert doc["zero_divisors"] == []


def test_equilibrium_builtin(capsys):
    code = run_cli(["equilibrium", "--builtin", "standard-negation",
                    "--params", "a1,a2"])
    out = capsys.readouterr().out
    assert code == 0
    assert "equilibria found: 2 of 2" in out


def test_equilibrium_family_with_expression(capsys):
    code = run_cli(["equilibrium", "--family", "a1=1-x,a2=sugeno(1)",
                    "--params", "a1,a2"])
    out = capsys.readouterr().out
    assert code == 0
    assert "0.41421356" in out


def test_equilibrium_family_with_parenthesized_commas(capsys):
    code = run_cli(["equilibrium", "--family", "a1=min(1,1-x),a2=1-x",
                    "--params", "a1,a2"])
    assert code == 0


def test_apply_union(files, capsys):
    tmp_path, paths = files
    out_path = tmp_path / "out.fss"
    code = run_cli(["apply", "--op", "union", str(paths["a"]), str(paths["b"]),
                    "-o", str(out_path)])
    assert code == 0
    result = load_fss(out_path)
    assert result["a1*b1"].memberships == (0.5, 0.7)


def test_apply_universe_mismatch_exit_three(files, capsys):
    tmp_path, paths = files
    code = run_cli(["apply", "--op", "union", str(paths["a"]), str(paths["w"]),
                    "-o", str(tmp_path / "out.fss")])
    assert code == 3


def test_apply_missing_file_exit_three(files):
    tmp_path, paths = files
    code = run_cli(["apply", "--op", "union", str(tmp_path / "absent.fss"),
                    str(paths["b"]), "-o", str(tmp_path / "out.fss")])
    assert code == 3


def test_apply_connective_expression(files):
    tmp_path, paths = files
    out_path = tmp_path / "out.fss"
    code = run_cli(["apply", "--op", "connective", "--conn", "x*y",
                    str(paths["a"]), str(paths["b"]), "-o", str(out_path)])
    assert code == 0
    assert load_fss(out_path)["a1*b1"].memberships == (0.3 * 0.5, 0.7 * 0.2)


def test_apply_conn_flag_validation(files):
    tmp_path, paths = files
    assert run_cli(["apply", "--op", "connective", str(paths["a"]), str(paths["b"]),
                    "-o", str(tmp_path / "x.fss")]) == 2
    assert run_cli(["apply", "--op", "union", "--conn", "x*y", str(paths["a"]),
                    str(paths["b"]), "-o", str(tmp_path / "x.fss")]) == 2


def test_dual_table(capsys):
    code = run_cli(["dual", "--builtin", "product", "--table", "3"])
    out = capsys.readouterr().out
    assert code == 0
    assert "t-conorm" in out
    assert "0.75" in out  # dual(product)(0.5, 0.5) = probsum(0.5, 0.5)


def test_dual_expression_and_table_validation(capsys):
    assert run_cli(["dual", "--expr", "min(x,y)", "--table", "2"]) == 0
    assert run_cli(["dual", "--expr", "min(x,y)", "--table", "1"]) == 2
    assert run_cli(["dual", "--builtin", "standard-negation"]) == 2  # unary


def test_check_remaining_kinds(capsys):
    assert run_cli(["check", "--kind", "tconorm", "--builtin", "boundedsum",
                    "--grid", "16", "--samples", "100"]) == 0
    assert run_cli(["check", "--kind", "implication", "--builtin", "godel-implication",
                    "--grid", "16", "--samples", "100"]) == 0
    assert run_cli(["check", "--kind", "negation", "--expr", "1-x*x",
                    "--grid", "16", "--samples", "100"]) == 1


def test_bad_grid_config_is_usage_error(capsys):
    assert run_cli(["check", "--kind", "tnorm", "--expr", "x*y", "--grid", "1"]) == 2
    assert run_cli(["check", "--kind", "tnorm", "--expr", "x*y", "--tol", "0"]) == 2


def test_candidate_evaluation_error_exit_three(capsys):
    # division by zero at a grid point is a data-level failure, not usage
    assert run_cli(["check", "--kind", "tnorm", "--expr", "x/y",
                    "--grid", "8", "--samples", "0"]) == 3


def test_eval_script(files, capsys, monkeypatch):
    tmp_path, paths = files
    script = tmp_path / "combine.fss"
    script.write_text(
        'H = union(S, G);\nprint H;\nsave(H, "result.fss");\n'
    )
    monkeypatch.chdir(tmp_path)  # save paths resolve against the cwd
    code = run_cli(["eval", str(script),
                    "--bind", f"S={paths['a']}", "--bind", f"G={paths['b']}"])
    out = capsys.readouterr().out
    assert code == 0
    assert "a1*b1: 0.5 0.7" in out
    saved = load_fss(tmp_path / "result.fss")
    assert saved["a1*b1"].memberships == (0.5, 0.7)


def test_eval_script_parse_error_exit_two(files, tmp_path):
    script = tmp_path / "broken.fss"
    script.write_text("print Q;")
    assert run_cli(["eval", str(script)]) == 2


def test_eval_script_missing_bind_file_exit_three(tmp_path):
    script = tmp_path / "combine.fss"
    script.write_text("print S;")
    assert run_cli(["eval", str(script), "--bind", f"S={tmp_path}/absent.fss"]) == 3


def test_load_save_identity_randomized(tmp_path):
    rng = np.random.default_rng(99)
    for case in range(100):
        size = int(rng.integers(1, 9))
        universe = [f"u{i}" for i in range(size)]
        count = int(rng.integers(1, 5))
        s = make_fuzzy_soft_set(
            universe,
            {f"p{i}": tuple(rng.random(size)) for i in range(count)},
        )
        path = tmp_path / f"case{case}.fss"
        save_fss(s, path)
        assert load_fss(path) == s
