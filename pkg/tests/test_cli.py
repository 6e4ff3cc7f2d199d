"""Command-line surface: formats, exit codes, determinism, atomicity."""

import json
import os

import pytest

from radlap.cli import (
    EXIT_CHECK_FAILED,
    EXIT_INVALID,
    EXIT_OK,
    main,
)


def run(args, capsys):
    code = main(args)
    captured = capsys.readouterr()
    return code, captured.out


def payload_of(path):
    with open(path) as fh:
        lines = fh.read().splitlines()
    assert lines[0].startswith("# radlap ")
    return lines[1:]


def test_eval_f21_csv(capsys):
    code, out = run(["eval-f21", "--a", "1", "--b", "1", "--c", "2",
                     "--x", "0.5"], capsys)
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0].startswith("# radlap ")
    assert lines[1] == "x,F"
    x, f = lines[2].split(",")
    assert float(f) == pytest.approx(1.3862943611198906, rel=1e-12)


def test_eval_f21_range_json(capsys):
    code, out = run(["eval-f21", "--a", "0.5", "--b", "1", "--c", "1.5",
                     "--x-min", "0", "--x-max", "0.4", "--x-points", "5",
                     "--format", "json"], capsys)
    assert code == EXIT_OK
    payload = json.loads(out.splitlines()[1])
    assert payload["columns"] == ["x", "F"]
    assert len(payload["rows"]) == 5
    assert payload["rows"][0][1] == 1.0


def test_eval_f21_needs_x_or_range(capsys):
    code, _ = run(["eval-f21", "--a", "1", "--b", "1", "--c", "2"], capsys)
    assert code == EXIT_INVALID


def test_fraclap_table_columns(capsys):
    code, out = run(["fraclap", "--n", "3", "--s", "0.5",
                     "--profile", "fbeta:2", "--r-min", "1", "--r-max", "1",
                     "--r-points", "1"], capsys)
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[1] == "r,value,error_estimate"
    r, value, err = lines[2].split(",")
    assert float(value) == pytest.approx(-4.934802200544679, rel=1e-9)
    assert float(err) < 1e-8


def test_fraclap_unknown_profile(capsys):
    code, _ = run(["fraclap", "--n", "3", "--s", "0.5",
                   "--profile", "mystery"], capsys)
    assert code == EXIT_INVALID


def test_check_subharmonic_pass_and_fail(capsys):
    base = ["check-subharmonic", "--n", "4", "--s", "0.6",
            "--r-points", "8", "--tau-points", "8"]
    code, out = run(base + ["--profile", "fbeta:2.8"], capsys)
    assert code == EXIT_OK
    report = json.loads(out.splitlines()[1])
    assert report["holds"] and report["equivalent"]

    code, out = run(base + ["--profile", "fbeta:3.2"], capsys)
    assert code == EXIT_CHECK_FAILED
    report = json.loads(out.splitlines()[1])
    assert not report["holds"]
    assert report["cond1"]["worst_location"] is not None


def test_verify_hessian_single_case(capsys):
    code, out = run(["verify-hessian", "--k", "2", "--n", "5",
                     "--format", "json"], capsys)
    assert code == EXIT_OK
    report = json.loads(out.splitlines()[1])
    assert report["overall"]
    assert report["tangent"]["f_prime_1"] == "152/225"
    assert report["tangent"]["g_prime_1"] == "38/35"
    assert report["route"] == "tangent-comparison"


def test_verify_hessian_k1_superposition(capsys):
    code, out = run(["verify-hessian", "--k", "1", "--n", "4",
                     "--format", "json"], capsys)
    assert code == EXIT_OK
    report = json.loads(out.splitlines()[1])
    assert report["route"] == "superposition"
    assert report["laplacian_sign"]["holds"]


def test_verify_hessian_invalid_range(capsys):
    code, _ = run(["verify-hessian", "--k", "3", "--n", "4"], capsys)
    assert code == EXIT_INVALID  # n < 2k


def test_kernel_table_routes_agree(capsys):
    code, out = run(["kernel-table", "--n", "4", "--s", "0.3",
                     "--tau-min", "1", "--tau-max", "5", "--points", "5"],
                    capsys)
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[1] == "tau,H_quadrature,H_hypergeometric,rel_diff"
    for line in lines[2:]:
        assert float(line.split(",")[3]) <= 1e-7


def test_determinism_of_verify_hessian(tmp_path, capsys):
    f1 = tmp_path / "a.json"
    f2 = tmp_path / "b.json"
    for path in (f1, f2):
        code = main(["verify-hessian", "--k", "2", "--n", "5",
                     "--format", "json", "--out", str(path)])
        assert code == EXIT_OK
    capsys.readouterr()
    assert payload_of(f1) == payload_of(f2)


def test_invalid_invocation_leaves_no_partial_file(tmp_path, capsys):
    out = tmp_path / "table.csv"
    code = main(["fraclap", "--n", "3", "--s", "0.5", "--profile", "power:x",
                 "--out", str(out)])
    capsys.readouterr()
    assert code == EXIT_INVALID
    assert not out.exists()
    assert os.listdir(tmp_path) == []


def test_thread_cap_does_not_change_output(tmp_path, capsys, monkeypatch):
    args = ["eval-f21", "--a", "1.2", "--b", "0.7", "--c", "2.3",
            "--x-min", "-0.9", "--x-max", "0.9", "--x-points", "13"]
    monkeypatch.setenv("RADLAP_THREADS", "1")
    _, serial = run(args, capsys)
    monkeypatch.setenv("RADLAP_THREADS", "4")
    _, threaded = run(args, capsys)
    assert serial == threaded


def test_bad_thread_cap_is_invalid(capsys, monkeypatch):
    monkeypatch.setenv("RADLAP_THREADS", "zero")
    code, _ = run(["eval-f21", "--a", "1", "--b", "1", "--c", "2",
                   "--x", "0.5"], capsys)
    assert code == EXIT_INVALID


def test_unknown_subcommand_is_invalid(capsys):
    assert main(["no-such-command"]) == EXIT_INVALID
    capsys.readouterr()
