"""Command-line interface: operands, reports, exit codes, stability."""

import json
import os
import subprocess
import sys

import pytest

from simplicial_derham.cli import main

EDGE_CHAIN = {
    "space": "delta:1",
    "degree": 1,
    "terms": [{"simplex": [1, "0.1"], "exps": [0], "wedge": [1],
               "coeff": "1/1"}],
}

EDGE_FORM = {
    "space": "delta:1",
    "degree": 1,
    "values": [{"simplex": [1, "0.1"],
                "terms": [{"exps": [0], "wedge": [1], "coeff": "1/1"}]}],
}

CONSTANT_FORM = {
    "space": "delta:1",
    "degree": 0,
    "values": [
        {"simplex": [0, "0"], "terms": [{"exps": [], "wedge": [],
                                         "coeff": "1/1"}]},
        {"simplex": [0, "1"], "terms": [{"exps": [], "wedge": [],
                                         "coeff": "1/1"}]},
        {"simplex": [1, "0.1"], "terms": [{"exps": [0], "wedge": [],
                                           "coeff": "1/1"}]},
    ],
}


def write(tmp_path, name, doc):
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return str(path)


def run_main(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_homology_circle(capsys):
    code, rep = run_main(capsys, ["homology", "--space", "sphere:1",
                                  "--D", "3"])
    assert code == 0
    assert rep["matches_N"] is True
    assert rep["stable_image_dims"] == [1, 1]
    assert rep["D"] == 3


def test_homology_triangle(capsys):
    code, rep = run_main(capsys, ["homology", "--space", "delta:2",
                                  "--D", "2"])
    assert code == 0
    assert rep["stable_image_dims"] == [1, 0, 0]


def test_homology_degree_slice(capsys):
    code, rep = run_main(capsys, ["homology", "--space", "sphere:1",
                                  "--D", "3", "--degrees", "1:1"])
    assert code == 0
    assert rep["stable_image_dims"] == [1]


def test_pair_unit_value(capsys, tmp_path):
    chain = write(tmp_path, "chain.json", EDGE_CHAIN)
    form = write(tmp_path, "form.json", EDGE_FORM)
    code, rep = run_main(capsys, ["pair", "--chain", chain, "--form", form])
    assert code == 0
    assert rep["value"] == "1/1"
    assert rep["cochain_valid"] is True


def test_pair_degree_mismatch_is_zero(capsys, tmp_path):
    chain = write(tmp_path, "chain.json", EDGE_CHAIN)
    form = write(tmp_path, "form.json", CONSTANT_FORM)
    code, rep = run_main(capsys, ["pair", "--chain", chain, "--form", form])
    assert code == 0
    assert rep["value"] == "0/1"


def test_pair_rejects_mixed_spaces(tmp_path):
    chain = write(tmp_path, "chain.json", EDGE_CHAIN)
    other = dict(EDGE_FORM, space="delta:2")
    form = write(tmp_path, "form.json", other)
    with pytest.raises(SystemExit):
        main(["pair", "--chain", chain, "--form", form])


def test_product_of_edges(capsys, tmp_path):
    left = write(tmp_path, "left.json", EDGE_CHAIN)
    right = write(tmp_path, "right.json", EDGE_CHAIN)
    code, rep = run_main(capsys, ["product", "--left", left,
                                  "--right", right])
    assert code == 0
    assert rep["degree"] == 2
    assert rep["terms"] == [
        {"simplex": [2, "[0.1]x[0.1]@xy"], "exps": [0, 0], "wedge": [1, 2],
         "coeff": "1/1"},
        {"simplex": [2, "[0.1]x[0.1]@yx"], "exps": [0, 0], "wedge": [1, 2],
         "coeff": "-1/1"},
    ]


def test_verify_exit_codes(capsys):
    code, rep = run_main(capsys, ["verify", "--suite", "shuffles",
                                  "--suite", "integration",
                                  "--cases", "40"])
    assert code == 0
    assert rep["pass"] is True
    assert {r["suite"] for r in rep["suites"]} == {"shuffles", "integration"}


def test_verify_unknown_suite():
    with pytest.raises(SystemExit):
        main(["verify", "--suite", "nonsense"])


def test_verify_byte_stable(capsys):
    argv = ["verify", "--suite", "adjunction", "--cases", "25", "--seed", "7"]
    code1 = main(argv)
    out1 = capsys.readouterr().out
    code2 = main(argv)
    out2 = capsys.readouterr().out
    assert code1 == code2 == 0
    assert out1 == out2


def test_out_file_written(capsys, tmp_path):
    target = tmp_path / "report.json"
    code = main(["homology", "--space", "delta:1", "--D", "2",
                 "--out", str(target)])
    printed = capsys.readouterr().out
    assert code == 0
    assert json.loads(target.read_text()) == json.loads(printed)


def test_bench_reports_times(capsys):
    code, rep = run_main(capsys, ["bench", "--suite", "shuffles"])
    assert code == 0
    row, = rep["suites"]
    assert row["suite"] == "shuffles"
    assert isinstance(row["elapsed_ms"], int)


def test_console_script_end_to_end():
    env = dict(os.environ, SIMPLICIAL_DERHAM_THREADS="2")
    proc = subprocess.run(
        [sys.executable, "-m", "simplicial_derham.cli", "verify",
         "--suite", "shuffles", "--suite", "delta-squared",
         "--cases", "30"],
        capture_output=True, text=True, env=env)
    assert proc.returncode == 0
    rep = json.loads(proc.stdout)
    assert rep["pass"] is True
