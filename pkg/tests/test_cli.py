"""End-to-end runs of the command line driver.

Each test invokes main() directly with argv and checks the report text,
the exit code, or both.  Reports are line oriented and deterministic, so
most expectations are exact strings.
"""

import json

import pytest

from helpers import wrap_map
from kanforge import io as kio
from kanforge.cli import main
from kanforge.spaces import circle, cycle, torus


@pytest.fixture
def run(capsys):
    def invoke(*argv):
        code = main(list(argv))
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    return invoke


@pytest.fixture
def circle_path(tmp_path):
    path = tmp_path / "circle.json"
    path.write_text(kio.serialize_complex(circle()))
    return str(path)


def test_homology_report_is_exact(run, circle_path):
    code, out, err = run("homology", circle_path)
    assert code == 0
    assert out == "H0=Z\nH1=Z\nOK\n"
    assert err == ""


def test_homology_with_modular_coefficients(run, tmp_path):
    path = tmp_path / "torus.json"
    path.write_text(kio.serialize_complex(torus()))
    code, out, _ = run("homology", str(path), "--coeff", "z2")
    assert code == 0
    assert out.splitlines() == ["H0=Z/2", "H1=Z/2 + Z/2", "H2=Z/2", "OK"]


def test_validate_counts_cells(run, circle_path):
    code, out, _ = run("validate", circle_path)
    assert code == 0
    assert out == "cells: 2\nOK\n"


def test_kan_failure_prints_witnesses_and_exits_one(run, circle_path):
    code, out, _ = run("kan", circle_path, "--max-dim", "2")
    assert code == 1
    assert out == (
        "horn search through dim 2\n"
        "missing p=2 k=0 faces=s0(v),a\n"
        "missing p=2 k=1 faces=a,a\n"
        "missing p=2 k=2 faces=a,s0(v)\n"
        "FAIL\n"
    )


def test_cup_table_for_torus(run, tmp_path):
    path = tmp_path / "torus.json"
    path.write_text(kio.serialize_complex(torus()))
    code, out, _ = run("cup", str(path), "--deg", "1", "1")
    assert code == 0
    assert out.splitlines() == [
        "H^1=Z^2",
        "H^1=Z^2",
        "H^2=Z",
        "cup[0][0] = [0]",
        "cup[0][1] = [1]",
        "cup[1][0] = [-1]",
        "cup[1][1] = [0]",
        "OK",
    ]


def test_pi1_report(run, circle_path):
    code, out, _ = run("pi1", circle_path)
    assert code == 0
    assert out == "generators: a\nrelators: (none)\nabelianization: Z\nOK\n"


def test_cover_check_passes_with_right_sheet_count(run, tmp_path):
    path = tmp_path / "cover.json"
    path.write_text(kio.serialize_map(wrap_map(4, 2)))
    code, out, _ = run("cover", "check", str(path), "--sheets", "2")
    assert code == 0
    assert out == "sheets: 2\nOK\n"


def test_cover_check_fails_with_wrong_sheet_count(run, tmp_path):
    path = tmp_path / "cover.json"
    path.write_text(kio.serialize_map(wrap_map(4, 2)))
    code, out, _ = run("cover", "check", str(path), "--sheets", "4")
    assert code == 1
    lines = out.splitlines()
    assert lines[0] == "sheets: 4"
    assert lines[-1] == "FAIL"
    assert "cell v0 has 2 preimages, expected 4" in lines


def test_bundle_check_report(run, circle_path, tmp_path):
    twist = tmp_path / "halftwist.json"
    twist.write_text(json.dumps({"group": {"kind": "cyclic", "n": 2}, "labels": {"a": "g"}}))
    code, out, _ = run("bundle", "check", circle_path, str(twist))
    assert code == 0
    assert out == "fiber: Z2\ntotal cells: 4\nOK\n"


def test_charclass_report(run, circle_path, tmp_path):
    twist = tmp_path / "halftwist.json"
    twist.write_text(json.dumps({"group": {"kind": "cyclic", "n": 2}, "labels": {"a": "g"}}))
    cocycle = tmp_path / "id-z2.json"
    cocycle.write_text(json.dumps({"degree": 1, "modulus": 2, "values": {"g": 1}}))
    code, out, _ = run("charclass", circle_path, str(twist), "--cocycle", str(cocycle))
    assert code == 0
    assert out == "H^1 class: nonzero (Z/2)\nOK\n"


def test_fibrant_report_and_output_file(run, circle_path, tmp_path):
    out_path = tmp_path / "approx.json"
    code, out, _ = run(
        "fibrant", circle_path, "--max-dim", "3", "--stages", "2", "--out", str(out_path)
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "stage 1: attached 3"
    assert lines[1].startswith("stage 2: attached ")
    assert lines[-1] == "OK"
    K = kio.parse_complex(str(out_path))
    assert K.validate() == []
    assert [w.base for w in K.simplices(0)] == ["v"]


def test_emit_writes_raw_json_to_stdout(run):
    code, out, err = run("emit", "circle")
    assert code == 0
    assert err == ""
    # no OK trailer on stdout emission: the payload must stay parseable
    assert out == kio.serialize_complex(circle())
    K = kio.parse_complex_text(out)
    assert kio.same_presentation(K, circle())


def test_emit_to_file_reports_the_path(run, tmp_path):
    path = tmp_path / "c4.json"
    code, out, _ = run("emit", "cycle", "--n", "4", "--out", str(path))
    assert code == 0
    assert out == f"wrote {path}\nOK\n"
    assert kio.same_presentation(kio.parse_complex(str(path)), cycle(4))


def test_emit_product_of_two_files(run, tmp_path):
    left = tmp_path / "a.json"
    right = tmp_path / "b.json"
    left.write_text(kio.serialize_complex(circle()))
    right.write_text(kio.serialize_complex(circle()))
    out_path = tmp_path / "t2.json"
    code, _, _ = run(
        "emit", "product", str(left), str(right), "--max-dim", "2", "--out", str(out_path)
    )
    assert code == 0
    K = kio.parse_complex(str(out_path))
    assert K.validate() == []
    assert K.n_cells(2) == 2


def test_emit_classifying_complexes(run, tmp_path):
    for target in ("wbar", "w"):
        path = tmp_path / f"{target}.json"
        code, _, _ = run("emit", target, "--cyclic", "3", "--max-dim", "3", "--out", str(path))
        assert code == 0
        assert kio.parse_complex(str(path)).validate() == []


def test_missing_file_is_an_input_error(run, tmp_path):
    code, out, err = run("homology", str(tmp_path / "nope.json"))
    assert code == 2
    assert out == ""
    assert err.startswith("error: ")


def test_malformed_artifact_is_an_input_error(run, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"cells": 3}')
    code, _, err = run("homology", str(path))
    assert code == 2
    assert "cells: expected dict, got int" in err


def test_budget_violation_exits_three(run, monkeypatch):
    monkeypatch.delenv("KANFORGE_MAX_DIM", raising=False)
    code, out, err = run("emit", "delta", "--p", "9")
    assert code == 3
    assert out == ""
    assert err.startswith("budget exceeded: ")
    assert "KANFORGE_MAX_DIM" in err


def test_env_override_raises_the_dimension_cap(run, monkeypatch, tmp_path):
    monkeypatch.setenv("KANFORGE_MAX_DIM", "9")
    path = tmp_path / "d9.json"
    code, _, _ = run("emit", "delta", "--p", "9", "--out", str(path))
    assert code == 0
    assert kio.parse_complex(str(path)).top_dim == 9


def test_bad_coefficient_spec_is_a_usage_error(run):
    with pytest.raises(SystemExit):
        main(["homology", "whatever.json", "--coeff", "q"])


def test_reports_are_byte_stable_across_runs(run, tmp_path):
    path = tmp_path / "torus.json"
    path.write_text(kio.serialize_complex(torus()))
    first = run("cohomology", str(path), "--coeff", "z2")
    second = run("cohomology", str(path), "--coeff", "z2")
    assert first == second
    assert first[0] == 0


@pytest.mark.parametrize("check", ["mu", "F", "r", "psi2", "tame", "extend"])
def test_smooth_checks_pass_on_a_coarse_grid(run, check):
    code, out, _ = run("smooth", check, "--grid", "60")
    assert code == 0
    assert out.endswith("OK\n")
