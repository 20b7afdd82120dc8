"""Command-line interface: outputs, exit codes, golden JSON."""

import json
import pathlib

import pytest

from braidlab.cli import main

GOLDEN = pathlib.Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_reduce_trivial_word(capsys):
    code, out, _ = run(capsys, "reduce", "--word", "x1 x1^-1")
    assert code == 0
    assert out.strip() == ""


def test_reduce_infers_free_rank(capsys):
    code, out, _ = run(capsys, "reduce", "--word", "x7 x2")
    assert code == 0
    assert out.strip() == "x7 x2"


def test_perm_output(capsys):
    code, out, _ = run(capsys, "perm", "--n", "3", "--word", "s1 s2")
    assert code == 1  # nonidentity permutation
    assert out.strip() == "1→2 2→3 3→1"


def test_perm_identity_exit_zero(capsys):
    code, out, _ = run(capsys, "perm", "--n", "3", "--word", "s1 s1^-1")
    assert code == 0


def test_pi1_exit_codes(capsys):
    code, out, _ = run(capsys, "pi1", "is-trivial", "--g", "2",
                       "--word", "a1 a3 a1^-1 a3^-1")
    assert (code, out.strip()) == (1, "nontrivial")
    code, out, _ = run(capsys, "pi1", "is-trivial", "--g", "1",
                       "--word", "[a1,a2]")
    assert (code, out.strip()) == (0, "trivial")


def test_lh_exit_codes(capsys):
    code, out, _ = run(capsys, "lh", "is-trivial", "--n", "3",
                       "--word", "[T1.2, T1.3 T1.2 T1.3^-1]")
    assert (code, out.strip()) == (0, "trivial")
    code, out, _ = run(capsys, "lh", "is-trivial", "--n", "2",
                       "--word", "T1.2")
    assert (code, out.strip()) == (1, "nontrivial")


def test_theta_human_output(capsys):
    code, out, _ = run(capsys, "theta", "--n", "3", "--g", "2",
                       "--word", "a2.3")
    assert code == 1
    assert out.strip() == "(1, a3, 1)"


def test_usage_error_exit_two(capsys):
    with pytest.raises(SystemExit) as err:
        main(["perm", "--word", "s1"])  # missing --n
    assert err.value.code == 2


def test_bad_word_exit_two(capsys):
    code, _, err = run(capsys, "reduce", "--word", "x1 ??")
    assert code == 2
    assert "position" in err


def test_index_out_of_range_exit_two(capsys):
    code, _, err = run(capsys, "perm", "--n", "2", "--word", "s5")
    assert code == 2


def test_help_documents_grammar(capsys):
    with pytest.raises(SystemExit) as err:
        main(["--help"])
    assert err.value.code == 0
    out = capsys.readouterr().out
    assert '"s"INT' in out and '"[" word "," word "]"' in out


def test_presentation_dump_golden(capsys):
    code, out, _ = run(capsys, "presentation", "dump", "--family", "hatbn",
                       "--n", "2", "--g", "1", "--lh-samples", "2",
                       "--seed", "0", "--json")
    assert code == 0
    expected = json.loads(
        (GOLDEN / "presentation_hatbn_n2_g1.json").read_text())
    assert json.loads(out) == expected


def test_lab_run_golden(capsys):
    code, out, _ = run(capsys, "lab", "run", "--n-max", "2", "--g-max", "1",
                       "--len", "6", "--samples", "10", "--seed", "42",
                       "--no-timing", "--json")
    assert code == 0
    expected = json.loads((GOLDEN / "lab_run_small.json").read_text())
    assert json.loads(out) == expected


def test_hom_verify_json_schema(capsys):
    code, out, _ = run(capsys, "hom", "verify", "--map", "theta",
                       "--n", "2", "--g", "2", "--lh-len", "3",
                       "--seed", "1", "--json")
    assert code == 0
    payload = json.loads(out)
    assert set(payload) == {"map", "domain", "checked", "passed",
                            "failed", "unknown"}
    assert payload["failed"] == [] and payload["unknown"] == []


def test_hom_verify_psi(capsys):
    code, out, _ = run(capsys, "hom", "verify", "--map", "psi",
                       "--n", "3", "--g", "1", "--seed", "1")
    assert code == 0
    assert "pass" in out
