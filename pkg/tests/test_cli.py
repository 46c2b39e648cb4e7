"""CLI conformance: golden files, round trips, exit codes."""

import json
import pathlib

import pytest

import spinlab as sl
from spinlab import formats
from spinlab.cli import main

HERE = pathlib.Path(__file__).parent
FIXTURES = HERE / "fixtures"
GOLDEN = HERE / "golden"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def golden(name):
    return (GOLDEN / name).read_text(encoding="utf-8")


@pytest.mark.parametrize(
    "name,argv",
    [
        ("analyze_pauli.txt", ["analyze", FIXTURES / "pauli.txt"]),
        ("analyze_pauli.json", ["analyze", FIXTURES / "pauli.txt", "--json"]),
        ("analyze_zero3.txt", ["analyze", FIXTURES / "zero3.txt"]),
        ("analyze_clifford3.txt", ["analyze", FIXTURES / "clifford3.txt"]),
        ("analyze_clifford3.json", ["analyze", FIXTURES / "clifford3.txt", "--json"]),
        (
            "analyze_band.json",
            ["analyze", FIXTURES / "band.txt", "--n-max", 6, "--json"],
        ),
        ("generate_clifford3.txt", ["generate", "--clifford", 3]),
        (
            "generate_random_p3_seed7.txt",
            ["generate", "--random", 4, "--seed", 7, "--prime", 3],
        ),
        ("grow_band.txt", ["grow", FIXTURES / "band.txt", "--n-max", 6]),
        ("grow_band.json", ["grow", FIXTURES / "band.txt", "--n-max", 6, "--json"]),
        ("classify_pauli.json", ["classify", FIXTURES / "pauli.txt"]),
    ],
)
def test_golden_outputs(capsys, name, argv):
    code, out, err = run(capsys, *argv)
    assert code == 0 and err == ""
    assert out == golden(name)


def test_generate_round_trips(capsys, tmp_path):
    code, out, _ = run(capsys, "generate", "--random", 5, "--seed", 123, "--prime", 5)
    assert code == 0
    assert formats.parse_matrix_file(out).materialize() == sl.random_alternating(
        5, 5, seed=123
    )
    # byte-identical per seed
    code, out2, _ = run(capsys, "generate", "--random", 5, "--seed", 123, "--prime", 5)
    assert out2 == out


def test_generate_from_basis(capsys, tmp_path):
    basis_file = tmp_path / "basis.txt"
    basis_file.write_text("1 0 0 0\n1 1 0 0\n0 1 1 0\n1 1 1 1\n", encoding="utf-8")
    ref = tmp_path / "cliff4.txt"
    run(capsys, "generate", "--clifford", 4, "--out", ref)
    code, out, _ = run(capsys, "generate", "--from-basis", ref, basis_file)
    assert code == 0
    made = formats.parse_matrix_file(out).materialize()
    expected = sl.matrix_from_basis(
        sl.clifford_matrix(2, 4),
        formats.parse_basis_file(basis_file.read_text(), 2, 4),
    )
    assert made == expected


def test_represent_reload_verifies(capsys):
    for kind in ("prop11", "irr"):
        code, out, _ = run(
            capsys, "represent", FIXTURES / "clifford3.txt", "--kind", kind
        )
        assert code == 0
        rep = formats.representation_from_dict(
            json.loads(out), sl.clifford_matrix(2, 3)
        )
        assert sl.verify_relations(rep).ok


def test_represent_with_invariant_file(capsys, tmp_path):
    mat = sl.clifford_matrix(2, 3)
    f0 = sl.reference_invariant(mat)
    target = sl.StandardInvariant(mat, f0.kernel_basis, (1,))
    inv_file = tmp_path / "inv.json"
    inv_file.write_text(json.dumps(formats.invariant_to_dict(target)), encoding="utf-8")
    code, out, _ = run(
        capsys,
        "represent", FIXTURES / "clifford3.txt", "--kind", "irr",
        "--invariant", inv_file,
    )
    assert code == 0
    rep = formats.representation_from_dict(json.loads(out), mat)
    assert sl.invariants_equal(sl.extract_invariant(rep), target)


def test_classify_pauli_single_class(capsys):
    _, out, _ = run(capsys, "classify", FIXTURES / "pauli.txt")
    doc = json.loads(out)
    assert doc["class_count"] == 1


def test_basis_document(capsys):
    _, out, _ = run(capsys, "basis", FIXTURES / "clifford3.txt")
    doc = json.loads(out)
    assert doc["r"] == 1 and doc["d"] == 1
    assert doc["kernel"] == [[1, 1, 1]]


def test_exit_code_2_on_bad_file(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("2 2\n0 1\n0 0\n", encoding="utf-8")  # not skew
    code, _, err = run(capsys, "analyze", bad)
    assert code == 2
    assert "line" in err


def test_exit_code_2_on_missing_file(capsys):
    code, _, err = run(capsys, "analyze", "does-not-exist.txt")
    assert code == 2
    assert err.startswith("error:")


def test_exit_code_3_on_size_bound(capsys, monkeypatch):
    monkeypatch.setenv("SPINLAB_MAX_DIM", "4")
    code, _, err = run(capsys, "represent", FIXTURES / "clifford3.txt", "--kind", "prop11")
    assert code == 3
    assert "bound" in err


def test_env_override_allows_within_bound(capsys, monkeypatch):
    monkeypatch.setenv("SPINLAB_MAX_DIM", "8")
    code, _, _ = run(capsys, "represent", FIXTURES / "clifford3.txt", "--kind", "prop11")
    assert code == 0


def test_exit_code_4_on_bad_invariant(capsys, tmp_path):
    inv_file = tmp_path / "inv.json"
    inv_file.write_text(
        json.dumps({"kernel_basis": [[1, 1, 1]], "values_exp_mod_p2": [0]}),
        encoding="utf-8",
    )  # violates the square law: Q(k,k)=1 forces +-i
    code, _, err = run(
        capsys,
        "represent", FIXTURES / "clifford3.txt", "--kind", "irr",
        "--invariant", inv_file,
    )
    assert code == 4
    assert "square" in err


def test_exit_code_4_on_odd_p_classify(capsys, tmp_path):
    odd = tmp_path / "odd.txt"
    odd.write_text("3 2\n0 1\n2 0\n", encoding="utf-8")
    code, _, err = run(capsys, "classify", odd)
    assert code == 4
    assert "p = 2" in err


def test_grow_rejects_explicit_files(capsys):
    code, _, err = run(capsys, "grow", FIXTURES / "pauli.txt", "--n-max", 4)
    assert code == 2
    assert "toeplitz" in err
