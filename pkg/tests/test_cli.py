import json

import pytest

from frobdiv.cli import main
from frobdiv.serialize import algebra_to_json, canonical_dumps

from conftest import delta_form, group_algebra_plain


def build(tmp_path, *args, name="in.json"):
    out = tmp_path / name
    code = main(["build", *args, "--out", str(out)])
    assert code == 0
    return out


def test_build_then_analyze_group_algebra(tmp_path, capsys):
    inp = build(tmp_path, "--group", "S3")
    out = tmp_path / "report.txt"
    code = main(["analyze", str(inp), "--check", "all", "--out", str(out)])
    assert code == 0
    text = out.read_text()
    assert "overall: PASS" in text and "[FAIL]" not in text


def test_analyze_json_format(tmp_path):
    inp = build(tmp_path, "--group", "C2")
    out = tmp_path / "report.json"
    code = main(["analyze", str(inp), "--format", "json", "--out", str(out)])
    assert code == 0
    doc = json.loads(out.read_text())
    assert doc["status"] == "pass"
    assert any(s["name"].startswith("frobenius") for s in doc["sections"])


def test_reports_byte_identical_across_primes(tmp_path):
    inp = build(tmp_path, "--group", "S3")
    outs = []
    for i, p in enumerate((13, 19, 31)):
        out = tmp_path / f"r{i}.json"
        code = main(["analyze", str(inp), "--check", "fd", "--prime", str(p),
                     "--format", "json", "--out", str(out)])
        assert code == 0
        outs.append(out.read_bytes())
    assert outs[0] == outs[1] == outs[2]


def test_same_prime_reports_identical(tmp_path):
    inp = build(tmp_path, "--group", "S3")
    texts = []
    for i in range(2):
        out = tmp_path / f"t{i}.txt"
        assert main(["analyze", str(inp), "--out", str(out)]) == 0
        texts.append(out.read_bytes())
    assert texts[0] == texts[1]


def test_plain_algebra_delta_one(tmp_path):
    A = group_algebra_plain("S3")
    doc = algebra_to_json(A)
    inp = tmp_path / "alg.json"
    inp.write_text(canonical_dumps(doc))
    code = main(["analyze", str(inp), "--lambda", "delta-one",
                 "--out", str(tmp_path / "o.txt")])
    assert code == 0


def test_degenerate_lambda_exit_1(tmp_path):
    A = group_algebra_plain("C2")
    lam = [A.field.one, A.field.one]  # annihilates 1 - g
    doc = algebra_to_json(A, lam)
    inp = tmp_path / "alg.json"
    inp.write_text(canonical_dumps(doc))
    out = tmp_path / "o.txt"
    code = main(["analyze", str(inp), "--lambda", "custom",
                 "--out", str(out)])
    assert code == 1
    assert "ideal witness" in out.read_text()


def test_rescaled_form_inapplicable_exit_1(tmp_path, capsys):
    A = group_algebra_plain("S3")
    four = A.field.from_rat(__import__("gmpy2").mpq(4))
    lam = [four * c for c in delta_form(A)]
    doc = algebra_to_json(A, lam)
    inp = tmp_path / "alg.json"
    inp.write_text(canonical_dumps(doc))
    out = tmp_path / "o.txt"
    code = main(["analyze", str(inp), "--lambda", "custom",
                 "--out", str(out)])
    assert code == 1
    assert "not a rational integer" in out.read_text()


def test_corrupted_input_exit_2(tmp_path, capsys):
    inp = tmp_path / "bad.json"
    inp.write_text('{"dim": 2, "unit": ["1", "0"]}')
    assert main(["analyze", str(inp)]) == 2
    # perturbed structure constants fail the axiom check, also exit 2
    A = group_algebra_plain("S3")
    doc = algebra_to_json(A)
    doc["structure_constants"] = [
        e if e[:2] != [3, 4] else [3, 4, (e[2] + 1) % 6, e[3]]
        for e in doc["structure_constants"]]
    inp2 = tmp_path / "bad2.json"
    inp2.write_text(canonical_dumps(doc))
    assert main(["analyze", str(inp2)]) == 2


def test_missing_file_exit_2(tmp_path, capsys):
    assert main(["analyze", str(tmp_path / "nope.json")]) == 2


def test_schneider_needs_r_matrix(tmp_path, capsys):
    inp = build(tmp_path, "--group", "C2")  # no R in a group-algebra build
    assert main(["analyze", str(inp), "--check", "schneider"]) == 2


def test_bad_prime_exit_3(tmp_path, capsys):
    inp = build(tmp_path, "--group", "S3")
    # 5 is below twice the dimension and 2 mod 3: rejected up front
    assert main(["analyze", str(inp), "--check", "fd", "--prime", "5"]) == 3


def test_build_dual_and_analyze(tmp_path):
    inp = build(tmp_path, "--group", "S3", "--as", "dual")
    code = main(["analyze", str(inp), "--check", "class-equation",
                 "--out", str(tmp_path / "o.txt")])
    assert code == 0


def test_build_from_table(tmp_path):
    tbl = tmp_path / "table.json"
    tbl.write_text(json.dumps({"table": [[0, 1], [1, 0]]}))
    out = build(tmp_path, "--table", str(tbl))
    doc = json.loads(out.read_text())
    assert doc["dim"] == 2
