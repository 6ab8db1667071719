"""CLI plumbing: output shapes, exit codes, fault injection."""

import json

import pytest

from skewdna import cli, dna, verify

EX3 = ["--n", "6", "--gen", "v(x^4+x^2+1)"]
EX1 = ["--n", "10", "--gen", "x^4+(v+w)*x^2+1"]


def run(capsys, argv):
    rc = cli.main(argv)
    out = capsys.readouterr()
    return rc, out.out, out.err


def run_json(capsys, argv):
    rc, out, _ = run(capsys, argv + ["--format", "structured"])
    return rc, json.loads(out)


def test_table1_text(capsys):
    rc, out, _ = run(capsys, ["table1"])
    assert rc == 0
    lines = out.strip().splitlines()
    assert len(lines) == 17  # header + 16 rows
    assert any("w2+v" in ln and "CG" in ln for ln in lines)
    assert lines[1].startswith("0") and lines[1].endswith("AA")


def test_table1_structured(capsys):
    rc, doc = run_json(capsys, ["table1"])
    assert rc == 0
    assert len(doc["rows"]) == 16
    row = doc["rows"][7]
    assert row == {"index": 7, "element": "w2+v", "gray": ["w", "w2"], "dna": "CG"}


def test_divisors_listing(capsys):
    rc, out, _ = run(capsys, ["divisors", "--n", "2", "--degree", "1"])
    assert rc == 0
    assert out.startswith("3 right divisors")
    assert "[1, 1]  (unit)  palindromic, theta-palindromic" in out


def test_divisors_include_reference_polynomials(capsys):
    rc, doc = run_json(capsys, ["divisors", "--n", "10", "--degree", "4"])
    assert rc == 0
    coeffs = [d["coeffs"] for d in doc["divisors"]]
    assert ["1", "0", "w+v", "0", "1"] in coeffs
    hit = next(d for d in doc["divisors"] if d["coeffs"] == ["1", "0", "w+v", "0", "1"])
    assert hit["palindromic"] and not hit["theta_palindromic"]

    rc, doc = run_json(capsys, ["divisors", "--n", "12", "--degree", "3"])
    assert rc == 0
    hit = next(d for d in doc["divisors"] if d["coeffs"] == ["1", "w+v", "w2+v", "1"])
    assert hit["theta_palindromic"] and not hit["palindromic"]


def test_divisors_budget_exit(capsys):
    rc, _, err = run(capsys, ["divisors", "--n", "12", "--degree", "9"])
    assert rc == 3
    assert "budget" in err


def test_build_report(capsys):
    rc, doc = run_json(capsys, ["build"] + EX3)
    assert rc == 0
    assert doc["size"] == 16 and doc["log2_size"] == 4
    assert doc["leading_form"] == "v"
    assert doc["palindromic"] is True
    assert doc["predicted_reversible"] == "yes"
    assert doc["predicted_reverse_complement"] == "no"


def test_build_large_code_without_materializing(capsys):
    rc, doc = run_json(capsys, ["build"] + EX1)
    assert rc == 0
    assert doc["log2_size"] == 24


def test_check_assert_exit_codes(capsys):
    rc, out, _ = run(capsys, ["check"] + EX3 + ["--property", "reversible", "--assert"])
    assert rc == 0 and "holds" in out
    rc, out, _ = run(capsys, ["check"] + EX3 + ["--property", "reverse-complement", "--assert"])
    assert rc == 1 and "fails" in out
    # without --assert a failed property still exits 0: it is a report
    rc, out, _ = run(capsys, ["check"] + EX3 + ["--property", "reverse-complement"])
    assert rc == 0 and "fails" in out


def test_check_quasi_cyclic(capsys):
    rc, doc = run_json(capsys, ["check"] + EX3 + ["--property", "quasi-cyclic"])
    assert rc == 0
    assert doc["holds"] is True and doc["via"] == "materialized"


def test_check_falls_back_to_remainder_above_cap(capsys):
    argv = ["check"] + EX1 + ["--property", "reversible", "--cap", "65536", "--assert"]
    rc, doc = run_json(capsys, argv)
    assert rc == 0
    assert doc["holds"] is True and doc["via"] == "remainder"


def test_parse_error_exit(capsys):
    rc, _, err = run(capsys, ["check", "--n", "6", "--gen", "v(x^4+", "--property", "reversible"])
    assert rc == 2
    assert "skewdna:" in err


def test_cap_exit(capsys):
    rc, _, err = run(capsys, ["dna"] + EX1 + ["--cap", "65536"])
    assert rc == 3
    assert "cap" in err


def test_dna_output_matches_reference(capsys, reference_dna_strings):
    rc, out, _ = run(capsys, ["dna"] + EX3)
    assert rc == 0
    assert out.strip().splitlines() == sorted(reference_dna_strings)


def test_dna_fasta(capsys):
    rc, out, _ = run(capsys, ["dna"] + EX3 + ["--fasta"])
    assert rc == 0
    lines = out.strip().splitlines()
    assert len(lines) == 32
    assert lines[0] == ">w0" and lines[2] == ">w1"
    assert lines[1] == "AAAAAAAAAAAA"


def test_distance_output(capsys):
    rc, doc = run_json(capsys, ["distance"] + EX3)
    assert rc == 0
    assert doc["metric"] == "lee" and doc["min_distance"] == 3
    rc, doc = run_json(capsys, ["distance"] + EX3 + ["--metric", "hamming"])
    assert rc == 0
    assert doc["min_distance"] == 3


def test_verify_command_formatting(capsys, monkeypatch):
    # stub the suite: one passing, one failing check
    def fake_run_all(seed=0):
        return [
            verify.CheckResult("alpha", True, "fine", [], 0.01),
            verify.CheckResult("beta", False, "broke", ["case 1"], 0.02),
        ]

    monkeypatch.setattr(verify, "run_all", fake_run_all)
    rc, out, _ = run(capsys, ["verify-paper"])
    assert rc == 1
    assert "ok" in out and "FAIL" in out
    assert "failing checks: beta" in out
    assert "case 1" in out
    assert "1 of 2 checks passed" in out


def test_verify_command_structured(capsys, monkeypatch):
    monkeypatch.setattr(verify, "run_all",
                        lambda seed=0: [verify.CheckResult("alpha", True, "fine", [], 0.01)])
    rc, doc = run_json(capsys, ["verify-paper"])
    assert rc == 0
    assert doc["all_passed"] is True
    assert doc["results"][0]["name"] == "alpha"


def test_fault_injection_is_caught_and_named(capsys, monkeypatch):
    # corrupt one entry of the element-to-block table; the table check must
    # fail by name, end to end through the CLI
    bad = list(dna._BLOCK_OF_R)
    bad[4], bad[5] = bad[5], bad[4]
    monkeypatch.setattr(dna, "_BLOCK_OF_R", tuple(bad))
    monkeypatch.setattr(verify, "ALL_CHECKS", (verify.check_element_dna_table,))
    rc, out, _ = run(capsys, ["verify-paper"])
    assert rc == 1
    assert "failing checks: element-dna-table" in out
    assert "element 4" in out


def test_unknown_subcommand_exits_2():
    with pytest.raises(SystemExit) as exc:
        cli.main(["frobnicate"])
    assert exc.value.code == 2
