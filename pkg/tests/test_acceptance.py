"""Acceptance criteria, one test per criterion.

Each test runs the corresponding verification check and asserts it passed,
printing a single PASS/FAIL line.  Two criteria assert impossibility rules
(criterion 8's non-unit reversibility claim and criterion 9's no-complement
claim) that the sweeps genuinely refute; those tests fail and their output
lists every counterexample.  The package reports what it finds rather than
weakening the check.
"""

from skewdna import verify


def _report(number: int, result, budget_seconds: float):
    status = "PASS" if result.passed else "FAIL"
    print(f"criterion {number:2d} [{result.name}] {status} "
          f"({result.seconds:.2f}s) {result.summary}")
    assert result.seconds < budget_seconds, "over the runtime budget"
    assert result.passed, "\n".join([result.summary, *result.details])


def test_criterion_01_correspondence_table():
    _report(1, verify.check_element_dna_table(), 1)


def test_criterion_02_unit_inverses():
    _report(2, verify.check_unit_inverse_formula(), 1)


def test_criterion_03_length10_palindromic_code():
    _report(3, verify.check_palindromic_divisor_length10(), 10)


def test_criterion_04_length12_theta_palindromic_divisor():
    _report(4, verify.check_theta_palindromic_divisor_length12(), 10)


def test_criterion_05_sixteen_word_code_table():
    _report(5, verify.check_sixteen_codeword_table(), 5)


def test_criterion_06_even_length_even_degree_equivalence():
    r = verify.check_even_length_even_degree_rule()
    assert "147 codes" in r.summary  # frozen sweep inventory
    _report(6, r, 120)


def test_criterion_07_even_length_odd_degree_equivalence():
    r = verify.check_even_length_odd_degree_rule()
    assert "117 codes" in r.summary
    _report(7, r, 60)


def test_criterion_08_odd_length_closure_and_impossibility():
    r = verify.check_odd_length_cyclic_and_impossibility()
    # the shift-closure half is sound and must stay clean
    assert r.details[0] == "plain-shift closure: 36 codes, 0 failures"
    # the impossibility half is asserted as stated; the sweep refutes it
    _report(8, r, 60)


def test_criterion_09_reverse_complement_rules():
    r = verify.check_reverse_complement_rules()
    # the equivalence half is sound and must stay clean
    assert r.details[0] == "290 codes; equivalence failures: 0"
    # the no-complement half is asserted as stated; the sweep refutes it
    _report(9, r, 60)


def test_criterion_10_image_rotation_identity():
    _report(10, verify.check_image_rotation_identity(), 30)


def test_criterion_11_distance_preservation():
    _report(11, verify.check_distance_preservation(), 30)


def test_criterion_12_minimal_degree_factor_forms():
    r = verify.check_minimal_degree_forms()
    assert "326" in r.summary
    _report(12, r, 60)
