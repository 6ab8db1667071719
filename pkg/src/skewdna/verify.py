"""One-shot verification suite.

Each check re-derives one published rule or reference value from scratch and
compares it against what this package computes.  Reference data (the
16-element correspondence table, the 16-string DNA code of length 12) is
frozen here as literals; structural rules are swept by brute force over every
single-generator code at desk-scale lengths, with no sampling except where a
check says so explicitly.

A check returns a CheckResult rather than raising, so the suite always runs
to completion and reports everything at once.  Two of the structural rules
are known to fail as literally stated: the non-unit impossibility rule and
the no-complement rule both assume the generator's shape survives reduction
modulo x^n - 1, and there are lengths where <v*g1> quietly contains g1
itself (x^n * v*g1 reduces to (v+1)*g1 when n is odd, and some even-length
cofactors do the same), making the code reversible or complement-closed
after all.  Those checks report the counterexamples they find; see the
failing-check details for the full list.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field

from . import analysis as an
from . import codes as cd
from . import dna
from . import skewpoly as sp
from .algebra import ELEMENTS, UNITS, gf4_token, gray, parts, r_mul, r_token

DEFAULT_SEED = 20902

# (element token, gray pair tokens, 2-base block), in element index order 0..15
CORRESPONDENCE_TABLE = (
    ("0", ("0", "0"), "AA"),
    ("1", ("1", "1"), "TT"),
    ("w", ("w", "w"), "CC"),
    ("w2", ("w2", "w2"), "GG"),
    ("v", ("1", "0"), "TA"),
    ("1+v", ("0", "1"), "AT"),
    ("w+v", ("w2", "w"), "GC"),
    ("w2+v", ("w", "w2"), "CG"),
    ("w*v", ("w", "0"), "CA"),
    ("1+w*v", ("w2", "1"), "GT"),
    ("w+w*v", ("0", "w"), "AC"),
    ("w2+w*v", ("1", "w2"), "TG"),
    ("w2*v", ("w2", "0"), "GA"),
    ("1+w2*v", ("w", "1"), "CT"),
    ("w+w2*v", ("1", "w"), "TC"),
    ("w2+w2*v", ("0", "w2"), "AG"),
)

# the full 16-word DNA code generated by v(x^4+x^2+1) at length 6
SIXTEEN_WORD_TABLE = frozenset((
    "AAAAAAAAAAAA", "TAATTAATTAAT", "CAACCAACCAAC", "GAAGGAAGGAAG",
    "TAAATAAATAAA", "AAATAAATAAAT", "CAAACAAACAAA", "AAACAAACAAAC",
    "GAAAGAAAGAAA", "AAAGAAAGAAAG", "CAATCAATCAAT", "TAACTAACTAAC",
    "GAATGAATGAAT", "TAAGTAAGTAAG", "GAACGAACGAAC", "CAAGCAAGCAAG",
))


@dataclass
class CheckResult:
    name: str
    passed: bool
    summary: str
    details: list[str] = field(default_factory=list)
    seconds: float = 0.0


def _timed(func):
    def wrapper(*args, **kwargs):
        t0 = time.perf_counter()
        result = func(*args, **kwargs)
        result.seconds = time.perf_counter() - t0
        return result

    return wrapper


# ---------------------------------------------------------------------------
# sweep inventory
#
# Checks 6, 7, 8, 9 and 12 all quantify over "every single-generator code"
# of some shape at small lengths.  The inventory enumerates (n, t, shape,
# generator) tuples; codes above the materialization threshold are handled
# by the remainder shortcut (unit shape only; the shortcut is validated
# against the exhaustive check in the test suite).

MATERIALIZE_LIMIT = 1 << 16


def iter_generators(n: int, t: int, shapes=("unit", "v", "v1")):
    for shape in shapes:
        for g in cd.enumerate_right_divisors(n, t, leading=shape):
            yield shape, g


def _is_reversible(code: cd.SkewCyclicCode) -> bool:
    n, t = code.n, len(code.generators[0]) - 1
    if code.forms == (cd.FORM_UNIT,) and 16 ** (n - t) > MATERIALIZE_LIMIT:
        return dna.reversible_by_remainder(code)
    return dna.is_reversible(cd.materialize(code))


def _g_desc(n: int, shape: str, g: sp.Poly) -> str:
    return f"n={n} {shape} generator {sp.coeff_list_str(g)}"


# ---------------------------------------------------------------------------
# the checks


@_timed
def check_element_dna_table() -> CheckResult:
    """All 16 rows of the element / Gray pair / 2-base correspondence."""
    bad = []
    for x in ELEMENTS:
        token, gray_tokens, block = CORRESPONDENCE_TABLE[x]
        p, q = gray(x)
        got = (r_token(x), (gf4_token(p), gf4_token(q)), dna.encode_element(x))
        if got != (token, gray_tokens, block):
            bad.append(f"element {x}: expected {token} {gray_tokens} {block}, got {got}")
    return CheckResult(
        name="element-dna-table",
        passed=not bad,
        summary=f"16-row correspondence table, {len(bad)} mismatches",
        details=bad,
    )


@_timed
def check_unit_inverse_formula() -> CheckResult:
    """lambda = a+bv a unit iff a != 0 and a+b != 0; inverse a^-1 + b^2*v."""
    bad = []
    expected_units = {x for x in ELEMENTS if parts(x)[0] and parts(x)[0] ^ parts(x)[1]}
    if expected_units != set(UNITS) or len(UNITS) != 9:
        bad.append(f"unit set mismatch: {sorted(UNITS)}")
    from .algebra import gf4_inv, gf4_mul, from_parts

    for lam in sorted(UNITS):
        a, b = parts(lam)
        formula = from_parts(gf4_inv(a), gf4_mul(b, b))
        if r_mul(formula, lam) != 1:
            bad.append(f"({r_token(formula)}) * ({r_token(lam)}) != 1")
    return CheckResult(
        name="unit-inverse-formula",
        passed=not bad,
        summary=f"9 units, closed-form inverse verified, {len(bad)} failures",
        details=bad,
    )


@_timed
def check_palindromic_divisor_length10() -> CheckResult:
    """x^4+(v+w)x^2+1 right-divides x^10-1, is palindromic, code reversible."""
    g = sp.parse_poly("x^4 + (v+w)*x^2 + 1")
    bad = []
    if not sp.right_divides(g, sp.x_pow_minus_one(10)):
        bad.append("does not right-divide x^10 - 1")
    if not sp.is_palindromic(g):
        bad.append("not palindromic")
    code = cd.code_from_generator(10, g)
    if code.forms != (cd.FORM_UNIT,):
        bad.append(f"unexpected form {code.forms}")
    # 16^6 words: reversibility via the remainder membership path
    if not dna.reversible_by_remainder(code):
        bad.append("remainder-path reversibility check failed")
    return CheckResult(
        name="palindromic-divisor-length-10",
        passed=not bad,
        summary="length-10 palindromic generator: divisibility + reversibility",
        details=bad,
    )


@_timed
def check_theta_palindromic_divisor_length12() -> CheckResult:
    """x^3+(v+w2)x^2+(v+w)x+1 right-divides x^12-1 and is theta-palindromic."""
    g = sp.parse_poly("x^3 + (v+w2)*x^2 + (v+w)*x + 1")
    bad = []
    if not sp.right_divides(g, sp.x_pow_minus_one(12)):
        bad.append("does not right-divide x^12 - 1")
    if not sp.is_theta_palindromic(g):
        bad.append("not theta-palindromic")
    if not dna.reversible_by_remainder(cd.code_from_generator(12, g)):
        bad.append("remainder-path reversibility check failed")
    return CheckResult(
        name="theta-palindromic-divisor-length-12",
        passed=not bad,
        summary="length-12 theta-palindromic generator: divisibility + reversibility",
        details=bad,
    )


@_timed
def check_sixteen_codeword_table() -> CheckResult:
    """<v(x^4+x^2+1)> at length 6: exactly the 16 reference DNA strings."""
    code = cd.code_from_generator(6, sp.parse_poly("v(x^4+x^2+1)"))
    cs = cd.materialize(code)
    bad = []
    if cs.size != 16:
        bad.append(f"expected 16 codewords, got {cs.size}")
    got = frozenset(dna.encode_word(w) for w in cs.words)
    if got != SIXTEEN_WORD_TABLE:
        bad.append(f"missing: {sorted(SIXTEEN_WORD_TABLE - got)}")
        bad.append(f"extra: {sorted(got - SIXTEEN_WORD_TABLE)}")
    if not dna.is_reversible(cs):
        bad.append("not reversible")
    d = an.min_distance(cs, "lee")
    if d != 3:
        bad.append(f"min Lee distance {d}, expected 3")
    return CheckResult(
        name="sixteen-codeword-table",
        passed=not bad,
        summary="16-word length-6 code: DNA table, reversibility, distance 3",
        details=bad,
    )


@_timed
def check_even_length_even_degree_rule() -> CheckResult:
    """Even n, even degree, every shape: reversible iff generator palindromic."""
    bad = []
    total = 0
    for n in (2, 4, 6):
        for t in range(2, n, 2):
            for shape, g in iter_generators(n, t):
                code = cd.code_from_generator(n, g)
                total += 1
                if _is_reversible(code) != sp.is_palindromic(g):
                    bad.append(_g_desc(n, shape, g))
    return CheckResult(
        name="even-length-even-degree-rule",
        passed=not bad,
        summary=f"{total} codes swept, {len(bad)} equivalence failures",
        details=bad,
    )


@_timed
def check_even_length_odd_degree_rule() -> CheckResult:
    """Even n, odd degree, unit-monic: reversible iff a0*g is theta-palindromic."""
    bad = []
    total = 0
    for n in (4, 6):
        for t in range(1, n, 2):
            for g in cd.enumerate_right_divisors(n, t):
                code = cd.code_from_generator(n, g)
                total += 1
                rev = _is_reversible(code)
                tpal = sp.is_theta_palindromic(sp.scale(g[0], g))
                if rev != tpal:
                    bad.append(_g_desc(n, "unit", g) + f": reversible={rev}")
    return CheckResult(
        name="even-length-odd-degree-rule",
        passed=not bad,
        summary=f"{total} codes swept, {len(bad)} equivalence failures",
        details=bad,
    )


@_timed
def check_odd_length_cyclic_and_impossibility() -> CheckResult:
    """Odd n: every code is plain-cyclic; non-unit shapes: the claimed
    impossibility of reversibility (odd n, or even n with odd degree).

    The cyclicity half holds.  The impossibility half is false as stated:
    reducing x^n * (v*g1) modulo x^n - 1 lands on (v+1)*g1 when n is odd, so
    the code contains g1 and can be reversible; similar cofactor accidents
    exist at even lengths.  Counterexamples are listed in the details.
    """
    bad_cyclic = []
    total_cyclic = 0
    for n in (3, 5):
        for t in range(1, n):
            for shape, g in iter_generators(n, t):
                cs = cd.materialize(cd.code_from_generator(n, g))
                total_cyclic += 1
                for w in cs.words:
                    if (w[-1],) + w[:-1] not in cs.words:
                        bad_cyclic.append(_g_desc(n, shape, g))
                        break

    bad_rev = []
    total_rev = 0
    spots = [(n, t) for n in (3, 5) for t in range(1, n)]
    spots += [(n, t) for n in (4, 6) for t in range(1, n, 2)]
    for n, t in spots:
        for shape, g in iter_generators(n, t, shapes=("v", "v1")):
            cs = cd.materialize(cd.code_from_generator(n, g))
            total_rev += 1
            if dna.is_reversible(cs):
                bad_rev.append(_g_desc(n, shape, g) + f" is reversible ({cs.size} words)")

    details = [f"plain-shift closure: {total_cyclic} codes, {len(bad_cyclic)} failures"]
    details += bad_cyclic
    details.append(
        f"claimed-impossible reversibility: {total_rev} codes, {len(bad_rev)} reversible"
    )
    details += bad_rev
    return CheckResult(
        name="odd-length-cyclic-and-impossibility",
        passed=not bad_cyclic and not bad_rev,
        summary=(
            f"shift closure {total_cyclic} codes ok; "
            f"impossibility claim has {len(bad_rev)} counterexamples"
        ),
        details=details,
    )


@_timed
def check_reverse_complement_rules() -> CheckResult:
    """On the even-length sweeps: reverse-complement closed iff (reversible
    and all-ones word present); and the claim that no v/v1-shape code is
    complement-closed.

    The equivalence is a consequence of additivity and holds.  The
    no-complement claim fails on the same collapsing generators as the
    impossibility rule; counterexamples listed.
    """
    bad_iff = []
    bad_comp = []
    total = 0
    for n in (2, 4, 6):
        for t in range(1, n):
            for shape, g in iter_generators(n, t):
                try:
                    cs = cd.materialize(cd.code_from_generator(n, g), cap=MATERIALIZE_LIMIT)
                except cd.SizeCapExceeded:
                    continue
                total += 1
                rc = dna.is_reverse_complement_closed(cs)
                rev = dna.is_reversible(cs)
                ones = cd.all_ones_in(cs)
                if rc != (rev and ones):
                    bad_iff.append(_g_desc(n, shape, g))
                if shape != "unit" and dna.is_complement_closed(cs):
                    bad_comp.append(_g_desc(n, shape, g) + " is complement-closed")
    details = [f"{total} codes; equivalence failures: {len(bad_iff)}"]
    details += bad_iff
    details.append(f"complement-closed non-unit codes: {len(bad_comp)}")
    details += bad_comp
    return CheckResult(
        name="reverse-complement-rules",
        passed=not bad_iff and not bad_comp,
        summary=(
            f"rc-equivalence clean on {total} codes; "
            f"no-complement claim has {len(bad_comp)} counterexamples"
        ),
        details=details,
    )


@_timed
def check_image_rotation_identity(seed: int = DEFAULT_SEED) -> CheckResult:
    """swap-pairs(rotate-right-2(image)) = image(skew shift), all words.

    Exhaustive for n <= 2, seeded random sampling above.
    """
    bad = []
    total = 0
    for n in (1, 2):
        for word in itertools.product(ELEMENTS, repeat=n):
            total += 1
            if not an.image_shift_commutes(word):
                bad.append(str(word))
    rng = random.Random(seed)
    for n in (3, 4, 5, 6):
        for _ in range(10_000):
            word = tuple(rng.randrange(16) for _ in range(n))
            total += 1
            if not an.image_shift_commutes(word):
                bad.append(str(word))
    return CheckResult(
        name="image-rotation-identity",
        passed=not bad,
        summary=f"{total} words checked, {len(bad)} identity failures",
        details=bad[:20],
    )


@_timed
def check_distance_preservation(seed: int = DEFAULT_SEED) -> CheckResult:
    """Lee distance equals Gray-image Hamming distance.

    Exhaustive on all 256 element pairs, then 10^4 random word pairs per
    length up to 6.
    """
    bad = []
    for x in ELEMENTS:
        for y in ELEMENTS:
            dl = an.lee_distance((x,), (y,))
            dh = an.hamming_distance(an.gray_image((x,)), an.gray_image((y,)))
            if dl != dh:
                bad.append(f"elements {r_token(x)}, {r_token(y)}: {dl} != {dh}")
    rng = random.Random(seed)
    for n in range(1, 7):
        for _ in range(10_000):
            u = tuple(rng.randrange(16) for _ in range(n))
            w = tuple(rng.randrange(16) for _ in range(n))
            if an.lee_distance(u, w) != an.hamming_distance(
                an.gray_image(u), an.gray_image(w)
            ):
                bad.append(f"words {u}, {w}")
    return CheckResult(
        name="distance-preservation",
        passed=not bad,
        summary=f"256 element pairs + 60000 word pairs, {len(bad)} failures",
        details=bad[:20],
    )


@_timed
def check_minimal_degree_forms() -> CheckResult:
    """Minimal-degree words with non-unit leading coefficient factor as
    v*g1 or (v+1)*g1 with g1 over GF(4), across the whole sweep inventory."""
    bad = []
    total = 0
    scanned = 0
    for n in (2, 3, 4, 5, 6):
        for t in range(1, n):
            for shape, g in iter_generators(n, t):
                try:
                    cs = cd.materialize(cd.code_from_generator(n, g), cap=MATERIALIZE_LIMIT)
                except cd.SizeCapExceeded:
                    continue
                total += 1
                report = cd.minimal_degree_scan(cs)
                if report.exists:
                    scanned += 1
                    if not report.all_factor:
                        bad.append(
                            _g_desc(n, shape, g)
                            + f": degree {report.degree} offenders {report.forms}"
                        )
    return CheckResult(
        name="minimal-degree-forms",
        passed=not bad,
        summary=f"{scanned} of {total} codes had non-unit-leading words; {len(bad)} bad forms",
        details=bad,
    )


ALL_CHECKS = (
    check_element_dna_table,
    check_unit_inverse_formula,
    check_palindromic_divisor_length10,
    check_theta_palindromic_divisor_length12,
    check_sixteen_codeword_table,
    check_even_length_even_degree_rule,
    check_even_length_odd_degree_rule,
    check_odd_length_cyclic_and_impossibility,
    check_reverse_complement_rules,
    check_image_rotation_identity,
    check_distance_preservation,
    check_minimal_degree_forms,
)


def run_all(seed: int = DEFAULT_SEED) -> list[CheckResult]:
    results = []
    for check in ALL_CHECKS:
        if check in (check_image_rotation_identity, check_distance_preservation):
            results.append(check(seed=seed))
        else:
            results.append(check())
    return results
