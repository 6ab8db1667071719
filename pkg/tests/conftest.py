"""Shared fixtures: a deliberately naive closure oracle and reference data.

The oracle rebuilds a code as a literal work-queue fixpoint (skew shift,
all 16 scalar multiples, pairwise sums).  It is quadratic and slow on
purpose; the packed span engine is validated against it, never the other
way around.
"""

import pytest

from skewdna import codes as cd
from skewdna import skewpoly as sp
from skewdna.algebra import r_mul

# transcribed by hand: the sixteen DNA strings of the length-6 code
# generated by v(x^4 + x^2 + 1)
REFERENCE_DNA_STRINGS = (
    "AAAAAAAAAAAA", "TAATTAATTAAT", "CAACCAACCAAC", "GAAGGAAGGAAG",
    "TAAATAAATAAA", "AAATAAATAAAT", "CAAACAAACAAA", "AAACAAACAAAC",
    "GAAAGAAAGAAA", "AAAGAAAGAAAG", "CAATCAATCAAT", "TAACTAACTAAC",
    "GAATGAATGAAT", "TAAGTAAGTAAG", "GAACGAACGAAC", "CAAGCAAGCAAG",
)


def naive_closure_impl(n, gens, cap=5000):
    words = {(0,) * n}
    queue = [cd.poly_to_word(g, n) for g in gens]
    words.update(queue)
    while queue:
        c = queue.pop()
        new = [cd.skew_shift(c)]
        new += [tuple(r_mul(lam, x) for x in c) for lam in range(16)]
        new += [tuple(a ^ b for a, b in zip(c, other)) for other in list(words)]
        for wd in new:
            if wd not in words:
                words.add(wd)
                queue.append(wd)
                if len(words) > cap:
                    raise RuntimeError("naive closure grew past the cap")
    return frozenset(words)


@pytest.fixture
def naive_closure():
    return naive_closure_impl


@pytest.fixture
def reference_dna_strings():
    return REFERENCE_DNA_STRINGS


@pytest.fixture(scope="session")
def sixteen_word_code():
    """The length-6 code <v(x^4 + x^2 + 1)>, materialized."""
    return cd.materialize(cd.code_from_generator(6, sp.parse_poly("v(x^4+x^2+1)")))
