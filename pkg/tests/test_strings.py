import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import dna
from scsrc.errors import EmptyInstanceError, InvalidInputError
from scsrc.strings import (
    DNA,
    Alphabet,
    Instance,
    all_pairs_overlaps,
    borders,
    dist,
    equivalent,
    factor,
    find,
    merge,
    normalize,
    overlap,
    period,
    prefix,
    rc,
)

E = DNA.encode
dna_strings = st.lists(st.integers(0, 3), min_size=1, max_size=16).map(tuple)


@pytest.mark.parametrize("s, want", [("ACG", "CGT"), ("ACGT", "ACGT"), ("A", "T")])
def test_rc_dna(s, want):
    assert DNA.decode(rc(E(s), DNA)) == want


def test_rc_identity_alphabet_is_reversal():
    a = Alphabet.identity(2, "ab")
    assert a.decode(rc(a.encode("aba"), a)) == "aba"
    assert a.decode(rc(a.encode("abb"), a)) == "bba"


def test_rc_rejects_foreign_symbol():
    with pytest.raises(InvalidInputError):
        rc((0, 4), DNA)


@pytest.mark.parametrize("s, t, ov", [("TACG", "CGTA", 2), ("AAC", "TTG", 0), ("AAA", "AAA", 2), ("CAA", "AAC", 2)])
def test_overlap_examples(s, t, ov):
    assert overlap(E(s), E(t)) == ov


def test_overlap_rejects_empty():
    with pytest.raises(InvalidInputError):
        overlap((), (0,))


@pytest.mark.parametrize(
    "s, t, d, p", [("TACG", "CGTA", 2, "TA"), ("CAA", "AAC", 1, "C"), ("AAC", "TTG", 3, "AAC")]
)
def test_dist_and_prefix(s, t, d, p):
    assert dist(E(s), E(t)) == d
    assert DNA.decode(prefix(E(s), E(t))) == p


@pytest.mark.parametrize("xs, want", [(["TACG", "CGTA"], "TACGTA"), (["AAC", "CAA"], "AACAA"), (["AAC"], "AAC")])
def test_merge_examples(xs, want):
    assert DNA.decode(merge([E(x) for x in xs])) == want


def test_merge_empty_list():
    with pytest.raises(InvalidInputError):
        merge([])


@pytest.mark.parametrize("s, p, f", [("ACAC", 2, "AC"), ("AACAA", 3, "AAC"), ("A", 1, "A"), ("ACGT", 4, "ACGT")])
def test_period_and_factor(s, p, f):
    assert period(E(s)) == p
    assert DNA.decode(factor(E(s))) == f


def test_borders_kmp_table():
    assert borders(E("AACAA")) == [0, 1, 0, 1, 2]


@pytest.mark.parametrize(
    "s, t, want", [("ACAC", "CACA", True), ("AACAA", "CAAC", True), ("AC", "AA", False), ("AACAA", "ACAAC", True)]
)
def test_equivalent_examples(s, t, want):
    assert equivalent(E(s), E(t)) is want


def test_find():
    assert find(E("CA"), E("ACAC")) == 1
    assert find(E("GG"), E("ACAC")) == -1
    assert find(E("CA"), E("ACACA"), start=2) == 3


def test_normalize_examples():
    assert normalize(dna("TACG", "CGTA")).texts() == ["TACG"]
    assert normalize(dna("AAC", "CAA")).texts() == ["AAC", "CAA"]
    assert normalize(dna("ACGT", "CG")).texts() == ["ACGT"]
    # Containment in the reverse complement counts too.
    assert normalize(dna("AACC", "GT")).texts() == ["AACC"]
    assert normalize(dna("", "AC", "AC")).texts() == ["AC"]


def test_normalize_empty():
    with pytest.raises(EmptyInstanceError):
        normalize(Instance(DNA, ()))
    with pytest.raises(EmptyInstanceError):
        normalize(dna(""))


def test_oriented_copies():
    assert [DNA.decode(s) for s in dna("AAC", "CAA").oriented()] == ["AAC", "GTT", "CAA", "TTG"]


def test_all_pairs_examples():
    assert all_pairs_overlaps([E("TACG"), E("CGTA")]) == [[0, 2], [2, 0]]
    assert all_pairs_overlaps([E("AAA")]) == [[2]]
    with pytest.raises(InvalidInputError):
        all_pairs_overlaps([])


@settings(max_examples=200, deadline=None)
@given(st.lists(dna_strings, min_size=1, max_size=6))
def test_automaton_matches_naive(strings):
    assert all_pairs_overlaps(strings) == all_pairs_overlaps(strings, method="naive")


@settings(max_examples=300, deadline=None)
@given(dna_strings, dna_strings)
def test_overlap_rc_symmetry(s, t):
    assert overlap(s, t) == overlap(rc(t, DNA), rc(s, DNA))
    assert rc(rc(s, DNA), DNA) == s


@settings(max_examples=300, deadline=None)
@given(dna_strings)
def test_period_is_smallest_shift(s):
    p = period(s)
    assert all(s[i] == s[i + p] for i in range(len(s) - p))
    assert not any(all(s[i] == s[i + q] for i in range(len(s) - q)) for q in range(1, p))


def test_alphabet_validation():
    with pytest.raises(InvalidInputError):
        Alphabet(2, (1, 1))
    with pytest.raises(InvalidInputError):
        Alphabet(2, (0, 1), ("a", "a"))
    with pytest.raises(InvalidInputError):
        Alphabet.from_pairs([("a", "b"), ("b", "c")])
    a = Alphabet.from_pairs([("a", "b"), ("c", "c")])
    assert a.complement == (1, 0, 2)
    assert a.pairs() == [(0, 1), (2, 2)]
