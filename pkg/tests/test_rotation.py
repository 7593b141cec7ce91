import itertools
import random

import pytest

from conftest import dna
from scsrc.errors import InvalidCycleError
from scsrc.rotation import (
    Representative,
    check_properties,
    check_rotation_bounds,
    critical_point,
    extract_representative,
    local_period,
)
from scsrc.strings import DNA, merge, period

E = DNA.encode


@pytest.mark.parametrize("x", ["AC", "AAC", "A", "ACAAC", "CAACA"])
def test_critical_point_examples(x):
    s = E(x)
    w = period(s)
    p = critical_point(s)
    assert 1 <= p <= w
    assert local_period(s[:w], p % w) == w


def test_critical_point_unary():
    assert critical_point(E("A")) == 1
    assert critical_point(E("AAAA")) == 1


def test_critical_point_random():
    rng = random.Random(1)
    for _ in range(1500):
        s = tuple(rng.randrange(rng.choice((2, 4))) for _ in range(rng.randint(1, 12)))
        w = period(s)
        assert local_period(s[:w], critical_point(s) % w) == w


def _doubled_window_candidates(strs, w):
    """Substrings of merge(rotation)+merge(rotation) with period w, by enumeration."""
    window = merge(list(strs) + list(strs))
    out = set()
    for i, j in itertools.combinations(range(len(window) + 1), 2):
        t = window[i:j]
        if len(t) >= w and period(t) == w:
            out.add(t)
    return out


def test_representative_of_two_cycle():
    # Oriented vertices 0 = AAC, 2 = CAA; cycle weight dist(AAC,CAA) + dist(CAA,AAC) = 2 + 1.
    lookup = dna("AAC", "CAA").oriented()
    rep = extract_representative((0, 2), lookup)
    assert rep.weight == 3
    assert DNA.decode(rep.text) == "CAAC"
    assert rep.text in _doubled_window_candidates(rep.strings, 3)
    assert check_properties(rep) == []


def test_representative_of_full_period_cycle():
    lookup = dna("ACG", "GTA").oriented()
    rep = extract_representative((0, 2), lookup)
    w = rep.weight
    assert period(rep.text) == w
    assert rep.text in _doubled_window_candidates(rep.strings, w)
    assert check_properties(rep) == []


@pytest.mark.parametrize("cycle", [(0,), (0, 1), (0, 2, 3)])
def test_malformed_cycles(cycle):
    lookup = dna("AAC", "CAA").oriented()
    with pytest.raises(InvalidCycleError):
        extract_representative(cycle, lookup)


def test_period_mismatch_rejected():
    # A cycle with zero overlaps whose merge is a square has period below its weight.
    lookup = dna("AC", "AC").oriented()
    with pytest.raises(InvalidCycleError):
        extract_representative((0, 2), lookup)


def test_rotation_bounds():
    a = extract_representative((0, 2), dna("AAC", "CAA").oriented())
    b = extract_representative((0, 2), dna("GGA", "AGG").oriented())
    assert check_rotation_bounds([a], DNA).ok
    report = check_rotation_bounds([a, b], DNA)
    assert report.ok and report.checked == 4


def test_rotation_bounds_catch_bad_rotation():
    good = extract_representative((0, 2), dna("AAC", "CAA").oriented())
    # Two long windows of the same periodic string overlap by 6 > 2/3 * (3 + 3).
    a = Representative((0, 2), good.strings, E("CAACAAC"), 0, 3)
    b = Representative((0, 2), good.strings, E("AACAACA"), 0, 3)
    report = check_rotation_bounds([a, b], DNA)
    assert not report.ok
    assert report.violation[:2] == (0, 1) and report.violation[3] == 6
    assert "violated" in str(report)


def test_critical_point_is_leftmost():
    assert critical_point(E("AAC")) == 2
    rng = random.Random(3)
    for _ in range(800):
        s = tuple(rng.randrange(3) for _ in range(rng.randint(1, 12)))
        w = period(s)
        p = critical_point(s)
        assert all(local_period(s[:w], q) != w for q in range(1, p))
