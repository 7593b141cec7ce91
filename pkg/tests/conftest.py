import random

import pytest

from scsrc.strings import DNA, Alphabet, Instance, normalize, rc


def dna(*texts):
    return Instance.from_text(texts)


def random_dna_instance(rng: random.Random, m_lo=2, m_hi=7, len_lo=3, len_hi=12) -> Instance:
    """Normalized DNA instance with m in [m_lo, m_hi].

    Reads are cut from a random, a short-motif periodic, or an unrelated source
    so that both overlap-rich and periodic cycles show up. The flip
    probability is drawn per instance.
    """
    while True:
        mode = rng.choice(("genome", "periodic", "free"))
        flip = rng.choice((0.0, 0.25, 0.5, 1.0))
        m = rng.randint(m_lo, m_hi)
        if mode == "genome":
            genome = [rng.randrange(4) for _ in range(rng.randint(len_hi, 6 * len_hi))]
        elif mode == "periodic":
            motif = [rng.randrange(4) for _ in range(rng.randint(1, 4))]
            genome = [motif[i % len(motif)] for i in range(3 * len_hi)]
            for _ in range(rng.randint(0, 2)):
                genome[rng.randrange(len(genome))] = rng.randrange(4)
        reads = []
        for _ in range(m):
            n = rng.randint(len_lo, len_hi)
            if mode == "free":
                s = tuple(rng.randrange(4) for _ in range(n))
            else:
                start = rng.randint(0, len(genome) - n)
                s = tuple(genome[start : start + n])
            if rng.random() < flip:
                s = rc(s, DNA)
            reads.append(s)
        inst = normalize(Instance(DNA, tuple(reads)))
        if m_lo <= len(inst) <= m_hi:
            return inst


def random_alphabet(rng: random.Random, k: int) -> Alphabet:
    """Random involution on k symbols."""
    symbols = list(range(k))
    rng.shuffle(symbols)
    cm = list(range(k))
    i = 0
    while i + 1 < k:
        if rng.random() < 0.6:
            a, b = symbols[i], symbols[i + 1]
            cm[a], cm[b] = b, a
            i += 2
        else:
            i += 1
    return Alphabet(k, tuple(cm))


def random_instance(rng: random.Random, alphabet: Alphabet, m_lo, m_hi, len_lo, len_hi) -> Instance:
    while True:
        m = rng.randint(m_lo, m_hi)
        strings = tuple(
            tuple(rng.randrange(alphabet.size) for _ in range(rng.randint(len_lo, len_hi))) for _ in range(m)
        )
        inst = normalize(Instance(alphabet, strings))
        if m_lo <= len(inst) <= m_hi:
            return inst


@pytest.fixture
def rng():
    return random.Random(12345)


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed"):
        for rep in terminalreporter.stats.get(outcome, []):
            if getattr(rep, "when", None) != "call" or "test_acceptance.py" not in rep.nodeid:
                continue
            props = dict(rep.user_properties)
            if "criterion" in props:
                verdict = "PASS" if outcome == "passed" else "FAIL"
                lines.append((props["criterion"], verdict, props.get("detail", "")))
    if lines:
        terminalreporter.section("acceptance criteria")
        for n, verdict, detail in sorted(lines):
            terminalreporter.write_line(f"criterion {n:2d} {verdict}  {detail}")
