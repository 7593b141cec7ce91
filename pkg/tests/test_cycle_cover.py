import random

import pytest

from conftest import dna, random_dna_instance
from scsrc.cycle_cover import (
    arc_weight,
    build_gadget_graph,
    decompose_and_select,
    extract_F,
    min_cycle_cover,
    min_cycle_cover_graph,
    mirror,
)
from scsrc.errors import InternalInvariantError, InvalidInputError, TooSmallError
from scsrc.exact import brute_force_pm, opt_cycle_cover, opt_scsrc
from scsrc.graphs import build_oriented_graph

AAC, GTT, CAA, TTG = 0, 1, 2, 3


@pytest.fixture
def g2():
    return build_oriented_graph(dna("AAC", "CAA"))


def test_gadget_two_strings(g2):
    gg = build_gadget_graph(g2)
    assert gg.graph.n == 12
    w = {(a, b): x for a, b, x in gg.graph.edges}
    assert w[(gg.out_vertex(AAC), gg.in_vertex(CAA))] == 1
    assert w[(gg.out_vertex(CAA), gg.in_vertex(AAC))] == 2
    assert w[(gg.out_vertex(GTT), gg.in_vertex(TTG))] == 2
    assert w[(gg.out_vertex(TTG), gg.in_vertex(GTT))] == 1
    aux = [e for e in gg.graph.edges if max(e[:2]) >= 8]
    assert len(aux) == 8 and all(x == 0 for *_, x in aux)
    assert (gg.aux_vertex(AAC), gg.in_vertex(GTT), 0) in gg.graph.edges


def test_gadget_counts_m3():
    gg = build_gadget_graph(build_oriented_graph(dna("AAC", "CAA", "GAT")))
    aux_edges = [e for e in gg.graph.edges if max(e[:2]) >= 12]
    assert gg.graph.n == 18 and len(aux_edges) == 12


def test_gadget_too_small():
    with pytest.raises(TooSmallError):
        build_gadget_graph(build_oriented_graph(dna("AAC")))
    with pytest.raises(TooSmallError):
        min_cycle_cover(dna("AAC"))


def test_F_for_two_strings(g2):
    gg = build_gadget_graph(g2)
    best = brute_force_pm(gg.graph)
    F = extract_F(best, gg)
    assert len(F) == 2
    assert arc_weight(F, g2) == best.weight == 3


def test_mirror_and_constraint():
    assert mirror(frozenset({(CAA, AAC), (TTG, GTT)})) == frozenset({(GTT, TTG), (AAC, CAA)})
    assert mirror(frozenset({(AAC, CAA)})) == frozenset({(TTG, GTT)})
    # GTT leaves while its partner AAC is entered: the gadget forbids this pair.
    with pytest.raises(InvalidInputError):
        mirror(frozenset({(CAA, AAC), (GTT, TTG)}))


def test_cover_two_strings(g2):
    tr = min_cycle_cover_graph(g2)
    assert tr.cover.weight_dist == 3
    assert tr.cover.cycles in (((AAC, CAA),), ((CAA, AAC),))
    assert arc_weight(tr.F, g2) == arc_weight(tr.F_bar, g2)
    assert "# F weight=3" in tr.dump()


def test_cover_bounded_by_opt():
    inst = dna("AAC", "CAA")
    assert min_cycle_cover(inst).weight_dist == opt_cycle_cover(inst) == 3 <= opt_scsrc(inst).length


def test_decompose_rejects_self_mirror(g2):
    # AAC -> GTT is not an arc, but a 2-cycle through both copies is exactly what must be refused.
    with pytest.raises(InternalInvariantError):
        decompose_and_select(frozenset({(AAC, GTT), (GTT, AAC), (CAA, TTG), (TTG, CAA)}), g2)


def test_cover_matches_exhaustion():
    rng = random.Random(2)
    for _ in range(120):
        inst = random_dna_instance(rng, 2, 5)
        cover = min_cycle_cover(inst)
        cover.validate()
        assert cover.weight_dist == opt_cycle_cover(inst)
