import pytest

from alphacrit.covers import (
    CoverError,
    CoverFamily,
    TheoremViolationError,
    Tok4PresentError,
    cover_from_theorem,
    enumerate_odd_cycles,
    minmax_certificate,
    rho_tilde,
    verify_cover,
)
from alphacrit.graphs import (
    Edge,
    SizeLimitError,
    complete_graph,
    cycle_graph,
    disjoint_union,
    parse_graph6,
    path_graph,
)
from alphacrit.stability import alpha
from alphacrit.subdivisions import contains_tok4, verify_tok4
from oracles import brute_odd_cycles, brute_rho

PETERSEN = parse_graph6("IsP@PGXD_")


def test_enumerate_odd_cycles_frozen():
    assert enumerate_odd_cycles(complete_graph(4)) == [
        (0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3),
    ]
    assert enumerate_odd_cycles(cycle_graph(6)) == []
    assert enumerate_odd_cycles(cycle_graph(5)) == [(0, 1, 2, 3, 4)]
    # 12 pentagons, and one vertex deletion leaves 2 nine-cycles each way
    cycles = enumerate_odd_cycles(PETERSEN)
    lengths = sorted(len(c) for c in cycles)
    assert lengths == [5] * 12 + [9] * 20
    with pytest.raises(SizeLimitError):
        enumerate_odd_cycles(complete_graph(11))


def test_enumerate_odd_cycles_matches_oracle(corpus6):
    for g in corpus6:
        if g.n > 6:
            continue
        assert enumerate_odd_cycles(g) == brute_odd_cycles(g)


def test_verify_cover_violations():
    c5 = cycle_graph(5)
    ok = CoverFamily(c5, (), (), ((0, 1, 2, 3, 4),), 4)
    assert verify_cover(c5, ok) == 4

    cases = [
        (CoverFamily(cycle_graph(3), (0, 1, 2), (), (), 6), "host-mismatch"),
        (CoverFamily(c5, (0, 9), (), ((0, 1, 2, 3, 4),), 8), "bad-vertex"),
        (CoverFamily(c5, (), (Edge(0, 2),), ((0, 1, 2, 3, 4),), 6), "bad-edge"),
        (CoverFamily(c5, (0, 1), (), ((2, 4, 3),), 6), "non-cycle"),
        (CoverFamily(c5, (4,), (Edge(0, 1),), ((1, 2, 3),), 6), "non-cycle"),
        (CoverFamily(c5, (0, 1, 2), (), (), 6), "uncovered-vertex"),
        (CoverFamily(c5, (), (), ((0, 1, 2, 3, 4),), 5), "cost-mismatch"),
    ]
    for family, tag in cases:
        with pytest.raises(CoverError) as info:
            verify_cover(c5, family)
        assert info.value.violation == tag


def test_verify_cover_rejects_even_cycles():
    c6 = cycle_graph(6)
    family = CoverFamily(c6, (), (), ((0, 1, 2, 3, 4, 5),), 5)
    with pytest.raises(CoverError) as info:
        verify_cover(c6, family)
    assert info.value.violation == "even-cycle"


def test_rho_tilde_matches_brute_oracle(corpus6):
    for g in corpus6:
        if g.n > 5:
            continue
        doubled, family = rho_tilde(g)
        assert doubled == brute_rho(g)
        assert verify_cover(g, family) == doubled


def test_rho_tilde_frozen_values():
    cases = [
        (cycle_graph(5), 4),
        (cycle_graph(7), 6),
        (complete_graph(4), 4),
        (path_graph(2), 2),
        (path_graph(5), 6),
        (cycle_graph(6), 6),
    ]
    for g, want in cases:
        doubled, family = rho_tilde(g)
        assert doubled == want
        assert verify_cover(g, family) == want
    doubled, family = rho_tilde(cycle_graph(5))
    assert family.to_obj() == {
        "vertices": [], "edges": [], "odd_cycles": [[0, 1, 2, 3, 4]], "cost_times_2": 4,
    }
    # K4 shows the strict gap: one vertex plus one triangle cost 2, alpha is 1
    doubled, family = rho_tilde(complete_graph(4))
    assert doubled == 4 and 2 * alpha(complete_graph(4)) == 2


def test_rho_tilde_bounds_alpha(corpus6):
    for g in corpus6:
        doubled, _ = rho_tilde(g)
        assert 2 * alpha(g) <= doubled


def test_rho_tilde_size_cap():
    with pytest.raises(SizeLimitError):
        rho_tilde(PETERSEN)


def test_cover_from_theorem_frozen():
    family = cover_from_theorem(cycle_graph(6))
    assert family.to_obj() == {
        "vertices": [], "edges": [[0, 5], [1, 2], [3, 4]], "odd_cycles": [], "cost_times_2": 6,
    }


def test_cover_from_theorem_requires_tok4_free():
    with pytest.raises(Tok4PresentError) as info:
        cover_from_theorem(complete_graph(4))
    assert verify_tok4(complete_graph(4), info.value.certificate)


def test_cover_from_theorem_equality_sweep(corpus6):
    for g in corpus6:
        if contains_tok4(g):
            continue
        family = cover_from_theorem(g)
        assert verify_cover(g, family) == 2 * alpha(g)
        doubled, _ = rho_tilde(g)
        assert doubled == 2 * alpha(g)


def test_cover_from_theorem_on_unions():
    g = disjoint_union(cycle_graph(5), path_graph(4))
    family = cover_from_theorem(g)
    assert verify_cover(g, family) == 2 * alpha(g)


def test_minmax_certificate():
    for g in (cycle_graph(5), path_graph(6), cycle_graph(9)):
        stable, family = minmax_certificate(g)
        assert stable.host == g and family.host == g
        assert 2 * stable.claimed_alpha == family.doubled_cost
