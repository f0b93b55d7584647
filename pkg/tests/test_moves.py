"""Reidemeister moves: detection, application, replay safety."""

import random

import pytest
from hypothesis import given, settings, strategies as st

from lensurgery.diagram import DiagramError, PlanarDiagram, trefoil, \
    figure_eight
from lensurgery.invariants import (alexander_polynomial, determinant,
                                   jones_polynomial)
from lensurgery.moves import (apply_move, apply_r1_addition,
                              apply_r2_addition, r1_removal_sites,
                              r2_removal_sites, r3_sites, random_moves)


def test_r1_add_then_remove():
    t = trefoil()
    for variant in range(4):
        kinked = apply_r1_addition(t, ("r1+", 1, variant))
        assert kinked.crossing_count == 4
        sites = r1_removal_sites(kinked)
        assert sites
        back = apply_move(kinked, sites[0])
        assert back.canonical_code == t.canonical_code


def test_r2_add_then_remove():
    t = trefoil()
    added = apply_r2_addition(t, ("r2+", 1, 3, True))
    assert added.crossing_count == 5
    sites = r2_removal_sites(added)
    assert sites
    codes = {apply_move(added, s).canonical_code for s in sites}
    assert t.canonical_code in codes


def test_r3_preserves_jones():
    f8 = figure_eight()
    grown = apply_r2_addition(f8, ("r2+", 1, 4, True))
    sites = r3_sites(grown)
    if not sites:
        pytest.skip("no triangle on this build")
    slid = apply_move(grown, sites[0])
    assert jones_polynomial(slid) == jones_polynomial(grown)
    assert slid.crossing_count == grown.crossing_count


def test_stale_descriptor_rejected():
    t = trefoil()
    with pytest.raises(DiagramError):
        apply_move(t, ("r1-", 0, 0))
    with pytest.raises(DiagramError):
        apply_move(t, ("r2-", 0, 1))
    with pytest.raises(DiagramError):
        apply_move(t, ("nonsense",))


def test_unknot_two_crossing_diagrams_reduce():
    # a curl on a curl: two crossings, reducible to the round unknot
    d = PlanarDiagram(((1, 2, 2, 3), (3, 4, 4, 1)))
    sites = r1_removal_sites(d)
    assert sites
    once = apply_move(d, sites[0])
    twice = apply_move(once, r1_removal_sites(once)[0])
    assert twice.crossing_count == 0
    assert twice.component_count == 1


@settings(deadline=None, max_examples=25)
@given(st.integers(0, 10 ** 9), st.integers(1, 25))
def test_random_moves_preserve_invariants(seed, count):
    base = trefoil()
    rng = random.Random(seed)
    moved, log = random_moves(base, count, rng, max_crossings=12)
    assert determinant(moved) == 3
    assert jones_polynomial(moved) == jones_polynomial(base)
    assert alexander_polynomial(moved) == alexander_polynomial(base)
    # the log replays to the same diagram
    replay = base
    for desc in log:
        replay = apply_move(replay, desc)
    assert replay.canonical_code == moved.canonical_code
