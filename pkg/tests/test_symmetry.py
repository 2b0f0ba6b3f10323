"""Symmetry: permutation action, isomorphism witnesses, groups, orbits, keys."""

import random

import pytest

from nsim.board import BoardError, Position, edge_index, from_edge_lists, num_edges, status
from nsim.presets import build_preset
from nsim.symmetry import (
    BoardTooLargeError,
    apply_permutation,
    automorphism_group,
    canonical_key,
    compose,
    find_color_swap_isomorphism,
    find_isomorphism,
    identity,
    invert,
    perm_edge,
    uncolored_edge_orbits,
)

DOUBLING = (0, 2, 4, 1, 3)  # i -> 2i mod 5


def drawn_k5(n=5):
    return build_preset("drawn-k5", n)


def _random_perm(n, rng):
    s = list(range(n))
    rng.shuffle(s)
    return tuple(s)


# --- permutation action ---------------------------------------------------

def test_identity_fixes_position():
    p = drawn_k5()
    assert apply_permutation(p, identity(5)) == p


def test_status_invariant_under_relabeling():
    rng = random.Random(71)
    p = drawn_k5(6)
    for _ in range(20):
        s = _random_perm(6, rng)
        assert status(apply_permutation(p, s)) == status(p)


def test_doubling_map_sends_cycle_to_chords():
    cycle = sum(
        1 << edge_index(i, j, 5) for i, j in [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]
    )
    image = apply_permutation(Position(5, cycle, 0), DOUBLING)
    chords = {(0, 2), (1, 3), (2, 4), (0, 3), (1, 4)}
    assert set(image.green_pairs()) == chords  # colors stay green
    assert image.red == 0


def test_apply_permutation_rejects_bad_perms():
    p = drawn_k5()
    with pytest.raises(BoardError):
        apply_permutation(p, (0, 1, 2, 3))
    with pytest.raises(BoardError):
        apply_permutation(p, (0, 0, 1, 2, 3))


def test_compose_and_invert():
    rng = random.Random(5)
    for _ in range(20):
        a, b = _random_perm(7, rng), _random_perm(7, rng)
        p = build_preset("thm3", 7)
        assert apply_permutation(p, compose(a, b)) == apply_permutation(
            apply_permutation(p, b), a
        )
        assert compose(a, invert(a)) == identity(7)


# --- isomorphism search --------------------------------------------------------

def test_rotated_drawn_k5_has_witness():
    p = drawn_k5()
    rotation = (1, 2, 3, 4, 0)
    q = apply_permutation(p, rotation)
    w = find_isomorphism(p, q)
    assert w is not None
    assert apply_permutation(p, w) == q


def test_missing_edge_kills_isomorphism():
    p = drawn_k5()
    q = Position(5, p.green, p.red & ~(1 << edge_index(0, 2, 5)))
    assert find_isomorphism(p, q) is None


def test_single_edge_positions_isomorphic():
    p = from_edge_lists(6, [(0, 1)], [])
    q = from_edge_lists(6, [(3, 4)], [])
    w = find_isomorphism(p, q)
    assert w is not None
    assert apply_permutation(p, w) == q


def test_witness_is_lexicographic_minimum():
    p = drawn_k5()
    # all 10 automorphisms exist; identity is the lex-min witness to itself
    assert find_isomorphism(p, p) == identity(5)
    assert find_color_swap_isomorphism(p, p) == DOUBLING


def test_size_mismatch_raises():
    with pytest.raises(BoardError):
        find_isomorphism(drawn_k5(5), drawn_k5(6))


def test_witness_validity_on_random_pairs():
    rng = random.Random(314)
    for _ in range(30):
        n = rng.choice([5, 6])
        edges = rng.sample(range(num_edges(n)), rng.randint(2, 7))
        half = len(edges) - len(edges) // 2
        p = Position(n, sum(1 << e for e in edges[:half]), sum(1 << e for e in edges[half:]))
        s = _random_perm(n, rng)
        q = apply_permutation(p, s)
        w = find_isomorphism(p, q)
        assert w is not None and apply_permutation(p, w) == q


# --- color-swap isomorphism ------------------------------------------------------

def test_drawn_k5_swap_self():
    p = drawn_k5()
    w = find_color_swap_isomorphism(p, p)
    assert w is not None
    image = apply_permutation(p, w)
    assert image.green == p.red and image.red == p.green


def test_two_copy_board_swap_self():
    s = build_preset("thm1", k=2)
    w = find_color_swap_isomorphism(s, s)
    assert w is not None
    image = apply_permutation(s, w)
    assert image.green == s.red and image.red == s.green


def test_unbalanced_position_has_no_swap_witness():
    p = from_edge_lists(6, [(0, 1)], [])
    assert find_color_swap_isomorphism(p, p) is None


# --- automorphism groups ---------------------------------------------------------

def test_empty_k5_has_full_symmetric_group():
    assert len(automorphism_group(Position.empty(5))) == 120


def test_drawn_k5_has_dihedral_symmetry():
    group = automorphism_group(drawn_k5())
    assert len(group) == 10


def test_two_copy_board_automorphisms():
    assert len(automorphism_group(build_preset("thm1", k=2))) == 200


def test_group_axioms():
    group = automorphism_group(drawn_k5())
    members = set(group)
    assert identity(5) in members
    for a in group:
        assert invert(a) in members
        for b in group:
            assert compose(a, b) in members


# --- canonical keys ---------------------------------------------------------------

def test_canonical_key_invariant_under_relabeling():
    rng = random.Random(99)
    p = drawn_k5()
    k = canonical_key(p)
    for _ in range(100):
        assert canonical_key(apply_permutation(p, _random_perm(5, rng))) == k


def test_canonical_key_is_color_sensitive():
    # green path vs red matching: swapping colors changes the isomorphism class
    p = from_edge_lists(5, [(0, 1), (1, 2)], [(2, 3), (0, 4)])
    swapped = Position(5, p.red, p.green)
    assert canonical_key(p) != canonical_key(swapped)


def test_canonical_key_equal_for_swap_self_isomorphic_position():
    # the drawn K5 maps onto its own color swap (doubling), so the swapped
    # position is plain-isomorphic to the original and the keys must agree;
    # color-swap equivalence in general is NOT quotiented (see above)
    p = drawn_k5(6)
    swapped = Position(6, p.red, p.green)
    assert apply_permutation(p, (0, 2, 4, 1, 3, 5)) == swapped
    assert canonical_key(p) == canonical_key(swapped)


def test_canonical_key_matches_isomorphism_on_random_pairs():
    rng = random.Random(2718)
    for _ in range(40):
        n = rng.choice([5, 6])
        ps = []
        for _ in range(2):
            edges = rng.sample(range(num_edges(n)), 5)
            ps.append(Position(n, sum(1 << e for e in edges[:3]), sum(1 << e for e in edges[3:])))
        p, q = ps
        same_key = canonical_key(p) == canonical_key(q)
        assert same_key == (find_isomorphism(p, q) is not None)


def test_canonical_key_board_cap():
    with pytest.raises(BoardTooLargeError):
        canonical_key(Position.empty(8))


# --- orbits -------------------------------------------------------------------------

def test_empty_board_has_one_edge_orbit():
    for n in (4, 5, 6, 7):
        orbits = uncolored_edge_orbits(Position.empty(n))
        assert len(orbits) == 1
        assert len(orbits[0]) == num_edges(n)


def test_two_copy_board_has_one_cross_orbit():
    s = build_preset("thm1", k=2)
    orbits = uncolored_edge_orbits(s)
    assert len(orbits) == 1
    assert len(orbits[0]) == 25


def test_drawn_k5_plus_isolated_vertex_join_orbit():
    t = build_preset("prop-T", 6)
    orbits = uncolored_edge_orbits(t)
    assert len(orbits) == 1
    assert sorted(orbits[0]) == sorted(edge_index(v, 5, 6) for v in range(5))


def test_orbits_partition_and_are_sound():
    rng = random.Random(47)
    for _ in range(15):
        n = rng.choice([5, 6])
        edges = rng.sample(range(num_edges(n)), 4)
        p = Position(n, (1 << edges[0]) | (1 << edges[1]), (1 << edges[2]) | (1 << edges[3]))
        group = automorphism_group(p)
        orbits = uncolored_edge_orbits(p)
        flattened = sorted(e for orbit in orbits for e in orbit)
        assert flattened == sorted(p.uncolored_edges())
        # soundness: each orbit is exactly the closure of one edge under the group
        for orbit in orbits:
            reachable = {orbit[0]}
            changed = True
            while changed:
                changed = False
                for s in group:
                    for e in list(reachable):
                        img = perm_edge(s, e, n)
                        if img not in reachable:
                            reachable.add(img)
                            changed = True
            assert set(orbit) == reachable
