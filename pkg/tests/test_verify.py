"""Verification checks: enumerations, stealing premises, theorem instances."""

import itertools

import pytest

from nsim.board import (
    BoardError,
    Position,
    edge_index,
    from_edge_lists,
    triangle_masks,
)
from nsim.presets import build_preset
from nsim.solver import SolveLimits
from nsim.symmetry import apply_permutation, find_color_swap_isomorphism
from nsim.verify import (
    check_ignore_and_reply,
    check_pretend_extra_red,
    check_thm1_premises,
    check_thm3_premises,
    run_checks,
    thm3_premises_for,
    verify_drawn_k5_uniqueness,
    verify_k6_no_draw,
    verify_prop1_structure,
    verify_theorem,
)


# --- enumerations ------------------------------------------------------------

def test_drawn_k5_uniqueness_report():
    report = verify_drawn_k5_uniqueness()
    assert report.passed
    assert report.data["labeled_draws"] == 12
    assert report.data["isomorphism_classes"] == 1
    assert report.data["colorings_checked"] == 252
    assert report.data["all_green_classes_are_5_cycles"]


def test_drawn_k5_draw_count_against_independent_enumeration():
    # direct recount with nothing but itertools and the triangle table
    tmasks = triangle_masks(5)
    draws = 0
    for combo in itertools.combinations(range(10), 5):
        green = sum(1 << e for e in combo)
        red = ((1 << 10) - 1) ^ green
        if not any(t & green == t or t & red == t for t in tmasks):
            draws += 1
    assert draws == 12


def test_k6_no_draw_report():
    report = verify_k6_no_draw()
    assert report.passed
    assert report.data["colorings_checked"] == 32768
    assert report.data["colorings_without_mono_triangle"] == 0
    assert report.data["extensions_without_mono_triangle"] == 0


def test_prop1_structure_report():
    report = verify_prop1_structure()
    assert report.passed
    assert report.data["subsets_checked"] == 10
    assert report.data["subsets_without_green"] == 0
    assert report.data["subsets_without_red"] == 0


# --- ignore-and-reply -----------------------------------------------------------

def test_ignore_and_reply_passes_on_prop_t():
    p = build_preset("prop-T", 6)
    report = check_ignore_and_reply(p, edge_index(0, 5, 6), edge_index(2, 5, 6))
    assert report.passed
    assert report.counts_ok
    assert report.insurance_triangle.vertices == (0, 2, 5)
    assert report.orbit_count == 1
    # the witness maps the pretend frame onto the color-swap of the assumed frame
    pretend = Position(p.n, p.green, p.red | (1 << edge_index(2, 5, 6)))
    assumed = Position(p.n, p.green | (1 << edge_index(0, 5, 6)), p.red)
    image = apply_permutation(pretend, report.frame_iso)
    assert image.green == assumed.red and image.red == assumed.green


def test_ignore_and_reply_fails_without_insurance():
    # reply (1,5) gives no red triangle through (0,5): (0,1) is green
    p = build_preset("prop-T", 6)
    report = check_ignore_and_reply(p, edge_index(0, 5, 6), edge_index(1, 5, 6))
    assert not report.passed
    assert report.insurance_triangle is None


def test_ignore_and_reply_passes_on_two_copy_board():
    s = build_preset("thm1", k=2)
    report = check_ignore_and_reply(s, edge_index(0, 5, 10), edge_index(2, 5, 10))
    assert report.passed
    assert report.insurance_triangle.vertices == (0, 2, 5)


def test_ignore_and_reply_preconditions():
    p = build_preset("prop-T", 6)
    e05, e25 = edge_index(0, 5, 6), edge_index(2, 5, 6)
    with pytest.raises(BoardError):
        check_ignore_and_reply(p, e05, e05)
    with pytest.raises(BoardError):
        check_ignore_and_reply(p, edge_index(0, 1, 6), e25)  # colored edge
    thm2 = build_preset("thm2", 6)  # red to move
    with pytest.raises(BoardError):
        check_ignore_and_reply(thm2, edge_index(0, 2, 6), edge_index(0, 5, 6))


# --- pretend-extra-red ------------------------------------------------------------

def test_pretend_extra_red_passes_on_thm2():
    for n in (6, 7):
        p = build_preset("thm2", n)
        report = check_pretend_extra_red(p, edge_index(0, 2, n))
        assert report.passed
        assert report.insurance_triangle.vertices == (0, 1, 2)
        completed = Position(p.n, p.green, p.red | (1 << edge_index(0, 2, n)))
        image = apply_permutation(completed, report.frame_iso)
        assert image.green == completed.red and image.red == completed.green


def test_pretend_extra_red_fails_for_structurally_wrong_edge():
    p = build_preset("thm2", 6)
    report = check_pretend_extra_red(p, edge_index(0, 5, 6))
    assert not report.passed


def test_pretend_extra_red_preconditions():
    p = build_preset("prop-T", 6)  # green to move
    with pytest.raises(BoardError):
        check_pretend_extra_red(p, edge_index(0, 5, 6))


# --- 3-move configuration premises ---------------------------------------------------

def test_thm3_premises_pass():
    for n in (6, 7):
        report = check_thm3_premises(n)
        assert report.passed
        assert report.insurance_triangle.vertices == (0, 1, 2)


def test_thm3_premises_board_range():
    with pytest.raises(BoardError):
        check_thm3_premises(8)


def test_thm3_premises_with_mirrored_h_choice():
    # the other symmetric reading of the figure: h attached to the cherry
    # leaf 2 instead of leaf 1. Mirroring h also mirrors the f/g roles (the
    # pretended green edge is the cherry edge that does not meet h).
    u = from_edge_lists(6, [(0, 1), (0, 2)], [(2, 3)])
    report = thm3_premises_for(u, e=(1, 2), f=(0, 2), g=(0, 1), h=(2, 3))
    assert report.passed


def test_thm3_premises_mirrored_h_with_unmirrored_roles_fails():
    # keeping g on the h side breaks the frame isomorphism: the pretend
    # frame's green edge would sit at the red cherry's center, not a leaf
    u = from_edge_lists(6, [(0, 1), (0, 2)], [(2, 3)])
    report = thm3_premises_for(u, e=(1, 2), f=(0, 1), g=(0, 2), h=(2, 3))
    assert not report.passed
    assert report.frame_iso is None


# --- two-copy premises ----------------------------------------------------------------

def test_thm1_premises_pass():
    report = check_thm1_premises(2)
    assert report.passed
    assert report.orbit_count == 1
    assert report.extras["aut_order"] == 200
    assert report.extras["pair"] is not None


def test_thm1_premises_only_defined_for_two_copies():
    with pytest.raises(BoardError):
        check_thm1_premises(1)


def test_corrupted_copy_has_no_swap_self_isomorphism():
    # first copy drawn, second copy a non-drawn complete coloring (its green
    # class contains a triangle, its red class does not)
    copy1_green = [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]
    copy1_red = [(0, 2), (1, 3), (2, 4), (0, 3), (1, 4)]
    corrupt_green = [(5, 6), (6, 7), (7, 8), (8, 9), (5, 7)]
    corrupt_red = [(5, 8), (5, 9), (6, 8), (6, 9), (7, 9)]
    green = sum(1 << edge_index(i, j, 10) for i, j in copy1_green + corrupt_green)
    red = sum(1 << edge_index(i, j, 10) for i, j in copy1_red + corrupt_red)
    corrupted = Position(10, green, red)
    assert find_color_swap_isomorphism(corrupted, corrupted) is None


# --- solver-backed instances -----------------------------------------------------------

def test_verify_theorem_quick_instances():
    assert verify_theorem("thm2", 6).passed
    assert verify_theorem("prop1i", 6).passed
    assert verify_theorem("thm3", 6).passed


def test_verify_theorem_rejects_unsupported_grid_points():
    with pytest.raises(BoardError):
        verify_theorem("slany6", 7)
    with pytest.raises(BoardError):
        verify_theorem("nope", 6)


def test_verify_theorem_reports_budget_exhaustion():
    report = verify_theorem("slany6", 6, SolveLimits(max_nodes=50))
    assert not report.passed
    assert report.budget_hit


def test_run_checks_rejects_unknown_names():
    with pytest.raises(BoardError):
        run_checks(["not-a-check"])
