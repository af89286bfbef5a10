"""Max-plus belt over exact rationals: periods, shifts, duals, colored counts."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import zamobelt.bigraph as bg
import zamobelt.green as green
import zamobelt.tropical as tr
from zamobelt.errors import InputError


def rationals() -> st.SearchStrategy:
    return st.fractions(
        min_value=Fraction(-20), max_value=Fraction(20), max_denominator=8
    )


# -- the recursion itself -----------------------------------------------------


def test_a2_run_at_minus_one():
    g = bg.catalog("A2")
    lam = tr.constant_labeling(2, -1)
    states = tr.run_states(g, lam, 10)
    assert states[0] == (-1, -1)
    # T1(2) accounts for max(T2(1), 0) - T1(0) = max(-1, 0) + 1 = 1
    assert states[1][0] == 1
    assert states[10] == states[0]


def test_events_record_exact_sums():
    g = bg.catalog("A2")
    events = []
    tr.run_states(g, tr.constant_labeling(2, -1), 10, events)
    assert len(events) == 10
    assert all(isinstance(e.gamma_sum, Fraction) for e in events)
    first = events[0]
    assert first.t == 2 and first.k == 0
    assert first.gamma_sum == -1 and first.delta_sum == 0
    assert first.color == "blue"


@given(values=st.tuples(rationals(), rationals()))
@settings(max_examples=60)
def test_involution_two_steps_back(values):
    # stepping twice and solving back recovers the input exactly
    g = bg.catalog("A2")
    states = tr.run_states(g, values, 10)
    assert states[10] == states[0]


# -- periodicity ----------------------------------------------------------------


def test_zero_labeling_has_period_two():
    for name in ("A2", "A3", "fig1-A5starD4"):
        g = bg.catalog(name)
        lam = tr.constant_labeling(g.n, 0)
        assert tr.tropical_period(g, lam, 2 * g.half_period) == 2, name


def test_tropical_period_goldens():
    g = bg.catalog("A2")
    assert tr.tropical_period(g, tr.constant_labeling(2, -1), 10) == 10
    d4 = bg.catalog("D4")
    assert tr.tropical_period(d4, tr.constant_labeling(4, -1), 16) == 8


@given(seed=st.integers(min_value=0, max_value=2**32 - 1))
@settings(max_examples=25, deadline=None)
def test_random_labelings_divide_two_n(seed: int):
    rng = tr.make_rng(seed)
    for name in ("A3", "B2", "A2xA2"):
        g = bg.catalog(name)
        lam = tr.random_labeling(rng, g.n)
        period = tr.tropical_period(g, lam, 2 * g.half_period)
        assert period is not None and (2 * g.half_period) % period == 0, name


def test_figure_two_tropical_period_over_many_labelings():
    g = bg.catalog("fig2-F4xA2")
    rng = tr.make_rng(7)
    for _ in range(100):
        lam = tr.random_labeling(rng, g.n)
        period = tr.tropical_period(g, lam, 30)
        assert period is not None and 30 % period == 0


# -- the half period shift --------------------------------------------------------


def test_half_period_shift_with_frozen_sigma():
    for name in ("A2", "A4", "fig1-A5starD4", "fig2-F4xA2", "D4"):
        g = bg.catalog(name)
        sigma = green.frozen_isomorphism_check(g)
        rng = tr.make_rng(3)
        for _ in range(20):
            lam = tr.random_labeling(rng, g.n)
            assert tr.tropical_half_period(g, lam, sigma), name


def test_half_period_shift_rejects_wrong_sigma():
    g = bg.catalog("A2")
    lam = (Fraction(-3), Fraction(5))  # asymmetric so the swap is visible
    identity = bg.Automorphism(perm=(0, 1), kind="bicolored")
    swap = bg.Automorphism(perm=(1, 0), kind="bicolored")
    assert tr.tropical_half_period(g, lam, swap)
    assert not tr.tropical_half_period(g, lam, identity)


def test_half_period_shift_trivial_at_zero():
    # the all-zero labeling is fixed by every candidate shift
    g = bg.catalog("A2")
    lam = tr.constant_labeling(2, 0)
    for perm in ((0, 1), (1, 0)):
        sigma = bg.Automorphism(perm=perm, kind="bicolored")
        assert tr.tropical_half_period(g, lam, sigma)


# -- duals -------------------------------------------------------------------------


def test_dual_transfer_simply_laced_is_trivial_scaling():
    g = bg.catalog("A3")
    lam = (Fraction(-1), Fraction(2), Fraction(-5))
    assert tr.dual_transfer_check(g, lam)


def test_dual_transfer_on_multiply_laced_entries():
    rng = tr.make_rng(11)
    for name in ("B2", "C2", "G2", "B3", "C3", "B2xB2", "G2xG2"):
        g = bg.catalog(name)
        for _ in range(10):
            assert tr.dual_transfer_check(g, tr.random_labeling(rng, g.n)), name


# -- colored censuses ---------------------------------------------------------------


def test_census_goldens():
    expected = {
        "A2": (6, 4),
        "A3": (12, 6),
        "A4": (20, 8),
        "D4": (24, 8),
        "B2": (8, 4),
        "G2": (12, 4),
    }
    for name, (red, blue) in expected.items():
        g = bg.catalog(name)
        census = tr.colored_census(g, tr.constant_labeling(g.n, -1))
        assert (census.red, census.blue) == (red, blue), name
        assert census.ties == 0, name


def test_census_blue_times_of_a2():
    census = tr.colored_census(bg.catalog("A2"), tr.constant_labeling(2, -1))
    assert census.blue_times == (2, 6, 7, 11)
    assert tr.blue_times_admissible(census, 5)


def test_blue_times_admissible_windows():
    for name in ("A3", "A4", "B3", "D4", "G2"):
        g = bg.catalog(name)
        census = tr.colored_census(g, tr.constant_labeling(g.n, -1))
        assert tr.blue_times_admissible(census, g.half_period), name


def test_census_guards():
    with pytest.raises(InputError):
        tr.colored_census(bg.catalog("A2xA2"), tr.constant_labeling(4, -1))
    with pytest.raises(InputError):
        tr.colored_census(bg.catalog("A2"), (Fraction(-1), Fraction(0)))


def test_tie_policy_skips_rerun_when_clean():
    g = bg.catalog("A3")
    first, rerun = tr.census_with_tie_policy(g, (Fraction(-1), Fraction(-2), Fraction(-1)))
    assert first.ties == 0 and rerun is None


def test_tie_policy_reruns_and_reports_structural_ties():
    # a single vertex with no edges compares two empty products: every
    # event ties, and no perturbation of the labeling can break that
    g = bg.catalog("A1")
    first, rerun = tr.census_with_tie_policy(g, tr.constant_labeling(1, -1))
    assert first.ties == 4 and first.red == first.blue == 0
    assert rerun is not None and rerun.ties == 4


def test_perturbed_labeling_breaks_all_ties_on_sweep():
    for name in ("A2", "A3", "A4", "A5", "B2", "B3", "C3", "D4", "G2"):
        g = bg.catalog(name)
        census = tr.colored_census(g, tr.perturbed_negative_labeling(g.n))
        assert census.ties == 0, name
        assert (census.red, census.blue) == (g.h_gamma * g.n, 2 * g.n), name
