"""Dimension bound sequences, analytic formulas, cover bounds."""

import math
from fractions import Fraction

import pytest

from piercelib.dimension import (
    analytic_dimension,
    box_ratio_sequence,
    count_log_bounds,
    dimension_bound_sequences,
    estimate_limits,
    factorial_bounds,
    find_cover_start,
    gap_ratio_sequence,
    log_factorial,
    power_growth_cover_sum,
    window_cover_bound,
    window_cover_chains,
)
from piercelib.families import SetSpec
from piercelib.profiles import (
    BoundsProfile,
    affine_profile,
    bounds_from_scale,
    builtin_profiles,
    lil_profile,
    log_profile,
    power_profile,
    table_profile,
)

EVEN = BoundsProfile(l=affine_profile(2), r=affine_profile(2, 2), threshold=0)


def _estar_bounds(window=64):
    return bounds_from_scale(builtin_profiles()["scale_geometric3"], window=window)


def test_bound_sequences_scale_window_frozen():
    est = dimension_bound_sequences(_estar_bounds(), 60)
    lower = {p.n: p.ratio for p in est.lower_seq}
    upper = {p.n: p.ratio for p in est.upper_seq}
    assert lower[60] == pytest.approx(0.8826, abs=5e-5)
    assert upper[60] == pytest.approx(0.8858, abs=5e-5)
    last_lower = [lower[n] for n in range(41, 61)]
    last_upper = [upper[n] for n in range(41, 61)]
    assert all(a <= b for a, b in zip(last_lower, last_lower[1:]))
    assert all(a <= b for a, b in zip(last_upper, last_upper[1:]))


def test_box_and_gap_frozen():
    box = box_ratio_sequence(_estar_bounds(), 60)
    gap = gap_ratio_sequence(_estar_bounds(), 60)
    assert box[-1].n == 60 and box[-1].ratio == pytest.approx(0.8861, abs=5e-5)
    assert gap[-1].n == 60 and gap[-1].ratio == pytest.approx(0.8824, abs=5e-5)


def test_sandwich_with_count_slack():
    # box ratio dominates the clean upper ratio minus the counting slack, and
    # the gap ratio stays below the clean lower ratio plus its slack
    bounds = _estar_bounds()
    est = dimension_bound_sequences(bounds, 40)
    box = {p.n: p for p in box_ratio_sequence(bounds, 40)}
    gap = {p.n: p for p in gap_ratio_sequence(bounds, 40)}
    for p in est.upper_seq:
        if p.n < 3:
            continue
        _, _, c = count_log_bounds(bounds, p.n)
        slack = p.n * math.log(c) / box[p.n].log_inv_diam
        assert box[p.n].ratio >= p.ratio - slack - 1e-12
    for p in est.lower_seq:
        if p.n < 3:
            continue
        _, _, c = count_log_bounds(bounds, p.n)
        num_slack = p.n * math.log(c)
        den_slack = math.log(c / 2)
        assert gap[p.n].ratio <= (
            (gap[p.n].log_count + num_slack) / (gap[p.n].log_inv_diam - den_slack)
        ) + 1e-12


def test_gap_sequence_requires_two_branches():
    single = BoundsProfile(l=affine_profile(1), r=affine_profile(1, 1), threshold=0)
    with pytest.raises(ValueError):
        gap_ratio_sequence(single, 5)


def test_count_log_bounds_brackets_exact_count():
    from piercelib.families import count_constrained_words

    for n in (1, 2, 3, 4):
        lo, hi, c = count_log_bounds(EVEN, n)
        exact = math.log(count_constrained_words(n, EVEN))
        assert lo - 1e-9 <= exact <= hi + 1e-9
        assert c == pytest.approx(2.01)


def test_limit_estimates_frozen():
    geo = builtin_profiles()["geometric3"]
    xi = estimate_limits(geo, "xi", (380, 400))
    assert xi.last == pytest.approx(2.0, abs=1e-9)
    log2 = builtin_profiles()["log2"]
    theta = estimate_limits(log2, "theta", (9_990, 10_000))
    assert theta.last == pytest.approx(1.12172, abs=5e-5)
    gamma = estimate_limits(log2, "gamma", (9_990, 10_000))
    assert gamma.last == pytest.approx(2.0, abs=1e-3)
    eta = estimate_limits(builtin_profiles()["scale_geometric3"], "eta", (380, 400))
    assert eta.last == pytest.approx(0.0321, abs=5e-5)


ANALYTIC_TABLE = [
    (SetSpec("E_phi", {"profile": builtin_profiles()["log2"]}), 0.5, False),
    (SetSpec("E_phi", {"profile": log_profile(Fraction(1, 2))}), 0.0, True),
    (SetSpec("E_phi", {"profile": builtin_profiles()["geometric3"]}), 1 / 3, False),
    (SetSpec("A_alpha", {"alpha": 1}), 1.0, False),
    (SetSpec("A_alpha", {"alpha": 7}), 1.0, False),
    (SetSpec("A_alpha", {"alpha": math.inf}), 1.0, False),
    (SetSpec("A_alpha", {"alpha": 0.5}), 0.0, True),
    (SetSpec("A_kappa", {"kappa": 3}), 1.0, False),
    (SetSpec("A_kappa", {"kappa": -1}), 1.0, False),
    (SetSpec("B_alpha", {"alpha": 2}), 1.0, False),
    (SetSpec("B_alpha", {"alpha": 0.5}), 0.0, True),
    (SetSpec("B_kappa", {"kappa": 2}), 1.0, False),
    (SetSpec("B_kappa", {"kappa": 1}), 0.0, True),
    (SetSpec("F_alpha", {"alpha": 1}), 1.0, False),
    (SetSpec("F_alpha", {"alpha": 2}), 0.5, False),
    (SetSpec("F_alpha", {"alpha": math.inf}), 0.0, False),
    (SetSpec("F_alpha", {"alpha": 0.5}), 0.0, True),
    (SetSpec("C_psi_beta", {"psi": lil_profile(), "beta": 1}), 1.0, False),
    (SetSpec("E_alpha_beta", {"alpha": 0.5, "beta": -4}), 1.0, False),
    (SetSpec("E_alpha_beta", {"alpha": 1, "beta": -1}), 1.0, False),
    (SetSpec("E_alpha_beta", {"alpha": 1, "beta": -1.5}), 0.0, True),
    (SetSpec("E_alpha_beta", {"alpha": 2, "beta": 1}), 1.0, False),
    (SetSpec("E_alpha_beta", {"alpha": 2, "beta": -0.5}), 0.0, True),
    (SetSpec("L_beta", {"beta": -1}), 1.0, False),
    (SetSpec("L_beta", {"beta": 1}), 1.0, False),
    (SetSpec("E_star", {"u": builtin_profiles()["scale_geometric3"]}), 1.0, False),
]


@pytest.mark.parametrize("spec,value,empty", ANALYTIC_TABLE)
def test_analytic_dimension_table(spec, value, empty):
    report = analytic_dimension(spec, window=512)
    assert report.value == pytest.approx(value, abs=1e-9)
    assert report.empty == empty


def test_analytic_dimension_scale_windows():
    # log u grows polynomially in both cases, so eta vanishes and dim = 1
    for name in ("scale_exp_sqrt", "scale_exp_square"):
        spec = SetSpec("E_star", {"u": builtin_profiles()[name]})
        report = analytic_dimension(spec, window=400)
        assert report.value == pytest.approx(1.0, abs=1e-6)


def test_analytic_dimension_window_certified_square():
    spec = SetSpec("E_phi", {"profile": power_profile(2)})
    report = analytic_dimension(spec, window=2_000)
    assert report.status == "window_certified"
    assert report.value == pytest.approx(1.0, abs=2e-3)


def test_analytic_dimension_refuses_generic():
    spec = SetSpec(
        "S_generic", {"m": 1, "h1": affine_profile(2), "h2": affine_profile(1)}
    )
    report = analytic_dimension(spec)
    assert report.status == "refused"
    assert report.value is None


def test_analytic_dimension_refuses_oscillating_profile():
    wobble = table_profile([Fraction(2 + (k % 7)) for k in range(1, 257)])
    report = analytic_dimension(SetSpec("E_phi", {"profile": wobble}), window=255)
    assert report.status == "refused"
    assert report.limits  # window report still attached


def test_find_cover_start():
    assert find_cover_start(builtin_profiles()["log2"], 0.01) == 2
    assert find_cover_start(builtin_profiles()["geometric3"], 0.01) == 1


def test_cover_bound_positive():
    v = window_cover_bound(builtin_profiles()["log2"], 0.01, 2, 50)
    assert float(v) > 0


def test_cover_chains_small_window_trend():
    log2 = builtin_profiles()["log2"]
    chains = window_cover_chains(log2, 0.01, 2, 400)
    c1 = chains["chain1"][-1].ratio
    assert c1 == pytest.approx(1.0202, abs=2e-2)
    geo = builtin_profiles()["geometric3"]
    chains = window_cover_chains(geo, 0.01, 1, 60)
    assert chains["chain1"][-1].ratio == pytest.approx(1.01 / 0.99 / 3, abs=1e-6)


def test_power_growth_cover_sum_frozen():
    record = power_growth_cover_sum((2, 5), 2, 0.6, 3, cap=1)
    assert record.word_count == 1
    assert not record.divergent
    record = power_growth_cover_sum((2, 5), 2, 0.6, 3, cap=2)
    assert record.word_count == 2
    assert record.log_bound is not None
    assert record.log_sum <= record.log_bound
    assert record.tail_index == 3127


def test_power_growth_cover_sum_divergent_flag():
    record = power_growth_cover_sum((2, 5), 2, 0.4, 3, cap=2)
    assert record.divergent
    assert record.log_bound is None


def test_power_growth_diameter_example():
    # closed-form diameter of the infinite child union below (1, 2) with b = 2
    record = power_growth_cover_sum((1, 2), 2, 1.0, 2, cap=1)
    assert math.exp(record.log_sum) == pytest.approx(0.1, abs=1e-12)


def test_factorial_bounds():
    assert factorial_bounds(1) == (0.0, 0.0)
    for n in (2, 5, 10, 50):
        lo, hi = factorial_bounds(n)
        exact = log_factorial(n)
        assert lo - 1e-9 <= exact <= hi + 1e-9
    assert log_factorial(10) == pytest.approx(math.log(math.factorial(10)))
