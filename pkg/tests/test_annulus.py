import math

import pytest

from chromaplane.annulus import (
    CASE_THRESHOLDS,
    BracketInvalid,
    RadialScheme,
    annulus_verdict,
    case_graph,
    lift_lower_bound,
    radial_best,
    radial_color,
    radial_constraints,
    radial_max_b,
    radial_max_b_detail,
    radial_max_b_numeric,
    radial_violation_exists,
    annulus_bounds,
    annulus_bounds_csv,
    annulus_bounds_rows,
    lower_bound_config,
    threshold_bisect,
)
from chromaplane.distgraph import CircleSpec
from chromaplane.solver import NOT_COLORABLE


def test_radial_scheme_validation():
    RadialScheme(3, 9, 1.2)
    with pytest.raises(ValueError):
        RadialScheme(1, 2, 1.2)
    with pytest.raises(ValueError):
        RadialScheme(3, 10, 1.2)  # k does not divide s
    with pytest.raises(ValueError):
        RadialScheme(3, 3, 1.2)  # s < 2k
    with pytest.raises(ValueError):
        RadialScheme(3, 9, 0.9)


def test_radial_color_examples():
    scheme = RadialScheme(3, 9, 1.2)
    assert radial_color(scheme, 0.0) == 0
    assert radial_color(scheme, 2 * math.pi / 9 + 1e-9) == 1
    assert radial_color(scheme, 2 * math.pi - 1e-12) == 8 % 3
    with pytest.raises(ValueError):
        radial_color(scheme, 2 * math.pi)


def test_radial_color_sector_structure():
    scheme = RadialScheme(4, 12, 1.3)
    alpha = scheme.alpha
    for s in range(12):
        mid = (s + 0.5) * alpha
        assert radial_color(scheme, mid) == s % 4
        # consecutive sectors differ
        nxt = ((s + 1) % 12 + 0.5) * alpha
        assert radial_color(scheme, mid) != radial_color(scheme, nxt % (2 * math.pi))


def test_radial_constraints_paper_identities():
    b3 = math.sqrt(2 - 2 * math.sin(math.pi / 18))
    c = radial_constraints(3, 9, b3)
    assert c.gap == pytest.approx(b3, abs=1e-12)

    c = radial_constraints(4, 12, math.sqrt(2))
    assert c.gap == pytest.approx(math.sqrt(2), abs=1e-12)

    c = radial_constraints(6, 12, math.sqrt(3))
    assert c.d2 == pytest.approx(1, abs=1e-12)

    assert c.d1 > 0 and c.d2 > 0 and c.gap > 0
    assert c.d2 <= c.d1 + (math.sqrt(3) - 1) + 1e-12


def test_radial_constraints_rejects_non_divisible():
    with pytest.raises(ValueError):
        radial_constraints(3, 10, 1.2)


RADIAL_EXPECTED = {
    (3, 9): math.sqrt(2 - 2 * math.sin(math.pi / 18)),
    (4, 12): math.sqrt(2),
    (6, 12): math.sqrt(3),
    (7, 14): 2 * math.cos(math.pi / 7),
    (8, 16): math.sqrt(2 + math.sqrt(2)),
}


@pytest.mark.parametrize("ks,expected", sorted(RADIAL_EXPECTED.items()))
def test_radial_max_b_closed_forms(ks, expected):
    assert radial_max_b(*ks) == pytest.approx(expected, abs=1e-9)


def test_radial_max_b_k5_matches_numeric_not_printed_radical():
    # the five-color bound is the golden ratio; the reciprocal radical
    # sqrt(3/2 - sqrt(5)/2) that sometimes gets quoted is 1/phi
    b = radial_max_b(5, 10)
    assert b == pytest.approx(1.61803, abs=1e-5)
    assert b == pytest.approx((1 + math.sqrt(5)) / 2, abs=1e-12)
    assert abs(b - math.sqrt(1.5 - math.sqrt(5) / 2)) > 0.9


def test_radial_max_b_no_valid_b():
    assert radial_max_b(2, 4) is None
    assert radial_max_b(2, 8) is None


def test_radial_best():
    s, b = radial_best(5, 40)
    assert b >= 1.61803 - 1e-9
    assert s == 10

    s, b = radial_best(7, 40)
    assert s == 14
    assert b == pytest.approx(2 * math.cos(math.pi / 7), abs=1e-9)

    assert radial_best(2, 8) is None


def test_radial_binding_constraints():
    assert radial_max_b_detail(3, 9)[2] == "gap"
    assert radial_max_b_detail(4, 12)[2] == "gap"
    assert radial_max_b_detail(6, 12)[2] == "d2"
    assert radial_max_b_detail(8, 16)[2] == "d2"


@pytest.mark.parametrize("ks", sorted(RADIAL_EXPECTED) + [(5, 10)])
def test_radial_closed_form_vs_numeric_bisect(ks):
    k, s = ks
    closed = radial_max_b(k, s)
    numeric = radial_max_b_numeric(k, s, tol=1e-7, n_pairs=100_000)
    assert numeric == pytest.approx(closed, abs=1e-6)


@pytest.mark.parametrize("ks", sorted(RADIAL_EXPECTED) + [(5, 10)])
def test_radial_scheme_valid_below_max(ks):
    k, s = ks
    b = radial_max_b(k, s) - 1e-3
    assert not radial_violation_exists(k, s, b, n_pairs=1_000_000, seed=1)


def test_lower_bound_config_cases():
    eps = 1e-6
    cfg = lower_bound_config(1, 1.29, eps)
    assert cfg.circles == (CircleSpec(1300, 1 + eps), CircleSpec(1300, 1.29 - eps))

    cfg = lower_bound_config(3, 1.72, eps)
    assert cfg.circles == (
        CircleSpec(180, 1 + eps),
        CircleSpec(180, (1 + 1.72) / 2),
        CircleSpec(180, 1.72 - eps),
    )
    assert cfg.circles[1].r == pytest.approx(1.36, abs=1e-12)

    c4 = lower_bound_config(4, 2.05, eps)
    c5 = lower_bound_config(5, 2.05, eps)
    assert c4 == c5

    cfg = lower_bound_config(2, 1.48, eps, n_override=95)
    assert cfg.circles[0].n == 95

    with pytest.raises(ValueError):
        lower_bound_config(6, 1.5, eps)
    with pytest.raises(ValueError):
        lower_bound_config(1, 1.29, 0.5)


def test_case_thresholds_values():
    approx = {1: 1.28599, 2: 1.47145, 3: 1.71433, 4: 1.82843, 5: 2.01176}
    for case, want in approx.items():
        assert CASE_THRESHOLDS[case] == pytest.approx(want, abs=5e-6)


def test_lift_lower_bound():
    assert lift_lower_bound(4) == 7
    assert lift_lower_bound(8) == 11
    for k in range(1, 11):
        assert lift_lower_bound(k) == k + 3
    with pytest.raises(ValueError):
        lift_lower_bound(0)


def test_desk_scale_case1_refutation():
    # 65 divides 1300; at b = 1.35 the shrunken case-1 config already
    # refutes 3 colors, certifying 4 on the annulus and 7 on the plane
    out = annulus_verdict(1, 1.35, 4, n_override=65)
    assert out.status == NOT_COLORABLE
    assert lift_lower_bound(4) == 7


def test_threshold_bisect_desk_scale_case1():
    b_star = threshold_bisect(1, 65, 4, b_lo=1.25, b_hi=1.4, tol=1e-3)
    # coarser configs are vertex subsets of the full one, so their
    # threshold cannot undercut the full-scale optimum
    assert b_star >= CASE_THRESHOLDS[1] - 1e-9
    assert 1.25 < b_star < 1.4


def test_threshold_bisect_bracket_validation():
    with pytest.raises(BracketInvalid):
        threshold_bisect(1, 65, 4, b_lo=1.38, b_hi=1.4, tol=1e-3, eps_scales=(1e-6,))
    with pytest.raises(BracketInvalid):
        threshold_bisect(1, 65, 4, b_lo=1.05, b_hi=1.1, tol=1e-3, eps_scales=(1e-6,))


def test_annulus_bounds_rows_structure():
    rows = annulus_bounds_rows()
    assert len(rows) == 10
    assert rows[0].b_interval[0] == 1.0
    assert rows[-1].b_interval[1] == pytest.approx(math.sqrt(2 + math.sqrt(2)), abs=1e-12)
    for row in rows:
        assert row.lower <= row.upper
    intervals = [r.b_interval for r in rows]
    for (lo1, hi1), (lo2, _) in zip(intervals, intervals[1:]):
        assert hi1 == lo2


def test_annulus_bounds_examples():
    row = annulus_bounds(1.40)
    assert (row.lower, row.upper) == (4, 4)
    row = annulus_bounds(1.45)
    assert (row.lower, row.upper) == (4, 5)
    row = annulus_bounds(1.83)
    assert (row.lower, row.upper) == (7, 8)
    row = annulus_bounds(1.81)
    assert (row.lower, row.upper) == (6, 8)
    row = annulus_bounds(1.1)
    assert (row.lower, row.upper) == (3, 3)
    with pytest.raises(ValueError):
        annulus_bounds(1.9)
    with pytest.raises(ValueError):
        annulus_bounds(0.9)


def test_annulus_bounds_csv():
    text = annulus_bounds_csv()
    lines = text.strip().splitlines()
    assert lines[0] == "b_lo,b_hi,lower,upper,source"
    assert len(lines) == 11
    assert any("thm5-case-1" in ln for ln in lines)
    assert any("radial-8-16" in ln for ln in lines)


def test_case_graph_matches_config():
    g = case_graph(2, 1.48, n_override=95)
    assert g.n == 190
    assert g.b == 1.48
