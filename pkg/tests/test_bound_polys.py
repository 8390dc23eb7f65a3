import math

import numpy as np
import pytest
from numpy.polynomial import polynomial as npoly

from twodist.bound_polys import (
    CANDIDATE_INDICES,
    InnerProductPair,
    best_bound,
    build_candidate,
    candidate_values,
    delsarte_check,
    floor_nudged,
)
from twodist.gegenbauer import to_gegenbauer
from twodist.constructions import lambda_params
from twodist.lrs import q_bound


def _u1_closed_form(n, a, b):
    # Direct oracle: (1 - a)(1 - b) / (ab + 1/n), valid when a + b <= 0 < ab + 1/n.
    return (1.0 - a) * (1.0 - b) / (a * b + 1.0 / n)


def _random_pair(rng, n_hi=41):
    n = int(rng.integers(2, n_hi))
    b, a = np.sort(rng.uniform(-1.0, 1.0, 2))
    while not (-1.0 <= b < a < 1.0):
        b, a = np.sort(rng.uniform(-1.0, 1.0, 2))
    return InnerProductPair(n, float(a), float(b))


def test_quadratic_candidate_equiangular_n7():
    cand = build_candidate(1, InnerProductPair(7, 1.0 / 3, -1.0 / 3))
    assert cand.in_domain
    assert np.allclose(cand.expansion.coeffs, [2.0 / 63, 0.0, 6.0 / 7], atol=1e-12)
    assert abs(cand.value - 28.0) < 1e-9
    assert abs(cand.value - _u1_closed_form(7, 1.0 / 3, -1.0 / 3)) < 1e-9


def test_quadratic_candidate_equiangular_n23():
    cand = build_candidate(1, InnerProductPair(23, 0.2, -0.2))
    assert cand.in_domain
    assert abs(cand.value - 276.0) < 1e-6
    assert abs(_u1_closed_form(23, 0.2, -0.2) - 276.0) < 1e-6


def test_cubic_multiplier_undefined_at_zero_sum():
    for n in (5, 9, 30):
        cand = build_candidate(2, InnerProductPair(n, 0.25, -0.25))
        assert not cand.in_domain
        assert cand.c is None
        assert math.isinf(cand.value)


def test_symmetric_cubic_zeroes_f2():
    cand = build_candidate(3, InnerProductPair(10, 0.1, -0.5))
    assert cand.expansion is not None
    assert abs(cand.expansion.coeffs[2]) < 1e-12


def test_candidates_vanish_at_both_inner_products():
    rng = np.random.default_rng(11)
    for _ in range(60):
        pair = _random_pair(rng)
        for i in CANDIDATE_INDICES:
            cand = build_candidate(i, pair)
            if cand.poly is None:
                continue
            assert abs(npoly.polyval(pair.a, cand.poly)) < 1e-9
            assert abs(npoly.polyval(pair.b, cand.poly)) < 1e-9


def test_constructed_coefficients_vanish_by_index():
    targets = {2: (1,), 3: (2,), 4: (1, 2), 5: (2, 3)}
    rng = np.random.default_rng(12)
    for _ in range(60):
        pair = _random_pair(rng)
        for i, rows in targets.items():
            cand = build_candidate(i, pair)
            if cand.expansion is None:
                continue
            for r in rows:
                assert abs(cand.expansion.coeffs[r]) < 1e-9, (pair, i, r)


def test_out_of_domain_when_sum_of_roots_positive():
    # f1 of the quadratic candidate is -(a+b) = -1.7 < 0 here.
    cand = build_candidate(1, InnerProductPair(5, 0.9, 0.8))
    assert not cand.in_domain
    assert math.isinf(cand.value)


def test_in_domain_value_is_positive():
    rng = np.random.default_rng(13)
    for _ in range(80):
        pair = _random_pair(rng)
        for i in CANDIDATE_INDICES:
            cand = build_candidate(i, pair)
            if cand.in_domain:
                assert cand.value > 0.0
                f = cand.expansion.coeffs
                assert f[0] > 0.0
                assert np.all(f >= -1e-9)


def test_vectorized_values_match_reference_route():
    rng = np.random.default_rng(14)
    for _ in range(200):
        pair = _random_pair(rng)
        vec = candidate_values(pair.n, [pair.a], [pair.b])[:, 0]
        for i in CANDIDATE_INDICES:
            ref = build_candidate(i, pair).value
            got = float(vec[i - 1])
            if math.isinf(ref):
                assert math.isinf(got), (pair, i)
            else:
                assert abs(ref - got) <= 1e-9 * max(1.0, abs(ref)), (pair, i)


def test_best_bound_equiangular_n7():
    value, winning = best_bound(InnerProductPair(7, 1.0 / 3, -1.0 / 3))
    assert abs(value - 28.0) < 1e-9
    assert 1 in winning


def test_best_bound_no_candidate():
    value, winning = best_bound(InnerProductPair(4, 0.9, 0.8))
    if math.isinf(value):
        assert winning == ()
    else:
        assert winning


def test_best_bound_matches_window_sweep_point():
    # a = -0.2 forces b = -0.8 at ratio index 3.
    value, _ = best_bound(InnerProductPair(25, -0.2, -0.8))
    assert math.isfinite(value)
    assert abs(value - q_bound(25, 3, -0.2)) < 1e-9
    assert value <= 284.15


def test_bounds_never_undercut_midpoint_construction():
    # The midpoint set realizes n(n+1)/2 points at these inner products, so
    # every admissible certificate value must be at least that large.
    for n in range(7, 41):
        a, b = lambda_params(n)
        for i in CANDIDATE_INDICES:
            cand = build_candidate(i, InnerProductPair(n, a, b))
            if cand.in_domain:
                assert cand.value >= n * (n + 1) / 2 - 1e-6, (n, i)


def test_delsarte_check_accepts_quadratic_certificates():
    e7 = to_gegenbauer(7, npoly.polyfromroots([1.0 / 3, -1.0 / 3]))
    res = delsarte_check(e7, [1.0 / 3, -1.0 / 3])
    assert res.ok and res.bound == 28
    e23 = to_gegenbauer(23, npoly.polyfromroots([0.2, -0.2]))
    res = delsarte_check(e23, [0.2, -0.2])
    assert res.ok and res.bound == 276


def test_delsarte_check_consistent_with_candidates():
    rng = np.random.default_rng(15)
    done = 0
    while done < 40:
        pair = _random_pair(rng)
        for i in CANDIDATE_INDICES:
            cand = build_candidate(i, pair)
            if not cand.in_domain:
                continue
            res = delsarte_check(cand.expansion, [pair.a, pair.b])
            assert res.ok, (pair, i, res.violation)
            assert res.bound == floor_nudged(cand.value)
            done += 1


def test_delsarte_check_rejects_positive_on_support():
    from twodist.gegenbauer import GegenbauerExpansion

    res = delsarte_check(GegenbauerExpansion(7, [1.0]), [0.3])
    assert not res.ok
    assert "positive value" in res.violation


def test_delsarte_check_rejects_negative_coefficient():
    from twodist.gegenbauer import GegenbauerExpansion

    res = delsarte_check(GegenbauerExpansion(7, [-1.0, 0.0, 1.0]), [0.0])
    assert not res.ok
    assert "negative" in res.violation


def test_delsarte_check_rejects_zero_constant_term():
    from twodist.gegenbauer import GegenbauerExpansion

    res = delsarte_check(GegenbauerExpansion(7, [0.0, 1.0]), [-1.0])
    assert not res.ok
    assert "f_0" in res.violation


def test_pair_validation():
    with pytest.raises(ValueError):
        InnerProductPair(7, 0.2, 0.4)  # b > a
    with pytest.raises(ValueError):
        InnerProductPair(7, 1.0, 0.0)  # a not < 1
    with pytest.raises(ValueError):
        InnerProductPair(7, 0.2, -1.2)  # b < -1
    with pytest.raises(ValueError):
        InnerProductPair(1, 0.2, -0.2)  # dimension
    with pytest.raises(ValueError):
        build_candidate(6, InnerProductPair(7, 0.2, -0.4))
