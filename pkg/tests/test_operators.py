"""Matrix representations and adjoint formulas in the orthonormal coefficient basis."""

from math import comb

import numpy as np
import pytest

from bergman_csym import (
    DimMismatchError,
    NonIntegerBetaError,
    SpaceParams,
    TruncatedSeries,
    apply_map,
    composition_matrix,
    compose,
    compose_maps,
    from_coords,
    hurst_factors,
    hyperbolic_model,
    inner_product,
    involution,
    involution_adjoint_apply,
    kernel_series,
    make,
    mul,
    multiplication_matrix,
    mzstar_apply,
    mzstar_on_monomial,
    rotation,
    scaled,
    to_coords,
    to_series,
    verify_hurst,
    weight,
)
from bergman_csym.operators import _binomial_alpha_weights, _cowen_sum
from helpers import random_poly, random_self_map


def monomial(n, degree):
    return TruncatedSeries.monomial(n, degree)


# --- composition matrices ---------------------------------------------


def test_identity_symbol_gives_identity_matrix():
    T = composition_matrix(make(1, 0, 0, 1), SpaceParams(0), 12)
    np.testing.assert_allclose(T.mat, np.eye(13), atol=1e-14)


def test_rotation_symbol_gives_diagonal_powers():
    lam = np.exp(0.7j)
    T = composition_matrix(rotation(lam), SpaceParams(1), 9)
    off = T.mat.copy()
    np.fill_diagonal(off, 0.0)
    assert np.max(np.abs(off)) == 0.0
    np.testing.assert_allclose(np.diag(T.mat), lam ** np.arange(10), rtol=1e-13)


def test_columns_are_rescaled_symbol_powers():
    params = SpaceParams(0)
    degree = 32
    phi = involution(0.5)
    T = composition_matrix(phi, params, degree)
    ser = to_series(phi, degree)
    power = TruncatedSeries.one(degree)
    for j in range(degree + 1):
        expected = to_coords(params, power, degree + 1) / np.sqrt(weight(params, j))
        np.testing.assert_allclose(T.mat[:, j], expected, rtol=0, atol=1e-12)
        power = mul(power, ser, degree)
    # corner entry: constant coefficient of the symbol over the weight ratio
    np.testing.assert_allclose(T.mat[0, 1], 0.5 * np.sqrt(2), rtol=1e-14)


def test_composition_contravariance_on_low_degrees():
    rng = np.random.default_rng(17)
    params = SpaceParams(0)
    for _ in range(3):
        phi, psi = random_self_map(rng), random_self_map(rng)
        joint = composition_matrix(compose_maps(phi, psi), params, 256).mat
        split = (
            composition_matrix(psi, params, 256).mat
            @ composition_matrix(phi, params, 256).mat
        )
        assert np.max(np.abs((joint - split)[:8, :8])) < 1e-8


def test_kernel_pairing_evaluates_symbol_composition():
    rng = np.random.default_rng(30)
    for beta in (-1.0, 0.0, 2.5):
        params = SpaceParams(beta)
        phi = random_self_map(rng)
        f = random_poly(rng, 10)
        alpha = rng.uniform(0, 0.8) * np.exp(2j * np.pi * rng.uniform())
        lhs = inner_product(
            params,
            compose(f, to_series(phi, 256), 256),
            kernel_series(params, alpha, 256),
        )
        assert abs(lhs - f(apply_map(phi, alpha))) < 1e-9


def test_raw_series_symbol_must_stay_inside_disk():
    from bergman_csym import NotSelfMapError

    grows = TruncatedSeries([0.0, 1.1])
    with pytest.raises(NotSelfMapError):
        composition_matrix(grows, SpaceParams(0), 8)


# --- multiplication matrices ------------------------------------------


def test_multiplying_by_one_is_identity():
    M = multiplication_matrix(TruncatedSeries.one(0), SpaceParams(0.5), 10)
    np.testing.assert_array_equal(M.mat, np.eye(11))


def test_shift_matrix_carries_weight_ratios():
    params = SpaceParams(0)
    frozen = multiplication_matrix(TruncatedSeries.identity(1), params, 8).mat
    assert not frozen.flags.writeable  # matrices are immutable after construction
    M = frozen.copy()
    for n in range(8):
        np.testing.assert_allclose(M[n + 1, n], np.sqrt((n + 1) / (n + 2)), rtol=1e-14)
    M[np.arange(1, 9), np.arange(8)] = 0.0
    assert np.max(np.abs(M)) == 0.0


def test_multiplication_matrix_defining_property():
    rng = np.random.default_rng(8)
    for beta in (-1.0, 0.0, 1.3):
        params = SpaceParams(beta)
        degree = 24
        psi = random_poly(rng, 4)
        f = random_poly(rng, degree - 4)
        M = multiplication_matrix(psi, params, degree)
        lhs = M.mat @ to_coords(params, f, degree + 1)
        rhs = to_coords(params, mul(psi, f, degree), degree + 1)
        np.testing.assert_allclose(lhs, rhs, rtol=0, atol=1e-12)


def test_kernel_reciprocal_is_polynomial_in_shift():
    # multiplying by (1 - conj(a) z)^(2+beta) equals the finite shift polynomial
    from bergman_csym import binomial_expand

    for beta, alpha in [(0, 0.4 + 0.2j), (1, 0.3)]:
        params = SpaceParams(beta)
        degree = 16
        power = beta + 2
        psi = binomial_expand(-np.conj(alpha), power, degree)
        lhs = multiplication_matrix(psi, params, degree).mat
        shift = multiplication_matrix(TruncatedSeries.identity(1), params, degree).mat
        rhs = np.zeros_like(lhs)
        term = np.eye(degree + 1, dtype=complex)
        for k in range(power + 1):
            rhs += comb(power, k) * (-np.conj(alpha)) ** k * term
            term = term @ shift
        np.testing.assert_allclose(lhs, rhs, rtol=0, atol=1e-13)


# --- shift adjoint -----------------------------------------------------


def test_shift_adjoint_kills_constants():
    out = mzstar_apply(SpaceParams(0), TruncatedSeries.one(0))
    assert np.max(np.abs(out.coeffs)) == 0.0


def test_shift_adjoint_of_squared_monomial():
    out = mzstar_apply(SpaceParams(0), monomial(2, 2))
    np.testing.assert_allclose(out.coeffs, [0.0, 2 / 3, 0.0], rtol=1e-14)


def test_shift_adjoint_matches_conjugate_transpose():
    rng = np.random.default_rng(14)
    for beta in (-1.0, -0.5, 0.0, 1.0):
        params = SpaceParams(beta)
        degree = 20
        f = random_poly(rng, degree)
        M = multiplication_matrix(TruncatedSeries.identity(1), params, degree)
        via_matrix = M.mat.conj().T @ to_coords(params, f, degree + 1)
        direct = to_coords(params, mzstar_apply(params, f), degree + 1)
        np.testing.assert_allclose(direct[:degree], via_matrix[:degree], atol=1e-12)


def test_iterated_shift_adjoint_coefficient_frozen():
    coeff, power = mzstar_on_monomial(SpaceParams(0), 1, 3)
    assert power == 2
    np.testing.assert_allclose(coeff, 0.75, rtol=1e-15)


def test_iterated_shift_adjoint_zero_power_unchanged():
    coeff, power = mzstar_on_monomial(SpaceParams(2), 0, 4)
    assert (coeff, power) == (1.0, 4)


def test_iterated_shift_adjoint_annihilates_low_monomials():
    coeff, _ = mzstar_on_monomial(SpaceParams(0), 5, 3)
    assert coeff == 0.0


def test_single_step_matches_apply_exactly():
    for beta in (0, 1, 2):
        params = SpaceParams(beta)
        for n in range(1, 12):
            coeff, power = mzstar_on_monomial(params, 1, n)
            applied = mzstar_apply(params, monomial(n, n))
            assert power == n - 1
            assert applied.coeffs[n - 1] == coeff


def test_iterated_coefficient_matches_repeated_apply():
    params = SpaceParams(1)
    for n in range(2, 10):
        for m in range(2, min(5, n + 1)):
            coeff, power = mzstar_on_monomial(params, m, n)
            out = monomial(n, n)
            for _ in range(m):
                out = mzstar_apply(params, out)
            np.testing.assert_allclose(out.coeffs[n - m], coeff, rtol=1e-13)
            assert power == n - m


# --- adjoint factorization --------------------------------------------


def test_factorization_of_rotation_is_trivial():
    lam = np.exp(1.1j)
    g, sigma, h = hurst_factors(rotation(lam), SpaceParams(0), 8)
    assert np.array_equal(g.coeffs, np.eye(9)[0])
    assert np.array_equal(h.coeffs, np.eye(9)[0])
    for z in (0.3, -0.5j):
        assert abs(apply_map(sigma, z) - np.conj(lam) * z) < 1e-14


def test_factorization_of_involution_uses_kernel():
    params = SpaceParams(1)
    alpha = 0.4 - 0.1j
    g, sigma, h = hurst_factors(involution(alpha), params, 64)
    np.testing.assert_allclose(
        g.coeffs, kernel_series(params, alpha, 64).coeffs, atol=1e-12
    )
    # companion map is the involution itself and h is the kernel reciprocal
    for z in (0.0, 0.3, 0.2j):
        assert abs(apply_map(sigma, z) - apply_map(involution(alpha), z)) < 1e-13
    product = mul(h, kernel_series(params, alpha, 64), 64)
    np.testing.assert_allclose(product.coeffs, np.eye(65)[0], atol=1e-12)


def test_factorization_of_hyperbolic_model_companion():
    _, sigma, _ = hurst_factors(hyperbolic_model(0.5), SpaceParams(0), 8)
    for z in (0.0, 0.5, -0.2j):
        assert abs(apply_map(sigma, z) - (0.5 * z + 0.5)) < 1e-14


def test_factorization_residual_rotation_exact():
    assert verify_hurst(rotation(np.exp(0.4j)), SpaceParams(0), 64, 8) == 0.0


def test_factorization_residual_small_blocks():
    for beta in (0, 1):
        r = verify_hurst(involution(0.5), SpaceParams(beta), 128, 8)
        assert r < 1e-8


def test_factorization_residual_nonincreasing_in_dimension():
    phi = hyperbolic_model(0.4)
    params = SpaceParams(1)
    prev = verify_hurst(phi, params, 64, 8)
    for degree in (128, 256):
        cur = verify_hurst(phi, params, degree, 8)
        assert cur <= prev or cur < 5e-15  # machine floor once converged
        prev = cur


def test_factorization_block_cap_enforced():
    with pytest.raises(DimMismatchError):
        verify_hurst(involution(0.5), SpaceParams(0), 32, 16)


# --- involution adjoint ------------------------------------------------


def test_involution_adjoint_at_zero_alternates_signs():
    params = SpaceParams(0)
    f = TruncatedSeries([1.0, 1.0, 1.0, 1.0, 1.0])
    out = involution_adjoint_apply(params, 0.0, f, 4)
    assert np.array_equal(out.coeffs, [1.0, -1.0, 1.0, -1.0, 1.0])


def test_involution_adjoint_matches_matrix_adjoint():
    degree = 128
    for beta in (0, 1, 2):
        params = SpaceParams(beta)
        T = composition_matrix(involution(0.5), params, degree)
        worst = 0.0
        for n in range(8):
            direct = involution_adjoint_apply(params, 0.5, monomial(n, degree), degree)
            via = from_coords(
                params, T.mat.conj().T @ to_coords(params, monomial(n, degree), degree + 1)
            )
            worst = max(worst, np.max(np.abs(direct.coeffs[:9] - via.coeffs[:9])))
        assert worst < 1e-8


def test_involution_adjoint_sends_kernel_to_constant():
    params = SpaceParams(0)
    out = involution_adjoint_apply(params, 0.5, kernel_series(params, 0.5, 256), 256)
    assert abs(out.coeffs[0] - 1.0) < 1e-8
    assert np.max(np.abs(out.coeffs[1:65])) < 1e-8


def test_involution_adjoint_requires_integer_weight_parameter():
    with pytest.raises(NonIntegerBetaError):
        involution_adjoint_apply(SpaceParams(0.5), 0.3, monomial(1, 8), 8)


def test_finite_sum_sign_convention_is_discriminating():
    # the binomial weights must carry powers of -alpha, not -conj(alpha)
    params = SpaceParams(0)
    alpha = 0.3j
    degree = 128
    T = composition_matrix(involution(alpha), params, degree)
    right_w = _binomial_alpha_weights(alpha, 0)
    wrong_w = np.array([comb(2, k) * (-np.conj(alpha)) ** k for k in range(3)])
    right_err = 0.0
    wrong_err = 0.0
    for n in range(8):
        f = monomial(n, degree)
        oracle = T.mat.conj().T @ to_coords(params, f, degree + 1)
        right = to_coords(params, _cowen_sum(params, alpha, f, degree, right_w), degree + 1)
        wrong = to_coords(params, _cowen_sum(params, alpha, f, degree, wrong_w), degree + 1)
        right_err = max(right_err, np.max(np.abs((right - oracle)[:9])))
        wrong_err = max(wrong_err, np.max(np.abs((wrong - oracle)[:9])))
    assert right_err < 1e-8
    assert wrong_err > 1e-3


# --- coordinate maps ---------------------------------------------------


def test_coordinate_round_trip():
    rng = np.random.default_rng(44)
    params = SpaceParams(0.7)
    f = random_poly(rng, 9)
    back = from_coords(params, to_coords(params, f, 10))
    padded = np.zeros(10, dtype=complex)
    padded[: len(f.coeffs)] = f.coeffs
    np.testing.assert_allclose(back.coeffs, padded, rtol=1e-13)


def test_coordinates_preserve_norm():
    rng = np.random.default_rng(45)
    params = SpaceParams(2)
    f = random_poly(rng, 14)
    coords = to_coords(params, f, 15)
    np.testing.assert_allclose(
        np.linalg.norm(coords) ** 2, inner_product(params, f, f).real, rtol=1e-12
    )
