#pragma once

/**
 * @file jacobi.hpp
 * @brief Jacobi polynomials with rational (possibly half-integer) parameters,
 *        the renormalized family Q_k^eps attached to a geometry, their partial
 *        sums, and closed forms for the values at x = 1.
 *
 * Polynomials are built from the explicit binomial sum, which is division-free
 * given generalized binomials; the closed forms at 1 provide an independent
 * route that implementations downstream cross-check against full evaluation.
 */

#include "tdesign/geometry.hpp"
#include "tdesign/polynomial.hpp"
#include "tdesign/rational.hpp"

namespace tdesign {

// Classical Jacobi polynomial P_k^(alpha,beta) in the variable y, expanded to
// monomial coefficients. Requires alpha > -1 and beta > -1.
RationalPolynomial jacobi_poly(unsigned k, const Rational& alpha, const Rational& beta);

// Renormalized Jacobi function Q_k^eps for the given geometry, as a polynomial
// in x on [0, 1] (the classical polynomial is evaluated at 2x - 1).
RationalPolynomial renorm_q(unsigned k, int eps, const GeometryParams& geom);

// Partial sum Q_0^eps + ... + Q_n^eps.
RationalPolynomial r_sum(unsigned n, int eps, const GeometryParams& geom);

// Q_i^0(1) in closed form (equals renorm_q(i, 0, geom) evaluated at 1).
Rational q_at_one(unsigned i, const GeometryParams& geom);

// R_{s-eps}^eps(1) in closed form, for s >= 1.
Rational r_at_one(unsigned s, int eps, const GeometryParams& geom);

// The exact ratio Q_{i+1}^0(1) / Q_i^0(1), as a product of three factors;
// used to verify that the values at 1 ascend strictly. Undefined (division
// by zero) at rank 2, degree 1 with i = 0, where half_dim + 2i - 1 vanishes.
Rational q_one_ratio(unsigned i, const GeometryParams& geom);

} // namespace tdesign
