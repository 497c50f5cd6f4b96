#pragma once

#include <span>
#include <vector>

#include "icelab/algebra/series.hpp"
#include "icelab/lattice.hpp"
#include "icelab/report.hpp"

namespace icelab {

inline constexpr int kMaxDoubleAntisymmetrization = 6;

/// psi(x, y) = 1 / ((1 - x y)(x + y + tau x y)).
template <class F>
F psi(const F& x, const F& y, const F& tau);

/// W_s(x; y) with tau; PoleHit or CoincidingParameters on bad input.
template <class F>
F ws_eval(std::span<const F> x, std::span<const F> y, const F& tau);

/// W_s with every y at y0, from the derivative determinant.
template <class F>
F ws_degenerate(std::span<const F> x, const F& y0, const F& tau);

/// The same value as the eps -> 0 limit of ws_eval at y_k = y0 + k eps,
/// computed with jets.
template <class F>
F ws_confluent_limit(std::span<const F> x, const F& y0, const F& tau);

/// W_s(t z; 1/t, ..., 1/t) from Z_s and h_{s,s}(u).
template <class F>
F ws_hom(std::span<const F> z, const WeightSpec<F>& weights);

/// W_s(x; 1/t, ..., 1/t) expanded around x = 0.
template <class F>
Series<F> ws_hom_series(int s, const std::vector<int>& orders, const WeightSpec<F>& weights);

/// Both sides of the double antisymmetrization relation.
template <class F>
F cantini_lhs(std::span<const F> x, std::span<const F> y, const F& tau);
template <class F>
F cantini_rhs(std::span<const F> x, std::span<const F> y, const F& tau);

CheckReport check_kmst(std::span<const Real> lambda, std::span<const Real> nu, const Real& eta,
                       double tolerance = kTrigTolerance);
CheckReport check_ws_ik(std::span<const Real> lambda, std::span<const Real> nu, const Real& eta, const Real& zeta,
                        const Real& zeta_alt, double tolerance = kTrigTolerance);

template <class F>
CheckReport check_identity1(std::span<const F> z, const WeightSpec<F>& weights);
template <class F>
CheckReport check_cantini(std::span<const F> x, std::span<const F> y, const F& tau);
/// ws_hom(z) against ws_degenerate and ws_confluent_limit at x = t z, y0 = 1/t.
template <class F>
CheckReport check_whom(std::span<const F> z, const WeightSpec<F>& weights);
/// s = 2: both sides times the common denominator reduce to the same polynomial.
CheckReport check_cantini_polynomial(const Rational& tau);

/// prod_{j=1}^s (1 - t^{2j}) / (1 - t^2).
template <class F>
F smallid_constant(int s, const F& t);

template <class F>
CheckReport check_dsvan(const F& t, std::span<const F> z);
template <class F>
CheckReport check_smallid(const F& t, std::span<const F> eps);
template <class F>
CheckReport check_tracy_widom(const F& p, std::span<const F> z);
/// Exact only: the eps -> 0 limit of both sides of the double
/// antisymmetrization relation at x = t z, y_j = (1 + c_j eps) / t.
CheckReport check_cantini_reduces_to_tw(const Rational& p, std::span<const Rational> z);

}  // namespace icelab
