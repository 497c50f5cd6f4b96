#pragma once

#include <span>
#include <vector>

#include "icelab/algebra/jet.hpp"
#include "icelab/algebra/scalar.hpp"
#include "icelab/report.hpp"

namespace icelab {

/// Trigonometric weight functions at a fixed crossing parameter eta.
class VertexWeightFunctions {
 public:
  explicit VertexWeightFunctions(Real eta) : eta_(std::move(eta)), c_(icelab::sin(Real(2 * eta_))) {}

  const Real& eta() const noexcept { return eta_; }
  Real a(const Real& l, const Real& n) const { return icelab::sin(Real(l - n + eta_)); }
  Real b(const Real& l, const Real& n) const { return icelab::sin(Real(l - n - eta_)); }
  const Real& c() const noexcept { return c_; }
  Real d(const Real& l, const Real& lp) const { return icelab::sin(Real(l - lp)); }
  Real e(const Real& l, const Real& lp) const { return icelab::sin(Real(l - lp + 2 * eta_)); }
  /// c / (a b); PoleInPhi when a or b vanishes to working precision.
  Real phi(const Real& l, const Real& n) const;
  /// (a(l,0) / b(l,0)) * (b(l+xi,0) / a(l+xi,0)).
  Real gamma(const Real& xi, const Real& l) const;

  /// phi(l + h, 0) as a jet in h.
  Jet<Real> phi_jet(const Real& l, int order) const;

 private:
  Real eta_;
  Real c_;
};

/// Determinant formula for Z_N with distinct lambdas and distinct nus.
Real ik_inhomogeneous(std::span<const Real> lambda, std::span<const Real> nu, const Real& eta);

/// Homogeneous limit (nu = 0) from the Hankel determinant of derivatives of phi.
Real ik_homogeneous(const Real& lambda, const Real& eta, int n);

/// Z_N(lambda_1..lambda_N; 0..0) against the homogeneous Z_N at lambda0 times
/// the a-ratio prefactor and h_{N,N}(gamma(lambda_j - lambda0)).
CheckReport partial_inhomogeneous_relation(std::span<const Real> lambda, const Real& lambda0, const Real& eta,
                                           double tolerance = kTrigTolerance);

}  // namespace icelab
