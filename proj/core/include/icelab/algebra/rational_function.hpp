#pragma once

#include <span>

#include "icelab/algebra/poly.hpp"

namespace icelab {

/// Quotient of polynomials; no gcd normalization is attempted.
template <class F>
class RationalFunction {
 public:
  RationalFunction() = default;
  explicit RationalFunction(Poly<F> numerator)
      : num_(std::move(numerator)), den_(Poly<F>::constant(num_.num_variables(), F(1))) {}
  RationalFunction(Poly<F> numerator, Poly<F> denominator) : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_.is_zero()) raise(ErrorKind::PoleHit, "rational function with zero denominator");
  }

  const Poly<F>& numerator() const noexcept { return num_; }
  const Poly<F>& denominator() const noexcept { return den_; }

  F evaluate(std::span<const F> point) const {
    F d = den_.evaluate(point);
    if (is_zero(d)) raise(ErrorKind::PoleHit, "denominator vanishes at the evaluation point");
    return num_.evaluate(point) / d;
  }

  /// multiplier * this, asserted to be a polynomial.
  Poly<F> times_to_poly(const Poly<F>& multiplier) const { return poly_exact_div(num_ * multiplier, den_); }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator-(const RationalFunction& a) { return RationalFunction(-a.num_, a.den_); }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.num_.is_zero()) raise(ErrorKind::PoleHit, "division by the zero rational function");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
  }

 private:
  Poly<F> num_;
  Poly<F> den_;
};

}  // namespace icelab
