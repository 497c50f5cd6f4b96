#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>
#include <gmpxx.h>

#include "icelab/errors.hpp"

namespace icelab {

/// Exact backend: arbitrary precision, always reduced, positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

/// Float backend: MPFR with a runtime-selectable precision. Expression
/// templates are off so that `auto` and generic code behave like plain values.
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;

inline constexpr int kDefaultPrecisionBits = 53;

/// Precision (bits) used for newly created Real values.
int precision_bits() noexcept;
void set_precision_bits(int bits);

/// Relative tolerance scaled from a 53-bit reference value to the current
/// precision, so a 1e-9 policy at 53 bits becomes ~1e-9 * 2^-(bits-53).
Real scaled_tolerance(double tolerance_at_53_bits);

class PrecisionScope {
 public:
  explicit PrecisionScope(int bits) : saved_(precision_bits()) { set_precision_bits(bits); }
  ~PrecisionScope() { set_precision_bits(saved_); }
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  int saved_;
};

/// Extra bits carried by float routines whose intermediate sums cancel
/// (residue extraction, alternant quotients, determinant formulas).
inline constexpr int kGuardBits = 64;

/// For its lifetime, new Reals get precision_bits() + kGuardBits bits.
/// precision_bits() and scaled_tolerance() are unaffected.
class GuardPrecision {
 public:
  GuardPrecision();
  ~GuardPrecision();
  GuardPrecision(const GuardPrecision&) = delete;
  GuardPrecision& operator=(const GuardPrecision&) = delete;

 private:
  unsigned saved_digits10_;
};

/// GuardPrecision in the float backend, nothing in exact fields.
template <class F>
struct GuardFor {};
template <>
struct GuardFor<Real> : GuardPrecision {};

/// Copy of x carrying at least the current default precision.
Real widen(const Real& x);
inline Rational widen(const Rational& x) { return x; }

template <class F>
std::vector<F> widen(std::span<const F> xs) {
  std::vector<F> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(widen(x));
  return out;
}

template <class F>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
  static constexpr bool exact = true;
  static constexpr const char* name = "exact";
  static bool is_zero(const Rational& x) { return sgn(x) == 0; }
  static Rational from_rational(const Rational& q) { return q; }
  static std::string render(const Rational& x) { return x.get_str(); }
  static double to_double(const Rational& x) { return x.get_d(); }
  /// Exact backend: a value is negligible only when it is exactly zero.
  static bool negligible(const Rational& x, const Rational& /*scale*/) { return is_zero(x); }
};

template <>
struct FieldTraits<Real> {
  static constexpr bool exact = false;
  static constexpr const char* name = "float";
  static bool is_zero(const Real& x) { return x == 0; }
  static Real from_rational(const Rational& q);
  static std::string render(const Real& x);
  static double to_double(const Real& x) { return x.convert_to<double>(); }
  /// |x| below a few ulps of |scale|; the guard used to detect poles and
  /// coincidences in the float backend.
  static bool negligible(const Real& x, const Real& scale);
};

/// Integer ring; used for denominator-free dense polynomial kernels.
template <>
struct FieldTraits<Integer> {
  static constexpr bool exact = true;
  static constexpr const char* name = "integer";
  static bool is_zero(const Integer& x) { return sgn(x) == 0; }
  static std::string render(const Integer& x) { return x.get_str(); }
  static bool negligible(const Integer& x, const Integer& /*scale*/) { return is_zero(x); }
};

template <class F>
inline constexpr bool is_exact_v = FieldTraits<F>::exact;

template <class F>
bool is_zero(const F& x) {
  return FieldTraits<F>::is_zero(x);
}

template <class F>
F from_rational(const Rational& q) {
  return FieldTraits<F>::from_rational(q);
}

template <class F>
std::string render(const F& x) {
  return FieldTraits<F>::render(x);
}

/// Zero up to accumulated round-off relative to `scale`: exact equality in
/// exact fields, |x| <= |scale| 2^{-3 bits / 4} for the float backend. Used
/// for remainders of divisions that are exact in theory.
template <class F>
bool near_zero(const F& x, const F& scale) {
  if constexpr (is_exact_v<F>) {
    return is_zero(x);
  } else {
    return boost::multiprecision::abs(x) <=
           boost::multiprecision::abs(scale) * boost::multiprecision::ldexp(F(1), -(3 * precision_bits()) / 4);
  }
}

/// Integer power; negative exponents divide and raise PoleHit on zero base.
template <class F>
F ipow(const F& base, int exponent) {
  if (exponent < 0) {
    if (is_zero(base)) raise(ErrorKind::PoleHit, "negative power of zero");
    F inv = F(1) / base;
    return ipow(inv, -exponent);
  }
  F result(1);
  F b = base;
  unsigned e = static_cast<unsigned>(exponent);
  while (e != 0) {
    if (e & 1u) result *= b;
    e >>= 1;
    if (e != 0) b *= b;
  }
  return result;
}

template <class F>
F factorial(int n) {
  F result(1);
  for (int k = 2; k <= n; ++k) result *= F(k);
  return result;
}

template <class F>
F binomial(int n, int k) {
  if (k < 0 || k > n) return F(0);
  F result(1);
  for (int j = 1; j <= k; ++j) {
    result *= F(n - k + j);
    result /= F(j);
  }
  return result;
}

template <class F>
F abs_value(const F& x) {
  if constexpr (is_exact_v<F>) {
    return abs(x);
  } else {
    return boost::multiprecision::abs(x);
  }
}

/// |a-b| / max(|a|,|b|), zero when both vanish.
template <class F>
F relative_error(const F& a, const F& b) {
  F diff = abs_value(F(a - b));
  F scale = abs_value(a);
  F sb = abs_value(b);
  if (sb > scale) scale = sb;
  if (is_zero(scale)) return F(0);
  return diff / scale;
}

}  // namespace icelab
