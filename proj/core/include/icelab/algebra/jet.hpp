#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "icelab/algebra/scalar.hpp"

namespace icelab {

/// Univariate truncated Taylor series c_0 + c_1 h + ... + c_n h^n around a
/// fixed center. Arithmetic keeps every coefficient up to the order exact
/// (exact backend) because multiplication never borrows from higher orders.
template <class F>
class Jet {
 public:
  Jet() : coeffs_(1, F(0)) {}
  explicit Jet(int order) : coeffs_(static_cast<std::size_t>(order) + 1, F(0)) {
    if (order < 0) raise(ErrorKind::InvalidArgument, "jet order must be non-negative");
  }

  static Jet constant(const F& c, int order) {
    Jet j(order);
    j.coeffs_[0] = c;
    return j;
  }

  /// The independent variable c + h.
  static Jet variable(const F& center, int order) {
    Jet j(order);
    j.coeffs_[0] = center;
    if (order >= 1) j.coeffs_[1] = F(1);
    return j;
  }

  static Jet from_coefficients(std::vector<F> coeffs, int order) {
    Jet j(order);
    for (std::size_t k = 0; k < coeffs.size() && k < j.coeffs_.size(); ++k) j.coeffs_[k] = std::move(coeffs[k]);
    return j;
  }

  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const F& operator[](std::size_t k) const { return coeffs_.at(k); }
  F& operator[](std::size_t k) { return coeffs_.at(k); }
  std::span<const F> coefficients() const noexcept { return coeffs_; }
  const F& value() const { return coeffs_[0]; }

  /// n-th derivative at the center: n! c_n.
  F derivative(int n) const { return factorial<F>(n) * coeffs_.at(static_cast<std::size_t>(n)); }

  Jet& operator+=(const Jet& o) {
    check(o);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    return *this;
  }
  Jet& operator-=(const Jet& o) {
    check(o);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    return *this;
  }
  Jet& operator+=(const F& c) {
    coeffs_[0] += c;
    return *this;
  }
  Jet& operator-=(const F& c) {
    coeffs_[0] -= c;
    return *this;
  }
  Jet& operator*=(const F& c) {
    for (auto& x : coeffs_) x *= c;
    return *this;
  }
  Jet& operator/=(const F& c) {
    if (icelab::is_zero(c)) raise(ErrorKind::PoleHit, "jet divided by zero");
    for (auto& x : coeffs_) x /= c;
    return *this;
  }
  Jet& operator*=(const Jet& o) {
    *this = *this * o;
    return *this;
  }
  Jet& operator/=(const Jet& o) {
    *this = *this * o.inverse();
    return *this;
  }

  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator+(Jet a, const F& c) { return a += c; }
  friend Jet operator+(const F& c, Jet a) { return a += c; }
  friend Jet operator-(Jet a, const F& c) { return a -= c; }
  friend Jet operator-(const F& c, const Jet& a) { return -a + c; }
  friend Jet operator*(Jet a, const F& c) { return a *= c; }
  friend Jet operator*(const F& c, Jet a) { return a *= c; }
  friend Jet operator/(Jet a, const F& c) { return a /= c; }
  friend Jet operator/(const Jet& a, const Jet& b) { return a * b.inverse(); }
  friend Jet operator/(const F& c, const Jet& b) { return b.inverse() * c; }
  friend Jet operator-(Jet a) {
    for (auto& x : a.coeffs_) x = -x;
    return a;
  }

  friend Jet operator*(const Jet& a, const Jet& b) {
    a.check(b);
    Jet r(a.order());
    const std::size_t n = a.coeffs_.size();
    F product;
    for (std::size_t i = 0; i < n; ++i) {
      if (icelab::is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; i + j < n; ++j) {
        product = a.coeffs_[i] * b.coeffs_[j];
        r.coeffs_[i + j] += product;
      }
    }
    return r;
  }

  /// Multiplicative inverse; requires a nonzero constant term.
  Jet inverse() const {
    if (icelab::is_zero(coeffs_[0])) raise(ErrorKind::ZeroConstantTerm, "jet with zero constant term is not invertible");
    if constexpr (!is_exact_v<F>) {
      F scale(1);
      for (const auto& c : coeffs_) {
        F a = abs_value(c);
        if (a > scale) scale = a;
      }
      if (FieldTraits<F>::negligible(coeffs_[0], scale)) {
        raise(ErrorKind::ZeroConstantTerm, "jet constant term vanishes to working precision");
      }
    }
    Jet r(order());
    const std::size_t n = coeffs_.size();
    F inv0 = F(1) / coeffs_[0];
    r.coeffs_[0] = inv0;
    F acc;
    for (std::size_t k = 1; k < n; ++k) {
      acc = F(0);
      for (std::size_t i = 1; i <= k; ++i) acc += coeffs_[i] * r.coeffs_[k - i];
      r.coeffs_[k] = -acc * inv0;
    }
    return r;
  }

  Jet pow(int exponent) const {
    if (exponent < 0) return inverse().pow(-exponent);
    Jet result = constant(F(1), order());
    Jet base = *this;
    unsigned e = static_cast<unsigned>(exponent);
    while (e != 0) {
      if (e & 1u) result *= base;
      e >>= 1;
      if (e != 0) base = base * base;
    }
    return result;
  }

  /// Same series at a different truncation; new coefficients are zero.
  Jet with_order(int order) const {
    Jet r(order);
    for (std::size_t k = 0; k < r.coeffs_.size() && k < coeffs_.size(); ++k) r.coeffs_[k] = coeffs_[k];
    return r;
  }

  friend bool operator==(const Jet& a, const Jet& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void check(const Jet& o) const {
    if (o.coeffs_.size() != coeffs_.size()) raise(ErrorKind::InvalidArgument, "jets of different order");
  }

  std::vector<F> coeffs_;
};

namespace detail {

// sin(h), cos(h) for a jet with zero constant term.
template <class F>
std::pair<Jet<F>, Jet<F>> sin_cos_nilpotent(const Jet<F>& h) {
  const int n = h.order();
  Jet<F> s(n);
  Jet<F> c = Jet<F>::constant(F(1), n);
  Jet<F> power = Jet<F>::constant(F(1), n);
  F fact(1);
  for (int k = 1; k <= n; ++k) {
    power *= h;
    fact *= F(k);
    Jet<F> term = power / fact;
    switch (k % 4) {
      case 1: s += term; break;
      case 2: c -= term; break;
      case 3: s -= term; break;
      default: c += term; break;
    }
  }
  return {s, c};
}

}  // namespace detail

inline Real sin(const Real& x) { return boost::multiprecision::sin(x); }
inline Real cos(const Real& x) { return boost::multiprecision::cos(x); }

/// sin of a jet by the addition theorem around its constant term.
template <class F>
Jet<F> sin(const Jet<F>& x) {
  Jet<F> h = x;
  h[0] = F(0);
  auto [sh, ch] = detail::sin_cos_nilpotent(h);
  F s0 = icelab::sin(x.value());
  F c0 = icelab::cos(x.value());
  return sh * c0 + ch * s0;
}

template <class F>
Jet<F> cos(const Jet<F>& x) {
  Jet<F> h = x;
  h[0] = F(0);
  auto [sh, ch] = detail::sin_cos_nilpotent(h);
  F s0 = icelab::sin(x.value());
  F c0 = icelab::cos(x.value());
  return ch * c0 - sh * s0;
}

/// Taylor jet of an elementary expression `f` (a callable accepting and
/// returning Jet<F>) at `center`. A vanishing denominator at the center is
/// reported as PoleAtCenter.
template <class F, class Fn>
Jet<F> taylor_jet(Fn&& f, const F& center, int order) {
  try {
    return std::forward<Fn>(f)(Jet<F>::variable(center, order));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ZeroConstantTerm || e.kind() == ErrorKind::PoleHit) {
      raise(ErrorKind::PoleAtCenter, e.what());
    }
    throw;
  }
}

}  // namespace icelab
