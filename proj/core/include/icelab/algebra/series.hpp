#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <span>
#include <vector>

#include "icelab/algebra/jet.hpp"
#include "icelab/algebra/poly.hpp"
#include "icelab/algebra/scalar.hpp"

namespace icelab {

/// Multivariate power series truncated per variable: the coefficient of
/// v_0^{e_0}...v_{n-1}^{e_{n-1}} is kept iff e_i <= order_i for every i.
/// Storage is dense, first variable slowest, so componentwise e' <= e implies
/// index(e') <= index(e) and in-range exponent sums add linearly.
///
/// Over a ring without division (Integer) only the ring operations are used.
template <class F>
class Series {
 public:
  Series() = default;

  explicit Series(std::vector<int> orders) : orders_(std::move(orders)) {
    if (orders_.size() > kMaxVariables) raise(ErrorKind::InvalidArgument, "too many series variables");
    strides_.assign(orders_.size(), 1);
    std::size_t size = 1;
    for (std::size_t i = orders_.size(); i-- > 0;) {
      if (orders_[i] < 0) raise(ErrorKind::InvalidArgument, "negative truncation order");
      strides_[i] = size;
      size *= static_cast<std::size_t>(orders_[i]) + 1;
    }
    coeffs_.assign(size, F(0));
  }

  static Series constant(std::vector<int> orders, const F& c) {
    Series s(std::move(orders));
    s.coeffs_[0] = c;
    return s;
  }

  static Series variable(std::vector<int> orders, std::size_t index) {
    Series s(std::move(orders));
    if (s.orders_.at(index) >= 1) s.coeffs_[s.strides_[index]] = F(1);
    return s;
  }

  /// Truncating conversion; terms beyond the orders are dropped.
  static Series from_poly(const Poly<F>& p, std::vector<int> orders) {
    Series s(std::move(orders));
    if (p.num_variables() != s.num_variables()) raise(ErrorKind::InvalidArgument, "variable count mismatch");
    for (const auto& [e, c] : p.terms()) {
      std::size_t idx = 0;
      bool inside = true;
      for (std::size_t i = 0; i < s.orders_.size(); ++i) {
        if (e[i] > s.orders_[i]) {
          inside = false;
          break;
        }
        idx += e[i] * s.strides_[i];
      }
      if (inside) s.coeffs_[idx] += c;
    }
    return s;
  }

  Poly<F> to_poly() const {
    Poly<F> p(num_variables());
    for_each_nonzero([&](std::span<const int> e, const F& c) {
      Exponents x{};
      for (std::size_t i = 0; i < e.size(); ++i) x[i] = static_cast<std::uint8_t>(e[i]);
      p.add_term(x, c);
    });
    return p;
  }

  std::size_t num_variables() const noexcept { return orders_.size(); }
  const std::vector<int>& orders() const noexcept { return orders_; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  std::span<const F> data() const noexcept { return coeffs_; }
  std::span<F> data() noexcept { return coeffs_; }
  std::size_t stride(std::size_t axis) const { return strides_.at(axis); }

  std::size_t index_of(std::span<const int> e) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < orders_.size(); ++i) idx += static_cast<std::size_t>(e[i]) * strides_[i];
    return idx;
  }

  bool in_range(std::span<const int> e) const {
    for (std::size_t i = 0; i < orders_.size(); ++i) {
      if (e[i] < 0 || e[i] > orders_[i]) return false;
    }
    return true;
  }

  /// Zero outside the truncation box (including negative exponents).
  F coefficient(std::span<const int> e) const {
    if (e.size() != orders_.size()) raise(ErrorKind::InvalidArgument, "exponent arity mismatch");
    if (!in_range(e)) return F(0);
    return coeffs_[index_of(e)];
  }

  void set(std::span<const int> e, const F& value) {
    if (!in_range(e)) raise(ErrorKind::InvalidArgument, "exponent outside the truncation box");
    coeffs_[index_of(e)] = value;
  }

  const F& constant_term() const { return coeffs_.at(0); }

  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const F& c) { return icelab::is_zero(c); });
  }

  /// Calls fn(exponents, coefficient) for every nonzero coefficient in
  /// storage order.
  template <class Fn>
  void for_each_nonzero(Fn&& fn) const {
    std::vector<int> e(orders_.size(), 0);
    for (std::size_t idx = 0; idx < coeffs_.size(); ++idx) {
      if (!icelab::is_zero(coeffs_[idx])) fn(std::span<const int>(e), coeffs_[idx]);
      advance(e);
    }
  }

  Series& operator+=(const Series& o) {
    check(o);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    return *this;
  }
  Series& operator-=(const Series& o) {
    check(o);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    return *this;
  }
  Series& operator*=(const F& c) {
    for (auto& x : coeffs_) x *= c;
    return *this;
  }
  Series& operator*=(const Series& o) {
    *this = *this * o;
    return *this;
  }

  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(Series a, const F& c) { return a *= c; }
  friend Series operator*(const F& c, Series a) { return a *= c; }
  friend Series operator-(Series a) {
    for (auto& x : a.coeffs_) x = -x;
    return a;
  }
  friend bool operator==(const Series& a, const Series& b) {
    return a.orders_ == b.orders_ && a.coeffs_ == b.coeffs_;
  }

  /// Truncated product. Cost is nnz(a) * nnz(b), so multiplying a dense
  /// accumulator by a sparse factor stays cheap.
  friend Series operator*(const Series& a, const Series& b) {
    a.check(b);
    Series r(a.orders_);
    const auto entries = b.nonzero_entries();
    const std::size_t n = a.orders_.size();
    std::vector<int> e(n, 0);
    F product;
    for (std::size_t ia = 0; ia < a.coeffs_.size(); ++ia, a.advance(e)) {
      if (icelab::is_zero(a.coeffs_[ia])) continue;
      for (const auto& entry : entries) {
        bool inside = true;
        for (std::size_t i = 0; i < n; ++i) {
          if (e[i] + entry.exponents[i] > a.orders_[i]) {
            inside = false;
            break;
          }
        }
        if (!inside) continue;
        product = a.coeffs_[ia] * b.coeffs_[entry.index];
        r.coeffs_[ia + entry.index] += product;
      }
    }
    return r;
  }

  /// Coefficient of v^target in this * other, without forming the product.
  F product_coefficient(const Series& other, std::span<const int> target) const {
    check(other);
    if (!in_range(target)) return F(0);
    F sum(0);
    F product;
    std::vector<int> complement(orders_.size());
    for_each_nonzero([&](std::span<const int> e, const F& c) {
      for (std::size_t i = 0; i < e.size(); ++i) {
        complement[i] = target[i] - e[i];
        if (complement[i] < 0) return;
      }
      product = c * other.coeffs_[other.index_of(complement)];
      sum += product;
    });
    return sum;
  }

  /// Two-sided inverse up to truncation; requires a nonzero constant term.
  Series inverse() const {
    if (icelab::is_zero(coeffs_[0])) raise(ErrorKind::ZeroConstantTerm, "series with zero constant term is not invertible");
    if constexpr (!is_exact_v<F>) {
      F scale(1);
      for (const auto& c : coeffs_) {
        F a = abs_value(c);
        if (a > scale) scale = a;
      }
      if (FieldTraits<F>::negligible(coeffs_[0], scale)) {
        raise(ErrorKind::ZeroConstantTerm, "series constant term vanishes to working precision");
      }
    }
    Series g(orders_);
    const F inv0 = F(1) / coeffs_[0];
    g.coeffs_[0] = inv0;
    auto entries = nonzero_entries();
    entries.erase(entries.begin());  // constant term
    const std::size_t n = orders_.size();
    std::vector<int> e(n, 0);
    advance(e);
    F acc;
    F product;
    for (std::size_t idx = 1; idx < coeffs_.size(); ++idx, advance(e)) {
      acc = F(0);
      for (const auto& entry : entries) {
        if (entry.index > idx) break;
        bool below = true;
        for (std::size_t i = 0; i < n; ++i) {
          if (entry.exponents[i] > e[i]) {
            below = false;
            break;
          }
        }
        if (!below) continue;
        product = coeffs_[entry.index] * g.coeffs_[idx - entry.index];
        acc += product;
      }
      g.coeffs_[idx] = -acc * inv0;
    }
    return g;
  }

  Series pow(int exponent) const {
    if (exponent < 0) return inverse().pow(-exponent);
    Series result = constant(orders_, F(1));
    Series base = *this;
    unsigned e = static_cast<unsigned>(exponent);
    while (e != 0) {
      if (e & 1u) result *= base;
      e >>= 1;
      if (e != 0) base = base * base;
    }
    return result;
  }

  /// Treats the coefficients along `axis` as a polynomial in that variable
  /// and substitutes the univariate series g for it. The new axis keeps
  /// terms up to `new_order`.
  Series substitute(std::size_t axis, const Jet<F>& g, int new_order) const {
    std::vector<int> new_orders = orders_;
    new_orders.at(axis) = new_order;
    Series r(new_orders);
    const int old_order = orders_[axis];
    const Jet<F> base = g.with_order(new_order);
    std::vector<Jet<F>> powers;
    powers.push_back(Jet<F>::constant(F(1), new_order));
    for (int k = 1; k <= old_order; ++k) powers.push_back(powers.back() * base);

    std::vector<int> e(orders_.size(), 0);
    std::vector<int> f(orders_.size(), 0);
    F product;
    for (std::size_t idx = 0; idx < coeffs_.size(); ++idx, advance(e)) {
      if (icelab::is_zero(coeffs_[idx])) continue;
      f = e;
      const Jet<F>& p = powers[static_cast<std::size_t>(e[axis])];
      for (int m = 0; m <= new_order; ++m) {
        if (icelab::is_zero(p[static_cast<std::size_t>(m)])) continue;
        f[axis] = m;
        product = coeffs_[idx] * p[static_cast<std::size_t>(m)];
        r.coeffs_[r.index_of(f)] += product;
      }
    }
    return r;
  }

  /// v_axis -> factor * v_axis.
  Series rescale(std::size_t axis, const F& factor) const {
    Series r = *this;
    std::vector<F> powers(static_cast<std::size_t>(orders_.at(axis)) + 1);
    powers[0] = F(1);
    for (std::size_t k = 1; k < powers.size(); ++k) powers[k] = powers[k - 1] * factor;
    std::vector<int> e(orders_.size(), 0);
    for (std::size_t idx = 0; idx < coeffs_.size(); ++idx, advance(e)) {
      if (e[axis] != 0) r.coeffs_[idx] *= powers[static_cast<std::size_t>(e[axis])];
    }
    return r;
  }

  /// Same series in a different truncation box; new slots are zero.
  Series reshaped(std::vector<int> new_orders) const {
    Series r(std::move(new_orders));
    if (r.num_variables() != num_variables()) raise(ErrorKind::InvalidArgument, "variable count mismatch");
    for_each_nonzero([&](std::span<const int> e, const F& c) {
      if (r.in_range(e)) r.coeffs_[r.index_of(e)] = c;
    });
    return r;
  }

  /// Coefficient of v_axis^exponent as a series in the remaining variables.
  Series slice(std::size_t axis, int exponent) const {
    std::vector<int> rest;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
      if (i != axis) rest.push_back(orders_[i]);
    }
    Series r(rest);
    if (exponent < 0 || exponent > orders_.at(axis)) return r;
    std::vector<int> e(orders_.size(), 0);
    std::vector<int> f(rest.size(), 0);
    for (std::size_t idx = 0; idx < coeffs_.size(); ++idx, advance(e)) {
      if (e[axis] != exponent || icelab::is_zero(coeffs_[idx])) continue;
      for (std::size_t i = 0, j = 0; i < e.size(); ++i) {
        if (i != axis) f[j++] = e[i];
      }
      r.coeffs_[r.index_of(f)] = coeffs_[idx];
    }
    return r;
  }

  F max_abs_coefficient() const {
    F m(0);
    for (const auto& c : coeffs_) {
      F a = abs_value(c);
      if (a > m) m = a;
    }
    return m;
  }

 private:
  struct Entry {
    std::size_t index;
    std::vector<int> exponents;
  };

  std::vector<Entry> nonzero_entries() const {
    std::vector<Entry> out;
    std::vector<int> e(orders_.size(), 0);
    for (std::size_t idx = 0; idx < coeffs_.size(); ++idx, advance(e)) {
      if (!icelab::is_zero(coeffs_[idx])) out.push_back({idx, e});
    }
    return out;
  }

  // Odometer step in storage order (last variable fastest).
  void advance(std::vector<int>& e) const {
    for (std::size_t i = e.size(); i-- > 0;) {
      if (++e[i] <= orders_[i]) return;
      e[i] = 0;
    }
  }

  void check(const Series& o) const {
    if (o.orders_ != orders_) raise(ErrorKind::InvalidArgument, "series with different truncation boxes");
  }

  std::vector<int> orders_;
  std::vector<std::size_t> strides_;
  std::vector<F> coeffs_;
};

}  // namespace icelab
