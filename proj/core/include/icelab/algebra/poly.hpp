#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "icelab/algebra/scalar.hpp"

namespace icelab {

inline constexpr std::size_t kMaxVariables = 8;

/// Exponent vector; unused trailing slots stay zero. Ordered lexicographically,
/// which is the monomial order used by division.
using Exponents = std::array<std::uint8_t, kMaxVariables>;

/// Sparse multivariate polynomial over F in a fixed number of variables.
/// No zero coefficients are stored.
template <class F>
class Poly {
 public:
  using Terms = std::map<Exponents, F>;

  Poly() = default;
  explicit Poly(std::size_t nvars) : nvars_(nvars) {
    if (nvars > kMaxVariables) raise(ErrorKind::InvalidArgument, "too many polynomial variables");
  }

  static Poly constant(std::size_t nvars, const F& c) {
    Poly p(nvars);
    p.add_term(Exponents{}, c);
    return p;
  }

  static Poly variable(std::size_t nvars, std::size_t index) {
    Poly p(nvars);
    Exponents e{};
    e.at(index) = 1;
    p.add_term(e, F(1));
    return p;
  }

  static Poly monomial(std::size_t nvars, const Exponents& e, const F& c) {
    Poly p(nvars);
    p.add_term(e, c);
    return p;
  }

  /// Univariate polynomial sum_k coeffs[k] v^k in variable `index`.
  static Poly univariate(std::size_t nvars, std::size_t index, std::span<const F> coeffs) {
    Poly p(nvars);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      Exponents e{};
      e.at(index) = static_cast<std::uint8_t>(k);
      p.add_term(e, coeffs[k]);
    }
    return p;
  }

  std::size_t num_variables() const noexcept { return nvars_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  F coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? F(0) : it->second;
  }

  F constant_term() const { return coefficient(Exponents{}); }

  void add_term(const Exponents& e, const F& c) {
    if (icelab::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (icelab::is_zero(it->second)) terms_.erase(it);
    }
  }

  /// -1 for the zero polynomial.
  int degree_in(std::size_t var) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[var]));
    return d;
  }

  int total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
      int sum = 0;
      for (std::size_t i = 0; i < nvars_; ++i) sum += e[i];
      d = std::max(d, sum);
    }
    return d;
  }

  Poly& operator+=(const Poly& other) {
    check_compatible(other);
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
  }

  Poly& operator-=(const Poly& other) {
    check_compatible(other);
    for (const auto& [e, c] : other.terms_) add_term(e, F(-c));
    return *this;
  }

  Poly& operator*=(const F& scalar) {
    if (icelab::is_zero(scalar)) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= scalar;
    return *this;
  }

  Poly& operator*=(const Poly& other) {
    *this = *this * other;
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const F& s) { return a *= s; }
  friend Poly operator*(const F& s, Poly a) { return a *= s; }
  friend Poly operator-(Poly a) {
    for (auto& [e, c] : a.terms_) c = -c;
    return a;
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    a.check_compatible(b);
    Poly result(a.nvars_);
    F product;
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        product = ca * cb;
        result.add_term(add_exponents(ea, eb), product);
      }
    }
    return result;
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  Poly pow(unsigned n) const {
    Poly result = constant(nvars_, F(1));
    Poly base = *this;
    while (n != 0) {
      if (n & 1u) result *= base;
      n >>= 1;
      if (n != 0) base = base * base;
    }
    return result;
  }

  F evaluate(std::span<const F> point) const {
    if (point.size() != nvars_) raise(ErrorKind::InvalidArgument, "evaluation point has wrong arity");
    // Powers are cached per variable up to the degree actually present.
    std::vector<std::vector<F>> powers(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i) {
      int d = std::max(degree_in(i), 0);
      powers[i].resize(static_cast<std::size_t>(d) + 1);
      powers[i][0] = F(1);
      for (int k = 1; k <= d; ++k) powers[i][k] = powers[i][k - 1] * point[i];
    }
    F sum(0);
    F term;
    for (const auto& [e, c] : terms_) {
      term = c;
      for (std::size_t i = 0; i < nvars_; ++i) {
        if (e[i] != 0) term *= powers[i][e[i]];
      }
      sum += term;
    }
    return sum;
  }

  /// Sets variable `var` to `value`; the variable remains in the list with
  /// every exponent zero.
  Poly substitute(std::size_t var, const F& value) const {
    Poly result(nvars_);
    std::vector<F> powers(static_cast<std::size_t>(std::max(degree_in(var), 0)) + 1);
    powers[0] = F(1);
    for (std::size_t k = 1; k < powers.size(); ++k) powers[k] = powers[k - 1] * value;
    for (const auto& [e, c] : terms_) {
      Exponents f = e;
      f[var] = 0;
      result.add_term(f, F(c * powers[e[var]]));
    }
    return result;
  }

  /// Result(z_0..z_{n-1}) = this(z_{images[0]}, ..., z_{images[n-1]}).
  Poly rename_variables(std::span<const std::size_t> images) const {
    if (images.size() != nvars_) raise(ErrorKind::InvalidArgument, "rename needs one image per variable");
    Poly result(nvars_);
    for (const auto& [e, c] : terms_) {
      Exponents f{};
      for (std::size_t i = 0; i < nvars_; ++i) {
        unsigned v = f.at(images[i]) + e[i];
        if (v > 255u) raise(ErrorKind::InvalidArgument, "exponent overflow");
        f[images[i]] = static_cast<std::uint8_t>(v);
      }
      result.add_term(f, c);
    }
    return result;
  }

  Poly swap_variables(std::size_t i, std::size_t j) const {
    std::vector<std::size_t> images(nvars_);
    for (std::size_t k = 0; k < nvars_; ++k) images[k] = k;
    std::swap(images[i], images[j]);
    return rename_variables(images);
  }

  /// Substitutes z_i -> images[i] for every variable at once.
  Poly compose(std::span<const Poly> images) const {
    if (images.size() != nvars_) raise(ErrorKind::InvalidArgument, "compose needs one image per variable");
    std::size_t target_vars = images.empty() ? nvars_ : images.front().nvars_;
    std::vector<std::vector<Poly>> powers(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i) {
      int d = std::max(degree_in(i), 0);
      powers[i].push_back(constant(target_vars, F(1)));
      for (int k = 1; k <= d; ++k) powers[i].push_back(powers[i].back() * images[i]);
    }
    Poly result(target_vars);
    for (const auto& [e, c] : terms_) {
      Poly term = constant(target_vars, c);
      for (std::size_t i = 0; i < nvars_; ++i) {
        if (e[i] != 0) term *= powers[i][e[i]];
      }
      result += term;
    }
    return result;
  }

  /// z_i -> factors[i] * z_i.
  Poly scale_variables(std::span<const F> factors) const {
    Poly result(nvars_);
    for (const auto& [e, c] : terms_) {
      F coeff = c;
      for (std::size_t i = 0; i < nvars_; ++i) coeff *= ipow(factors[i], e[i]);
      result.add_term(e, coeff);
    }
    return result;
  }

  /// Drops coefficients that are negligible relative to `scale` (float
  /// backend cleanup after cancellations); a no-op for exact fields.
  void prune(const F& scale) {
    if constexpr (!is_exact_v<F>) {
      for (auto it = terms_.begin(); it != terms_.end();) {
        it = near_zero(it->second, scale) ? terms_.erase(it) : std::next(it);
      }
    }
  }

  F max_abs_coefficient() const {
    F m(0);
    for (const auto& [e, c] : terms_) {
      F a = abs_value(c);
      if (a > m) m = a;
    }
    return m;
  }

  std::string to_string(std::span<const std::string> names = {}) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      if (!first) out << " + ";
      first = false;
      out << "(" << render(it->second) << ")";
      for (std::size_t i = 0; i < nvars_; ++i) {
        if (it->first[i] == 0) continue;
        out << "*" << (i < names.size() ? names[i] : "x" + std::to_string(i + 1));
        if (it->first[i] > 1) out << "^" << int(it->first[i]);
      }
    }
    return out.str();
  }

  static Exponents add_exponents(const Exponents& a, const Exponents& b) {
    Exponents r{};
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      unsigned v = unsigned(a[i]) + unsigned(b[i]);
      if (v > 255u) raise(ErrorKind::InvalidArgument, "exponent overflow");
      r[i] = static_cast<std::uint8_t>(v);
    }
    return r;
  }

 private:
  void check_compatible(const Poly& other) const {
    if (other.nvars_ != nvars_) raise(ErrorKind::InvalidArgument, "polynomials live in different variable sets");
  }

  std::size_t nvars_ = 0;
  Terms terms_;
};

/// Exact quotient num/den. Lexicographic leading-term division; when den
/// divides num every step is forced, so any leftover signals NonzeroRemainder.
template <class F>
Poly<F> poly_exact_div(const Poly<F>& num, const Poly<F>& den) {
  if (den.is_zero()) raise(ErrorKind::PoleHit, "division by the zero polynomial");
  if (num.num_variables() != den.num_variables()) {
    raise(ErrorKind::InvalidArgument, "polynomials live in different variable sets");
  }
  const std::size_t n = num.num_variables();
  const F scale = num.max_abs_coefficient();
  Poly<F> quotient(n);
  Poly<F> rest = num;
  const auto& [lead_den_exp, lead_den_coeff] = *den.terms().rbegin();
  while (!rest.is_zero()) {
    const auto [lead_exp, lead_coeff] = *rest.terms().rbegin();
    Exponents q{};
    for (std::size_t i = 0; i < n; ++i) {
      if (lead_exp[i] < lead_den_exp[i]) {
        raise(ErrorKind::NonzeroRemainder, "divisor does not divide the leading term");
      }
      q[i] = static_cast<std::uint8_t>(lead_exp[i] - lead_den_exp[i]);
    }
    F c = lead_coeff / lead_den_coeff;
    Poly<F> step = Poly<F>::monomial(n, q, c);
    quotient += step;
    rest -= step * den;
    if constexpr (!is_exact_v<F>) {
      // The leading term cancels only approximately in floating point.
      auto it = rest.terms().find(lead_exp);
      if (it != rest.terms().end()) rest.add_term(lead_exp, F(-it->second));
      rest.prune(scale);
    }
  }
  return quotient;
}

}  // namespace icelab
