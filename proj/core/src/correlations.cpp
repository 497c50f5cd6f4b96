#include "icelab/correlations.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "icelab/algebra/linalg.hpp"
#include "icelab/algebra/permutation.hpp"
#include "icelab/identities.hpp"

namespace icelab {

template <class F>
F GeneratingFunction<F>::evaluate(const F& z) const {
  F sum(0);
  for (std::size_t k = coefficients.size(); k-- > 0;) sum = sum * z + coefficients[k];
  return sum;
}

template <class F>
GeneratingFunction<F> h_poly(int n, const WeightSpec<F>& weights) {
  if (n < 1) raise(ErrorKind::InvalidArgument, "h_N needs N >= 1");
  GeneratingFunction<F> h;
  h.n = n;
  if (n == 1) {
    h.coefficients = {F(1)};
    return h;
  }
  for (int r = 1; r <= n; ++r) h.coefficients.push_back(boundary_correlation(n, weights, r));
  return h;
}

namespace {

template <class T>
std::vector<T> multiply_univariate(const std::vector<T>& a, const std::vector<T>& b) {
  std::vector<T> out(a.size() + b.size() - 1, T(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// Coefficients of z^{s-j} (z-1)^{j-1} h(z).
template <class F>
std::vector<F> alternant_row(const GeneratingFunction<F>& h, int s, int j) {
  std::vector<F> row(static_cast<std::size_t>(s - j), F(0));
  row.insert(row.end(), h.coefficients.begin(), h.coefficients.end());
  const std::vector<F> z_minus_one = {F(-1), F(1)};
  for (int k = 1; k < j; ++k) row = multiply_univariate(row, z_minus_one);
  return row;
}

template <class F>
using PartitionWeights = std::map<std::vector<int>, F>;

// Calls f(nu) for every nu with lambda / nu a horizontal strip of the given
// size and nu_i = 0 for i >= length.
template <class Fn>
void horizontal_strips(const std::vector<int>& lambda, int size, std::size_t length, Fn&& f) {
  const std::size_t s = lambda.size();
  std::vector<int> nu(s, 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i == s) {
      if (left == 0) f(nu);
      return;
    }
    const int lo = i + 1 < s ? lambda[i + 1] : 0;
    const int hi = i < length ? lambda[i] : 0;
    for (int v = hi; v >= lo; --v) {
      const int used = lambda[i] - v;
      if (used > left) break;
      nu[i] = v;
      self(self, i + 1, left - used);
    }
  };
  rec(rec, 0, size);
}

// Cauchy-Binet: det[f_j(z_k)] / prod_{j<k}(z_k - z_j) is a combination of
// Schur polynomials s_lambda with maximal minors of the coefficient matrix as
// weights. Monomial coefficients then follow by peeling one variable at a
// time (s_lambda(z_1..z_k) = sum over horizontal strips lambda / nu of
// s_nu(z_1..z_{k-1}) z_k^{|lambda / nu|}); by symmetry only weakly decreasing
// exponent sequences are visited.
template <class F>
Poly<F> alternant_quotient(const std::vector<std::vector<F>>& rows) {
  const int s = static_cast<int>(rows.size());
  int width = 0;
  for (const auto& row : rows) width = std::max(width, static_cast<int>(row.size()));
  const int bound = width - s;

  PartitionWeights<F> weights;
  std::vector<int> m(static_cast<std::size_t>(s));
  const bool flip = (s * (s - 1) / 2) % 2 == 1;
  auto columns = [&](auto&& self, int i, int hi) -> void {
    if (i == s) {
      Matrix<F> a(static_cast<std::size_t>(s), static_cast<std::size_t>(s), F(0));
      for (std::size_t j = 0; j < a.rows(); ++j) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
          if (static_cast<std::size_t>(m[k]) < rows[j].size()) a(j, k) = rows[j][static_cast<std::size_t>(m[k])];
        }
      }
      F c = det(std::move(a));
      if (is_zero(c)) return;
      std::vector<int> lambda(m.size());
      for (int k = 0; k < s; ++k) lambda[static_cast<std::size_t>(k)] = m[static_cast<std::size_t>(k)] - (s - 1 - k);
      weights.emplace(std::move(lambda), flip ? F(-c) : c);
      return;
    }
    for (int v = hi; v >= s - 1 - i; --v) {
      m[static_cast<std::size_t>(i)] = v;
      self(self, i + 1, v - 1);
    }
  };
  columns(columns, 0, width - 1);

  Poly<F> out(static_cast<std::size_t>(s));
  const std::vector<int> empty(static_cast<std::size_t>(s), 0);
  std::vector<int> mu;
  auto peel = [&](auto&& self, const PartitionWeights<F>& level, int k, int cap) -> void {
    if (k == 0) {
      auto it = level.find(empty);
      if (it == level.end() || is_zero(it->second)) return;
      std::vector<int> e(mu.rbegin(), mu.rend());
      do {
        Exponents x{};
        for (std::size_t i = 0; i < e.size(); ++i) x[i] = static_cast<std::uint8_t>(e[i]);
        out.add_term(x, it->second);
      } while (std::next_permutation(e.begin(), e.end()));
      return;
    }
    for (int v = 0; v <= cap; ++v) {
      PartitionWeights<F> next;
      for (const auto& [lambda, c] : level) {
        horizontal_strips(lambda, v, static_cast<std::size_t>(k - 1), [&](const std::vector<int>& nu) {
          auto [it, inserted] = next.try_emplace(nu, c);
          if (!inserted) it->second += c;
        });
      }
      if (next.empty()) continue;
      mu.push_back(v);
      self(self, next, k - 1, v);
      mu.pop_back();
    }
  };
  peel(peel, weights, s, bound);
  return out;
}

}  // namespace

template <class F>
Poly<F> h_ns_from(std::span<const GeneratingFunction<F>> gens, int s) {
  if (s == 0) return Poly<F>::constant(0, F(1));
  if (s < 0 || static_cast<std::size_t>(s) > gens.size() || static_cast<std::size_t>(s) > kMaxVariables) {
    raise(ErrorKind::InvalidArgument, "h_{N,s} needs 0 <= s <= N");
  }
  std::vector<std::vector<F>> rows;
  for (int j = 1; j <= s; ++j) rows.push_back(alternant_row(gens[static_cast<std::size_t>(j - 1)], s, j));
  return alternant_quotient(rows);
}

template <class F>
Poly<F> h_ns(int n, int s, const WeightSpec<F>& weights_in) {
  [[maybe_unused]] const GuardFor<F> guard;
  const WeightSpec<F> weights = weights_in.widened();
  if (s < 0 || s > n) raise(ErrorKind::InvalidArgument, "h_{N,s} needs 0 <= s <= N");
  std::vector<GeneratingFunction<F>> gens;
  for (int j = 1; j <= s; ++j) gens.push_back(h_poly(n - s + j, weights));
  return h_ns_from<F>(gens, s);
}

template <class F>
F u_of_z(const F& z, const F& t, const F& delta) {
  F den = (t * t - F(2) * delta * t) * z + F(1);
  if (is_zero(den)) raise(ErrorKind::PoleHit, "u(z) has a pole at this z");
  return -(z - F(1)) / den;
}

template <class F>
Jet<F> u_of_z(const Jet<F>& z, const F& t, const F& delta) {
  Jet<F> den = z * F(t * t - F(2) * delta * t) + F(1);
  try {
    return -(z - F(1)) * den.inverse();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ZeroConstantTerm) raise(ErrorKind::PoleHit, "u(z) has a pole at the expansion point");
    throw;
  }
}

template <class F>
Series<F> compose_with_u(const Poly<F>& p, const std::vector<int>& orders, const F& t, const F& delta) {
  std::vector<int> box(p.num_variables());
  for (std::size_t i = 0; i < box.size(); ++i) box[i] = std::max(p.degree_in(i), 0);
  Series<F> out = Series<F>::from_poly(p, box);
  for (std::size_t i = 0; i < box.size(); ++i) {
    out = out.substitute(i, u_of_z(Jet<F>::variable(F(0), orders.at(i)), t, delta), orders[i]);
  }
  return out;
}

template <class F>
Poly<F> embed(const Poly<F>& p, std::size_t nvars, std::size_t offset) {
  if (p.num_variables() + offset > nvars) raise(ErrorKind::InvalidArgument, "embedding does not fit");
  Poly<F> out(nvars);
  for (const auto& [e, c] : p.terms()) {
    Exponents f{};
    for (std::size_t i = 0; i < p.num_variables(); ++i) f[i + offset] = e[i];
    out.add_term(f, c);
  }
  return out;
}

template <class F>
F iterated_residue(const Integrand<F>& integrand, std::span<const ResidueSpec<F>> specs,
                   const ResidueOptions& options) {
  const std::size_t n = integrand.num_variables();
  if (specs.size() != n) raise(ErrorKind::InvalidArgument, "one residue spec per variable");
  std::vector<int> targets(n);
  std::vector<int> orders(n);
  for (std::size_t i = 0; i < n; ++i) {
    targets[i] = specs[i].target_exponent + integrand.pole_orders()[i];
    if (targets[i] < 0) return F(0);
    orders[i] = targets[i] + std::max(options.extra_order, 0);
  }

  bool shifted = false;
  std::vector<Poly<F>> shift;
  for (std::size_t i = 0; i < n; ++i) {
    shifted = shifted || !is_zero(specs[i].center);
    shift.push_back(Poly<F>::variable(n, i) + Poly<F>::constant(n, specs[i].center));
  }

  std::vector<Series<F>> factors;
  for (const auto& f : integrand.poly_factors()) {
    if (f.exponent == 0) continue;
    Poly<F> local = shifted ? f.poly.compose(shift) : f.poly;
    Series<F> series = Series<F>::from_poly(local, orders);
    if (f.exponent < 0) {
      if (FieldTraits<F>::negligible(series.constant_term(), series.max_abs_coefficient())) {
        raise(ErrorKind::ZeroConstantTerm, "a denominator vanishes at the contour center");
      }
      series = series.inverse();
    }
    factors.push_back(series.pow(std::abs(f.exponent)));
  }
  for (const auto& e : integrand.expansions()) factors.push_back(e(orders));

  F prefactor = integrand.prefactor();
  if (factors.empty()) return targets == std::vector<int>(n, 0) ? prefactor : F(0);

  // The densest factor is contracted last without forming the full product.
  auto density = [](const Series<F>& s) {
    std::size_t count = 0;
    for (const auto& c : s.data()) count += is_zero(c) ? 0 : 1;
    return count;
  };
  auto densest = std::max_element(factors.begin(), factors.end(),
                                   [&](const Series<F>& a, const Series<F>& b) { return density(a) < density(b); });
  std::iter_swap(densest, factors.end() - 1);
  Series<F> acc = Series<F>::constant(orders, F(1));
  for (std::size_t i = 0; i + 1 < factors.size(); ++i) acc *= factors[i];

  if (options.processing_order.empty()) return prefactor * acc.product_coefficient(factors.back(), targets);

  std::vector<std::size_t> order = options.processing_order;
  std::vector<std::size_t> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::size_t> identity(n);
  std::iota(identity.begin(), identity.end(), std::size_t{0});
  if (sorted != identity) raise(ErrorKind::InvalidArgument, "processing order must be a permutation of the variables");

  Series<F> full = acc * factors.back();
  std::vector<std::size_t> remaining = identity;
  for (std::size_t var : order) {
    const auto axis = static_cast<std::size_t>(std::find(remaining.begin(), remaining.end(), var) - remaining.begin());
    full = full.slice(axis, targets[var]);
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(axis));
  }
  return prefactor * full.constant_term();
}

namespace {

template <class F>
struct Vars {
  std::size_t n;
  Poly<F> operator()(std::size_t i) const { return Poly<F>::variable(n, i); }
  Poly<F> c(const F& value) const { return Poly<F>::constant(n, value); }
};

template <class F>
F sign_power(int k) {
  return k % 2 == 0 ? F(1) : F(-1);
}

void check_efp_range(int n, int r, int s) {
  if (n < 1 || r < 1 || r > n || s < 0 || s > n) raise(ErrorKind::PositionsOutOfRange, "need 1 <= r <= N and 0 <= s <= N");
}

template <class F>
std::vector<ResidueSpec<F>> residues_at(std::size_t count, const F& center) {
  return std::vector<ResidueSpec<F>>(count, ResidueSpec<F>{center, -1});
}

}  // namespace

template <class F>
F efp_integral_asym(int n, int r, int s, const WeightSpec<F>& weights_in, const ResidueOptions& options)  {
  [[maybe_unused]] const GuardFor<F> guard;
  const WeightSpec<F> weights = weights_in.widened();
  check_efp_range(n, r, s);
  if (s == 0) return F(1);
  const F t = weights.t();
  const F delta = weights.delta();
  const F kappa = t * t - F(2) * delta * t;
  const auto z = Vars<F>{static_cast<std::size_t>(s)};
  Integrand<F> integrand(z.n);
  integrand.scale(sign_power<F>(s));
  for (int j = 1; j <= s; ++j) {
    const std::size_t i = static_cast<std::size_t>(j - 1);
    integrand.pole(i, r);
    integrand.unit(kappa * z(i) + z.c(F(1)), s - j);
    integrand.unit(z(i) - z.c(F(1)), -(s - j + 1));
  }
  for (std::size_t j = 0; j < z.n; ++j) {
    for (std::size_t k = j + 1; k < z.n; ++k) {
      integrand.unit(z(j) - z(k));
      integrand.unit(t * t * z(j) * z(k) - F(2) * delta * t * z(j) + z.c(F(1)), -1);
    }
  }
  integrand.unit(h_ns(n, s, weights));
  return iterated_residue<F>(integrand, residues_at(z.n, F(0)), options);
}

template <class F>
F efp_integral_sym(int n, int r, int s, const WeightSpec<F>& weights_in, const ResidueOptions& options)  {
  [[maybe_unused]] const GuardFor<F> guard;
  const WeightSpec<F> weights = weights_in.widened();
  check_efp_range(n, r, s);
  if (s == 0) return F(1);
  const F t = weights.t();
  const F delta = weights.delta();
  const F kappa = t * t - F(2) * delta * t;
  const F zs = partition_function(s, weights);
  const auto z = Vars<F>{static_cast<std::size_t>(s)};
  Integrand<F> integrand(z.n);
  integrand.scale(sign_power<F>(s) / factorial<F>(s) * zs / (ipow(weights.a(), s * (s - 1)) * ipow(weights.c(), s)));
  for (std::size_t i = 0; i < z.n; ++i) {
    integrand.pole(i, r);
    integrand.unit(z(i) - z.c(F(1)), -1);
    // u^{-(s-1)} = ((kappa z + 1) / (1 - z))^{s-1}
    integrand.unit(kappa * z(i) + z.c(F(1)), s - 1);
    integrand.unit(z.c(F(1)) - z(i), -(s - 1));
  }
  for (std::size_t j = 0; j < z.n; ++j) {
    for (std::size_t k = 0; k < z.n; ++k) {
      if (j == k) continue;
      integrand.unit(z(k) - z(j));
      integrand.unit(t * t * z(j) * z(k) - F(2) * delta * t * z(j) + z.c(F(1)), -1);
    }
  }
  integrand.expanded([hss = h_ns(s, s, weights), t, delta](const std::vector<int>& orders) {
    return compose_with_u(hss, orders, t, delta);
  });
  integrand.unit(h_ns(n, s, weights));
  return iterated_residue<F>(integrand, residues_at(z.n, F(0)), options);
}

template <class F>
F zbot_integral(int n, int s, std::span<const int> positions, const WeightSpec<F>& weights_in,
                const ResidueOptions& options)  {
  [[maybe_unused]] const GuardFor<F> guard;
  const WeightSpec<F> weights = weights_in.widened();
  if (n < 1 || s < 0 || s > n || static_cast<int>(positions.size()) != s) {
    raise(ErrorKind::PositionsOutOfRange, "need s positions with 0 <= s <= N");
  }
  const F zn = partition_function(n, weights);
  if (s == 0) return zn;
  const F t = weights.t();
  const F delta = weights.delta();
  const auto z = Vars<F>{static_cast<std::size_t>(s)};
  F prefactor = zn / (ipow(weights.a(), s * (n - 1)) * ipow(weights.c(), s));
  for (int j = 1; j <= s; ++j) prefactor *= ipow(t, j - positions[static_cast<std::size_t>(j - 1)]);
  Integrand<F> integrand(z.n);
  integrand.scale(prefactor);
  for (std::size_t i = 0; i < z.n; ++i) integrand.pole(i, positions[i]);
  for (std::size_t j = 0; j < z.n; ++j) {
    for (std::size_t k = j + 1; k < z.n; ++k) {
      integrand.unit(z(k) - z(j));
      integrand.unit(t * t * z(j) * z(k) - F(2) * delta * t * z(j) + z.c(F(1)), -1);
    }
  }
  integrand.unit(h_ns(n, s, weights));
  return iterated_residue<F>(integrand, residues_at(z.n, F(0)), options);
}

template <class F>
F ztop_integral(int n, int s, std::span<const int> positions, const WeightSpec<F>& weights_in,
                const ResidueOptions& options)  {
  [[maybe_unused]] const GuardFor<F> guard;
  const WeightSpec<F> weights = weights_in.widened();
  if (n < 1 || s < 0 || s > n || static_cast<int>(positions.size()) != s) {
    raise(ErrorKind::PositionsOutOfRange, "need s positions with 0 <= s <= N");
  }
  (void)RowState::from_positions(n, positions);
  if (s == 0) return F(1);
  const F t = weights.t();
  const F delta = weights.delta();
  const auto w = Vars<F>{static_cast<std::size_t>(s)};
  F prefactor = ipow(weights.c(), s) * ipow(weights.a(), s * (n - 1));
  for (int j = 1; j <= s; ++j) prefactor *= ipow(t, positions[static_cast<std::size_t>(j - 1)] - j);
  Integrand<F> integrand(w.n);
  integrand.scale(prefactor);
  for (std::size_t i = 0; i < w.n; ++i) {
    integrand.pole(i, s);
    integrand.unit(w(i), positions[i] - 1);
  }
  for (std::size_t j = 0; j < w.n; ++j) {
    for (std::size_t k = j + 1; k < w.n; ++k) {
      integrand.unit(w(j) - w(k));
      integrand.unit(t * t * w(j) * w(k) - F(2) * delta * t * w(j) + w.c(F(1)));
    }
  }
  return iterated_residue<F>(integrand, residues_at(w.n, F(1)), options);
}

template <class F>
F efp_double_integral(int n, int r, int s, const WeightSpec<F>& weights_in, const ResidueOptions& options)  {
  [[maybe_unused]] const GuardFor<F> guard;
  const WeightSpec<F> weights = weights_in.widened();
  check_efp_range(n, r, s);
  if (s == 0) return F(1);
  if (2 * static_cast<std::size_t>(s) > kMaxVariables) raise(ErrorKind::InvalidArgument, "double integral needs s <= 4");
  const F t = weights.t();
  const F delta = weights.delta();
  const std::size_t ss = static_cast<std::size_t>(s);
  const auto v = Vars<F>{2 * ss};
  auto x = [&](std::size_t j) { return v(j); };
  auto y = [&](std::size_t j) { return v(ss + j); };

  Integrand<F> integrand(v.n);
  // (t y - 1)^{-s} = t^{-s} (y - 1/t)^{-s}
  integrand.scale(ipow(t, -s * s));
  Poly<F> running = v.c(F(1));
  for (int j = 1; j <= s; ++j) {
    const std::size_t i = static_cast<std::size_t>(j - 1);
    integrand.pole(i, r - s + j);
    integrand.pole(ss + i, s);
    integrand.unit(y(i), -(r + j - 1));
    running = running * x(i) * y(i);
    integrand.unit(v.c(F(1)) - running, -1);
  }
  for (std::size_t j = 0; j < ss; ++j) {
    for (std::size_t k = j + 1; k < ss; ++k) {
      integrand.unit(y(k) - y(j));
      integrand.unit(y(j) * y(k) - F(2) * delta * y(k) + v.c(F(1)));
      integrand.unit(x(k) - x(j));
      integrand.unit(x(j) * x(k) - F(2) * delta * x(j) + v.c(F(1)), -1);
    }
  }
  const std::vector<F> inverse_t(ss, F(1) / t);
  integrand.unit(embed(h_ns(n, s, weights).scale_variables(inverse_t), v.n));

  std::vector<ResidueSpec<F>> specs = residues_at(ss, F(0));
  const auto at_y = residues_at(ss, F(F(1) / t));
  specs.insert(specs.end(), at_y.begin(), at_y.end());
  try {
    return iterated_residue<F>(integrand, specs, options);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ZeroConstantTerm) raise(ErrorKind::PoleCollision, e.what());
    throw;
  }
}

template <class F>
F efp_w_form(int n, int r, int s, const WeightSpec<F>& weights_in, const ResidueOptions& options)  {
  [[maybe_unused]] const GuardFor<F> guard;
  const WeightSpec<F> weights = weights_in.widened();
  check_efp_range(n, r, s);
  if (s == 0) return F(1);
  const F t = weights.t();
  const F delta = weights.delta();
  const auto x = Vars<F>{static_cast<std::size_t>(s)};
  Integrand<F> integrand(x.n);
  integrand.scale(ipow(t, s * (r - 1)) / factorial<F>(s));
  for (std::size_t i = 0; i < x.n; ++i) integrand.pole(i, r);
  for (std::size_t j = 0; j < x.n; ++j) {
    for (std::size_t k = 0; k < x.n; ++k) {
      if (j == k) continue;
      integrand.unit(x(j) - x(k));
      integrand.unit(x(j) * x(k) - F(2) * delta * x(j) + x.c(F(1)), -1);
    }
  }
  integrand.expanded([&weights, s](const std::vector<int>& orders) { return ws_hom_series(s, orders, weights); });
  const std::vector<F> inverse_t(x.n, F(1) / t);
  integrand.unit(h_ns(n, s, weights).scale_variables(inverse_t));
  return iterated_residue<F>(integrand, residues_at(x.n, F(0)), options);
}

CheckReport geometric_multisum_check(int s, int r, int order) {
  if (s < 1 || s > static_cast<int>(kMaxVariables) || order < 0) {
    raise(ErrorKind::InvalidArgument, "geometric sum check needs 1 <= s <= 8 and order >= 0");
  }
  const std::vector<int> orders(static_cast<std::size_t>(s), order);
  // Both sides multiplied by prod_j z_j^{r-s+j}: the summand becomes
  // prod_j z_j^{e_j} with e_j = r - s + j - r_j >= 0.
  Series<Rational> rhs = Series<Rational>::constant(orders, Rational(1));
  Poly<Rational> running = Poly<Rational>::constant(static_cast<std::size_t>(s), Rational(1));
  for (std::size_t j = 0; j < static_cast<std::size_t>(s); ++j) {
    running = running * Poly<Rational>::variable(static_cast<std::size_t>(s), j);
    Poly<Rational> factor = Poly<Rational>::constant(static_cast<std::size_t>(s), Rational(1)) - running;
    rhs *= Series<Rational>::from_poly(factor, orders).inverse();
  }

  auto lhs_with_cutoff = [&](int cutoff) {
    Series<Rational> lhs(orders);
    std::vector<int> e(static_cast<std::size_t>(s));
    // Choose r_s, r_{s-1}, ... downwards; r_1 > -cutoff.
    auto rec = [&](auto&& self, int j, int upper) -> void {
      if (j == 0) {
        lhs.set(e, lhs.coefficient(e) + Rational(1));
        return;
      }
      const int lowest = std::max(r - s + j - order, -cutoff + j);
      for (int rj = upper; rj >= lowest; --rj) {
        e[static_cast<std::size_t>(j - 1)] = r - s + j - rj;
        self(self, j - 1, rj - 1);
      }
    };
    rec(rec, s, r);
    return lhs;
  };

  const int cutoff = order + s;
  const Series<Rational> lhs = lhs_with_cutoff(cutoff);
  const bool stable = lhs == lhs_with_cutoff(cutoff + 1) && lhs == lhs_with_cutoff(cutoff + 2);

  CheckReport report;
  report.check_id = "efp.geometric_multisum";
  report.backend = FieldTraits<Rational>::name;
  report.param("s", std::to_string(s)).param("r", std::to_string(r)).param("order", std::to_string(order));
  report.param("cutoff", std::to_string(cutoff));
  std::size_t mismatches = 0;
  for (std::size_t i = 0; i < lhs.size(); ++i) mismatches += lhs.data()[i] == rhs.data()[i] ? 0 : 1;
  report.lhs = "coefficients=" + std::to_string(lhs.size());
  report.rhs = stable ? "cutoff-stable" : "cutoff-unstable";
  report.discrepancy = std::to_string(mismatches);
  report.status = mismatches == 0 && stable ? Status::Pass : Status::Fail;
  return report;
}

CheckReport residue_lemma_check(int s, Lcg64& rng) {
  if (s < 1 || s > 5) raise(ErrorKind::InvalidArgument, "residue lemma check needs 1 <= s <= 5");
  const std::size_t n = static_cast<std::size_t>(s);
  // Random polynomial of degree <= 2 in each variable, then symmetrized.
  Poly<Rational> seed(n);
  const int terms = rng.uniform_int(1, 4);
  for (int k = 0; k < terms; ++k) {
    Exponents e{};
    for (std::size_t i = 0; i < n; ++i) e[i] = static_cast<std::uint8_t>(rng.uniform_int(0, 2));
    seed.add_term(e, random_signed_rational(rng));
  }
  Poly<Rational> phi(n);
  for_each_permutation(n, [&](const Permutation& sigma) { phi += seed.rename_variables(sigma.images()); });
  const Rational w = random_signed_rational(rng);

  Integrand<Rational> integrand(n);
  for (std::size_t j = 0; j < n; ++j) integrand.pole(j, s);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j + 1; k < n; ++k) {
      integrand.unit(Poly<Rational>::variable(n, k) - Poly<Rational>::variable(n, j), 2);
    }
  }
  integrand.unit(phi);
  const Rational lhs = iterated_residue<Rational>(integrand, residues_at(n, w));
  const std::vector<Rational> diagonal(n, w);
  const Rational rhs = sign_power<Rational>(s * (s - 1) / 2) * factorial<Rational>(s) * phi.evaluate(diagonal);
  CheckReport report = compare_values("efp.residue_lemma", lhs, rhs);
  report.param("s", std::to_string(s)).param("w", render(w)).param("phi_terms", std::to_string(phi.size()));
  return report;
}

#define ICELAB_INSTANTIATE_CORRELATIONS(F)                                                                         \
  template struct GeneratingFunction<F>;                                                                           \
  template GeneratingFunction<F> h_poly<F>(int, const WeightSpec<F>&);                                             \
  template Poly<F> h_ns<F>(int, int, const WeightSpec<F>&);                                                        \
  template Poly<F> h_ns_from<F>(std::span<const GeneratingFunction<F>>, int);                                      \
  template F u_of_z<F>(const F&, const F&, const F&);                                                              \
  template Jet<F> u_of_z<F>(const Jet<F>&, const F&, const F&);                                                    \
  template Series<F> compose_with_u<F>(const Poly<F>&, const std::vector<int>&, const F&, const F&);               \
  template Poly<F> embed<F>(const Poly<F>&, std::size_t, std::size_t);                                             \
  template F iterated_residue<F>(const Integrand<F>&, std::span<const ResidueSpec<F>>, const ResidueOptions&);     \
  template F efp_integral_asym<F>(int, int, int, const WeightSpec<F>&, const ResidueOptions&);                     \
  template F efp_integral_sym<F>(int, int, int, const WeightSpec<F>&, const ResidueOptions&);                      \
  template F zbot_integral<F>(int, int, std::span<const int>, const WeightSpec<F>&, const ResidueOptions&);        \
  template F ztop_integral<F>(int, int, std::span<const int>, const WeightSpec<F>&, const ResidueOptions&);        \
  template F efp_double_integral<F>(int, int, int, const WeightSpec<F>&, const ResidueOptions&);                   \
  template F efp_w_form<F>(int, int, int, const WeightSpec<F>&, const ResidueOptions&);

ICELAB_INSTANTIATE_CORRELATIONS(Rational)
ICELAB_INSTANTIATE_CORRELATIONS(Real)

}  // namespace icelab
