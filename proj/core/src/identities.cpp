#include "icelab/identities.hpp"

#include "icelab/algebra/jet.hpp"
#include "icelab/algebra/linalg.hpp"
#include "icelab/algebra/permutation.hpp"
#include "icelab/algebra/rational_function.hpp"
#include "icelab/correlations.hpp"
#include "icelab/izergin_korepin.hpp"

namespace icelab {

namespace {

int vandermonde_degree(std::size_t s) { return static_cast<int>(s * (s - 1) / 2); }

template <class F>
F sign_power(int k) {
  return k % 2 == 0 ? F(1) : F(-1);
}

template <class T>
T power(const T& base, int exponent, const T& one) {
  T out = one;
  for (int i = 0; i < exponent; ++i) out = out * base;
  return out;
}

template <class F>
void require_distinct(std::span<const F> v, const char* what) {
  for (std::size_t j = 0; j < v.size(); ++j) {
    for (std::size_t k = j + 1; k < v.size(); ++k) {
      if (v[j] == v[k]) raise(ErrorKind::CoincidingParameters, std::string(what) + " must be pairwise distinct");
    }
  }
}

template <class F>
void require_distinct(const std::vector<F>& v, const char* what) {
  require_distinct(std::span<const F>(v), what);
}

// prod_{j<k} (v_k - v_j)
template <class F>
F vandermonde(std::span<const F> v) {
  F out(1);
  for (std::size_t j = 0; j < v.size(); ++j) {
    for (std::size_t k = j + 1; k < v.size(); ++k) out *= v[k] - v[j];
  }
  return out;
}

template <class F>
F vandermonde(const std::vector<F>& v) {
  return vandermonde(std::span<const F>(v));
}

template <class F>
F nonzero(const F& x, const char* what) {
  if (is_zero(x)) raise(ErrorKind::PoleHit, what);
  return x;
}

// Runs `body`, turning a vanishing jet denominator into PoleHit.
template <class Fn>
auto with_pole_check(Fn&& body) {
  try {
    return body();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ZeroConstantTerm) raise(ErrorKind::PoleHit, e.what());
    throw;
  }
}

template <class T, class F>
T psi_of(const T& x, const T& y, const F& tau, const T& one) {
  return one / ((one - x * y) * (x + y + tau * x * y));
}

template <class F>
F det_of(Matrix<F> m) {
  return det(std::move(m));
}

template <class F>
Jet<F> det_of(const Matrix<Jet<F>>& m) {
  const int order = m(0, 0).order();
  return det_leibniz(m, Jet<F>::constant(F(1), order));
}

template <class T, class F>
T cantini_rhs_generic(std::span<const T> x, std::span<const T> y, const F& tau, const T& one) {
  const std::size_t s = x.size();
  T product = one;
  Matrix<T> m(s, s, one);
  for (std::size_t j = 0; j < s; ++j) {
    for (std::size_t k = 0; k < s; ++k) {
      product = product * (x[j] + y[k] + tau * x[j] * y[k]);
      m(j, k) = psi_of(x[j], y[k], tau, one);
    }
  }
  return product * det_of(std::move(m));
}

template <class T, class F>
T cantini_summand(std::span<const T> x, std::span<const T> y, const F& tau, const T& one) {
  const std::size_t s = x.size();
  T value = one;
  T running = one;
  for (std::size_t j = 0; j < s; ++j) {
    const T xy = x[j] * y[j];
    running = running * xy;
    value = value * power(xy, static_cast<int>(s - 1 - j), one) / (one - running);
  }
  for (std::size_t j = 0; j < s; ++j) {
    for (std::size_t k = j + 1; k < s; ++k) {
      value = value * (x[j] * x[k] + tau * x[k] + one) * (y[j] * y[k] + tau * y[k] + one);
    }
  }
  return value;
}

template <class T, class F>
T cantini_lhs_generic(std::span<const T> x, std::span<const T> y, const F& tau, const T& one) {
  const std::size_t s = x.size();
  if (s > static_cast<std::size_t>(kMaxDoubleAntisymmetrization)) {
    raise(ErrorKind::InvalidArgument, "double antisymmetrization is capped at s = 6");
  }
  std::vector<T> xs(x.begin(), x.end());
  std::vector<T> ys(y.begin(), y.end());
  T total = one - one;
  for_each_permutation(s, [&](const Permutation& sigma) {
    for (std::size_t i = 0; i < s; ++i) xs[i] = x[sigma[i]];
    for_each_permutation(s, [&](const Permutation& pi) {
      for (std::size_t i = 0; i < s; ++i) ys[i] = y[pi[i]];
      T term = cantini_summand<T, F>(xs, ys, tau, one);
      if (sigma.sign() * pi.sign() < 0) {
        total = total - term;
      } else {
        total = total + term;
      }
    });
  });
  return total;
}

template <class F>
void check_ws_poles(std::span<const F> x, std::span<const F> y, const F& tau) {
  for (const auto& xj : x) {
    for (const auto& yk : y) {
      nonzero<F>(F(1) - xj * yk, "1 - x y vanishes");
      nonzero<F>(xj + yk + tau * xj * yk, "x + y + tau x y vanishes");
    }
  }
}

template <class F>
std::vector<F> u_values(std::span<const F> z, const F& t, const F& delta) {
  std::vector<F> u;
  for (const auto& zj : z) {
    if (zj == F(1)) raise(ErrorKind::PoleHit, "z = 1 is excluded");
    u.push_back(nonzero<F>(u_of_z(zj, t, delta), "u(z) vanishes"));
  }
  return u;
}

template <class F>
std::string join(std::span<const F> v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + render(v[i]);
  return out;
}

}  // namespace

template <class F>
F psi(const F& x, const F& y, const F& tau) {
  const F den = (F(1) - x * y) * (x + y + tau * x * y);
  return F(1) / nonzero<F>(den, "psi has a pole here");
}

template <class F>
F ws_eval(std::span<const F> x, std::span<const F> y, const F& tau) {
  if (x.size() != y.size()) raise(ErrorKind::WidthMismatch, "x and y must have equal length");
  require_distinct(x, "x");
  require_distinct(y, "y");
  check_ws_poles(x, y, tau);
  return cantini_rhs_generic<F, F>(x, y, tau, F(1)) / (vandermonde(x) * vandermonde(y));
}

template <class F>
F ws_degenerate(std::span<const F> x, const F& y0, const F& tau) {
  const std::size_t s = x.size();
  require_distinct(x, "x");
  const std::vector<F> y(s, y0);
  check_ws_poles<F>(x, y, tau);
  Matrix<F> m(s, s, F(0));
  F product(1);
  for (std::size_t j = 0; j < s; ++j) {
    const Jet<F> yj = Jet<F>::variable(y0, static_cast<int>(s) - 1);
    const Jet<F> xj = Jet<F>::constant(x[j], static_cast<int>(s) - 1);
    const Jet<F> one = Jet<F>::constant(F(1), static_cast<int>(s) - 1);
    const Jet<F> p = with_pole_check([&] { return psi_of(xj, yj, tau, one); });
    for (std::size_t k = 0; k < s; ++k) m(j, k) = p[k];
    product *= ipow(F(x[j] + y0 + tau * x[j] * y0), static_cast<int>(s));
  }
  return product * det(std::move(m)) / vandermonde(x);
}

template <class F>
F ws_confluent_limit(std::span<const F> x, const F& y0, const F& tau) {
  const std::size_t s = x.size();
  require_distinct(x, "x");
  check_ws_poles<F>(x, std::vector<F>(s, y0), tau);
  const int d = vandermonde_degree(s);
  const Jet<F> one = Jet<F>::constant(F(1), d);
  std::vector<Jet<F>> xs, ys;
  std::vector<F> slopes;
  for (std::size_t k = 0; k < s; ++k) {
    xs.push_back(Jet<F>::constant(x[k], d));
    slopes.push_back(F(static_cast<int>(k) + 1));
    ys.push_back(Jet<F>::variable(F(0), d) * slopes.back() + y0);
  }
  const Jet<F> numerator =
      with_pole_check([&] { return cantini_rhs_generic<Jet<F>, F>(xs, ys, tau, one); });
  const F scale = abs_value(numerator[static_cast<std::size_t>(d)]);
  for (int k = 0; k < d; ++k) {
    if (!near_zero(numerator[static_cast<std::size_t>(k)], scale)) {
      raise(ErrorKind::JetOrderInsufficient, "confluent limit has a nonvanishing lower-order term");
    }
  }
  return numerator[static_cast<std::size_t>(d)] / (vandermonde<F>(slopes) * vandermonde(x));
}

template <class F>
F ws_hom(std::span<const F> z, const WeightSpec<F>& weights) {
  const int s = static_cast<int>(z.size());
  require_distinct(z, "z");
  const std::vector<F> u = u_values(z, weights.t(), weights.delta());
  F value = sign_power<F>(s) * partition_function(s, weights) /
            (ipow(weights.c(), s) * ipow(weights.b(), s * (s - 1)));
  for (std::size_t j = 0; j < z.size(); ++j) value /= (z[j] - F(1)) * ipow(u[j], s - 1);
  return value * h_ns(s, s, weights).evaluate(u);
}

template <class F>
Series<F> ws_hom_series(int s, const std::vector<int>& orders, const WeightSpec<F>& weights) {
  if (s < 1 || static_cast<int>(orders.size()) != s) raise(ErrorKind::InvalidArgument, "ws_hom_series needs s >= 1");
  const F t = weights.t();
  const F delta = weights.delta();
  const F kappa = t * t - F(2) * delta * t;
  const std::size_t n = orders.size();
  Series<F> out = compose_with_u(h_ns(s, s, weights), orders, t, delta);
  for (std::size_t i = 0; i < n; ++i) {
    // 1 / ((z - 1) u^{s-1}) = -(kappa z + 1)^{s-1} / (1 - z)^s
    const Poly<F> z = Poly<F>::variable(n, i);
    const Poly<F> one = Poly<F>::constant(n, F(1));
    out *= Series<F>::from_poly(kappa * z + one, orders).pow(s - 1);
    out *= Series<F>::from_poly(one - z, orders).inverse().pow(s);
  }
  // The s signs from 1 / (z - 1) cancel the overall (-1)^s.
  out *= partition_function(s, weights) / (ipow(weights.c(), s) * ipow(weights.b(), s * (s - 1)));
  for (std::size_t i = 0; i < n; ++i) out = out.rescale(i, F(1) / t);
  return out;
}

template <class F>
F cantini_lhs(std::span<const F> x, std::span<const F> y, const F& tau) {
  if (x.size() != y.size()) raise(ErrorKind::WidthMismatch, "x and y must have equal length");
  // Every partial product under every permutation pair must stay away from 1.
  for_each_permutation(x.size(), [&](const Permutation& sigma) {
    for_each_permutation(y.size(), [&](const Permutation& pi) {
      F running(1);
      for (std::size_t j = 0; j < x.size(); ++j) {
        running *= x[sigma[j]] * y[pi[j]];
        nonzero<F>(F(1) - running, "1 - prod x y vanishes");
      }
    });
  });
  return cantini_lhs_generic<F, F>(x, y, tau, F(1));
}

template <class F>
F cantini_rhs(std::span<const F> x, std::span<const F> y, const F& tau) {
  if (x.size() != y.size()) raise(ErrorKind::WidthMismatch, "x and y must have equal length");
  check_ws_poles(x, y, tau);
  return cantini_rhs_generic<F, F>(x, y, tau, F(1));
}

CheckReport check_kmst(std::span<const Real> lambda_in, std::span<const Real> nu_in, const Real& eta_in,
                       double tolerance) {
  const std::size_t s = lambda_in.size();
  if (nu_in.size() != s) raise(ErrorKind::WidthMismatch, "lambda and nu must have equal length");
  const GuardPrecision guard;
  const std::vector<Real> lambda = widen(lambda_in), nu = widen(nu_in);
  const Real eta = widen(eta_in);
  require_distinct(lambda, "lambda");
  require_distinct(nu, "nu");
  const VertexWeightFunctions w(eta);
  auto summand = [&](std::span<const Real> l) {
    Real value(1);
    for (std::size_t j = 0; j < s; ++j) {
      for (std::size_t k = 0; k < j; ++k) value *= w.a(l[j], nu[k]);
      for (std::size_t k = j + 1; k < s; ++k) value *= w.b(l[j], nu[k]);
      for (std::size_t k = j + 1; k < s; ++k) value /= nonzero<Real>(w.e(l[k], l[j]), "e vanishes");
    }
    return value;
  };
  const Real lhs = antisymmetrize<Real>(summand, std::span<const Real>(lambda));
  Real rhs = ik_inhomogeneous(lambda, nu, eta);
  for (std::size_t j = 0; j < s; ++j) {
    for (std::size_t k = 0; k < s; ++k) {
      if (j < k) rhs *= w.d(lambda[j], lambda[k]);
      rhs /= nonzero<Real>(w.e(lambda[k], lambda[j]), "e vanishes");
    }
  }
  CheckReport report = compare_values("antisym.kmst", lhs, rhs, tolerance);
  report.param("s", std::to_string(s));
  return report;
}

CheckReport check_ws_ik(std::span<const Real> lambda_in, std::span<const Real> nu_in, const Real& eta_in,
                        const Real& zeta_in, const Real& zeta_alt_in, double tolerance) {
  const std::size_t s = lambda_in.size();
  if (nu_in.size() != s) raise(ErrorKind::WidthMismatch, "lambda and nu must have equal length");
  const GuardPrecision guard;
  const std::vector<Real> lambda = widen(lambda_in), nu = widen(nu_in);
  const Real eta = widen(eta_in), zeta = widen(zeta_in), zeta_alt = widen(zeta_alt_in);
  const VertexWeightFunctions w(eta);
  const Real tau = -2 * icelab::cos(Real(2 * eta));
  const Real z_s = ik_inhomogeneous(lambda, nu, eta);

  auto at_zeta = [&](const Real& zt) {
    std::vector<Real> x, y;
    Real rhs = (s % 2 == 0 ? Real(1) : Real(-1)) * z_s / ipow(w.c(), 2 * static_cast<int>(s));
    for (std::size_t j = 0; j < s; ++j) {
      const Real bl = nonzero<Real>(w.b(lambda[j], Real(zt + eta)), "b(lambda, zeta + eta) vanishes");
      const Real bn = nonzero<Real>(w.b(zt, nu[j]), "b(zeta, nu) vanishes");
      x.push_back(w.a(lambda[j], Real(zt + eta)) / bl);
      y.push_back(w.a(zt, nu[j]) / bn);
      rhs *= bl * bn;
      for (std::size_t k = 0; k < s; ++k) rhs /= nonzero<Real>(w.b(lambda[j], nu[k]), "b(lambda, nu) vanishes");
    }
    return std::pair{ws_eval<Real>(x, y, tau), rhs};
  };

  const auto [lhs1, rhs1] = at_zeta(zeta);
  const auto [lhs2, rhs2] = at_zeta(zeta_alt);
  // Z_s recovered from W_s at each zeta; zeta only enters the prefactor.
  const Real recovered1 = lhs1 * z_s / rhs1;
  const Real recovered2 = lhs2 * z_s / rhs2;
  CheckReport report =
      combine_reports("antisym.ws_ik", {compare_values("ws_ik.zeta", lhs1, rhs1, tolerance),
                                        compare_values("ws_ik.zeta_alt", lhs2, rhs2, tolerance),
                                        compare_values("ws_ik.zeta_independence", recovered1, recovered2, tolerance)});
  report.param("s", std::to_string(s));
  return report;
}

template <class F>
CheckReport check_identity1(std::span<const F> z_in, const WeightSpec<F>& weights_in) {
  [[maybe_unused]] const GuardFor<F> guard;
  const std::vector<F> z = widen(z_in);
  const WeightSpec<F> weights = weights_in.widened();
  const int s = static_cast<int>(z.size());
  require_distinct(z, "z");
  const F t = weights.t();
  const F delta = weights.delta();
  const std::vector<F> u = u_values<F>(z, t, delta);
  std::vector<std::size_t> index(z.size());
  for (std::size_t i = 0; i < index.size(); ++i) index[i] = i;

  // Antisymmetrize over indices so each z_j carries its own u_j.
  auto summand = [&](std::span<const std::size_t> p) {
    F value(1);
    for (int j = 0; j < s; ++j) value /= ipow(u[p[static_cast<std::size_t>(j)]], s - 1 - j);
    for (int j = 0; j < s; ++j) {
      for (int k = j + 1; k < s; ++k) {
        const F& zj = z[p[static_cast<std::size_t>(j)]];
        const F& zk = z[p[static_cast<std::size_t>(k)]];
        value *= t * t * zj * zk - F(2) * delta * t * zk + F(1);
      }
    }
    return value;
  };
  const F lhs = antisymmetrize<std::size_t>(summand, index);

  F rhs = sign_power<F>(vandermonde_degree(z.size())) * partition_function(s, weights) /
          (ipow(weights.a(), s * (s - 1)) * ipow(weights.c(), s)) * vandermonde(z);
  for (const auto& uj : u) rhs /= ipow(uj, s - 1);
  rhs *= h_ns(s, s, weights).evaluate(u);
  CheckReport report = compare_values("antisym.identity1", lhs, rhs);
  report.param("s", std::to_string(s)).param("z", join(z_in));
  return report;
}

template <class F>
CheckReport check_cantini(std::span<const F> x_in, std::span<const F> y_in, const F& tau_in) {
  [[maybe_unused]] const GuardFor<F> guard;
  const std::vector<F> x = widen(x_in), y = widen(y_in);
  const F tau = widen(tau_in);
  CheckReport report =
      compare_values("antisym.cantini", cantini_lhs<F>(x, y, tau), cantini_rhs<F>(x, y, tau));
  report.param("s", std::to_string(x.size())).param("x", join(x_in)).param("y", join(y_in)).param("tau", render(tau_in));
  return report;
}

template <class F>
CheckReport check_whom(std::span<const F> z_in, const WeightSpec<F>& weights_in) {
  [[maybe_unused]] const GuardFor<F> guard;
  const WeightSpec<F> weights = weights_in.widened();
  std::vector<F> z;
  for (const auto& zj : z_in) {
    if constexpr (is_exact_v<F>) {
      z.push_back(zj);
    } else {
      z.push_back(widen(zj));
    }
  }
  const F t = weights.t();
  const F tau = F(-2) * weights.delta();
  std::vector<F> x;
  for (const auto& zj : z) x.push_back(t * zj);
  const F hom = ws_hom<F>(z, weights);
  CheckReport report = combine_reports(
      "antisym.whom", {compare_values("whom.degenerate", hom, ws_degenerate<F>(x, F(1) / t, tau)),
                       compare_values("whom.confluent", hom, ws_confluent_limit<F>(x, F(1) / t, tau))});
  report.param("s", std::to_string(z.size())).param("z", join(z_in));
  return report;
}

CheckReport check_cantini_polynomial(const Rational& tau) {
  using RF = RationalFunction<Rational>;
  using P = Poly<Rational>;
  constexpr std::size_t n = 4;
  const P one = P::constant(n, Rational(1));
  const P x[] = {P::variable(n, 0), P::variable(n, 1)};
  const P y[] = {P::variable(n, 2), P::variable(n, 3)};

  RF lhs{P(n)};
  for (int sx = 0; sx < 2; ++sx) {
    for (int sy = 0; sy < 2; ++sy) {
      const P& x1 = x[sx];
      const P& x2 = x[1 - sx];
      const P& y1 = y[sy];
      const P& y2 = y[1 - sy];
      P num = x1 * y1 * (x1 * x2 + tau * x2 + one) * (y1 * y2 + tau * y2 + one);
      if (sx != sy) num = -num;
      lhs = lhs + RF(num, (one - x1 * y1) * (one - x1 * y1 * x2 * y2));
    }
  }
  P product = one;
  RF m[2][2];
  for (int j = 0; j < 2; ++j) {
    for (int k = 0; k < 2; ++k) {
      const P cross = x[j] + y[k] + tau * x[j] * y[k];
      product = product * cross;
      m[j][k] = RF(one, (one - x[j] * y[k]) * cross);
    }
  }
  const RF rhs = RF(product) * (m[0][0] * m[1][1] - m[0][1] * m[1][0]);

  P common = one - x[0] * x[1] * y[0] * y[1];
  for (const auto& xj : x) {
    for (const auto& yk : y) common = common * (one - xj * yk);
  }
  const P lhs_poly = lhs.times_to_poly(common);
  const P rhs_poly = rhs.times_to_poly(common);
  CheckReport report;
  report.check_id = "antisym.cantini_polynomial";
  report.backend = FieldTraits<Rational>::name;
  report.param("s", "2").param("tau", render(tau));
  report.lhs = "terms=" + std::to_string(lhs_poly.size());
  report.rhs = "terms=" + std::to_string(rhs_poly.size());
  const P diff = lhs_poly - rhs_poly;
  report.discrepancy = std::to_string(diff.size());
  report.status = diff.is_zero() ? Status::Pass : Status::Fail;
  return report;
}

template <class F>
F smallid_constant(int s, const F& t) {
  F out(1);
  const F t2 = t * t;
  for (int j = 1; j <= s; ++j) {
    // (1 - t^{2j}) / (1 - t^2) = 1 + t^2 + ... + t^{2(j-1)}
    F sum(0);
    for (int l = 0; l < j; ++l) sum += ipow(t2, l);
    out *= sum;
  }
  return out;
}

template <class F>
CheckReport check_dsvan(const F& t_in, std::span<const F> z_in) {
  [[maybe_unused]] const GuardFor<F> guard;
  const F t = widen(t_in);
  const std::vector<F> z = widen(z_in);
  const std::size_t s = z.size();
  require_distinct(z, "z");
  Matrix<F> m(s, s, F(0));
  for (std::size_t j = 0; j < s; ++j) {
    const F den = nonzero<F>(F(1) - t * t * z[j], "1 - t^2 z vanishes");
    const F shifted = (F(1) + t * t) * z[j] - F(1);
    for (std::size_t k = 1; k <= s; ++k) {
      const int kk = static_cast<int>(k);
      m(j, k - 1) = ipow(F(F(1) - z[j]), static_cast<int>(s) - kk) * (ipow(z[j], kk) - ipow(shifted, kk)) / den;
    }
  }
  CheckReport report =
      compare_values("tw.dsvan", det(std::move(m)), F(smallid_constant(static_cast<int>(s), t) * vandermonde(z)));
  report.param("s", std::to_string(s)).param("t", render(t_in)).param("z", join(z_in));
  return report;
}

template <class F>
CheckReport check_smallid(const F& t_in, std::span<const F> eps_in) {
  [[maybe_unused]] const GuardFor<F> guard;
  const F t = widen(t_in);
  const std::vector<F> eps = widen(eps_in);
  const std::size_t s = eps.size();
  const F t2 = t * t;
  auto summand = [&](std::span<const F> e) {
    F value(1);
    for (std::size_t j = 0; j < s; ++j) {
      for (std::size_t k = j + 1; k < s; ++k) value *= e[j] - t2 * e[k];
    }
    return value;
  };
  const F lhs = antisymmetrize<F>(summand, std::span<const F>(eps));
  // prod_{j<k} (eps_j - eps_k) = (-1)^D prod_{j<k} (eps_k - eps_j)
  const F rhs = smallid_constant(static_cast<int>(s), t) * sign_power<F>(vandermonde_degree(s)) * vandermonde(eps);
  CheckReport report = compare_values("tw.smallid", lhs, rhs);
  report.param("s", std::to_string(s)).param("t", render(t_in)).param("eps", join(eps_in));
  return report;
}

namespace {

template <class F>
std::pair<F, F> tracy_widom_sides(const F& p, std::span<const F> z) {
  const std::size_t s = z.size();
  const F q = F(1) - p;
  require_distinct(z, "z");
  auto summand = [&](std::span<const F> v) {
    F value(1);
    F running(1);
    for (std::size_t j = 0; j < s; ++j) {
      running *= v[j];
      value *= ipow(v[j], static_cast<int>(s - 1 - j)) / nonzero<F>(F(1) - running, "1 - prod z vanishes");
    }
    for (std::size_t j = 0; j < s; ++j) {
      for (std::size_t k = j + 1; k < s; ++k) value *= q * v[j] * v[k] - v[k] + p;
    }
    return value;
  };
  const F lhs = antisymmetrize<F>(summand, z);
  const int d = vandermonde_degree(s);
  F rhs = ipow(p, d) * sign_power<F>(d) * vandermonde(z);
  for (const auto& zj : z) rhs /= nonzero<F>(F(1) - zj, "z = 1 is excluded");
  return {lhs, rhs};
}

std::optional<Rational> rational_sqrt(const Rational& x) {
  if (x < 0) return std::nullopt;
  const Integer& num = x.get_num();
  const Integer& den = x.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
  return Rational(Integer(sqrt(num)), Integer(sqrt(den)));
}

}  // namespace

template <class F>
CheckReport check_tracy_widom(const F& p, std::span<const F> z) {
  if (!(p > F(0) && p < F(1))) raise(ErrorKind::InvalidArgument, "need 0 < p < 1");
  [[maybe_unused]] const GuardFor<F> guard;
  const std::vector<F> zw = widen(z);
  const auto [lhs, rhs] = tracy_widom_sides<F>(widen(p), zw);
  CheckReport report = compare_values("tw.tracy_widom", lhs, rhs);
  report.param("s", std::to_string(z.size())).param("p", render(p)).param("z", join(z));
  return report;
}

CheckReport check_cantini_reduces_to_tw(const Rational& p, std::span<const Rational> z) {
  if (!(p > 0 && p < 1)) raise(ErrorKind::InvalidArgument, "need 0 < p < 1");
  const Rational q = 1 - p;
  const auto root = rational_sqrt(Rational(q / p));
  if (!root) raise(ErrorKind::InvalidArgument, "q / p must be the square of a rational");
  const Rational t = *root;
  const Rational tau = -t - 1 / t;
  if (t * t + tau * t + 1 != 0 || tau != -1 / (t * p)) {
    raise(ErrorKind::InvalidArgument, "tau does not satisfy the rate condition");
  }
  const std::size_t s = z.size();
  require_distinct(z, "z");
  const int d = vandermonde_degree(s);

  std::vector<Rational> slopes;
  for (std::size_t k = 0; k < s; ++k) slopes.push_back(Rational(static_cast<long>(k) + 1));
  // Leading coefficient of prod_{j<k} (y_k - y_j) in eps.
  const Rational y_vandermonde = ipow(t, -d) * vandermonde<Rational>(slopes);

  auto limits = [&](int order) {
    if (order < d) raise(ErrorKind::JetOrderInsufficient, "jet order below the Vandermonde degree");
    const Jet<Rational> one = Jet<Rational>::constant(Rational(1), order);
    std::vector<Jet<Rational>> xs, ys;
    for (std::size_t k = 0; k < s; ++k) {
      xs.push_back(Jet<Rational>::constant(t * z[k], order));
      ys.push_back(Jet<Rational>::variable(Rational(0), order) * Rational(slopes[k] / t) + Rational(1 / t));
    }
    return with_pole_check([&] {
      const Jet<Rational> lhs = cantini_lhs_generic<Jet<Rational>, Rational>(xs, ys, tau, one);
      const Jet<Rational> rhs = cantini_rhs_generic<Jet<Rational>, Rational>(xs, ys, tau, one);
      bool vanishing = true;
      for (int k = 0; k < d; ++k) {
        vanishing = vanishing && is_zero(lhs[static_cast<std::size_t>(k)]) && is_zero(rhs[static_cast<std::size_t>(k)]);
      }
      return std::tuple<Rational, Rational, bool>{lhs[static_cast<std::size_t>(d)] / y_vandermonde, rhs[static_cast<std::size_t>(d)] / y_vandermonde,
                        vanishing};
    });
  };

  const auto [lhs_limit, rhs_limit, vanishing] = limits(d + 1);
  const auto [lhs_check, rhs_check, vanishing_check] = limits(d + 3);
  if (lhs_check != lhs_limit || rhs_check != rhs_limit || vanishing_check != vanishing) {
    raise(ErrorKind::JetOrderInsufficient, "eps limit changes with the jet order");
  }

  const auto [tw_lhs, tw_rhs] = tracy_widom_sides<Rational>(p, z);
  const Rational factor = sign_power<Rational>(d) * ipow(t, -d) * smallid_constant(static_cast<int>(s), t) * ipow(p, -d);
  std::vector<CheckReport> parts = {compare_values("reduction.lhs", lhs_limit, Rational(factor * tw_lhs)),
                                    compare_values("reduction.rhs", rhs_limit, Rational(factor * tw_rhs)),
                                    compare_values("reduction.tw", tw_lhs, tw_rhs)};
  if (!vanishing) {
    CheckReport low;
    low.check_id = "reduction.lower_orders";
    low.status = Status::Fail;
    low.lhs = "nonzero";
    low.rhs = "0";
    low.discrepancy = "lower-order eps terms";
    parts.push_back(low);
  }
  CheckReport report = combine_reports("tw.cantini_reduction", parts);
  report.param("s", std::to_string(s)).param("p", render(p)).param("t", render(t)).param("z", join(z));
  return report;
}

#define ICELAB_INSTANTIATE_IDENTITIES(F)                                                     \
  template F psi<F>(const F&, const F&, const F&);                                           \
  template F ws_eval<F>(std::span<const F>, std::span<const F>, const F&);                   \
  template F ws_degenerate<F>(std::span<const F>, const F&, const F&);                       \
  template F ws_confluent_limit<F>(std::span<const F>, const F&, const F&);                  \
  template F ws_hom<F>(std::span<const F>, const WeightSpec<F>&);                            \
  template Series<F> ws_hom_series<F>(int, const std::vector<int>&, const WeightSpec<F>&);   \
  template F cantini_lhs<F>(std::span<const F>, std::span<const F>, const F&);               \
  template F cantini_rhs<F>(std::span<const F>, std::span<const F>, const F&);               \
  template CheckReport check_identity1<F>(std::span<const F>, const WeightSpec<F>&);         \
  template CheckReport check_cantini<F>(std::span<const F>, std::span<const F>, const F&);   \
  template CheckReport check_whom<F>(std::span<const F>, const WeightSpec<F>&);              \
  template F smallid_constant<F>(int, const F&);                                             \
  template CheckReport check_dsvan<F>(const F&, std::span<const F>);                         \
  template CheckReport check_smallid<F>(const F&, std::span<const F>);                       \
  template CheckReport check_tracy_widom<F>(const F&, std::span<const F>);

ICELAB_INSTANTIATE_IDENTITIES(Rational)
ICELAB_INSTANTIATE_IDENTITIES(Real)

}  // namespace icelab
