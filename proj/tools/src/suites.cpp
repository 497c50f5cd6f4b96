#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>

#include "icelab/cli/runner.hpp"
#include "icelab/correlations.hpp"
#include "icelab/errors.hpp"
#include "icelab/identities.hpp"
#include "icelab/izergin_korepin.hpp"
#include "icelab/lattice.hpp"
#include "icelab/random.hpp"

namespace icelab::cli {

namespace {

using Params = std::vector<std::pair<std::string, std::string>>;

// Per-check streams: FNV-1a of the label folded into the seed, so adding a
// check never shifts the draws of another.
std::uint64_t stream_seed(std::uint64_t seed, std::string_view label) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char ch : label) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return seed * 0x9E3779B97F4A7C15ULL ^ h;
}

class Collector {
 public:
  /// Runs `check`, timing it; any exception becomes a fail report.
  void run(const std::string& id, Params params, const std::function<CheckReport()>& check) {
    const auto start = std::chrono::steady_clock::now();
    CheckReport report;
    try {
      report = check();
      report.check_id = id;
    } catch (const std::exception& e) {
      report = error_report(id, e);
    }
    report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    for (auto& kv : report.params) {
      const bool seen = std::any_of(params.begin(), params.end(), [&](const auto& q) { return q.first == kv.first; });
      if (!seen) params.push_back(std::move(kv));
    }
    report.params = std::move(params);
    buckets_[id].push_back(std::move(report));
  }

  std::vector<CheckReport> take() {
    std::vector<CheckReport> out;
    for (auto& [id, reports] : buckets_) {
      for (auto& r : reports) out.push_back(std::move(r));
    }
    return out;
  }

 private:
  std::map<std::string, std::vector<CheckReport>> buckets_;
};

std::string render_triple(const WeightTriple& w) { return render(w.a) + ":" + render(w.b) + ":" + render(w.c); }

std::vector<WeightTriple> weight_draws(const SuiteConfig& config) {
  if (config.weights) return {*config.weights};
  std::vector<WeightTriple> out{{Rational(3), Rational(4), Rational(5)}};
  Lcg64 rng(stream_seed(config.seed, "weights"));
  while (static_cast<int>(out.size()) < config.draws) {
    // t = b / a = 1 is excluded: several formulas divide by 1 - t^2.
    out.push_back(sample_until([&] { return WeightTriple{random_rational(rng), random_rational(rng), random_rational(rng)}; },
                               [](const WeightTriple& w) { return w.a != w.b; }, "weights")
                      .value);
  }
  return out;
}

template <class F>
WeightSpec<F> homogeneous_spec(const WeightTriple& w) {
  for (const Rational* x : {&w.a, &w.b, &w.c}) {
    if (*x == 0) raise(ErrorKind::PoleHit, "zero vertex weight: a, b and c must all be nonzero");
  }
  return WeightSpec<F>::homogeneous(from_rational<F>(w.a), from_rational<F>(w.b), from_rational<F>(w.c));
}

template <class F>
std::vector<F> convert(const std::vector<Rational>& v) {
  std::vector<F> out;
  for (const auto& q : v) out.push_back(from_rational<F>(q));
  return out;
}

std::string join_ints(std::span<const int> v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

bool is_pole_error(const Error& e) {
  return e.kind() == ErrorKind::PoleHit || e.kind() == ErrorKind::CoincidingParameters ||
         e.kind() == ErrorKind::PoleInPhi;
}

// Redraws parameters until the check runs without hitting a pole of the
// formula (the degenerate-parameter guard), then returns its report.
template <class Draw, class Check>
CheckReport first_admissible(Draw&& draw, Check&& check, const std::string& what) {
  for (int rejected = 0; rejected <= kMaxRejections; ++rejected) {
    auto params = draw();
    try {
      CheckReport r = check(params);
      if (rejected > 0) r.param("rejections", std::to_string(rejected));
      return r;
    } catch (const Error& e) {
      if (!is_pole_error(e)) throw;
    }
  }
  raise(ErrorKind::SamplingExhausted, "no admissible draw for " + what);
}

std::vector<Rational> distinct_proper_fractions(Lcg64& rng, std::size_t s) {
  std::vector<Rational> out;
  for (int rejected = 0; out.size() < s; ++rejected) {
    if (rejected > kMaxRejections) raise(ErrorKind::SamplingExhausted, "no distinct fractions in (0, 1)");
    const Rational q = random_rational(rng);
    if (q < 1 && std::find(out.begin(), out.end(), q) == out.end()) out.push_back(q);
  }
  return out;
}

Rational random_non_unit(Lcg64& rng) {
  return sample_until([&] { return random_rational(rng); }, [](const Rational& q) { return q != 1; }, "t").value;
}

template <class F>
CheckReport compare_polys(const std::string& id, const Poly<F>& lhs, const Poly<F>& rhs, double tolerance) {
  CheckReport r;
  r.check_id = id;
  r.lhs = "terms=" + std::to_string(lhs.size());
  r.rhs = "terms=" + std::to_string(rhs.size());
  r.backend = FieldTraits<F>::name;
  const Poly<F> diff = lhs - rhs;
  if constexpr (is_exact_v<F>) {
    r.discrepancy = diff.is_zero() ? "0" : "terms=" + std::to_string(diff.size());
    r.status = diff.is_zero() ? Status::Pass : Status::Fail;
  } else {
    const F scale = std::max(lhs.max_abs_coefficient(), rhs.max_abs_coefficient());
    const F err = is_zero(scale) ? F(0) : F(diff.max_abs_coefficient() / scale);
    r.discrepancy = err.str(3, std::ios_base::scientific);
    r.status = err <= scaled_tolerance(tolerance) ? Status::Pass : Status::Fail;
  }
  return r;
}

CheckReport predicate(const std::string& id, bool ok, std::string lhs, std::string rhs, std::string backend) {
  CheckReport r;
  r.check_id = id;
  r.status = ok ? Status::Pass : Status::Fail;
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  r.discrepancy = ok ? "0" : "violated";
  r.backend = std::move(backend);
  return r;
}

// Trigonometric draws: uniform on fixed intervals, every sine that is
// divided by kept a margin 0.05 away from its zeros.
constexpr double kPoleMargin = 0.05;
constexpr double kMinSeparation = 1e-3;

bool clear_of_zero(double x) { return std::abs(std::sin(x)) >= std::sin(kPoleMargin); }

struct TrigDraw {
  std::vector<double> lambda, nu;
  double eta = 0, lambda0 = 0, zeta = 0, zeta_alt = 0;

  std::vector<Real> lambdas() const { return {lambda.begin(), lambda.end()}; }
  std::vector<Real> nus() const { return {nu.begin(), nu.end()}; }
};

bool admissible(const TrigDraw& d, bool with_zeta) {
  const std::size_t n = d.lambda.size();
  if (!clear_of_zero(2 * d.eta)) return false;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      const double x = d.lambda[j] - d.nu[k];
      if (!clear_of_zero(x + d.eta) || !clear_of_zero(x - d.eta)) return false;
      if (j != k) {
        if (std::abs(std::sin(d.lambda[j] - d.lambda[k])) < kMinSeparation) return false;
        if (std::abs(std::sin(d.nu[j] - d.nu[k])) < kMinSeparation) return false;
        if (!clear_of_zero(d.lambda[j] - d.lambda[k] + 2 * d.eta)) return false;
      }
    }
    if (!clear_of_zero(d.lambda0 - d.eta) || !clear_of_zero(d.lambda0 + d.eta)) return false;
    if (!clear_of_zero(d.lambda[j] - d.eta) || !clear_of_zero(d.lambda[j] + d.eta)) return false;
  }
  if (!with_zeta) return true;
  const double tau = -2 * std::cos(2 * d.eta);
  for (double zeta : {d.zeta, d.zeta_alt}) {
    std::vector<double> x, y;
    for (std::size_t j = 0; j < n; ++j) {
      if (!clear_of_zero(d.lambda[j] - zeta - 2 * d.eta) || !clear_of_zero(zeta - d.nu[j] - d.eta)) return false;
      x.push_back(std::sin(d.lambda[j] - zeta) / std::sin(d.lambda[j] - zeta - 2 * d.eta));
      y.push_back(std::sin(zeta - d.nu[j] + d.eta) / std::sin(zeta - d.nu[j] - d.eta));
    }
    for (double xj : x) {
      for (double yk : y) {
        if (std::abs(1 - xj * yk) < kPoleMargin || std::abs(xj + yk + tau * xj * yk) < kPoleMargin) return false;
      }
    }
  }
  return true;
}

TrigDraw draw_trig(Lcg64& rng, std::size_t n, bool with_zeta) {
  return sample_until(
             [&] {
               TrigDraw d;
               d.eta = rng.uniform_double(0.15, 0.65);
               for (std::size_t j = 0; j < n; ++j) d.lambda.push_back(rng.uniform_double(0.6, 1.6));
               for (std::size_t j = 0; j < n; ++j) d.nu.push_back(rng.uniform_double(-0.4, 0.4));
               d.lambda0 = rng.uniform_double(0.6, 1.6);
               d.zeta = rng.uniform_double(-0.4, 0.4);
               d.zeta_alt = rng.uniform_double(-0.4, 0.4);
               return d;
             },
             [&](const TrigDraw& d) { return admissible(d, with_zeta); }, "trigonometric parameters")
      .value;
}

std::string render_doubles(const std::vector<double>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + render(Real(v[i]));
  return out;
}

struct Scope {
  const SuiteConfig& config;
  Collector& out;
  std::vector<WeightTriple> weights;

  Params base(int draw) const { return {{"draw", std::to_string(draw)}, {"weights", render_triple(weights[static_cast<std::size_t>(draw)])}}; }
  int draws() const { return static_cast<int>(weights.size()); }
};

int trig_draws(const SuiteConfig& config) { return config.weights ? 1 : config.draws; }

template <class F>
void partition_suite(Scope& sc) {
  const double tol = sc.config.tolerance;
  const double trig_tol = std::min(tol, kTrigTolerance);
  for (int d = 0; d < sc.draws(); ++d) {
    const WeightTriple& wt = sc.weights[static_cast<std::size_t>(d)];
    for (int n = 1; n <= sc.config.n_max; ++n) {
      Params p = sc.base(d);
      p.emplace_back("N", std::to_string(n));
      sc.out.run("partition.transfer_folds", p, [&] {
        const auto w = homogeneous_spec<F>(wt);
        return compare_values("", partition_function(n, w), partition_function_bottom_up(n, w), tol);
      });
    }
    sc.out.run("partition.z1", sc.base(d), [&] {
      const auto w = homogeneous_spec<F>(wt);
      return compare_values("", partition_function(1, w), w.c(), tol);
    });
  }

  // Trigonometric checks always use the float backend.
  for (int d = 0; d < trig_draws(sc.config); ++d) {
    for (int n = 1; n <= sc.config.n_max; ++n) {
      const Params p = {{"draw", std::to_string(d)}, {"N", std::to_string(n)}};
      const auto un = static_cast<std::size_t>(n);
      Lcg64 rng(stream_seed(sc.config.seed, "partition.trig." + std::to_string(d) + "." + std::to_string(n)));
      const TrigDraw t = draw_trig(rng, un, false);
      const Real eta(t.eta);
      sc.out.run("partition.ik_homogeneous", p, [&] {
        const VertexWeightFunctions vw(eta);
        const Real l(t.lambda0);
        const auto w = WeightSpec<Real>::homogeneous(vw.a(l, Real(0)), vw.b(l, Real(0)), vw.c());
        CheckReport r = compare_values("", ik_homogeneous(l, eta, n), partition_function(n, w), trig_tol);
        return r.param("lambda", render(l)).param("eta", render(eta));
      });
      sc.out.run("partition.ik_inhomogeneous", p, [&] {
        const auto w = WeightSpec<Real>::inhomogeneous(t.lambdas(), t.nus(), eta);
        CheckReport r = compare_values("", ik_inhomogeneous(t.lambdas(), t.nus(), eta), partition_function(n, w), trig_tol);
        return r.param("lambda", render_doubles(t.lambda)).param("nu", render_doubles(t.nu)).param("eta", render(eta));
      });
      if (n >= 2) {
        sc.out.run("partition.spectral_symmetry", p, [&] {
          std::vector<double> lambda = t.lambda, nu = t.nu;
          std::reverse(lambda.begin(), lambda.end());
          std::rotate(nu.begin(), nu.begin() + 1, nu.end());
          const auto w = WeightSpec<Real>::inhomogeneous(t.lambdas(), t.nus(), eta);
          const auto permuted =
              WeightSpec<Real>::inhomogeneous(std::vector<Real>(lambda.begin(), lambda.end()),
                                              std::vector<Real>(nu.begin(), nu.end()), eta);
          return compare_values("", partition_function(n, w), partition_function(n, permuted), tol);
        });
      }
      sc.out.run("partition.partial_inhomogeneous", p, [&] {
        return partial_inhomogeneous_relation(t.lambdas(), Real(t.lambda0), eta, trig_tol);
      });
    }
  }
}

template <class F>
void boundary_suite(Scope& sc) {
  const double tol = sc.config.tolerance;
  for (int d = 0; d < sc.draws(); ++d) {
    const WeightTriple& wt = sc.weights[static_cast<std::size_t>(d)];
    for (int n = 1; n <= sc.config.n_max; ++n) {
      Params p = sc.base(d);
      p.emplace_back("N", std::to_string(n));
      sc.out.run("boundary.sum_rule", p, [&] {
        const auto w = homogeneous_spec<F>(wt);
        F sum(0);
        for (int r = 1; r <= n; ++r) sum += boundary_correlation(n, w, r);
        return compare_values("", sum, F(1), tol);
      });
      sc.out.run("boundary.positivity", p, [&] {
        const auto w = homogeneous_spec<F>(wt);
        bool ok = true;
        for (int s = 0; s <= n; ++s) {
          for (const auto& state : flux_sector_states(n, s)) {
            const auto pos = state.positions();
            const F h = rcp_enum(n, s, std::span<const int>(pos), w);
            ok = ok && h > F(0) && h <= F(1);
          }
        }
        return predicate("", ok, "0 < H <= 1", "0 < H <= 1", std::string(FieldTraits<F>::name));
      });
      for (int s = 0; s <= n; ++s) {
        Params ps = p;
        ps.emplace_back("s", std::to_string(s));
        sc.out.run("boundary.rcp_completeness", ps, [&] {
          const auto w = homogeneous_spec<F>(wt);
          F sum(0);
          for (const auto& state : flux_sector_states(n, s)) {
            const auto pos = state.positions();
            sum += rcp_enum(n, s, std::span<const int>(pos), w);
          }
          return compare_values("", sum, F(1), tol);
        });
        sc.out.run("boundary.factorization", ps, [&] {
          const auto w = homogeneous_spec<F>(wt);
          F sum(0);
          for (const auto& state : flux_sector_states(n, s)) {
            const auto pos = state.positions();
            sum += z_top_enum(n, s, std::span<const int>(pos), w) * z_bot_enum(n, s, std::span<const int>(pos), w);
          }
          return compare_values("", sum, partition_function(n, w), tol);
        });
      }
    }
  }
}

template <class F>
void generating_suite(Scope& sc) {
  const double tol = sc.config.tolerance;
  for (int d = 0; d < sc.draws(); ++d) {
    const WeightTriple& wt = sc.weights[static_cast<std::size_t>(d)];
    for (int n = 1; n <= sc.config.n_max; ++n) {
      Params p = sc.base(d);
      p.emplace_back("N", std::to_string(n));
      sc.out.run("generating.h_at_one", p, [&] {
        return compare_values("", h_poly(n, homogeneous_spec<F>(wt)).evaluate(F(1)), F(1), tol);
      });
      std::optional<Poly<F>> previous;
      for (int s = 1; s <= std::min(n, sc.config.s_max); ++s) {
        Params ps = p;
        ps.emplace_back("s", std::to_string(s));
        std::optional<Poly<F>> current;
        auto build = [&]() -> const Poly<F>& {
          if (!current) current = h_ns(n, s, homogeneous_spec<F>(wt));
          return *current;
        };
        sc.out.run("generating.reduction", ps, [&] {
          const Poly<F>& h = build();
          if (!previous) previous = h_ns(n, s - 1, homogeneous_spec<F>(wt));
          return compare_polys("", h.substitute(static_cast<std::size_t>(s - 1), F(1)),
                               embed(*previous, static_cast<std::size_t>(s)), tol);
        });
        sc.out.run("generating.symmetry", ps, [&] {
          const Poly<F>& h = build();
          std::vector<CheckReport> parts;
          for (int i = 0; i + 1 < s; ++i) {
            parts.push_back(compare_polys("", h.swap_variables(static_cast<std::size_t>(i), static_cast<std::size_t>(i) + 1), h, tol));
          }
          if (parts.empty()) parts.push_back(compare_polys("", h, h, tol));
          return combine_reports("", parts);
        });
        sc.out.run("generating.degree", ps, [&] {
          const Poly<F>& h = build();
          int degree = -1;
          for (int i = 0; i < s; ++i) degree = std::max(degree, h.degree_in(static_cast<std::size_t>(i)));
          return predicate("", degree <= n - 1, "max degree " + std::to_string(degree), "<= " + std::to_string(n - 1),
                           std::string(FieldTraits<F>::name));
        });
        previous = current;
      }
    }
  }
}

template <class F>
void efp_suite(Scope& sc) {
  const double tol = sc.config.tolerance;
  const int n_max = sc.config.n_max;
  const int s_max = sc.config.s_max;
  for (int d = 0; d < sc.draws(); ++d) {
    const WeightTriple& wt = sc.weights[static_cast<std::size_t>(d)];
    for (int n = 1; n <= n_max; ++n) {
      for (int r = 1; r <= n; ++r) {
        for (int s = 1; s <= std::min(r, s_max); ++s) {
          Params p = sc.base(d);
          p.emplace_back("N", std::to_string(n));
          p.emplace_back("r", std::to_string(r));
          p.emplace_back("s", std::to_string(s));
          std::optional<F> reference;
          auto enumerated = [&]() -> const F& {
            if (!reference) reference = efp_enum(n, r, s, homogeneous_spec<F>(wt));
            return *reference;
          };
          sc.out.run("efp.asym_vs_enum", p, [&] {
            return compare_values("", efp_integral_asym(n, r, s, homogeneous_spec<F>(wt)), enumerated(), tol);
          });
          sc.out.run("efp.sym_vs_enum", p, [&] {
            return compare_values("", efp_integral_sym(n, r, s, homogeneous_spec<F>(wt)), enumerated(), tol);
          });
          sc.out.run("efp.w_form_vs_enum", p, [&] {
            return compare_values("", efp_w_form(n, r, s, homogeneous_spec<F>(wt)), enumerated(), tol);
          });
          if (s <= 3 && n <= 4) {
            sc.out.run("efp.double_vs_enum", p, [&] {
              return compare_values("", efp_double_integral(n, r, s, homogeneous_spec<F>(wt)), enumerated(), tol);
            });
          }
        }
      }
    }

    Lcg64 rng(stream_seed(sc.config.seed, "efp.orders." + std::to_string(d)));
    const int n = rng.uniform_int(1, n_max);
    const int r = rng.uniform_int(1, n);
    const int s = rng.uniform_int(1, std::min(r, s_max));
    std::vector<std::size_t> order(static_cast<std::size_t>(s));
    std::iota(order.begin(), order.end(), std::size_t{0});
    for (std::size_t i = order.size(); i > 1; --i) {
      std::swap(order[i - 1], order[static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(i) - 1))]);
    }
    Params p = sc.base(d);
    p.emplace_back("N", std::to_string(n));
    p.emplace_back("r", std::to_string(r));
    p.emplace_back("s", std::to_string(s));
    sc.out.run("efp.truncation_orders", p, [&] {
      const auto w = homogeneous_spec<F>(wt);
      ResidueOptions more;
      more.extra_order = 2;
      return compare_values("", efp_integral_sym(n, r, s, w, more), efp_integral_sym(n, r, s, w), tol);
    });
    Params po = p;
    std::vector<int> shown(order.begin(), order.end());
    po.emplace_back("order", join_ints(shown));
    sc.out.run("efp.processing_order", po, [&] {
      const auto w = homogeneous_spec<F>(wt);
      ResidueOptions permuted;
      permuted.processing_order = order;
      return compare_values("", efp_integral_asym(n, r, s, w, permuted), efp_integral_asym(n, r, s, w), tol);
    });

    for (int ls = 1; ls <= std::min(4, s_max); ++ls) {
      Lcg64 lemma_rng(stream_seed(sc.config.seed, "efp.residue_lemma." + std::to_string(d) + "." + std::to_string(ls)));
      sc.out.run("efp.residue_lemma", {{"draw", std::to_string(d)}}, [&] { return residue_lemma_check(ls, lemma_rng); });
    }
  }

  constexpr int kSeriesOrder = 10;
  for (int s = 1; s <= std::min(3, s_max); ++s) {
    for (int r = 1; r <= n_max; ++r) {
      sc.out.run("efp.geometric_multisum", {{"r", std::to_string(r)}, {"order", std::to_string(kSeriesOrder)}},
                 [&] { return geometric_multisum_check(s, r, kSeriesOrder); });
    }
  }
}

template <class F>
void rcp_suite(Scope& sc) {
  const double tol = sc.config.tolerance;
  for (int d = 0; d < sc.draws(); ++d) {
    const WeightTriple& wt = sc.weights[static_cast<std::size_t>(d)];
    for (int n = 1; n <= sc.config.n_max; ++n) {
      for (int s = 0; s <= std::min(n, sc.config.s_max); ++s) {
        Params ps = sc.base(d);
        ps.emplace_back("N", std::to_string(n));
        ps.emplace_back("s", std::to_string(s));
        std::vector<std::pair<F, F>> integrals;
        for (const auto& state : flux_sector_states(n, s)) {
          const auto pos = state.positions();
          const std::span<const int> positions(pos);
          Params p = ps;
          p.emplace_back("positions", join_ints(positions));
          std::optional<F> top, bottom;
          sc.out.run("rcp.ztop_vs_enum", p, [&] {
            const auto w = homogeneous_spec<F>(wt);
            top = ztop_integral(n, s, positions, w);
            return compare_values("", *top, z_top_enum(n, s, positions, w), tol);
          });
          sc.out.run("rcp.zbot_vs_enum", p, [&] {
            const auto w = homogeneous_spec<F>(wt);
            bottom = zbot_integral(n, s, positions, w);
            return compare_values("", *bottom, z_bot_enum(n, s, positions, w), tol);
          });
          sc.out.run("rcp.probability", p, [&] {
            const auto w = homogeneous_spec<F>(wt);
            if (!top || !bottom) raise(ErrorKind::InvalidArgument, "integral evaluation failed");
            const F h = *top * *bottom / partition_function(n, w);
            integrals.emplace_back(*top, *bottom);
            return compare_values("", h, rcp_enum(n, s, positions, w), tol);
          });
        }
        sc.out.run("rcp.completeness", ps, [&] {
          const auto w = homogeneous_spec<F>(wt);
          if (integrals.size() != flux_sector_states(n, s).size()) {
            raise(ErrorKind::InvalidArgument, "some integral evaluations failed");
          }
          F sum(0);
          for (const auto& [top, bottom] : integrals) sum += top * bottom;
          return compare_values("", F(sum / partition_function(n, w)), F(1), tol);
        });
        if (s >= 1) {
          std::vector<int> shifted(static_cast<std::size_t>(s));
          std::iota(shifted.begin(), shifted.end(), 0);
          Params p = ps;
          p.emplace_back("positions", join_ints(shifted));
          sc.out.run("rcp.zbot_vanishing", p, [&] {
            return compare_values("", zbot_integral(n, s, std::span<const int>(shifted), homogeneous_spec<F>(wt)), F(0), tol);
          });
        }
      }
    }
  }
}

template <class F>
void antisym_suite(Scope& sc) {
  const double tol = sc.config.tolerance;
  const double trig_tol = std::min(tol, kTrigTolerance);
  const int s_max = sc.config.s_max;
  for (int d = 0; d < trig_draws(sc.config); ++d) {
    for (int s = 1; s <= std::min(5, s_max); ++s) {
      const Params p = {{"draw", std::to_string(d)}};
      Lcg64 rng(stream_seed(sc.config.seed, "antisym.kmst." + std::to_string(d) + "." + std::to_string(s)));
      const TrigDraw t = draw_trig(rng, static_cast<std::size_t>(s), true);
      sc.out.run("antisym.kmst", p, [&] { return check_kmst(t.lambdas(), t.nus(), Real(t.eta), trig_tol); });
      if (s <= 4) {
        sc.out.run("antisym.ws_ik", p, [&] {
          CheckReport r = check_ws_ik(t.lambdas(), t.nus(), Real(t.eta), Real(t.zeta), Real(t.zeta_alt), trig_tol);
          return r.param("zeta", render(Real(t.zeta))).param("zeta_alt", render(Real(t.zeta_alt)));
        });
      }
    }
  }

  for (int d = 0; d < sc.draws(); ++d) {
    const WeightTriple& wt = sc.weights[static_cast<std::size_t>(d)];
    for (int s = 1; s <= std::min(5, s_max); ++s) {
      const std::string tag = std::to_string(d) + "." + std::to_string(s);
      const auto us = static_cast<std::size_t>(s);
      if (s <= 4) {
        Lcg64 rng(stream_seed(sc.config.seed, "antisym.identity1." + tag));
        sc.out.run("antisym.identity1", sc.base(d), [&] {
          const auto w = homogeneous_spec<F>(wt);
          return first_admissible([&] { return convert<F>(distinct_proper_fractions(rng, us)); },
                                  [&](const std::vector<F>& z) { return check_identity1<F>(z, w); }, "z");
        });
      }
      if (s <= 3) {
        Lcg64 rng(stream_seed(sc.config.seed, "antisym.whom." + tag));
        sc.out.run("antisym.whom", sc.base(d), [&] {
          const auto w = homogeneous_spec<F>(wt);
          return first_admissible([&] { return convert<F>(distinct_proper_fractions(rng, us)); },
                                  [&](const std::vector<F>& z) { return check_whom<F>(z, w); }, "z");
        });
      }
      Lcg64 rng(stream_seed(sc.config.seed, "antisym.cantini." + tag));
      sc.out.run("antisym.cantini", {{"draw", std::to_string(d)}}, [&] {
        return first_admissible(
            [&] {
              return std::tuple{convert<F>(distinct_rationals(rng, us)), convert<F>(distinct_rationals(rng, us)),
                                from_rational<F>(random_signed_rational(rng))};
            },
            [&](const auto& xyt) {
              const auto& [x, y, tau] = xyt;
              return check_cantini<F>(x, y, tau);
            },
            "x, y, tau");
      });
    }
    Lcg64 rng(stream_seed(sc.config.seed, "antisym.cantini_polynomial." + std::to_string(d)));
    sc.out.run("antisym.cantini_polynomial", {{"draw", std::to_string(d)}},
               [&] { return check_cantini_polynomial(random_signed_rational(rng)); });
  }
}

template <class F>
void tracy_widom_suite(Scope& sc) {
  const int s_max = sc.config.s_max;
  const int draws = sc.config.weights ? 1 : sc.config.draws;
  for (int d = 0; d < draws; ++d) {
    const Params p = {{"draw", std::to_string(d)}};
    for (int s = 1; s <= std::min(6, s_max); ++s) {
      const std::string tag = std::to_string(d) + "." + std::to_string(s);
      const auto us = static_cast<std::size_t>(s);
      if (s <= 5) {
        Lcg64 rng(stream_seed(sc.config.seed, "tw.tracy_widom." + tag));
        sc.out.run("tw.tracy_widom", p, [&] {
          const Rational prob = distinct_proper_fractions(rng, 1).front();
          return check_tracy_widom<F>(from_rational<F>(prob), convert<F>(distinct_proper_fractions(rng, us)));
        });
        Lcg64 rng2(stream_seed(sc.config.seed, "tw.dsvan." + tag));
        sc.out.run("tw.dsvan", p, [&] {
          return first_admissible(
              [&] { return std::pair{from_rational<F>(random_non_unit(rng2)), convert<F>(distinct_rationals(rng2, us, true))}; },
              [&](const auto& tz) { return check_dsvan<F>(tz.first, tz.second); }, "t, z");
        });
      }
      Lcg64 rng(stream_seed(sc.config.seed, "tw.smallid." + tag));
      sc.out.run("tw.smallid", p, [&] {
        const Rational t = random_non_unit(rng);
        return check_smallid<F>(from_rational<F>(t), convert<F>(distinct_rationals(rng, us, true)));
      });
      if (s <= 3) {
        Lcg64 rng2(stream_seed(sc.config.seed, "tw.cantini_reduction." + tag));
        sc.out.run("tw.cantini_reduction", p, [&] {
          // p = 1 / (1 + t^2) keeps t = sqrt(q / p) rational.
          const Rational t = random_non_unit(rng2);
          const Rational prob = 1 / (1 + t * t);
          return check_cantini_reduces_to_tw(prob, distinct_proper_fractions(rng2, us));
        });
      }
    }
  }
}

template <class F>
std::vector<CheckReport> run_typed(Suite suite, const SuiteConfig& config) {
  Collector out;
  Scope sc{config, out, weight_draws(config)};
  switch (suite) {
    case Suite::Partition: partition_suite<F>(sc); break;
    case Suite::Boundary: boundary_suite<F>(sc); break;
    case Suite::Generating: generating_suite<F>(sc); break;
    case Suite::Efp: efp_suite<F>(sc); break;
    case Suite::Rcp: rcp_suite<F>(sc); break;
    case Suite::Antisym: antisym_suite<F>(sc); break;
    case Suite::TracyWidom: tracy_widom_suite<F>(sc); break;
  }
  return out.take();
}

}  // namespace

std::vector<CheckReport> run_suite(Suite suite, const SuiteConfig& config) {
  validate(config);
  set_precision_bits(config.precision_bits);
  return config.backend == Backend::Exact ? run_typed<Rational>(suite, config) : run_typed<Real>(suite, config);
}

}  // namespace icelab::cli
