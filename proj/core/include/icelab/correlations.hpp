#pragma once

#include <functional>
#include <span>
#include <vector>

#include "icelab/algebra/jet.hpp"
#include "icelab/algebra/poly.hpp"
#include "icelab/algebra/series.hpp"
#include "icelab/lattice.hpp"
#include "icelab/random.hpp"
#include "icelab/report.hpp"

namespace icelab {

/// h_N(z) = sum_r H_N^{(r)} z^{r-1}.
template <class F>
struct GeneratingFunction {
  int n = 0;
  std::vector<F> coefficients;  // H_N^{(1)}, ..., H_N^{(N)}

  F evaluate(const F& z) const;
};

template <class F>
GeneratingFunction<F> h_poly(int n, const WeightSpec<F>& weights);

/// h_{N,s}(z_1..z_s) as a polynomial in s variables. h_{N,0} is the constant 1
/// in zero variables.
template <class F>
Poly<F> h_ns(int n, int s, const WeightSpec<F>& weights);

/// Same, from precomputed generating functions gens[j-1] = h_{N-s+j}: row j
/// of the alternant is z^{s-j} (z-1)^{j-1} h_{N-s+j}(z).
template <class F>
Poly<F> h_ns_from(std::span<const GeneratingFunction<F>> gens, int s);

/// u = -(z - 1) / ((t^2 - 2 Delta t) z + 1).
template <class F>
F u_of_z(const F& z, const F& t, const F& delta);

template <class F>
Jet<F> u_of_z(const Jet<F>& z, const F& t, const F& delta);

/// p(u(z_1), ..., u(z_n)) expanded around z = 0 to the given orders.
template <class F>
Series<F> compose_with_u(const Poly<F>& p, const std::vector<int>& orders, const F& t, const F& delta);

/// Contour around `center`: extract the coefficient of (v - center)^target of
/// the Laurent expansion (target = -1 is the residue).
template <class F>
struct ResidueSpec {
  F center;
  int target_exponent = -1;
};

/// Product of factors in the integration variables v_0..v_{n-1}. Pole factors
/// (v_i - center_i)^{-m} are declared explicitly; every other factor must be
/// analytic and nonzero at the centers.
template <class F>
class Integrand {
 public:
  /// Expansion of a factor in the shifted variables h_i = v_i - center_i,
  /// truncated to the given orders.
  using Expansion = std::function<Series<F>(const std::vector<int>& orders)>;

  explicit Integrand(std::size_t nvars) : nvars_(nvars), pole_orders_(nvars, 0) {}

  std::size_t num_variables() const noexcept { return nvars_; }

  Integrand& scale(const F& c) {
    prefactor_ *= c;
    return *this;
  }
  Integrand& pole(std::size_t var, int order) {
    pole_orders_.at(var) += order;
    return *this;
  }
  /// p(v)^exponent, p given in the original (unshifted) variables.
  Integrand& unit(Poly<F> p, int exponent = 1) {
    if (p.num_variables() != nvars_) raise(ErrorKind::InvalidArgument, "factor has the wrong number of variables");
    polys_.push_back({std::move(p), exponent});
    return *this;
  }
  Integrand& expanded(Expansion e) {
    expansions_.push_back(std::move(e));
    return *this;
  }

  const F& prefactor() const noexcept { return prefactor_; }
  const std::vector<int>& pole_orders() const noexcept { return pole_orders_; }

  struct PolyFactor {
    Poly<F> poly;
    int exponent;
  };
  const std::vector<PolyFactor>& poly_factors() const noexcept { return polys_; }
  const std::vector<Expansion>& expansions() const noexcept { return expansions_; }

 private:
  std::size_t nvars_;
  F prefactor_{1};
  std::vector<int> pole_orders_;
  std::vector<PolyFactor> polys_;
  std::vector<Expansion> expansions_;
};

struct ResidueOptions {
  /// Order in which variables are extracted; empty means a single joint
  /// coefficient extraction.
  std::vector<std::size_t> processing_order;
  /// Added to every truncation order (used to confirm orders are sufficient).
  int extra_order = 0;
};

/// Iterated residues: expands every factor in the shifted variables,
/// multiplies, and extracts the target coefficient. ZeroConstantTerm when a
/// non-pole factor vanishes at a center.
template <class F>
F iterated_residue(const Integrand<F>& integrand, std::span<const ResidueSpec<F>> specs,
                   const ResidueOptions& options = {});

/// Multiple-integral representations, homogeneous weights.
template <class F>
F efp_integral_asym(int n, int r, int s, const WeightSpec<F>& weights, const ResidueOptions& options = {});
template <class F>
F efp_integral_sym(int n, int r, int s, const WeightSpec<F>& weights, const ResidueOptions& options = {});
/// Positions are taken as given; any r_j <= 0 makes the integral vanish.
template <class F>
F zbot_integral(int n, int s, std::span<const int> positions, const WeightSpec<F>& weights,
                const ResidueOptions& options = {});
template <class F>
F ztop_integral(int n, int s, std::span<const int> positions, const WeightSpec<F>& weights,
                const ResidueOptions& options = {});
/// 2s-fold form after the geometric summation: x around 0, y around 1/t.
template <class F>
F efp_double_integral(int n, int r, int s, const WeightSpec<F>& weights, const ResidueOptions& options = {});
/// s-fold form with W_s(x; 1/t, ..., 1/t) after the y integrations.
template <class F>
F efp_w_form(int n, int r, int s, const WeightSpec<F>& weights, const ResidueOptions& options = {});

/// Truncated formal-series check of the multiple geometric summation.
CheckReport geometric_multisum_check(int s, int r, int order);

/// Residues of prod (y_j - w)^{-s} prod_{j<k} (y_k - y_j)^2 Phi against
/// (-1)^{s(s-1)/2} s! Phi(w, ..., w) for a random symmetric Phi.
CheckReport residue_lemma_check(int s, Lcg64& rng);

/// Copies p into a polynomial ring with more variables (same leading slots).
template <class F>
Poly<F> embed(const Poly<F>& p, std::size_t nvars, std::size_t offset = 0);

}  // namespace icelab
