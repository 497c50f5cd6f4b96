#include "icelab/izergin_korepin.hpp"

#include "icelab/algebra/linalg.hpp"
#include "icelab/correlations.hpp"
#include "icelab/lattice.hpp"

namespace icelab {

Real VertexWeightFunctions::phi(const Real& l, const Real& n) const {
  const Real av = a(l, n);
  const Real bv = b(l, n);
  if (FieldTraits<Real>::negligible(av, Real(1)) || FieldTraits<Real>::negligible(bv, Real(1))) {
    raise(ErrorKind::PoleInPhi, "a or b vanishes, phi has a pole");
  }
  return c_ / (av * bv);
}

Real VertexWeightFunctions::gamma(const Real& xi, const Real& l) const {
  const Real zero(0);
  const Real den = b(l, zero) * a(Real(l + xi), zero);
  if (FieldTraits<Real>::negligible(den, Real(1))) raise(ErrorKind::PoleHit, "gamma has a pole here");
  return a(l, zero) * b(Real(l + xi), zero) / den;
}

Jet<Real> VertexWeightFunctions::phi_jet(const Real& l, int order) const {
  (void)phi(l, Real(0));
  return taylor_jet<Real>(
      [&](const Jet<Real>& x) { return c_ / (icelab::sin(x + eta_) * icelab::sin(x - eta_)); }, l, order);
}

Real ik_inhomogeneous(std::span<const Real> lambda_in, std::span<const Real> nu_in, const Real& eta) {
  const std::size_t n = lambda_in.size();
  if (nu_in.size() != n) raise(ErrorKind::WidthMismatch, "lambda and nu must have equal length");
  if (n == 0) raise(ErrorKind::InvalidArgument, "empty lattice");
  const GuardPrecision guard;
  std::vector<Real> lambda, nu;
  for (std::size_t j = 0; j < n; ++j) {
    lambda.push_back(widen(lambda_in[j]));
    nu.push_back(widen(nu_in[j]));
  }
  const VertexWeightFunctions w(widen(eta));
  Real prefactor(1);
  Matrix<Real> m(n, n, Real(0));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      m(j, k) = w.phi(lambda[j], nu[k]);
      prefactor *= w.a(lambda[j], nu[k]) * w.b(lambda[j], nu[k]);
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j + 1; k < n; ++k) {
      const Real dl = w.d(lambda[k], lambda[j]);
      const Real dn = w.d(nu[j], nu[k]);
      if (FieldTraits<Real>::negligible(dl, Real(1)) || FieldTraits<Real>::negligible(dn, Real(1))) {
        raise(ErrorKind::CoincidingParameters, "spectral parameters coincide");
      }
      prefactor /= dl * dn;
    }
  }
  return prefactor * det(std::move(m));
}

Real ik_homogeneous(const Real& lambda_in, const Real& eta, int n) {
  if (n < 1) raise(ErrorKind::InvalidArgument, "lattice size must be positive");
  const GuardPrecision guard;
  const Real lambda = widen(lambda_in);
  const VertexWeightFunctions w(widen(eta));
  const Jet<Real> jet = w.phi_jet(lambda, 2 * n - 2);
  const std::size_t size = static_cast<std::size_t>(n);
  Matrix<Real> m(size, size, Real(0));
  for (std::size_t j = 0; j < size; ++j) {
    for (std::size_t k = 0; k < size; ++k) m(j, k) = jet.derivative(static_cast<int>(j + k));
  }
  const Real ab = w.a(lambda, Real(0)) * w.b(lambda, Real(0));
  Real value = ipow(ab, n * n) * det(std::move(m));
  for (int j = 1; j < n; ++j) value /= ipow(factorial<Real>(j), 2);
  return value;
}

CheckReport partial_inhomogeneous_relation(std::span<const Real> lambda, const Real& lambda0, const Real& eta,
                                           double tolerance) {
  const int n = static_cast<int>(lambda.size());
  if (n < 1) raise(ErrorKind::InvalidArgument, "empty lattice");
  const VertexWeightFunctions w(eta);
  const Real zero(0);

  // With every nu at 0 the determinant formula is 0/0; the transfer matrix is not.
  const auto inhomogeneous = WeightSpec<Real>::inhomogeneous(std::vector<Real>(lambda.begin(), lambda.end()),
                                                             std::vector<Real>(lambda.size(), zero), eta, false);
  const Real lhs = partition_function(n, inhomogeneous);

  const auto homogeneous = WeightSpec<Real>::homogeneous(w.a(lambda0, zero), w.b(lambda0, zero), w.c());
  Real rhs = partition_function(n, homogeneous);
  std::vector<Real> gammas;
  for (const auto& l : lambda) {
    rhs *= ipow(Real(w.a(l, zero) / w.a(lambda0, zero)), n - 1);
    gammas.push_back(w.gamma(Real(l - lambda0), lambda0));
  }
  rhs *= h_ns(n, n, homogeneous).evaluate(gammas);

  CheckReport report = compare_values("partition.partial_inhomogeneous", lhs, rhs, tolerance);
  report.param("N", std::to_string(n)).param("lambda0", render(lambda0)).param("eta", render(eta));
  return report;
}

}  // namespace icelab
