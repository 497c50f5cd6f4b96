#include "icelab/algebra/scalar.hpp"

#include <algorithm>
#include <cmath>

namespace icelab {

namespace {

int g_precision_bits = 0;

unsigned digits10_for_bits(int bits) {
  return static_cast<unsigned>(std::ceil(bits * 0.30102999566398120));
}

void ensure_initialized() {
  if (g_precision_bits == 0) {
    g_precision_bits = kDefaultPrecisionBits;
    Real::default_precision(digits10_for_bits(kDefaultPrecisionBits));
  }
}

[[maybe_unused]] const bool g_initialized = (ensure_initialized(), true);

}  // namespace

int precision_bits() noexcept {
  ensure_initialized();
  return g_precision_bits;
}

void set_precision_bits(int bits) {
  if (bits < 24 || bits > 4096) {
    raise(ErrorKind::InvalidArgument, "precision must lie in [24, 4096] bits");
  }
  g_precision_bits = bits;
  Real::default_precision(digits10_for_bits(bits));
}

GuardPrecision::GuardPrecision() : saved_digits10_(Real::default_precision()) {
  Real::default_precision(std::max(saved_digits10_, digits10_for_bits(precision_bits() + kGuardBits)));
}

GuardPrecision::~GuardPrecision() { Real::default_precision(saved_digits10_); }

Real widen(const Real& x) { return Real(x, std::max(x.precision(), Real::default_precision())); }

Real scaled_tolerance(double tolerance_at_53_bits) {
  return Real(tolerance_at_53_bits) *
         boost::multiprecision::ldexp(Real(1), kDefaultPrecisionBits - precision_bits());
}

Real FieldTraits<Real>::from_rational(const Rational& q) {
  ensure_initialized();
  boost::multiprecision::mpq_rational exact(q.get_mpq_t());
  return Real(exact);
}

std::string FieldTraits<Real>::render(const Real& x) {
  return x.str(17, std::ios_base::fmtflags(0));
}

bool FieldTraits<Real>::negligible(const Real& x, const Real& scale) {
  Real bound = boost::multiprecision::abs(scale) *
               boost::multiprecision::ldexp(Real(1), -(precision_bits() - 8));
  return boost::multiprecision::abs(x) <= bound;
}

}  // namespace icelab
