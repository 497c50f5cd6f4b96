#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "icelab/algebra/scalar.hpp"

namespace icelab {

/// 64-bit linear congruential generator (Knuth's MMIX constants):
///   state <- state * 6364136223846793005 + 1442695040888963407 (mod 2^64).
/// Outputs are the updated state; the high bits are used for draws.
class Lcg64 {
 public:
  explicit Lcg64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return state_;
  }

  /// Uniform on [lo, hi] from the top 31 bits.
  int uniform_int(int lo, int hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>((next() >> 33) % span);
  }

  /// Uniform on [lo, hi) with 53 random bits.
  double uniform_double(double lo, double hi) {
    const double unit = static_cast<double>(next() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * unit;
  }

  Real uniform_real(double lo, double hi) { return Real(uniform_double(lo, hi)); }

  std::uint64_t state() const noexcept { return state_; }

 private:
  std::uint64_t state_;
};

/// Numerator and denominator uniform in [lo, hi], reduced.
inline Rational random_rational(Lcg64& rng, int lo = 1, int hi = 50) {
  Rational q(rng.uniform_int(lo, hi), rng.uniform_int(lo, hi));
  q.canonicalize();
  return q;
}

/// Same, with a uniformly random sign.
inline Rational random_signed_rational(Lcg64& rng, int lo = 1, int hi = 50) {
  Rational q = random_rational(rng, lo, hi);
  return rng.uniform_int(0, 1) == 0 ? q : Rational(-q);
}

inline constexpr int kMaxRejections = 1000;

template <class T>
struct Sampled {
  T value;
  int rejections = 0;
};

/// Draws until `accept(candidate)` holds. Gives up with SamplingExhausted
/// after kMaxRejections rejected draws.
template <class Draw, class Accept>
auto sample_until(Draw&& draw, Accept&& accept, const std::string& what)
    -> Sampled<std::decay_t<decltype(draw())>> {
  for (int rejected = 0; rejected <= kMaxRejections; ++rejected) {
    auto candidate = draw();
    if (accept(candidate)) return {std::move(candidate), rejected};
  }
  raise(ErrorKind::SamplingExhausted, "no admissible draw for " + what);
}

/// s pairwise distinct rationals.
inline std::vector<Rational> distinct_rationals(Lcg64& rng, std::size_t s, bool allow_negative = false) {
  std::vector<Rational> out;
  int rejected = 0;
  while (out.size() < s) {
    Rational q = allow_negative ? random_signed_rational(rng) : random_rational(rng);
    bool fresh = true;
    for (const auto& v : out) fresh = fresh && v != q;
    if (fresh) {
      out.push_back(q);
    } else if (++rejected > kMaxRejections) {
      raise(ErrorKind::SamplingExhausted, "no distinct rationals");
    }
  }
  return out;
}

}  // namespace icelab
