#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <span>
#include <utility>
#include <vector>

#include "icelab/errors.hpp"

namespace icelab {

/// Antisymmetrizers refuse larger variable sets unless asked (7! = 5040 terms).
inline constexpr std::size_t kDefaultAntisymmetrizeBound = 7;

/// Bijection of {0..n-1} with its sign (-1)^{inversions}.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t v : images_) {
      if (v >= images_.size() || seen[v]) raise(ErrorKind::InvalidArgument, "images do not form a bijection");
      seen[v] = true;
    }
    sign_ = parity_sign(images_);
  }

  static Permutation identity(std::size_t n) {
    std::vector<std::size_t> images(n);
    std::iota(images.begin(), images.end(), std::size_t{0});
    return Permutation(std::move(images));
  }

  std::size_t size() const noexcept { return images_.size(); }
  std::size_t operator[](std::size_t i) const { return images_[i]; }
  const std::vector<std::size_t>& images() const noexcept { return images_; }
  int sign() const noexcept { return sign_; }

  /// Advances to the lexicographically next permutation; false after the last.
  bool next() {
    bool more = std::next_permutation(images_.begin(), images_.end());
    sign_ = parity_sign(images_);
    return more;
  }

  static int parity_sign(std::span<const std::size_t> images) {
    int inversions = 0;
    for (std::size_t i = 0; i < images.size(); ++i) {
      for (std::size_t j = i + 1; j < images.size(); ++j) {
        if (images[i] > images[j]) ++inversions;
      }
    }
    return inversions % 2 == 0 ? 1 : -1;
  }

 private:
  std::vector<std::size_t> images_;
  int sign_ = 1;
};

template <class Fn>
void for_each_permutation(std::size_t n, Fn&& fn) {
  Permutation p = Permutation::identity(n);
  do {
    fn(static_cast<const Permutation&>(p));
  } while (p.next());
}

/// sum_sigma sign(sigma) f(v_{sigma_1}, ..., v_{sigma_s}).
/// `f` receives a span of permuted arguments and returns a ring element.
template <class T, class Fn>
auto antisymmetrize(Fn&& f, std::span<const T> vars, std::size_t bound = kDefaultAntisymmetrizeBound)
    -> std::decay_t<decltype(f(std::span<const T>{}))> {
  using R = std::decay_t<decltype(f(std::span<const T>{}))>;
  if (vars.size() > bound) raise(ErrorKind::InvalidArgument, "antisymmetrization set exceeds the configured bound");
  std::vector<T> permuted(vars.begin(), vars.end());
  bool first = true;
  R total{};
  for_each_permutation(vars.size(), [&](const Permutation& sigma) {
    for (std::size_t i = 0; i < vars.size(); ++i) permuted[i] = vars[sigma[i]];
    R term = f(std::span<const T>(permuted));
    if (sigma.sign() < 0) term = -term;
    if (first) {
      total = std::move(term);
      first = false;
    } else {
      total = total + term;
    }
  });
  return total;
}

}  // namespace icelab
