#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "icelab/algebra/scalar.hpp"

namespace icelab {

/// Vertex weights. Homogeneous: constants (a, b, c). Inhomogeneous (float
/// only): a = sin(l - n + eta), b = sin(l - n - eta), c = sin(2 eta) with
/// l the vertical-line parameter and n the horizontal-line parameter.
template <class F>
class WeightSpec {
 public:
  static WeightSpec homogeneous(const F& a, const F& b, const F& c);
  /// lambda[j-1] belongs to vertical line j (right to left), nu[k-1] to
  /// horizontal line k (top to bottom). Distinctness within each set is
  /// enforced unless `require_distinct` is false (partially homogeneous
  /// lattices, where only the transfer matrix applies).
  static WeightSpec inhomogeneous(std::vector<F> lambda, std::vector<F> nu, const F& eta,
                                  bool require_distinct = true);

  /// Same weights, float entries copied at the current default precision.
  WeightSpec widened() const;

  bool is_homogeneous() const noexcept { return homogeneous_; }
  const F& a() const noexcept { return a_; }
  const F& b() const noexcept { return b_; }
  const F& c() const noexcept { return c_; }
  F t() const { return b_ / a_; }
  F delta() const { return (a_ * a_ + b_ * b_ - c_ * c_) / (F(2) * a_ * b_); }
  const std::vector<F>& lambda() const noexcept { return lambda_; }
  const std::vector<F>& nu() const noexcept { return nu_; }
  const F& eta() const noexcept { return eta_; }

  /// Largest lattice this spec covers (unbounded for homogeneous weights).
  int max_size() const noexcept { return homogeneous_ ? 1 << 20 : static_cast<int>(lambda_.size()); }

  struct Vertex {
    F a, b, c;
  };
  /// Weights at vertical line j, horizontal line k (both 1-based).
  Vertex at(int j, int k) const;

 private:
  bool homogeneous_ = true;
  F a_{}, b_{}, c_{};
  std::vector<F> lambda_, nu_;
  F eta_{};
};

/// Arrows on the N vertical edges of one row gap. Position r = 1..N counts
/// from the right; bit r-1 of `up` is set when the arrow at r points up.
class RowState {
 public:
  RowState() = default;
  RowState(int n, std::uint32_t up_mask);

  static RowState all_down(int n) { return RowState(n, 0); }
  static RowState all_up(int n);
  /// Up arrows exactly at the strictly increasing positions r_1 < ... < r_s.
  static RowState from_positions(int n, std::span<const int> positions);

  int width() const noexcept { return n_; }
  std::uint32_t mask() const noexcept { return up_; }
  bool is_up(int r) const { return (up_ >> (r - 1)) & 1u; }
  int count_up() const noexcept { return __builtin_popcount(up_); }
  std::vector<int> positions() const;

  friend bool operator==(const RowState&, const RowState&) = default;

 private:
  int n_ = 0;
  std::uint32_t up_ = 0;
};

inline constexpr int kMaxLatticeSize = 20;

/// Weight of one horizontal line between the given vertical-edge states,
/// with outgoing horizontal boundary arrows; 0 when the ice rule fails.
template <class F>
F row_transfer_weight(const RowState& top, const RowState& bottom, const WeightSpec<F>& weights, int row_index);

/// Z_N by folding rows from the all-down top boundary to the all-up bottom.
template <class F>
F partition_function(int n, const WeightSpec<F>& weights);

/// Same sum folded from the bottom boundary upwards.
template <class F>
F partition_function_bottom_up(int n, const WeightSpec<F>& weights);

/// All states with s up arrows, ordered lexicographically by position set.
std::vector<RowState> flux_sector_states(int n, int s);

/// Rows 1..s from the all-down boundary to the state with ups at `positions`.
template <class F>
F z_top_enum(int n, int s, std::span<const int> positions, const WeightSpec<F>& weights);

/// Rows s+1..N from that state to the all-up boundary.
template <class F>
F z_bot_enum(int n, int s, std::span<const int> positions, const WeightSpec<F>& weights);

template <class F>
F boundary_correlation(int n, const WeightSpec<F>& weights, int r);

template <class F>
F rcp_enum(int n, int s, std::span<const int> positions, const WeightSpec<F>& weights);

template <class F>
F efp_enum(int n, int r, int s, const WeightSpec<F>& weights);

/// Every strictly increasing s-tuple in [lo, hi].
std::vector<std::vector<int>> increasing_tuples(int s, int lo, int hi);

}  // namespace icelab
