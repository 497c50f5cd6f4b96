#include "icelab/lattice.hpp"

#include <algorithm>

#include "icelab/algebra/jet.hpp"

namespace icelab {

template <class F>
WeightSpec<F> WeightSpec<F>::homogeneous(const F& a, const F& b, const F& c) {
  if (is_zero(a) || is_zero(b) || is_zero(c)) raise(ErrorKind::PoleHit, "vertex weights a, b, c must be nonzero");
  WeightSpec w;
  w.a_ = a;
  w.b_ = b;
  w.c_ = c;
  return w;
}

template <class F>
WeightSpec<F> WeightSpec<F>::inhomogeneous(std::vector<F> lambda, std::vector<F> nu, const F& eta,
                                          bool require_distinct) {
  if constexpr (is_exact_v<F>) {
    raise(ErrorKind::InvalidArgument, "trigonometric weights need the float backend");
  } else {
    if (lambda.size() != nu.size()) raise(ErrorKind::WidthMismatch, "lambda and nu must have equal length");
    auto check_distinct = [](const std::vector<F>& v, const char* name) {
      for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::size_t j = i + 1; j < v.size(); ++j) {
          if (v[i] == v[j]) raise(ErrorKind::CoincidingParameters, std::string(name) + " values must be distinct");
        }
      }
    };
    if (require_distinct) {
      check_distinct(lambda, "lambda");
      check_distinct(nu, "nu");
    }
    WeightSpec w;
    w.homogeneous_ = false;
    w.lambda_ = std::move(lambda);
    w.nu_ = std::move(nu);
    w.eta_ = eta;
    w.c_ = icelab::sin(F(2 * eta));
    return w;
  }
}

template <class F>
WeightSpec<F> WeightSpec<F>::widened() const {
  WeightSpec w = *this;
  if constexpr (!is_exact_v<F>) {
    for (F* x : {&w.a_, &w.b_, &w.c_, &w.eta_}) *x = widen(*x);
    for (auto& x : w.lambda_) x = widen(x);
    for (auto& x : w.nu_) x = widen(x);
    if (!homogeneous_) w.c_ = icelab::sin(F(2 * w.eta_));
  }
  return w;
}

template <class F>
typename WeightSpec<F>::Vertex WeightSpec<F>::at(int j, int k) const {
  if (homogeneous_) return {a_, b_, c_};
  if constexpr (is_exact_v<F>) {
    raise(ErrorKind::InvalidArgument, "trigonometric weights need the float backend");
  } else {
    const F x = lambda_.at(static_cast<std::size_t>(j - 1)) - nu_.at(static_cast<std::size_t>(k - 1));
    return {icelab::sin(F(x + eta_)), icelab::sin(F(x - eta_)), c_};
  }
}

RowState::RowState(int n, std::uint32_t up_mask) : n_(n), up_(up_mask) {
  if (n < 0 || n > kMaxLatticeSize) raise(ErrorKind::InvalidArgument, "row width out of range");
  if (n < 32 && (up_mask >> n) != 0) raise(ErrorKind::PositionsOutOfRange, "up arrow beyond the row width");
}

RowState RowState::all_up(int n) { return RowState(n, n == 0 ? 0u : (~0u >> (32 - n))); }

RowState RowState::from_positions(int n, std::span<const int> positions) {
  std::uint32_t mask = 0;
  int previous = 0;
  for (int r : positions) {
    if (r <= previous || r > n) raise(ErrorKind::PositionsOutOfRange, "positions must satisfy 1 <= r_1 < ... < r_s <= N");
    mask |= 1u << (r - 1);
    previous = r;
  }
  return RowState(n, mask);
}

std::vector<int> RowState::positions() const {
  std::vector<int> out;
  for (int r = 1; r <= n_; ++r) {
    if (is_up(r)) out.push_back(r);
  }
  return out;
}

template <class F>
F row_transfer_weight(const RowState& top, const RowState& bottom, const WeightSpec<F>& weights, int row_index) {
  if (top.width() != bottom.width()) raise(ErrorKind::WidthMismatch, "row states of different widths");
  const int n = top.width();
  if (row_index < 1 || row_index > weights.max_size()) raise(ErrorKind::InvalidArgument, "row index out of range");
  // Horizontal arrow entering each vertex from the right; the right boundary
  // arrow points right (outgoing).
  bool right_points_left = false;
  F weight(1);
  for (int r = 1; r <= n; ++r) {
    const bool top_down = !top.is_up(r);
    const bool bottom_up = bottom.is_up(r);
    const int incoming = int(right_points_left) + int(top_down) + int(bottom_up);
    bool left_points_left;
    if (incoming == 2) {
      left_points_left = true;  // left edge must carry an outgoing arrow
    } else if (incoming == 1) {
      left_points_left = false;
    } else {
      return F(0);
    }
    const auto v = weights.at(r, row_index);
    if (left_points_left != right_points_left) {
      weight *= v.c;
    } else if (left_points_left == top_down) {
      weight *= v.a;  // (left, down) or (right, up)
    } else {
      weight *= v.b;
    }
    right_points_left = left_points_left;
  }
  return right_points_left ? weight : F(0);
}

namespace {

std::vector<std::vector<std::uint32_t>> masks_by_popcount(int n) {
  std::vector<std::vector<std::uint32_t>> out(static_cast<std::size_t>(n) + 1);
  for (std::uint32_t m = 0; m < (1u << n); ++m) out[static_cast<std::size_t>(__builtin_popcount(m))].push_back(m);
  return out;
}

void check_size(int n) {
  if (n < 1 || n > kMaxLatticeSize) raise(ErrorKind::InvalidArgument, "lattice size out of range");
}

// Distribution over the states below row `last`, starting from `start` above
// row `first`. After row k the state has exactly k up arrows.
template <class F>
std::vector<F> fold_down(int n, const WeightSpec<F>& weights, const RowState& start, int first, int last) {
  const auto sectors = masks_by_popcount(n);
  std::vector<F> dist(std::size_t{1} << n, F(0));
  dist[start.mask()] = F(1);
  for (int k = first; k <= last; ++k) {
    std::vector<F> next(dist.size(), F(0));
    for (std::uint32_t m : sectors[static_cast<std::size_t>(k - 1)]) {
      if (is_zero(dist[m])) continue;
      const RowState top(n, m);
      for (std::uint32_t b : sectors[static_cast<std::size_t>(k)]) {
        F w = row_transfer_weight(top, RowState(n, b), weights, k);
        if (!is_zero(w)) next[b] += dist[m] * w;
      }
    }
    dist = std::move(next);
  }
  return dist;
}

void check_positions(int n, int s, std::span<const int> positions) {
  if (s < 0 || s > n || static_cast<int>(positions.size()) != s) {
    raise(ErrorKind::PositionsOutOfRange, "need exactly s positions with 0 <= s <= N");
  }
  (void)RowState::from_positions(n, positions);
}

}  // namespace

template <class F>
F partition_function(int n, const WeightSpec<F>& weights) {
  check_size(n);
  return fold_down(n, weights, RowState::all_down(n), 1, n)[RowState::all_up(n).mask()];
}

template <class F>
F partition_function_bottom_up(int n, const WeightSpec<F>& weights) {
  check_size(n);
  const auto sectors = masks_by_popcount(n);
  std::vector<F> dist(std::size_t{1} << n, F(0));
  dist[RowState::all_up(n).mask()] = F(1);
  for (int k = n; k >= 1; --k) {
    std::vector<F> next(dist.size(), F(0));
    for (std::uint32_t b : sectors[static_cast<std::size_t>(k)]) {
      if (is_zero(dist[b])) continue;
      const RowState bottom(n, b);
      for (std::uint32_t m : sectors[static_cast<std::size_t>(k - 1)]) {
        F w = row_transfer_weight(RowState(n, m), bottom, weights, k);
        if (!is_zero(w)) next[m] += w * dist[b];
      }
    }
    dist = std::move(next);
  }
  return dist[0];
}

std::vector<RowState> flux_sector_states(int n, int s) {
  if (s < 0 || s > n) raise(ErrorKind::InvalidArgument, "flux sector out of range");
  std::vector<RowState> out;
  for (const auto& tuple : increasing_tuples(s, 1, n)) out.push_back(RowState::from_positions(n, tuple));
  return out;
}

std::vector<std::vector<int>> increasing_tuples(int s, int lo, int hi) {
  std::vector<std::vector<int>> out;
  if (s < 0) return out;
  std::vector<int> current;
  auto rec = [&](auto&& self, int from) -> void {
    if (static_cast<int>(current.size()) == s) {
      out.push_back(current);
      return;
    }
    const int remaining = s - static_cast<int>(current.size());
    for (int v = from; v <= hi - remaining + 1; ++v) {
      current.push_back(v);
      self(self, v + 1);
      current.pop_back();
    }
  };
  rec(rec, lo);
  return out;
}

template <class F>
F z_top_enum(int n, int s, std::span<const int> positions, const WeightSpec<F>& weights) {
  check_size(n);
  check_positions(n, s, positions);
  const RowState target = RowState::from_positions(n, positions);
  if (s == 0) return F(1);
  return fold_down(n, weights, RowState::all_down(n), 1, s)[target.mask()];
}

template <class F>
F z_bot_enum(int n, int s, std::span<const int> positions, const WeightSpec<F>& weights) {
  check_size(n);
  check_positions(n, s, positions);
  const RowState start = RowState::from_positions(n, positions);
  if (s == n) return F(1);
  return fold_down(n, weights, start, s + 1, n)[RowState::all_up(n).mask()];
}

template <class F>
F rcp_enum(int n, int s, std::span<const int> positions, const WeightSpec<F>& weights) {
  const F top = z_top_enum(n, s, positions, weights);
  const F bottom = z_bot_enum(n, s, positions, weights);
  const F z = partition_function(n, weights);
  return top * bottom / z;
}

template <class F>
F boundary_correlation(int n, const WeightSpec<F>& weights, int r) {
  if (r < 1 || r > n) raise(ErrorKind::PositionsOutOfRange, "boundary position out of range");
  const int positions[] = {r};
  return rcp_enum(n, 1, std::span<const int>(positions), weights);
}

template <class F>
F efp_enum(int n, int r, int s, const WeightSpec<F>& weights) {
  check_size(n);
  if (r < 1 || r > n || s < 0 || s > n) raise(ErrorKind::PositionsOutOfRange, "need 1 <= r <= N and 0 <= s <= N");
  if (s == 0) return F(1);
  // One fold for the top part; the bottom parts share the same Z_N.
  const auto top = fold_down(n, weights, RowState::all_down(n), 1, s);
  const F z = partition_function(n, weights);
  F total(0);
  for (const auto& tuple : increasing_tuples(s, 1, r)) {
    const RowState state = RowState::from_positions(n, tuple);
    if (is_zero(top[state.mask()])) continue;
    total += top[state.mask()] * z_bot_enum(n, s, std::span<const int>(tuple), weights);
  }
  return total / z;
}

#define ICELAB_INSTANTIATE_LATTICE(F)                                                                   \
  template class WeightSpec<F>;                                                                         \
  template F row_transfer_weight<F>(const RowState&, const RowState&, const WeightSpec<F>&, int);       \
  template F partition_function<F>(int, const WeightSpec<F>&);                                          \
  template F partition_function_bottom_up<F>(int, const WeightSpec<F>&);                                \
  template F z_top_enum<F>(int, int, std::span<const int>, const WeightSpec<F>&);                       \
  template F z_bot_enum<F>(int, int, std::span<const int>, const WeightSpec<F>&);                       \
  template F boundary_correlation<F>(int, const WeightSpec<F>&, int);                                   \
  template F rcp_enum<F>(int, int, std::span<const int>, const WeightSpec<F>&);                         \
  template F efp_enum<F>(int, int, int, const WeightSpec<F>&);

ICELAB_INSTANTIATE_LATTICE(Rational)
ICELAB_INSTANTIATE_LATTICE(Real)

}  // namespace icelab
