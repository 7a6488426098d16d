#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include "alignplot/model.hpp"
#include "alignplot/seaweed_scalar.hpp"

namespace alignplot {

// Fixed-width unsigned lanes with the all-ones value reserved as INF.
template <typename T>
struct LaneVector {
  static_assert(std::is_same_v<T, std::uint8_t> || std::is_same_v<T, std::uint16_t>,
                "lanes are 8 or 16 bit");
  static constexpr T kInf = std::numeric_limits<T>::max();

  std::vector<T> lanes;

  LaneVector() = default;
  explicit LaneVector(std::vector<T> lanes_) : lanes(std::move(lanes_)) {}
  std::size_t size() const { return lanes.size(); }

  bool operator==(const LaneVector&) const = default;
};

using LaneVector8 = LaneVector<std::uint8_t>;
using LaneVector16 = LaneVector<std::uint16_t>;

// Branchless building blocks: every lane decision is mask arithmetic, so the
// strip sweep compiles to straight-line code a vectorizer can take whole.
namespace lane_ops {

// All-ones where a < b, zero otherwise.
template <typename T>
inline T lt(T a, T b) {
  return static_cast<T>(-static_cast<T>(a < b));
}

// All-ones where equal, zero otherwise.
template <typename T>
inline T eq(T a, T b) {
  return static_cast<T>(-static_cast<T>(a == b));
}

// mask lanes are all-ones or zero: picks a where set, b where clear.
template <typename T>
inline T select(T mask, T a, T b) {
  return static_cast<T>((mask & a) | (static_cast<T>(~mask) & b));
}

// min(v + inc, max): an overflowed sum is forced to all-ones by the carry mask.
template <typename T>
inline T sat_add(T v, T inc) {
  const T s = static_cast<T>(v + inc);
  return static_cast<T>(s | lt(s, v));
}

}  // namespace lane_ops

// min(lane + 1, INF); INF is absorbing.
template <typename T>
LaneVector<T> sat_increment(LaneVector<T> v) {
  for (T& x : v.lanes) x = lane_ops::sat_add<T>(x, 1);
  return v;
}

template <typename T>
LaneVector<T> eq_mask(const LaneVector<T>& v, const LaneVector<T>& w) {
  if (v.size() != w.size()) throw std::invalid_argument("eq_mask: lane count mismatch");
  LaneVector<T> m;
  m.lanes.resize(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) m.lanes[i] = lane_ops::eq(v.lanes[i], w.lanes[i]);
  return m;
}

// Per-lane (min, max).
template <typename T>
std::pair<LaneVector<T>, LaneVector<T>> compare_exchange(const LaneVector<T>& v,
                                                         const LaneVector<T>& w) {
  if (v.size() != w.size()) throw std::invalid_argument("compare_exchange: lane count mismatch");
  LaneVector<T> lo = v, hi = w;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (lo.lanes[i] > hi.lanes[i]) std::swap(lo.lanes[i], hi.lanes[i]);
  }
  return {lo, hi};
}

// lane k = v(k) where m(k) = INF, w(k) otherwise.
template <typename T>
LaneVector<T> select_by_mask(const LaneVector<T>& m, const LaneVector<T>& v,
                             const LaneVector<T>& w) {
  if (m.size() != v.size() || m.size() != w.size()) {
    throw std::invalid_argument("select_by_mask: lane count mismatch");
  }
  LaneVector<T> out;
  out.lanes.resize(v.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    T mask = m.lanes[i];
    if (mask != 0 && mask != LaneVector<T>::kInf) {
      throw std::invalid_argument("select_by_mask: mask lanes must be 0 or INF");
    }
    out.lanes[i] = lane_ops::select(mask, v.lanes[i], w.lanes[i]);
  }
  return out;
}

// Per-column bottom events with start replaced by span (end - start), in
// stream (blown) column units. Spans above window_cols saturate to kInfSpan;
// such seaweeds never start and end inside one window.
struct RestrictedHSMEvents {
  static constexpr std::uint32_t kInfSpan = std::numeric_limits<std::uint32_t>::max();

  std::size_t window_cols = 0;  // w * r
  unsigned stride = 1;          // r
  std::vector<std::uint32_t> spans;
};

// Span stream back to start-column events; kInfSpan maps to a start left of
// every window (span window_cols + 1).
std::vector<BottomEvent> to_bottom_events(const RestrictedHSMEvents& ev);

// Antidiagonal lane sweep over the blown strip xw (length w * r) against y.
// v selects 8- or 16-bit lanes; in 8-bit mode distances are kept in units of
// r columns. The emitted stream is equivalent to comb_strip's under the span
// mapping (exact below INF).
RestrictedHSMEvents comb_strip_lanes(std::span<const std::uint8_t> xw,
                                     std::span<const std::uint8_t> y, std::size_t w,
                                     unsigned r, unsigned v);

}  // namespace alignplot
