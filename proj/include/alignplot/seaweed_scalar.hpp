#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "alignplot/model.hpp"

namespace alignplot {

// One seaweed reaching the strip bottom. start_col is negative when the
// seaweed entered through the left boundary (row i enters with id -(i+1)).
struct BottomEvent {
  std::int32_t end_col;
  std::int32_t start_col;

  bool operator==(const BottomEvent&) const = default;
};

// Seaweed start/end column pair. Ends on the bottom row have end < n; ends on
// the right boundary are encoded as end = n + row.
struct CriticalPoint {
  std::int32_t start;
  std::int32_t end;

  bool operator==(const CriticalPoint&) const = default;
};

// Implicit highest-score matrix for one strip (one x-window against all of y):
// the full set of strip_height + strip_width critical points.
struct ImplicitHSM {
  std::size_t strip_width = 0;   // n
  std::size_t strip_height = 0;  // w
  std::vector<CriticalPoint> critical_points;
};

struct CombResult {
  ImplicitHSM hsm;
  std::vector<BottomEvent> events;  // one per column, in column order
};

// Seaweed combing over the strip xw (rows) x y (columns). At each cell the
// top-entering seaweed T and left-entering seaweed V exchange directions iff
// the characters match or start(V) > start(T) (the pair has already crossed);
// otherwise they cross.
CombResult comb_strip(std::span<const std::uint8_t> xw, std::span<const std::uint8_t> y);

// A(i, j) = j - i - |{(s, e) critical : s >= i, e < j}|, the LLCS of xw
// against y[i..j). Requires 0 <= i <= j <= n.
std::size_t llcs_query(const ImplicitHSM& hsm, std::size_t i, std::size_t j);

// Sliding-window count over a per-column event stream: entry k is the LLCS of
// the window of `window_cols` columns starting at column k * stride. Seaweed
// starts enter a min-heap as their end column is consumed and are evicted once
// they fall left of the current window.
std::vector<std::size_t> window_llcs_from_events(std::span<const BottomEvent> events,
                                                 std::size_t window_cols,
                                                 std::size_t stride = 1);

// Convenience form: one entry per w-window of y at stride 1.
std::vector<std::size_t> wlcs_row(std::span<const BottomEvent> events, std::size_t w,
                                  std::size_t n);

// Full plot through the scalar seaweed engine (single strip per grid row).
PlotGrid plot_scalar(const Sequence& x, const Sequence& y, const PlotConfig& cfg);

}  // namespace alignplot
