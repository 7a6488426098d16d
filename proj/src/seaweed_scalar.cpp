#include "alignplot/seaweed_scalar.hpp"

#include <functional>
#include <queue>
#include <stdexcept>

#include "alignplot/runner.hpp"

namespace alignplot {

CombResult comb_strip(std::span<const std::uint8_t> xw, std::span<const std::uint8_t> y) {
  const std::size_t w = xw.size();
  const std::size_t n = y.size();

  // front[j]: start id of the seaweed currently crossing column j's
  // horizontal front. Top-boundary seaweeds carry their start column as id.
  std::vector<std::int32_t> front(n);
  for (std::size_t j = 0; j < n; ++j) front[j] = static_cast<std::int32_t>(j);

  std::vector<std::int32_t> right_exit(w);
  for (std::size_t i = 0; i < w; ++i) {
    // Left-boundary seaweed for row i: id -(i+1), "left of everything".
    std::int32_t runner = -static_cast<std::int32_t>(i) - 1;
    const std::uint8_t xc = xw[i];
    const std::uint8_t* yc = y.data();
    for (std::size_t j = 0; j < n; ++j) {
      const std::int32_t top = front[j];
      if (xc == yc[j] || runner > top) {
        front[j] = runner;
        runner = top;
      }
    }
    right_exit[i] = runner;
  }

  CombResult res;
  res.hsm.strip_width = n;
  res.hsm.strip_height = w;
  res.hsm.critical_points.reserve(w + n);
  res.events.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    res.events.push_back({static_cast<std::int32_t>(j), front[j]});
    res.hsm.critical_points.push_back({front[j], static_cast<std::int32_t>(j)});
  }
  for (std::size_t i = 0; i < w; ++i) {
    res.hsm.critical_points.push_back({right_exit[i], static_cast<std::int32_t>(n + i)});
  }
  return res;
}

std::size_t llcs_query(const ImplicitHSM& hsm, std::size_t i, std::size_t j) {
  const std::size_t n = hsm.strip_width;
  if (i > j || j > n) {
    throw std::out_of_range("llcs_query: need 0 <= i <= j <= " + std::to_string(n));
  }
  const auto lo = static_cast<std::int32_t>(i);
  const auto hi = static_cast<std::int32_t>(j);
  std::size_t dominated = 0;
  for (const CriticalPoint& p : hsm.critical_points) {
    if (p.start >= lo && p.end < hi) ++dominated;
  }
  return (j - i) - dominated;
}

std::vector<std::size_t> window_llcs_from_events(std::span<const BottomEvent> events,
                                                 std::size_t window_cols,
                                                 std::size_t stride) {
  const std::size_t n = events.size();
  if (stride == 0) throw std::invalid_argument("window_llcs_from_events: stride must be positive");
  if (window_cols == 0 || window_cols > n) {
    throw std::invalid_argument("window_llcs_from_events: window does not fit event stream");
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (events[j].end_col != static_cast<std::int32_t>(j)) {
      throw std::invalid_argument("window_llcs_from_events: event stream misses column " +
                                  std::to_string(j));
    }
  }

  std::priority_queue<std::int32_t, std::vector<std::int32_t>, std::greater<>> inside;
  std::vector<std::size_t> out;
  out.reserve((n - window_cols) / stride + 1);

  std::size_t window_start = 0;
  std::size_t report_at = window_cols - 1;
  for (std::size_t j = 0; j < n; ++j) {
    inside.push(events[j].start_col);
    if (j == report_at) {
      while (!inside.empty() && inside.top() < static_cast<std::int32_t>(window_start)) {
        inside.pop();
      }
      // All queued seaweeds now start and end within the current window.
      out.push_back(window_cols - inside.size());
      window_start += stride;
      report_at += stride;
    }
  }
  return out;
}

std::vector<std::size_t> wlcs_row(std::span<const BottomEvent> events, std::size_t w,
                                  std::size_t n) {
  if (events.size() != n) {
    throw std::invalid_argument("wlcs_row: expected exactly one event per column");
  }
  return window_llcs_from_events(events, w, 1);
}

PlotGrid plot_scalar(const Sequence& x, const Sequence& y, const PlotConfig& cfg) {
  PlotConfig local = cfg;
  local.mode = Mode::sea_scalar;
  local.workers = 1;
  return compute_plot(x, y, local);
}

}  // namespace alignplot
