#pragma once

#include <vector>

#include "alignplot/model.hpp"

namespace alignplot {

// One grid row's worth of work: the strip of x-window x[x_offset .. x_offset+w)
// against all of y. Tasks go to workers round-robin by row index.
struct StripTask {
  std::size_t row_index;
  std::size_t x_offset;
  Mode engine;

  bool operator==(const StripTask&) const = default;
};

// One task per grid row, in row order. Throws EmptyPlotError when w > m.
std::vector<StripTask> plan_strips(const PlotConfig& cfg, std::size_t m);

// Full alignment plot through the configured engine. The grid is bitwise
// identical for any worker count: rows are disjoint and written exactly once.
PlotGrid compute_plot(const Sequence& x, const Sequence& y, const PlotConfig& cfg);

}  // namespace alignplot
