#include "alignplot/runner.hpp"

#include <algorithm>
#include <exception>
#include <mutex>
#include <thread>

#include "alignplot/baselines.hpp"
#include "alignplot/lane_kernel.hpp"
#include "alignplot/scoring.hpp"
#include "alignplot/seaweed_scalar.hpp"

namespace alignplot {

std::vector<StripTask> plan_strips(const PlotConfig& cfg, std::size_t m) {
  if (cfg.window_w > m) {
    throw EmptyPlotError("no window of size " + std::to_string(cfg.window_w) +
                         " fits an input of length " + std::to_string(m));
  }
  const std::size_t rows = (m - cfg.window_w) / cfg.step_h + 1;
  std::vector<StripTask> tasks;
  tasks.reserve(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    tasks.push_back({r, r * cfg.step_h, cfg.mode});
  }
  return tasks;
}

namespace {

half_score_t llcs_to_half(std::size_t llcs, std::size_t w, unsigned r) {
  // In r=2 mode the blown-window LLCS carries the alignment score of two
  // length-w windows.
  return r == 1 ? static_cast<half_score_t>(2 * llcs) : recover_score(llcs, w, w);
}

// Scores for one grid row. xw and y are already blown when r = 2.
void compute_row(Mode mode, std::span<const std::uint8_t> xw,
                 std::span<const std::uint8_t> y, std::size_t w, unsigned r,
                 std::span<half_score_t> out) {
  const std::size_t window_cols = w * r;
  switch (mode) {
    case Mode::sea_scalar: {
      const CombResult comb = comb_strip(xw, y);
      const auto llcs = window_llcs_from_events(comb.events, window_cols, r);
      for (std::size_t k = 0; k < llcs.size(); ++k) out[k] = llcs_to_half(llcs[k], w, r);
      return;
    }
    case Mode::sea16:
    case Mode::sea8: {
      const unsigned bits = mode == Mode::sea8 ? 8 : 16;
      const auto events = to_bottom_events(comb_strip_lanes(xw, y, w, r, bits));
      const auto llcs = window_llcs_from_events(events, window_cols, r);
      for (std::size_t k = 0; k < llcs.size(); ++k) out[k] = llcs_to_half(llcs[k], w, r);
      return;
    }
    case Mode::dp: {
      for (std::size_t k = 0; k < out.size(); ++k) {
        const std::size_t llcs = dp_llcs(xw, y.subspan(k * r, window_cols));
        out[k] = llcs_to_half(llcs, w, r);
      }
      return;
    }
    case Mode::blcs: {
      const BlcsPattern pattern(xw);
      for (std::size_t k = 0; k < out.size(); ++k) {
        const std::size_t llcs = pattern.llcs(y.subspan(k * r, window_cols));
        out[k] = llcs_to_half(llcs, w, r);
      }
      return;
    }
  }
  throw ConfigError("unknown engine mode");
}

}  // namespace

PlotGrid compute_plot(const Sequence& x, const Sequence& y, const PlotConfig& cfg) {
  const std::size_t m = x.size();
  const std::size_t n = y.size();
  cfg.validate(m, n);
  const auto [rows, cols] = window_grid_dims(m, n, cfg.window_w, cfg.step_h);

  PlotGrid grid(rows, cols, cfg.window_w, cfg.step_h);
  const std::vector<StripTask> tasks = plan_strips(cfg, m);

  const unsigned r = cfg.blowup_r;
  BlownSequence blown_y;
  std::span<const std::uint8_t> y_eff = y.codes();
  if (r == 2) {
    blown_y = blowup(y);
    y_eff = blown_y.codes();
  }

  std::exception_ptr failure;
  std::mutex failure_mu;
  auto run_tasks = [&](unsigned worker_id, unsigned stride) {
    try {
      for (std::size_t t = worker_id; t < tasks.size(); t += stride) {
        const StripTask& task = tasks[t];
        const auto xw_raw = x.codes().subspan(task.x_offset, cfg.window_w);
        std::span<const std::uint8_t> xw = xw_raw;
        BlownSequence blown_xw;
        if (r == 2) {
          blown_xw = blowup(xw_raw);
          xw = blown_xw.codes();
        }
        std::span<half_score_t> out{grid.values.data() + task.row_index * cols, cols};
        compute_row(task.engine, xw, y_eff, cfg.window_w, r, out);
      }
    } catch (...) {
      const std::lock_guard<std::mutex> lock(failure_mu);
      if (!failure) failure = std::current_exception();
    }
  };

  const unsigned nthreads =
      static_cast<unsigned>(std::min<std::size_t>(cfg.workers, tasks.size()));
  if (nthreads <= 1) {
    run_tasks(0, 1);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (unsigned wid = 0; wid < nthreads; ++wid) {
      pool.emplace_back(run_tasks, wid, cfg.workers);
    }
    for (std::thread& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
  return grid;
}

}  // namespace alignplot
