#include <doctest.h>

#include <random>

#include "alignplot/baselines.hpp"
#include "alignplot/runner.hpp"
#include "alignplot/seaweed_scalar.hpp"
#include "test_util.hpp"

using namespace alignplot;

TEST_CASE("strip planning samples x-window starts at the step") {
  PlotConfig cfg;
  cfg.window_w = 100;
  cfg.step_h = 5;

  const auto one = plan_strips(cfg, 100);
  REQUIRE(one.size() == 1);
  CHECK(one[0].row_index == 0);
  CHECK(one[0].x_offset == 0);

  const auto many = plan_strips(cfg, 2712);
  REQUIRE(many.size() == 523);
  CHECK(many[1].x_offset == 5);
  CHECK(many[522].x_offset == 2610);

  CHECK_THROWS_AS(plan_strips(cfg, 99), EmptyPlotError);
}

TEST_CASE("every engine produces the ground-truth plot") {
  std::mt19937 rng(555);
  for (int it = 0; it < 12; ++it) {
    const std::size_t w = 3 + (it * 7) % 20;
    std::uniform_int_distribution<std::size_t> len(w, 90);
    const Sequence x = testutil::make_seq("x", testutil::random_codes(rng, len(rng), 4));
    const Sequence y = testutil::make_seq("y", testutil::random_codes(rng, len(rng), 4));

    PlotConfig cfg;
    cfg.window_w = w;
    cfg.step_h = 1 + it % 3;
    cfg.blowup_r = it % 2 ? 1 : 2;

    const PlotGrid truth = dp_plot(x, y, cfg);
    for (Mode m : {Mode::blcs, Mode::sea_scalar, Mode::sea16, Mode::sea8}) {
      PlotConfig c = cfg;
      c.mode = m;
      REQUIRE(compute_plot(x, y, c) == truth);
    }
  }
}

TEST_CASE("plain-LCS mode scores are twice the window LLCS") {
  std::mt19937 rng(556);
  const Sequence x = testutil::make_seq("x", testutil::random_codes(rng, 40, 3));
  const Sequence y = testutil::make_seq("y", testutil::random_codes(rng, 60, 3));
  PlotConfig cfg;
  cfg.window_w = 8;
  cfg.step_h = 2;
  cfg.blowup_r = 1;
  cfg.mode = Mode::sea_scalar;
  const PlotGrid grid = compute_plot(x, y, cfg);
  for (std::size_t r = 0; r < grid.rows; ++r) {
    for (std::size_t c = 0; c < grid.cols; ++c) {
      const auto xw = x.codes().subspan(grid.x_offset(r), 8);
      const auto yw = y.codes().subspan(grid.y_offset(c), 8);
      REQUIRE(grid.at(r, c) ==
              static_cast<half_score_t>(2 * testutil::ref_llcs(xw, yw)));
    }
  }
}

TEST_CASE("alignment-score mode matches the direct score DP") {
  std::mt19937 rng(557);
  const Sequence x = testutil::make_seq("x", testutil::random_codes(rng, 30, 4));
  const Sequence y = testutil::make_seq("y", testutil::random_codes(rng, 45, 4));
  PlotConfig cfg;
  cfg.window_w = 10;
  cfg.step_h = 3;
  cfg.blowup_r = 2;
  cfg.mode = Mode::sea8;
  const PlotGrid grid = compute_plot(x, y, cfg);
  for (std::size_t r = 0; r < grid.rows; ++r) {
    for (std::size_t c = 0; c < grid.cols; ++c) {
      const auto xw = x.codes().subspan(grid.x_offset(r), 10);
      const auto yw = y.codes().subspan(grid.y_offset(c), 10);
      REQUIRE(grid.at(r, c) == testutil::ref_align_score_half(xw, yw));
    }
  }
}

TEST_CASE("worker count never changes the plot") {
  std::mt19937 rng(558);
  const Sequence x = testutil::make_seq("x", testutil::random_codes(rng, 240, 4));
  const Sequence y = testutil::make_seq("y", testutil::random_codes(rng, 200, 4));
  PlotConfig cfg;
  cfg.window_w = 32;
  cfg.step_h = 3;
  cfg.mode = Mode::sea8;
  cfg.workers = 1;
  const PlotGrid reference = compute_plot(x, y, cfg);
  for (unsigned workers : {2u, 3u, 4u, 8u, 64u}) {
    cfg.workers = workers;
    REQUIRE(compute_plot(x, y, cfg) == reference);
  }
}

TEST_CASE("delegating entry points force their engine") {
  std::mt19937 rng(559);
  const Sequence x = testutil::make_seq("x", testutil::random_codes(rng, 50, 2));
  const Sequence y = testutil::make_seq("y", testutil::random_codes(rng, 50, 2));
  PlotConfig cfg;
  cfg.window_w = 12;
  cfg.step_h = 2;
  cfg.mode = Mode::sea8;  // overridden by both helpers
  CHECK(plot_scalar(x, y, cfg) == dp_plot(x, y, cfg));
}

TEST_CASE("compute_plot validates before running") {
  const Sequence x = testutil::make_seq("x", {1, 2, 1});
  const Sequence y = testutil::make_seq("y", {2, 1, 2});
  PlotConfig cfg;
  cfg.window_w = 10;
  CHECK_THROWS_AS(compute_plot(x, y, cfg), EmptyPlotError);
  cfg.window_w = 2;
  cfg.blowup_r = 7;
  CHECK_THROWS_AS(compute_plot(x, y, cfg), ConfigError);
}

TEST_CASE("grid geometry carries window, step, and origins") {
  const Sequence x = testutil::make_seq("x", std::vector<std::uint8_t>(25, 1));
  const Sequence y = testutil::make_seq("y", std::vector<std::uint8_t>(11, 1));
  PlotConfig cfg;
  cfg.window_w = 10;
  cfg.step_h = 5;
  cfg.mode = Mode::dp;
  const PlotGrid g = compute_plot(x, y, cfg);
  CHECK(g.rows == 4);
  CHECK(g.cols == 2);
  CHECK(g.window_w == 10);
  CHECK(g.step_h == 5);
  CHECK(g.x_offset(3) == 15);
  CHECK(g.y_offset(1) == 1);
  // identical strings: the diagonal windows score the maximum
  CHECK(g.at(0, 0) == 2 * 10);
}
