#include <doctest.h>

#include <random>
#include <set>
#include <utility>

#include "alignplot/seaweed_scalar.hpp"
#include "test_util.hpp"

using namespace alignplot;

namespace {

std::vector<std::uint8_t> codes_of(const char* s) {
  std::vector<std::uint8_t> out;
  for (const char* p = s; *p; ++p) out.push_back(static_cast<std::uint8_t>(*p));
  return out;
}

// Binary string of length `len` spelled by the bits of `bits`, codes {1, 2}.
std::vector<std::uint8_t> bits_to_codes(unsigned bits, std::size_t len) {
  std::vector<std::uint8_t> out(len);
  for (std::size_t k = 0; k < len; ++k) out[k] = (bits >> k & 1u) ? 2 : 1;
  return out;
}

}  // namespace

TEST_CASE("single cell: match sends the left seaweed down, mismatch crosses") {
  const auto a = codes_of("a");
  const auto b = codes_of("b");

  const CombResult match = comb_strip(a, a);
  REQUIRE(match.events.size() == 1);
  CHECK(match.events[0] == BottomEvent{0, -1});  // left seaweed exits the bottom
  REQUIRE(match.hsm.critical_points.size() == 2);
  CHECK(match.hsm.critical_points[1] == CriticalPoint{0, 1});  // top exits right

  const CombResult mismatch = comb_strip(a, b);
  REQUIRE(mismatch.events.size() == 1);
  CHECK(mismatch.events[0] == BottomEvent{0, 0});  // top seaweed falls through
  CHECK(mismatch.hsm.critical_points[1] == CriticalPoint{-1, 1});
}

TEST_CASE("every seaweed exits exactly once") {
  std::mt19937 rng(7);
  for (int it = 0; it < 60; ++it) {
    const std::size_t w = 1 + it % 6;
    const std::size_t n = 1 + (it * 7) % 12;
    const unsigned sigma = it % 2 ? 2 : 4;
    const auto xw = testutil::random_codes(rng, w, sigma);
    const auto y = testutil::random_codes(rng, n, sigma);
    const CombResult res = comb_strip(xw, y);

    REQUIRE(res.events.size() == n);
    REQUIRE(res.hsm.critical_points.size() == w + n);
    std::set<std::int32_t> starts;
    for (std::size_t j = 0; j < n; ++j) {
      CHECK(res.events[j].end_col == static_cast<std::int32_t>(j));
      starts.insert(res.events[j].start_col);
    }
    CHECK(starts.size() == n);  // pairwise distinct
    for (std::size_t i = 0; i < w; ++i) {
      const CriticalPoint& p = res.hsm.critical_points[n + i];
      CHECK(p.end == static_cast<std::int32_t>(n + i));
      starts.insert(p.start);
    }
    // bottom and right exits together account for every entering seaweed
    CHECK(starts.size() == w + n);
    CHECK(*starts.begin() == -static_cast<std::int32_t>(w));
    CHECK(*starts.rbegin() == static_cast<std::int32_t>(n) - 1);
  }
}

TEST_CASE("pairs cross at most once, and only uncrossed pairs cross") {
  // Replica of the comb loop with per-pair bookkeeping: the order test
  // runner > top must coincide with "this pair has crossed before".
  std::mt19937 rng(99);
  for (int it = 0; it < 50; ++it) {
    const std::size_t w = 1 + it % 6;
    const std::size_t n = 1 + (it * 5) % 12;
    const auto xw = testutil::random_codes(rng, w, it % 2 ? 2 : 4);
    const auto y = testutil::random_codes(rng, n, it % 2 ? 2 : 4);

    std::vector<std::int32_t> front(n);
    for (std::size_t j = 0; j < n; ++j) front[j] = static_cast<std::int32_t>(j);
    std::set<std::pair<std::int32_t, std::int32_t>> crossed;
    for (std::size_t i = 0; i < w; ++i) {
      std::int32_t runner = -static_cast<std::int32_t>(i) - 1;
      for (std::size_t j = 0; j < n; ++j) {
        const std::int32_t top = front[j];
        const auto key = std::minmax(runner, top);
        if (xw[i] == y[j]) {
          std::swap(front[j], runner);
        } else if (runner > top) {
          CHECK(crossed.count(key) == 1);  // sticking away from a match needs a prior cross
          std::swap(front[j], runner);
        } else {
          CHECK(crossed.count(key) == 0);  // no pair crosses twice
          crossed.insert(key);
        }
      }
    }

    // the replica is the production rule: same bottom events
    const CombResult res = comb_strip(xw, y);
    for (std::size_t j = 0; j < n; ++j) CHECK(res.events[j].start_col == front[j]);
  }
}

TEST_CASE("llcs_query equals DP LLCS exhaustively on small binary strips") {
  for (std::size_t w = 1; w <= 4; ++w) {
    for (unsigned xb = 0; xb < (1u << w); ++xb) {
      const auto xw = bits_to_codes(xb, w);
      for (std::size_t n = 1; n <= 6; ++n) {
        for (unsigned yb = 0; yb < (1u << n); ++yb) {
          const auto y = bits_to_codes(yb, n);
          const CombResult res = comb_strip(xw, y);
          for (std::size_t i = 0; i <= n; ++i) {
            for (std::size_t j = i; j <= n; ++j) {
              const auto sub = std::span<const std::uint8_t>(y).subspan(i, j - i);
              REQUIRE(llcs_query(res.hsm, i, j) == testutil::ref_llcs(xw, sub));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("llcs_query validates the column range") {
  const auto a = codes_of("ab");
  const CombResult res = comb_strip(a, a);
  CHECK_THROWS_AS(llcs_query(res.hsm, 2, 1), std::out_of_range);
  CHECK_THROWS_AS(llcs_query(res.hsm, 0, 3), std::out_of_range);
  CHECK(llcs_query(res.hsm, 0, 0) == 0);
  CHECK(llcs_query(res.hsm, 2, 2) == 0);
}

TEST_CASE("window scan over the event stream") {
  const auto xw = codes_of("aaa");
  const auto y = codes_of("aaabbb");
  const CombResult res = comb_strip(xw, y);
  CHECK(window_llcs_from_events(res.events, 3) == std::vector<std::size_t>{3, 2, 1, 0});
  CHECK(wlcs_row(res.events, 3, 6) == std::vector<std::size_t>{3, 2, 1, 0});
}

TEST_CASE("window scan equals per-window DP at any stride") {
  std::mt19937 rng(2025);
  for (int it = 0; it < 40; ++it) {
    const std::size_t w = 2 + it % 5;
    const std::size_t n = w + (it * 3) % 20;
    const auto xw = testutil::random_codes(rng, w, 4);
    const auto y = testutil::random_codes(rng, n, 4);
    const CombResult res = comb_strip(xw, y);
    for (std::size_t stride : {std::size_t{1}, std::size_t{2}}) {
      const auto got = window_llcs_from_events(res.events, w, stride);
      REQUIRE(got.size() == (n - w) / stride + 1);
      for (std::size_t k = 0; k < got.size(); ++k) {
        const auto win = std::span<const std::uint8_t>(y).subspan(k * stride, w);
        REQUIRE(got[k] == testutil::ref_llcs(xw, win));
      }
    }
  }
}

TEST_CASE("window scan rejects malformed streams") {
  const auto a = codes_of("ab");
  const CombResult res = comb_strip(a, a);
  CHECK_THROWS_AS(window_llcs_from_events(res.events, 0), std::invalid_argument);
  CHECK_THROWS_AS(window_llcs_from_events(res.events, 3), std::invalid_argument);
  CHECK_THROWS_AS(window_llcs_from_events(res.events, 2, 0), std::invalid_argument);

  std::vector<BottomEvent> bad = res.events;
  bad[1].end_col = 5;
  CHECK_THROWS_AS(window_llcs_from_events(bad, 2), std::invalid_argument);
  CHECK_THROWS_AS(wlcs_row(res.events, 2, 4), std::invalid_argument);
}
