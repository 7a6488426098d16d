#include "alignplot/scoring.hpp"

namespace alignplot {

BlownSequence blowup(std::span<const std::uint8_t> raw) {
  BlownSequence out;
  out.raw_len = raw.size();
  out.data.reserve(2 * raw.size());
  for (std::uint8_t c : raw) {
    if (c == kSentinelCode) {
      throw ConfigError("cannot blow up a sequence that contains the sentinel code");
    }
    out.data.push_back(kSentinelCode);
    out.data.push_back(c);
  }
  return out;
}

std::vector<std::uint8_t> unblow(const BlownSequence& b) {
  std::vector<std::uint8_t> raw;
  raw.reserve(b.raw_len);
  for (std::size_t i = 1; i < b.data.size(); i += 2) raw.push_back(b.data[i]);
  return raw;
}

half_score_t recover_score(std::size_t llcs_blown, std::size_t m, std::size_t n) {
  return static_cast<half_score_t>(2 * llcs_blown) - static_cast<half_score_t>(m + n);
}

std::vector<PlotCell> apply_threshold(const PlotGrid& grid, half_score_t t_half) {
  std::vector<PlotCell> out;
  for (std::size_t r = 0; r < grid.rows; ++r) {
    for (std::size_t c = 0; c < grid.cols; ++c) {
      half_score_t v = grid.at(r, c);
      if (v >= t_half) out.push_back({r, c, v});
    }
  }
  return out;
}

}  // namespace alignplot
