#pragma once

#include <tuple>
#include <vector>

#include "alignplot/model.hpp"

namespace alignplot {

// Sentinel-interleaved copy of a raw sequence: every even index holds the
// sentinel code, every odd index a raw character. LLCS over blown strings
// carries the alignment score with match +1, mismatch 0, gap -0.5.
struct BlownSequence {
  std::vector<std::uint8_t> data;
  std::size_t raw_len = 0;

  std::span<const std::uint8_t> codes() const { return data; }
  std::size_t size() const { return data.size(); }
};

// "abab" -> "$a$b$a$b". Throws ConfigError if the input already contains the
// sentinel code.
BlownSequence blowup(std::span<const std::uint8_t> raw);
inline BlownSequence blowup(const Sequence& s) { return blowup(s.codes()); }

// Inverse of blowup: drops the even (sentinel) positions.
std::vector<std::uint8_t> unblow(const BlownSequence& b);

// Alignment score from the LLCS of blown strings, in half-units:
// score = llcs_blown - 0.5 * (m + n), so half = 2 * llcs_blown - (m + n).
half_score_t recover_score(std::size_t llcs_blown, std::size_t m, std::size_t n);

struct PlotCell {
  std::size_t row;
  std::size_t col;
  half_score_t score_half;

  bool operator==(const PlotCell&) const = default;
};

// Cells with score >= t, in row-major order.
std::vector<PlotCell> apply_threshold(const PlotGrid& grid, half_score_t t_half);

}  // namespace alignplot
