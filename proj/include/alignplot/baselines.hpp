#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "alignplot/model.hpp"

namespace alignplot {

// LLCS via the classic dynamic programming table, O(|a||b|) time, one rolling
// row of space.
std::size_t dp_llcs(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b);
inline std::size_t dp_llcs(const Sequence& a, const Sequence& b) {
  return dp_llcs(a.codes(), b.codes());
}

// Bit-parallel LCS state for a fixed pattern: one precomputed 64-bit match
// mask column per symbol, reused across many subject strings.
class BlcsPattern {
 public:
  explicit BlcsPattern(std::span<const std::uint8_t> pattern);

  std::size_t llcs(std::span<const std::uint8_t> subject) const;
  std::size_t length() const { return m_; }

 private:
  std::size_t m_ = 0;
  std::size_t words_ = 0;
  std::uint64_t top_mask_ = 0;
  std::vector<std::uint64_t> masks_;  // [symbol * words_ + word]
};

// Equals dp_llcs on every input; one DP column per word-operation batch.
std::size_t blcs_llcs(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b);
inline std::size_t blcs_llcs(const Sequence& a, const Sequence& b) {
  return blcs_llcs(a.codes(), b.codes());
}

// Ground-truth plot: per window pair, dp_llcs on (blown) windows, then score
// recovery. Every engine mode is asserted equal to this.
PlotGrid dp_plot(const Sequence& x, const Sequence& y, const PlotConfig& cfg);

}  // namespace alignplot
