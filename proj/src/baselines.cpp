#include "alignplot/baselines.hpp"

#include <bit>

#include "alignplot/runner.hpp"

namespace alignplot {

namespace {

template <typename Cell>
std::size_t dp_llcs_rows(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) {
  const std::size_t nb = b.size();
  std::vector<Cell> row(nb + 1, 0);
  Cell* const r = row.data();
  const std::uint8_t* const bc = b.data();
  for (const std::uint8_t ac : a) {
    Cell diag = 0;
    Cell left = 0;
    for (std::size_t j = 0; j < nb; ++j) {
      const Cell up = r[j + 1];
      const Cell val = ac == bc[j] ? static_cast<Cell>(diag + 1) : (left > up ? left : up);
      r[j + 1] = val;
      diag = up;
      left = val;
    }
  }
  return row[nb];
}

}  // namespace

std::size_t dp_llcs(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) {
  if (a.empty() || b.empty()) return 0;
  if (b.size() > a.size()) std::swap(a, b);  // roll the shorter row
  const std::size_t cap = b.size();
  if (cap < 255) return dp_llcs_rows<std::uint8_t>(a, b);
  if (cap < 65535) return dp_llcs_rows<std::uint16_t>(a, b);
  return dp_llcs_rows<std::uint32_t>(a, b);
}

BlcsPattern::BlcsPattern(std::span<const std::uint8_t> pattern)
    : m_(pattern.size()), words_((pattern.size() + 63) / 64) {
  const unsigned rem = m_ % 64;
  top_mask_ = rem == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << rem) - 1;
  masks_.assign(256 * words_, 0);
  for (std::size_t i = 0; i < m_; ++i) {
    masks_[pattern[i] * words_ + i / 64] |= std::uint64_t{1} << (i % 64);
  }
}

std::size_t BlcsPattern::llcs(std::span<const std::uint8_t> subject) const {
  if (m_ == 0 || subject.empty()) return 0;

  // State S starts as m ones; each subject character folds one DP column in:
  // S <- (S + (S & M[c])) | (S & ~M[c]), windowed to m bits. Every carry that
  // escapes the window drops one set bit, so LLCS = m - popcount(S).
  std::vector<std::uint64_t> s(words_, ~std::uint64_t{0});
  s[words_ - 1] = top_mask_;
  for (const std::uint8_t c : subject) {
    const std::uint64_t* mask = &masks_[c * words_];
    std::uint64_t carry = 0;
    for (std::size_t k = 0; k < words_; ++k) {
      const std::uint64_t old = s[k];
      const std::uint64_t u = old & mask[k];
      const unsigned __int128 sum =
          static_cast<unsigned __int128>(old) + u + carry;
      carry = static_cast<std::uint64_t>(sum >> 64);
      s[k] = static_cast<std::uint64_t>(sum) | (old & ~mask[k]);
    }
    s[words_ - 1] &= top_mask_;
  }

  std::size_t ones = 0;
  for (std::uint64_t word : s) ones += std::popcount(word);
  return m_ - ones;
}

std::size_t blcs_llcs(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) {
  return BlcsPattern(a).llcs(b);
}

PlotGrid dp_plot(const Sequence& x, const Sequence& y, const PlotConfig& cfg) {
  PlotConfig local = cfg;
  local.mode = Mode::dp;
  local.workers = 1;
  return compute_plot(x, y, local);
}

}  // namespace alignplot
