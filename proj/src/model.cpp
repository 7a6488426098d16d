#include "alignplot/model.hpp"

#include <sstream>

namespace alignplot {

Sequence::Sequence(std::string name_, std::vector<std::uint8_t> data_,
                   unsigned alphabet_size_)
    : name(std::move(name_)), data(std::move(data_)), alphabet_size(alphabet_size_) {
  for (std::uint8_t c : data) {
    if (c == kSentinelCode) {
      throw ConfigError("sequence '" + name + "' contains the reserved sentinel code 0");
    }
    if (c >= alphabet_size) {
      throw ConfigError("sequence '" + name + "' contains code " + std::to_string(c) +
                        " outside alphabet of size " + std::to_string(alphabet_size));
    }
  }
}

Sequence Sequence::from_text(std::string name, std::string_view text) {
  std::vector<std::uint8_t> codes(text.begin(), text.end());
  return Sequence(std::move(name), std::move(codes));
}

const char* mode_name(Mode m) {
  switch (m) {
    case Mode::dp: return "dp";
    case Mode::blcs: return "blcs";
    case Mode::sea_scalar: return "sea_scalar";
    case Mode::sea16: return "sea16";
    case Mode::sea8: return "sea8";
  }
  return "?";
}

std::optional<Mode> mode_from_name(std::string_view name) {
  if (name == "dp") return Mode::dp;
  if (name == "blcs") return Mode::blcs;
  if (name == "sea_scalar") return Mode::sea_scalar;
  if (name == "sea16") return Mode::sea16;
  if (name == "sea8") return Mode::sea8;
  return std::nullopt;
}

void PlotConfig::validate(std::size_t m, std::size_t n) const {
  if (window_w == 0) throw ConfigError("window size must be positive");
  if (step_h == 0) throw ConfigError("step size must be positive");
  if (workers == 0) throw ConfigError("worker count must be positive");
  if (blowup_r != 1 && blowup_r != 2) {
    throw ConfigError("blowup factor must be 1 (LCS) or 2 (alignment score)");
  }
  if (mode == Mode::sea8 && window_w + 1 > 255) {
    throw ConfigError("sea8 mode supports windows up to 254 (got " +
                      std::to_string(window_w) + "): spans plus INF must fit 8-bit lanes");
  }
  if (mode == Mode::sea16 && window_w * blowup_r + 1 > 65535) {
    throw ConfigError("sea16 mode supports blown windows up to 65534");
  }
  window_grid_dims(m, n, window_w, step_h);  // throws EmptyPlotError if w > min(m, n)
}

std::pair<std::size_t, std::size_t> window_grid_dims(std::size_t m, std::size_t n,
                                                     std::size_t w, std::size_t h) {
  if (w == 0 || h == 0) throw ConfigError("window and step must be positive");
  if (w > m || w > n) {
    std::ostringstream os;
    os << "no window of size " << w << " fits inputs of lengths " << m << " and " << n;
    throw EmptyPlotError(os.str());
  }
  return {(m - w) / h + 1, n - w + 1};
}

PlotGrid::PlotGrid(std::size_t rows_, std::size_t cols_, std::size_t w, std::size_t h)
    : rows(rows_), cols(cols_), window_w(w), step_h(h), values(rows_ * cols_, 0) {}

}  // namespace alignplot
