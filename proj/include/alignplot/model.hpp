#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace alignplot {

// Half-unit score representation: score * 2, so the -0.5 gap step stays exact
// in integer arithmetic. Conversion to decimal happens only at output.
using half_score_t = std::int32_t;

class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// No window of the requested size fits the inputs.
class EmptyPlotError : public ConfigError {
 public:
  explicit EmptyPlotError(const std::string& what) : ConfigError(what) {}
};

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Code 0 is reserved for the blowup sentinel and never appears in raw input.
inline constexpr std::uint8_t kSentinelCode = 0;

// A validated character string over a small alphabet. Codes are bytes; any
// non-sentinel byte is a legal symbol that matches only itself.
struct Sequence {
  std::string name;
  std::vector<std::uint8_t> data;
  unsigned alphabet_size = 256;

  Sequence() = default;
  Sequence(std::string name_, std::vector<std::uint8_t> data_,
           unsigned alphabet_size_ = 256);

  // Bytes of `text` become codes verbatim (no case folding).
  static Sequence from_text(std::string name, std::string_view text);

  std::size_t size() const { return data.size(); }
  std::span<const std::uint8_t> codes() const { return data; }
};

// Match +1, mismatch 0, gap -0.5 in r=2 mode; plain LCS (1, 0, 0) in r=1.
// Stored in half-units.
struct ScoringScheme {
  half_score_t match_half = 2;
  half_score_t mismatch_half = 0;
  half_score_t gap_half = -1;

  static ScoringScheme alignment() { return {2, 0, -1}; }
  static ScoringScheme lcs_only() { return {2, 0, 0}; }
};

enum class Mode { dp, blcs, sea_scalar, sea16, sea8 };

const char* mode_name(Mode m);
std::optional<Mode> mode_from_name(std::string_view name);

struct PlotConfig {
  std::size_t window_w = 100;
  std::size_t step_h = 5;
  unsigned blowup_r = 2;  // 1 = plain LCS, 2 = alignment score
  std::optional<half_score_t> threshold_half;
  Mode mode = Mode::sea8;
  unsigned workers = 1;

  ScoringScheme scoring() const {
    return blowup_r == 1 ? ScoringScheme::lcs_only() : ScoringScheme::alignment();
  }

  // Throws ConfigError / EmptyPlotError if the configuration is unusable for
  // inputs of lengths m and n. sea8 requires w + 1 <= 255 so that restricted
  // spans plus INF fit an 8-bit lane.
  void validate(std::size_t m, std::size_t n) const;
};

// rows = floor((m - w) / h) + 1 sampled x-windows, cols = n - w + 1 y-windows.
// Throws EmptyPlotError when no window fits.
std::pair<std::size_t, std::size_t> window_grid_dims(std::size_t m, std::size_t n,
                                                     std::size_t w, std::size_t h);

// Dense matrix of window-pair scores in half-units. Row i holds the x-window
// starting at row_origin + i * step_h; column j the y-window at col_origin + j.
struct PlotGrid {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t window_w = 0;
  std::size_t step_h = 1;
  std::size_t row_origin = 0;
  std::size_t col_origin = 0;
  std::vector<half_score_t> values;

  PlotGrid() = default;
  PlotGrid(std::size_t rows_, std::size_t cols_, std::size_t w, std::size_t h);

  half_score_t& at(std::size_t r, std::size_t c) { return values[r * cols + c]; }
  half_score_t at(std::size_t r, std::size_t c) const { return values[r * cols + c]; }

  std::size_t x_offset(std::size_t r) const { return row_origin + r * step_h; }
  std::size_t y_offset(std::size_t c) const { return col_origin + c; }

  bool operator==(const PlotGrid& other) const = default;
};

}  // namespace alignplot
