#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "alignplot/model.hpp"

namespace alignplot {

// One FASTA record: header text after '>', sequence upper-cased with all
// whitespace stripped.
struct FastaRecord {
  std::string header;
  std::string sequence;

  bool operator==(const FastaRecord&) const = default;
};

// Parses all records from a FASTA stream. `source` names the input in error
// messages. Throws ParseError (with a 1-based line number) on data before the
// first header, an empty record, unprintable sequence bytes, or no records.
std::vector<FastaRecord> read_fasta_stream(std::istream& in, const std::string& source);

// read_fasta_stream over the file at `path`.
std::vector<FastaRecord> read_fasta(const std::string& path);

// The record whose header (or its first whitespace-delimited token) equals
// `name`; the first record when `name` is empty. Throws ParseError when absent.
const FastaRecord& select_record(const std::vector<FastaRecord>& records,
                                 const std::string& name, const std::string& source);

Sequence to_sequence(const FastaRecord& rec);

// "3" -> "1.5": half-units rendered as a decimal with one fractional digit.
std::string half_to_decimal(half_score_t half);

// Header "# x_offset y_offset score", then one "x<TAB>y<TAB>score" line per
// cell, offsets in raw sequence coordinates. With a threshold only cells
// scoring at or above it appear; `dense` overrides the filter and writes all.
void write_tsv(std::ostream& out, const PlotGrid& grid,
               std::optional<half_score_t> threshold_half, bool dense);

// "x y" per cell passing the threshold filter (all cells when unset).
void write_dots(std::ostream& out, const PlotGrid& grid,
                std::optional<half_score_t> threshold_half);

// Binary 8-bit PGM "P5\n<cols> <rows>\n255\n" + rows*cols bytes, row 0 first.
// pixel = round(255 * clamp(score, 0, w) / w); cells below the threshold
// render as intensity 0 (images keep the full raster).
void write_pgm(std::ostream& out, const PlotGrid& grid,
               std::optional<half_score_t> threshold_half);

struct BenchEntry {
  Mode mode = Mode::dp;
  double seconds = 0.0;
  double cell_updates_per_sec = 0.0;
  double speedup_vs_first = 1.0;
};

struct BenchReport {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t window_w = 0;
  std::size_t step_h = 0;
  unsigned blowup_r = 1;
  unsigned workers = 1;
  std::vector<BenchEntry> entries;

  std::string to_text() const;
  std::string to_json() const;
};

// Times each mode over the same inputs and configuration. All modes must
// produce identical grids; a mismatch throws (correctness precedes speed).
// Cell-updates/s normalizes every mode to the naive per-window DP cost of
// (w*r)^2 cells, so the column is comparable across modes.
BenchReport benchmark(const Sequence& x, const Sequence& y, const PlotConfig& cfg,
                      std::span<const Mode> modes);

}  // namespace alignplot
