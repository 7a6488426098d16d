#include "alignplot/io.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "alignplot/runner.hpp"

namespace alignplot {

namespace {

bool is_blank(const std::string& line) {
  return std::all_of(line.begin(), line.end(),
                     [](unsigned char c) { return std::isspace(c); });
}

[[noreturn]] void fasta_fail(const std::string& source, std::size_t line_no,
                             const std::string& what) {
  throw ParseError(source + ":" + std::to_string(line_no) + ": " + what);
}

}  // namespace

std::vector<FastaRecord> read_fasta_stream(std::istream& in, const std::string& source) {
  std::vector<FastaRecord> records;
  std::size_t line_no = 0;
  std::size_t header_line = 0;
  bool in_record = false;

  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || is_blank(line)) continue;

    if (line.front() == '>') {
      if (in_record && records.back().sequence.empty()) {
        fasta_fail(source, header_line,
                   "record '" + records.back().header + "' has no sequence data");
      }
      std::string header = line.substr(1);
      while (!header.empty() && std::isspace(static_cast<unsigned char>(header.back()))) {
        header.pop_back();
      }
      records.push_back({std::move(header), {}});
      header_line = line_no;
      in_record = true;
      continue;
    }

    if (!in_record) fasta_fail(source, line_no, "sequence data before first header");
    for (char ch : line) {
      const auto c = static_cast<unsigned char>(ch);
      if (std::isspace(c)) continue;
      if (!std::isprint(c) || c == '>') {
        fasta_fail(source, line_no, "unexpected byte in sequence data");
      }
      records.back().sequence.push_back(static_cast<char>(std::toupper(c)));
    }
  }

  if (records.empty()) throw ParseError(source + ": no FASTA records");
  if (records.back().sequence.empty()) {
    fasta_fail(source, header_line,
               "record '" + records.back().header + "' has no sequence data");
  }
  return records;
}

std::vector<FastaRecord> read_fasta(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path + ": cannot open file");
  return read_fasta_stream(in, path);
}

const FastaRecord& select_record(const std::vector<FastaRecord>& records,
                                 const std::string& name, const std::string& source) {
  if (name.empty()) return records.front();
  for (const FastaRecord& rec : records) {
    if (rec.header == name) return rec;
    const auto cut = rec.header.find_first_of(" \t");
    if (cut != std::string::npos && rec.header.compare(0, cut, name) == 0 &&
        cut == name.size()) {
      return rec;
    }
  }
  throw ParseError(source + ": no record named '" + name + "'");
}

Sequence to_sequence(const FastaRecord& rec) {
  return Sequence::from_text(rec.header, rec.sequence);
}

std::string half_to_decimal(half_score_t half) {
  const bool neg = half < 0;
  const long long a = neg ? -static_cast<long long>(half) : half;
  std::string out = neg ? "-" : "";
  out += std::to_string(a / 2);
  out += (a % 2) ? ".5" : ".0";
  return out;
}

void write_tsv(std::ostream& out, const PlotGrid& grid,
               std::optional<half_score_t> threshold_half, bool dense) {
  out << "# x_offset y_offset score\n";
  for (std::size_t r = 0; r < grid.rows; ++r) {
    for (std::size_t c = 0; c < grid.cols; ++c) {
      const half_score_t v = grid.at(r, c);
      if (!dense && threshold_half && v < *threshold_half) continue;
      out << grid.x_offset(r) << '\t' << grid.y_offset(c) << '\t' << half_to_decimal(v)
          << '\n';
    }
  }
  if (!out) throw std::runtime_error("write failure on TSV sink");
}

void write_dots(std::ostream& out, const PlotGrid& grid,
                std::optional<half_score_t> threshold_half) {
  for (std::size_t r = 0; r < grid.rows; ++r) {
    for (std::size_t c = 0; c < grid.cols; ++c) {
      if (threshold_half && grid.at(r, c) < *threshold_half) continue;
      out << grid.x_offset(r) << ' ' << grid.y_offset(c) << '\n';
    }
  }
  if (!out) throw std::runtime_error("write failure on dot sink");
}

void write_pgm(std::ostream& out, const PlotGrid& grid,
               std::optional<half_score_t> threshold_half) {
  out << "P5\n" << grid.cols << ' ' << grid.rows << "\n255\n";
  const long long full = 2 * static_cast<long long>(grid.window_w);  // score w, in halves
  std::vector<unsigned char> row(grid.cols);
  for (std::size_t r = 0; r < grid.rows; ++r) {
    for (std::size_t c = 0; c < grid.cols; ++c) {
      half_score_t v = grid.at(r, c);
      if (threshold_half && v < *threshold_half) v = 0;
      const long long h = std::clamp<long long>(v, 0, full);
      // round(255 * h / full) with round-half-up, exact in integers
      row[c] = static_cast<unsigned char>((255 * h + full / 2) / full);
    }
    out.write(reinterpret_cast<const char*>(row.data()),
              static_cast<std::streamsize>(row.size()));
  }
  if (!out) throw std::runtime_error("write failure on PGM sink");
}

std::string BenchReport::to_text() const {
  std::ostringstream os;
  os << "plot " << rows << " x " << cols << " windows, w=" << window_w
     << ", h=" << step_h << ", r=" << blowup_r << ", workers=" << workers << "\n";
  char line[128];
  std::snprintf(line, sizeof line, "%-12s %10s %12s %9s\n", "mode", "seconds", "Mcups",
                "speedup");
  os << line;
  bool has_dp = false;
  for (const BenchEntry& e : entries) {
    has_dp = has_dp || e.mode == Mode::dp;
    std::snprintf(line, sizeof line, "%-12s %10.3f %12.1f %8.2fx\n", mode_name(e.mode),
                  e.seconds, e.cell_updates_per_sec / 1e6, e.speedup_vs_first);
    os << line;
  }
  if (has_dp) os << "dp = exhaustive per-window DP baseline, no shortcuts\n";
  return os.str();
}

std::string BenchReport::to_json() const {
  nlohmann::json j;
  j["rows"] = rows;
  j["cols"] = cols;
  j["window"] = window_w;
  j["step"] = step_h;
  j["blowup"] = blowup_r;
  j["workers"] = workers;
  j["results"] = nlohmann::json::array();
  for (const BenchEntry& e : entries) {
    j["results"].push_back({{"mode", mode_name(e.mode)},
                            {"seconds", e.seconds},
                            {"cell_updates_per_sec", e.cell_updates_per_sec},
                            {"speedup_vs_first", e.speedup_vs_first}});
  }
  return j.dump(2);
}

BenchReport benchmark(const Sequence& x, const Sequence& y, const PlotConfig& cfg,
                      std::span<const Mode> modes) {
  if (modes.empty()) throw ConfigError("benchmark needs at least one mode");

  BenchReport report;
  report.window_w = cfg.window_w;
  report.step_h = cfg.step_h;
  report.blowup_r = cfg.blowup_r;
  report.workers = cfg.workers;

  std::optional<PlotGrid> reference;
  for (Mode mode : modes) {
    PlotConfig local = cfg;
    local.mode = mode;
    const auto t0 = std::chrono::steady_clock::now();
    PlotGrid grid = compute_plot(x, y, local);
    const auto t1 = std::chrono::steady_clock::now();
    const double secs =
        std::max(std::chrono::duration<double>(t1 - t0).count(), 1e-9);

    if (!reference) {
      reference = std::move(grid);
      report.rows = reference->rows;
      report.cols = reference->cols;
    } else if (grid != *reference) {
      throw std::runtime_error(std::string("benchmark: mode ") + mode_name(mode) +
                               " disagrees with " + mode_name(modes.front()));
    }

    const double wr = static_cast<double>(cfg.window_w * cfg.blowup_r);
    const double cells =
        static_cast<double>(report.rows) * static_cast<double>(report.cols) * wr * wr;
    BenchEntry entry;
    entry.mode = mode;
    entry.seconds = secs;
    entry.cell_updates_per_sec = cells / secs;
    entry.speedup_vs_first =
        report.entries.empty() ? 1.0 : report.entries.front().seconds / secs;
    report.entries.push_back(entry);
  }
  return report;
}

}  // namespace alignplot
