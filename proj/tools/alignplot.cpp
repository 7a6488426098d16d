// Command-line front end: FASTA in, alignment plot out (TSV, PGM, or dot
// list), plus a benchmark mode that races engines on the same inputs.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "alignplot/io.hpp"
#include "alignplot/model.hpp"
#include "alignplot/runner.hpp"

namespace {

unsigned default_workers() {
  const unsigned hc = std::thread::hardware_concurrency();
  return hc ? hc : 1;
}

std::vector<alignplot::Mode> parse_modes(const std::string& csv) {
  std::vector<alignplot::Mode> modes;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto m = alignplot::mode_from_name(item);
    if (!m) throw alignplot::ConfigError("unknown mode '" + item + "'");
    modes.push_back(*m);
  }
  if (modes.empty()) throw alignplot::ConfigError("no benchmark modes given");
  return modes;
}

alignplot::Sequence load_input(const std::string& path, const std::string& record) {
  const auto records = alignplot::read_fasta(path);
  return alignplot::to_sequence(alignplot::select_record(records, record, path));
}

int run(int argc, char** argv) {
  CLI::App app{"Alignment plots: window-vs-window LCS/alignment scores of two sequences"};

  std::string x_path, y_path;
  std::size_t window = 100;
  std::size_t step = 5;
  std::string mode_str = "sea8";
  std::optional<double> threshold;
  unsigned workers = default_workers();
  std::string output = "-";
  std::string format = "tsv";
  bool lcs_only = false;
  std::vector<std::string> record_names;
  bool bench = false;
  std::string modes_csv = "dp,sea8";
  bool dense = false;

  app.add_option("--x", x_path, "FASTA file for the vertical sequence")->required();
  app.add_option("--y", y_path, "FASTA file for the horizontal sequence")->required();
  app.add_option("--window", window, "window length w (same for both sequences)")
      ->capture_default_str();
  app.add_option("--step", step, "step h between x-window start positions")
      ->capture_default_str();
  app.add_option("--mode", mode_str, "engine: dp, blcs, sea_scalar, sea16, sea8")
      ->capture_default_str();
  app.add_option("--threshold", threshold,
                 "keep cells with score >= this (multiples of 0.5)");
  app.add_option("--workers", workers, "worker threads across strip rows")
      ->capture_default_str();
  app.add_option("--output", output, "output path, '-' for stdout")
      ->capture_default_str();
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"tsv", "pgm", "dots"}))
      ->capture_default_str();
  app.add_flag("--lcs-only", lcs_only,
               "score plain LCS length instead of the gap-penalized alignment score");
  app.add_option("--record", record_names,
                 "FASTA record header to use (once: both files; twice: x then y)")
      ->expected(0, 2);
  app.add_flag("--bench", bench, "time the engines in --modes instead of writing a plot");
  app.add_option("--modes", modes_csv, "comma-separated engine list for --bench")
      ->capture_default_str();
  app.add_flag("--dense", dense, "TSV only: write all cells, ignoring --threshold");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  const auto mode = alignplot::mode_from_name(mode_str);
  if (!mode) throw alignplot::ConfigError("unknown mode '" + mode_str + "'");

  std::string x_record, y_record;
  if (record_names.size() == 1) x_record = y_record = record_names[0];
  if (record_names.size() == 2) {
    x_record = record_names[0];
    y_record = record_names[1];
  }
  const alignplot::Sequence x = load_input(x_path, x_record);
  const alignplot::Sequence y = load_input(y_path, y_record);

  alignplot::PlotConfig cfg;
  cfg.window_w = window;
  cfg.step_h = step;
  cfg.blowup_r = lcs_only ? 1 : 2;
  cfg.mode = *mode;
  cfg.workers = workers;
  if (threshold) {
    cfg.threshold_half = static_cast<alignplot::half_score_t>(std::llround(*threshold * 2));
  }

  std::ofstream file_sink;
  const bool to_stdout = output == "-";
  if (!to_stdout) {
    file_sink.open(output, std::ios::binary);
    if (!file_sink) throw std::runtime_error("cannot open output file " + output);
  }
  std::ostream& sink = to_stdout ? std::cout : file_sink;

  if (bench) {
    const auto modes = parse_modes(modes_csv);
    const auto report = alignplot::benchmark(x, y, cfg, modes);
    std::cout << report.to_text();
    if (!to_stdout) {
      sink << report.to_json() << '\n';
      if (!sink) throw std::runtime_error("write failure on " + output);
    }
    return 0;
  }

  const alignplot::PlotGrid grid = alignplot::compute_plot(x, y, cfg);
  if (format == "tsv") {
    alignplot::write_tsv(sink, grid, cfg.threshold_half, dense);
  } else if (format == "pgm") {
    alignplot::write_pgm(sink, grid, cfg.threshold_half);
  } else {
    alignplot::write_dots(sink, grid, cfg.threshold_half);
  }
  sink.flush();
  if (!sink) throw std::runtime_error("write failure on " + output);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "alignplot: " << e.what() << '\n';
    return 1;
  }
}
