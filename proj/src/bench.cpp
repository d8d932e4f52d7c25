#include "fpmine/bench.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace fpmine {
namespace {

std::string format_millis(double millis) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", millis);
  return buf;
}

}  // namespace

BenchReport bench_one(const TransactionDatabase& db, const Ratio& threshold,
                      unsigned threads) {
  BenchReport report;
  report.threshold = threshold;

  const SupportThreshold support = SupportThreshold::from_relative(threshold, db.size());
  report.required_count = support.absolute;

  MineOptions options;
  options.threads = threads;
  options.stats = &report.rows;
  const MiningResult result = mine(db, support, options);

  report.scans = result.scans;
  report.total_frequent = result.total_frequent();
  for (const LevelStats& row : report.rows) {
    report.total_millis += row.millis;
  }
  return report;
}

std::vector<BenchReport> bench(const TransactionDatabase& db,
                               const std::vector<Ratio>& thresholds,
                               unsigned threads) {
  std::vector<BenchReport> reports;
  reports.reserve(thresholds.size());
  for (const Ratio& threshold : thresholds) {
    reports.push_back(bench_one(db, threshold, threads));
  }
  return reports;
}

std::string format_bench_text(const BenchReport& report, bool with_timings) {
  std::ostringstream out;
  out << "minsup " << to_scheme_decimal(report.threshold) << " ("
      << report.required_count << " transactions required): "
      << report.total_frequent << " frequent itemsets, "
      << report.scans << " scans";
  if (with_timings) {
    out << ", " << format_millis(report.total_millis) << " ms";
  }
  out << '\n';

  const char* headers[] = {"level", "join", "prune", "frequent"};
  std::size_t widths[] = {5, 8, 8, 8};
  for (const LevelStats& row : report.rows) {
    widths[1] = std::max(widths[1], std::to_string(row.joined).size());
    widths[2] = std::max(widths[2], std::to_string(row.pruned).size());
    widths[3] = std::max(widths[3], std::to_string(row.frequent).size());
  }

  auto cell = [&out](const std::string& text, std::size_t width) {
    out << std::string(width - std::min(width, text.size()), ' ') << text;
  };
  for (std::size_t c = 0; c < 4; ++c) {
    if (c) out << "  ";
    cell(headers[c], widths[c]);
  }
  if (with_timings) {
    out << "  ";
    cell("millis", 10);
  }
  out << '\n';
  for (const LevelStats& row : report.rows) {
    cell(std::to_string(row.k), widths[0]);
    out << "  ";
    cell(std::to_string(row.joined), widths[1]);
    out << "  ";
    cell(std::to_string(row.pruned), widths[2]);
    out << "  ";
    cell(std::to_string(row.frequent), widths[3]);
    if (with_timings) {
      out << "  ";
      cell(format_millis(row.millis), 10);
    }
    out << '\n';
  }
  return out.str();
}

std::string format_bench_csv(const BenchReport& report, bool with_timings) {
  std::ostringstream out;
  out << "# minsup=" << to_scheme_decimal(report.threshold)
      << " required=" << report.required_count
      << " frequent=" << report.total_frequent
      << " scans=" << report.scans << '\n';
  out << "level,join,prune,frequent,millis\n";
  for (const LevelStats& row : report.rows) {
    out << row.k << ',' << row.joined << ',' << row.pruned << ',' << row.frequent << ','
        << (with_timings ? format_millis(row.millis) : std::string("0")) << '\n';
  }
  return out.str();
}

}  // namespace fpmine
