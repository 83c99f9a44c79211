#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <string>
#include <vector>


#include "seidel/theory.hpp"

namespace seidel {

struct ScanConfig {
  int m = 2;
  int theorem = 1;
  std::size_t max_order = 2'000;
  bool exact_verify = false;
  std::size_t exact_max_order = 200;
  unsigned parallelism = 1;
  Tolerances tol;

  /// Throws InvalidArgument on m < 2, theorem outside {1,2}, zero workers.
  void validate() const;

  friend bool operator==(const ScanConfig&, const ScanConfig&) = default;
};

struct ScanTotals {
  std::size_t scanned = 0;
  std::size_t hypothesis_satisfied = 0;
  std::size_t certified = 0;  // hypothesis held and the conclusion was confirmed
  std::size_t refuted = 0;    // hypothesis held and the conclusion failed
  std::size_t hypothesis_failed = 0;
  std::size_t parse_failed = 0;
  std::size_t skipped = 0;
  std::size_t boundary = 0;

  friend bool operator==(const ScanTotals&, const ScanTotals&) = default;
};

struct LineCertificate {
  std::size_t line = 0;
  Certificate certificate;

  friend bool operator==(const LineCertificate&, const LineCertificate&) = default;
};

struct LineIssue {
  std::size_t line = 0;
  std::string message;

  friend bool operator==(const LineIssue&, const LineIssue&) = default;
};

struct PairReport {
  ScanConfig config;
  ScanTotals totals;
  std::vector<LineCertificate> certificates;
  std::vector<LineIssue> failures;  // parse errors
  std::vector<LineIssue> skips;     // dimension cap

  bool has_violations() const { return totals.refuted > 0; }

  friend bool operator==(const PairReport&, const PairReport&) = default;
};

/// Scans graph6 lines (1-based line numbers; blank lines are ignored and not
/// counted). Results are ordered by line number for any parallelism.
PairReport scan_stream(const std::vector<std::string>& lines, const ScanConfig& config);
PairReport scan_stream(std::istream& in, const ScanConfig& config);

enum class ReportFormat { kJson, kCsv, kText };

ReportFormat report_format_from_string(const std::string& s);

void write_report(const PairReport& report, ReportFormat format, std::ostream& out);
/// Throws Error naming the path on I/O failure.
void write_report(const PairReport& report, ReportFormat format, const std::filesystem::path& path);

PairReport parse_report_json(const std::string& text);

}  // namespace seidel
