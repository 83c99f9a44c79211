#include "seidel/search.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <exception>
#include <fstream>
#include <mutex>
#include <optional>
#include <thread>

#include "seidel/errors.hpp"
#include "seidel/graph6.hpp"
#include "seidel/serialize.hpp"

namespace seidel {

void ScanConfig::validate() const {
  if (m < 2) throw InvalidArgument("m must be >= 2, got " + std::to_string(m));
  if (theorem != 1 && theorem != 2) throw InvalidArgument("theorem must be 1 or 2");
  if (parallelism == 0) throw InvalidArgument("parallelism must be at least 1");
}

namespace {

enum class Outcome { kBlank, kParseFailed, kSkipped, kHypothesisFailed, kCertified, kRefuted };

struct LineResult {
  Outcome outcome = Outcome::kBlank;
  bool boundary = false;
  std::string message;
  std::optional<Certificate> certificate;
};

bool is_blank(const std::string& s) {
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
}

LineResult process_line(const std::string& line, const ScanConfig& config) {
  LineResult r;
  if (is_blank(line)) return r;

  std::optional<Graph> g;
  try {
    g = graph_from_graph6(line);
  } catch (const Graph6Error& e) {
    r.outcome = Outcome::kParseFailed;
    r.message = e.what();
    return r;
  }

  const std::size_t m = static_cast<std::size_t>(config.m);
  const std::size_t order = (config.theorem == 1 ? m : m * m) * g->order();
  if (order > config.max_order) {
    r.outcome = Outcome::kSkipped;
    r.message = "constructed order " + std::to_string(order) + " exceeds max_order " +
                std::to_string(config.max_order);
    return r;
  }

  const auto hyp = check_hypothesis(*g, config.m, config.theorem, config.tol);
  r.boundary = hyp.boundary;
  if (!hyp.satisfied) {
    r.outcome = Outcome::kHypothesisFailed;
    return r;
  }

  CertifyOptions opts;
  opts.tol = config.tol;
  opts.max_dimension = config.max_order;
  opts.exact = config.exact_verify;
  opts.exact_max_order = config.exact_max_order;
  r.certificate = certify(config.theorem, *g, config.m, opts);
  r.outcome = r.certificate->verdict == Verdict::kEquienergetic ? Outcome::kCertified : Outcome::kRefuted;
  return r;
}

}  // namespace

PairReport scan_stream(const std::vector<std::string>& lines, const ScanConfig& config) {
  config.validate();
  std::vector<LineResult> results(lines.size());

  const unsigned workers = std::min<std::size_t>(config.parallelism, std::max<std::size_t>(lines.size(), 1));
  if (workers <= 1) {
    for (std::size_t k = 0; k < lines.size(); ++k) results[k] = process_line(lines[k], config);
  } else {
    std::atomic<std::size_t> next{0};
    std::mutex error_mutex;
    std::size_t error_index = lines.size();
    std::exception_ptr error;
    auto work = [&] {
      for (std::size_t k = next++; k < lines.size(); k = next++) {
        try {
          results[k] = process_line(lines[k], config);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          // Keep the earliest failing line so the rethrown error is deterministic.
          if (k < error_index) {
            error_index = k;
            error = std::current_exception();
          }
        }
      }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
  }

  PairReport report;
  report.config = config;
  auto& totals = report.totals;
  for (std::size_t k = 0; k < results.size(); ++k) {
    auto& r = results[k];
    const std::size_t line = k + 1;
    if (r.outcome == Outcome::kBlank) continue;
    ++totals.scanned;
    if (r.boundary) ++totals.boundary;
    switch (r.outcome) {
      case Outcome::kParseFailed:
        ++totals.parse_failed;
        report.failures.push_back({line, std::move(r.message)});
        break;
      case Outcome::kSkipped:
        ++totals.skipped;
        report.skips.push_back({line, std::move(r.message)});
        break;
      case Outcome::kHypothesisFailed:
        ++totals.hypothesis_failed;
        break;
      case Outcome::kCertified:
      case Outcome::kRefuted:
        ++totals.hypothesis_satisfied;
        ++(r.outcome == Outcome::kCertified ? totals.certified : totals.refuted);
        report.certificates.push_back({line, std::move(*r.certificate)});
        break;
      case Outcome::kBlank:
        break;
    }
  }
  return report;
}

PairReport scan_stream(std::istream& in, const ScanConfig& config) {
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(std::move(line));
  return scan_stream(lines, config);
}

ReportFormat report_format_from_string(const std::string& s) {
  if (s == "json") return ReportFormat::kJson;
  if (s == "csv") return ReportFormat::kCsv;
  if (s == "text") return ReportFormat::kText;
  throw InvalidArgument("unknown report format '" + s + "' (expected json, csv or text)");
}

namespace {

const char* kCsvHeader =
    "line,graph6,theorem,m,n,order,min_abs_eigenvalue,bound,n_pos,n_zero,n_neg,energy_a,energy_b,"
    "energy_delta,equienergetic,cospectral,closed_form_agrees,exact_checked,"
    "exact_multiplicities_verified,boundary,verdict";

// graph6 bytes may include '"' and '\\' but never ',' or newlines; quote anyway.
std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void write_csv(const PairReport& r, std::ostream& out) {
  out << kCsvHeader << "\n";
  for (const auto& lc : r.certificates) {
    const auto& c = lc.certificate;
    const auto& h = c.hypothesis;
    auto b = [](bool v) { return v ? "true" : "false"; };
    out << lc.line << "," << csv_quote(c.graph6) << "," << c.theorem << "," << c.m << "," << c.n << ","
        << c.closed_a.order << "," << format_number(h.min_abs_eigenvalue) << "," << format_number(h.bound)
        << "," << h.inertia.n_pos << "," << h.inertia.n_zero << "," << h.inertia.n_neg << ","
        << format_number(c.energy_a) << "," << format_number(c.energy_b) << ","
        << format_number(c.energy_delta) << "," << b(c.equienergetic) << "," << b(c.cospectral) << ","
        << b(c.closed_form_agrees) << "," << b(c.exact_checked) << ","
        << b(c.exact_multiplicities_verified) << "," << b(h.boundary) << "," << to_string(c.verdict)
        << "\n";
  }
}

void write_text(const PairReport& r, std::ostream& out) {
  const auto& t = r.totals;
  out << "scan: theorem " << r.config.theorem << ", m = " << r.config.m << ", max order "
      << r.config.max_order << ", exact " << (r.config.exact_verify ? "on" : "off") << "\n"
      << "  scanned              " << t.scanned << "\n"
      << "  hypothesis satisfied " << t.hypothesis_satisfied << "\n"
      << "  certified            " << t.certified << "\n"
      << "  refuted              " << t.refuted << "\n"
      << "  hypothesis failed    " << t.hypothesis_failed << "\n"
      << "  parse failed         " << t.parse_failed << "\n"
      << "  skipped              " << t.skipped << "\n"
      << "  boundary             " << t.boundary << "\n";
  for (const auto& lc : r.certificates) {
    const auto& c = lc.certificate;
    out << "line " << lc.line << "  " << c.graph6 << "  SE " << format_number(c.energy_a) << " / "
        << format_number(c.energy_b) << "  " << to_string(c.verdict)
        << (c.cospectral ? "  [cospectral]" : "") << (c.hypothesis.boundary ? "  [boundary]" : "") << "\n";
  }
  for (const auto& f : r.failures) out << "line " << f.line << "  parse error: " << f.message << "\n";
  for (const auto& s : r.skips) out << "line " << s.line << "  skipped: " << s.message << "\n";
}

}  // namespace

void write_report(const PairReport& report, ReportFormat format, std::ostream& out) {
  switch (format) {
    case ReportFormat::kJson:
      out << nlohmann::json(report).dump(2) << "\n";
      break;
    case ReportFormat::kCsv:
      write_csv(report, out);
      break;
    case ReportFormat::kText:
      write_text(report, out);
      break;
  }
}

void write_report(const PairReport& report, ReportFormat format, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open '" + path.string() + "' for writing");
  write_report(report, format, out);
  out.flush();
  if (!out) throw Error("failed writing report to '" + path.string() + "'");
}

PairReport parse_report_json(const std::string& text) {
  return nlohmann::json::parse(text).get<PairReport>();
}

}  // namespace seidel
