#include "seidel/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "seidel/charpoly.hpp"
#include "seidel/errors.hpp"
#include "seidel/graph6.hpp"
#include "seidel/search.hpp"
#include "seidel/serialize.hpp"
#include "seidel/spectral.hpp"
#include "seidel/theory.hpp"

namespace seidel::cli {

namespace {

using nlohmann::json;

/// Usage problems detected after CLI11 parsing (bad input arrangement).
struct UsageError : Error {
  using Error::Error;
};

std::size_t default_max_dimension() {
  if (const char* env = std::getenv("SEIDEL_MAX_DIMENSION")) {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(env, &used);
      if (used == std::string(env).size() && v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("SEIDEL_MAX_DIMENSION must be a positive integer, got '") + env + "'");
  }
  return kDefaultMaxDimension;
}

struct InputSpec {
  std::vector<std::string> positional;
  std::string file;
};

// Resolves exactly one input source to the list of graph6 lines it holds.
std::vector<std::string> read_graph_lines(const InputSpec& spec, std::size_t expected, std::istream& in) {
  const bool has_file = !spec.file.empty();
  if (has_file && !spec.positional.empty()) {
    throw UsageError("give either graph6 arguments or --file, not both");
  }
  std::vector<std::string> lines;
  auto slurp = [&lines](std::istream& s) {
    for (std::string line; std::getline(s, line);) {
      if (line.find_first_not_of(" \t\r") != std::string::npos) lines.push_back(line);
    }
  };
  if (has_file) {
    std::ifstream f(spec.file);
    if (!f) throw Error("cannot open '" + spec.file + "'");
    slurp(f);
  } else if (spec.positional.size() == 1 && spec.positional[0] == "-") {
    slurp(in);
  } else if (!spec.positional.empty()) {
    lines = spec.positional;
  } else {
    throw UsageError("no input graph given (pass a graph6 string, '-' for stdin, or --file)");
  }
  if (expected != 0 && lines.size() != expected) {
    throw UsageError("expected " + std::to_string(expected) + " input graph(s), got " +
                     std::to_string(lines.size()));
  }
  return lines;
}

std::vector<Graph> read_graphs(const InputSpec& spec, std::size_t expected, std::istream& in) {
  std::vector<Graph> graphs;
  for (const auto& line : read_graph_lines(spec, expected, in)) graphs.push_back(graph_from_graph6(line));
  return graphs;
}

void add_input(CLI::App* sub, InputSpec& spec, const std::string& what) {
  sub->add_option("graph", spec.positional, what + " (graph6; '-' reads one graph per line from stdin)");
  sub->add_option("-f,--file", spec.file, "read graph6 lines from a file");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Seidel spectra, energies and equienergetic D_m / D_m* constructions"};
  app.require_subcommand(1);
  bool as_json = false;
  Tolerances tol;

  auto json_flag = [&](CLI::App* sub) { sub->add_flag("--json", as_json, "print JSON instead of text"); };

  InputSpec input;
  int m = 2;
  int theorem = 1;
  int lemma = 0;

  auto* spectrum = app.add_subcommand("spectrum", "Seidel spectrum, grouped by multiplicity");
  add_input(spectrum, input, "graph");
  json_flag(spectrum);

  auto* energy = app.add_subcommand("energy", "Seidel energy (sum of |eigenvalue|)");
  add_input(energy, input, "graph");
  json_flag(energy);

  auto* inertia = app.add_subcommand("inertia", "counts of positive, zero and negative Seidel eigenvalues");
  add_input(inertia, input, "graph");
  json_flag(inertia);
  inertia->add_option("--zero-tol", tol.zero_tol, "eigenvalues within this of 0 count as zero")
      ->check(CLI::PositiveNumber);

  auto* charpoly = app.add_subcommand("charpoly", "exact characteristic polynomial of the Seidel matrix");
  add_input(charpoly, input, "graph");
  json_flag(charpoly);

  auto* comp = app.add_subcommand("complement", "complement graph, as graph6");
  add_input(comp, input, "graph");

  auto* construct = app.add_subcommand("construct", "build D_m(G), D_m*(G) or a two-level composition");
  add_input(construct, input, "graph");
  construct->add_option("--m", m, "blow-up parameter (>= 2)")->check(CLI::Range(2, 1 << 20));
  auto* kinds = construct->add_option_group("kind", "construction");
  bool dm = false, dmstar = false, t2_left = false, t2_right = false;
  kinds->add_flag("--dm", dm, "D_m(G): adjacency J (x) A");
  kinds->add_flag("--dmstar", dmstar, "D_m*(G): adjacency J (x) (A + I) - I");
  kinds->add_flag("--t2-left", t2_left, "D_m*(D_m(G))");
  kinds->add_flag("--t2-right", t2_right, "D_m(D_m*(G))");
  kinds->require_option(1);

  auto* closed = app.add_subcommand("closed-form", "predicted spectrum of a construction from Spec_s(G)");
  add_input(closed, input, "graph");
  json_flag(closed);
  closed->add_option("--m", m, "blow-up parameter (>= 2)")->check(CLI::Range(2, 1 << 20));
  auto* which = closed->add_option_group("which", "closed form");
  which->add_option("--lemma", lemma, "1: D_m(G), 2: D_m*(G)")->check(CLI::IsMember({1, 2}));
  int closed_theorem = 0;
  which->add_option("--theorem", closed_theorem, "2: both two-level compositions")
      ->check(CLI::IsMember({2}));
  which->require_option(1);

  auto* compare = app.add_subcommand("compare", "equienergy and cospectrality of two graphs");
  add_input(compare, input, "two graphs");
  json_flag(compare);

  auto* cert = app.add_subcommand("certify", "certify one theorem instance (JSON by default)");
  add_input(cert, input, "graph");
  cert->add_option("--theorem", theorem, "1: D_m vs D_m*, 2: the two-level compositions")
      ->check(CLI::IsMember({1, 2}));
  cert->add_option("--m", m, "blow-up parameter (>= 2)")->check(CLI::Range(2, 1 << 20));
  bool cert_text = false;
  cert->add_flag("--json", as_json, "print the JSON certificate (default)");
  cert->add_flag("--text", cert_text, "print a human-readable rendering");
  bool no_exact = false;
  cert->add_flag("--no-exact", no_exact, "skip the exact characteristic polynomial check");

  auto* scan = app.add_subcommand("scan", "certify every hypothesis-satisfying graph in a graph6 stream");
  std::string scan_path = "-";
  scan->add_option("input", scan_path, "graph6 file, or '-' for stdin (default)");
  ScanConfig scfg;
  scan->add_option("--theorem", scfg.theorem, "1 or 2")->check(CLI::IsMember({1, 2}));
  scan->add_option("--m", scfg.m, "blow-up parameter (>= 2)")->check(CLI::Range(2, 1 << 20));
  std::string format = "json";
  scan->add_option("--format", format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  std::string out_path;
  scan->add_option("--out", out_path, "write the report here instead of stdout");
  scan->add_flag("--exact", scfg.exact_verify, "verify padding multiplicities with exact arithmetic");
  scan->add_option("--jobs", scfg.parallelism, "worker threads")->check(CLI::Range(1u, 1024u));
  scan->add_option("--max-order", scfg.max_order, "skip graphs whose construction is larger");
  scan->add_option("--exact-max-order", scfg.exact_max_order, "largest construction given the exact check");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const std::size_t max_dim = default_max_dimension();

    if (spectrum->parsed() || energy->parsed() || inertia->parsed() || charpoly->parsed()) {
      for (const auto& g : read_graphs(input, 0, in)) {
        if (spectrum->parsed()) {
          const auto s = seidel_spectrum(g, tol);
          out << (as_json ? json(s).dump() : format_grouped(s)) << "\n";
        } else if (energy->parsed()) {
          const double e = seidel_energy(g, tol);
          out << (as_json ? json{{"seidel_energy", e}}.dump() : format_number(e)) << "\n";
        } else if (inertia->parsed()) {
          const auto i = seidel_inertia(g, tol);
          if (as_json) {
            out << json(i).dump() << "\n";
          } else {
            out << "(" << i.n_pos << ", " << i.n_zero << ", " << i.n_neg << ")\n";
          }
        } else {
          const auto p = charpoly_exact(seidel_matrix(g));
          out << (as_json ? json(p).dump() : p.to_string()) << "\n";
        }
      }
      return kOk;
    }

    if (comp->parsed()) {
      for (const auto& g : read_graphs(input, 0, in)) out << graph_to_graph6(complement(g)) << "\n";
      return kOk;
    }

    if (construct->parsed()) {
      for (const auto& g : read_graphs(input, 0, in)) {
        std::optional<Graph> r;
        if (dm) r = d_m(g, m, max_dim);
        if (dmstar) r = d_m_star(g, m, max_dim);
        if (t2_left) r = d_m_star(d_m(g, m, max_dim), m, max_dim);
        if (t2_right) r = d_m(d_m_star(g, m, max_dim), m, max_dim);
        out << graph_to_graph6(*r) << "\n";
      }
      return kOk;
    }

    if (closed->parsed()) {
      for (const auto& g : read_graphs(input, 0, in)) {
        const auto sigma = seidel_spectrum(g, tol);
        std::vector<ClosedFormSpectrum> forms;
        if (lemma == 1) forms.push_back(lemma1_spectrum(sigma, m, g.order()));
        if (lemma == 2) forms.push_back(lemma2_spectrum(sigma, m, g.order()));
        if (closed_theorem == 2) {
          auto [left, right] = theorem2_spectra(sigma, m, g.order());
          forms.push_back(std::move(left));
          forms.push_back(std::move(right));
        }
        if (as_json) {
          out << (forms.size() == 1 ? json(forms[0]) : json(forms)).dump() << "\n";
        } else {
          for (const auto& f : forms) out << format_grouped(f.as_spectrum(tol.group_tol)) << "\n";
        }
      }
      return kOk;
    }

    if (compare->parsed()) {
      const auto graphs = read_graphs(input, 2, in);
      const double e1 = seidel_energy(graphs[0], tol);
      const double e2 = seidel_energy(graphs[1], tol);
      const auto eq = check_equienergetic(graphs[0], graphs[1], tol.energy_tol, tol);
      const bool cosp = check_cospectral(graphs[0], graphs[1], tol.num_tol, tol);
      if (as_json) {
        out << json{{"energy_1", e1},
                    {"energy_2", e2},
                    {"delta", eq.delta},
                    {"equienergetic", eq.equienergetic},
                    {"cospectral", cosp}}
                   .dump()
            << "\n";
      } else {
        out << "SE " << format_number(e1) << " vs " << format_number(e2)
            << ", equienergetic: " << (eq.equienergetic ? "yes" : "no")
            << ", cospectral: " << (cosp ? "yes" : "no") << "\n";
      }
      return kOk;
    }

    if (cert->parsed()) {
      CertifyOptions opts;
      opts.tol = tol;
      opts.max_dimension = max_dim;
      opts.exact = !no_exact;
      bool violation = false;
      for (const auto& g : read_graphs(input, 0, in)) {
        const auto c = certify(theorem, g, m, opts);
        violation = violation || c.violation();
        out << (cert_text ? render_certificate(c) : json(c).dump(2) + "\n");
      }
      return violation ? kViolation : kOk;
    }

    if (scan->parsed()) {
      PairReport report;
      if (scan_path == "-") {
        report = scan_stream(in, scfg);
      } else {
        std::ifstream f(scan_path);
        if (!f) throw Error("cannot open '" + scan_path + "'");
        report = scan_stream(f, scfg);
      }
      const auto fmt = report_format_from_string(format);
      if (out_path.empty()) {
        write_report(report, fmt, out);
      } else {
        write_report(report, fmt, std::filesystem::path(out_path));
      }
      if (report.has_violations()) {
        err << "theorem conclusion violated on " << report.totals.refuted << " graph(s)\n";
        return kViolation;
      }
      return kOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  } catch (const Graph6Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kComputation;
  }
  return kUsage;
}

}  // namespace seidel::cli
