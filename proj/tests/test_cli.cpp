#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "seidel/cli.hpp"

using seidel::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = run(args, in, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("spectrum, energy, inertia, charpoly") {
  CHECK(invoke({"spectrum", "C~"}).out == "{1^3, -3^1}\n");
  CHECK(invoke({"energy", "C~"}).out == "6\n");
  CHECK(invoke({"inertia", "Bw"}).out == "(2, 0, 1)\n");
  CHECK(invoke({"charpoly", "BW"}).out == "x^3 - 3x - 2\n");

  const auto j = nlohmann::json::parse(invoke({"spectrum", "--json", "C~"}).out);
  CHECK(j["grouped"] == "{1^3, -3^1}");
  CHECK(j["values"].size() == 4);
  CHECK(nlohmann::json::parse(invoke({"energy", "--json", "A_"}).out)["seidel_energy"] == 2.0);
  CHECK(nlohmann::json::parse(invoke({"inertia", "--json", "A_"}).out)["n_pos"] == 1);
  CHECK(nlohmann::json::parse(invoke({"charpoly", "--json", "BW"}).out)["coefficients"] ==
        nlohmann::json({"1", "0", "-3", "-2"}));
}

TEST_CASE("stdin and file input") {
  CHECK(invoke({"energy", "-"}, "A_\nBw\n\n").out == "2\n4\n");
  CHECK(invoke({"energy", "--file", SEIDEL_TEST_DATA "/graphs_n1_6.g6"}).code == 0);
  CHECK(invoke({"energy", "A_", "--file", "x"}).code == 1);
  CHECK(invoke({"energy"}).code == 1);
  CHECK(invoke({"energy", "--file", "/nonexistent/file.g6"}).code == 2);
}

TEST_CASE("graph operations") {
  CHECK(invoke({"complement", "C~"}).out == "C?\n");
  CHECK(invoke({"construct", "--dm", "--m", "2", "A_"}).out == "Cl\n");  // C_4 = 0-1-2-3-0
  CHECK(invoke({"construct", "--dmstar", "--m", "2", "A_"}).out == "C~\n");
  CHECK(invoke({"construct", "--t2-left", "--m", "2", "@"}).code == 0);
  CHECK(invoke({"construct", "--dm", "--dmstar", "--m", "2", "A_"}).code == 1);
  CHECK(invoke({"construct", "--m", "2", "A_"}).code == 1);
  CHECK(invoke({"construct", "--dm", "--m", "1", "A_"}).code == 1);
}

TEST_CASE("construct piped to spectrum agrees with the closed form") {
  for (const std::string g : {"A_", "Bw", "DQc", "D~{"}) {
    for (const std::string m : {"2", "3"}) {
      const auto built = invoke({"construct", "--dm", "--m", m, g}).out;
      CHECK(invoke({"spectrum", "-"}, built).out == invoke({"closed-form", "--lemma", "1", "--m", m, g}).out);
      const auto built2 = invoke({"construct", "--dmstar", "--m", m, g}).out;
      CHECK(invoke({"spectrum", "-"}, built2).out == invoke({"closed-form", "--lemma", "2", "--m", m, g}).out);
    }
  }
  const auto t2 = invoke({"closed-form", "--theorem", "2", "--m", "2", "A_"}).out;
  CHECK(t2 == "{5^1, 1^4, -3^3}\n{3^3, -1^4, -5^1}\n");
  const auto j = nlohmann::json::parse(invoke({"closed-form", "--json", "--lemma", "1", "--m", "2", "A_"}).out);
  CHECK(j["padding"][0]["multiplicity"] == 2);
}

TEST_CASE("compare") {
  CHECK(invoke({"compare", "Bw", "BW"}).out == "SE 4 vs 4, equienergetic: yes, cospectral: no\n");
  const auto j = nlohmann::json::parse(invoke({"compare", "--json", "A_", "Bw"}).out);
  CHECK(j["equienergetic"] == false);
  CHECK(invoke({"compare", "A_"}).code == 1);
}

TEST_CASE("certify") {
  const auto r = invoke({"certify", "--theorem", "1", "--m", "2", "A_"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["equienergetic"] == true);
  CHECK(j["verdict"] == "equienergetic");
  CHECK(j["theorem"] == 1);
  CHECK(j["graph6"] == "A_");

  const auto text = invoke({"certify", "--text", "--theorem", "2", "--m", "2", "A_"});
  CHECK(text.out.find("theorem 2 certificate") != std::string::npos);
  CHECK(invoke({"certify", "--theorem", "3", "--m", "2", "A_"}).code == 1);
}

TEST_CASE("scan") {
  const auto r = invoke({"scan", "--m", "2", "--theorem", "1", "--format", "json"}, "A_\nC~\n");
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["totals"]["scanned"] == 2);
  CHECK(j["totals"]["certified"] == 1);
  CHECK(j["config"].count("parallelism") == 0);

  const auto csv = invoke({"scan", "--format", "csv", "--jobs", "3", SEIDEL_TEST_DATA "/graphs_n1_6.g6"});
  CHECK(csv.code == 0);
  CHECK(csv.out.rfind("line,graph6", 0) == 0);
  CHECK(invoke({"scan", "--format", "xml"}, "").code == 1);
}

TEST_CASE("usage and input errors") {
  CHECK(invoke({}).code == 1);
  CHECK(invoke({"frobnicate"}).code == 1);
  const auto bad = invoke({"spectrum", "C"});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("truncated") != std::string::npos);
  CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("dimension cap from the environment") {
  ::setenv("SEIDEL_MAX_DIMENSION", "5", 1);
  CHECK(invoke({"construct", "--dm", "--m", "3", "A_"}).code == 2);
  ::setenv("SEIDEL_MAX_DIMENSION", "abc", 1);
  CHECK(invoke({"construct", "--dm", "--m", "3", "A_"}).code == 1);
  ::unsetenv("SEIDEL_MAX_DIMENSION");
  CHECK(invoke({"construct", "--dm", "--m", "3", "A_"}).code == 0);
}
