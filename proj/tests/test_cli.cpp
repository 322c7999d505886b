#include "spectra/cli.hpp"

#include <doctest.h>

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "spectra/cylinders.hpp"
#include "spectra/oracle.hpp"

using namespace spectra;
namespace fs = std::filesystem;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

fs::path fresh_dir(const char* tag) {
  fs::path p = fs::temp_directory_path() / (std::string("spectra_cli_") + tag);
  fs::remove_all(p);
  return p;
}

}  // namespace

TEST_CASE("constants table") {
  RunResult r = run({"constants", "--k", "2", "--digits", "10"});
  REQUIRE(r.code == 0);
  auto rows = lines_of(r.out);
  REQUIRE(rows.size() == 8);
  CHECK(rows[0] == "name,a_num,a_den,b_num,b_den,d,decimal");
  CHECK(rows[1] == "alpha_minus,-1,2,1,2,3,0.3660254038");
  CHECK(rows[2] == "alpha_plus,-1,1,1,1,3,0.7320508076");
  CHECK(rows[3] == "cf_period_1,-1,2,1,2,5,0.6180339887");
  CHECK(rows[4] == "height_period_1,0,1,1,1,5,2.2360679775");
  CHECK(rows[5] == "cf_period_k,-1,1,1,1,2,0.4142135624");
  CHECK(rows[6] == "height_period_k,0,1,2,1,2,2.8284271247");
  CHECK(rows[7] == "height_period_1k,0,1,2,1,3,3.4641016151");

  // k = 4 heights: the flat period gives 2*sqrt(5)
  RunResult r4 = run({"constants", "--k", "4", "--digits", "10"});
  REQUIRE(r4.code == 0);
  bool seen = false;
  for (const auto& row : lines_of(r4.out)) {
    if (row.rfind("height_period_k,", 0) == 0) {
      CHECK(row == "height_period_k,0,1,2,1,5,4.4721359550");
      seen = true;
    }
  }
  CHECK(seen);

  // the closed form of k = 1 has no table; only compute handles that alphabet
  RunResult r1 = run({"constants", "--k", "1"});
  CHECK(r1.code == 2);
  CHECK(!r1.err.empty());
}

TEST_CASE("compute") {
  // k = 1: the single biinfinite word gives exactly sqrt(5)
  RunResult one = run({"compute", "--k", "1", "--q", "100"});
  REQUIRE(one.code == 0);
  auto rows = lines_of(one.out);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == "a_num,a_den,b_num,b_den,d,decimal");
  CHECK(rows[1] == "0,1,1,1,5,2.236067977500");

  // k = 2: the printed set matches the library pipeline byte for byte
  RunResult tiny = run({"compute", "--k", "2", "--q", "3", "--digits", "8"});
  REQUIRE(tiny.code == 0);
  SpectrumApproximation sa = spectrum(build_cylinders(make_context(2), 3), Kind::lagrange);
  auto got = lines_of(tiny.out);
  REQUIRE(got.size() == sa.weights.size() + 1);
  for (std::size_t i = 0; i < sa.weights.size(); ++i) {
    const Surd& w = sa.weights[i];
    std::ostringstream want;
    want << boost::multiprecision::numerator(w.rational_part()) << ','
         << boost::multiprecision::denominator(w.rational_part()) << ','
         << boost::multiprecision::numerator(w.radical_coefficient()) << ','
         << boost::multiprecision::denominator(w.radical_coefficient()) << ','
         << w.radicand() << ',' << w.to_decimal(8);
    CHECK(got[i + 1] == want.str());
  }

  // markov kind prints a superset of the lagrange weights
  RunResult lag = run({"compute", "--k", "2", "--q", "40"});
  RunResult mar = run({"compute", "--k", "2", "--q", "40", "--kind", "markov"});
  REQUIRE(lag.code == 0);
  REQUIRE(mar.code == 0);
  CHECK(lines_of(mar.out).size() >= lines_of(lag.out).size());

  // byte determinism across repeated runs
  CHECK(run({"compute", "--k", "2", "--q", "40"}).out == lag.out);
}

TEST_CASE("json output") {
  RunResult r = run({"compute", "--k", "2", "--q", "20", "--format", "json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["command"] == "compute");
  CHECK(j["k"] == 2);
  CHECK(j["q"] == 20);
  CHECK(j["kind"] == "lagrange");
  REQUIRE(j["weights"].is_array());
  CHECK(j["weights"].size() ==
        spectrum(build_cylinders(make_context(2), 20), Kind::lagrange).weights.size());
  CHECK(j["weights"][0].contains("d"));
  CHECK(j["weights"][0].contains("decimal"));

  RunResult c = run({"constants", "--k", "3", "--format", "json"});
  REQUIRE(c.code == 0);
  auto cj = nlohmann::json::parse(c.out);
  CHECK(cj["constants"][0]["name"] == "alpha_minus");

  RunResult v = run({"verify", "--k", "2", "--q", "30", "--maxlen", "3", "--format", "json"});
  REQUIRE(v.code == 0);
  auto vj = nlohmann::json::parse(v.out);
  CHECK(vj["verify"] == "pass");
  CHECK(vj["violations"].empty());
}

TEST_CASE("plotdata merges touching intervals") {
  // unit behavior first
  std::vector<Surd> ws{Surd(2), Surd(Rational(2001, 1000))};
  auto merged = merge_plot_intervals(ws, 1000);
  REQUIRE(merged.size() == 1);
  CHECK(merged[0].lo == Surd(Rational(1999, 1000)));
  CHECK(merged[0].hi == Surd(Rational(2002, 1000)));

  auto apart = merge_plot_intervals({Surd(2), Surd(3)}, 1000);
  CHECK(apart.size() == 2);
  // defensive about unsorted input
  auto swapped = merge_plot_intervals({Surd(3), Surd(2)}, 1000);
  CHECK(swapped.size() == 2);
  CHECK(swapped[0].lo == Surd(Rational(1999, 1000)));
  CHECK_THROWS_AS(merge_plot_intervals(ws, 0), std::invalid_argument);

  // CLI rendering: rows are ordered, lo < hi, endpoints rounded outward
  RunResult r = run({"plotdata", "--k", "2", "--q", "25", "--digits", "6"});
  REQUIRE(r.code == 0);
  auto rows = lines_of(r.out);
  REQUIRE(rows.size() >= 2);
  CHECK(rows[0] == "lo,hi");
  double prev_hi = -1e9;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    auto comma = rows[i].find(',');
    REQUIRE(comma != std::string::npos);
    double lo = std::stod(rows[i].substr(0, comma));
    double hi = std::stod(rows[i].substr(comma + 1));
    CHECK(lo < hi);
    CHECK(lo > prev_hi);
    prev_hi = hi;
  }
  CHECK(run({"plotdata", "--k", "2", "--q", "25", "--digits", "6"}).out == r.out);
}

TEST_CASE("stats row structure") {
  RunResult r = run({"stats", "--k", "2", "--q", "3"});
  REQUIRE(r.code == 0);
  auto rows = lines_of(r.out);
  REQUIRE(!rows.empty());
  CHECK(rows[0] == "name,value");
  auto has = [&](const std::string& prefix) {
    for (const auto& row : rows) {
      if (row.rfind(prefix, 0) == 0) return true;
    }
    return false;
  };
  CHECK(has("leaf_count,2"));
  CHECK(has("vertex_count,12"));
  CHECK(has("shift_edges,8"));
  CHECK(has("prolongation_edges,8"));
  CHECK(has("lagrange_weights,"));
  CHECK(has("markov_weights,"));
  CHECK(has("edge_bound,"));
  CHECK(has("envelope_ok,true"));
  CHECK(has("build_seconds,"));
  CHECK(has("solve_seconds,"));
}

TEST_CASE("verify passes clean and flags corruption") {
  RunResult good = run({"verify", "--k", "2", "--q", "50", "--maxlen", "4"});
  CHECK(good.code == 0);
  CHECK(good.out.find("violations,0\n") != std::string::npos);
  CHECK(good.out.find("two_resolution,pass") != std::string::npos);
  CHECK(good.out.find("verify,pass") != std::string::npos);

  RunResult bad = run({"verify", "--k", "2", "--q", "50", "--maxlen", "2", "--inject-error"});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("violation,2.236") != std::string::npos);  // sqrt(5) drifted away
  CHECK(bad.out.find("verify,fail") != std::string::npos);
}

TEST_CASE("cylinder cache") {
  fs::path dir = fresh_dir("cache");
  std::vector<std::string> args{"compute", "--k", "2", "--q", "20",
                                "--cache", dir.string()};
  RunResult cold = run(args);
  REQUIRE(cold.code == 0);
  fs::path file = dir / "cylinders_k2_q20.txt";
  CHECK(fs::exists(file));

  RunResult warm = run(args);
  CHECK(warm.code == 0);
  CHECK(warm.out == cold.out);  // warm cache output is byte identical

  // the environment variable stands in for --cache
  fs::path envdir = fresh_dir("cache_env");
  setenv("SPECTRA_CACHE", envdir.string().c_str(), 1);
  RunResult env = run({"compute", "--k", "2", "--q", "20"});
  unsetenv("SPECTRA_CACHE");
  CHECK(env.code == 0);
  CHECK(env.out == cold.out);
  CHECK(fs::exists(envdir / "cylinders_k2_q20.txt"));

  // corrupt cache reports an error instead of silently rebuilding
  {
    std::ofstream f(file, std::ios::trunc);
    f << "garbage\n";
  }
  RunResult corrupt = run(args);
  CHECK(corrupt.code == 2);
  CHECK(!corrupt.err.empty());

  fs::remove_all(dir);
  fs::remove_all(envdir);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"compute", "--k", "2"}).code == 2);            // --q required
  CHECK(run({"compute", "--q", "7"}).code == 2);            // --k required
  CHECK(run({"compute", "--k", "2", "--q", "-5"}).code == 2);
  CHECK(run({"compute", "--k", "2", "--q", "2"}).code == 2);  // q below the root split
  CHECK(run({"compute", "--k", "2", "--q", "7", "--kind", "spooky"}).code == 2);
  CHECK(run({"stats", "--k", "1", "--q", "7"}).code == 2);
  CHECK(run({"verify", "--k", "2", "--q", "7", "--maxlen", "25"}).code == 2);

  RunResult budget = run({"compute", "--k", "2", "--q", "100", "--max-shift-edges", "1"});
  CHECK(budget.code == 2);
  CHECK(budget.err.find("budget") != std::string::npos);

  RunResult help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("compute") != std::string::npos);
  CHECK(help.out.find("plotdata") != std::string::npos);
}
