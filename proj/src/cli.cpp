#include "spectra/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

#include "spectra/cylinders.hpp"
#include "spectra/graph.hpp"
#include "spectra/oracle.hpp"

namespace spectra {

namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

std::string big_str(const BigInt& x) { return x.str(); }

void surd_csv(std::ostream& out, const Surd& w, int digits) {
  out << big_str(boost::multiprecision::numerator(w.rational_part())) << ','
      << big_str(boost::multiprecision::denominator(w.rational_part())) << ','
      << big_str(boost::multiprecision::numerator(w.radical_coefficient())) << ','
      << big_str(boost::multiprecision::denominator(w.radical_coefficient())) << ','
      << big_str(w.radicand()) << ',' << w.to_decimal(digits);
}

Json surd_json(const Surd& w, int digits) {
  return Json{{"a_num", big_str(boost::multiprecision::numerator(w.rational_part()))},
              {"a_den", big_str(boost::multiprecision::denominator(w.rational_part()))},
              {"b_num", big_str(boost::multiprecision::numerator(w.radical_coefficient()))},
              {"b_den", big_str(boost::multiprecision::denominator(w.radical_coefficient()))},
              {"d", big_str(w.radicand())},
              {"decimal", w.to_decimal(digits)}};
}

std::string rational_decimal(const Rational& r, int digits) {
  return Surd(r).to_decimal(digits);
}

std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

const char* kind_name(Kind k) { return k == Kind::lagrange ? "lagrange" : "markov"; }

CylinderSet obtain_cylinders(const RunConfig& cfg, long long q, std::ostream& err) {
  std::optional<std::string> dir = cfg.cache_dir;
  if (!dir) {
    const char* env = std::getenv("SPECTRA_CACHE");
    if (env && *env) dir = env;
  }
  if (!dir) return build_cylinders(make_context(cfg.k), q);

  fs::path file = fs::path(*dir) / ("cylinders_k" + std::to_string(cfg.k) + "_q" +
                                    std::to_string(q) + ".txt");
  if (fs::exists(file)) return load_cylinders(file.string());
  CylinderSet cs = build_cylinders(make_context(cfg.k), q);
  std::error_code ec;
  fs::create_directories(fs::path(*dir), ec);
  try {
    save_cylinders(cs, file.string());
  } catch (const std::exception& e) {
    err << "warning: cache write failed: " << e.what() << "\n";
  }
  return cs;
}

void ensure_edge_budget(const CylinderSet& cs, long long budget) {
  long long n = static_cast<long long>(cs.size());
  long long estimate = n * n * cs.ctx.k;
  if (estimate > budget) {
    throw std::invalid_argument(
        "estimated shift edge count " + std::to_string(estimate) + " exceeds the " +
        std::to_string(budget) + " budget; raise --max-shift-edges to proceed");
  }
}

std::vector<Surd> weights_for(const RunConfig& cfg, std::ostream& err) {
  if (cfg.k == 1) {
    // The only biinfinite word over {1} is all ones; both spectra reduce to
    // the single height 1 + 2*[0; 1,1,...] = sqrt(5).
    return {Surd(0, 1, 5)};
  }
  CylinderSet cs = obtain_cylinders(cfg, cfg.q, err);
  ensure_edge_budget(cs, cfg.max_shift_edges);
  ProductGraph pg = build_product(cs);
  return spectrum(pg, cfg.kind).weights;
}

int cmd_compute(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::vector<Surd> ws = weights_for(cfg, err);
  if (cfg.format == "json") {
    Json j{{"command", "compute"},
           {"k", cfg.k},
           {"q", cfg.q},
           {"kind", kind_name(cfg.kind)},
           {"weights", Json::array()}};
    for (const Surd& w : ws) j["weights"].push_back(surd_json(w, cfg.digits));
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "a_num,a_den,b_num,b_den,d,decimal\n";
  for (const Surd& w : ws) {
    surd_csv(out, w, cfg.digits);
    out << "\n";
  }
  return 0;
}

int cmd_plotdata(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::vector<Surd> ws = weights_for(cfg, err);
  std::vector<PlotInterval> intervals = merge_plot_intervals(ws, cfg.q);
  if (cfg.format == "json") {
    Json j{{"command", "plotdata"},
           {"k", cfg.k},
           {"q", cfg.q},
           {"kind", kind_name(cfg.kind)},
           {"intervals", Json::array()}};
    for (const auto& iv : intervals) {
      j["intervals"].push_back(
          Json{{"lo", iv.lo.to_decimal(cfg.digits, Surd::Rounding::Down)},
               {"hi", iv.hi.to_decimal(cfg.digits, Surd::Rounding::Up)}});
    }
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "lo,hi\n";
  for (const auto& iv : intervals) {
    out << iv.lo.to_decimal(cfg.digits, Surd::Rounding::Down) << ','
        << iv.hi.to_decimal(cfg.digits, Surd::Rounding::Up) << "\n";
  }
  return 0;
}

int cmd_stats(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  using Clock = std::chrono::steady_clock;
  auto t0 = Clock::now();
  CylinderSet cs = obtain_cylinders(cfg, cfg.q, err);
  ensure_edge_budget(cs, cfg.max_shift_edges);
  ProductGraph pg = build_product(cs);
  auto t1 = Clock::now();
  auto spectra_pair = both_spectra(pg);
  auto t2 = Clock::now();

  double build_s = std::chrono::duration<double>(t1 - t0).count();
  double solve_s = std::chrono::duration<double>(t2 - t1).count();
  double bound = edge_count_bound(cs);
  double total_edges = static_cast<double>(pg.graph.edge_count());

  std::vector<std::pair<std::string, std::string>> rows;
  rows.emplace_back("leaf_count", std::to_string(cs.size()));
  rows.emplace_back("vertex_count", std::to_string(pg.graph.n_vertices));
  rows.emplace_back("shift_edges", std::to_string(pg.shift_edge_count));
  rows.emplace_back("prolongation_edges", std::to_string(pg.prolongation_edge_count));
  rows.emplace_back("lagrange_weights", std::to_string(spectra_pair.first.weights.size()));
  rows.emplace_back("markov_weights", std::to_string(spectra_pair.second.weights.size()));
  rows.emplace_back("edge_bound", fmt_double(bound));
  rows.emplace_back("edge_bound_ratio", fmt_double(total_edges / bound));
  if (cs.ctx.c1 && cs.ctx.c2 && cs.ctx.hd_lower && cs.ctx.hd_upper) {
    double lower = *cs.ctx.c1 * std::pow(static_cast<double>(cfg.q), *cs.ctx.hd_lower);
    double upper = *cs.ctx.c2 * std::pow(static_cast<double>(cfg.q), *cs.ctx.hd_upper);
    bool ok = lower <= static_cast<double>(cs.size()) &&
              static_cast<double>(cs.size()) <= upper;
    rows.emplace_back("envelope_lower", fmt_double(lower));
    rows.emplace_back("envelope_upper", fmt_double(upper));
    rows.emplace_back("envelope_ok", ok ? "true" : "false");
  }
  rows.emplace_back("build_seconds", fmt_double(build_s));
  rows.emplace_back("solve_seconds", fmt_double(solve_s));

  if (cfg.format == "json") {
    Json j{{"command", "stats"}, {"k", cfg.k}, {"q", cfg.q}};
    for (const auto& [name, value] : rows) j[name] = value;
    out << j.dump(2) << "\n";
  } else {
    out << "name,value\n";
    for (const auto& [name, value] : rows) out << name << ',' << value << "\n";
  }
  return 0;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.q > std::numeric_limits<long long>::max() / 10) {
    throw std::invalid_argument("q too large for the two-resolution check");
  }
  KContext ctx = make_context(cfg.k);

  CylinderSet cs_a = obtain_cylinders(cfg, cfg.q, err);
  ensure_edge_budget(cs_a, cfg.max_shift_edges);
  SpectrumApproximation sa = spectrum(build_product(cs_a), cfg.kind);

  CylinderSet cs_b = obtain_cylinders(cfg, 10 * cfg.q, err);
  ensure_edge_budget(cs_b, cfg.max_shift_edges);
  SpectrumApproximation sb = spectrum(build_product(cs_b), cfg.kind);

  if (cfg.inject_error) {
    Surd shift(Rational(3, cfg.q));
    for (Surd& w : sa.weights) w += shift;
  }

  std::vector<Surd> net = periodic_net(ctx, cfg.maxlen);
  VerifyReport rep = verify_spectrum(sa, net);

  Surd gap = hausdorff_gap(sa.weights, sb.weights);
  Rational bound = Rational(1, cfg.q) + Rational(1, 10 * cfg.q);
  bool two_ok = gap.compare(bound) <= 0;
  bool pass = rep.ok && two_ok;

  if (cfg.format == "json") {
    Json j{{"command", "verify"},
           {"k", cfg.k},
           {"q", cfg.q},
           {"kind", kind_name(cfg.kind)},
           {"net_size", net.size()},
           {"certified_density_exponent", certified_density_exponent(cfg.k, cfg.maxlen)},
           {"violations", Json::array()},
           {"worst_gap", rational_decimal(rep.worst_gap, cfg.digits)},
           {"two_resolution_gap", gap.to_decimal(cfg.digits)},
           {"two_resolution_bound", rational_decimal(bound, cfg.digits)},
           {"two_resolution", two_ok ? "pass" : "fail"},
           {"verify", pass ? "pass" : "fail"}};
    for (const auto& v : rep.violations) {
      j["violations"].push_back(
          Json{{"value", v.value.to_decimal(cfg.digits)},
               {"gap_at_least", rational_decimal(v.gap_lower_bound, cfg.digits)}});
    }
    out << j.dump(2) << "\n";
    return pass ? 0 : 1;
  }

  out << "net_size," << net.size() << "\n";
  out << "certified_density_exponent," << certified_density_exponent(cfg.k, cfg.maxlen)
      << "\n";
  out << "violations," << rep.violations.size() << "\n";
  for (const auto& v : rep.violations) {
    out << "violation," << v.value.to_decimal(cfg.digits) << ",gap_at_least,"
        << rational_decimal(v.gap_lower_bound, cfg.digits) << "\n";
  }
  out << "worst_gap," << rational_decimal(rep.worst_gap, cfg.digits) << "\n";
  out << "two_resolution_gap," << gap.to_decimal(cfg.digits) << "\n";
  out << "two_resolution_bound," << rational_decimal(bound, cfg.digits) << "\n";
  out << "two_resolution," << (two_ok ? "pass" : "fail") << "\n";
  out << "verify," << (pass ? "pass" : "fail") << "\n";
  return pass ? 0 : 1;
}

int cmd_constants(const RunConfig& cfg, std::ostream& out) {
  std::vector<ConstantRow> rows = constants_table(cfg.k);
  if (cfg.format == "json") {
    Json j{{"command", "constants"}, {"k", cfg.k}, {"constants", Json::array()}};
    for (const auto& row : rows) {
      Json item = surd_json(row.value, cfg.digits);
      Json named{{"name", row.name}};
      named.update(item);
      j["constants"].push_back(named);
    }
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "name,a_num,a_den,b_num,b_den,d,decimal\n";
  for (const auto& row : rows) {
    out << row.name << ',';
    surd_csv(out, row.value, cfg.digits);
    out << "\n";
  }
  return 0;
}

}  // namespace

std::vector<ConstantRow> constants_table(int k) {
  KContext ctx = make_context(k);
  Word ones({1}, k);
  Word all_k({k}, k);
  std::vector<ConstantRow> rows;
  rows.push_back({"alpha_minus", ctx.alpha_minus});
  rows.push_back({"alpha_plus", ctx.alpha_plus});
  rows.push_back({"cf_period_1", periodic_value(ones)});
  rows.push_back({"height_period_1", lagrange_periodic({ones})});
  rows.push_back({"cf_period_k", periodic_value(all_k)});
  rows.push_back({"height_period_k", lagrange_periodic({all_k})});
  rows.push_back({"height_period_1k", lagrange_periodic({Word({1, k}, k)})});
  return rows;
}

std::vector<PlotInterval> merge_plot_intervals(const std::vector<Surd>& weights,
                                               long long q) {
  if (q <= 0) throw std::invalid_argument("merge_plot_intervals: q must be positive");
  std::vector<Surd> sorted = weights;
  std::sort(sorted.begin(), sorted.end());
  Surd radius{Rational(1, q)};
  std::vector<PlotInterval> out;
  for (const Surd& w : sorted) {
    Surd lo = w - radius;
    Surd hi = w + radius;
    if (!out.empty() && !(out.back().hi < lo)) {
      if (out.back().hi < hi) out.back().hi = hi;
    } else {
      out.push_back({std::move(lo), std::move(hi)});
    }
  }
  return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  std::string kind_str = "lagrange";
  std::string format_str = "csv";
  std::string cache;

  CLI::App app{"Finite sets provably 1/q-close to bounded-digit Lagrange and Markov spectra"};
  app.name("spectra");
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub, bool q_required) {
    sub->add_option("--k", cfg.k, "largest partial quotient (alphabet bound)")
        ->required()
        ->check(CLI::Range(1, 200));
    auto* q_opt = sub->add_option("--q", cfg.q, "resolution denominator")
                      ->check(CLI::PositiveNumber);
    if (q_required) q_opt->required();
    sub->add_option("--kind", kind_str, "which spectrum to approximate")
        ->check(CLI::IsMember({"lagrange", "markov"}));
    sub->add_option("--format", format_str, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--digits", cfg.digits, "decimal digits in rendered values")
        ->check(CLI::Range(1, 400));
    sub->add_option("--cache", cache, "cylinder cache directory (or SPECTRA_CACHE)");
    sub->add_option("--maxlen", cfg.maxlen, "verification net period bound")
        ->check(CLI::Range(1, 19));
    sub->add_option("--max-shift-edges", cfg.max_shift_edges,
                    "abort if the shift edge estimate exceeds this")
        ->check(CLI::PositiveNumber);
    return sub;
  };

  add_common(app.add_subcommand("compute", "print the sorted weight set"), true);
  add_common(app.add_subcommand("plotdata", "print merged 1/q-fattened intervals"), true);
  add_common(app.add_subcommand("stats", "print structural counts and timings"), true);
  CLI::App* verify =
      add_common(app.add_subcommand("verify", "check against the periodic-orbit oracle"), true);
  verify->add_flag("--inject-error", cfg.inject_error)->group("");
  add_common(app.add_subcommand("constants", "print the exact reference constants"), false);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  cfg.kind = kind_str == "markov" ? Kind::markov : Kind::lagrange;
  cfg.format = format_str;
  if (!cache.empty()) cfg.cache_dir = cache;

  try {
    if (app.got_subcommand("compute")) {
      cfg.command = "compute";
      return cmd_compute(cfg, out, err);
    }
    if (cfg.k == 1) {
      throw std::invalid_argument("k = 1 has a closed form; only compute supports it");
    }
    if (app.got_subcommand("plotdata")) {
      cfg.command = "plotdata";
      return cmd_plotdata(cfg, out, err);
    }
    if (app.got_subcommand("stats")) {
      cfg.command = "stats";
      return cmd_stats(cfg, out, err);
    }
    if (app.got_subcommand("verify")) {
      cfg.command = "verify";
      return cmd_verify(cfg, out, err);
    }
    cfg.command = "constants";
    return cmd_constants(cfg, out);
  } catch (const std::logic_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  args.reserve(argc > 0 ? static_cast<std::size_t>(argc - 1) : 0);
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_cli(args, out, err);
}

}  // namespace spectra
