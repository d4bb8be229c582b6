#pragma once

// Command-line front end. run_cli() is separate from main() so tests can drive
// it in-process with string streams.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "staircase.hpp"

namespace staircase::cli {

using nlohmann::ordered_json;

inline constexpr const char* kSchema = "staircase-cli/1";
inline constexpr const char* kSeedEnv = "STAIRCASE_SEED";
inline constexpr std::uint64_t kDefaultSeed = 20240601;

enum class Format { Text, Csv, Json };

struct RunConfig {
  std::string subcommand;
  int n = 0;
  int n_max = 5;
  std::uint64_t seed = kDefaultSeed;
  std::string seed_source = "default";
  std::size_t count = 1000;
  Format format = Format::Text;
  std::string out_path;
  double tol = 1e-10;
  bool timestamp = true;

  std::string stat = "r";
  bool table = false;
  bool stats_only = false;
  std::string sample_output = "stats";
  bool exact = false;
  std::string asep_mode = "verify";
  std::string suite = "all";
  int order = 12;
  std::string alpha = "1/2", beta = "1/2", gamma = "1/4", delta = "1/4", q = "1/5", u = "3/5";
};

inline const char* format_name(Format f) {
  switch (f) {
    case Format::Text: return "text";
    case Format::Csv: return "csv";
    case Format::Json: return "json";
  }
  return "text";
}

inline ordered_json rational_json(const Rational& v) {
  const auto [num, den] = to_fraction_strings(v);
  return {{"num", num}, {"den", den}};
}

inline ordered_json config_json(const RunConfig& c) {
  ordered_json j;
  j["subcommand"] = c.subcommand;
  j["n"] = c.n;
  j["format"] = format_name(c.format);
  if (c.subcommand == "sample") {
    j["count"] = c.count;
    j["output"] = c.sample_output;
    j["exact_only"] = c.exact;
  }
  if (c.subcommand == "dist" || c.subcommand == "moments") j["stat"] = c.stat;
  if (c.subcommand == "verify") {
    j["suite"] = c.suite;
    j["n_max"] = c.n_max;
    j["tol"] = c.tol;
  }
  if (c.subcommand == "series-check") j["order"] = c.order;
  if (c.subcommand == "asep") {
    j["mode"] = c.asep_mode;
    j["tol"] = c.tol;
    j["exact"] = c.exact;
    j["params"] = {{"alpha", c.alpha}, {"beta", c.beta}, {"gamma", c.gamma},
                   {"delta", c.delta}, {"q", c.q},       {"u", c.u}};
  }
  return j;
}

inline std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

inline ordered_json meta_json(const RunConfig& c) {
  ordered_json m;
  m["version"] = kVersion;
  m["seed"] = c.seed;
  m["seed_source"] = c.seed_source;
  m["rng"] = kRngName;
  m["config"] = config_json(c);
  if (c.timestamp) m["timestamp"] = utc_timestamp();
  return m;
}

/// "# key=value" header lines for text and CSV output.
inline std::string meta_comment(const RunConfig& c) {
  std::ostringstream os;
  os << "# staircase " << kVersion << " seed=" << c.seed << " (" << c.seed_source << ")"
     << " config=" << config_json(c).dump() << '\n';
  if (c.timestamp) os << "# timestamp=" << utc_timestamp() << '\n';
  return os.str();
}

struct Emitter {
  const RunConfig& cfg;
  std::ostream& out;

  void json(ordered_json result) const {
    ordered_json doc;
    doc["schema"] = kSchema;
    doc["meta"] = meta_json(cfg);
    doc["result"] = std::move(result);
    out << doc.dump(2) << '\n';
  }
  void text(const std::string& body) const { out << meta_comment(cfg) << body; }
};

// --- subcommands -----------------------------------------------------------

inline int cmd_count(const RunConfig& c, const Emitter& e) {
  const Integer total = total_count(c.n);
  if (c.format == Format::Json) {
    ordered_json r{{"n", c.n}, {"count", to_string(total)}};
    if (c.table && c.n >= 1) {
      const CompletionTable t(c.n);
      ordered_json rows = ordered_json::array();
      for (int k = 0; k <= c.n; ++k)
        for (int rr = 0; rr <= c.n - k; ++rr) rows.push_back({{"k", k}, {"r", rr}, {"N", to_string(t.at(k, rr))}});
      r["table"] = rows;
    }
    e.json(r);
    return 0;
  }
  std::ostringstream os;
  if (c.table && c.n >= 1) {
    const CompletionTable t(c.n);
    os << "k,r,N\n";
    for (int k = 0; k <= c.n; ++k)
      for (int rr = 0; rr <= c.n - k; ++rr) os << k << ',' << rr << ',' << t.at(k, rr) << '\n';
  } else {
    os << total << '\n';
  }
  e.text(os.str());
  return 0;
}

inline std::string stats_csv_header() { return "n,r,delta,gamma,a_diag,b_diag\n"; }
inline std::string stats_csv_row(int n, const StatVector& s) {
  return std::to_string(n) + ',' + std::to_string(s.r) + ',' + std::to_string(s.delta) + ',' +
         std::to_string(s.gamma) + ',' + std::to_string(s.a_diag) + ',' + std::to_string(s.b_diag) + '\n';
}
inline ordered_json stats_json(const StatVector& s) {
  return {{"r", s.r}, {"delta", s.delta}, {"gamma", s.gamma}, {"a_diag", s.a_diag}, {"b_diag", s.b_diag}};
}

inline int cmd_enumerate(const RunConfig& c, const Emitter& e) {
  if (c.n > 7) throw std::invalid_argument("enumerate is limited to n <= 7");
  if (c.format == Format::Json) {
    ordered_json items = ordered_json::array();
    const Integer total = enumerate_all(c.n, [&](const Tableau& t) {
      if (c.stats_only)
        items.push_back(stats_json(statistics(t)));
      else
        items.push_back(to_line(t));
    });
    e.json({{"n", c.n}, {"count", to_string(total)}, {c.stats_only ? "stats" : "tableaux", items}});
    return 0;
  }
  e.out << meta_comment(c);
  if (c.stats_only) e.out << stats_csv_header();
  enumerate_all(c.n, [&](const Tableau& t) {
    if (c.stats_only)
      e.out << stats_csv_row(c.n, statistics(t));
    else
      e.out << to_line(t) << '\n';
  });
  return 0;
}

inline int cmd_sample(const RunConfig& c, const Emitter& e) {
  const SamplerOptions opts{c.exact};
  if (c.sample_output == "tableaux") {
    std::vector<std::string> lines;
    for (std::size_t i = 0; i < c.count; ++i) lines.push_back(to_line(sample_uniform(c.n, c.seed, i, opts)));
    if (c.format == Format::Json) {
      e.json({{"n", c.n}, {"tableaux", lines}});
    } else {
      std::string body;
      for (const auto& l : lines) body += l + '\n';
      e.text(body);
    }
    return 0;
  }
  const auto stats = sample_statistics(c.n, c.count, c.seed, opts);
  if (c.sample_output == "summary" || c.format == Format::Json) {
    ordered_json summary;
    const char* names[] = {"r", "delta", "gamma", "a_diag", "b_diag"};
    for (int k = 0; k < 5; ++k) {
      double sum = 0, sq = 0;
      for (const auto& s : stats) {
        const int v[] = {s.r, s.delta, s.gamma, s.a_diag, s.b_diag};
        sum += v[k];
        sq += static_cast<double>(v[k]) * v[k];
      }
      const double m = sum / static_cast<double>(stats.size());
      summary[names[k]] = {{"mean", m}, {"variance", sq / static_cast<double>(stats.size()) - m * m}};
    }
    ordered_json r{{"n", c.n}, {"count", c.count}, {"summary", summary}};
    if (c.sample_output == "stats") {
      ordered_json rows = ordered_json::array();
      for (const auto& s : stats) rows.push_back(stats_json(s));
      r["stats"] = rows;
    }
    e.json(r);
    return 0;
  }
  std::string body = stats_csv_header();
  for (const auto& s : stats) body += stats_csv_row(c.n, s);
  e.text(body);
  return 0;
}

inline ExactPMF pmf_for(const std::string& stat, int n) {
  if (stat == "r") return dist_r(n);
  if (stat == "delta") return dist_delta(n);
  if (stat == "gamma") return dist_gamma(n);
  if (stat == "a") return dist_A(n);
  if (stat == "b") return dist_B(n);
  throw std::invalid_argument("unknown statistic " + stat);
}

inline int cmd_dist(const RunConfig& c, const Emitter& e) {
  const ExactPMF p = pmf_for(c.stat, c.n);
  const Integer den = [&] {
    Integer d = 1;
    for (const auto& x : p.probs) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), x.get_den_mpz_t());
    return d;
  }();
  if (c.format == Format::Json) {
    ordered_json rows = ordered_json::array();
    for (long v = p.min_value(); v <= p.max_value(); ++v) rows.push_back({{"value", v}, {"p", rational_json(p.at(v))}});
    e.json({{"stat", c.stat}, {"n", c.n}, {"pmf", rows}});
    return 0;
  }
  std::ostringstream os;
  os << "value,numerator,denominator\n";
  for (long v = p.min_value(); v <= p.max_value(); ++v) {
    const Rational x = p.at(v);
    os << v << ',' << x.get_num() * (den / x.get_den()) << ',' << den << '\n';
  }
  e.text(os.str());
  return 0;
}

inline int cmd_moments(const RunConfig& c, const Emitter& e) {
  Moments m;
  if (c.stat == "r")
    m = moments_r(c.n);
  else if (c.stat == "delta" || c.stat == "gamma")
    m = moments_delta(c.n);
  else if (c.stat == "a")
    m = moments_A(c.n);
  else
    m = moments_of(pmf_for(c.stat, c.n));
  if (!(m == moments_of(pmf_for(c.stat, c.n)))) throw std::logic_error("closed-form moments differ from the pmf");
  if (c.format == Format::Json) {
    e.json({{"stat", c.stat}, {"n", c.n}, {"mean", rational_json(m.mean)}, {"variance", rational_json(m.variance)}});
    return 0;
  }
  std::ostringstream os;
  if (c.format == Format::Csv)
    os << "stat,n,mean,variance\n" << c.stat << ',' << c.n << ',' << m.mean << ',' << m.variance << '\n';
  else
    os << "mean " << m.mean << "\nvariance " << m.variance << '\n';
  e.text(os.str());
  return 0;
}

inline int cmd_triangles(const RunConfig& c, const Emitter& e) {
  const TriangleV v = build_V(c.n);
  const TriangleW w = build_W(c.n);
  const auto c1 = build_c_at_one(c.n);
  if (c.format == Format::Json) {
    ordered_json r;
    for (const auto& [name, tri] : {std::pair{"V", &v}, std::pair{"W", &w}, std::pair{"c1", &c1}}) {
      ordered_json rows = ordered_json::array();
      for (int m = 0; m <= c.n; ++m) {
        ordered_json row = ordered_json::array();
        for (const auto& x : tri->row(m)) row.push_back(to_string(x));
        rows.push_back(row);
      }
      r[name] = rows;
    }
    e.json(r);
    return 0;
  }
  std::ostringstream os;
  os << "triangle,n,k,value\n";
  for (const auto& [name, tri] : {std::pair{"V", &v}, std::pair{"W", &w}, std::pair{"c1", &c1}})
    for (int m = 0; m <= c.n; ++m)
      for (int k = 0; k <= m; ++k) os << name << ',' << m << ',' << k << ',' << (*tri)(m, k) << '\n';
  e.text(os.str());
  return 0;
}

inline int cmd_series(const RunConfig& c, const Emitter& e) {
  const SeriesCheckReport rep = bivariate_series_check(static_cast<std::size_t>(c.order));
  const PoleConstants pc = pole_constants();
  const bool poles = pc.r0 == 1 && pc.r1 == make_rational(-1L, 2L) && pc.r2 == make_rational(1L, 6L);
  if (c.format == Format::Json) {
    ordered_json r{{"order", c.order}, {"ok", rep.ok}, {"poles_ok", poles}};
    r["first_mismatch"] = rep.first_mismatch ? ordered_json{rep.first_mismatch->first, rep.first_mismatch->second}
                                             : ordered_json(nullptr);
    r["pole_constants"] = {rational_json(pc.r0), rational_json(pc.r1), rational_json(pc.r2)};
    e.json(r);
  } else {
    std::ostringstream os;
    os << "series through z^" << c.order << ": " << (rep.ok ? "match" : "MISMATCH") << '\n'
       << "pole constants: " << pc.r0 << ' ' << pc.r1 << ' ' << pc.r2 << '\n';
    e.text(os.str());
  }
  return rep.ok && poles ? 0 : 1;
}

inline int cmd_asep(const RunConfig& c, const Emitter& e) {
  const ASEPParams p = make_params(c.alpha, c.beta, c.gamma, c.delta, c.q, c.u);
  const std::uint32_t states = std::uint32_t{1} << c.n;
  auto word = [&](std::uint32_t s) { return TypeWord::from_bits(s, c.n).ascii(); };
  if (c.asep_mode == "stationary") {
    const ASEPChain chain = build_chain(c.n, p);
    ordered_json rows = ordered_json::array();
    std::ostringstream os;
    os << "state,probability\n";
    if (c.exact) {
      const auto pi = stationary_exact(chain, p);
      for (std::uint32_t s = 0; s < states; ++s) {
        rows.push_back({{"state", word(s)}, {"p", rational_json(pi[s])}});
        os << word(s) << ',' << pi[s] << '\n';
      }
    } else {
      const auto pi = stationary(chain, p);
      for (std::uint32_t s = 0; s < states; ++s) {
        rows.push_back({{"state", word(s)}, {"p", pi[s]}});
        os << word(s) << ',' << std::setprecision(17) << pi[s] << '\n';
      }
    }
    if (c.format == Format::Json)
      e.json({{"mode", "stationary"}, {"stationary", rows}});
    else
      e.text(os.str());
    return 0;
  }
  if (c.asep_mode == "partition") {
    const PartitionFunctions z = partition_functions(c.n, p);
    if (c.format == Format::Json) {
      ordered_json rows = ordered_json::array();
      for (std::uint32_t s = 0; s < states; ++s) rows.push_back({{"state", word(s)}, {"Z", rational_json(z.by_type[s])}});
      e.json({{"mode", "partition"}, {"Z_n", rational_json(z.total)}, {"by_type", rows}});
    } else {
      std::ostringstream os;
      os << "state,Z\n";
      for (std::uint32_t s = 0; s < states; ++s) os << word(s) << ',' << z.by_type[s] << '\n';
      os << "total," << z.total << '\n';
      e.text(os.str());
    }
    return 0;
  }
  if (c.asep_mode != "verify") throw std::invalid_argument("unknown asep mode " + c.asep_mode);
  const SteadyStateReport rep = verify_steady_state(c.n, p, c.tol, c.exact);
  if (c.format == Format::Json) {
    ordered_json r{{"mode", "verify"}, {"n", c.n}, {"max_deviation", rep.max_deviation},
                   {"tolerance", rep.tolerance}, {"pass", rep.pass}};
    if (rep.exact) r["exact_max_deviation"] = rational_json(rep.exact_max_deviation);
    e.json(r);
  } else {
    std::ostringstream os;
    os << "max deviation " << rep.max_deviation << " tolerance " << rep.tolerance << ' '
       << (rep.pass ? "PASS" : "FAIL") << '\n';
    e.text(os.str());
  }
  return rep.pass ? 0 : 1;
}

inline ordered_json check_json(const CheckResult& r) {
  ordered_json m;
  for (const auto& [k, v] : r.measured) m[k] = v;
  return {{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail}, {"measured", m}};
}

inline int cmd_verify(const RunConfig& c, const Emitter& e) {
  if (c.suite != "all") throw std::invalid_argument("only --suite all is available");
  const auto results = verify_suite({c.n_max, c.tol, c.seed});
  const bool ok = all_passed(results);
  if (c.format == Format::Text) {
    std::ostringstream os;
    for (const auto& r : results) os << (r.pass ? "PASS " : "FAIL ") << r.id << (r.detail.empty() ? "" : ": " + r.detail) << '\n';
    e.text(os.str());
  } else {
    ordered_json checks = ordered_json::array();
    std::size_t failures = 0;
    for (const auto& r : results) {
      checks.push_back(check_json(r));
      failures += r.pass ? 0 : 1;
    }
    e.json({{"n_max", c.n_max}, {"failures", failures}, {"checks", checks}});
  }
  return ok ? 0 : 1;
}

// --- entry point -----------------------------------------------------------

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact enumeration, sampling and statistics of staircase tableaux"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  RunConfig cfg;
  std::optional<std::uint64_t> seed_flag;
  std::string format = "text";
  bool no_timestamp = false;
  app.add_option("--seed", seed_flag, "Random seed (default: $" + std::string(kSeedEnv) + " or 20240601)");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));
  app.add_option("--out", cfg.out_path, "Write output to this path instead of stdout");
  app.add_flag("--no-timestamp", no_timestamp, "Omit the timestamp from output metadata");

  auto need_n = [&](CLI::App* sub, int max_n) {
    sub->add_option("--n", cfg.n, "Tableau size")->required()->check(CLI::Range(1, max_n));
  };
  auto* count = app.add_subcommand("count", "Number of tableaux of size n");
  count->add_option("--n", cfg.n, "Tableau size")->required()->check(CLI::Range(0, 100000));
  count->add_flag("--table", cfg.table, "Print the completion table N(k, r) instead");
  auto* enumerate = app.add_subcommand("enumerate", "Stream every tableau of size n");
  need_n(enumerate, 7);
  enumerate->add_flag("--stats", cfg.stats_only, "Emit statistics rows instead of tableaux");
  auto* sample = app.add_subcommand("sample", "Uniform random tableaux");
  need_n(sample, 1000000);
  sample->add_option("--count", cfg.count, "Number of draws")->check(CLI::PositiveNumber);
  sample->add_option("--output", cfg.sample_output, "tableaux | stats | summary")
      ->check(CLI::IsMember({"tableaux", "stats", "summary"}));
  sample->add_flag("--exact-only", cfg.exact, "Settle every comparison in exact arithmetic");
  auto* dist = app.add_subcommand("dist", "Exact distribution of a statistic");
  need_n(dist, 100000);
  dist->add_option("--stat", cfg.stat, "r | delta | gamma | a | b")->check(CLI::IsMember({"r", "delta", "gamma", "a", "b"}));
  auto* moments = app.add_subcommand("moments", "Exact mean and variance of a statistic");
  need_n(moments, 100000);
  moments->add_option("--stat", cfg.stat, "r | delta | gamma | a | b")
      ->check(CLI::IsMember({"r", "delta", "gamma", "a", "b"}));
  auto* triangles = app.add_subcommand("triangles", "Rows of the V, W and c(1) triangles");
  need_n(triangles, 2000);
  auto* series = app.add_subcommand("series-check", "Check the bivariate series against V");
  series->add_option("--order", cfg.order, "Highest power of z")->check(CLI::Range(1, 40));
  series->add_option("--n", cfg.order, "Alias for --order")->check(CLI::Range(1, 40));
  auto* asep = app.add_subcommand("asep", "Exclusion process: stationary law, partition functions, identity check");
  need_n(asep, kMaxChainSites);
  asep->add_option("--mode", cfg.asep_mode, "stationary | partition | verify")
      ->check(CLI::IsMember({"stationary", "partition", "verify"}));
  asep->add_option("--tol", cfg.tol, "Tolerance for verify")->check(CLI::PositiveNumber);
  asep->add_flag("--exact", cfg.exact, "Solve the stationary law in rational arithmetic");
  for (auto [flag, target] : {std::pair{"--alpha", &cfg.alpha}, std::pair{"--beta", &cfg.beta},
                              std::pair{"--gamma", &cfg.gamma}, std::pair{"--delta", &cfg.delta},
                              std::pair{"--q", &cfg.q}, std::pair{"--u", &cfg.u}})
    asep->add_option(flag, *target, "Rational in [0, 1], e.g. 1/3");
  auto* verify = app.add_subcommand("verify", "Run the self-check suite");
  verify->add_option("--suite", cfg.suite, "Suite name")->check(CLI::IsMember({"all"}));
  verify->add_option("--n-max", cfg.n_max, "Largest enumerated size")->check(CLI::Range(1, 6));
  verify->add_option("--tol", cfg.tol, "ASEP tolerance")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  cfg.subcommand = app.get_subcommands().front()->get_name();
  cfg.format = format == "json" ? Format::Json : format == "csv" ? Format::Csv : Format::Text;
  cfg.timestamp = !no_timestamp;
  if (seed_flag) {
    cfg.seed = *seed_flag;
    cfg.seed_source = "flag";
  } else if (const char* env = std::getenv(kSeedEnv)) {
    try {
      cfg.seed = std::stoull(env);
    } catch (const std::exception&) {
      err << "error: " << kSeedEnv << " is not an unsigned integer\n";
      return 2;
    }
    cfg.seed_source = "env";
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!cfg.out_path.empty()) {
    file.open(cfg.out_path, std::ios::out | std::ios::trunc);
    if (!file) {
      err << "error: cannot write " << cfg.out_path << '\n';
      return 2;
    }
    sink = &file;
  }
  const Emitter emitter{cfg, *sink};
  try {
    const std::string& s = cfg.subcommand;
    if (s == "count") return cmd_count(cfg, emitter);
    if (s == "enumerate") return cmd_enumerate(cfg, emitter);
    if (s == "sample") return cmd_sample(cfg, emitter);
    if (s == "dist") return cmd_dist(cfg, emitter);
    if (s == "moments") return cmd_moments(cfg, emitter);
    if (s == "triangles") return cmd_triangles(cfg, emitter);
    if (s == "series-check") return cmd_series(cfg, emitter);
    if (s == "asep") return cmd_asep(cfg, emitter);
    if (s == "verify") return cmd_verify(cfg, emitter);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  err << "error: unknown subcommand\n";
  return 2;
}

}  // namespace staircase::cli
