// Command-line front end: builds or loads the sieve, runs the counting
// experiments, and prints one JSON report per invocation on stdout.
//
// Exit codes: 0 success, 1 runtime failure, 2 usage error. Failures print a
// machine-readable {"error": {...}} object instead of a report.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "abclab/abc_count.hpp"
#include "abclab/arith.hpp"
#include "abclab/conic.hpp"
#include "abclab/lattice.hpp"
#include "abclab/lower_bound.hpp"

using nlohmann::json;

namespace {

constexpr std::uint64_t kMaxSieveLimit = 1ull << 24;

// Loads the cache named by ABC_SIEVE_CACHE when it covers the request,
// otherwise builds in memory.
abclab::SpfSieve obtain_sieve(std::uint64_t need) {
  if (need < 2) need = 2;
  if (need > kMaxSieveLimit)
    throw std::out_of_range("limit " + std::to_string(need) + " exceeds the sieve budget " +
                            std::to_string(kMaxSieveLimit));
  if (const char* cache = std::getenv("ABC_SIEVE_CACHE")) {
    if (auto loaded = abclab::load_sieve(cache); loaded && loaded->limit >= need)
      return std::move(*loaded);
  }
  return abclab::build_sieve(need);
}

json params_json(const std::string& a, const std::string& b, const std::string& c,
                 long long limit) {
  return json{{"a", a}, {"b", b}, {"c", c}, {"limit", limit}};
}

abclab::AbcParams parse_params(const std::string& a, const std::string& b, const std::string& c,
                               long long limit) {
  abclab::AbcParams p{abclab::parse_rational(a), abclab::parse_rational(b),
                      abclab::parse_rational(c), limit};
  abclab::validate_params(p);
  return p;
}

void emit_csv(const std::string& path, const std::vector<abclab::Triple>& triples,
              const abclab::SpfSieve& sieve) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open emit file: " + path);
  abclab::write_triples_csv(out, triples, sieve);
  if (!out) throw std::runtime_error("failed writing emit file: " + path);
}

struct CommandResult {
  std::string command;
  json params;
  json results;
};

int report(const CommandResult& r, std::chrono::steady_clock::time_point start) {
  double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  json out{{"command", r.command}, {"params", r.params}, {"results", r.results},
           {"wall_time_s", wall}};
  std::cout << out.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"abclab: exact counting experiments for ABC problems with radical constraints"};
  app.require_subcommand(1);

  std::string arg_a = "1/1", arg_b = "1/1", arg_c = "1/1";
  long long arg_limit = 0;
  std::string arg_emit, arg_buckets, arg_out, arg_csv;
  long long arg_terms = 10000;
  int arg_kmin = 0, arg_kmax = 0;
  long long arg_alpha = 0, arg_beta = 0, arg_gamma = 0, arg_r1 = 0, arg_r2 = 0, arg_r3 = 0;
  std::uint64_t arg_seed = 0;
  std::size_t arg_instances = 0;

  CLI::App* cmd_sieve = app.add_subcommand("sieve", "build a sieve and write the cache file");
  cmd_sieve->add_option("--limit", arg_limit, "sieve limit")->required();
  cmd_sieve->add_option("--out", arg_out, "cache file path")->required();

  CLI::App* cmd_count = app.add_subcommand("count", "exact solution count for (a, b, c, N)");
  cmd_count->add_option("--a", arg_a, "exponent a as P/Q")->required();
  cmd_count->add_option("--b", arg_b, "exponent b as P/Q")->required();
  cmd_count->add_option("--c", arg_c, "exponent c as P/Q")->required();
  cmd_count->add_option("--limit", arg_limit, "magnitude bound N")->required();
  cmd_count->add_option("--emit", arg_emit, "write solutions as CSV to this file");
  cmd_count->add_option("--buckets", arg_buckets, "dyadic bucket report: v or st");

  CLI::App* cmd_lower = app.add_subcommand("lower-bound", "constructive generator");
  cmd_lower->add_option("--a", arg_a)->required();
  cmd_lower->add_option("--b", arg_b)->required();
  cmd_lower->add_option("--c", arg_c)->required();
  cmd_lower->add_option("--limit", arg_limit)->required();
  cmd_lower->add_option("--emit", arg_emit, "write solutions as CSV to this file");
  cmd_lower->add_option("--terms", arg_terms, "terms of the main-term series");

  CLI::App* cmd_conic = app.add_subcommand("conic", "primitive points on a diagonal conic");
  cmd_conic->add_option("--alpha", arg_alpha)->required();
  cmd_conic->add_option("--beta", arg_beta)->required();
  cmd_conic->add_option("--gamma", arg_gamma)->required();
  cmd_conic->add_option("--r1", arg_r1)->required();
  cmd_conic->add_option("--r2", arg_r2)->required();
  cmd_conic->add_option("--r3", arg_r3)->required();

  CLI::App* cmd_survey = app.add_subcommand("conic-survey", "seeded random conic survey");
  cmd_survey->add_option("--seed", arg_seed)->required();
  cmd_survey->add_option("--instances", arg_instances)->required();
  cmd_survey->add_option("--csv", arg_csv, "also write rows as CSV to this file");

  CLI::App* cmd_fit = app.add_subcommand("fit", "log2 slope of counts over N = 2^k");
  cmd_fit->add_option("--a", arg_a)->required();
  cmd_fit->add_option("--b", arg_b)->required();
  cmd_fit->add_option("--c", arg_c)->required();
  cmd_fit->add_option("--kmin", arg_kmin)->required();
  cmd_fit->add_option("--kmax", arg_kmax)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    json err{{"error", {{"type", "usage"}, {"message", e.what()}}}};
    std::cout << err.dump(2) << "\n";
    return 2;
  }

  auto start = std::chrono::steady_clock::now();
  try {
    CommandResult r;
    if (cmd_sieve->parsed()) {
      if (arg_limit < 2 || static_cast<std::uint64_t>(arg_limit) > kMaxSieveLimit)
        throw std::out_of_range("sieve limit out of range");
      abclab::SpfSieve sieve = abclab::build_sieve(static_cast<std::uint64_t>(arg_limit));
      abclab::save_sieve(sieve, arg_out);
      r = {"sieve", json{{"limit", arg_limit}, {"out", arg_out}},
           json{{"limit", arg_limit}, {"path", arg_out}, {"primes", sieve.primes.size()}}};
    } else if (cmd_count->parsed()) {
      abclab::AbcParams p = parse_params(arg_a, arg_b, arg_c, arg_limit);
      abclab::SpfSieve sieve = obtain_sieve(static_cast<std::uint64_t>(p.n));
      json results;
      unsigned long long count = 0;
      if (!arg_emit.empty()) {
        std::vector<abclab::Triple> triples;
        count = abclab::count_exact(p, sieve,
                                    [&](const abclab::Triple& t) { triples.push_back(t); });
        emit_csv(arg_emit, triples, sieve);
        results["emitted"] = arg_emit;
      } else {
        count = abclab::count_exact(p, sieve);
      }
      results["count"] = count;
      if (!arg_buckets.empty()) {
        abclab::BucketKeyKind kind = abclab::parse_bucket_kind(arg_buckets);
        abclab::BucketReport rep = abclab::bucket_report(p, kind, sieve);
        json buckets = json::object();
        for (const auto& [key, cnt] : rep.buckets) {
          json cell{{"count", cnt}};
          if (auto bound = abclab::bucket_bound(kind, p, key)) cell["bound"] = *bound;
          buckets[abclab::bucket_key_to_string(kind, key)] = cell;
        }
        results["buckets"] = buckets;
        results["bucket_key"] = abclab::bucket_kind_name(kind);
        results["bucket_total"] = rep.total;
      }
      r = {"count", params_json(arg_a, arg_b, arg_c, arg_limit), results};
      if (!arg_buckets.empty()) r.params["buckets"] = arg_buckets;
    } else if (cmd_lower->parsed()) {
      abclab::AbcParams p = parse_params(arg_a, arg_b, arg_c, arg_limit);
      abclab::SpfSieve sieve = obtain_sieve(static_cast<std::uint64_t>(p.n));
      abclab::LowerBoundConfig cfg = abclab::choose_exponents(p);
      std::vector<abclab::Triple> triples = abclab::generate_solutions(cfg, sieve);
      if (!arg_emit.empty()) emit_csv(arg_emit, triples, sieve);
      abclab::BigRational predicted = abclab::predicted_main_term(cfg, arg_terms);
      json results{{"x", cfg.x},
                   {"y", cfg.y},
                   {"z", cfg.z},
                   {"count", triples.size()},
                   {"predicted_main_term", predicted.to_double()},
                   {"terms", arg_terms},
                   {"within_guaranteed_regime", abclab::within_guaranteed_regime(p)}};
      if (!arg_emit.empty()) results["emitted"] = arg_emit;
      r = {"lower-bound", params_json(arg_a, arg_b, arg_c, arg_limit), results};
      r.params["terms"] = arg_terms;
    } else if (cmd_conic->parsed()) {
      abclab::ConicInstance inst{arg_alpha, arg_beta, arg_gamma, arg_r1, arg_r2, arg_r3};
      abclab::ConicScan scan = abclab::count_primitive_points(inst);
      abclab::SpfSieve sieve = obtain_sieve(256);
      double bound = abclab::hb_bound(inst, sieve);
      json results{{"count", scan.points.size()},
                   {"hb_bound", bound},
                   {"ratio", bound > 0 ? static_cast<double>(scan.points.size()) / bound : 0.0},
                   {"definite_form", scan.definite}};
      r = {"conic",
           json{{"alpha", arg_alpha},
                {"beta", arg_beta},
                {"gamma", arg_gamma},
                {"r1", arg_r1},
                {"r2", arg_r2},
                {"r3", arg_r3}},
           results};
    } else if (cmd_survey->parsed()) {
      std::vector<abclab::ConicInstance> instances =
          abclab::random_instances(arg_seed, arg_instances);
      abclab::SpfSieve sieve = obtain_sieve(256);
      abclab::SurveyResult sr = abclab::survey(instances, sieve);
      if (!arg_csv.empty()) {
        std::ofstream out(arg_csv, std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open csv file: " + arg_csv);
        abclab::write_survey_csv(out, sr.rows);
      }
      json rows = json::array();
      for (const abclab::ConicReport& row : sr.rows) {
        rows.push_back(json{{"alpha", row.inst.alpha},
                            {"beta", row.inst.beta},
                            {"gamma", row.inst.gamma},
                            {"r1", row.inst.r1},
                            {"r2", row.inst.r2},
                            {"r3", row.inst.r3},
                            {"count", row.count},
                            {"bound", row.bound},
                            {"ratio", row.ratio},
                            {"flagged", row.flagged}});
      }
      json results{{"max_ratio", sr.max_ratio}, {"rows", rows}};
      if (!arg_csv.empty()) results["csv"] = arg_csv;
      r = {"conic-survey", json{{"seed", arg_seed}, {"instances", arg_instances}}, results};
    } else if (cmd_fit->parsed()) {
      abclab::Rational ra = abclab::parse_rational(arg_a);
      abclab::Rational rb = abclab::parse_rational(arg_b);
      abclab::Rational rc = abclab::parse_rational(arg_c);
      if (arg_kmax < 1 || arg_kmax > 62) throw std::out_of_range("kmax out of range");
      abclab::SpfSieve sieve = obtain_sieve(1ull << arg_kmax);
      abclab::ExponentFit fit = abclab::exponent_fit(ra, rb, rc, arg_kmin, arg_kmax, sieve);
      json counts = json::array(), lgs = json::array();
      for (auto [k, cnt] : fit.counts) counts.push_back(json::array({k, cnt}));
      for (auto [k, lg] : fit.log2_counts) lgs.push_back(json::array({k, lg}));
      json results{{"slope", fit.slope},       {"intercept", fit.intercept},
                   {"counts", counts},         {"log2_counts", lgs},
                   {"residuals", fit.residuals}, {"zero_ks", fit.zero_ks}};
      r = {"fit", json{{"a", arg_a}, {"b", arg_b}, {"c", arg_c}, {"kmin", arg_kmin},
                       {"kmax", arg_kmax}},
           results};
    }
    return report(r, start);
  } catch (const std::invalid_argument& e) {
    json err{{"error", {{"type", "usage"}, {"message", e.what()}}}};
    std::cout << err.dump(2) << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    json err{{"error", {{"type", "usage"}, {"message", e.what()}}}};
    std::cout << err.dump(2) << "\n";
    return 2;
  } catch (const std::exception& e) {
    json err{{"error", {{"type", "runtime"}, {"message", e.what()}}}};
    std::cout << err.dump(2) << "\n";
    return 1;
  }
}
