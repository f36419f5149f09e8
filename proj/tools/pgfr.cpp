// Command line front end: exact spectra, revival verdicts, witness search,
// family sweeps, and the brute-force relation oracle, with diff-able
// structured output.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "pgfr/report.hpp"
#include "pgfr/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitScope = 3;
constexpr int kExitCrossValidation = 4;
constexpr int kExitBudget = 5;

struct CommonArgs {
  std::int64_t n = 0;
  std::string s1_text;
  bool no_ab_coset = false;
  bool complete_inverses = false;
  std::string format = "text";
  std::string out_path;
};

void add_set_options(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--n", args.n, "Group order parameter n (group order is 4n)")->required();
  cmd->add_option("--s1", args.s1_text,
                  "Comma-separated exponents of the cyclic part of the connection set");
  cmd->add_flag("--no-ab-coset", args.no_ab_coset, "Exclude the coset <a>b from the connection set");
  cmd->add_flag("--complete-inverses", args.complete_inverses,
                "Auto-complete missing inverse exponents instead of rejecting");
}

void add_output_options(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--format", args.format, "Output format")
      ->check(CLI::IsMember({"text", "structured"}))
      ->capture_default_str();
  cmd->add_option("--out", args.out_path, "Write the report to a file instead of stdout");
}

std::vector<std::int64_t> parse_s1(const std::string& text) {
  std::vector<std::int64_t> out;
  std::string token;
  std::istringstream is(text);
  while (std::getline(is, token, ',')) {
    if (token.empty()) continue;
    std::size_t used = 0;
    const long long value = std::stoll(token, &used);
    if (used != token.size()) throw std::invalid_argument("bad exponent token: " + token);
    out.push_back(value);
  }
  return out;
}

pgfr::ConnectionSet build_set(const CommonArgs& args, std::vector<std::int64_t>& echo) {
  pgfr::ConnectionSet s;
  s.n = args.n;
  s.includes_ab_coset = !args.no_ab_coset;
  echo = parse_s1(args.s1_text);
  for (std::int64_t k : echo) s.s1.insert(k);
  if (args.complete_inverses && args.n >= 2) {
    for (std::int64_t k : echo) s.s1.insert(((2 * args.n - k) % (2 * args.n) + 2 * args.n) % (2 * args.n));
  }
  return s;
}

void emit(const pgfr::Json& report, const CommonArgs& args) {
  const std::string text =
      args.format == "structured" ? pgfr::serialize_structured(report) : pgfr::render_text(report);
  if (args.out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(args.out_path);
    out << text;
  }
}

/// Best-effort closed-form label for an eigenvalue float; the float stays
/// authoritative, this is presentation only.
std::optional<std::string> radical_label(double x) {
  const double tol = 1e-9;
  const double r = std::round(x);
  if (std::abs(x - r) < tol) return std::to_string(static_cast<long long>(r));
  const std::string sign = x < 0 ? "-" : "";
  const double ax = std::abs(x);
  for (int m = 2; m <= 99; ++m) {
    if (std::abs(ax - std::sqrt(static_cast<double>(m))) < tol)
      return sign + "sqrt(" + std::to_string(m) + ")";
  }
  for (int a = 1; a <= 9; ++a)
    for (int b = 2; b <= 9; ++b) {
      if (std::abs(ax - std::sqrt(a + std::sqrt(static_cast<double>(b)))) < tol)
        return sign + "sqrt(" + std::to_string(a) + "+sqrt(" + std::to_string(b) + "))";
      if (a > std::sqrt(static_cast<double>(b)) &&
          std::abs(ax - std::sqrt(a - std::sqrt(static_cast<double>(b)))) < tol)
        return sign + "sqrt(" + std::to_string(a) + "-sqrt(" + std::to_string(b) + "))";
    }
  for (int p = -3; p <= 3; ++p)
    for (int q = 1; q <= 3; ++q)
      for (int m = 2; m <= 9; ++m) {
        if (std::abs(2.0 * x - (p + q * std::sqrt(static_cast<double>(m)))) < tol) {
          std::ostringstream os;
          os << "(" << p << "+" << q << "*sqrt(" << m << "))/2";
          return os.str();
        }
        if (std::abs(2.0 * x - (p - q * std::sqrt(static_cast<double>(m)))) < tol) {
          std::ostringstream os;
          os << "(" << p << "-" << q << "*sqrt(" << m << "))/2";
          return os.str();
        }
      }
  return std::nullopt;
}

pgfr::Json spectrum_json_with_labels(const pgfr::SpectrumTable& table) {
  pgfr::Json j = pgfr::to_json(table);
  for (auto& entry : j["entries"]) {
    if (auto label = radical_label(entry["value"].get<double>())) entry["closed_form"] = *label;
  }
  return j;
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

int finish(pgfr::Json& report, const CommonArgs& args, const Timer& timer, int code) {
  report["timing"] = pgfr::Json{{"seconds", timer.seconds()}};
  report["exit_code"] = code;
  emit(report, args);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact revival analysis of continuous-time quantum walks on dicyclic Cayley graphs"};
  app.require_subcommand(1);

  CommonArgs args;

  // spectrum
  auto* cmd_spectrum = app.add_subcommand("spectrum", "Exact and floating eigenvalue table");
  add_set_options(cmd_spectrum, args);
  add_output_options(cmd_spectrum, args);

  // check
  auto* cmd_check = app.add_subcommand(
      "check", "Revival verdict with fast paths, oracle run, and cross-validation");
  std::int64_t bound = 3;
  std::uint64_t max_nodes = 400'000'000ULL;
  bool oracle_stop_at_one = false;
  add_set_options(cmd_check, args);
  add_output_options(cmd_check, args);
  cmd_check->add_option("--bound", bound, "Oracle enumeration bound")->capture_default_str();
  cmd_check->add_option("--max-nodes", max_nodes, "Oracle node budget")->capture_default_str();
  cmd_check->add_flag("--stop-at-gcd-one", oracle_stop_at_one,
                      "Let the oracle stop once gcd 1 is certain");

  // search
  auto* cmd_search = app.add_subcommand("search", "Numerical revival-time search");
  std::string pair_text;
  double epsilon = 1e-2;
  double t_max = 2000.0 * M_PI;
  std::size_t integer_budget = 100'000;
  std::size_t coarse_steps = 200'000;
  std::size_t top_k = 64;
  bool integers_only = false;
  add_set_options(cmd_search, args);
  add_output_options(cmd_search, args);
  cmd_search->add_option("--pair", pair_text, "Vertex pair u,v (default 0,n)");
  cmd_search->add_option("--epsilon", epsilon, "Fidelity target is 1 - epsilon")
      ->capture_default_str();
  cmd_search->add_option("--t-max", t_max, "Search horizon")->capture_default_str();
  cmd_search->add_option("--integer-budget", integer_budget, "Candidates on the 2*pi*Z sub-grid")
      ->capture_default_str();
  cmd_search->add_option("--coarse-steps", coarse_steps, "Real-grid resolution")
      ->capture_default_str();
  cmd_search->add_option("--top-k", top_k, "Candidates promoted to full evaluation")
      ->capture_default_str();
  cmd_search->add_flag("--integers-only", integers_only, "Restrict to times in 2*pi*Z");

  // sweep
  auto* cmd_sweep = app.add_subcommand("sweep", "Fast-path vs engine consistency sweep");
  std::string family_text = "all";
  std::int64_t n_max = 30;
  std::int64_t ceiling = 30;
  std::uint64_t seed = 0;
  std::size_t samples_per_n = 2;
  cmd_sweep->add_option("--family", family_text,
                        "Family name (odd-prime-power, power-of-two, two-odd-primes, "
                        "two-power-times-odd, prime-power-pair) or 'all'")
      ->capture_default_str();
  cmd_sweep->add_option("--n-max", n_max, "Largest n to sweep")->capture_default_str();
  cmd_sweep->add_option("--ceiling", ceiling, "Configured sweep ceiling")->capture_default_str();
  cmd_sweep->add_option("--seed", seed, "Seed for sampled connection sets")->required();
  cmd_sweep->add_option("--samples-per-n", samples_per_n, "Random draws per eligible n")
      ->capture_default_str();
  add_output_options(cmd_sweep, args);

  // oracle
  auto* cmd_oracle = app.add_subcommand("oracle", "Brute-force integer-relation enumeration");
  add_set_options(cmd_oracle, args);
  add_output_options(cmd_oracle, args);
  cmd_oracle->add_option("--bound", bound, "Enumeration bound")->capture_default_str();
  cmd_oracle->add_option("--max-nodes", max_nodes, "Node budget")->capture_default_str();
  cmd_oracle->add_flag("--stop-at-gcd-one", oracle_stop_at_one,
                       "Stop once gcd 1 is certain");

  CLI11_PARSE(app, argc, argv);

  Timer timer;
  pgfr::AnalysisRequest request;
  request.format = args.format;

  try {
    if (app.got_subcommand(cmd_spectrum)) {
      request.command = "spectrum";
      request.n = args.n;
      request.include_ab_coset = !args.no_ab_coset;
      pgfr::ConnectionSet set = build_set(args, request.s1);
      pgfr::Json report = pgfr::report_skeleton(request);
      const auto validation = pgfr::validate_connection_set(set);
      if (!validation.ok) {
        report["error"] = validation.message();
        return finish(report, args, timer, kExitValidation);
      }
      report["spectrum"] = spectrum_json_with_labels(pgfr::eigenvalues(set));
      return finish(report, args, timer, kExitOk);
    }

    if (app.got_subcommand(cmd_check)) {
      request.command = "check";
      request.n = args.n;
      request.include_ab_coset = !args.no_ab_coset;
      request.bound = bound;
      pgfr::ConnectionSet set = build_set(args, request.s1);
      pgfr::Json report = pgfr::report_skeleton(request);
      const auto validation = pgfr::validate_connection_set(set);
      if (!validation.ok) {
        report["error"] = validation.message();
        return finish(report, args, timer, kExitValidation);
      }
      pgfr::PgfrVerdict verdict = pgfr::decide_pgfr(set);
      report["spectrum"] = spectrum_json_with_labels(pgfr::eigenvalues(set));
      report["verdict"] = pgfr::to_json(verdict);
      pgfr::OracleOptions opts;
      opts.max_nodes = max_nodes;
      opts.stop_at_gcd_one = oracle_stop_at_one;
      pgfr::OracleResult oracle = pgfr::brute_force_oracle(set, bound, opts);
      report["oracle"] = pgfr::to_json(oracle);
      const auto mismatches = pgfr::cross_validate(verdict, oracle);
      report["cross_validation"] =
          pgfr::Json{{"agrees", mismatches.empty()}, {"mismatches", mismatches}};
      if (!mismatches.empty()) return finish(report, args, timer, kExitCrossValidation);
      return finish(report, args, timer, kExitOk);
    }

    if (app.got_subcommand(cmd_search)) {
      request.command = "search";
      request.n = args.n;
      request.include_ab_coset = !args.no_ab_coset;
      request.epsilon = epsilon;
      request.t_max = t_max;
      if (epsilon <= 0) throw CLI::ValidationError("--epsilon", "must be positive");
      pgfr::ConnectionSet set = build_set(args, request.s1);
      std::int64_t u = 0, v = args.n;
      if (!pair_text.empty()) {
        const auto comma = pair_text.find(',');
        if (comma == std::string::npos)
          throw CLI::ValidationError("--pair", "expected the form u,v");
        u = std::stoll(pair_text.substr(0, comma));
        v = std::stoll(pair_text.substr(comma + 1));
      }
      request.pair = {u, v};
      pgfr::Json report = pgfr::report_skeleton(request);
      const auto validation = pgfr::validate_connection_set(set);
      if (!validation.ok) {
        report["error"] = validation.message();
        return finish(report, args, timer, kExitValidation);
      }
      pgfr::PgfrVerdict verdict = pgfr::decide_pgfr(set);
      report["verdict"] = pgfr::to_json(verdict);
      pgfr::SearchConfig config;
      config.epsilon = epsilon;
      config.t_max = t_max;
      config.integer_budget = integer_budget;
      config.coarse_steps = coarse_steps;
      config.top_k = top_k;
      config.integer_times_only = integers_only;
      if (!verdict.admits_pgfr)
        report["banner"] = "no PGFR predicted; running report-only best-effort search";
      pgfr::SearchReport search =
          pgfr::search_revival_time(set, {u}, {v}, verdict.functional_gcd, config);
      report["search"] = pgfr::to_json(search);
      if (verdict.admits_pgfr && !search.target_reached)
        return finish(report, args, timer, kExitBudget);
      return finish(report, args, timer, kExitOk);
    }

    if (app.got_subcommand(cmd_sweep)) {
      request.command = "sweep";
      request.seed = seed;
      pgfr::Json report = pgfr::report_skeleton(request);
      report["request"]["family"] = family_text;
      report["request"]["n_max"] = n_max;
      if (n_max > ceiling) {
        report["error"] = "n_max exceeds the configured ceiling";
        return finish(report, args, timer, kExitValidation);
      }
      std::vector<pgfr::TheoremCheck::Family> families;
      if (family_text == "all") {
        families = pgfr::all_families();
      } else if (auto f = pgfr::family_from_name(family_text)) {
        families = {*f};
      } else {
        report["error"] = "unknown family: " + family_text;
        return finish(report, args, timer, kExitValidation);
      }
      pgfr::Json rows = pgfr::Json::array();
      std::size_t mismatch_count = 0, total = 0;
      for (auto family : families) {
        const auto instances =
            pgfr::generate_family_instances(family, n_max, samples_per_n, seed);
        const auto outcomes = pgfr::run_sweep(instances);
        for (const auto& o : outcomes) {
          ++total;
          if (!o.consistent) ++mismatch_count;
          pgfr::Json row;
          row["family"] = pgfr::family_name(o.instance.family);
          row["n"] = o.instance.set.n;
          row["s1"] = std::vector<std::int64_t>(o.instance.set.s1.begin(),
                                                o.instance.set.s1.end());
          row["prediction"] =
              o.instance.prediction == pgfr::TheoremCheck::Prediction::Denies ? "denies"
              : o.instance.prediction == pgfr::TheoremCheck::Prediction::Pgst ? "pgst"
                                                                              : "admits";
          row["engine_gcd"] = o.engine_gcd;
          row["engine_admits"] = o.engine_admits;
          row["consistent"] = o.consistent;
          rows.push_back(std::move(row));
        }
      }
      report["sweep"] = pgfr::Json{{"instances", total},
                                   {"mismatches", mismatch_count},
                                   {"rows", std::move(rows)}};
      if (mismatch_count > 0) return finish(report, args, timer, kExitCrossValidation);
      return finish(report, args, timer, kExitOk);
    }

    if (app.got_subcommand(cmd_oracle)) {
      request.command = "oracle";
      request.n = args.n;
      request.include_ab_coset = !args.no_ab_coset;
      request.bound = bound;
      pgfr::ConnectionSet set = build_set(args, request.s1);
      pgfr::Json report = pgfr::report_skeleton(request);
      const auto validation = pgfr::validate_connection_set(set);
      if (!validation.ok) {
        report["error"] = validation.message();
        return finish(report, args, timer, kExitValidation);
      }
      pgfr::OracleOptions opts;
      opts.max_nodes = max_nodes;
      opts.stop_at_gcd_one = oracle_stop_at_one;
      pgfr::OracleResult oracle = pgfr::brute_force_oracle(set, bound, opts);
      report["oracle"] = pgfr::to_json(oracle);
      const bool budget_hit =
          !oracle.complete && !(oracle_stop_at_one && oracle.functional_gcd == 1);
      return finish(report, args, timer, budget_hit ? kExitBudget : kExitOk);
    }
  } catch (const pgfr::ScopeError& e) {
    pgfr::Json report = pgfr::report_skeleton(request);
    report["error"] = e.what();
    return finish(report, args, timer, kExitScope);
  } catch (const std::exception& e) {
    pgfr::Json report = pgfr::report_skeleton(request);
    report["error"] = e.what();
    return finish(report, args, timer, kExitValidation);
  }
  return kExitValidation;
}
