#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "padicmin/conjugacy.hpp"
#include "padicmin/error.hpp"
#include "padicmin/serialize.hpp"
#include "padicmin/sweep.hpp"

namespace padicmin::cli {

namespace {

using Json = nlohmann::ordered_json;

std::optional<std::uint64_t> env_u64(const char* name) {
  const char* raw = std::getenv(name);
  if (!raw || !*raw) return std::nullopt;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (*end != '\0') {
    throw Error(ErrorCode::kMalformedInput, std::string(name) + " is not a number: " + raw);
  }
  return v;
}

IntPolynomial polynomial_of(const CliConfig& c) {
  if (c.coeffs.empty()) throw Error(ErrorCode::kMalformedInput, "--coeffs is required");
  return IntPolynomial(Prime(c.prime), parse_coefficients(c.coeffs));
}

int require_level(const CliConfig& c) {
  if (!c.level) throw Error(ErrorCode::kMalformedInput, "--level is required");
  return *c.level;
}

}  // namespace

Limits limits_from_environment() {
  Limits l;
  if (auto v = env_u64("PADICMIN_TABLE_BOUND")) l.table_bound = *v;
  if (auto v = env_u64("PADICMIN_WORK_BUDGET")) l.work_budget = *v;
  return l;
}

int cmd_analyze(const CliConfig& config, std::ostream& out, std::ostream& err) {
  const IntPolynomial f = polynomial_of(config);
  const auto closed = closed_form_verdict(f);
  const MinimalityVerdict delta = minimal_general(f, config.limits);
  const bool agree = !closed || closed->minimal == delta.minimal;

  if (config.format == OutputFormat::kJson) {
    Json j;
    j["prime"] = f.prime().value();
    j["coefficients"] = format_coefficients(f.coefficients());
    j["minimal"] = delta.minimal;
    j["closed_form"] = closed ? Json::parse(verdict_to_json(*closed)) : Json(nullptr);
    j["delta_rule"] = Json::parse(verdict_to_json(delta));
    j["agree"] = agree;
    out << j.dump() << '\n';
  } else {
    out << "polynomial: " << to_string(f.poly()) << " over Z_" << f.prime().value() << '\n';
    if (closed) {
      out << "\n[closed form]\n" << render_verdict_text(*closed);
    }
    out << "\n[delta rule, delta = " << delta_level(f.prime()) << "]\n"
        << render_verdict_text(delta);
    if (closed) out << "\nagreement: " << (agree ? "yes" : "NO") << '\n';
  }
  if (!agree) {
    err << "error: closed form and delta-rule disagree\n";
    return kExitError;
  }
  return delta.minimal ? kExitMinimal : kExitNotMinimal;
}

int cmd_cycles(const CliConfig& config, std::ostream& out, std::ostream&) {
  const IntPolynomial f = polynomial_of(config);
  const int level = require_level(config);
  const auto table = reduced_map_table(f, level, config.limits);
  const auto d = cycle_decomposition(table);
  if (config.format == OutputFormat::kJson) {
    out << cycles_to_json(f, d) << '\n';
  } else {
    out << "polynomial: " << to_string(f.poly()) << " over Z_" << f.prime().value() << '\n'
        << render_cycles_text(d, table.size());
  }
  return 0;
}

int cmd_conjugacy(const CliConfig& config, std::ostream& out, std::ostream& err) {
  const IntPolynomial f = polynomial_of(config);
  if (config.n_max) {
    const TowerReport t = verify_conjugacy_tower(f, *config.n_max, config.limits);
    if (config.format == OutputFormat::kJson) {
      out << tower_to_json(f, t) << '\n';
    } else {
      for (const auto& l : t.levels) {
        out << "level " << l.level << ": conjugation " << (l.conjugation ? "ok" : "FAIL")
            << ", compatible with next " << (l.compatible_with_next ? "ok" : "FAIL") << '\n';
      }
      out << "tower: " << (t.all_pass() ? "pass" : "FAIL") << '\n';
    }
    if (!t.all_pass()) {
      err << "error: conjugacy tower check failed\n";
      return kExitError;
    }
    return 0;
  }
  const ConjugacyTable t = build_psi(f, require_level(config), config.limits);
  if (config.format == OutputFormat::kJson) {
    Json j;
    j["prime"] = f.prime().value();
    j["coefficients"] = format_coefficients(f.coefficients());
    j["level"] = t.level;
    j["psi"] = t.psi;
    out << j.dump() << '\n';
  } else {
    write_conjugacy_table(out, t);
  }
  return 0;
}

int cmd_stream(const CliConfig& config, std::ostream& out, std::ostream&) {
  const IntPolynomial f = polynomial_of(config);
  const int level = require_level(config);

  // Prefer a Z_p-wide certificate; fall back to checking this level.
  std::optional<StreamCertificate> cert;
  if (auto size = prime_power_u64(f.prime(), delta_level(f.prime()));
      size && *size <= config.limits.table_bound) {
    const MinimalityVerdict v = minimal_general(f, config.limits);
    if (v.minimal) cert = StreamCertificate::from_verdict(f, v);
  }
  if (!cert) cert = StreamCertificate::by_full_cycle_check(f, level, config.limits);

  Integer seed;
  try {
    seed = Integer(config.seed, 10);
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::kMalformedInput, "malformed --seed '" + config.seed + "'");
  }
  FullCycleStream stream(*cert, level, seed, config.limits);
  const std::uint64_t count = config.count.value_or(stream.period());
  if (config.format == OutputFormat::kJson) {
    Json j;
    j["prime"] = f.prime().value();
    j["level"] = level;
    j["seed"] = stream.seed();
    j["count"] = count;
    Json values = Json::array();
    for (std::uint64_t i = 0; i < count; ++i) values.push_back(stream.next());
    j["values"] = values;
    out << j.dump() << '\n';
  } else {
    write_stream(out, stream, count, config.digits ? StreamFormat::kDigits : StreamFormat::kDecimal);
  }
  return 0;
}

int cmd_sweep(const CliConfig& config, std::ostream& out, std::ostream& err) {
  SweepConfig s;
  s.prime = Prime(config.prime);
  s.degree = config.degree;
  const std::uint64_t p = s.prime.value();
  s.coefficient_bound = config.coefficient_bound.value_or(p == 2 ? 8 : p * p);
  s.constant_term = config.constant_term;
  s.n_max = config.n_max.value_or(delta_level(s.prime));
  s.threads = config.threads;
  s.samples = config.samples;
  char* end = nullptr;
  s.seed = std::strtoull(config.seed.c_str(), &end, 10);
  if (config.seed.empty() || *end != '\0') {
    throw Error(ErrorCode::kMalformedInput, "malformed --seed '" + config.seed + "'");
  }
  s.limits = config.limits;

  const SweepReport r = run_sweep(s);
  if (config.format == OutputFormat::kJson) {
    out << sweep_to_json(s, r) << '\n';
  } else {
    out << "sweep over Z_" << p << ": degree <= " << s.degree << ", a_0 = " << s.constant_term
        << ", a_i in [0, " << s.coefficient_bound << "), n_max = " << s.n_max << '\n';
    if (r.sampled) out << "sampled " << r.examined << " tuples (seed " << r.seed << ")\n";
    out << "examined: " << r.examined << '\n'
        << "agree-minimal: " << r.agree_minimal << '\n'
        << "agree-nonminimal: " << r.agree_nonminimal << '\n'
        << "degenerate (constant): " << r.degenerate << '\n'
        << "disagreements: " << r.disagreements << '\n';
    if (r.first_counterexample) {
      out << "first counterexample: " << format_coefficients(*r.first_counterexample) << '\n';
      for (const auto& v : r.counterexample_violations) out << "  " << v << '\n';
    }
  }
  if (r.disagreements != 0) {
    err << "error: " << r.disagreements << " disagreements\n";
    return 1;
  }
  return 0;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliConfig config;
  std::string format = "text";
  std::optional<std::uint64_t> table_bound;
  std::optional<std::uint64_t> work_budget;
  std::string seed_text = "0";

  CLI::App app{"Minimality of polynomial dynamics on the p-adic integers", "padicmin"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  auto common = [&](CLI::App* sub) {
    sub->add_option("--prime,-p", config.prime, "prime p")->required();
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--table-bound", table_bound, "largest p^n table to materialize");
    sub->add_option("--threads", config.threads, "worker threads (sweep only)");
  };

  auto* analyze = app.add_subcommand("analyze", "decide minimality of f on Z_p");
  common(analyze);
  analyze->add_option("--coeffs,-c", config.coeffs, "constant-first coefficients, e.g. 1,3,0,2")
      ->required();

  auto* cycles = app.add_subcommand("cycles", "cycle decomposition of f mod p^n");
  common(cycles);
  cycles->add_option("--coeffs,-c", config.coeffs)->required();
  cycles->add_option("--level,-n", config.level)->required();

  auto* conjugacy = app.add_subcommand("conjugacy", "conjugacy psi_n to x -> x + 1");
  common(conjugacy);
  conjugacy->add_option("--coeffs,-c", config.coeffs)->required();
  conjugacy->add_option("--level,-n", config.level, "print psi_n as 'x psi[x]' rows");
  conjugacy->add_option("--nmax", config.n_max, "verify psi_1..psi_nmax instead");

  auto* stream = app.add_subcommand("stream", "full-cycle residue stream");
  common(stream);
  stream->add_option("--coeffs,-c", config.coeffs)->required();
  stream->add_option("--level,-n", config.level)->required();
  stream->add_option("--seed", seed_text);
  stream->add_option("--count", config.count, "values to emit (default p^n)");
  stream->add_flag("--digits", config.digits, "packed base-p digits with a header line");

  auto* sweep = app.add_subcommand("sweep", "cross-validate deciders over a coefficient box");
  common(sweep);
  sweep->add_option("--degree,-d", config.degree)->check(CLI::PositiveNumber);
  sweep->add_option("--coeff-bound", config.coefficient_bound,
                    "a_1..a_d range over [0, bound)");
  sweep->add_option("--constant", config.constant_term, "fixed a_0");
  sweep->add_option("--nmax", config.n_max);
  sweep->add_option("--samples", config.samples, "sample this many tuples instead");
  sweep->add_option("--seed", seed_text);
  sweep->add_option("--work-budget", work_budget);

  config.threads = std::max(1u, std::thread::hardware_concurrency());

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitError;
  }

  try {
    config.limits = limits_from_environment();
    if (table_bound) config.limits.table_bound = *table_bound;
    if (work_budget) config.limits.work_budget = *work_budget;
    config.format = format == "json" ? OutputFormat::kJson : OutputFormat::kText;
    config.seed = seed_text;
    if (config.threads == 0) config.threads = 1;

    if (analyze->parsed()) config.command = Command::kAnalyze;
    if (cycles->parsed()) config.command = Command::kCycles;
    if (conjugacy->parsed()) config.command = Command::kConjugacy;
    if (stream->parsed()) config.command = Command::kStream;
    if (sweep->parsed()) config.command = Command::kSweep;

    if (analyze->parsed()) return cmd_analyze(config, out, err);
    if (cycles->parsed()) return cmd_cycles(config, out, err);
    if (conjugacy->parsed()) {
      if (!config.level && !config.n_max) {
        throw Error(ErrorCode::kMalformedInput, "conjugacy needs --level or --nmax");
      }
      return cmd_conjugacy(config, out, err);
    }
    if (stream->parsed()) return cmd_stream(config, out, err);
    return cmd_sweep(config, out, err);
  } catch (const Error& e) {
    err << "error (" << error_code_name(e.code()) << "): " << e.what() << '\n';
    return kExitError;
  }
}

}  // namespace padicmin::cli
