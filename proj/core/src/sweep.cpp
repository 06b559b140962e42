#include "padicmin/sweep.hpp"

#include <algorithm>
#include <random>
#include <thread>

#include "padicmin/error.hpp"

namespace padicmin {

std::optional<std::uint64_t> sweep_box_size(const SweepConfig& config) noexcept {
  std::uint64_t n = 1;
  for (int i = 0; i < config.degree; ++i) {
    if (config.coefficient_bound != 0 && n > UINT64_MAX / config.coefficient_bound) {
      return std::nullopt;
    }
    n *= config.coefficient_bound;
  }
  return n;
}

std::vector<Integer> sweep_tuple(const SweepConfig& config, std::uint64_t index) {
  std::vector<Integer> c(static_cast<std::size_t>(config.degree) + 1);
  c[0] = config.constant_term;
  for (int i = config.degree; i >= 1; --i) {
    c[static_cast<std::size_t>(i)] = static_cast<unsigned long>(index % config.coefficient_bound);
    index /= config.coefficient_bound;
  }
  return c;
}

namespace {

void tally(const SweepConfig& config, const std::vector<Integer>& coeffs, SweepReport& r) {
  ++r.examined;
  if (std::all_of(coeffs.begin() + 1, coeffs.end(), [](const Integer& a) { return a == 0; })) {
    ++r.degenerate;
    return;
  }
  IntPolynomial f(config.prime, coeffs);
  CrossValidation cv = cross_validate(f, config.n_max, config.limits);
  if (cv.consistent) {
    ++(cv.delta_rule.minimal ? r.agree_minimal : r.agree_nonminimal);
    return;
  }
  ++r.disagreements;
  if (!r.first_counterexample || coeffs < *r.first_counterexample) {
    r.first_counterexample = coeffs;
    r.counterexample_violations = cv.violations;
  }
}

void merge(SweepReport& into, const SweepReport& part) {
  into.examined += part.examined;
  into.agree_minimal += part.agree_minimal;
  into.agree_nonminimal += part.agree_nonminimal;
  into.disagreements += part.disagreements;
  into.degenerate += part.degenerate;
  if (part.first_counterexample &&
      (!into.first_counterexample || *part.first_counterexample < *into.first_counterexample)) {
    into.first_counterexample = part.first_counterexample;
    into.counterexample_violations = part.counterexample_violations;
  }
}

template <typename TupleAt>
SweepReport run_partitioned(const SweepConfig& config, std::uint64_t total, TupleAt tuple_at) {
  const unsigned workers =
      static_cast<unsigned>(std::clamp<std::uint64_t>(config.threads, 1, std::max<std::uint64_t>(total, 1)));
  std::vector<SweepReport> parts(workers);
  std::vector<std::exception_ptr> errors(workers);
  auto work = [&](unsigned w) {
    const std::uint64_t begin = total * w / workers;
    const std::uint64_t end = total * (w + 1) / workers;
    try {
      for (std::uint64_t i = begin; i < end; ++i) tally(config, tuple_at(i), parts[w]);
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  SweepReport report;
  for (const auto& part : parts) merge(report, part);
  return report;
}

}  // namespace

SweepReport run_sweep(const SweepConfig& config) {
  if (config.degree < 1) {
    throw Error(ErrorCode::kPrecondition, "sweep degree must be >= 1");
  }
  if (config.coefficient_bound < 1) {
    throw Error(ErrorCode::kPrecondition, "coefficient bound must be >= 1");
  }
  if (config.n_max < 1) {
    throw Error(ErrorCode::kPrecisionOutOfRange, "n_max must be >= 1");
  }
  checked_table_size(config.prime, std::max(config.n_max, delta_level(config.prime)),
                     config.limits.table_bound);

  const auto box = sweep_box_size(config);
  const bool over_budget = !box || *box > config.limits.work_budget;
  if (!config.samples && !over_budget) {
    SweepReport r = run_partitioned(config, *box,
                                    [&](std::uint64_t i) { return sweep_tuple(config, i); });
    r.seed = config.seed;
    return r;
  }

  const std::uint64_t count = config.samples.value_or(kDefaultSweepSamples);
  if (count > config.limits.work_budget) {
    throw Error(ErrorCode::kBoundExceeded,
                "requested " + std::to_string(count) + " samples exceeds the work budget " +
                    std::to_string(config.limits.work_budget));
  }
  // Draw every tuple up front from one generator so the sample set does not
  // depend on the worker count.
  std::mt19937_64 rng(config.seed);
  std::uniform_int_distribution<std::uint64_t> coeff(0, config.coefficient_bound - 1);
  std::vector<std::vector<Integer>> tuples(count);
  for (auto& t : tuples) {
    t.resize(static_cast<std::size_t>(config.degree) + 1);
    t[0] = config.constant_term;
    for (int i = 1; i <= config.degree; ++i) {
      t[static_cast<std::size_t>(i)] = static_cast<unsigned long>(coeff(rng));
    }
  }
  SweepReport r = run_partitioned(config, count, [&](std::uint64_t i) { return tuples[i]; });
  r.sampled = true;
  r.seed = config.seed;
  return r;
}

}  // namespace padicmin
