#include <doctest.h>

#include "oracles.hpp"
#include "padicmin/error.hpp"
#include "padicmin/sweep.hpp"

using namespace padicmin;

TEST_CASE("sweep_tuple enumerates the box lexicographically") {
  SweepConfig c;
  c.prime = Prime(2);
  c.degree = 2;
  c.coefficient_bound = 3;
  CHECK(sweep_box_size(c) == 9);
  CHECK(sweep_tuple(c, 0) == std::vector<Integer>{1, 0, 0});
  CHECK(sweep_tuple(c, 1) == std::vector<Integer>{1, 0, 1});
  CHECK(sweep_tuple(c, 3) == std::vector<Integer>{1, 1, 0});
  CHECK(sweep_tuple(c, 8) == std::vector<Integer>{1, 2, 2});

  c.degree = 64;
  c.coefficient_bound = 8;
  CHECK_FALSE(sweep_box_size(c));
}

TEST_CASE("p=2 sweep over the full box") {
  SweepConfig c;
  c.prime = Prime(2);
  c.degree = 4;
  c.coefficient_bound = 8;
  c.n_max = 3;
  auto r = run_sweep(c);
  CHECK(r.examined == 4096);
  CHECK(r.disagreements == 0);
  CHECK(r.degenerate == 1);
  CHECK(r.agree_minimal + r.agree_nonminimal + r.degenerate == 4096);
  CHECK_FALSE(r.first_counterexample);

  // Independent count of minimal polynomials by the oracle.
  std::uint64_t expected = 0;
  for (oracle::i64 i = 0; i < 4096; ++i) {
    std::vector<oracle::i64> a{1, (i >> 9) & 7, (i >> 6) & 7, (i >> 3) & 7, i & 7};
    if (i == 0) continue;
    expected += oracle::full_cycle(a, 2, 3);
  }
  CHECK(r.agree_minimal == expected);
}

TEST_CASE("sweep results do not depend on the thread count") {
  SweepConfig c;
  c.prime = Prime(3);
  c.degree = 3;
  c.coefficient_bound = 9;
  c.n_max = 3;
  const auto one = run_sweep(c);
  for (unsigned threads : {2u, 3u, 7u}) {
    c.threads = threads;
    CHECK(run_sweep(c) == one);
  }
  CHECK(one.examined == 729);
  CHECK(one.disagreements == 0);
}

TEST_CASE("sampled sweeps are reproducible from the seed") {
  SweepConfig c;
  c.prime = Prime(5);
  c.degree = 4;
  c.coefficient_bound = 25;
  c.n_max = 4;
  c.samples = 200;
  c.seed = 99;
  const auto a = run_sweep(c);
  CHECK(a.sampled);
  CHECK(a.seed == 99);
  CHECK(a.examined == 200);
  CHECK(a.disagreements == 0);
  c.threads = 4;
  CHECK(run_sweep(c) == a);
}

TEST_CASE("sweeps beyond the work budget fall back to sampling") {
  SweepConfig c;
  c.prime = Prime(3);
  c.degree = 5;
  c.coefficient_bound = 9;
  c.n_max = 3;
  c.limits.work_budget = 1000;
  CHECK_THROWS_AS(run_sweep(c), Error);  // default sample count exceeds the budget
  c.samples = 500;
  auto r = run_sweep(c);
  CHECK(r.sampled);
  CHECK(r.examined == 500);
  CHECK(r.disagreements == 0);
}
