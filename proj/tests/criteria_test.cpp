#include <array>
#include <random>

#include <doctest.h>

#include "oracles.hpp"
#include "padicmin/criteria.hpp"
#include "padicmin/error.hpp"

using namespace padicmin;

namespace {

const IntPolynomial kSharpP2(Prime(2), {1, 3, 0, 2});
const IntPolynomial kSharpP3(Prime(3), {1, 4, 0, 4, 0, 2});

std::vector<oracle::i64> to_i64(const IntPolynomial& f) {
  std::vector<oracle::i64> out;
  for (const auto& c : f.coefficients()) out.push_back(c.get_si());
  return out;
}

const Condition* find_condition(const MinimalityVerdict& v, std::string_view prefix) {
  for (const auto& c : v.conditions)
    if (c.name.starts_with(prefix)) return &c;
  return nullptr;
}

/// Tuple index -> (1, a_1, ..., a_d) with a_1 most significant.
std::vector<Integer> box_tuple(std::uint64_t index, int degree, unsigned bound) {
  std::vector<Integer> c(static_cast<std::size_t>(degree) + 1);
  c[0] = 1;
  for (int i = degree; i >= 1; --i) {
    c[static_cast<std::size_t>(i)] = static_cast<unsigned long>(index % bound);
    index /= bound;
  }
  return c;
}

bool is_constant(const std::vector<Integer>& c) {
  for (std::size_t i = 1; i < c.size(); ++i)
    if (c[i] != 0) return false;
  return true;
}

/// The degree-5 table exactly as printed, including 7 (mod 9) in case (3).
bool printed_degree5_table(const std::vector<oracle::i64>& a) {
  auto r = [&](std::size_t i) { return i < a.size() ? oracle::floor_mod(a[i], 3) : 0; };
  auto s = [&](std::initializer_list<std::size_t> idx) {
    oracle::i64 t = 0;
    for (auto i : idx) t += i < a.size() ? a[i] : 0;
    return oracle::floor_mod(t, 9);
  };
  const std::array<oracle::i64, 5> pat{r(1), r(2), r(3), r(4), r(5)};
  if (pat == std::array<oracle::i64, 5>{1, 0, 1, 0, 2}) return s({1, 3, 5}) == 7;
  if (pat == std::array<oracle::i64, 5>{1, 0, 0, 0, 0}) {
    const auto e = s({2, 4});
    return e == 0 || e == 6;
  }
  if (pat == std::array<oracle::i64, 5>{2, 1, 0, 2, 2}) return s({1, 3, 5}) == 7;
  if (pat == std::array<oracle::i64, 5>{2, 2, 0, 1, 2}) return s({2, 4}) == 0;
  return false;
}

}  // namespace

TEST_CASE("coefficient_sums") {
  CHECK(coefficient_sums(kSharpP3) == CoefficientSums{0, 10, 0, 26, false});
  CHECK(coefficient_sums(IntPolynomial(Prime(5), {1, 1})) == CoefficientSums{0, 1, 0, 1, false});
  CHECK(coefficient_sums(kSharpP2) == CoefficientSums{0, 5, 0, 9, false});

  // a_0 = 1: primed sums are the unprimed ones reduced.
  auto primed = primed_coefficient_sums(kSharpP3, 2);
  CHECK(primed.a1_odd == 1);
  CHECK(primed.d1_odd == 8);
  CHECK(primed.primed);
  CHECK_THROWS_AS(primed_coefficient_sums(IntPolynomial(Prime(3), {3, 1}), 2), Error);

  // a_0 = 2, p = 3: c_i = a_i 2^{i-1} mod 9.
  IntPolynomial g(Prime(3), {2, 1, 1, 1});
  CHECK(weighted_coefficients(g, 2) == std::vector<Integer>{1, 1, 2, 4});
  CHECK(primed_coefficient_sums(g, 2) == CoefficientSums{2, 5, 4, 13 % 9, true});
}

TEST_CASE("minimal_z2") {
  auto odo = minimal_z2(IntPolynomial(Prime(2), {1, 1}));
  CHECK(odo.minimal);
  CHECK(odo.method == Method::kClosedFormP2);
  CHECK(odo.conditions.size() == 4);
  for (const auto& c : odo.conditions) CHECK(c.pass);
  CHECK(odo.conditions.back().residues == std::vector<Integer>{1});

  auto sharp = minimal_z2(kSharpP2);
  CHECK_FALSE(sharp.minimal);
  // 2a_2 + a_1 A_1 = 0 + 3 * 5 = 15 = 3 (mod 4).
  const Condition* last = find_condition(sharp, "2a2 + a1A1");
  REQUIRE(last);
  CHECK_FALSE(last->pass);
  CHECK(last->residues == std::vector<Integer>{15 % 4});
  CHECK(last->stage == "level-3");
  CHECK(sharp.first_failing_level == 3);

  auto quad = minimal_z2(IntPolynomial(Prime(2), {1, 1, 2}));
  CHECK_FALSE(quad.minimal);
  const Condition* sum = find_condition(quad, "A0 + A1");
  REQUIRE(sum);
  CHECK_FALSE(sum->pass);
  CHECK(sum->residues == std::vector<Integer>{3});
  CHECK(quad.first_failing_level == 2);
  // f(0) = 1, f(1) = 4 = 0 mod 4: a 2-cycle, so no full cycle mod 4.
  CHECK(oracle::orbit({1, 1, 2}, 0, 4, 3) == std::vector<oracle::i64>{0, 1, 0});
  CHECK_FALSE(oracle::full_cycle({1, 1, 2}, 2, 2));

  auto even = minimal_z2(IntPolynomial(Prime(2), {4, 1}));
  CHECK_FALSE(even.minimal);
  CHECK(even.reason.starts_with("fixed point mod p"));
  CHECK(even.first_failing_level == 1);

  try {
    minimal_z2(kSharpP3);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kUnsupportedPrime);
  }
}

TEST_CASE("minimal_z2_larin_form") {
  CHECK(minimal_z2_larin_form(IntPolynomial(Prime(2), {1, 1})).minimal);
  auto r = minimal_z2_larin_form(kSharpP2);
  CHECK_FALSE(r.minimal);
  CHECK(r.method == Method::kClosedFormP2Larin);
  CHECK_THROWS_AS(minimal_z2_larin_form(IntPolynomial(Prime(2), {3, 1})), Error);
  CHECK_THROWS_AS(minimal_z2_larin_form(kSharpP3), Error);
}

TEST_CASE("minimal_z3") {
  auto odo = minimal_z3(IntPolynomial(Prime(3), {1, 1}));
  CHECK(odo.minimal);
  CHECK(odo.matched_case == 2);
  const Condition* second = find_condition(odo, "case (2): A0 + 6 != 6a2");
  REQUIRE(second);
  CHECK(second->residues == std::vector<Integer>{6, 0});

  auto sharp = minimal_z3(kSharpP3);
  CHECK_FALSE(sharp.minimal);
  CHECK(sharp.matched_case == 1);
  const Condition* pattern = find_condition(sharp, "(D0, D1, a1)");
  REQUIRE(pattern);
  CHECK(pattern->residues == std::vector<Integer>{0, 2, 1});
  const Condition* first = find_condition(sharp, "case (1): A1 + 5 != 0");
  REQUIRE(first);
  CHECK(first->pass);
  CHECK(first->residues == std::vector<Integer>{6});
  const Condition* exclusion = find_condition(sharp, "case (1): A1 + 5 != 3a2");
  REQUIRE(exclusion);
  CHECK_FALSE(exclusion->pass);
  CHECK(exclusion->residues == std::vector<Integer>{6, 6});
  CHECK(exclusion->stage == "level-3");
  CHECK(sharp.first_failing_level == 3);

  auto quad = minimal_z3(IntPolynomial(Prime(3), {1, 1, 6}));
  CHECK(quad.minimal);
  CHECK(quad.matched_case == 2);
  const Condition* q1 = find_condition(quad, "case (2): A0 + 6 != 0");
  REQUIRE(q1);
  CHECK(q1->residues == std::vector<Integer>{3});
  const Condition* q2 = find_condition(quad, "case (2): A0 + 6 != 6a2");
  REQUIRE(q2);
  CHECK(q2->residues == std::vector<Integer>{3, 0});

  auto zero = minimal_z3(IntPolynomial(Prime(3), {3, 1}));
  CHECK_FALSE(zero.minimal);
  CHECK(zero.reason.starts_with("fixed point mod p"));
  CHECK_THROWS_AS(minimal_z3(kSharpP2), Error);
}

TEST_CASE("minimal_z3 reports a derivative-pattern mismatch") {
  // Level 1 passes but (D0, D1, a1) hits none of the four patterns.
  std::optional<IntPolynomial> found;
  for (std::uint64_t i = 1; i < 729 && !found; ++i) {
    IntPolynomial f(Prime(3), box_tuple(i, 3, 9));
    auto v = minimal_z3(f);
    auto s = coefficient_sums(f);
    if (oracle::floor_mod(s.a0_even.get_si(), 3) == 0 && oracle::floor_mod(s.a1_odd.get_si(), 3) == 1 &&
        !v.matched_case)
      found = f;
  }
  REQUIRE(found);
  auto v = minimal_z3(*found);
  CHECK_FALSE(v.minimal);
  CHECK(v.reason.starts_with("derivative-pattern mismatch"));
  CHECK(v.first_failing_level == 2);
  CHECK_FALSE(oracle::full_cycle(to_i64(*found), 3, 2));
}

TEST_CASE("minimal_degree5_z3") {
  auto odo = minimal_degree5_z3(IntPolynomial(Prime(3), {1, 1}));
  CHECK(odo.minimal);
  CHECK(odo.matched_case == 2);
  auto sharp = minimal_degree5_z3(kSharpP3);
  CHECK_FALSE(sharp.minimal);
  CHECK(sharp.matched_case == 1);
  CHECK(sharp.conditions.back().residues == std::vector<Integer>{1});
  CHECK_THROWS_AS(minimal_degree5_z3(IntPolynomial(Prime(3), {1, 1, 0, 0, 0, 0, 1})), Error);
  CHECK_THROWS_AS(minimal_degree5_z3(IntPolynomial(Prime(3), {2, 1})), Error);
}

TEST_CASE("minimal_general") {
  auto odo = minimal_general(IntPolynomial(Prime(5), {1, 1}));
  CHECK(odo.minimal);
  CHECK(odo.method == Method::kDeltaRule);
  CHECK_FALSE(odo.witness);

  auto quad = minimal_general(IntPolynomial(Prime(5), {1, 1, 1}));
  CHECK_FALSE(quad.minimal);
  REQUIRE(quad.witness);
  CHECK(quad.witness->level == 1);
  CHECK(quad.witness->cycle == std::vector<Residue>{3});
  CHECK(quad.first_failing_level == 1);
  // f(3) = 13 = 3 (mod 5).
  CHECK(oracle::eval_naive({1, 1, 1}, 3, 5) == 3);

  auto sharp = minimal_general(kSharpP3);
  CHECK_FALSE(sharp.minimal);
  REQUIRE(sharp.witness);
  CHECK(sharp.witness->level == 3);
  CHECK(sharp.witness->cycle == std::vector<Residue>{0, 1, 11, 15, 7, 23, 3, 13, 17});

  Limits tight;
  tight.table_bound = 8;
  tight.work_budget = 8;
  CHECK_THROWS_AS(minimal_general(IntPolynomial(Prime(5), {1, 1}), tight), Error);
}

TEST_CASE("delta_level") {
  CHECK(delta_level(Prime(2)) == 3);
  CHECK(delta_level(Prime(3)) == 3);
  CHECK(delta_level(Prime(5)) == 2);
  CHECK(delta_level(Prime(101)) == 2);
}

TEST_CASE("delta is sharp: the sharp polynomials lose the full cycle exactly at delta") {
  for (const auto* f : {&kSharpP2, &kSharpP3}) {
    const int d = delta_level(f->prime());
    CHECK(is_full_cycle(*f, d - 1));
    CHECK_FALSE(is_full_cycle(*f, d));
    CHECK(oracle::full_cycle(to_i64(*f), f->prime().value(), d - 1));
    CHECK_FALSE(oracle::full_cycle(to_i64(*f), f->prime().value(), d));
  }
}

TEST_CASE("cross_validate") {
  auto quad = cross_validate(IntPolynomial(Prime(3), {1, 1, 6}), 4);
  CHECK(quad.consistent);
  CHECK(quad.full_cycle_levels == std::vector<bool>{true, true, true, true});
  CHECK_FALSE(quad.first_failing_level);

  auto sharp = cross_validate(kSharpP2, 3);
  CHECK(sharp.consistent);
  CHECK(sharp.violations.empty());
  CHECK(sharp.first_failing_level == 3);

  CHECK(cross_validate(IntPolynomial(Prime(7), {1, 1}), 2).consistent);
}

TEST_CASE("exhaustive p=2: theorem, Larin form, delta rule and oracle agree") {
  int minimal = 0;
  for (std::uint64_t i = 0; i < 4096; ++i) {
    auto c = box_tuple(i, 4, 8);
    if (is_constant(c)) continue;
    IntPolynomial f(Prime(2), c);
    const bool truth = oracle::full_cycle(to_i64(f), 2, 3);
    auto z2 = minimal_z2(f);
    CHECK(z2.minimal == truth);
    CHECK(minimal_z2_larin_form(f).minimal == truth);
    CHECK(minimal_general(f).minimal == truth);
    // The staged annotation names the first level the oracle sees fail.
    std::optional<int> first;
    for (int n = 1; n <= 3 && !first; ++n)
      if (!oracle::full_cycle(to_i64(f), 2, n)) first = n;
    CHECK(z2.first_failing_level == first);
    minimal += truth;
  }
  CHECK(minimal > 0);
}

TEST_CASE("exhaustive p=3: theorem, corrected degree-5 table and oracle agree") {
  int printed_disagreements = 0;
  int minimal = 0;
  for (std::uint64_t i = 0; i < 59049; ++i) {
    auto c = box_tuple(i, 5, 9);
    if (is_constant(c)) continue;
    IntPolynomial f(Prime(3), c);
    const auto a = to_i64(f);
    const bool truth = oracle::full_cycle(a, 3, 3);
    auto z3 = minimal_z3(f);
    if (z3.minimal != truth) FAIL_CHECK("theorem disagrees at " << format_coefficients(c));
    if (minimal_degree5_z3(f).minimal != truth)
      FAIL_CHECK("degree-5 table disagrees at " << format_coefficients(c));
    std::optional<int> first;
    for (int n = 1; n <= 3 && !first; ++n)
      if (!oracle::full_cycle(a, 3, n)) first = n;
    if (z3.first_failing_level != first) FAIL_CHECK("stage mismatch at " << format_coefficients(c));
    printed_disagreements += printed_degree5_table(a) != truth;
    minimal += truth;
  }
  CHECK(minimal > 0);
  // As printed, case (3) asks for 7 (mod 9); every mismatch sits there.
  CHECK(printed_disagreements == 162);
}

TEST_CASE("general a0: primed corollaries agree with the oracle") {
  std::mt19937_64 rng(51);
  for (int t = 0; t < 1500; ++t) {
    const unsigned p = t % 2 ? 3 : 2;
    std::vector<Integer> c;
    const int d = 1 + static_cast<int>(rng() % 6);
    for (int i = 0; i <= d; ++i) c.emplace_back(static_cast<long>(rng() % 40));
    if (c.back() == 0) c.back() = 1;
    IntPolynomial f(Prime(p), c);
    const bool truth = oracle::full_cycle(to_i64(f), p, 3);
    auto v = p == 2 ? minimal_z2(f) : minimal_z3(f);
    CHECK(v.minimal == truth);
    // Normalizing a_0 to 1 is a conjugacy and preserves the verdict.
    if (oracle::floor_mod(c[0].get_si(), p) != 0) {
      try {
        auto g = normalize_unit_constant(f, 3);
        CHECK((p == 2 ? minimal_z2(g) : minimal_z3(g)).minimal == truth);
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::kDegeneratePolynomial);
      }
    }
  }
}

TEST_CASE("p=3 verdict depends on coefficients mod 9 only") {
  std::mt19937_64 rng(53);
  for (int t = 0; t < 400; ++t) {
    std::vector<Integer> c{1};
    for (int i = 1; i <= 5; ++i) c.emplace_back(static_cast<long>(rng() % 9));
    if (is_constant(c)) continue;
    auto shifted = c;
    const std::size_t k = 1 + rng() % 5;
    shifted[k] += 9 * static_cast<long>(1 + rng() % 3);
    IntPolynomial f(Prime(3), c), g(Prime(3), shifted);
    CHECK(minimal_z3(f).minimal == minimal_z3(g).minimal);
    CHECK(oracle::full_cycle(to_i64(f), 3, 3) == oracle::full_cycle(to_i64(g), 3, 3));
  }
}

TEST_CASE("p=3 case patterns are exclusive") {
  for (std::uint64_t i = 0; i < 6561; ++i) {
    auto c = box_tuple(i, 4, 9);
    if (is_constant(c)) continue;
    auto v = minimal_z3(IntPolynomial(Prime(3), c));
    int matches = 0;
    auto s = coefficient_sums(IntPolynomial(Prime(3), c));
    const std::array<std::array<oracle::i64, 3>, 4> patterns{{{0, 2, 1}, {0, 1, 1}, {1, 0, 2}, {2, 0, 2}}};
    const std::array<oracle::i64, 3> key{oracle::floor_mod(s.d0_even.get_si(), 3),
                                         oracle::floor_mod(s.d1_odd.get_si(), 3),
                                         oracle::floor_mod(c[1].get_si(), 3)};
    for (const auto& pat : patterns) matches += pat == key;
    CHECK(matches <= 1);
    CHECK(v.matched_case.has_value() == (matches == 1));
  }
}

TEST_CASE("method names round-trip") {
  for (auto m : {Method::kClosedFormP2, Method::kClosedFormP2Larin, Method::kClosedFormP3,
                 Method::kClosedFormP3Degree5, Method::kDeltaRule}) {
    CHECK(method_from_name(method_name(m)) == m);
  }
  CHECK(std::string(method_name(Method::kClosedFormP3Degree5)) == "closed-form-p3-deg5");
  CHECK_FALSE(method_from_name("closed-form-p5"));
}
