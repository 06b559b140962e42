#include "padicmin/serialize.hpp"

#include <sstream>

#include <json.hpp>

#include "padicmin/error.hpp"

namespace padicmin {

using Json = nlohmann::ordered_json;

namespace {

Json integer_to_json(const Integer& x) {
  if (x.fits_slong_p()) return Json(x.get_si());
  return Json(x.get_str());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) return Integer(j.get<std::string>(), 10);
  throw Error(ErrorCode::kMalformedInput, "expected an integer, got " + j.dump());
}

std::string join(const std::vector<Residue>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xs[i]);
  }
  return out;
}

Json verdict_json(const MinimalityVerdict& v) {
  Json conditions = Json::array();
  for (const auto& c : v.conditions) {
    Json residues = Json::array();
    for (const auto& r : c.residues) residues.push_back(integer_to_json(r));
    conditions.push_back({{"name", c.name},
                          {"stage", c.stage},
                          {"residues", residues},
                          {"modulus", integer_to_json(c.modulus)},
                          {"pass", c.pass}});
  }
  Json j;
  j["minimal"] = v.minimal;
  j["method"] = method_name(v.method);
  j["case"] = v.matched_case ? Json(*v.matched_case) : Json(nullptr);
  j["conditions"] = conditions;
  if (v.witness) {
    j["witness"] = {{"level", v.witness->level},
                    {"cycle", v.witness->cycle},
                    {"tail_length", v.witness->tail_length}};
  } else {
    j["witness"] = nullptr;
  }
  j["first_failing_level"] =
      v.first_failing_level ? Json(*v.first_failing_level) : Json(nullptr);
  j["reason"] = v.reason;
  return j;
}

}  // namespace

std::string verdict_to_json(const MinimalityVerdict& v) { return verdict_json(v).dump(); }

MinimalityVerdict verdict_from_json(std::string_view text) {
  try {
    const Json j = Json::parse(text);
    MinimalityVerdict v;
    v.minimal = j.at("minimal").get<bool>();
    auto method = method_from_name(j.at("method").get<std::string>());
    if (!method) throw Error(ErrorCode::kMalformedInput, "unknown method");
    v.method = *method;
    if (!j.at("case").is_null()) v.matched_case = j.at("case").get<int>();
    for (const auto& c : j.at("conditions")) {
      Condition cond;
      cond.name = c.at("name").get<std::string>();
      cond.stage = c.at("stage").get<std::string>();
      for (const auto& r : c.at("residues")) cond.residues.push_back(integer_from_json(r));
      cond.modulus = integer_from_json(c.at("modulus"));
      cond.pass = c.at("pass").get<bool>();
      v.conditions.push_back(std::move(cond));
    }
    if (const auto& w = j.at("witness"); !w.is_null()) {
      v.witness = CycleWitness{w.at("level").get<int>(),
                               w.at("cycle").get<std::vector<Residue>>(),
                               w.at("tail_length").get<std::uint64_t>()};
    }
    if (!j.at("first_failing_level").is_null()) {
      v.first_failing_level = j.at("first_failing_level").get<int>();
    }
    v.reason = j.at("reason").get<std::string>();
    return v;
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kMalformedInput, std::string("bad verdict record: ") + e.what());
  }
}

std::string cycles_to_json(const IntPolynomial& f, const CycleDecomposition& d) {
  Json j;
  j["prime"] = f.prime().value();
  j["coefficients"] = format_coefficients(f.coefficients());
  j["level"] = d.level;
  j["bijective"] = d.bijective;
  j["cycle_count"] = d.cycles.size();
  j["non_periodic_count"] = d.non_periodic_count;
  j["cycles"] = d.cycles;
  return j.dump();
}

std::string cross_validation_to_json(const IntPolynomial& f, const CrossValidation& cv) {
  Json j;
  j["prime"] = f.prime().value();
  j["coefficients"] = format_coefficients(f.coefficients());
  j["closed_form"] = cv.closed_form ? verdict_json(*cv.closed_form) : Json(nullptr);
  j["delta_rule"] = verdict_json(cv.delta_rule);
  j["agree"] = cv.consistent;
  j["full_cycle_levels"] = cv.full_cycle_levels;
  j["violations"] = cv.violations;
  return j.dump();
}

std::string tower_to_json(const IntPolynomial& f, const TowerReport& t) {
  Json levels = Json::array();
  for (const auto& l : t.levels) {
    levels.push_back({{"level", l.level},
                      {"conjugation", l.conjugation},
                      {"compatible_with_next", l.compatible_with_next}});
  }
  Json j;
  j["prime"] = f.prime().value();
  j["coefficients"] = format_coefficients(f.coefficients());
  j["levels"] = levels;
  j["pass"] = t.all_pass();
  return j.dump();
}

std::string sweep_to_json(const SweepConfig& config, const SweepReport& r) {
  Json j;
  j["prime"] = config.prime.value();
  j["degree"] = config.degree;
  j["coefficient_bound"] = config.coefficient_bound;
  j["constant_term"] = config.constant_term;
  j["n_max"] = config.n_max;
  j["sampled"] = r.sampled;
  j["seed"] = r.seed;
  j["examined"] = r.examined;
  j["agree_minimal"] = r.agree_minimal;
  j["agree_nonminimal"] = r.agree_nonminimal;
  j["degenerate"] = r.degenerate;
  j["disagreements"] = r.disagreements;
  j["first_counterexample"] = r.first_counterexample
                                  ? Json(format_coefficients(*r.first_counterexample))
                                  : Json(nullptr);
  j["violations"] = r.counterexample_violations;
  return j.dump();
}

std::string render_verdict_text(const MinimalityVerdict& v) {
  std::ostringstream os;
  os << "method: " << method_name(v.method) << '\n';
  os << "minimal: " << (v.minimal ? "yes" : "no") << '\n';
  if (v.matched_case) os << "matched case: (" << *v.matched_case << ")\n";
  os << "conditions:\n";
  for (const auto& c : v.conditions) {
    os << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.stage << "  " << c.name << "  (residues";
    for (const auto& r : c.residues) os << ' ' << r.get_str();
    os << " mod " << c.modulus.get_str() << ")\n";
  }
  if (v.first_failing_level) os << "first failing level: " << *v.first_failing_level << '\n';
  if (v.witness) {
    os << "witness: level " << v.witness->level << " cycle (" << join(v.witness->cycle) << ")";
    if (v.witness->tail_length) os << " reached after " << v.witness->tail_length << " steps";
    os << '\n';
  }
  if (!v.reason.empty()) os << "reason: " << v.reason << '\n';
  return os.str();
}

std::string render_cycles_text(const CycleDecomposition& d, std::uint64_t modulus) {
  std::ostringstream os;
  os << "level: " << d.level << " (modulus " << modulus << ")\n";
  os << "bijective: " << (d.bijective ? "yes" : "no") << '\n';
  os << "cycles: " << d.cycles.size() << '\n';
  if (!d.bijective) os << "non-periodic residues: " << d.non_periodic_count << '\n';
  for (const auto& c : d.cycles) os << "  length " << c.size() << ": (" << join(c) << ")\n";
  return os.str();
}

}  // namespace padicmin
