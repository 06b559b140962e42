#pragma once

#include <string>
#include <string_view>

#include "padicmin/conjugacy.hpp"
#include "padicmin/criteria.hpp"
#include "padicmin/sweep.hpp"

namespace padicmin {

// Structured records are single-line JSON objects. Field names are frozen
// in docs/output-schema.md.

std::string verdict_to_json(const MinimalityVerdict& v);
/// Throws Error(kMalformedInput) on records that do not follow the schema.
MinimalityVerdict verdict_from_json(std::string_view text);

std::string cycles_to_json(const IntPolynomial& f, const CycleDecomposition& d);
std::string cross_validation_to_json(const IntPolynomial& f, const CrossValidation& cv);
std::string tower_to_json(const IntPolynomial& f, const TowerReport& t);
std::string sweep_to_json(const SweepConfig& config, const SweepReport& r);

std::string render_verdict_text(const MinimalityVerdict& v);
std::string render_cycles_text(const CycleDecomposition& d, std::uint64_t modulus);

}  // namespace padicmin
