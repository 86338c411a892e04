#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "hyperclass/apex.hpp"
#include "hyperclass/classify.hpp"

namespace hyperclass {

inline constexpr int kSchemaVersion = 1;

nlohmann::json system_to_json(const GkzSystem& sys);
nlohmann::json family_to_json(Family fam, int n);
nlohmann::json interlacing_to_json(const InterlacingTable& table);
nlohmann::json solutions_to_json(const SolutionSet& s);
nlohmann::json compare_to_json(const CompareReport& rep);

/// One row per table line: tuple columns, then the class size.
std::string solutions_to_csv(const SolutionSet& s);
std::string interlacing_to_csv(const InterlacingTable& table);

/// The irreducible algebraic Gauss triples: type-1 families then the 40
/// sporadic orbit-pair representatives with orbit sizes.
std::string schwarz_csv();
/// The 14 sporadic (lambda, mu, nu) tuples.
std::string schwarz_lmn_csv();
/// An embedded reference table as CSV (same layout as solutions_to_csv).
std::string reference_csv(const std::string& table_id);

} // namespace hyperclass
