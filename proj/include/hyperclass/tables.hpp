#pragma once

#include <string>
#include <vector>

#include "hyperclass/classify.hpp"

namespace hyperclass {

/// Embedded classification table: the published representatives and family
/// patterns for one solution set, used as regression oracles.
struct ReferenceTable {
    std::string id;
    Family fam = Family::Gauss;
    int n = 0;
    std::vector<ParametricFamily> families;
    std::vector<std::vector<Rat>> representatives;
    /// Rows printed in the source table that are conjugation/symmetry
    /// duplicates of other rows (kept separately, still solutions).
    std::vector<std::vector<Rat>> duplicate_rows;
    std::vector<std::vector<int>> symmetries; // reduction used by the table
};

const ReferenceTable& reference_table(const std::string& id);
std::vector<std::string> all_reference_table_ids();

/// Table id of the solution set of (family, n); empty when none is embedded.
std::string reference_table_id(Family fam, int n);

/// The three type-1 parametric patterns in (a, b, c) form.
std::vector<ParametricFamily> gauss_type1_patterns();

/// The parametric solution families of (fam, n); empty when the family has
/// only sporadic solutions.
std::vector<ParametricFamily> solution_family_patterns(Family fam, int n);

/// Non-identity parameter permutations leaving the family's solution set
/// invariant.
std::vector<std::vector<int>> family_symmetries(Family fam, int n);

/// Subgroup the published tables reduce their rows by.
std::vector<std::vector<int>> display_symmetries(Family fam, int n);

} // namespace hyperclass
