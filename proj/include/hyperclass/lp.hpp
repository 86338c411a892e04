#pragma once

#include <optional>
#include <vector>

#include "hyperclass/rational.hpp"

namespace hyperclass {

enum class Rel { Eq, Ge, Gt, Le, Lt };

/// One constraint  coef . x  REL  rhs  over rational variables.
struct LinConstraint {
    std::vector<Rat> coef;
    Rel rel = Rel::Ge;
    Rat rhs = 0;
};

/// Finite system of equalities and (possibly strict) inequalities.
/// Variables are free; every returned witness satisfies every constraint
/// under exact re-evaluation.
struct InequalitySystem {
    int num_vars = 0;
    std::vector<LinConstraint> constraints;

    void add(std::vector<Rat> coef, Rel rel, Rat rhs);
    bool satisfied_by(const std::vector<Rat>& x) const;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    std::vector<Rat> point; // populated when status == Optimal
    Rat value = 0;
};

/// Exact rational simplex: maximize objective . x subject to non-strict
/// constraints (Eq/Ge/Le). Two-phase, Bland's rule, so it terminates.
LpResult lp_maximize(int num_vars, const std::vector<LinConstraint>& constraints,
                     const std::vector<Rat>& objective);

/// Rational witness of the mixed system, or nullopt when infeasible.
/// Strict inequalities are handled by maximizing a shared slack bounded by 1;
/// the system is feasible exactly when the optimum slack is positive.
std::optional<std::vector<Rat>> solve_mixed_inequalities(const InequalitySystem& sys);

} // namespace hyperclass
