#pragma once

#include <optional>
#include <vector>

#include "trop/rational.hpp"

namespace trop {

// One linear row: coeff . x  (>= | = | >)  rhs, over num_vars free variables.
struct LinearRow {
    std::vector<Rational> coeff;
    Rational rhs;
};

// One equality plus weak (>=) and strict (>) inequality rows, all exact.
// Rows are kept exactly as generated; nothing here rewrites the feasible set.
struct LinearSystem {
    int num_vars = 0;
    LinearRow equality;
    std::vector<LinearRow> weak_rows;
    std::vector<LinearRow> strict_rows;
};

enum class LpStatus { Feasible, Infeasible };

struct FeasibilityResult {
    LpStatus status = LpStatus::Infeasible;
    std::optional<std::vector<Rational>> witness;

    bool feasible() const { return status == LpStatus::Feasible; }
};

inline Rational dot(const std::vector<Rational>& coeff, const std::vector<Rational>& x) {
    Rational acc = 0;
    for (std::size_t i = 0; i < coeff.size(); ++i) {
        if (!coeff[i].is_zero()) acc += coeff[i] * x[i];
    }
    return acc;
}

// Exact re-verification of a candidate point against every row.
inline bool satisfies(const LinearSystem& sys, const std::vector<Rational>& x) {
    if (static_cast<int>(x.size()) != sys.num_vars) return false;
    if (dot(sys.equality.coeff, x) != sys.equality.rhs) return false;
    for (const auto& row : sys.weak_rows) {
        if (dot(row.coeff, x) < row.rhs) return false;
    }
    for (const auto& row : sys.strict_rows) {
        if (dot(row.coeff, x) <= row.rhs) return false;
    }
    return true;
}

}  // namespace trop
