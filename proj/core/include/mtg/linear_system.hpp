#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mtg/rational.hpp"

namespace mtg {

enum class Relation { less, less_equal };

/// Homogeneous inequality sum_j coeffs[j] * z_j (< | <=) 0.
struct LinearConstraint {
    std::vector<Rational> coeffs;
    Relation relation = Relation::less_equal;
    std::string label; ///< free-form tag for diagnostics
};

/// Constraints over rank variables x_0..x_{n-1} followed by threshold
/// variables t_1..t_k. All constant terms are zero, so the solution set is a
/// cone: any positive multiple of a solution is again a solution.
class LinearSystem {
public:
    LinearSystem(int rank_vars, int threshold_vars);

    [[nodiscard]] int rank_vars() const { return rank_vars_; }
    [[nodiscard]] int threshold_vars() const { return threshold_vars_; }
    [[nodiscard]] int variable_count() const { return rank_vars_ + threshold_vars_; }
    [[nodiscard]] std::span<const LinearConstraint> constraints() const { return constraints_; }
    [[nodiscard]] std::size_t size() const { return constraints_.size(); }

    /// Variable index of x_v.
    [[nodiscard]] int rank_var(int v) const { return v; }
    /// Variable index of t_i, 1-based like the thresholds themselves.
    [[nodiscard]] int threshold_var(int i) const { return rank_vars_ + i - 1; }

    /// Throws std::invalid_argument if coeffs has the wrong length.
    void add(std::vector<Rational> coeffs, Relation relation, std::string label = {});
    /// sum(lhs vars) rel sum(rhs vars), each variable with coefficient 1.
    void add_sums(std::span<const int> lhs, Relation relation, std::span<const int> rhs, std::string label = {});

    /// Whether `point` satisfies every constraint exactly.
    [[nodiscard]] bool satisfied_by(std::span<const Rational> point) const;

    /// Drops constraints from the back so that `count` remain.
    void truncate(std::size_t count);

private:
    int rank_vars_;
    int threshold_vars_;
    std::vector<LinearConstraint> constraints_;
};

/// Outcome of check_feasible. Exactly one of `witness` / `farkas` is set.
struct FeasibilityResult {
    /// A point satisfying the original (strict) system.
    std::optional<std::vector<Rational>> witness;
    /// Nonnegative multipliers, one per constraint, whose combination has all
    /// coefficients zero while putting positive weight on strict rows: the
    /// combined inequality reads 0 < 0.
    std::optional<std::vector<Rational>> farkas;

    [[nodiscard]] bool feasible() const { return witness.has_value(); }
};

/// Exact decision of strict/non-strict homogeneous feasibility.
///
/// Because the system is a cone, every strict row a.z < 0 can be replaced by
/// a.z <= -1 without changing feasibility. The resulting closed system
/// A z <= b is then decided through its Farkas alternative
///     y >= 0,  A^T y = 0,  b.y = -1,
/// solved by phase-1 simplex with Bland's rule over exact rationals. When the
/// alternative is infeasible, the final simplex multipliers give the primal
/// witness directly.
FeasibilityResult check_feasible(const LinearSystem& sys);

/// Checks a Farkas certificate independently of the simplex.
bool is_farkas_certificate(const LinearSystem& sys, std::span<const Rational> multipliers);

} // namespace mtg
