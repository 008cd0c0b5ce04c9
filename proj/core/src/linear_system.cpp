#include "mtg/linear_system.hpp"

#include <stdexcept>

namespace mtg {

LinearSystem::LinearSystem(int rank_vars, int threshold_vars) : rank_vars_(rank_vars), threshold_vars_(threshold_vars) {
    if (rank_vars < 0 || threshold_vars < 0) throw std::invalid_argument("negative variable count");
}

void LinearSystem::add(std::vector<Rational> coeffs, Relation relation, std::string label) {
    if (static_cast<int>(coeffs.size()) != variable_count()) {
        throw std::invalid_argument("constraint has " + std::to_string(coeffs.size()) + " coefficients, expected " +
                                    std::to_string(variable_count()));
    }
    constraints_.push_back({std::move(coeffs), relation, std::move(label)});
}

void LinearSystem::add_sums(std::span<const int> lhs, Relation relation, std::span<const int> rhs, std::string label) {
    std::vector<Rational> coeffs(static_cast<std::size_t>(variable_count()));
    for (int v : lhs) coeffs.at(static_cast<std::size_t>(v)) += 1;
    for (int v : rhs) coeffs.at(static_cast<std::size_t>(v)) -= 1;
    add(std::move(coeffs), relation, std::move(label));
}

bool LinearSystem::satisfied_by(std::span<const Rational> point) const {
    if (static_cast<int>(point.size()) != variable_count()) return false;
    for (const auto& c : constraints_) {
        Rational lhs;
        for (std::size_t j = 0; j < point.size(); ++j) {
            if (!c.coeffs[j].is_zero()) lhs.add_product(c.coeffs[j], point[j]);
        }
        const int s = lhs.sign();
        if (c.relation == Relation::less ? s >= 0 : s > 0) return false;
    }
    return true;
}

void LinearSystem::truncate(std::size_t count) {
    if (count < constraints_.size()) constraints_.resize(count);
}

bool is_farkas_certificate(const LinearSystem& sys, std::span<const Rational> multipliers) {
    if (multipliers.size() != sys.size()) return false;
    const auto vars = static_cast<std::size_t>(sys.variable_count());
    std::vector<Rational> combo(vars);
    bool strict_weight = false;
    for (std::size_t i = 0; i < multipliers.size(); ++i) {
        const auto& y = multipliers[i];
        if (y.sign() < 0) return false;
        if (y.is_zero()) continue;
        const auto& c = sys.constraints()[i];
        if (c.relation == Relation::less) strict_weight = true;
        for (std::size_t j = 0; j < vars; ++j) combo[j].add_product(y, c.coeffs[j]);
    }
    if (!strict_weight) return false;
    for (const auto& x : combo) {
        if (!x.is_zero()) return false;
    }
    return true;
}

namespace {

/// Dense phase-1 tableau for  M y + u = e_last,  y, u >= 0,  minimize sum u.
class Phase1Tableau {
public:
    Phase1Tableau(const LinearSystem& sys)
        : rows_(static_cast<std::size_t>(sys.variable_count()) + 1), ycols_(sys.size()), cols_(ycols_ + rows_ + 1),
          cells_(rows_ * cols_), objective_(cols_), basis_(rows_) {
        const auto vars = rows_ - 1;
        for (std::size_t i = 0; i < ycols_; ++i) {
            const auto& c = sys.constraints()[i];
            for (std::size_t r = 0; r < vars; ++r) at(r, i) = c.coeffs[r];
            if (c.relation == Relation::less) at(vars, i) = 1;
        }
        for (std::size_t r = 0; r < rows_; ++r) {
            at(r, ycols_ + r) = 1;
            basis_[r] = ycols_ + r;
        }
        at(vars, cols_ - 1) = 1;
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j >= ycols_ && j < ycols_ + rows_) continue;
            for (std::size_t r = 0; r < rows_; ++r) objective_[j] -= at(r, j);
        }
    }

    /// Runs Bland's rule to optimality; returns the phase-1 optimum.
    Rational solve() {
        std::vector<std::size_t> nonzero;
        for (;;) {
            std::size_t enter = ycols_;
            for (std::size_t j = 0; j < ycols_; ++j) {
                if (objective_[j].sign() < 0) {
                    enter = j;
                    break;
                }
            }
            if (enter == ycols_) break;

            std::size_t leave = rows_;
            Rational best;
            for (std::size_t r = 0; r < rows_; ++r) {
                const auto& a = at(r, enter);
                if (a.sign() <= 0) continue;
                Rational ratio = rhs(r) / a;
                if (leave == rows_ || ratio < best || (ratio == best && basis_[r] < basis_[leave])) {
                    leave = r;
                    best = std::move(ratio);
                }
            }
            if (leave == rows_) throw std::logic_error("phase-1 objective unbounded");
            pivot(leave, enter, nonzero);
        }
        return -objective_[cols_ - 1];
    }

    [[nodiscard]] std::vector<Rational> basic_y_values() const {
        std::vector<Rational> y(ycols_);
        for (std::size_t r = 0; r < rows_; ++r) {
            if (basis_[r] < ycols_) y[basis_[r]] = rhs(r);
        }
        return y;
    }

    /// Simplex multipliers: reduced cost of artificial r is 1 - pi_r.
    [[nodiscard]] std::vector<Rational> multipliers() const {
        std::vector<Rational> pi(rows_);
        for (std::size_t r = 0; r < rows_; ++r) pi[r] = Rational(1) - objective_[ycols_ + r];
        return pi;
    }

private:
    Rational& at(std::size_t r, std::size_t c) { return cells_[r * cols_ + c]; }
    [[nodiscard]] const Rational& at(std::size_t r, std::size_t c) const { return cells_[r * cols_ + c]; }
    [[nodiscard]] const Rational& rhs(std::size_t r) const { return at(r, cols_ - 1); }

    void pivot(std::size_t row, std::size_t col, std::vector<std::size_t>& nonzero) {
        const Rational inv = Rational(1) / at(row, col);
        nonzero.clear();
        for (std::size_t j = 0; j < cols_; ++j) {
            if (!at(row, j).is_zero()) {
                at(row, j) *= inv;
                nonzero.push_back(j);
            }
        }
        auto eliminate = [&](Rational* line) {
            if (line[col].is_zero()) return;
            const Rational factor = line[col];
            for (std::size_t j : nonzero) line[j].sub_product(factor, at(row, j));
        };
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r != row) eliminate(&cells_[r * cols_]);
        }
        eliminate(objective_.data());
        basis_[row] = col;
    }

    std::size_t rows_;
    std::size_t ycols_;
    std::size_t cols_;
    std::vector<Rational> cells_;
    std::vector<Rational> objective_;
    std::vector<std::size_t> basis_;
};

} // namespace

FeasibilityResult check_feasible(const LinearSystem& sys) {
    FeasibilityResult result;
    const auto vars = static_cast<std::size_t>(sys.variable_count());

    bool any_strict = false;
    for (const auto& c : sys.constraints()) any_strict = any_strict || c.relation == Relation::less;
    if (!any_strict) {
        // The origin satisfies every non-strict homogeneous row.
        result.witness = std::vector<Rational>(vars);
        return result;
    }

    Phase1Tableau tableau(sys);
    const Rational optimum = tableau.solve();
    if (optimum.is_zero()) {
        auto y = tableau.basic_y_values();
        if (!is_farkas_certificate(sys, y)) throw std::logic_error("simplex produced an invalid Farkas certificate");
        result.farkas = std::move(y);
        return result;
    }

    const auto pi = tableau.multipliers();
    const Rational& scale = pi[vars];
    if (scale.sign() <= 0) throw std::logic_error("phase-1 multipliers have non-positive strict weight");
    std::vector<Rational> point(vars);
    for (std::size_t j = 0; j < vars; ++j) point[j] = pi[j] / scale;
    if (!sys.satisfied_by(point)) throw std::logic_error("phase-1 multipliers do not satisfy the system");
    result.witness = std::move(point);
    return result;
}

} // namespace mtg
