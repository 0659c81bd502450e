#include "credal/lp.hpp"

#include "credal/errors.hpp"

#include <optional>

namespace credal::lp {

Polytope Polytope::nonnegative_orthant(std::size_t n) {
    Polytope p;
    p.variables = n;
    p.nonneg.assign(n, true);
    return p;
}

void Polytope::add(std::vector<Scalar> coefficients, Relation relation, Scalar rhs) {
    constraints.push_back({std::move(coefficients), relation, std::move(rhs)});
}

void Polytope::validate() const {
    if (variables == 0) throw ModelError("linear program needs at least one variable");
    if (nonneg.size() != variables) throw ModelError("one sign flag per variable required");
    for (std::size_t i = 0; i < constraints.size(); ++i) {
        if (constraints[i].coefficients.size() != variables) {
            throw ModelError("constraint " + std::to_string(i) + " has wrong width");
        }
    }
}

bool Polytope::contains(std::span<const Scalar> point) const {
    if (point.size() != variables) return false;
    for (std::size_t j = 0; j < variables; ++j) {
        if (nonneg[j] && point[j].sign() < 0) return false;
    }
    for (const auto& c : constraints) {
        Scalar lhs = dot(c.coefficients, point);
        switch (c.relation) {
            case Relation::LessEqual: if (lhs > c.rhs) return false; break;
            case Relation::Equal: if (lhs != c.rhs) return false; break;
            case Relation::GreaterEqual: if (lhs < c.rhs) return false; break;
        }
    }
    return true;
}

void LinearProgram::validate() const {
    region.validate();
    if (objective.size() != region.variables) throw ModelError("objective has wrong width");
}

Scalar dot(std::span<const Scalar> a, std::span<const Scalar> b) {
    Scalar s;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

namespace {

// Tableau in equality form: rows[i] * y = rhs[i], y >= 0, with one basic
// column per row. `cost` is the objective row holding reduced costs of a
// minimisation; `cost_value` is minus the current objective value.
struct Tableau {
    std::vector<std::vector<Scalar>> rows;
    std::vector<Scalar> rhs;
    std::vector<std::size_t> basis;
    std::vector<Scalar> cost;
    Scalar cost_value;

    std::size_t columns() const { return cost.size(); }

    void pivot(std::size_t r, std::size_t c) {
        const Scalar p = rows[r][c];
        for (auto& v : rows[r]) v /= p;
        rhs[r] /= p;
        auto eliminate = [&](std::vector<Scalar>& row, Scalar& b) {
            if (row[c].is_zero()) return;
            const Scalar f = row[c];
            for (std::size_t j = 0; j < row.size(); ++j) {
                if (!rows[r][j].is_zero()) row[j] -= f * rows[r][j];
            }
            b -= f * rhs[r];
        };
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i != r) eliminate(rows[i], rhs[i]);
        }
        eliminate(cost, cost_value);
        basis[r] = c;
    }

    // Loads reduced costs for the minimisation objective `c` given the
    // current basis.
    void set_objective(const std::vector<Scalar>& c) {
        cost = c;
        cost_value = Scalar(0);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const Scalar cb = c[basis[i]];
            if (cb.is_zero()) continue;
            for (std::size_t j = 0; j < cost.size(); ++j) cost[j] -= cb * rows[i][j];
            cost_value -= cb * rhs[i];
        }
    }

    // Bland's rule. Returns false when the objective is unbounded below.
    bool optimise(std::size_t usable_columns) {
        for (;;) {
            std::optional<std::size_t> entering;
            for (std::size_t j = 0; j < usable_columns; ++j) {
                if (cost[j].sign() < 0) { entering = j; break; }
            }
            if (!entering) return true;
            const std::size_t c = *entering;

            std::optional<std::size_t> leaving;
            Scalar best_ratio;
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (rows[i][c].sign() <= 0) continue;
                Scalar ratio = rhs[i] / rows[i][c];
                if (!leaving || ratio < best_ratio ||
                    (ratio == best_ratio && basis[i] < basis[*leaving])) {
                    leaving = i;
                    best_ratio = std::move(ratio);
                }
            }
            if (!leaving) return false;
            pivot(*leaving, c);
        }
    }
};

}  // namespace

LpOutcome solve(const LinearProgram& program) {
    program.validate();
    const Polytope& region = program.region;
    const std::size_t n = region.variables;

    // Column layout: structural columns (free variables split in two),
    // then one slack/surplus per inequality, then one artificial per row.
    std::vector<std::size_t> plus_col(n), minus_col(n, SIZE_MAX);
    std::size_t structural = 0;
    for (std::size_t j = 0; j < n; ++j) {
        plus_col[j] = structural++;
        if (!region.nonneg[j]) minus_col[j] = structural++;
    }
    std::size_t slacks = 0;
    for (const auto& c : region.constraints) {
        if (c.relation != Relation::Equal) ++slacks;
    }
    const std::size_t m = region.constraints.size();
    const std::size_t first_artificial = structural + slacks;
    const std::size_t total = first_artificial + m;

    Tableau t;
    t.rows.assign(m, std::vector<Scalar>(total));
    t.rhs.resize(m);
    t.basis.resize(m);
    std::size_t slack = structural;
    for (std::size_t i = 0; i < m; ++i) {
        const auto& con = region.constraints[i];
        const bool flip = con.rhs.sign() < 0;
        const Scalar sign = flip ? Scalar(-1) : Scalar(1);
        auto& row = t.rows[i];
        for (std::size_t j = 0; j < n; ++j) {
            row[plus_col[j]] = sign * con.coefficients[j];
            if (minus_col[j] != SIZE_MAX) row[minus_col[j]] = -row[plus_col[j]];
        }
        t.rhs[i] = sign * con.rhs;
        if (con.relation != Relation::Equal) {
            // a.x <= b gets +s; a.x >= b gets -s; flipping the row swaps them.
            const bool upper = (con.relation == Relation::LessEqual) != flip;
            row[slack] = upper ? Scalar(1) : Scalar(-1);
            ++slack;
        }
        row[first_artificial + i] = 1;
        t.basis[i] = first_artificial + i;
    }

    // Phase one: minimise the sum of artificials.
    std::vector<Scalar> phase_one(total);
    for (std::size_t i = 0; i < m; ++i) phase_one[first_artificial + i] = 1;
    t.set_objective(phase_one);
    t.optimise(total);
    const Scalar infeasibility = -t.cost_value;
    if (infeasibility.sign() > 0) return Infeasible{infeasibility};

    // Drive zero-valued artificials out of the basis; drop redundant rows.
    for (std::size_t i = 0; i < t.rows.size();) {
        if (t.basis[i] < first_artificial) { ++i; continue; }
        std::optional<std::size_t> col;
        for (std::size_t j = 0; j < first_artificial; ++j) {
            if (!t.rows[i][j].is_zero()) { col = j; break; }
        }
        if (col) {
            t.pivot(i, *col);
            ++i;
        } else {
            t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(i));
            t.rhs.erase(t.rhs.begin() + static_cast<std::ptrdiff_t>(i));
            t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
        }
    }

    // Phase two over structural and slack columns only.
    std::vector<Scalar> phase_two(total);
    const bool maximise = program.sense == Sense::Maximize;
    for (std::size_t j = 0; j < n; ++j) {
        Scalar c = maximise ? -program.objective[j] : program.objective[j];
        if (minus_col[j] != SIZE_MAX) phase_two[minus_col[j]] = -c;
        phase_two[plus_col[j]] = std::move(c);
    }
    t.set_objective(phase_two);
    if (!t.optimise(first_artificial)) return Unbounded{};

    std::vector<Scalar> column_value(total);
    for (std::size_t i = 0; i < t.rows.size(); ++i) column_value[t.basis[i]] = t.rhs[i];
    std::vector<Scalar> point(n);
    for (std::size_t j = 0; j < n; ++j) {
        point[j] = column_value[plus_col[j]];
        if (minus_col[j] != SIZE_MAX) point[j] -= column_value[minus_col[j]];
    }
    Scalar value = dot(program.objective, point);
    return Optimal{std::move(value), std::move(point)};
}

}  // namespace credal::lp
