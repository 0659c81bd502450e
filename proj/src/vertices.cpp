#include "credal/vertices.hpp"

#include "credal/errors.hpp"

#include <optional>
#include <set>

namespace credal::lp {

namespace {

struct Row {
    std::vector<Scalar> a;
    Scalar b;
};

// Gaussian elimination on a square system; nullopt when singular.
std::optional<Point> solve_square(std::vector<Row> rows) {
    const std::size_t n = rows.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && rows[pivot].a[col].is_zero()) ++pivot;
        if (pivot == n) return std::nullopt;
        std::swap(rows[col], rows[pivot]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || rows[i].a[col].is_zero()) continue;
            const Scalar f = rows[i].a[col] / rows[col].a[col];
            for (std::size_t j = col; j < n; ++j) rows[i].a[j] -= f * rows[col].a[j];
            rows[i].b -= f * rows[col].b;
        }
    }
    Point x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = rows[i].b / rows[i].a[i];
    return x;
}

// Indices of a maximal linearly independent subset of `rows` (coefficient
// parts only), keeping earlier rows first.
std::vector<std::size_t> independent_subset(const std::vector<Row>& rows, std::size_t width) {
    std::vector<std::vector<Scalar>> echelon;  // reduced rows, each with a pivot column
    std::vector<std::size_t> pivots;
    std::vector<std::size_t> kept;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        std::vector<Scalar> v = rows[r].a;
        for (std::size_t k = 0; k < echelon.size(); ++k) {
            const std::size_t p = pivots[k];
            if (v[p].is_zero()) continue;
            const Scalar f = v[p] / echelon[k][p];
            for (std::size_t j = 0; j < width; ++j) v[j] -= f * echelon[k][j];
        }
        for (std::size_t j = 0; j < width; ++j) {
            if (!v[j].is_zero()) {
                echelon.push_back(std::move(v));
                pivots.push_back(j);
                kept.push_back(r);
                break;
            }
        }
    }
    return kept;
}

}  // namespace

std::vector<Point> enumerate_vertices(const Polytope& region, const VertexCap& cap) {
    region.validate();
    const std::size_t n = region.variables;
    if (n > cap.max_variables) {
        throw CapacityError("vertex enumeration capped at " + std::to_string(cap.max_variables) +
                            " variables (got " + std::to_string(n) + ")");
    }
    if (region.constraints.size() > cap.max_constraints) {
        throw CapacityError("vertex enumeration capped at " + std::to_string(cap.max_constraints) +
                            " constraints (got " + std::to_string(region.constraints.size()) + ")");
    }

    std::vector<Row> equalities;
    std::vector<Row> inequalities;  // candidates for the active set
    for (const auto& c : region.constraints) {
        (c.relation == Relation::Equal ? equalities : inequalities).push_back({c.coefficients, c.rhs});
    }
    for (std::size_t j = 0; j < n; ++j) {
        if (!region.nonneg[j]) continue;
        std::vector<Scalar> e(n);
        e[j] = 1;
        inequalities.push_back({std::move(e), Scalar(0)});
    }

    // Any vertex satisfies all equalities, so an independent subset of them
    // can always be part of its active basis.
    std::vector<Row> base;
    for (std::size_t i : independent_subset(equalities, n)) base.push_back(equalities[i]);
    if (base.size() > n) return {};
    const std::size_t need = n - base.size();
    if (need > inequalities.size()) return {};

    std::set<Point> found;
    std::vector<std::size_t> pick(need);
    for (std::size_t i = 0; i < need; ++i) pick[i] = i;
    for (;;) {
        std::vector<Row> system = base;
        for (std::size_t i : pick) system.push_back(inequalities[i]);
        if (auto x = solve_square(std::move(system)); x && region.contains(*x)) {
            found.insert(std::move(*x));
        }
        // Next combination in lexicographic order.
        std::size_t k = need;
        while (k > 0 && pick[k - 1] == inequalities.size() - need + k - 1) --k;
        if (k == 0) break;
        ++pick[k - 1];
        for (std::size_t i = k; i < need; ++i) pick[i] = pick[i - 1] + 1;
    }
    return {found.begin(), found.end()};
}

}  // namespace credal::lp
