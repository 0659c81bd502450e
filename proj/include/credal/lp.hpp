#pragma once

#include "credal/scalar.hpp"

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

namespace credal::lp {

enum class Relation { LessEqual, Equal, GreaterEqual };
enum class Sense { Maximize, Minimize };

struct Constraint {
    std::vector<Scalar> coefficients;
    Relation relation = Relation::LessEqual;
    Scalar rhs;
};

/// Feasible region { x : every constraint holds, x_j >= 0 where nonneg[j] }.
struct Polytope {
    std::size_t variables = 0;
    std::vector<Constraint> constraints;
    std::vector<bool> nonneg;  ///< one flag per variable; true means x_j >= 0

    /// Region with `n` variables, all non-negative, and no constraints.
    static Polytope nonnegative_orthant(std::size_t n);

    void add(std::vector<Scalar> coefficients, Relation relation, Scalar rhs);

    /// Throws ModelError unless every row has `variables` coefficients,
    /// there is at least one variable, and `nonneg` has one flag each.
    void validate() const;

    /// Exact membership test.
    bool contains(std::span<const Scalar> point) const;
};

struct LinearProgram {
    Sense sense = Sense::Maximize;
    std::vector<Scalar> objective;
    Polytope region;

    void validate() const;
};

struct Optimal {
    Scalar value;
    std::vector<Scalar> point;
};

struct Infeasible {
    /// Optimum of the phase-one problem (minimum total artificial value);
    /// strictly positive.
    Scalar phase_one_value;
};

struct Unbounded {};

using LpOutcome = std::variant<Optimal, Infeasible, Unbounded>;

/// Dense two-phase primal simplex over exact rationals with Bland's rule.
/// An Optimal point is a basic feasible solution that satisfies every
/// constraint exactly and attains `value` exactly.
LpOutcome solve(const LinearProgram& program);

inline bool is_optimal(const LpOutcome& o) { return std::holds_alternative<Optimal>(o); }
inline bool is_infeasible(const LpOutcome& o) { return std::holds_alternative<Infeasible>(o); }
inline bool is_unbounded(const LpOutcome& o) { return std::holds_alternative<Unbounded>(o); }

Scalar dot(std::span<const Scalar> a, std::span<const Scalar> b);

}  // namespace credal::lp
