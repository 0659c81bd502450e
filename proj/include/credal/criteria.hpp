#pragma once

#include "credal/lower_prevision.hpp"
#include "credal/model.hpp"
#include "credal/vertices.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace credal {

enum class Criterion { Admissible, Meu, Maximin, Maximax, Maximal, Interval, EAdmissible };

/// Short tag: admissible, meu, maximin, maximax, maximal, interval, eadmissible.
std::string_view tag(Criterion c);

/// Accepts the short tags as well as the long command-line names
/// (maximality, intervaldominance, eadmissibility).
std::optional<Criterion> parse_criterion(std::string_view name);

/// A mass function in the credal set under which the decision is optimal
/// (or which attains its lower/upper expectation).
struct CredalMeasure {
    std::vector<Scalar> mu;
};

/// `winner` strictly beats the rejected decision: E(J_winner - J_d) = margin > 0.
struct DominatingPair {
    std::string winner;
    Scalar margin;
};

struct Bounds {
    Scalar lower;
    Scalar upper;
};

using Witness = std::variant<CredalMeasure, DominatingPair, Bounds>;

struct CriterionResult {
    Criterion criterion = Criterion::Admissible;
    IdList optimal{};                        ///< problem order
    std::map<std::string, Witness> witnesses{};
    std::size_t lp_solves = 0;               ///< linear programs solved, including any prefilter
    IdList pruned{};                         ///< removed by the interval-dominance prefilter
};

CriterionResult admissible(const DecisionProblem& problem);

/// Admissible decisions of maximal expectation under `mu`. Bounds
/// witnesses hold each optimal decision's expectation. Throws ModelError
/// unless `mu` is a probability vector on the problem's space.
CriterionResult meu_optimal(const DecisionProblem& problem, std::span<const Scalar> mu);

// The criteria below work on the admissible decisions, throw SureLossError
// when the model incurs a sure loss and ModelError when the model lives on
// another space. Ties are always kept.

/// Maximal lower expectation. CredalMeasure witnesses attain it.
CriterionResult gamma_maximin(const DecisionProblem& problem, const LowerPrevisionModel& model);

/// Maximal upper expectation. CredalMeasure witnesses attain it.
CriterionResult gamma_maximax(const DecisionProblem& problem, const LowerPrevisionModel& model);

/// Decisions d with E(J_e - J_d) <= 0 for every admissible e. Each rejected
/// decision carries a DominatingPair naming the first dominating decision in
/// problem order.
CriterionResult maximal_set(const DecisionProblem& problem, const LowerPrevisionModel& model);

/// Decisions whose upper expectation reaches the largest lower expectation.
/// Every admissible decision carries its Bounds.
CriterionResult interval_dominant_set(const DecisionProblem& problem, const LowerPrevisionModel& model);

/// Decisions maximising expectation for at least one credal mass function,
/// found with one feasibility LP per decision. Members carry a CredalMeasure.
CriterionResult e_admissible_set(const DecisionProblem& problem, const LowerPrevisionModel& model);

/// Randomised decision that strictly beats `target` under every credal mass
/// function.
struct MixtureDominance {
    std::string target;
    std::map<std::string, Scalar> weights;  ///< positive weights only, summing to one
    Scalar margin;                          ///< min over credal vertices of E(mix - J_target), > 0
};

/// Solves max over mixtures of min over credal vertices of
/// E(sum_e w_e J_e - J_target), mixing the admissible decisions. Returns the
/// optimal mixture when the game value is positive. Throws ModelError when
/// `target` is unknown or inadmissible and CapacityError when the credal set
/// exceeds `cap`.
std::optional<MixtureDominance> mixture_dominance(const DecisionProblem& problem,
                                                  const LowerPrevisionModel& model,
                                                  const std::string& target,
                                                  const lp::VertexCap& cap = {});

/// Runs one criterion. With `prefilter`, decisions whose upper expectation
/// falls below the best lower expectation are dropped first (reported in
/// `pruned`); allowed for Maximal and EAdmissible only, otherwise FlagError.
/// `mu` is required by Meu and rejected (FlagError) by the others.
CriterionResult run_pipeline(const DecisionProblem& problem, const LowerPrevisionModel& model,
                             Criterion criterion, bool prefilter,
                             std::optional<std::vector<Scalar>> mu = std::nullopt);

}  // namespace credal
