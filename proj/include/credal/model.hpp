#pragma once

#include "credal/scalar.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace credal {

/// Finite, ordered set of distinct state labels.
class PossibilitySpace {
public:
    /// Throws ModelError if empty, if a label is empty, or on duplicates.
    explicit PossibilitySpace(std::vector<std::string> states);

    std::size_t size() const noexcept { return states_.size(); }
    const std::vector<std::string>& states() const noexcept { return states_; }
    const std::string& label(std::size_t i) const { return states_.at(i); }

    /// Throws ModelError for unknown labels.
    std::size_t index_of(const std::string& label) const;
    bool contains(const std::string& label) const;

    friend bool operator==(const PossibilitySpace& a, const PossibilitySpace& b) {
        return a.states_ == b.states_;
    }

private:
    std::vector<std::string> states_;
};

using SpacePtr = std::shared_ptr<const PossibilitySpace>;

SpacePtr make_space(std::vector<std::string> states);

/// Two spaces are interchangeable when they list the same labels in the
/// same order.
bool same_space(const SpacePtr& a, const SpacePtr& b);

/// Bounded real-valued function on a finite space; an uncertain gain.
class Gamble {
public:
    /// `values` are in state order; length must match the space.
    Gamble(SpacePtr space, std::vector<Scalar> values);
    /// Values keyed by state label; must cover every state exactly once.
    static Gamble from_labels(SpacePtr space, const std::map<std::string, Scalar>& values);

    static Gamble constant(SpacePtr space, const Scalar& c);
    /// Indicator of a single state.
    static Gamble indicator(SpacePtr space, const std::string& state);

    const SpacePtr& space() const noexcept { return space_; }
    std::size_t size() const noexcept { return values_.size(); }
    const Scalar& operator[](std::size_t i) const { return values_[i]; }
    const Scalar& at(const std::string& state) const;
    std::span<const Scalar> values() const noexcept { return values_; }

    Scalar min() const;
    Scalar max() const;

    /// Expectation under a probability vector in state order. No check that
    /// `mu` is a probability vector; length must match.
    Scalar expectation(std::span<const Scalar> mu) const;

    friend bool operator==(const Gamble& a, const Gamble& b);

private:
    SpacePtr space_;
    std::vector<Scalar> values_;
};

/// Pointwise a*f + b*g. Throws ModelError on mismatched spaces.
Gamble gamble_combine(const Gamble& f, const Gamble& g, const Scalar& a, const Scalar& b);

Gamble operator+(const Gamble& f, const Gamble& g);
Gamble operator-(const Gamble& f, const Gamble& g);
Gamble operator-(const Gamble& f);
Gamble operator*(const Scalar& a, const Gamble& f);

/// f >= g everywhere and f > g somewhere. Throws ModelError on mismatched
/// spaces.
bool pointwise_dominates(const Gamble& f, const Gamble& g);

/// Decision ids in problem order.
using IdList = std::vector<std::string>;

/// Finite set of decisions, each with its gain gamble on one shared space.
/// Decisions keep their insertion order.
class DecisionProblem {
public:
    using Entry = std::pair<std::string, Gamble>;

    /// Throws ModelError when empty, on duplicate ids, or when a gamble
    /// lives on a different space.
    DecisionProblem(SpacePtr space, std::vector<Entry> decisions);

    const SpacePtr& space() const noexcept { return space_; }
    std::size_t size() const noexcept { return decisions_.size(); }
    const std::vector<Entry>& decisions() const noexcept { return decisions_; }
    IdList ids() const;

    bool contains(const std::string& id) const;
    /// Throws ModelError for unknown ids.
    const Gamble& gamble(const std::string& id) const;
    std::size_t position(const std::string& id) const;

    /// Sub-problem restricted to `keep` (order follows this problem).
    DecisionProblem restrict_to(const IdList& keep) const;

private:
    SpacePtr space_;
    std::vector<Entry> decisions_;
    std::map<std::string, std::size_t> index_;
};

/// Ids whose gamble is not pointwise dominated by any other decision's
/// gamble. Identical gambles are all kept.
IdList admissible_set(const DecisionProblem& problem);

/// True iff `mu` has one non-negative entry per state and sums to one.
bool is_probability_vector(const PossibilitySpace& space, std::span<const Scalar> mu);

}  // namespace credal
