#include "credal/model.hpp"

#include "credal/errors.hpp"

#include <algorithm>
#include <set>

namespace credal {

PossibilitySpace::PossibilitySpace(std::vector<std::string> states) : states_(std::move(states)) {
    if (states_.empty()) {
        throw ModelError("possibility space must have at least one state");
    }
    std::set<std::string> seen;
    for (const auto& s : states_) {
        if (s.empty()) throw ModelError("state labels must be non-empty");
        if (!seen.insert(s).second) throw ModelError("duplicate state label '" + s + "'");
    }
}

std::size_t PossibilitySpace::index_of(const std::string& label) const {
    auto it = std::find(states_.begin(), states_.end(), label);
    if (it == states_.end()) throw ModelError("unknown state '" + label + "'");
    return static_cast<std::size_t>(it - states_.begin());
}

bool PossibilitySpace::contains(const std::string& label) const {
    return std::find(states_.begin(), states_.end(), label) != states_.end();
}

SpacePtr make_space(std::vector<std::string> states) {
    return std::make_shared<const PossibilitySpace>(std::move(states));
}

bool same_space(const SpacePtr& a, const SpacePtr& b) {
    return a == b || (a && b && *a == *b);
}

Gamble::Gamble(SpacePtr space, std::vector<Scalar> values)
    : space_(std::move(space)), values_(std::move(values)) {
    if (!space_) throw ModelError("gamble needs a possibility space");
    if (values_.size() != space_->size()) {
        throw ModelError("gamble has " + std::to_string(values_.size()) + " values for " +
                         std::to_string(space_->size()) + " states");
    }
}

Gamble Gamble::from_labels(SpacePtr space, const std::map<std::string, Scalar>& values) {
    if (!space) throw ModelError("gamble needs a possibility space");
    for (const auto& [state, v] : values) {
        if (!space->contains(state)) throw ModelError("unknown state '" + state + "'");
    }
    std::vector<Scalar> ordered;
    ordered.reserve(space->size());
    for (const auto& state : space->states()) {
        auto it = values.find(state);
        if (it == values.end()) throw ModelError("missing value for state '" + state + "'");
        ordered.push_back(it->second);
    }
    return Gamble(std::move(space), std::move(ordered));
}

Gamble Gamble::constant(SpacePtr space, const Scalar& c) {
    std::vector<Scalar> v(space->size(), c);
    return Gamble(std::move(space), std::move(v));
}

Gamble Gamble::indicator(SpacePtr space, const std::string& state) {
    std::vector<Scalar> v(space->size(), Scalar(0));
    v[space->index_of(state)] = 1;
    return Gamble(std::move(space), std::move(v));
}

const Scalar& Gamble::at(const std::string& state) const { return values_[space_->index_of(state)]; }

Scalar Gamble::min() const { return *std::min_element(values_.begin(), values_.end()); }
Scalar Gamble::max() const { return *std::max_element(values_.begin(), values_.end()); }

Scalar Gamble::expectation(std::span<const Scalar> mu) const {
    if (mu.size() != values_.size()) throw ModelError("probability vector length mismatch");
    Scalar sum;
    for (std::size_t i = 0; i < values_.size(); ++i) sum += mu[i] * values_[i];
    return sum;
}

bool operator==(const Gamble& a, const Gamble& b) {
    return same_space(a.space_, b.space_) && a.values_ == b.values_;
}

namespace {

void require_shared(const Gamble& f, const Gamble& g) {
    if (!same_space(f.space(), g.space())) throw ModelError("gambles live on different spaces");
}

}  // namespace

Gamble gamble_combine(const Gamble& f, const Gamble& g, const Scalar& a, const Scalar& b) {
    require_shared(f, g);
    std::vector<Scalar> h;
    h.reserve(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) h.push_back(a * f[i] + b * g[i]);
    return Gamble(f.space(), std::move(h));
}

Gamble operator+(const Gamble& f, const Gamble& g) { return gamble_combine(f, g, 1, 1); }
Gamble operator-(const Gamble& f, const Gamble& g) { return gamble_combine(f, g, 1, -1); }
Gamble operator-(const Gamble& f) { return gamble_combine(f, f, -1, 0); }
Gamble operator*(const Scalar& a, const Gamble& f) { return gamble_combine(f, f, a, 0); }

bool pointwise_dominates(const Gamble& f, const Gamble& g) {
    require_shared(f, g);
    bool strict = false;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] < g[i]) return false;
        if (f[i] > g[i]) strict = true;
    }
    return strict;
}

DecisionProblem::DecisionProblem(SpacePtr space, std::vector<Entry> decisions)
    : space_(std::move(space)), decisions_(std::move(decisions)) {
    if (!space_) throw ModelError("decision problem needs a possibility space");
    if (decisions_.empty()) throw ModelError("decision problem must have at least one decision");
    for (std::size_t i = 0; i < decisions_.size(); ++i) {
        const auto& [id, gamble] = decisions_[i];
        if (!index_.emplace(id, i).second) throw ModelError("duplicate decision id '" + id + "'");
        if (!same_space(space_, gamble.space())) {
            throw ModelError("decision '" + id + "' lives on a different space");
        }
    }
}

IdList DecisionProblem::ids() const {
    IdList out;
    out.reserve(decisions_.size());
    for (const auto& d : decisions_) out.push_back(d.first);
    return out;
}

bool DecisionProblem::contains(const std::string& id) const { return index_.contains(id); }

std::size_t DecisionProblem::position(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw ModelError("unknown decision '" + id + "'");
    return it->second;
}

const Gamble& DecisionProblem::gamble(const std::string& id) const {
    return decisions_[position(id)].second;
}

DecisionProblem DecisionProblem::restrict_to(const IdList& keep) const {
    std::set<std::string> wanted(keep.begin(), keep.end());
    for (const auto& id : wanted) position(id);
    std::vector<Entry> kept;
    for (const auto& d : decisions_) {
        if (wanted.contains(d.first)) kept.push_back(d);
    }
    return DecisionProblem(space_, std::move(kept));
}

IdList admissible_set(const DecisionProblem& problem) {
    IdList out;
    const auto& ds = problem.decisions();
    for (const auto& [id, gamble] : ds) {
        bool dominated = std::any_of(ds.begin(), ds.end(), [&](const auto& other) {
            return pointwise_dominates(other.second, gamble);
        });
        if (!dominated) out.push_back(id);
    }
    return out;
}

bool is_probability_vector(const PossibilitySpace& space, std::span<const Scalar> mu) {
    if (mu.size() != space.size()) return false;
    Scalar total;
    for (const auto& p : mu) {
        if (p.sign() < 0) return false;
        total += p;
    }
    return total == Scalar(1);
}

}  // namespace credal
