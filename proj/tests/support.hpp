#pragma once

// Shared fixtures, random instance generators and brute-force oracles for
// the test suites. The oracles here use vertex enumeration and direct
// evaluation only; none of them calls the simplex.

#include "credal/criteria.hpp"
#include "credal/lower_prevision.hpp"
#include "credal/model.hpp"
#include "credal/vertices.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <vector>

namespace credal::test {

inline Scalar q(std::int64_t n, std::int64_t d = 1) { return Scalar(n, d); }

inline SpacePtr coin_space() { return make_space({"H", "T"}); }

inline Gamble on(const SpacePtr& s, std::vector<Scalar> v) { return Gamble(s, std::move(v)); }

/// Lower prevision with P(I_H) = 0.28 and P(-I_H) = -0.7.
inline LowerPrevisionModel coin_model(const SpacePtr& s) {
    LowerPrevisionModel m(s);
    m.add_lower(Gamble::indicator(s, "H"), q(7, 25));
    m.add_lower(-Gamble::indicator(s, "H"), q(-7, 10));
    return m;
}

inline DecisionProblem coin_problem(const SpacePtr& s) {
    return DecisionProblem(s, {
        {"1", on(s, {q(4), q(0)})},
        {"2", on(s, {q(0), q(4)})},
        {"3", on(s, {q(3), q(2)})},
        {"4", on(s, {q(1, 2), q(3)})},
        {"5", on(s, {q(47, 20), q(47, 20)})},
        {"6", on(s, {q(41, 10), q(-3, 10)})},
    });
}

class Generator {
public:
    explicit Generator(std::uint64_t seed) : rng_(seed) {}

    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
    }
    bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

    /// Small rationals in [-6, 6] with denominators 1, 2 or 4.
    Scalar value() {
        static const std::int64_t dens[] = {1, 1, 2, 4};
        const std::int64_t d = dens[uniform(0, 3)];
        return q(uniform(-6 * d, 6 * d), d);
    }

    SpacePtr space(std::size_t min_states = 2, std::size_t max_states = 4) {
        const auto n = static_cast<std::size_t>(uniform(static_cast<std::int64_t>(min_states),
                                                        static_cast<std::int64_t>(max_states)));
        std::vector<std::string> labels;
        for (std::size_t i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i));
        return make_space(std::move(labels));
    }

    Gamble gamble(const SpacePtr& s) {
        std::vector<Scalar> v;
        for (std::size_t i = 0; i < s->size(); ++i) v.push_back(value());
        return Gamble(s, std::move(v));
    }

    /// Random mass function with some zero entries now and then.
    std::vector<Scalar> mass(const SpacePtr& s) {
        std::vector<std::int64_t> w(s->size());
        std::int64_t total = 0;
        while (total == 0) {
            total = 0;
            for (auto& x : w) {
                x = coin(0.2) ? 0 : uniform(1, 9);
                total += x;
            }
        }
        std::vector<Scalar> mu;
        for (auto x : w) mu.push_back(q(x, total));
        return mu;
    }

    /// Model that avoids sure loss by construction: every assessment is at
    /// most its expectation under a hidden mass function.
    LowerPrevisionModel model(const SpacePtr& s, std::size_t max_assessments = 3) {
        const auto mu = mass(s);
        LowerPrevisionModel m(s);
        const auto k = uniform(0, static_cast<std::int64_t>(max_assessments));
        for (std::int64_t i = 0; i < k; ++i) {
            Gamble f = gamble(s);
            Scalar slack = coin(0.4) ? q(0) : q(uniform(1, 8), 4);
            m.add_lower(f, f.expectation(mu) - slack);
        }
        return m;
    }

    /// Single mass function encoded as point-wise lower and upper bounds.
    LowerPrevisionModel precise_model(const SpacePtr& s, const std::vector<Scalar>& mu) {
        LowerPrevisionModel m(s);
        for (std::size_t i = 0; i < s->size(); ++i) {
            Gamble ind = Gamble::indicator(s, s->label(i));
            m.add_lower(ind, mu[i]);
            m.add_upper(ind, mu[i]);
        }
        return m;
    }

    DecisionProblem problem(const SpacePtr& s, std::size_t min_decisions = 1, std::size_t max_decisions = 6) {
        const auto n = uniform(static_cast<std::int64_t>(min_decisions), static_cast<std::int64_t>(max_decisions));
        std::vector<DecisionProblem::Entry> ds;
        for (std::int64_t i = 0; i < n; ++i) {
            // Occasional duplicates exercise tie handling.
            if (i > 0 && coin(0.1)) {
                ds.emplace_back("d" + std::to_string(i), ds[static_cast<std::size_t>(uniform(0, i - 1))].second);
            } else {
                ds.emplace_back("d" + std::to_string(i), gamble(s));
            }
        }
        return DecisionProblem(s, std::move(ds));
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

inline std::vector<lp::Point> credal_vertices(const LowerPrevisionModel& m) {
    return lp::enumerate_vertices(build_credal_set(m).region);
}

/// Lower envelope of expectations over credal vertices.
inline Scalar lower_by_vertices(const std::vector<lp::Point>& vs, const Gamble& g) {
    Scalar best = g.expectation(vs.front());
    for (const auto& v : vs) best = std::min(best, g.expectation(v));
    return best;
}

inline Scalar upper_by_vertices(const std::vector<lp::Point>& vs, const Gamble& g) {
    Scalar best = g.expectation(vs.front());
    for (const auto& v : vs) best = std::max(best, g.expectation(v));
    return best;
}

inline bool subset(const IdList& a, const IdList& b) {
    return std::all_of(a.begin(), a.end(), [&](const auto& x) { return std::find(b.begin(), b.end(), x) != b.end(); });
}

/// Brute-force admissibility straight from the definition.
inline IdList admissible_oracle(const DecisionProblem& p) {
    IdList out;
    for (const auto& [d, jd] : p.decisions()) {
        bool dominated = false;
        for (const auto& [e, je] : p.decisions()) {
            bool ge = true, strict = false;
            for (std::size_t x = 0; x < jd.size(); ++x) {
                if (je[x] < jd[x]) ge = false;
                if (je[x] > jd[x]) strict = true;
            }
            if (ge && strict) dominated = true;
        }
        if (!dominated) out.push_back(d);
    }
    return out;
}

/// Maximality with every lower expectation taken over credal vertices.
inline IdList maximal_oracle(const DecisionProblem& p, const std::vector<lp::Point>& vs) {
    const IdList adm = admissible_oracle(p);
    IdList out;
    for (const auto& d : adm) {
        bool ok = std::all_of(adm.begin(), adm.end(), [&](const auto& e) {
            return lower_by_vertices(vs, p.gamble(e) - p.gamble(d)).sign() <= 0;
        });
        if (ok) out.push_back(d);
    }
    return out;
}

inline IdList interval_oracle(const DecisionProblem& p, const std::vector<lp::Point>& vs) {
    const IdList adm = admissible_oracle(p);
    Scalar best = lower_by_vertices(vs, p.gamble(adm.front()));
    for (const auto& e : adm) best = std::max(best, lower_by_vertices(vs, p.gamble(e)));
    IdList out;
    for (const auto& d : adm) {
        if (upper_by_vertices(vs, p.gamble(d)) >= best) out.push_back(d);
    }
    return out;
}

/// E-admissibility via vertex enumeration: d qualifies iff the bounded
/// polytope "credal set and E(J_d - J_e) >= 0 for all admissible e" has a
/// vertex.
inline IdList e_admissible_oracle(const DecisionProblem& p, const LowerPrevisionModel& m) {
    const IdList adm = admissible_oracle(p);
    IdList out;
    for (const auto& d : adm) {
        auto region = build_credal_set(m).region;
        for (const auto& e : adm) {
            if (e == d) continue;
            Gamble diff = p.gamble(d) - p.gamble(e);
            region.add({diff.values().begin(), diff.values().end()}, lp::Relation::GreaterEqual, Scalar(0));
        }
        if (!lp::enumerate_vertices(region).empty()) out.push_back(d);
    }
    return out;
}

/// Union of expected-utility argmax sets over the given mass functions.
inline IdList meu_union(const DecisionProblem& p, const std::vector<lp::Point>& mus) {
    IdList hits;
    for (const auto& mu : mus) {
        for (const auto& id : meu_optimal(p, mu).optimal) {
            if (std::find(hits.begin(), hits.end(), id) == hits.end()) hits.push_back(id);
        }
    }
    IdList out;
    for (const auto& id : p.ids()) {
        if (std::find(hits.begin(), hits.end(), id) != hits.end()) out.push_back(id);
    }
    return out;
}

}  // namespace credal::test
