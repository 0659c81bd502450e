#include "credal/criteria.hpp"

#include "credal/errors.hpp"

#include <algorithm>

namespace credal {

std::string_view tag(Criterion c) {
    switch (c) {
        case Criterion::Admissible: return "admissible";
        case Criterion::Meu: return "meu";
        case Criterion::Maximin: return "maximin";
        case Criterion::Maximax: return "maximax";
        case Criterion::Maximal: return "maximal";
        case Criterion::Interval: return "interval";
        case Criterion::EAdmissible: return "eadmissible";
    }
    return "?";
}

std::optional<Criterion> parse_criterion(std::string_view name) {
    static const std::pair<std::string_view, Criterion> names[] = {
        {"admissible", Criterion::Admissible},
        {"meu", Criterion::Meu},
        {"maximin", Criterion::Maximin},
        {"maximax", Criterion::Maximax},
        {"maximal", Criterion::Maximal},
        {"maximality", Criterion::Maximal},
        {"interval", Criterion::Interval},
        {"intervaldominance", Criterion::Interval},
        {"eadmissible", Criterion::EAdmissible},
        {"eadmissibility", Criterion::EAdmissible},
    };
    for (const auto& [n, c] : names) {
        if (n == name) return c;
    }
    return std::nullopt;
}

namespace {

// Wraps natural extension and counts the linear programs it solves.
class Extender {
public:
    explicit Extender(const LowerPrevisionModel& model) : model_(model) {}

    ExtensionValue lower(const Gamble& g) { ++solves_; return natural_extension_lower(model_, g); }
    ExtensionValue upper(const Gamble& g) { ++solves_; return natural_extension_upper(model_, g); }

    void count(std::size_t n = 1) { solves_ += n; }
    std::size_t solves() const { return solves_; }
    const LowerPrevisionModel& model() const { return model_; }

private:
    const LowerPrevisionModel& model_;
    std::size_t solves_ = 0;
};

void require_ready(const DecisionProblem& problem, Extender& ext) {
    if (!same_space(problem.space(), ext.model().space())) {
        throw ModelError("decision problem and belief model live on different spaces");
    }
    ext.count();
    if (auto cert = sure_loss_certificate(ext.model())) throw SureLossError(std::move(*cert));
}

CriterionResult argmax_by(Criterion criterion, const DecisionProblem& problem, Extender& ext,
                          bool use_upper) {
    CriterionResult out{criterion};
    std::vector<std::pair<std::string, ExtensionValue>> values;
    for (const auto& id : admissible_set(problem)) {
        const Gamble& g = problem.gamble(id);
        values.emplace_back(id, use_upper ? ext.upper(g) : ext.lower(g));
    }
    const auto best = std::max_element(values.begin(), values.end(), [](const auto& a, const auto& b) {
                          return a.second.value < b.second.value;
                      })->second.value;
    for (auto& [id, v] : values) {
        if (v.value == best) {
            out.optimal.push_back(id);
            out.witnesses.emplace(id, CredalMeasure{std::move(v.witness)});
        }
    }
    return out;
}

// Lower/upper expectation of every decision in `ids`.
std::map<std::string, Bounds> interval_bounds(const DecisionProblem& problem, const IdList& ids,
                                              Extender& ext) {
    std::map<std::string, Bounds> out;
    for (const auto& id : ids) {
        const Gamble& g = problem.gamble(id);
        out.emplace(id, Bounds{ext.lower(g).value, ext.upper(g).value});
    }
    return out;
}

Scalar best_lower(const std::map<std::string, Bounds>& bounds) {
    return std::max_element(bounds.begin(), bounds.end(), [](const auto& a, const auto& b) {
               return a.second.lower < b.second.lower;
           })->second.lower;
}

// Maximality among `ids`. When interval bounds are known, a pair (e, d) is
// only checked if E(J_e) > E(J_d): otherwise superadditivity gives
// E(J_e - J_d) <= E(J_e) - E(J_d) <= 0.
void maximal_among(const DecisionProblem& problem, const IdList& ids,
                   const std::map<std::string, Bounds>* bounds, Extender& ext, CriterionResult& out) {
    for (const auto& d : ids) {
        const Gamble& jd = problem.gamble(d);
        bool rejected = false;
        for (const auto& e : ids) {
            if (e == d) continue;
            if (bounds && !(bounds->at(e).lower > bounds->at(d).lower)) continue;
            Scalar margin = ext.lower(problem.gamble(e) - jd).value;
            if (margin.sign() > 0) {
                out.witnesses.emplace(d, DominatingPair{e, std::move(margin)});
                rejected = true;
                break;
            }
        }
        if (!rejected) out.optimal.push_back(d);
    }
}

// E-admissibility among `ids`: one feasibility LP per decision over the
// credal set plus E(J_d - J_e) >= 0 for each other e.
void e_admissible_among(const DecisionProblem& problem, const IdList& ids, Extender& ext,
                        CriterionResult& out) {
    const CredalSet credal = build_credal_set(ext.model());
    for (const auto& d : ids) {
        const Gamble& jd = problem.gamble(d);
        lp::LinearProgram prog;
        prog.region = credal.region;
        prog.objective.assign(prog.region.variables, Scalar(0));
        for (const auto& e : ids) {
            if (e == d) continue;
            const Gamble diff = jd - problem.gamble(e);
            prog.region.add({diff.values().begin(), diff.values().end()}, lp::Relation::GreaterEqual,
                            Scalar(0));
        }
        ext.count();
        auto outcome = lp::solve(prog);
        if (auto* opt = std::get_if<lp::Optimal>(&outcome)) {
            out.optimal.push_back(d);
            out.witnesses.emplace(d, CredalMeasure{std::move(opt->point)});
        }
    }
}

IdList without(const IdList& ids, const IdList& drop) {
    IdList out;
    for (const auto& id : ids) {
        if (std::find(drop.begin(), drop.end(), id) == drop.end()) out.push_back(id);
    }
    return out;
}

}  // namespace

CriterionResult admissible(const DecisionProblem& problem) {
    return {Criterion::Admissible, admissible_set(problem)};
}

CriterionResult meu_optimal(const DecisionProblem& problem, std::span<const Scalar> mu) {
    if (!is_probability_vector(*problem.space(), mu)) {
        throw ModelError("mu must be a probability vector with one entry per state");
    }
    CriterionResult out{Criterion::Meu};
    std::vector<std::pair<std::string, Scalar>> values;
    for (const auto& id : admissible_set(problem)) values.emplace_back(id, problem.gamble(id).expectation(mu));
    Scalar best = values.front().second;
    for (const auto& v : values) best = std::max(best, v.second);
    for (const auto& [id, v] : values) {
        if (v == best) {
            out.optimal.push_back(id);
            out.witnesses.emplace(id, Bounds{v, v});
        }
    }
    return out;
}

CriterionResult gamma_maximin(const DecisionProblem& problem, const LowerPrevisionModel& model) {
    Extender ext(model);
    require_ready(problem, ext);
    auto out = argmax_by(Criterion::Maximin, problem, ext, false);
    out.lp_solves = ext.solves();
    return out;
}

CriterionResult gamma_maximax(const DecisionProblem& problem, const LowerPrevisionModel& model) {
    Extender ext(model);
    require_ready(problem, ext);
    auto out = argmax_by(Criterion::Maximax, problem, ext, true);
    out.lp_solves = ext.solves();
    return out;
}

CriterionResult maximal_set(const DecisionProblem& problem, const LowerPrevisionModel& model) {
    return run_pipeline(problem, model, Criterion::Maximal, false);
}

CriterionResult interval_dominant_set(const DecisionProblem& problem, const LowerPrevisionModel& model) {
    Extender ext(model);
    require_ready(problem, ext);
    CriterionResult out{Criterion::Interval};
    const IdList adm = admissible_set(problem);
    auto bounds = interval_bounds(problem, adm, ext);
    const Scalar threshold = best_lower(bounds);
    for (const auto& id : adm) {
        if (bounds.at(id).upper >= threshold) out.optimal.push_back(id);
        out.witnesses.emplace(id, bounds.at(id));
    }
    out.lp_solves = ext.solves();
    return out;
}

CriterionResult e_admissible_set(const DecisionProblem& problem, const LowerPrevisionModel& model) {
    return run_pipeline(problem, model, Criterion::EAdmissible, false);
}

std::optional<MixtureDominance> mixture_dominance(const DecisionProblem& problem,
                                                  const LowerPrevisionModel& model,
                                                  const std::string& target, const lp::VertexCap& cap) {
    if (!same_space(problem.space(), model.space())) {
        throw ModelError("decision problem and belief model live on different spaces");
    }
    const IdList adm = admissible_set(problem);
    problem.position(target);
    if (std::find(adm.begin(), adm.end(), target) == adm.end()) {
        throw ModelError("mixture target '" + target + "' is not admissible");
    }
    const auto vertices = lp::enumerate_vertices(build_credal_set(model).region, cap);
    if (vertices.empty()) throw SureLossError(*sure_loss_certificate(model));

    // Variables: one weight per admissible decision, then the free margin t.
    const std::size_t k = adm.size();
    lp::LinearProgram prog;
    prog.sense = lp::Sense::Maximize;
    prog.region = lp::Polytope::nonnegative_orthant(k + 1);
    prog.region.nonneg[k] = false;
    prog.objective.assign(k + 1, Scalar(0));
    prog.objective[k] = 1;
    std::vector<Scalar> simplex(k + 1, Scalar(1));
    simplex[k] = 0;
    prog.region.add(std::move(simplex), lp::Relation::Equal, Scalar(1));
    const Gamble& jt = problem.gamble(target);
    for (const auto& mu : vertices) {
        std::vector<Scalar> row(k + 1);
        for (std::size_t i = 0; i < k; ++i) row[i] = problem.gamble(adm[i]).expectation(mu);
        row[k] = -1;
        prog.region.add(std::move(row), lp::Relation::GreaterEqual, jt.expectation(mu));
    }
    auto outcome = lp::solve(prog);
    const auto& best = std::get<lp::Optimal>(outcome);  // t is bounded by any vertex row
    if (best.value.sign() <= 0) return std::nullopt;

    MixtureDominance out{target, {}, best.value};
    for (std::size_t i = 0; i < k; ++i) {
        if (best.point[i].sign() > 0) out.weights.emplace(adm[i], best.point[i]);
    }
    return out;
}

CriterionResult run_pipeline(const DecisionProblem& problem, const LowerPrevisionModel& model,
                             Criterion criterion, bool prefilter, std::optional<std::vector<Scalar>> mu) {
    if (prefilter && criterion != Criterion::Maximal && criterion != Criterion::EAdmissible) {
        throw FlagError("the interval-dominance prefilter applies to maximality and E-admissibility only");
    }
    if (criterion == Criterion::Meu) {
        if (!mu) throw FlagError("maximising expected utility needs a probability vector");
        if (!same_space(problem.space(), model.space())) {
            throw ModelError("decision problem and belief model live on different spaces");
        }
        return meu_optimal(problem, *mu);
    }
    if (mu) throw FlagError("a probability vector is only meaningful for maximising expected utility");

    switch (criterion) {
        case Criterion::Admissible: return admissible(problem);
        case Criterion::Maximin: return gamma_maximin(problem, model);
        case Criterion::Maximax: return gamma_maximax(problem, model);
        case Criterion::Interval: return interval_dominant_set(problem, model);
        default: break;
    }

    Extender ext(model);
    require_ready(problem, ext);
    CriterionResult out{criterion};
    IdList candidates = admissible_set(problem);
    std::optional<std::map<std::string, Bounds>> bounds;
    if (prefilter) {
        bounds = interval_bounds(problem, candidates, ext);
        const Scalar threshold = best_lower(*bounds);
        for (const auto& id : candidates) {
            if (bounds->at(id).upper < threshold) out.pruned.push_back(id);
        }
        candidates = without(candidates, out.pruned);
    }
    if (criterion == Criterion::Maximal) {
        maximal_among(problem, candidates, bounds ? &*bounds : nullptr, ext, out);
    } else {
        e_admissible_among(problem, candidates, ext, out);
    }
    out.lp_solves = ext.solves();
    return out;
}

}  // namespace credal
