#include "credal/lower_prevision.hpp"

#include "credal/errors.hpp"

#include <algorithm>

namespace credal {

LowerPrevisionModel::LowerPrevisionModel(SpacePtr space, std::vector<Assessment> assessments)
    : space_(std::move(space)) {
    if (!space_) throw ModelError("lower prevision needs a possibility space");
    for (auto& a : assessments) add_lower(std::move(a.gamble), std::move(a.lower));
}

void LowerPrevisionModel::add_lower(Gamble gamble, Scalar lower) {
    if (!same_space(space_, gamble.space())) throw ModelError("assessment lives on a different space");
    assessments_.push_back({std::move(gamble), std::move(lower)});
}

void LowerPrevisionModel::add_upper(const Gamble& gamble, const Scalar& upper) {
    add_lower(-gamble, -upper);
}

CredalSet build_credal_set(const LowerPrevisionModel& model) {
    const std::size_t n = model.space()->size();
    CredalSet set{model.space(), lp::Polytope::nonnegative_orthant(n)};
    set.region.add(std::vector<Scalar>(n, Scalar(1)), lp::Relation::Equal, Scalar(1));
    for (const auto& a : model.assessments()) {
        set.region.add({a.gamble.values().begin(), a.gamble.values().end()}, lp::Relation::GreaterEqual,
                       a.lower);
    }
    return set;
}

namespace {

std::string describe(const SureLossCertificate& c) {
    return "assessments incur a sure loss: paying " + c.payment.to_string() +
           " for a combination that returns at most " + c.best_gain.to_string();
}

// Farkas dual of the credal LP: maximise sum_i l_i P(f_i) - t subject to
// sum_i l_i f_i(x) <= t for every x, sum_i l_i = 1, l >= 0.
std::optional<SureLossCertificate> farkas_certificate(const LowerPrevisionModel& model,
                                                      const Scalar& phase_one_value) {
    const auto& as = model.assessments();
    const std::size_t k = as.size();
    if (k == 0) return std::nullopt;

    lp::LinearProgram prog;
    prog.sense = lp::Sense::Maximize;
    prog.region = lp::Polytope::nonnegative_orthant(k + 1);
    prog.region.nonneg[k] = false;
    prog.objective.resize(k + 1);
    for (std::size_t i = 0; i < k; ++i) prog.objective[i] = as[i].lower;
    prog.objective[k] = -1;
    for (std::size_t x = 0; x < model.space()->size(); ++x) {
        std::vector<Scalar> row(k + 1);
        for (std::size_t i = 0; i < k; ++i) row[i] = as[i].gamble[x];
        row[k] = -1;
        prog.region.add(std::move(row), lp::Relation::LessEqual, Scalar(0));
    }
    std::vector<Scalar> norm(k + 1, Scalar(1));
    norm[k] = 0;
    prog.region.add(std::move(norm), lp::Relation::Equal, Scalar(1));

    auto outcome = lp::solve(prog);
    const auto& best = std::get<lp::Optimal>(outcome);  // bounded: t >= max row
    if (best.value.sign() <= 0) return std::nullopt;

    SureLossCertificate cert;
    cert.weights.assign(best.point.begin(), best.point.begin() + static_cast<std::ptrdiff_t>(k));
    for (std::size_t i = 0; i < k; ++i) cert.payment += cert.weights[i] * as[i].lower;
    for (std::size_t x = 0; x < model.space()->size(); ++x) {
        Scalar gain;
        for (std::size_t i = 0; i < k; ++i) gain += cert.weights[i] * as[i].gamble[x];
        if (x == 0 || gain > cert.best_gain) cert.best_gain = gain;
    }
    cert.phase_one_value = phase_one_value;
    return cert;
}

ExtensionValue extend(const LowerPrevisionModel& model, const Gamble& g, lp::Sense sense) {
    if (!same_space(model.space(), g.space())) throw ModelError("gamble lives on a different space");
    lp::LinearProgram prog;
    prog.sense = sense;
    prog.region = build_credal_set(model).region;
    prog.objective.assign(g.values().begin(), g.values().end());
    auto outcome = lp::solve(prog);
    if (auto* inf = std::get_if<lp::Infeasible>(&outcome)) {
        throw SureLossError(*farkas_certificate(model, inf->phase_one_value));
    }
    // The credal set is a bounded simplex subset, so the LP is never unbounded.
    auto& opt = std::get<lp::Optimal>(outcome);
    return {std::move(opt.value), std::move(opt.point)};
}

}  // namespace

SureLossError::SureLossError(SureLossCertificate certificate)
    : std::runtime_error(describe(certificate)), certificate_(std::move(certificate)) {}

bool avoids_sure_loss(const LowerPrevisionModel& model) {
    lp::LinearProgram prog;
    prog.region = build_credal_set(model).region;
    prog.objective.assign(prog.region.variables, Scalar(0));
    return !lp::is_infeasible(lp::solve(prog));
}

std::optional<SureLossCertificate> sure_loss_certificate(const LowerPrevisionModel& model) {
    lp::LinearProgram prog;
    prog.region = build_credal_set(model).region;
    prog.objective.assign(prog.region.variables, Scalar(0));
    auto outcome = lp::solve(prog);
    auto* inf = std::get_if<lp::Infeasible>(&outcome);
    if (!inf) return std::nullopt;
    return farkas_certificate(model, inf->phase_one_value);
}

ExtensionValue natural_extension_lower(const LowerPrevisionModel& model, const Gamble& g) {
    return extend(model, g, lp::Sense::Minimize);
}

ExtensionValue natural_extension_upper(const LowerPrevisionModel& model, const Gamble& g) {
    return extend(model, g, lp::Sense::Maximize);
}

std::vector<CoherenceGap> coherence_report(const LowerPrevisionModel& model) {
    if (auto cert = sure_loss_certificate(model)) throw SureLossError(std::move(*cert));
    std::vector<CoherenceGap> out;
    const auto& as = model.assessments();
    for (std::size_t i = 0; i < as.size(); ++i) {
        out.push_back({i, natural_extension_lower(model, as[i].gamble).value - as[i].lower});
    }
    return out;
}

bool is_coherent(const std::vector<CoherenceGap>& report) {
    return std::all_of(report.begin(), report.end(), [](const auto& g) { return g.gap.is_zero(); });
}

}  // namespace credal
