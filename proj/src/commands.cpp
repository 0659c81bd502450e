#include "credal/commands.hpp"

#include "credal/criteria.hpp"
#include "credal/errors.hpp"
#include "credal/problem_file.hpp"

#include <functional>
#include <sstream>

namespace credal::cli {

using io::Json;

std::string render(const Scalar& s) {
    std::string exact = s.to_string();
    auto dec = s.to_decimal();
    if (!dec || *dec == exact) return exact;
    return exact + " (" + *dec + ")";
}

namespace {

std::string join(const IdList& ids) {
    std::string out = "{";
    for (std::size_t i = 0; i < ids.size(); ++i) out += (i ? ", " : "") + ids[i];
    return out + "}";
}

std::string measure_text(const PossibilitySpace& space, std::span<const Scalar> mu) {
    std::string out = "{";
    for (std::size_t i = 0; i < mu.size(); ++i) {
        out += (i ? ", " : "") + space.label(i) + ": " + mu[i].to_string();
    }
    return out + "}";
}

Json measure_json(const PossibilitySpace& space, std::span<const Scalar> mu) {
    Json out = Json::object();
    for (std::size_t i = 0; i < mu.size(); ++i) out[space.label(i)] = mu[i].to_string();
    return out;
}

Json ids_json(const IdList& ids) {
    Json out = Json::array();
    for (const auto& id : ids) out.push_back(id);
    return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// Runs `body`, mapping library exceptions onto the exit-code contract.
CommandResult guarded(const std::function<CommandResult()>& body) {
    try {
        return body();
    } catch (const SureLossError& e) {
        return {exit_code::sure_loss, "", std::string("error: ") + e.what() + "\n"};
    } catch (const FlagError& e) {
        return {exit_code::flag_misuse, "", std::string("error: ") + e.what() + "\n"};
    } catch (const ParseError& e) {
        return {exit_code::parse_error, "", std::string("error: ") + e.what() + "\n"};
    } catch (const ModelError& e) {
        return {exit_code::parse_error, "", std::string("error: ") + e.what() + "\n"};
    } catch (const CapacityError& e) {
        return {exit_code::capacity, "", std::string("error: ") + e.what() + "\n"};
    }
}

std::string certificate_text(const SureLossCertificate& c) {
    std::ostringstream os;
    os << "sure loss: yes\n";
    os << "certificate weights:";
    for (std::size_t i = 0; i < c.weights.size(); ++i) os << (i ? ", " : " ") << "[" << i << "] " << c.weights[i];
    os << "\n";
    os << "combined price: " << render(c.payment) << "\n";
    os << "best possible return: " << render(c.best_gain) << "\n";
    return os.str();
}

Json certificate_json(const SureLossCertificate& c) {
    Json w = Json::array();
    for (const auto& x : c.weights) w.push_back(x.to_string());
    return {{"weights", w}, {"payment", c.payment.to_string()}, {"best_gain", c.best_gain.to_string()}};
}

}  // namespace

CommandResult cmd_check(const std::string& path, Format format) {
    return guarded([&]() -> CommandResult {
        const auto file = io::parse_problem_file(path);
        const auto& model = file.model;
        if (auto cert = sure_loss_certificate(model)) {
            if (format == Format::Json) {
                Json doc = {{"avoids_sure_loss", false}, {"certificate", certificate_json(*cert)}};
                return {exit_code::sure_loss, dump(doc), ""};
            }
            return {exit_code::sure_loss, certificate_text(*cert), "error: assessments incur a sure loss\n"};
        }
        const auto gaps = coherence_report(model);
        const bool coherent = is_coherent(gaps);
        CommandResult res;
        if (!coherent) res.err = "warning: assessments are incoherent; natural extension corrects them\n";
        if (format == Format::Json) {
            Json g = Json::array();
            for (const auto& gap : gaps) g.push_back({{"index", gap.index}, {"gap", gap.gap.to_string()}});
            res.out = dump({{"avoids_sure_loss", true},
                            {"coherent", coherent},
                            {"vacuous", model.empty()},
                            {"gaps", g}});
            return res;
        }
        std::ostringstream os;
        os << "states: " << file.space->size() << "\n";
        os << "assessments: " << model.assessments().size() << "\n";
        os << "sure loss: no\n";
        if (model.empty()) {
            os << "coherent: yes (vacuous)\n";
        } else {
            os << "coherence gaps:\n";
            for (const auto& gap : gaps) {
                os << "  [" << gap.index << "] lower " << render(model.assessments()[gap.index].lower)
                   << ", gap " << render(gap.gap) << "\n";
            }
            os << "coherent: " << (coherent ? "yes" : "no") << "\n";
        }
        res.out = os.str();
        return res;
    });
}

CommandResult cmd_extend(const std::string& path, const std::string& gamble_json, Side side, Format format) {
    return guarded([&]() -> CommandResult {
        const auto file = io::parse_problem_file(path);
        const Gamble g = io::gamble_from_json(file.space, io::read_json(gamble_json), "--gamble");
        std::vector<std::pair<std::string, ExtensionValue>> rows;
        if (side != Side::Upper) rows.emplace_back("lower", natural_extension_lower(file.model, g));
        if (side != Side::Lower) rows.emplace_back("upper", natural_extension_upper(file.model, g));

        if (format == Format::Json) {
            Json doc = Json::object();
            for (const auto& [name, v] : rows) {
                Json entry = {{"value", v.value.to_string()}};
                if (auto d = v.value.to_decimal()) entry["decimal"] = *d;
                entry["witness"] = measure_json(*file.space, v.witness);
                doc[name] = std::move(entry);
            }
            return {exit_code::ok, dump(doc), ""};
        }
        std::ostringstream os;
        for (const auto& [name, v] : rows) {
            os << name << ": " << render(v.value) << " at mu = " << measure_text(*file.space, v.witness) << "\n";
        }
        return {exit_code::ok, os.str(), ""};
    });
}

namespace {

std::string witness_text(const PossibilitySpace& space, const Witness& w) {
    if (auto* m = std::get_if<CredalMeasure>(&w)) return "mu = " + measure_text(space, m->mu);
    if (auto* p = std::get_if<DominatingPair>(&w)) return "beaten by " + p->winner + ", margin " + render(p->margin);
    const auto& b = std::get<Bounds>(w);
    return "[" + render(b.lower) + ", " + render(b.upper) + "]";
}

Json witness_json(const PossibilitySpace& space, const Witness& w) {
    if (auto* m = std::get_if<CredalMeasure>(&w)) return {{"type", "credal_measure"}, {"mu", measure_json(space, m->mu)}};
    if (auto* p = std::get_if<DominatingPair>(&w)) {
        return {{"type", "dominating_pair"}, {"winner", p->winner}, {"margin", p->margin.to_string()}};
    }
    const auto& b = std::get<Bounds>(w);
    return {{"type", "bounds"}, {"lower", b.lower.to_string()}, {"upper", b.upper.to_string()}};
}

}  // namespace

CommandResult cmd_optimal(const std::string& path, const OptimalOptions& options) {
    return guarded([&]() -> CommandResult {
        const bool all = options.criterion == "all";
        std::optional<Criterion> single;
        if (!all) {
            single = parse_criterion(options.criterion);
            if (!single) throw FlagError("unknown criterion '" + options.criterion + "'");
            if (*single == Criterion::Meu && !options.mu_json) throw FlagError("--criterion meu requires --mu");
            if (*single != Criterion::Meu && options.mu_json) throw FlagError("--mu is only allowed with --criterion meu");
            if (options.prefilter && *single != Criterion::Maximal && *single != Criterion::EAdmissible) {
                throw FlagError("--prefilter applies to maximality and eadmissibility only");
            }
        }

        const auto file = io::parse_problem_file(path);
        if (!file.decisions) throw ParseError("decisions", "the problem file has no decisions");
        const auto& problem = *file.decisions;
        std::optional<std::vector<Scalar>> mu;
        if (options.mu_json) mu = io::vector_from_json(file.space, io::read_json(*options.mu_json), "--mu");

        std::vector<CriterionResult> results;
        auto run = [&](Criterion c) {
            const bool pre = options.prefilter && (c == Criterion::Maximal || c == Criterion::EAdmissible);
            results.push_back(run_pipeline(problem, file.model, c, pre, c == Criterion::Meu ? mu : std::nullopt));
        };
        if (all) {
            if (auto cert = sure_loss_certificate(file.model)) throw SureLossError(std::move(*cert));
            run(Criterion::Admissible);
            if (mu) run(Criterion::Meu);
            for (auto c : {Criterion::Maximin, Criterion::Maximax, Criterion::Maximal, Criterion::Interval,
                           Criterion::EAdmissible}) {
                run(c);
            }
        } else {
            run(*single);
        }

        const auto& space = *file.space;
        const IdList order = problem.ids();
        if (options.format == Format::Json) {
            Json list = Json::array();
            for (const auto& r : results) {
                Json entry = {{"criterion", tag(r.criterion)}, {"optimal", ids_json(r.optimal)}, {"lp_solves", r.lp_solves}};
                if (options.prefilter && (r.criterion == Criterion::Maximal || r.criterion == Criterion::EAdmissible)) {
                    entry["pruned"] = ids_json(r.pruned);
                }
                if (options.witness) {
                    Json ws = Json::object();
                    for (const auto& id : order) {
                        if (auto it = r.witnesses.find(id); it != r.witnesses.end()) ws[id] = witness_json(space, it->second);
                    }
                    entry["witnesses"] = std::move(ws);
                }
                list.push_back(std::move(entry));
            }
            return {exit_code::ok, dump({{"results", list}}), ""};
        }

        std::ostringstream os;
        for (const auto& r : results) {
            std::string name(tag(r.criterion));
            os << name << std::string(name.size() < 12 ? 12 - name.size() : 1, ' ') << join(r.optimal) << "\n";
            if (options.prefilter && (r.criterion == Criterion::Maximal || r.criterion == Criterion::EAdmissible)) {
                os << "  pruned by interval dominance: " << join(r.pruned) << " (" << r.lp_solves
                   << " linear programs)\n";
            }
            if (options.witness) {
                for (const auto& id : order) {
                    if (auto it = r.witnesses.find(id); it != r.witnesses.end()) {
                        os << "  " << id << ": " << witness_text(space, it->second) << "\n";
                    }
                }
            }
        }
        return {exit_code::ok, os.str(), ""};
    });
}

}  // namespace credal::cli
