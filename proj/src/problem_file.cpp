#include "credal/problem_file.hpp"

#include "credal/errors.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace credal::io {

namespace {

// DOM builder that stores floating-point literals as their source text.
class ExactSaxParser : public nlohmann::detail::json_sax_dom_parser<Json> {
public:
    using Base = nlohmann::detail::json_sax_dom_parser<Json>;
    using Base::Base;

    bool number_float(number_float_t /*val*/, const string_t& text) {
        string_t copy = text;
        return Base::string(copy);
    }
};

std::string line_of(const std::string& text, std::size_t byte) {
    std::size_t line = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') ++line;
    }
    return "line " + std::to_string(line);
}

}  // namespace

Json read_json(const std::string& text) {
    Json doc;
    ExactSaxParser sax(doc, true);
    try {
        Json::sax_parse(text, &sax);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(line_of(text, e.byte == 0 ? 0 : e.byte - 1), e.what());
    }
    return doc;
}

Json read_json(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return read_json(buf.str());
}

Scalar number_from_json(const Json& value, const std::string& field) {
    if (value.is_number_integer()) {
        return value.is_number_unsigned() ? Scalar::parse(std::to_string(value.get<std::uint64_t>()))
                                          : Scalar(value.get<std::int64_t>());
    }
    if (value.is_string()) {
        try {
            return Scalar::parse(value.get<std::string>());
        } catch (const ParseError& e) {
            throw ParseError(field, e.what());
        }
    }
    throw ParseError(field, "expected a number, got " + std::string(value.type_name()));
}

Gamble gamble_from_json(const SpacePtr& space, const Json& value, const std::string& field) {
    if (!value.is_object()) throw ParseError(field, "expected an object mapping states to numbers");
    std::map<std::string, Scalar> values;
    for (const auto& [state, v] : value.items()) {
        if (!space->contains(state)) throw ParseError(field, "unknown state '" + state + "'");
        values.emplace(state, number_from_json(v, field + "." + state));
    }
    for (const auto& state : space->states()) {
        if (!values.contains(state)) throw ParseError(field, "missing value for state '" + state + "'");
    }
    return Gamble::from_labels(space, values);
}

std::vector<Scalar> vector_from_json(const SpacePtr& space, const Json& value, const std::string& field) {
    if (value.is_array()) {
        if (value.size() != space->size()) {
            throw ParseError(field, "expected " + std::to_string(space->size()) + " entries");
        }
        std::vector<Scalar> out;
        for (std::size_t i = 0; i < value.size(); ++i) {
            out.push_back(number_from_json(value[i], field + "[" + std::to_string(i) + "]"));
        }
        return out;
    }
    auto g = gamble_from_json(space, value, field);
    return {g.values().begin(), g.values().end()};
}

ProblemFile problem_from_json(const Json& doc) {
    if (!doc.is_object()) throw ParseError("document", "expected a JSON object");
    for (const auto& [key, v] : doc.items()) {
        if (key != "space" && key != "assessments" && key != "decisions") {
            throw ParseError(key, "unknown field");
        }
    }

    if (!doc.contains("space") || !doc["space"].is_array()) {
        throw ParseError("space", "expected an array of state labels");
    }
    std::vector<std::string> labels;
    for (const auto& s : doc["space"]) {
        if (!s.is_string()) throw ParseError("space", "state labels must be strings");
        labels.push_back(s.get<std::string>());
    }
    SpacePtr space;
    try {
        space = make_space(std::move(labels));
    } catch (const ModelError& e) {
        throw ParseError("space", e.what());
    }

    LowerPrevisionModel model(space);
    if (doc.contains("assessments")) {
        const auto& list = doc["assessments"];
        if (!list.is_array()) throw ParseError("assessments", "expected an array");
        for (std::size_t i = 0; i < list.size(); ++i) {
            const std::string field = "assessments[" + std::to_string(i) + "]";
            const auto& a = list[i];
            if (!a.is_object() || !a.contains("gamble")) throw ParseError(field, "expected {gamble, lower|upper}");
            const bool lower = a.contains("lower");
            const bool upper = a.contains("upper");
            if (lower == upper) throw ParseError(field, "exactly one of 'lower' and 'upper' is required");
            for (const auto& [key, v] : a.items()) {
                if (key != "gamble" && key != "lower" && key != "upper") throw ParseError(field + "." + key, "unknown field");
            }
            Gamble g = gamble_from_json(space, a["gamble"], field + ".gamble");
            if (lower) {
                model.add_lower(std::move(g), number_from_json(a["lower"], field + ".lower"));
            } else {
                model.add_upper(g, number_from_json(a["upper"], field + ".upper"));
            }
        }
    }

    std::optional<DecisionProblem> decisions;
    if (doc.contains("decisions")) {
        const auto& ds = doc["decisions"];
        if (!ds.is_object() || ds.empty()) throw ParseError("decisions", "expected a non-empty object");
        std::vector<DecisionProblem::Entry> entries;
        for (const auto& [id, g] : ds.items()) {
            entries.emplace_back(id, gamble_from_json(space, g, "decisions." + id));
        }
        decisions.emplace(space, std::move(entries));
    }
    return {space, std::move(model), std::move(decisions)};
}

ProblemFile parse_problem(std::istream& in) { return problem_from_json(read_json(in)); }

ProblemFile parse_problem_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path, "cannot open file");
    try {
        return parse_problem(in);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.where(), std::string(e.what()).substr(e.where().size() + 2));
    }
}

namespace {

Json gamble_json(const Gamble& g) {
    Json out = Json::object();
    for (std::size_t i = 0; i < g.size(); ++i) out[g.space()->label(i)] = g[i].to_string();
    return out;
}

}  // namespace

Json to_json(const ProblemFile& file) {
    Json doc = Json::object();
    doc["space"] = file.space->states();
    doc["assessments"] = Json::array();
    for (const auto& a : file.model.assessments()) {
        doc["assessments"].push_back({{"gamble", gamble_json(a.gamble)}, {"lower", a.lower.to_string()}});
    }
    if (file.decisions) {
        Json ds = Json::object();
        for (const auto& [id, g] : file.decisions->decisions()) ds[id] = gamble_json(g);
        doc["decisions"] = std::move(ds);
    }
    return doc;
}

}  // namespace credal::io
