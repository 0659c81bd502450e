#pragma once

#include "credal/lower_prevision.hpp"
#include "credal/model.hpp"

#include <json.hpp>

#include <istream>
#include <optional>
#include <string>
#include <vector>

namespace credal::io {

using Json = nlohmann::ordered_json;

/// A belief model and (optionally) a decision problem on one space, as read
/// from a problem file:
///
///   {
///     "space": ["H", "T"],
///     "assessments": [ {"gamble": {"H": 1, "T": 0}, "lower": "0.28"},
///                      {"gamble": {"H": 1, "T": 0}, "upper": 0.7} ],
///     "decisions": { "1": {"H": 4, "T": 0}, ... }
///   }
///
/// Numbers may be JSON integers, JSON decimals, or strings holding an
/// integer, a decimal, or "p/q". JSON decimals are read from their source
/// text, never through a double. Upper assessments become lower assessments
/// on the negated gamble.
struct ProblemFile {
    SpacePtr space;
    LowerPrevisionModel model;
    std::optional<DecisionProblem> decisions;
};

/// JSON text to a document in which every non-integer number has been kept
/// as its source string. Throws ParseError naming the line.
Json read_json(std::istream& in);
Json read_json(const std::string& text);

/// Throws ParseError on malformed syntax or structure and ModelError (via
/// ParseError with the field path) on missing or unknown states.
ProblemFile parse_problem(std::istream& in);
ProblemFile parse_problem_file(const std::string& path);
ProblemFile problem_from_json(const Json& doc);

/// Exact number from a JSON integer, decimal or rational string.
Scalar number_from_json(const Json& value, const std::string& field);

/// State->number object on `space`; `field` is used in error messages.
Gamble gamble_from_json(const SpacePtr& space, const Json& value, const std::string& field);

/// Probability vector given as a state->number object or an array in state
/// order. Not checked for normalisation.
std::vector<Scalar> vector_from_json(const SpacePtr& space, const Json& value, const std::string& field);

/// Normal form: every number a string in lowest terms, every assessment a
/// lower one. serialize(parse(serialize(x))) == serialize(x).
Json to_json(const ProblemFile& file);

}  // namespace credal::io
