#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "parikh/corpus.hpp"

namespace parikh {

using Json = nlohmann::ordered_json;

/// Documents are JSON objects with a "kind" field. Integers and rationals
/// are decimal strings ("3", "-1/2"); symbols are one-character strings.
/// Loaders throw InvalidArgument on any schema violation.
namespace io {

Json parse(std::string_view text);

Json to_json(const Nfa& a);
Json to_json(const SemilinearSet& s);
Json to_json(const PresburgerFormula& phi);
Json to_json(const QAffineSet& s);
Json to_json(const Constraint& c);
Json to_json(const ApaConstraint& c);
Json to_json(const Ca& m);
Json to_json(const Pa& m);
Json to_json(const Apa& m);
Json to_json(const Rbcm& m);
Json to_json(const Machine& m);
Json to_json(const Morphism& h);
Json to_json(const Path& p);

Nfa nfa_from_json(const Json& j);
SemilinearSet semilinear_from_json(const Json& j);
PresburgerFormula formula_from_json(const Json& j);
QAffineSet qaffine_from_json(const Json& j);
Constraint constraint_from_json(const Json& j);
ApaConstraint apa_constraint_from_json(const Json& j);
Ca ca_from_json(const Json& j);
Pa pa_from_json(const Json& j);
Apa apa_from_json(const Json& j);
Rbcm rbcm_from_json(const Json& j);
/// Any of ca, pa, apa, rbcm; an nfa document loads as a CA with constraint true.
Machine machine_from_json(const Json& j);
Morphism morphism_from_json(const Json& j);

std::string kind_of(const Json& j);
Json symbols_to_json(const Alphabet& a);
Alphabet symbols_from_json(const Json& j);

}  // namespace io

}  // namespace parikh
