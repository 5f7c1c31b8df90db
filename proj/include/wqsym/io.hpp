#pragma once

#include <string_view>

#include <json.hpp>

#include "wqsym/forest.hpp"
#include "wqsym/linear_combination.hpp"
#include "wqsym/primitives.hpp"

namespace wqsym::io {

using Json = nlohmann::json;

// Every parser throws std::invalid_argument on malformed input.

Json to_json(const PackedWord& w);
Json to_json(const PositionSet& I);
/// {"I": [...], "left": [...], "right": [...]}
Json to_json(const BiplaneTree& t);
Json to_json(const Forest& f);
/// [{"word": [...], "coeff": "p/q"}, ...] sorted by word.
Json to_json(const Element& x);
/// [{"left": [...], "right": [...], "coeff": "p/q"}, ...]
Json to_json(const TensorElement& x);
Json to_json(const CheckResult& r);

PackedWord word_from_json(const Json& j);
PositionSet positions_from_json(const Json& j);
BiplaneTree tree_from_json(const Json& j);
Forest forest_from_json(const Json& j);
Element element_from_json(const Json& j);
TensorElement tensor_from_json(const Json& j);
CheckResult check_from_json(const Json& j);

/// Canonical reduced form: "3", "-1/2".
std::string coeff_string(const Rational& q);
Rational parse_coeff(std::string_view text);

/// Parses JSON text, reporting syntax errors as std::invalid_argument.
Json parse_json(std::string_view text);

}  // namespace wqsym::io
