#pragma once

#include <string>

#include <json.hpp>

#include "incalg/commuting.hpp"

namespace incalg {

using Json = nlohmann::ordered_json;  // insertion-ordered keys for stable output

// Pre-order document: {"elements": ["1","2"], "relations": [["1","2"], ...],
// "transitive_close": bool}. "transitive_close" defaults to false, in which
// case the listed relation (plus reflexivity) must already be transitive.
PreOrderPtr poset_from_json(const Json& doc);
PreOrderPtr load_poset_file(const std::string& path);  // ParseError on IO/JSON problems
Json poset_to_json(const PreOrder& order);

// Element serialization: list of triples [["x","y","coeff"], ...] with
// coefficients as decimal strings; zero coefficients omitted; basis order.
Json element_to_json(const Element& element);
Element element_from_json(const AlgebraPtr& algebra, const Json& triples);

// Map document: {"ring": "Q", "entries": [{"on": ["i","j"],
// "value": [["x","y","coeff"], ...]}, ...]}; omitted basis elements map to
// zero. Entries are emitted in basis order, zero images omitted.
Json map_to_json(const LinearMap& map);
LinearMap map_from_json(const AlgebraPtr& algebra, const Json& doc);
RingSpec map_ring_spec(const Json& doc);  // reads the "ring" field
Json load_json_file(const std::string& path);  // ParseError with position context

}  // namespace incalg
