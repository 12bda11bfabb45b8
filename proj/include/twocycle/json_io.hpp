#pragma once

#include <string>

#include "json.hpp"
#include "twocycle/bigint.hpp"
#include "twocycle/crossing.hpp"
#include "twocycle/forms.hpp"
#include "twocycle/graph.hpp"

namespace twocycle {

using Json = nlohmann::json;

// Every parser below throws std::invalid_argument naming the offending field;
// load_json_file carries the parser's byte location for malformed documents.
Json load_json_file(const std::string& path);

// Integers are accepted as JSON numbers or decimal strings and always emitted
// as decimal strings, so arbitrary precision survives the round trip.
Z z_from_json(const Json& j);
Json z_to_json(const Z& v);

// Exact rationals travel as "num" or "num/den" strings.
Q q_from_string(const std::string& s);
std::string q_to_string(const Q& v);

// {"vertices": n, "edges": [[tail,head],...]} — edge order fixes the edge
// indices and pair order fixes the reference orientation. Extra fields such
// as "labels" are permitted and ignored.
Graph graph_from_json(const Json& j);
Json graph_to_json(const Graph& g);

// {"entries": [[e,f,value],...]}; a bare array of triples is also accepted.
Form2 form_from_json(const Json& j);
Json form_to_json(const Form2& d);

// {"positions": [[x,y],...]} with rational coordinate strings, one pair per
// vertex in vertex order.
Drawing drawing_from_json(const Json& j);
Json drawing_to_json(const Drawing& dr);

}  // namespace twocycle
