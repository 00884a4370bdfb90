#pragma once

#include <string>

#include "whirl/orbit.hpp"
#include "whirl/poset.hpp"
#include "json.hpp"

namespace whirl {

// Poset text grammar. Builder expressions:
//   chain(N) | V | claw(N) | <expr> x [K]
// or an explicit block:
//   elements: p
//   names: a b c ...        (optional)
//   i < j                   (one cover per line, by index or name)
Poset parse_poset(const std::string& text);

// Builder expression when the poset carries chain/claw/product structure,
// explicit block otherwise. parse_poset(serialize_poset(P)) reproduces P
// element-for-element.
std::string serialize_poset(const Poset& P);

// JSON mirror: {"size": p, "names": [...], "covers": [[i, j], ...]}.
nlohmann::json poset_to_json(const Poset& P);
Poset poset_from_json(const nlohmann::json& j);

// "(1,3,3)" or "1,3,3" in the poset's display order.
PPartition parse_ppartition(const Poset& P, const std::string& text, int k);

}  // namespace whirl
