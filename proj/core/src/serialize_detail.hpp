#pragma once

#include <json.hpp>

#include "ballerg/functions.hpp"
#include "ballerg/spaces.hpp"
#include "ballerg/symbols.hpp"

// nlohmann-level helpers shared by serialize.cpp and experiments.cpp; the
// public API stays string-based so the vendored header never leaks into
// installed headers.
namespace ballerg::detail {

using json = nlohmann::ordered_json;

json space_json(SpaceKind space);
SpaceKind parse_space(const json& j);

json vector_json(const Vector& v);
Vector parse_vector(const json& j, SpaceKind space);

json symbol_json(const Symbol& s);
Symbol parse_symbol(const json& j, SpaceKind ambient);

json polyfn_json(const PolyFn& f);
PolyFn parse_polyfn(const json& j);

json dictionary_json(const Dictionary& d);
Dictionary parse_dictionary(const json& j);

json spec_json(const SeminormSpec& spec);

// %.17g rendering used for all CSV fields.
std::string format_double(double v);

}  // namespace ballerg::detail
