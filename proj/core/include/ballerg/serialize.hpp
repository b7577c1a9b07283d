#pragma once

#include <cstdint>
#include <string>

#include "ballerg/dynamics.hpp"
#include "ballerg/functions.hpp"
#include "ballerg/spaces.hpp"
#include "ballerg/symbols.hpp"

// JSON and CSV wire formats. Vectors are arrays of [re, im] pairs; ambient
// spaces are {"lp": p} (p = "inf" for the sup-norm sentinel) or "c0";
// symbols are a {"kind": ...} tagged union; polynomials are lists of
// {"exponents": {"i": power}, "coeff": [re, im]} with 0-based coordinate
// indices. Traces serialize to CSV with header n,dist_power,dist_cesaro and
// to JSON with full metadata.
namespace ballerg {

std::string space_to_json(SpaceKind space);
SpaceKind space_from_json(const std::string& text);

std::string vector_to_json(const Vector& v);
Vector vector_from_json(const std::string& text, SpaceKind space);

std::string symbol_to_json(const Symbol& s);
Symbol symbol_from_json(const std::string& text, SpaceKind ambient);

std::string polyfn_to_json(const PolyFn& f);
PolyFn polyfn_from_json(const std::string& text);

std::string dictionary_to_json(const Dictionary& dict);
Dictionary dictionary_from_json(const std::string& text);

// Deterministic byte output: fixed header, one row per n, %.17g fields.
std::string trace_to_csv(const CesaroTrace& trace);
std::string trace_to_json(const CesaroTrace& trace, std::uint64_t seed);

}  // namespace ballerg
