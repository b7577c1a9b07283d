#include "ballerg/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "serialize_detail.hpp"

namespace ballerg {

namespace detail {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json space_json(SpaceKind space) {
  if (space.is_c0()) return json("c0");
  json j;
  if (std::isinf(space.p()))
    j["lp"] = "inf";
  else
    j["lp"] = space.p();
  return j;
}

SpaceKind parse_space(const json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "c0") return SpaceKind::c0();
    throw std::invalid_argument("unknown space: " + j.get<std::string>());
  }
  if (j.is_object() && j.contains("lp")) {
    const auto& p = j.at("lp");
    if (p.is_string() && p.get<std::string>() == "inf") return SpaceKind::linf();
    return SpaceKind::lp(p.get<double>());
  }
  throw std::invalid_argument("space must be \"c0\" or {\"lp\": p}");
}

json vector_json(const Vector& v) {
  json j = json::array();
  for (const cdouble& c : v.coords()) j.push_back(json::array({c.real(), c.imag()}));
  return j;
}

Vector parse_vector(const json& j, SpaceKind space) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("vector must be a nonempty array");
  std::vector<cdouble> coords;
  coords.reserve(j.size());
  for (const auto& e : j) {
    if (e.is_number()) {
      coords.emplace_back(e.get<double>(), 0.0);
    } else if (e.is_array() && e.size() == 2) {
      coords.emplace_back(e[0].get<double>(), e[1].get<double>());
    } else {
      throw std::invalid_argument("vector entries must be numbers or [re, im] pairs");
    }
  }
  return Vector(std::move(coords), space);
}

namespace {

struct SymbolJsonVisitor {
  json operator()(const sym::ForwardShift&) const { return {{"kind", "forward_shift"}}; }
  json operator()(const sym::BackwardShift&) const { return {{"kind", "backward_shift"}}; }
  json operator()(const sym::AffineHalf&) const { return {{"kind", "affine_half"}}; }
  json operator()(const sym::AffineContracted& a) const {
    return {{"kind", "affine_contracted"}, {"c", a.c}, {"b", a.b}};
  }
  json operator()(const sym::CoordinateSquare&) const { return {{"kind", "coordinate_square"}}; }
  json operator()(const sym::CoordinatePower& p) const {
    return {{"kind", "coordinate_power"}, {"m", p.m}};
  }
  json operator()(const sym::DiagonalLinear& d) const {
    return {{"kind", "diagonal_linear"}, {"weights", d.weights}};
  }
  json operator()(const sym::Constant& c) const {
    return {{"kind", "constant"}, {"x0", vector_json(c.x0)}};
  }
  json operator()(const sym::MoebiusAuto& m) const {
    return {{"kind", "moebius"}, {"a", vector_json(m.a)}};
  }
  json operator()(const sym::Conjugated& c) const {
    return {{"kind", "conjugated"}, {"a", vector_json(c.a)}, {"inner", symbol_json(*c.inner)}};
  }
  json operator()(const sym::Composite& c) const {
    json parts = json::array();
    for (const Symbol& p : c.parts) parts.push_back(symbol_json(p));
    return {{"kind", "composite"}, {"parts", parts}};
  }
};

}  // namespace

json symbol_json(const Symbol& s) { return std::visit(SymbolJsonVisitor{}, s.variant()); }

Symbol parse_symbol(const json& j, SpaceKind ambient) {
  if (!j.is_object() || !j.contains("kind"))
    throw std::invalid_argument("symbol must be an object with a \"kind\" tag");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "forward_shift") return Symbol(sym::ForwardShift{});
  if (kind == "backward_shift") return Symbol(sym::BackwardShift{});
  if (kind == "affine_half") return Symbol(sym::AffineHalf{});
  if (kind == "affine_contracted")
    return Symbol(sym::AffineContracted{j.at("c").get<double>(), j.at("b").get<double>()});
  if (kind == "coordinate_square") return Symbol(sym::CoordinateSquare{});
  if (kind == "coordinate_power")
    return Symbol(sym::CoordinatePower{j.at("m").get<int>()});
  if (kind == "diagonal_linear")
    return Symbol(sym::DiagonalLinear{j.at("weights").get<std::vector<double>>()});
  if (kind == "constant") return Symbol(sym::Constant{parse_vector(j.at("x0"), ambient)});
  if (kind == "moebius") return Symbol(sym::MoebiusAuto{parse_vector(j.at("a"), ambient)});
  if (kind == "conjugated")
    return conjugate(parse_vector(j.at("a"), ambient), parse_symbol(j.at("inner"), ambient));
  if (kind == "composite") {
    std::vector<Symbol> parts;
    for (const auto& p : j.at("parts")) parts.push_back(parse_symbol(p, ambient));
    return Symbol(sym::Composite{std::move(parts)});
  }
  throw std::invalid_argument("unknown symbol kind: " + kind);
}

json polyfn_json(const PolyFn& f) {
  json terms = json::array();
  for (const auto& [alpha, c] : f.terms()) {
    json exps = json::object();
    for (const auto& [idx, exp] : alpha.entries()) exps[std::to_string(idx)] = exp;
    terms.push_back({{"exponents", exps}, {"coeff", json::array({c.real(), c.imag()})}});
  }
  return terms;
}

PolyFn parse_polyfn(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial must be a list of terms");
  PolyFn f;
  for (const auto& term : j) {
    std::vector<MultiIndex::Entry> entries;
    for (const auto& [key, value] : term.at("exponents").items())
      entries.emplace_back(std::stoull(key), value.get<std::uint64_t>());
    const auto& c = term.at("coeff");
    cdouble coeff = c.is_number() ? cdouble{c.get<double>(), 0.0}
                                  : cdouble{c[0].get<double>(), c[1].get<double>()};
    f.add_term(MultiIndex(std::move(entries)), coeff);
  }
  return f;
}

json dictionary_json(const Dictionary& d) {
  json entries = json::array();
  for (const auto& e : d.entries)
    entries.push_back({{"label", e.label}, {"terms", polyfn_json(e.fn)}, {"sup_norm", e.sup_norm}});
  return {{"entries", entries}};
}

Dictionary parse_dictionary(const json& j) {
  std::vector<DictionaryEntry> entries;
  for (const auto& e : j.at("entries")) {
    DictionaryEntry entry;
    entry.label = e.at("label").get<std::string>();
    entry.fn = parse_polyfn(e.at("terms"));
    entry.sup_norm = e.at("sup_norm").get<double>();
    entries.push_back(std::move(entry));
  }
  return Dictionary::of(std::move(entries));
}

json spec_json(const SeminormSpec& spec) {
  if (const auto* e = std::get_if<ExplicitPoints>(&spec.variant())) {
    json pts = json::array();
    for (const Vector& v : e->points.points) pts.push_back(vector_json(v));
    return {{"mode", "points"},
            {"space", space_json(e->points.points.front().space())},
            {"label", e->points.label},
            {"points", pts}};
  }
  const auto& s = std::get<SphereSample>(spec.variant());
  return {{"mode", "sphere"}, {"t", s.t},         {"count", s.count},
          {"seed", s.seed},   {"dim", s.dim},     {"space", space_json(s.space)}};
}

}  // namespace detail

std::string space_to_json(SpaceKind space) { return detail::space_json(space).dump(); }

SpaceKind space_from_json(const std::string& text) {
  return detail::parse_space(detail::json::parse(text));
}

std::string vector_to_json(const Vector& v) { return detail::vector_json(v).dump(); }

Vector vector_from_json(const std::string& text, SpaceKind space) {
  return detail::parse_vector(detail::json::parse(text), space);
}

std::string symbol_to_json(const Symbol& s) { return detail::symbol_json(s).dump(); }

Symbol symbol_from_json(const std::string& text, SpaceKind ambient) {
  return detail::parse_symbol(detail::json::parse(text), ambient);
}

std::string polyfn_to_json(const PolyFn& f) { return detail::polyfn_json(f).dump(); }

PolyFn polyfn_from_json(const std::string& text) {
  return detail::parse_polyfn(detail::json::parse(text));
}

std::string dictionary_to_json(const Dictionary& dict) {
  return detail::dictionary_json(dict).dump(2);
}

Dictionary dictionary_from_json(const std::string& text) {
  return detail::parse_dictionary(detail::json::parse(text));
}

std::string trace_to_csv(const CesaroTrace& trace) {
  std::string out = "n,dist_power,dist_cesaro\n";
  for (const TraceRow& row : trace.values) {
    out += std::to_string(row.n);
    out += ',';
    out += detail::format_double(row.dist_power);
    out += ',';
    out += detail::format_double(row.dist_cesaro);
    out += '\n';
  }
  return out;
}

std::string trace_to_json(const CesaroTrace& trace, std::uint64_t seed) {
  detail::json values = detail::json::array();
  for (const TraceRow& row : trace.values)
    values.push_back(detail::json::array({row.n, row.dist_power, row.dist_cesaro}));
  detail::json j = {{"symbol", detail::symbol_json(trace.symbol)},
                    {"f", trace.f_label},
                    {"limit", trace.limit_label},
                    {"spec", detail::spec_json(trace.spec)},
                    {"seed", seed},
                    {"values", values}};
  return j.dump(2);
}

}  // namespace ballerg
