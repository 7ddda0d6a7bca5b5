#pragma once

// JSON encodings of the library's values (schema "v1") and DOT rendering of
// posets.

#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ultratop/errors.hpp"
#include "ultratop/fintop.hpp"
#include "ultratop/point_set.hpp"
#include "ultratop/ringspec.hpp"
#include "ultratop/specz.hpp"
#include "ultratop/ultracore.hpp"

namespace ultratop::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "v1";

namespace detail {

inline const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw SchemaError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(std::string("missing field \"") + key + "\"");
  return *it;
}

inline std::vector<std::string> string_list(const Json& j, const char* what) {
  if (!j.is_array()) throw SchemaError(std::string(what) + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) throw SchemaError(std::string(what) + " must be an array of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

}  // namespace detail

// ---- carriers, subsets, families, spaces -----------------------------------

inline Json to_json(const Carrier& c, PointSet s) { return Json(c.labels_of(s)); }

inline PointSet subset_from_json(const Carrier& c, const Json& j) { return c.subset(detail::string_list(j, "subset")); }

inline Carrier carrier_from_json(const Json& j) { return Carrier(detail::string_list(j, "carrier")); }

inline Json to_json(const core::SetFamily& f) {
  Json members = Json::array();
  for (const auto& m : f.members()) members.push_back({{"name", m.name}, {"set", to_json(f.carrier(), m.set)}});
  return {{"carrier", f.carrier().labels()}, {"members", members}};
}

inline core::SetFamily family_from_json(const Json& j) {
  Carrier c = carrier_from_json(detail::field(j, "carrier"));
  const auto& ms = detail::field(j, "members");
  if (!ms.is_array()) throw SchemaError("\"members\" must be an array");
  std::vector<core::Member> members;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    const auto& m = ms[i];
    std::string name = "m" + std::to_string(i);
    if (m.is_object() && m.contains("name")) {
      if (!m["name"].is_string()) throw SchemaError("member name must be a string");
      name = m["name"].get<std::string>();
    }
    members.push_back({name, subset_from_json(c, detail::field(m, "set"))});
  }
  return core::SetFamily(std::move(c), std::move(members));
}

inline Json sets_to_json(const Carrier& c, const std::vector<PointSet>& sets) {
  Json out = Json::array();
  for (auto s : sets) out.push_back(to_json(c, s));
  return out;
}

inline Json to_json(const fintop::FinSpace& s) {
  return {{"carrier", s.carrier().labels()}, {"closed", sets_to_json(s.carrier(), s.closed_sets())}};
}

inline fintop::FinSpace space_from_json(const Json& j) {
  Carrier c = carrier_from_json(detail::field(j, "carrier"));
  const auto& cl = detail::field(j, "closed");
  if (!cl.is_array()) throw SchemaError("\"closed\" must be an array of subsets");
  std::vector<PointSet> closed;
  for (const auto& s : cl) closed.push_back(subset_from_json(c, s));
  return fintop::FinSpace(std::move(c), std::move(closed));
}

inline Json to_json(const fintop::SpectralReport& r) {
  Json j = {{"t0", r.t0}};
  if (r.indistinguishable) j["indistinguishable"] = {r.indistinguishable->first, r.indistinguishable->second};
  j["quasi_compact"] = r.quasi_compact;
  j["sober"] = r.sober;
  j["compact_open_basis"] = r.compact_open_basis;
  j["ultrafilter_criterion"] = r.ultrafilter_criterion;
  j["spectral"] = r.spectral;
  return j;
}

inline Json to_json(const fintop::Poset& p) {
  Json covers = Json::array();
  for (auto [lo, hi] : p.covers()) covers.push_back({p.carrier().label(lo), p.carrier().label(hi)});
  return {{"carrier", p.carrier().labels()}, {"covers", covers}};
}

namespace detail {

inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

}  // namespace detail

/// Hasse diagram: one node per point in carrier order, one edge per cover
/// relation, drawn from the lower point to the upper one.
inline std::string to_dot(const fintop::Poset& p, const std::string& name = "poset") {
  std::ostringstream os;
  os << "digraph " << detail::dot_quote(name) << " {\n  rankdir=BT;\n";
  for (const auto& l : p.carrier().labels()) os << "  " << detail::dot_quote(l) << ";\n";
  for (auto [lo, hi] : p.covers())
    os << "  " << detail::dot_quote(p.carrier().label(lo)) << " -> " << detail::dot_quote(p.carrier().label(hi))
       << ";\n";
  os << "}\n";
  return os.str();
}

// ---- rings -----------------------------------------------------------------

inline Json to_json(const ring::FiniteRing& r) {
  auto table = [&](const ring::Table& t) {
    Json rows = Json::array();
    for (const auto& row : t) {
      Json jr = Json::array();
      for (auto v : row) jr.push_back(r.label(v));
      rows.push_back(jr);
    }
    return rows;
  };
  return {{"elements", r.labels()},
          {"add", table(r.add_table())},
          {"mul", table(r.mul_table())},
          {"zero", r.label(r.zero())},
          {"one", r.label(r.one())}};
}

/// Accepts the table form, {"zmod": n}, or {"product": [ring, ring]}.
inline ring::FiniteRing ring_from_json(const Json& j) {
  if (!j.is_object()) throw SchemaError("ring must be a JSON object");
  if (j.contains("zmod")) {
    if (!j["zmod"].is_number_integer()) throw SchemaError("\"zmod\" must be an integer");
    auto n = j["zmod"].get<long long>();
    if (n < 2) throw DomainError("zmod needs n >= 2");
    return ring::FiniteRing::zmod(static_cast<std::size_t>(n));
  }
  if (j.contains("product")) {
    const auto& p = j["product"];
    if (!p.is_array() || p.size() != 2) throw SchemaError("\"product\" must be an array of two rings");
    return ring::FiniteRing::product(ring_from_json(p[0]), ring_from_json(p[1]));
  }
  auto labels = detail::string_list(detail::field(j, "elements"), "elements");
  auto index = [&](const Json& e) -> std::size_t {
    if (!e.is_string()) throw SchemaError("ring table entries must be element labels");
    auto s = e.get<std::string>();
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == s) return i;
    throw DomainError("'" + s + "' is not an element of the ring");
  };
  auto table = [&](const char* key) {
    const auto& t = detail::field(j, key);
    if (!t.is_array()) throw SchemaError(std::string("\"") + key + "\" must be a table");
    ring::Table out;
    for (const auto& row : t) {
      if (!row.is_array()) throw SchemaError(std::string("\"") + key + "\" rows must be arrays");
      std::vector<std::size_t> r;
      for (const auto& e : row) r.push_back(index(e));
      out.push_back(std::move(r));
    }
    return out;
  };
  auto add = table("add");
  auto mul = table("mul");
  auto zero = index(detail::field(j, "zero"));
  auto one = index(detail::field(j, "one"));
  return ring::FiniteRing::from_tables(std::move(labels), std::move(add), std::move(mul), zero, one);
}

inline std::vector<std::size_t> index_map_from_json(const Json& j) {
  if (!j.is_array()) throw SchemaError("\"map\" must be an array of element indices");
  std::vector<std::size_t> out;
  for (const auto& e : j) {
    if (!e.is_number_integer() || e.get<long long>() < 0) throw SchemaError("\"map\" entries must be indices");
    out.push_back(e.get<std::size_t>());
  }
  return out;
}

inline ring::RingEmbedding embedding_from_json(const Json& j) {
  return ring::RingEmbedding(ring_from_json(detail::field(j, "source")), ring_from_json(detail::field(j, "target")),
                             index_map_from_json(detail::field(j, "map")));
}

inline Json to_json(const ring::FiniteRing& r, const ring::Ideal& i) {
  return {{"label", i.label}, {"members", r.labels_of(i.members)}};
}

inline Json to_json(const ring::FiniteRing& r, const ring::Subring& c) {
  return {{"label", c.label}, {"size", c.size()}, {"members", r.labels_of(c.members)}};
}

// ---- Spec(Z) ---------------------------------------------------------------

namespace detail {

inline std::vector<specz::Prime> prime_list(const Json& j) {
  if (!j.is_array()) throw SchemaError("\"primes\" must be an array of integers");
  std::vector<specz::Prime> out;
  for (const auto& e : j) {
    if (!e.is_number_integer() || e.get<long long>() < 0) throw SchemaError("\"primes\" entries must be integers");
    out.push_back(e.get<specz::Prime>());
  }
  return out;
}

}  // namespace detail

inline Json to_json(const specz::ZSubsetDescriptor& d) {
  return {{"primes", d.primes()},
          {"mode", d.mode() == specz::SupportMode::Finite ? "finite" : "cofinite"},
          {"generic", d.include_generic()}};
}

inline specz::ZSubsetDescriptor descriptor_from_json(const Json& j) {
  auto primes = detail::prime_list(detail::field(j, "primes"));
  const auto& mode = detail::field(j, "mode");
  if (!mode.is_string()) throw SchemaError("\"mode\" must be \"finite\" or \"cofinite\"");
  specz::SupportMode m;
  if (mode == "finite") m = specz::SupportMode::Finite;
  else if (mode == "cofinite") m = specz::SupportMode::CofinitePrimes;
  else throw SchemaError("\"mode\" must be \"finite\" or \"cofinite\"");
  const auto& g = detail::field(j, "generic");
  if (!g.is_boolean()) throw SchemaError("\"generic\" must be a boolean");
  return specz::ZSubsetDescriptor(std::move(primes), m, g.get<bool>());
}

inline Json to_json(const specz::ZConstructible& c) { return {{"primes", c.primes()}, {"cofinite", c.cofinite()}}; }

/// Accepts {"primes": [...], "cofinite": bool}, {"v": n} or {"d": n}.
inline specz::ZConstructible constructible_from_json(const Json& j) {
  if (!j.is_object()) throw SchemaError("constructible set must be a JSON object");
  auto integer = [](const Json& e) {
    if (!e.is_number_integer()) throw SchemaError("\"v\"/\"d\" must be integers");
    return e.get<specz::Integer>();
  };
  if (j.contains("v")) return specz::v_of(integer(j["v"]));
  if (j.contains("d")) return specz::d_of(integer(j["d"]));
  const auto& cof = detail::field(j, "cofinite");
  if (!cof.is_boolean()) throw SchemaError("\"cofinite\" must be a boolean");
  return specz::ZConstructible(detail::prime_list(detail::field(j, "primes")), cof.get<bool>());
}

}  // namespace ultratop::io
