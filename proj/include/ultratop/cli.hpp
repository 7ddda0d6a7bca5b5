#pragma once

// Batch front end: one verb per invocation, JSON or DOT on stdout.
// Exit status: 0 success, 1 malformed input or usage, 2 domain violation.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ultratop/errors.hpp"
#include "ultratop/fintop.hpp"
#include "ultratop/json_io.hpp"
#include "ultratop/ringspec.hpp"
#include "ultratop/specz.hpp"
#include "ultratop/ultracore.hpp"

namespace ultratop::cli {

using io::Json;

enum class Format { Json, Dot };

enum ExitCode : int { kOk = 0, kMalformed = 1, kDomain = 2 };

struct Options {
  std::string verb;
  std::string input;
  Format format = Format::Json;
  std::optional<long long> zmod;
  std::optional<std::string> primes;
  bool generic = false;
  bool cofinite_list = false;
  std::optional<std::string> v_list;
  std::optional<std::string> d_list;
  std::optional<std::uint64_t> seed;
};

namespace detail {

inline Json read_input(const std::string& path, std::istream& in) {
  if (path.empty()) throw SchemaError("missing input (a file path, or - for stdin)");
  try {
    if (path == "-") return Json::parse(in);
    std::ifstream f(path);
    if (!f) throw SchemaError("cannot open input file '" + path + "'");
    return Json::parse(f);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(std::string("input is not valid JSON: ") + e.what());
  }
}

inline Json header(const std::string& verb) { return {{"schema", io::kSchemaVersion}, {"command", verb}}; }

inline std::vector<long long> integer_list(const std::string& text, const char* flag) {
  std::vector<long long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      long long v = std::stoll(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::logic_error&) {
      throw SchemaError(std::string(flag) + " expects a comma-separated list of integers");
    }
  }
  return out;
}

inline void require_json(const Options& o) {
  if (o.format != Format::Json) throw SchemaError("verb '" + o.verb + "' only supports --format json");
}

inline std::string cmd_ultra_topology(const Options& o, std::istream& in) {
  require_json(o);
  auto family = io::family_from_json(read_input(o.input, in));
  auto space = fintop::ultra_topology(family);
  Json j = header(o.verb);
  j["space"] = io::to_json(space);
  j["atoms"] = io::sets_to_json(family.carrier(), core::atoms(family).atoms());
  j["discrete"] = space.is_discrete();
  return j.dump(2) + "\n";
}

inline std::string cmd_closure(const Options& o, std::istream& in) {
  require_json(o);
  auto input = read_input(o.input, in);
  auto family = io::family_from_json(io::detail::field(input, "family"));
  auto y = io::subset_from_json(family.carrier(), io::detail::field(input, "subset"));
  Json limits = Json::array();
  for (auto p : y.indices())
    limits.push_back({{"point", family.carrier().label(p)},
                      {"limit_set", io::to_json(family.carrier(),
                                                core::limit_set(y, core::PrincipalUltrafilter(y, p), family))}});
  Json j = header(o.verb);
  j["subset"] = io::to_json(family.carrier(), y);
  j["stable"] = core::is_stable(y, family);
  j["closure"] = io::to_json(family.carrier(), core::stable_closure(y, family));
  j["limit_sets"] = limits;
  return j.dump(2) + "\n";
}

inline std::string cmd_atoms(const Options& o, std::istream& in) {
  require_json(o);
  auto family = io::family_from_json(read_input(o.input, in));
  auto algebra = core::atoms(family);
  Json j = header(o.verb);
  j["carrier"] = family.carrier().labels();
  j["atoms"] = io::sets_to_json(family.carrier(), algebra.atoms());
  j["algebra_size"] = std::uint64_t{1} << std::min<std::size_t>(algebra.atom_count(), 63);
  j["separates_points"] = family.separates_points();
  return j.dump(2) + "\n";
}

inline std::string cmd_check_spectral(const Options& o, std::istream& in) {
  auto space = io::space_from_json(read_input(o.input, in));
  if (o.format == Format::Dot) return io::to_dot(fintop::specialization_order(space), "specialization");
  auto report = fintop::is_spectral(space);
  Json j = header(o.verb);
  j["report"] = io::to_json(report);
  if (report.t0) j["specialization"] = io::to_json(fintop::specialization_order(space));
  return j.dump(2) + "\n";
}

inline std::string cmd_patch(const Options& o, std::istream& in) {
  require_json(o);
  auto space = io::space_from_json(read_input(o.input, in));
  auto patch = fintop::patch_topology(space);
  Json j = header(o.verb);
  j["space"] = io::to_json(patch);
  j["discrete"] = patch.is_discrete();
  return j.dump(2) + "\n";
}

inline std::string cmd_spec(const Options& o, std::istream& in) {
  if (o.zmod && *o.zmod < 2) throw DomainError("--zmod needs N >= 2");
  ring::FiniteRing r = o.zmod ? ring::FiniteRing::zmod(static_cast<std::size_t>(*o.zmod))
                              : io::ring_from_json(read_input(o.input, in));
  ring::Spectrum spec(r);
  auto space = spec.space();
  if (o.format == Format::Dot) return io::to_dot(fintop::specialization_order(space), "spec");
  auto principal = spec.principal_opens();
  auto ultra = fintop::ultra_topology(principal);
  auto patch = fintop::patch_topology(space);
  Json primes = Json::array();
  for (const auto& p : spec.primes()) primes.push_back(io::to_json(r, p));
  Json j = header(o.verb);
  j["ring_size"] = r.size();
  j["primes"] = primes;
  j["space"] = io::to_json(space);
  j["principal_opens"] = io::to_json(principal);
  j["principal_opens_form_basis"] = ring::is_basis(space, principal);
  j["ultra_topology"] = io::to_json(ultra);
  j["patch_topology"] = io::to_json(patch);
  j["ultra_equals_patch"] = ultra == patch;
  j["report"] = io::to_json(fintop::is_spectral(space));
  return j.dump(2) + "\n";
}

inline std::string cmd_overrings(const Options& o, std::istream& in) {
  auto e = io::embedding_from_json(read_input(o.input, in));
  ring::OverringSpace s(e);
  auto space = s.space();
  if (o.format == Format::Dot) return io::to_dot(fintop::specialization_order(space), "overrings");
  Json rings = Json::array();
  for (const auto& c : s.rings()) rings.push_back(io::to_json(s.target(), c));
  Json j = header(o.verb);
  j["rings"] = rings;
  j["subbasis"] = io::to_json(s.subbasis());
  j["space"] = io::to_json(space);
  j["report"] = io::to_json(fintop::is_spectral(space));
  return j.dump(2) + "\n";
}

inline std::string cmd_specz_closure(const Options& o, std::istream& in) {
  require_json(o);
  specz::ZSubsetDescriptor y;
  if (o.primes) {
    if (*o.primes == "all") {
      y = specz::ZSubsetDescriptor({}, specz::SupportMode::CofinitePrimes, o.generic);
    } else {
      std::vector<specz::Prime> ps;
      for (auto v : integer_list(*o.primes, "--primes")) {
        if (v < 0) throw SchemaError("--primes entries must be nonnegative");
        ps.push_back(static_cast<specz::Prime>(v));
      }
      y = specz::ZSubsetDescriptor(std::move(ps),
                                   o.cofinite_list ? specz::SupportMode::CofinitePrimes : specz::SupportMode::Finite,
                                   o.generic);
    }
  } else {
    y = io::descriptor_from_json(read_input(o.input, in));
  }
  auto verdict = specz::is_ultra_closed(y);
  Json j = header(o.verb);
  j["input"] = io::to_json(y);
  j["patch_closure"] = io::to_json(specz::patch_closure(y));
  j["zariski_closure"] = io::to_json(specz::zariski_closure(y));
  j["ultra_closed"] = verdict.closed;
  j["witness"] = verdict.witness ? Json(verdict.witness->label()) : Json(nullptr);
  return j.dump(2) + "\n";
}

inline std::string cmd_specz_fip(const Options& o, std::istream& in) {
  require_json(o);
  std::vector<specz::ZConstructible> sets;
  if (o.v_list || o.d_list) {
    if (o.v_list)
      for (auto n : integer_list(*o.v_list, "--v")) sets.push_back(specz::v_of(n));
    if (o.d_list)
      for (auto n : integer_list(*o.d_list, "--d")) sets.push_back(specz::d_of(n));
  } else {
    auto input = read_input(o.input, in);
    const Json& list = input.is_object() ? io::detail::field(input, "sets") : input;
    if (!list.is_array()) throw SchemaError("expected an array of constructible sets");
    for (const auto& e : list) sets.push_back(io::constructible_from_json(e));
  }
  if (sets.empty()) throw SchemaError("no constructible sets given");
  auto verdict = specz::z_fip_check(sets);
  Json listed = Json::array();
  for (const auto& s : sets) listed.push_back(io::to_json(s));
  Json j = header(o.verb);
  j["sets"] = listed;
  j["has_fip"] = verdict.has_fip;
  j["intersection"] = verdict.intersection ? io::to_json(*verdict.intersection) : Json(nullptr);
  j["witness"] = verdict.witness;
  return j.dump(2) + "\n";
}

}  // namespace detail

inline const std::vector<std::string>& verbs() {
  static const std::vector<std::string> v = {"ultra-topology", "closure", "atoms",        "check-spectral", "patch",
                                             "spec",           "overrings", "specz-closure", "specz-fip"};
  return v;
}

inline std::string describe(const std::string& verb) {
  if (verb == "ultra-topology") return "Closed sets of the ultrafilter topology of a set family";
  if (verb == "closure") return "Limit sets, stability and stable closure of a subset";
  if (verb == "atoms") return "Atoms of the Boolean algebra generated by a family";
  if (verb == "check-spectral") return "Spectral-space checks and specialization order of a finite space";
  if (verb == "patch") return "Patch topology of a finite space";
  if (verb == "spec") return "Prime spectrum of a finite ring (tables or --zmod N)";
  if (verb == "overrings") return "Space of intermediate rings of a ring embedding";
  if (verb == "specz-closure") return "Patch and Zariski closure of a subset of Spec(Z)";
  if (verb == "specz-fip") return "Finite intersection property of constructible subsets of Spec(Z)";
  return {};
}

/// Dispatches a parsed command and returns the report text.
inline std::string execute(const Options& o, std::istream& in) {
  if (o.verb == "ultra-topology") return detail::cmd_ultra_topology(o, in);
  if (o.verb == "closure") return detail::cmd_closure(o, in);
  if (o.verb == "atoms") return detail::cmd_atoms(o, in);
  if (o.verb == "check-spectral") return detail::cmd_check_spectral(o, in);
  if (o.verb == "patch") return detail::cmd_patch(o, in);
  if (o.verb == "spec") return detail::cmd_spec(o, in);
  if (o.verb == "overrings") return detail::cmd_overrings(o, in);
  if (o.verb == "specz-closure") return detail::cmd_specz_closure(o, in);
  if (o.verb == "specz-fip") return detail::cmd_specz_fip(o, in);
  throw SchemaError("unknown verb '" + o.verb + "'");
}

/// Full command-line entry point; `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ultrafilter topologies, spectra and closures on finite and symbolic spaces", "ultratop"};
  app.require_subcommand(1);
  Options o;
  std::string format = "json";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "dot"}));
  app.add_option("--seed", o.seed, "Seed for randomized commands (accepted for interface stability)");

  for (const auto& verb : verbs()) {
    auto* sub = app.add_subcommand(verb, describe(verb));
    sub->add_option("input", o.input, "Input JSON file, or - for stdin");
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "dot"}));
    sub->add_option("--seed", o.seed, "Seed for randomized commands");
    if (verb == "spec") sub->add_option("--zmod", o.zmod, "Use Z/N instead of an input ring");
    if (verb == "specz-closure") {
      sub->add_option("--primes", o.primes, "Comma-separated primes, or 'all' for Max(Z)");
      sub->add_flag("--generic", o.generic, "Include the generic point (0)");
      sub->add_flag("--cofinite", o.cofinite_list, "Read --primes as the excluded primes of a cofinite set");
    }
    if (verb == "specz-fip") {
      sub->add_option("--v", o.v_list, "Comma-separated n: adds V(n) for each");
      sub->add_option("--d", o.d_list, "Comma-separated n: adds D(n) for each");
    }
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kMalformed;
  }
  for (auto* sub : app.get_subcommands()) o.verb = sub->get_name();
  o.format = format == "dot" ? Format::Dot : Format::Json;

  try {
    out << execute(o, in);
    return kOk;
  } catch (const SchemaError& e) {
    err << "error: " << e.what() << "\n";
    return kMalformed;
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed input: " << e.what() << "\n";
    return kMalformed;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kDomain;
  }
}

}  // namespace ultratop::cli
