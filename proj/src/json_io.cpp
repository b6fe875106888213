#include "hap/json_io.hpp"

#include <cstdio>

#include "hap/errors.hpp"

namespace hap {

std::string canonical_dump(const json& j) { return j.dump() + "\n"; }

json rational_to_json(const Rational& r) { return format_rational(r); }

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw_precondition("rationals must be strings or integers: " + j.dump());
}

json to_json(const FiniteSet& s) {
  json arr = json::array();
  for (int e : s) arr.push_back(e);
  return arr;
}

FiniteSet finite_set_from_json(const json& j) {
  if (!j.is_array()) throw_precondition("a set must be a JSON array");
  std::vector<int> elems;
  for (const auto& e : j) {
    if (!e.is_number_integer()) throw_precondition("set elements must be integers");
    elems.push_back(e.get<int>());
  }
  return FiniteSet::of(std::move(elems));
}

json to_json(const RatVec& v) {
  json obj = json::object();
  for (const auto& [i, r] : v) obj[std::to_string(i)] = rational_to_json(r);
  return obj;
}

RatVec vector_from_json(const json& j) {
  RatVec v;
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      char* end = nullptr;
      long idx = std::strtol(it.key().c_str(), &end, 10);
      if (!end || *end != '\0' || idx < 1)
        throw_precondition("vector keys must be positive integers: " + it.key());
      v.set(static_cast<int>(idx), rational_from_json(it.value()));
    }
    return v;
  }
  if (j.is_array()) {
    int idx = 1;
    for (const auto& entry : j) v.set(idx++, rational_from_json(entry));
    return v;
  }
  throw_precondition("vectors must be JSON objects or arrays");
}

json to_json(const Family& f) {
  json j = json::object();
  switch (f.kind()) {
    case FamilyKind::singletons: j["kind"] = "singletons"; break;
    case FamilyKind::all_subsets: j["kind"] = "all_subsets"; break;
    case FamilyKind::evens_odds: j["kind"] = "evens_odds"; break;
    case FamilyKind::schreier:
      j["kind"] = "schreier";
      j["order"] = f.schreier_order();
      break;
    case FamilyKind::dyadic_branches:
      j["kind"] = "dyadic_branches";
      if (f.dyadic_depth()) j["depth"] = *f.dyadic_depth();
      break;
    case FamilyKind::spread_hereditary_closure: {
      j["kind"] = "spread_hereditary_closure";
      json gens = json::array();
      for (const auto& g : f.generators()) gens.push_back(to_json(g));
      j["generators"] = gens;
      break;
    }
    case FamilyKind::explicit_sets: {
      j["kind"] = "explicit";
      json sets = json::array();
      for (const auto& s : f.raw_sets()) sets.push_back(to_json(s));
      j["sets"] = sets;
      j["complete"] = f.declared_complete();
      break;
    }
  }
  return j;
}

Family family_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind"))
    throw_precondition("family descriptions need a \"kind\" field");
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "singletons") return Family::singletons();
  if (kind == "all_subsets") return Family::all_subsets();
  if (kind == "evens_odds") return Family::evens_odds();
  if (kind == "schreier") return Family::schreier(j.value("order", 1));
  if (kind == "dyadic_branches") {
    if (j.contains("depth")) return Family::dyadic_branches(j.at("depth").get<int>());
    return Family::dyadic_branches(std::nullopt);
  }
  if (kind == "spread_hereditary_closure") {
    std::vector<FiniteSet> gens;
    for (const auto& g : j.at("generators")) gens.push_back(finite_set_from_json(g));
    return Family::spread_hereditary_closure(std::move(gens));
  }
  if (kind == "explicit") {
    std::vector<FiniteSet> sets;
    for (const auto& s : j.at("sets")) sets.push_back(finite_set_from_json(s));
    return Family::explicit_family(std::move(sets), j.value("complete", false));
  }
  throw_unsupported("unknown family kind: " + kind);
}

Family family_from_shorthand(const std::string& name) {
  if (name == "singletons") return Family::singletons();
  if (name == "all_subsets") return Family::all_subsets();
  if (name == "evens_odds") return Family::evens_odds();
  if (name == "dyadic") return Family::dyadic_branches(std::nullopt);
  auto colon = name.find(':');
  if (colon != std::string::npos) {
    std::string head = name.substr(0, colon);
    int arg = std::atoi(name.c_str() + colon + 1);
    if (head == "schreier" && arg >= 1) return Family::schreier(arg);
    if (head == "dyadic" && arg >= 1) return Family::dyadic_branches(arg);
  }
  throw_unsupported("unknown family shorthand: " + name);
}

json to_json(const SignedIndicator& f) {
  json j;
  j["set"] = to_json(f.set);
  j["signs"] = f.signs;
  return j;
}

SignedIndicator signed_indicator_from_json(const json& j) {
  SignedIndicator f;
  f.set = finite_set_from_json(j.at("set"));
  for (const auto& s : j.at("signs")) {
    int v = s.get<int>();
    if (v != 1 && v != -1) throw_precondition("signs must be +1 or -1");
    f.signs.push_back(v);
  }
  if (static_cast<int>(f.signs.size()) != f.set.size())
    throw_precondition("signs must align with the set");
  return f;
}

json to_json(const Decomposition& d) {
  json terms = json::array();
  for (const auto& term : d.terms) {
    json t;
    t["weight"] = rational_to_json(term.weight);
    t["set"] = to_json(term.atom.set);
    t["signs"] = term.atom.signs;
    terms.push_back(t);
  }
  return json{{"terms", terms}};
}

Decomposition decomposition_from_json(const json& j) {
  Decomposition d;
  for (const auto& t : j.at("terms")) {
    SignedIndicator atom;
    atom.set = finite_set_from_json(t.at("set"));
    for (const auto& s : t.at("signs")) atom.signs.push_back(s.get<int>());
    d.terms.push_back({rational_from_json(t.at("weight")), std::move(atom)});
  }
  return d;
}

namespace {

std::string float_text(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

json sets_to_json(const std::vector<FiniteSet>& sets) {
  json arr = json::array();
  for (const auto& s : sets) arr.push_back(to_json(s));
  return arr;
}

}  // namespace

json to_json(const NormResult& r) {
  json j;
  j["achieving_sets"] = sets_to_json(r.achieving_sets);
  if (r.exact) {
    j["value"] = rational_to_json(r.value);
  } else {
    j["value"] = float_text(r.approx);
    j["exact"] = false;
  }
  return j;
}

json to_json(const StarSize& s) {
  json j;
  j["finite"] = s.finite;
  if (s.finite) j["count"] = s.count;
  return j;
}

json to_json(const ValidationReport& r) {
  json j;
  j["valid"] = r.valid;
  json violations = json::array();
  for (const auto& v : r.violations) {
    json entry;
    switch (v.kind) {
      case Violation::Kind::missing_empty_set: entry["kind"] = "missing_empty_set"; break;
      case Violation::Kind::missing_singleton: entry["kind"] = "missing_singleton"; break;
      case Violation::Kind::heredity_gap: entry["kind"] = "heredity_gap"; break;
    }
    entry["set"] = to_json(v.set);
    violations.push_back(entry);
  }
  j["violations"] = violations;
  return j;
}

json to_json(const Slice& s) {
  json j;
  j["functional"] = to_json(s.functional);
  j["width"] = rational_to_json(s.width);
  j["side"] = s.side == Side::primal ? "primal" : "dual";
  return j;
}

json to_json(const NonDeltaCertificate& c) {
  json j;
  j["kind"] = "non_delta";
  j["slice"] = to_json(c.slice);
  j["point"] = to_json(c.point);
  j["sup_distance"] = rational_to_json(c.sup_distance);
  j["bound_claimed"] = rational_to_json(c.bound_claimed);
  j["prefix_length"] = c.prefix_length;
  j["prefix_sets"] = sets_to_json(c.prefix_sets);
  return j;
}

json to_json(const HolderCertificate& c) {
  json j;
  j["kind"] = "holder";
  j["slice"] = to_json(c.slice);
  j["point"] = to_json(c.point);
  j["sup_distance"] = float_text(c.sup_distance);
  j["bound_claimed"] = float_text(c.bound_claimed);
  j["first_elements"] = c.first_elements;
  j["coordinate_floor"] = float_text(c.coordinate_floor);
  return j;
}

json to_json(const DaugavetCertificate& c) {
  json j;
  j["kind"] = "daugavet_exclusion";
  j["slice"] = to_json(c.slice);
  j["point"] = to_json(c.point);
  j["sup_distance"] = rational_to_json(c.sup_distance);
  j["bound_claimed"] = rational_to_json(c.bound_claimed);
  j["lambda"] = rational_to_json(c.lambda);
  j["atom"] = to_json(c.atom);
  j["decomposition"] = to_json(c.decomposition);
  j["diameter_bound"] = rational_to_json(c.diameter_bound);
  return j;
}

json to_json(const DeltaWitnesses& w) {
  json j;
  j["x_star"] = to_json(w.x_star);
  json witnesses = json::array();
  for (const auto& v : w.witnesses) witnesses.push_back(to_json(v));
  j["witnesses"] = witnesses;
  j["flipped"] = w.flipped;
  j["fraction"] = rational_to_json(w.fraction);
  return j;
}

namespace {

json flag_to_json(const Flag& f) {
  json j;
  if (f.value)
    j["value"] = *f.value;
  else
    j["value"] = "unknown";
  j["provenance"] =
      f.provenance == Provenance::by_theorem ? "by_theorem" : "by_computation";
  return j;
}

}  // namespace

json to_json(const PolyhedralityReport& r) {
  json j;
  j["finite_sets_only"] = flag_to_json(r.finite_sets_only);
  j["polyhedral"] = flag_to_json(r.polyhedral);
  j["v_polyhedral"] = flag_to_json(r.v_polyhedral);
  j["iv_polyhedral"] = flag_to_json(r.iv_polyhedral);
  j["i_polyhedral"] = flag_to_json(r.i_polyhedral);
  j["shrinking_basis"] = flag_to_json(r.shrinking_basis);
  if (r.c0_window_set) j["c0_window_set"] = to_json(*r.c0_window_set);
  return j;
}

json to_json(const IVWitness& w) {
  json j;
  j["x_star"] = to_json(w.x_star);
  j["x"] = to_json(w.x);
  j["core"] = to_json(w.core);
  j["sets"] = sets_to_json(w.sets);
  json seq = json::array();
  for (const auto& v : w.sequence) seq.push_back(to_json(v));
  j["sequence"] = seq;
  json gaps = json::array();
  for (const auto& pg : w.pairing_gaps) {
    json entry;
    entry["probe"] = to_json(pg.probe);
    json values = json::array();
    for (const auto& g : pg.gaps) values.push_back(rational_to_json(g));
    entry["gaps"] = values;
    gaps.push_back(entry);
  }
  j["pairing_gaps"] = gaps;
  return j;
}

}  // namespace hap
