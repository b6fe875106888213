#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "hap/dual.hpp"
#include "hap/family.hpp"
#include "hap/norms.hpp"
#include "hap/points.hpp"
#include "hap/polyhedral.hpp"

namespace hap {

using json = nlohmann::json;

// Canonical JSON text: keys sorted (the default object ordering), rationals
// as "num/den" strings with "n" when the denominator is one, one trailing
// newline. Identical inputs produce identical bytes.
std::string canonical_dump(const json& j);

json rational_to_json(const Rational& r);
Rational rational_from_json(const json& j);

json to_json(const FiniteSet& s);
FiniteSet finite_set_from_json(const json& j);

json to_json(const RatVec& v);
/// Accepts the sparse object form {"1":"1","3":"-1/2"} and the dense array
/// form ["1","-1/2",...] (position k holds coordinate k+1).
RatVec vector_from_json(const json& j);

json to_json(const Family& f);
Family family_from_json(const json& j);
/// Builtin shorthands: singletons, all_subsets, evens_odds, schreier:<k>,
/// dyadic:<depth>, dyadic. Throws hap::Error(unsupported) on anything else.
Family family_from_shorthand(const std::string& name);

json to_json(const SignedIndicator& f);
SignedIndicator signed_indicator_from_json(const json& j);

json to_json(const Decomposition& d);
Decomposition decomposition_from_json(const json& j);

json to_json(const NormResult& r);
json to_json(const StarSize& s);
json to_json(const ValidationReport& r);
json to_json(const Slice& s);
json to_json(const NonDeltaCertificate& c);
json to_json(const HolderCertificate& c);
json to_json(const DaugavetCertificate& c);
json to_json(const DeltaWitnesses& w);
json to_json(const PolyhedralityReport& r);
json to_json(const IVWitness& w);

}  // namespace hap
