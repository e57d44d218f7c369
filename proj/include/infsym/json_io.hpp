#pragma once

// JSON forms of the domain types. Rationals are always strings "p/q" (or
// "n"); decoding also accepts JSON integers.

#include "infsym/classify.hpp"
#include "infsym/diagram.hpp"
#include "infsym/symchar.hpp"
#include "infsym/thoma.hpp"
#include "infsym/total_positivity.hpp"

#include <json.hpp>

namespace infsym {

using json = nlohmann::json;

json encode(const Rational& q);
json encode(const Integer& z);
json encode(const Partition& p);
json encode(const Permutation& g);
json encode(const YoungDistribution& d);
json encode(const ThomaParams& p);
json encode(const ThomaMeasure& mu);
json encode(const PowerSeries& s);
json encode(const WiringDiagram& d);
json encode(const ReprLabel& label);
json encode(const MixtureSpec& spec);
json encode(const CharacterTable& t);
json encode(const Verdict& v);
json encode(const RelationReport& r);
json encode(const TPResult& r);
json encode(const EdreiResult& r);
json encode(const std::vector<Rational>& v);

/// Throws std::invalid_argument (never a json exception) on malformed input.
template <class T>
T decode(const json& j);

template <> Rational decode<Rational>(const json& j);
template <> Partition decode<Partition>(const json& j);
template <> Permutation decode<Permutation>(const json& j);
template <> YoungDistribution decode<YoungDistribution>(const json& j);
template <> ThomaParams decode<ThomaParams>(const json& j);
template <> ThomaMeasure decode<ThomaMeasure>(const json& j);
template <> PowerSeries decode<PowerSeries>(const json& j);
template <> WiringDiagram decode<WiringDiagram>(const json& j);
template <> ReprLabel decode<ReprLabel>(const json& j);
template <> MixtureSpec decode<MixtureSpec>(const json& j);
template <> std::vector<Rational> decode<std::vector<Rational>>(const json& j);

}  // namespace infsym
