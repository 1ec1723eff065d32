#pragma once

#include "ratseries/capacity.hpp"
#include "ratseries/contour.hpp"
#include "ratseries/dfinite.hpp"
#include "ratseries/hankel.hpp"
#include "ratseries/restriction.hpp"
#include "ratseries/series.hpp"

#include <json.hpp>

#include <cstddef>

namespace ratseries::io {

// Insertion-ordered JSON keeps report bytes stable across runs.
using json = nlohmann::ordered_json;

// Exact integers travel as decimal strings so consumers never overflow;
// plain JSON integers are accepted on input.
BigInt parse_bigint(const json& j);
std::vector<BigInt> parse_bigint_list(const json& j);
IntPoly parse_intpoly(const json& j);

// {"numerator": [...], "denominator": [...]}
RationalFn parse_rational_fn(const json& j);

// {"variables": ["z"] or ["z","w"], "equations": [[poly, ...], ...],
//  "initials": [[...], ...]}
DFiniteSystem parse_dfinite(const json& j);

// Univariate series spec: kind = rational | table | lacunary | dfinite.
IntSeries1D make_series_1d(const json& spec, std::size_t N);

// Bivariate series spec: kind = table (rows) | product (g, h) | dfinite.
BiSeries make_biseries(const json& spec, std::size_t N);

// {"points": [[re, im], ...]} or a named generator:
// {"generator":"circle","radius":r,"count":m}
// {"generator":"segment","a":[re,im],"b":[re,im],"count":m}
// {"generator":"gamma","phi":..,"psi":..,"s":..,"delta":..,"density":..}
PointCloud parse_cloud(const json& spec);

// {"phi": .., "psi": .., "s": .., "delta": ..}
GammaContour parse_contour(const json& spec);

// Evaluable function for contour work: kind = rational (exact integer
// P/Q evaluated in floating point) | poly.
ComplexFn parse_complex_fn(const json& spec);

json to_json(const IntPoly& p);
json to_json(const RationalFn& r);
json to_json(const IntSeries1D& s);
json to_json(const HankelReport& r);
json to_json(const CriterionReport& r);
json to_json(const CapacityEstimate& e);
json to_json(const DTauReport& r);
json to_json(const IotaCheckReport& r);
json to_json(const GeneratedSeries& s);
json to_json(const PipelineReport& r);

}  // namespace ratseries::io
