#pragma once

#include "urforge/builder.hpp"
#include "urforge/orbits.hpp"
#include "urforge/quotient.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace urforge {

using Json = nlohmann::json;

// "0,1,5/2,4" or a JSON array of numbers or rational strings. Throws ParseError.
DistanceSet parse_distance_set(std::string_view text);
std::string format_distance_set(const DistanceSet& d);
Json distance_set_json(const DistanceSet& d);
DistanceSet distance_set_from_json(const Json& j);

// {"D":[...], "n":k, "dist":[[...]]}, rationals as strings.
Json space_json(const Space& s);
Space space_from_json(const Json& j);

// Space JSON plus {"seed":..., "saturation":k}.
Json approximant_json(const Approximant& a, int saturation);
Approximant approximant_from_json(const Json& j);

Json quotient_json(const QuotientSpace& q);
Json index_metric_json(const IndexMetric& m);

// Undirected graph with one labelled edge per pair.
std::string dot(const Space& s, const std::string& name = "space");

}  // namespace urforge
