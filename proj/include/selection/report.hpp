#pragma once

#include <string>

#include "json.hpp"
#include "selection/first_selection.hpp"
#include "selection/point.hpp"

namespace sel {

using Json = nlohmann::json;

inline constexpr int kReportSchema = 1;

// "a/b" in lowest terms, or "a" for integers.
std::string rational_string(const Rational& r);
std::string rational_string(i64 num, i64 den);

// Coordinates as exact strings plus a float convenience array.
Json point_json(const RationalPoint& p);

// Exact string plus float convenience field under key + "_float".
void put_rational(Json& j, const std::string& key, const Rational& r);

Json bound_check_json(const BoundCheck& c);

Json point_set_json(const PointSet& P);

// Envelope shared by every CLI report.
Json report_envelope(const std::string& command);

}  // namespace sel
