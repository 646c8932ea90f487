#include "selection/report.hpp"

#include <numeric>

namespace sel {

std::string rational_string(i64 num, i64 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  i64 g = std::gcd(num, den);
  if (g == 0) g = 1;
  num /= g;
  den /= g;
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

std::string rational_string(const Rational& r) { return rational_string(r.numerator(), r.denominator()); }

Json point_json(const RationalPoint& p) {
  Json exact = Json::array();
  Json approx = Json::array();
  for (int k = 0; k < p.dim(); ++k) {
    exact.push_back(rational_string(p.num[static_cast<std::size_t>(k)], p.den));
    approx.push_back(static_cast<double>(p.approx(k)));
  }
  return Json{{"exact", exact}, {"float", approx}};
}

void put_rational(Json& j, const std::string& key, const Rational& r) {
  j[key] = rational_string(r);
  j[key + "_float"] = boost::rational_cast<double>(r);
}

Json bound_check_json(const BoundCheck& c) {
  Json j;
  j["family"] = std::string(family_name(c.family));
  j["variant"] = std::string(variant_name(c.variant));
  j["n"] = c.n;
  j["d"] = c.d;
  put_rational(j, "coefficient", c.coefficient);
  j["slack"] = c.slack;
  j["direction"] = c.direction == BoundDirection::Lower ? "lower" : "upper";
  j["observed"] = c.observed;
  put_rational(j, "required", c.required);
  j["holds"] = c.holds;
  j["point"] = point_json(c.point);
  j["certificate"] = c.certificate;
  j["seed"] = c.seed;
  return j;
}

Json point_set_json(const PointSet& P) {
  Json pts = Json::array();
  for (const auto& p : P) pts.push_back(p.coords);
  return Json{{"dim", P.dim()}, {"points", pts}};
}

Json report_envelope(const std::string& command) { return Json{{"schema", kReportSchema}, {"command", command}}; }

}  // namespace sel
