#include "drkernel/serialization.hpp"

#include <cmath>

namespace drkernel {

using nlohmann::json;

json vector_to_json(const Vector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

Vector vector_from_json(const json& j) {
  if (!j.is_array()) throw Error("expected a JSON array of numbers");
  Vector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = j[i].get<double>();
  return v;
}

void to_json(json& j, const AlgebraDescriptor& d) { j = json{{"m", d.m}, {"multiplicity", d.multiplicity}}; }

void from_json(const json& j, AlgebraDescriptor& d) {
  d.m = j.at("m").get<int>();
  d.multiplicity = j.at("multiplicity").get<int>();
}

void to_json(json& j, const GroupPoint& x) {
  j = json{{"V", vector_to_json(x.V)}, {"Y", vector_to_json(x.Y)}, {"a", x.a}};
}

void from_json(const json& j, GroupPoint& x) {
  x.V = vector_from_json(j.at("V"));
  x.Y = vector_from_json(j.at("Y"));
  x.a = j.at("a").get<double>();
}

void to_json(json& j, const BoundaryPoint& theta) {
  if (theta.is_infinity()) {
    j = json{{"type", "infinity"}};
  } else {
    j = json{{"type", "finite"}, {"v", vector_to_json(theta.v())}, {"y", vector_to_json(theta.y())}};
  }
}

BoundaryPoint boundary_from_json(const json& j) {
  const std::string type = j.at("type").get<std::string>();
  if (type == "infinity") return BoundaryPoint::infinity();
  if (type == "finite") return BoundaryPoint::finite(vector_from_json(j.at("v")), vector_from_json(j.at("y")));
  throw Error("unknown boundary point type: " + type);
}

void to_json(json& j, const HessianReport& report) {
  j = json::object();
  j["id"] = report.id;
  j["point"] = report.point;
  j["theta"] = report.theta;
  j["case"] = std::string(to_string(report.point_case));
  j["spectrum"] = vector_to_json(report.spectrum);
  j["min_on_complement"] = report.min_on_complement;
  if (report.blocks) {
    j["identities"] = json{{"eq20", report.blocks->eq20},
                           {"eq21", report.blocks->eq21},
                           {"trB1", report.blocks->trB1},
                           {"detB_closed", report.blocks->detB_closed},
                           {"detB_numeric", report.blocks->detB_numeric}};
  } else {
    j["identities"] = nullptr;
  }
  j["diagnostics"] = json{{"gradient_norm", report.gradient_norm},
                          {"kernel_residual", report.kernel_residual},
                          {"symmetry_residual", report.symmetry_residual},
                          {"max_oracle_diff", report.max_oracle_diff},
                          {"oracle_asymmetry", report.oracle_asymmetry},
                          {"spectrum_residual", report.spectrum_residual},
                          {"continuity_gap", std::isnan(report.continuity_gap) ? json(nullptr)
                                                                               : json(report.continuity_gap)}};
  if (!report.warning.empty()) j["warning"] = report.warning;
  if (!report.failure.empty()) j["failure"] = report.failure;
  j["pass"] = report.pass;
}

json generators_to_json(const Algebra& alg) {
  json out = json::array();
  for (const Matrix& jr : alg.generators()) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < jr.rows(); ++i) {
      json row = json::array();
      for (Eigen::Index c = 0; c < jr.cols(); ++c) row.push_back(jr(i, c));
      rows.push_back(std::move(row));
    }
    out.push_back(std::move(rows));
  }
  return out;
}

}  // namespace drkernel
