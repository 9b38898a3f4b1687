#pragma once

#include <nlohmann/json.hpp>

#include "drkernel/report.hpp"

namespace drkernel {

// {"m": int, "multiplicity": int}
void to_json(nlohmann::json& j, const AlgebraDescriptor& d);
void from_json(const nlohmann::json& j, AlgebraDescriptor& d);

// {"V": [...], "Y": [...], "a": float}
void to_json(nlohmann::json& j, const GroupPoint& x);
void from_json(const nlohmann::json& j, GroupPoint& x);

// {"type": "finite", "v": [...], "y": [...]} or {"type": "infinity"}
void to_json(nlohmann::json& j, const BoundaryPoint& theta);
BoundaryPoint boundary_from_json(const nlohmann::json& j);

void to_json(nlohmann::json& j, const HessianReport& report);

/// J_1..J_m as row-major nested arrays, for debugging.
nlohmann::json generators_to_json(const Algebra& alg);

nlohmann::json vector_to_json(const Vector& v);
Vector vector_from_json(const nlohmann::json& j);

}  // namespace drkernel
