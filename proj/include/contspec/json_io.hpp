#pragma once

#include <nlohmann/json_fwd.hpp>

#include "contspec/algebraic_realization.hpp"
#include "contspec/finite_topology.hpp"
#include "contspec/line_realization.hpp"

// ADL serializers for nlohmann/json. Rationals are emitted as exact
// {"num", "den"} pairs; object keys are emitted sorted, so identical inputs
// yield byte-identical dumps.
namespace contspec {

void to_json(nlohmann::json& j, const Rat& r);
void to_json(nlohmann::json& j, const Interval& iv);
void to_json(nlohmann::json& j, const IntervalUnion& u);
void to_json(nlohmann::json& j, const ColumnSpace& space);
void to_json(nlohmann::json& j, const Piece& p);
void to_json(nlohmann::json& j, const PiecewiseMap& f);
void to_json(nlohmann::json& j, const Witness& w);
void to_json(nlohmann::json& j, const CanonicalSubmonoid& s);
void to_json(nlohmann::json& j, const TopologyClass& c);
void to_json(nlohmann::json& j, const CayleyTable& t);

void from_json(const nlohmann::json& j, CayleyTable& t);

// Subset bitmask -> sorted point list, e.g. 0b101 -> [0, 2].
std::vector<int> subset_points(std::uint32_t subset, int n_points);

} // namespace contspec
