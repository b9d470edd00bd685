#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "contspec/errors.hpp"

namespace contspec {

// A topology on {0,..,n-1}, n <= 4. Subsets are bitmasks in [0, 2^n); the
// family itself is a bitmask over subsets: bit s set iff subset s is open.
struct FiniteTopology {
    int n_points = 0;
    std::uint32_t opens = 0;

    bool is_open(std::uint32_t subset) const { return (opens >> subset) & 1u; }
    std::vector<std::uint32_t> open_sets() const;

    bool operator==(const FiniteTopology&) const = default;
};

// Contains the empty set and the full set, closed under pairwise union and
// intersection (finite: arbitrary unions reduce to pairwise).
bool is_topology(std::uint32_t family, int n_points);

// All labeled topologies on n points, by exhaustive filter over the
// 2^(2^n - 2) families containing the empty and full sets. n <= 4.
std::vector<FiniteTopology> enumerate_topologies(int n_points);

// Lexicographically minimal relabeling under all n! point permutations;
// two topologies are homeomorphic iff their canonical forms agree.
FiniteTopology canonicalize_topology(const FiniteTopology& t);

using PointMap = std::vector<int>; // table[x] = image of x

bool is_continuous_map(const PointMap& m, const FiniteTopology& t);

std::vector<PointMap> all_permutations(int n_points);

// The group of continuous bijections of t (for finite spaces a continuous
// bijection is automatically a homeomorphism, so this set is a group).
std::vector<PointMap> continuous_bijections(const FiniteTopology& t);

// (order, sorted element orders) — separates groups up to order 6.
struct GroupSignature {
    std::size_t order = 0;
    std::vector<int> element_orders;
    bool operator==(const GroupSignature&) const = default;
};

GroupSignature signature_of(const std::vector<PointMap>& permutation_group);
GroupSignature trivial_signature();
GroupSignature cyclic_signature(int k);
GroupSignature symmetric3_signature();

// Name resolved by the element-order multiset; exact for order <= 6,
// larger groups are tagged by order only.
std::string small_group_name(const GroupSignature& sig);

struct TopologyClass {
    int class_id = 0;
    FiniteTopology representative; // canonical form
    std::size_t labeled_count = 0;
    std::size_t group_order = 0;
    std::string group_type;
};

// Homeomorphism classes of topologies on n points with their continuity
// groups, ordered by (number of opens, canonical bitmask).
std::vector<TopologyClass> classify_topologies(int n_points);

// First topology on n points whose continuous-bijection group matches the
// signature, scanning the labeled enumeration; nullopt when none exists.
std::optional<FiniteTopology> find_topology_with_group(int n_points, const GroupSignature& sig);

} // namespace contspec
