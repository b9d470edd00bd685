#pragma once

#include "contspec/cayley.hpp"
#include "contspec/continuity.hpp"

namespace contspec {

// A finite monoid or group realized on a column space: one column per
// element, one map f_n per element, with f_n sending column m into column
// m*n. The compact variant adds one isolated extra column (index = size)
// for the compactification point.
struct Realization {
    CayleyTable table;
    ColumnSpace space;
    std::vector<PiecewiseMap> family; // indexed by element id
};

// Half-open column model over a group; S must be a submonoid of G.
Realization build_group_realization(const CayleyTable& group, const ElementSubset& s);

// Same construction over a monoid; the maps need not be bijections.
Realization build_monoid_realization(const CayleyTable& monoid, const ElementSubset& s);

// Closed-interval model with endpoint flips across the H boundary plus an
// isolated point fixed by every map; H must be a subgroup of G.
Realization build_compact_realization(const CayleyTable& group, const ElementSubset& h);

ColumnIndex compact_point_column(const Realization& r);

// { n : f_n continuous } as member flags.
ElementSubset family_spectrum(const Realization& r);

// compose(f_n, f_m) == f_{op(m,n)} for all pairs.
bool verify_composition_law(const Realization& r);

// n -> f_n is injective.
bool family_injective(const Realization& r);

// every member's inverse is a member (group tables)
bool inverse_closed(const CayleyTable& group, const ElementSubset& s);

} // namespace contspec
