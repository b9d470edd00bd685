#pragma once

#include <vector>

#include "contspec/piecewise_map.hpp"

namespace contspec {

enum class Side { Left, Right };

// A point where a one-sided limit of the map disagrees with its value.
struct Witness {
    ColumnIndex column = 0;
    Rat point;
    Side side = Side::Left;
    ColumnIndex value_column = 0;
    Rat value_ordinate;
    ColumnIndex limit_column = 0;
    Rat limit_ordinate;

    bool operator==(const Witness&) const = default;
};

struct ContinuityReport {
    bool continuous = true;
    std::vector<Witness> witnesses;
};

// Exact continuity decision for a piecewise translation map on a column
// space. Columns are clopen, so the decision is column-by-column; within a
// column every piece translates rigidly, so the map is continuous away from
// piece boundaries, and at a boundary point p it is continuous iff, for each
// side from which p can be approached inside its own part of the column,
// the adjoining piece has the same target column and offset as the piece
// holding p. All witnesses are reported.
ContinuityReport is_continuous(const PiecewiseMap& f, const ColumnSpace& space);

} // namespace contspec
