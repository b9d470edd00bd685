#pragma once

#include <map>
#include <optional>

#include "contspec/interval.hpp"

namespace contspec {

using ColumnIndex = long long;

// A space presented as clopen vertical columns, each a finite union of
// rational intervals. Columns carry integer indices; realizations over a
// finite monoid use element ids, the integer-line realization uses the
// window [-W, W] and records W.
struct ColumnSpace {
    std::map<ColumnIndex, IntervalUnion> columns;
    std::optional<long long> window;

    bool has_column(ColumnIndex i) const { return columns.count(i) != 0; }
    const IntervalUnion& column(ColumnIndex i) const {
        const auto it = columns.find(i);
        if (it == columns.end())
            throw input_error("no column " + std::to_string(i));
        return it->second;
    }

    bool operator==(const ColumnSpace& o) const { return columns == o.columns; }
};

} // namespace contspec
