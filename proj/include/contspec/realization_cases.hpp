#pragma once

#include "contspec/piecewise_map.hpp"

namespace contspec {

// Shared shape of the half-open column model: a member column is the single
// interval [0,2), a non-member column the split union [0,1) u [2,3).
inline IntervalUnion membership_column(bool member) {
    if (member)
        return IntervalUnion({Interval::half_open(0, 2)});
    return IntervalUnion({Interval::half_open(0, 1), Interval::half_open(2, 3)});
}

// Translation pieces of the transition from a source column into `target`,
// keyed on membership of the two columns:
//   member -> member        [0,2) straight across
//   out    -> out           both parts straight across
//   member -> out           [0,1) straight, [1,2) shifted up into [2,3)
//   out    -> member        [0,1) straight, [2,3) shifted down into [1,2)
inline std::vector<Piece> membership_pieces(bool source_member, bool target_member, ColumnIndex target) {
    std::vector<Piece> pieces;
    if (source_member && target_member) {
        pieces.push_back({Interval::half_open(0, 2), target, Rat(0)});
    } else if (!source_member && !target_member) {
        pieces.push_back({Interval::half_open(0, 1), target, Rat(0)});
        pieces.push_back({Interval::half_open(2, 3), target, Rat(0)});
    } else if (source_member) {
        pieces.push_back({Interval::half_open(0, 1), target, Rat(0)});
        pieces.push_back({Interval::half_open(1, 2), target, Rat(1)});
    } else {
        pieces.push_back({Interval::half_open(0, 1), target, Rat(0)});
        pieces.push_back({Interval::half_open(2, 3), target, Rat(-1)});
    }
    return pieces;
}

} // namespace contspec
