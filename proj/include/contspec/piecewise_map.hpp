#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "contspec/space.hpp"

namespace contspec {

// One translation piece: (m, x) -> (target, x + offset) for x in source.
// A degenerate source [p,p] relocates the single point p.
struct Piece {
    Interval source;
    ColumnIndex target = 0;
    Rat offset;

    Interval image() const { return source.translated(offset); }
    bool operator==(const Piece&) const = default;
};

// A piecewise translation map between columns. Pieces are grouped by source
// column, kept sorted by source interval, with adjacent pieces of equal
// target and offset merged, so maps compare equal iff they agree pointwise.
class PiecewiseMap {
  public:
    using ColumnPieces = std::vector<Piece>;

    static PiecewiseMap identity(const ColumnSpace& space);

    void add(ColumnIndex source_column, Piece piece);
    // sort + merge + reject overlapping sources
    void normalize();

    const std::map<ColumnIndex, ColumnPieces>& columns() const { return columns_; }
    bool defined_on(ColumnIndex c) const { return columns_.count(c) != 0; }
    const ColumnPieces& pieces(ColumnIndex c) const;

    // Pointwise evaluation; nullopt when (column, x) is outside the domain.
    std::optional<std::pair<ColumnIndex, Rat>> apply(ColumnIndex column, const Rat& x) const;

    bool operator==(const PiecewiseMap&) const = default;

  private:
    std::map<ColumnIndex, ColumnPieces> columns_;
};

// g after h. Source columns of h whose image column is outside the domain
// of g are dropped; throws window_exhausted when nothing is left.
PiecewiseMap compose(const PiecewiseMap& g, const PiecewiseMap& h);

// Piecewise inverse; throws not_invertible when images overlap.
PiecewiseMap invert(const PiecewiseMap& f);

// n-fold composition; the space materializes the identity at n = 0.
PiecewiseMap power(const PiecewiseMap& f, long long n, const ColumnSpace& space);

// Sources tile every domain column of f exactly.
bool covers_domain(const PiecewiseMap& f, const ColumnSpace& space);

// Injective with images tiling every target column exactly, and total on
// its domain columns.
bool is_bijection(const PiecewiseMap& f, const ColumnSpace& space);

// Piece lists agree on every column the two maps share.
bool equal_on_common_columns(const PiecewiseMap& a, const PiecewiseMap& b);

} // namespace contspec
