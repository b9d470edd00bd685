#include "contspec/piecewise_map.hpp"

#include <algorithm>

namespace contspec {

PiecewiseMap PiecewiseMap::identity(const ColumnSpace& space) {
    PiecewiseMap id;
    for (const auto& [index, column] : space.columns) {
        for (const auto& part : column.parts())
            id.add(index, Piece{part, index, Rat(0)});
    }
    id.normalize();
    return id;
}

void PiecewiseMap::add(ColumnIndex source_column, Piece piece) {
    columns_[source_column].push_back(std::move(piece));
}

void PiecewiseMap::normalize() {
    for (auto& [index, pieces] : columns_) {
        std::sort(pieces.begin(), pieces.end(),
                  [](const Piece& a, const Piece& b) { return interval_before(a.source, b.source); });
        ColumnPieces merged;
        for (const auto& p : pieces) {
            if (!merged.empty()) {
                Piece& last = merged.back();
                if (!disjoint_before(last.source, p.source))
                    throw std::logic_error("overlapping piece sources in column " + std::to_string(index));
                const bool touching = last.source.hi == p.source.lo &&
                                      (last.source.hi_closed || p.source.lo_closed);
                if (touching && last.target == p.target && last.offset == p.offset) {
                    last.source.hi = p.source.hi;
                    last.source.hi_closed = p.source.hi_closed;
                    continue;
                }
            }
            merged.push_back(p);
        }
        pieces = std::move(merged);
    }
}

const PiecewiseMap::ColumnPieces& PiecewiseMap::pieces(ColumnIndex c) const {
    const auto it = columns_.find(c);
    if (it == columns_.end())
        throw input_error("map not defined on column " + std::to_string(c));
    return it->second;
}

std::optional<std::pair<ColumnIndex, Rat>> PiecewiseMap::apply(ColumnIndex column, const Rat& x) const {
    const auto it = columns_.find(column);
    if (it == columns_.end())
        return std::nullopt;
    for (const Piece& p : it->second) {
        if (p.source.contains(x))
            return std::make_pair(p.target, x + p.offset);
    }
    return std::nullopt;
}

PiecewiseMap compose(const PiecewiseMap& g, const PiecewiseMap& h) {
    PiecewiseMap out;
    for (const auto& [column, pieces] : h.columns()) {
        const bool reachable = std::all_of(pieces.begin(), pieces.end(),
                                           [&](const Piece& p) { return g.defined_on(p.target); });
        if (!reachable)
            continue; // image leaves g's window: drop the column
        for (const Piece& hp : pieces) {
            const Interval image = hp.image();
            std::vector<Interval> covered;
            for (const Piece& gp : g.pieces(hp.target)) {
                const auto overlap = intersect(image, gp.source);
                if (!overlap)
                    continue;
                covered.push_back(*overlap);
                out.add(column, Piece{overlap->translated(-hp.offset), gp.target, hp.offset + gp.offset});
            }
            if (!tiles_exactly(covered, IntervalUnion({image})))
                throw std::logic_error("composition gap: inner image not tiled by outer sources");
        }
    }
    if (out.columns().empty())
        throw window_exhausted("composite map has no columns left; rebuild with a larger window");
    out.normalize();
    return out;
}

PiecewiseMap invert(const PiecewiseMap& f) {
    // group images per target column and demand pairwise disjointness
    std::map<ColumnIndex, std::vector<Interval>> images;
    PiecewiseMap out;
    for (const auto& [column, pieces] : f.columns()) {
        for (const Piece& p : pieces) {
            images[p.target].push_back(p.image());
            out.add(p.target, Piece{p.image(), column, -p.offset});
        }
    }
    for (auto& [target, list] : images) {
        std::sort(list.begin(), list.end(), interval_before);
        for (std::size_t i = 0; i + 1 < list.size(); ++i) {
            if (!disjoint_before(list[i], list[i + 1]))
                throw not_invertible("images overlap in column " + std::to_string(target));
        }
    }
    out.normalize();
    return out;
}

PiecewiseMap power(const PiecewiseMap& f, long long n, const ColumnSpace& space) {
    if (n == 0)
        return PiecewiseMap::identity(space);
    const PiecewiseMap step = n > 0 ? f : invert(f);
    PiecewiseMap acc = step;
    for (long long i = 1; i < std::llabs(n); ++i)
        acc = compose(step, acc);
    return acc;
}

bool covers_domain(const PiecewiseMap& f, const ColumnSpace& space) {
    for (const auto& [column, pieces] : f.columns()) {
        if (!space.has_column(column))
            return false;
        std::vector<Interval> sources;
        for (const Piece& p : pieces)
            sources.push_back(p.source);
        if (!tiles_exactly(sources, space.column(column)))
            return false;
    }
    return true;
}

bool is_bijection(const PiecewiseMap& f, const ColumnSpace& space) {
    if (!covers_domain(f, space))
        return false;
    std::map<ColumnIndex, std::vector<Interval>> images;
    for (const auto& [column, pieces] : f.columns()) {
        for (const Piece& p : pieces)
            images[p.target].push_back(p.image());
    }
    for (auto& [target, list] : images) {
        if (!space.has_column(target))
            return false;
        if (!tiles_exactly(list, space.column(target)))
            return false;
    }
    return true;
}

bool equal_on_common_columns(const PiecewiseMap& a, const PiecewiseMap& b) {
    for (const auto& [column, pieces] : a.columns()) {
        if (!b.defined_on(column))
            continue;
        if (pieces != b.pieces(column))
            return false;
    }
    return true;
}

} // namespace contspec
