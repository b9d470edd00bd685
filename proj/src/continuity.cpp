#include "contspec/continuity.hpp"

#include <algorithm>
#include <set>

namespace contspec {

namespace {

const Piece* piece_holding(const PiecewiseMap::ColumnPieces& pieces, const Rat& p) {
    for (const Piece& piece : pieces) {
        if (piece.source.contains(p))
            return &piece;
    }
    return nullptr;
}

// the piece whose source contains (p - delta, p); unique since sources tile
const Piece* piece_left_of(const PiecewiseMap::ColumnPieces& pieces, const Rat& p) {
    for (const Piece& piece : pieces) {
        if (piece.source.covers_left_neighborhood(p))
            return &piece;
    }
    return nullptr;
}

const Piece* piece_right_of(const PiecewiseMap::ColumnPieces& pieces, const Rat& p) {
    for (const Piece& piece : pieces) {
        if (piece.source.covers_right_neighborhood(p))
            return &piece;
    }
    return nullptr;
}

} // namespace

ContinuityReport is_continuous(const PiecewiseMap& f, const ColumnSpace& space) {
    ContinuityReport report;
    for (const auto& [column, pieces] : f.columns()) {
        const IntervalUnion& domain = space.column(column);
        {
            std::vector<Interval> sources;
            for (const Piece& p : pieces)
                sources.push_back(p.source);
            if (!tiles_exactly(sources, domain))
                throw std::logic_error("pieces do not tile column " + std::to_string(column));
        }

        // Candidate points: piece boundaries that belong to the column.
        std::set<Rat> candidates;
        for (const Piece& piece : pieces) {
            if (domain.contains(piece.source.lo))
                candidates.insert(piece.source.lo);
            if (domain.contains(piece.source.hi))
                candidates.insert(piece.source.hi);
        }

        for (const Rat& p : candidates) {
            const Piece* at = piece_holding(pieces, p);
            if (at == nullptr)
                throw std::logic_error("candidate point escaped the tiling");
            const Interval* part = domain.part_containing(p);

            const auto check_side = [&](Side side) {
                const bool approachable = side == Side::Left ? part->lo < p : p < part->hi;
                if (!approachable)
                    return;
                const Piece* neighbor =
                    side == Side::Left ? piece_left_of(pieces, p) : piece_right_of(pieces, p);
                if (neighbor == nullptr)
                    throw std::logic_error("approachable side without a governing piece");
                if (neighbor->target == at->target && neighbor->offset == at->offset)
                    return;
                report.witnesses.push_back(Witness{column, p, side, at->target, p + at->offset,
                                                   neighbor->target, p + neighbor->offset});
            };
            check_side(Side::Left);
            check_side(Side::Right);
        }
    }
    report.continuous = report.witnesses.empty();
    return report;
}

} // namespace contspec
