#include "contspec/algebraic_realization.hpp"

#include "contspec/realization_cases.hpp"

namespace contspec {

namespace {

Realization build_half_open(const CayleyTable& table, const ElementSubset& s) {
    Realization r;
    r.table = table;
    for (int m = 0; m < table.size; ++m)
        r.space.columns.emplace(m, membership_column(s[static_cast<std::size_t>(m)]));
    for (int n = 0; n < table.size; ++n) {
        PiecewiseMap f;
        for (int m = 0; m < table.size; ++m) {
            const int target = table.at(m, n);
            for (Piece& piece : membership_pieces(s[static_cast<std::size_t>(m)],
                                                  s[static_cast<std::size_t>(target)], target))
                f.add(m, std::move(piece));
        }
        f.normalize();
        r.family.push_back(std::move(f));
    }
    return r;
}

} // namespace

Realization build_group_realization(const CayleyTable& group, const ElementSubset& s) {
    if (validate(group).kind != TableKind::Group)
        throw input_error("realization over a group requires a group table");
    if (!is_submonoid(group, s))
        throw input_error("subset is not a submonoid");
    return build_half_open(group, s);
}

Realization build_monoid_realization(const CayleyTable& monoid, const ElementSubset& s) {
    const TableKind kind = validate(monoid).kind;
    if (kind == TableKind::Invalid)
        throw input_error("not a monoid table: " + validate(monoid).detail);
    if (!is_submonoid(monoid, s))
        throw input_error("subset is not a submonoid");
    return build_half_open(monoid, s);
}

Realization build_compact_realization(const CayleyTable& group, const ElementSubset& h) {
    if (validate(group).kind != TableKind::Group)
        throw input_error("compact realization requires a group table");
    if (!is_subgroup(group, h))
        throw input_error("subset is not a subgroup");

    Realization r;
    r.table = group;
    const ColumnIndex point = group.size;
    for (int m = 0; m < group.size; ++m)
        r.space.columns.emplace(m, IntervalUnion({Interval::closed(0, 1)}));
    r.space.columns.emplace(point, IntervalUnion({Interval::point(0)}));

    for (int n = 0; n < group.size; ++n) {
        PiecewiseMap f;
        for (int m = 0; m < group.size; ++m) {
            const int target = group.at(m, n);
            const bool flip = h[static_cast<std::size_t>(m)] != h[static_cast<std::size_t>(target)];
            f.add(m, Piece{Interval::open(0, 1), target, Rat(0)});
            f.add(m, Piece{Interval::point(0), target, flip ? Rat(1) : Rat(0)});
            f.add(m, Piece{Interval::point(1), target, flip ? Rat(-1) : Rat(0)});
        }
        f.add(point, Piece{Interval::point(0), point, Rat(0)});
        f.normalize();
        r.family.push_back(std::move(f));
    }
    return r;
}

ColumnIndex compact_point_column(const Realization& r) { return r.table.size; }

ElementSubset family_spectrum(const Realization& r) {
    ElementSubset s(r.family.size(), false);
    for (std::size_t n = 0; n < r.family.size(); ++n)
        s[n] = is_continuous(r.family[n], r.space).continuous;
    return s;
}

bool verify_composition_law(const Realization& r) {
    for (int m = 0; m < r.table.size; ++m) {
        for (int n = 0; n < r.table.size; ++n) {
            const PiecewiseMap lhs = compose(r.family[static_cast<std::size_t>(n)],
                                             r.family[static_cast<std::size_t>(m)]);
            if (lhs != r.family[static_cast<std::size_t>(r.table.at(m, n))])
                return false;
        }
    }
    return true;
}

bool family_injective(const Realization& r) {
    for (std::size_t a = 0; a < r.family.size(); ++a) {
        for (std::size_t b = a + 1; b < r.family.size(); ++b) {
            if (r.family[a] == r.family[b])
                return false;
        }
    }
    return true;
}

bool inverse_closed(const CayleyTable& group, const ElementSubset& s) {
    for (int a : subset_ids(s)) {
        const auto inv = inverse_of(group, a);
        if (!inv || !s[static_cast<std::size_t>(*inv)])
            return false;
    }
    return true;
}

} // namespace contspec
