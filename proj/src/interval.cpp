#include "contspec/interval.hpp"

#include <algorithm>

namespace contspec {

Interval Interval::checked(Interval iv) {
    const bool ok = iv.lo < iv.hi || (iv.lo == iv.hi && iv.lo_closed && iv.hi_closed);
    if (!ok)
        throw input_error("empty or inverted interval: " + iv.str());
    return iv;
}

std::string Interval::str() const {
    return std::string(lo_closed ? "[" : "(") + lo.str() + "," + hi.str() + (hi_closed ? "]" : ")");
}

std::optional<Interval> intersect(const Interval& a, const Interval& b) {
    Rat lo = a.lo;
    bool lo_closed = a.lo_closed;
    if (b.lo > lo) {
        lo = b.lo;
        lo_closed = b.lo_closed;
    } else if (b.lo == lo) {
        lo_closed = lo_closed && b.lo_closed;
    }
    Rat hi = a.hi;
    bool hi_closed = a.hi_closed;
    if (b.hi < hi) {
        hi = b.hi;
        hi_closed = b.hi_closed;
    } else if (b.hi == hi) {
        hi_closed = hi_closed && b.hi_closed;
    }
    if (lo > hi)
        return std::nullopt;
    if (lo == hi && !(lo_closed && hi_closed))
        return std::nullopt;
    return Interval{lo, hi, lo_closed, hi_closed};
}

bool interval_before(const Interval& a, const Interval& b) {
    if (a.lo != b.lo)
        return a.lo < b.lo;
    if (a.lo_closed != b.lo_closed)
        return a.lo_closed;
    return a.hi < b.hi;
}

bool disjoint_before(const Interval& a, const Interval& b) {
    if (a.hi < b.lo)
        return true;
    return a.hi == b.lo && !(a.hi_closed && b.lo_closed);
}

namespace {

// Union of two sorted touching/overlapping intervals is an interval iff
// there is no pinhole gap between them.
bool joinable(const Interval& a, const Interval& b) {
    if (b.lo < a.hi)
        return true;
    if (b.lo == a.hi)
        return a.hi_closed || b.lo_closed;
    return false;
}

} // namespace

IntervalUnion::IntervalUnion(std::vector<Interval> parts) {
    for (const auto& p : parts)
        Interval::checked(p);
    std::sort(parts.begin(), parts.end(), interval_before);
    for (const auto& p : parts) {
        if (!parts_.empty() && joinable(parts_.back(), p)) {
            Interval& last = parts_.back();
            if (p.hi > last.hi) {
                last.hi = p.hi;
                last.hi_closed = p.hi_closed;
            } else if (p.hi == last.hi) {
                last.hi_closed = last.hi_closed || p.hi_closed;
            }
        } else {
            parts_.push_back(p);
        }
    }
}

const Interval* IntervalUnion::part_containing(const Rat& x) const {
    for (const auto& p : parts_) {
        if (p.contains(x))
            return &p;
        if (p.lo > x)
            break;
    }
    return nullptr;
}

std::string IntervalUnion::str() const {
    std::string s;
    for (const auto& p : parts_) {
        if (!s.empty())
            s += " u ";
        s += p.str();
    }
    return s.empty() ? "{}" : s;
}

bool tiles_exactly(std::vector<Interval> pieces, const IntervalUnion& whole) {
    std::sort(pieces.begin(), pieces.end(), interval_before);
    for (std::size_t i = 0; i + 1 < pieces.size(); ++i) {
        if (!disjoint_before(pieces[i], pieces[i + 1]))
            return false;
    }
    return IntervalUnion(pieces) == whole;
}

} // namespace contspec
