#pragma once

#include <optional>
#include <string>
#include <vector>

#include "contspec/rational.hpp"

namespace contspec {

// A rational interval with independently open/closed endpoints.
// Invariant: lo < hi, or lo == hi with both endpoints closed (a point).
struct Interval {
    Rat lo, hi;
    bool lo_closed = true;
    bool hi_closed = false;

    static Interval half_open(Rat lo, Rat hi) { return checked({lo, hi, true, false}); }
    static Interval closed(Rat lo, Rat hi) { return checked({lo, hi, true, true}); }
    static Interval open(Rat lo, Rat hi) { return checked({lo, hi, false, false}); }
    static Interval point(Rat p) { return checked({p, p, true, true}); }
    static Interval checked(Interval iv);

    bool degenerate() const { return lo == hi; }
    bool contains(const Rat& x) const {
        if (x < lo || x > hi)
            return false;
        if (x == lo && !lo_closed)
            return false;
        if (x == hi && !hi_closed)
            return false;
        return true;
    }
    // Does the interval contain (p - delta, p) for some delta > 0?
    bool covers_left_neighborhood(const Rat& p) const { return lo < p && p <= hi; }
    // Does the interval contain (p, p + delta) for some delta > 0?
    bool covers_right_neighborhood(const Rat& p) const { return lo <= p && p < hi; }

    Interval translated(const Rat& off) const { return {lo + off, hi + off, lo_closed, hi_closed}; }

    std::string str() const;

    bool operator==(const Interval&) const = default;
};

std::optional<Interval> intersect(const Interval& a, const Interval& b);

// Sort key: by lo, closed-lo first, then by hi.
bool interval_before(const Interval& a, const Interval& b);

// a entirely left of b with no common point
bool disjoint_before(const Interval& a, const Interval& b);

// A finite union of pairwise separated intervals, kept sorted and with
// touching pieces merged, so equal sets compare equal.
class IntervalUnion {
  public:
    IntervalUnion() = default;
    explicit IntervalUnion(std::vector<Interval> parts);

    const std::vector<Interval>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    bool contains(const Rat& x) const { return part_containing(x) != nullptr; }
    const Interval* part_containing(const Rat& x) const;

    std::string str() const;

    bool operator==(const IntervalUnion&) const = default;

  private:
    std::vector<Interval> parts_;
};

// True iff `pieces` are pairwise disjoint and their union equals `whole`.
bool tiles_exactly(std::vector<Interval> pieces, const IntervalUnion& whole);

} // namespace contspec
