#pragma once

#include "contspec/continuity.hpp"
#include "contspec/submonoid.hpp"

namespace contspec {

// Integer-line realization of a submonoid S of Z over the window [-W, W]:
// member columns are [0,2), non-member columns [0,1) u [2,3), and the shift
// map sends column n onto column n+1 by the membership-keyed cases.
ColumnSpace build_line_space(const CanonicalSubmonoid& s, long long window);
PiecewiseMap build_line_map(const CanonicalSubmonoid& s, long long window);

struct IterateReport {
    long long n = 0;
    ContinuityReport continuity;
};

struct SpectrumReport {
    long long N = 0;
    long long W = 0;
    std::vector<IterateReport> iterates; // n = -N..N in order
    std::vector<long long> members() const;
};

// Continuity of every iterate f^n for n in [-N, N], computed over the
// window [-W, W]. Requires W >= 2N so every evaluated iterate keeps its
// image columns in range.
SpectrumReport spectrum_report(const CanonicalSubmonoid& s, long long N, long long W);
std::vector<long long> spectrum(const CanonicalSubmonoid& s, long long N, long long W);

} // namespace contspec
