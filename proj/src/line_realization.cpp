#include "contspec/line_realization.hpp"

#include "contspec/realization_cases.hpp"

namespace contspec {

ColumnSpace build_line_space(const CanonicalSubmonoid& s, long long window) {
    if (window < 1)
        throw input_error("window must be >= 1");
    ColumnSpace space;
    space.window = window;
    for (long long n = -window; n <= window; ++n)
        space.columns.emplace(n, membership_column(s.contains(n)));
    return space;
}

PiecewiseMap build_line_map(const CanonicalSubmonoid& s, long long window) {
    if (window < 1)
        throw input_error("window must be >= 1");
    PiecewiseMap f;
    for (long long n = -window; n < window; ++n) {
        for (Piece& piece : membership_pieces(s.contains(n), s.contains(n + 1), n + 1))
            f.add(n, std::move(piece));
    }
    f.normalize();
    return f;
}

std::vector<long long> SpectrumReport::members() const {
    std::vector<long long> out;
    for (const auto& it : iterates) {
        if (it.continuity.continuous)
            out.push_back(it.n);
    }
    return out;
}

SpectrumReport spectrum_report(const CanonicalSubmonoid& s, long long N, long long W) {
    if (N < 1)
        throw input_error("spectrum requires N >= 1");
    if (W < 2 * N)
        throw input_error("spectrum requires W >= 2N");
    const ColumnSpace space = build_line_space(s, W);
    const PiecewiseMap forward = build_line_map(s, W);
    const PiecewiseMap backward = invert(forward);

    SpectrumReport report;
    report.N = N;
    report.W = W;
    report.iterates.resize(static_cast<std::size_t>(2 * N + 1));

    const auto slot = [&](long long n) -> IterateReport& {
        return report.iterates[static_cast<std::size_t>(n + N)];
    };
    slot(0) = {0, is_continuous(PiecewiseMap::identity(space), space)};
    PiecewiseMap up = forward;
    PiecewiseMap down = backward;
    for (long long n = 1; n <= N; ++n) {
        slot(n) = {n, is_continuous(up, space)};
        slot(-n) = {-n, is_continuous(down, space)};
        if (n < N) {
            up = compose(forward, up);
            down = compose(backward, down);
        }
    }
    return report;
}

std::vector<long long> spectrum(const CanonicalSubmonoid& s, long long N, long long W) {
    return spectrum_report(s, N, W).members();
}

} // namespace contspec
