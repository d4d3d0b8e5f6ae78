#include "segcap/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace segcap {

std::complex<double> PolynomialOracle::eval(std::complex<double> x) const {
    if (coeffs.empty())
        throw Error(errc::bad_arguments, "empty polynomial");
    std::complex<double> acc(0.0, 0.0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

std::vector<double> chebyshev_coeffs(int m) {
    if (m < 0) throw Error(errc::bad_arguments, "degree must be nonnegative");
    std::vector<double> prev{1.0};        // T_0
    if (m == 0) return prev;
    std::vector<double> cur{0.0, 1.0};    // T_1
    for (int k = 1; k < m; ++k) {
        std::vector<double> next(k + 2, 0.0);
        for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] = 2.0 * cur[i];
        for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= prev[i];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

SegmentSystem chebyshev_preimage_set(int n) {
    if (n < 1) throw Error(errc::bad_arguments, "order must be positive");
    std::vector<double> e;
    e.push_back(-1.0);
    for (int k = 1; k <= 2 * n - 1; k += 2)
        e.push_back(-std::cos(k * std::numbers::pi / (4.0 * n)));
    for (int k = 2 * n - 1; k >= 1; k -= 2)
        e.push_back(std::cos(k * std::numbers::pi / (4.0 * n)));
    e.push_back(1.0);

    // sanity: endpoints hit {0,1} under T_{2n}, interior critical points
    // land on the right levels and in the right components
    PolynomialOracle T{chebyshev_coeffs(2 * n)};
    SegmentSystem E = SegmentSystem::create(e);
    for (std::size_t i = 0; i < e.size(); ++i) {
        const double v = T.eval(e[i]).real();
        const double want = (i == 0 || i + 1 == e.size()) ? 1.0 : 0.0;
        if (std::abs(v - want) > 1e-13)
            throw Error(errc::bad_arguments,
                        "endpoint level check failed at index " +
                            std::to_string(i));
    }
    for (int j = 1; j <= 2 * n - 1; ++j) {
        const double xc = std::cos(j * std::numbers::pi / (2.0 * n));
        const double v = T.eval(xc).real();
        const double want = (j % 2 == 0) ? 1.0 : -1.0;
        if (std::abs(v - want) > 1e-12)
            throw Error(errc::bad_arguments, "critical level check failed");
        const bool inside = E.contains(xc);
        if ((j % 2 == 0) != inside)
            throw Error(errc::bad_arguments, "critical point placement failed");
    }
    return E;
}

double chebyshev_capacity(int n) {
    if (n < 1) throw Error(errc::bad_arguments, "order must be positive");
    return std::pow(2.0, -(2.0 * n + 1.0) / (2.0 * n));
}

PolynomialOracle chebyshev_level_oracle(int n) {
    if (n < 1) throw Error(errc::bad_arguments, "order must be positive");
    PolynomialOracle p{chebyshev_coeffs(2 * n)};
    for (double& c : p.coeffs) c *= 2.0;
    p.coeffs[0] -= 1.0;
    return p;
}

double polynomial_preimage_capacity(const PolynomialOracle& p) {
    if (p.degree() < 1 || p.lead() == 0.0)
        throw Error(errc::bad_arguments, "need a nonconstant polynomial");
    return std::pow(2.0 * std::abs(p.lead()), -1.0 / p.degree());
}

double polynomial_preimage_green(const PolynomialOracle& p,
                                 std::complex<double> x) {
    if (p.degree() < 1)
        throw Error(errc::bad_arguments, "need a nonconstant polynomial");
    const std::complex<double> y = p.eval(x);
    const std::complex<double> s = std::sqrt(y * y - 1.0);
    std::complex<double> v = y + s;
    if (std::abs(v) < 1.0) v = y - s;
    return std::log(std::max(std::abs(v), 1.0)) / p.degree();
}

LejaResult leja_diameters(const SegmentSystem& E, int N,
                          int grid_per_segment) {
    if (N < 2) throw Error(errc::bad_arguments, "need at least two points");
    if (grid_per_segment < 2)
        throw Error(errc::bad_arguments, "grid must have at least two points");

    std::vector<double> grid;
    grid.reserve(E.segment_count() * grid_per_segment);
    for (std::size_t i = 0; i < E.segment_count(); ++i) {
        const auto [a, b] = E.segment(i);
        const double mid = 0.5 * (a + b), rad = 0.5 * (b - a);
        for (int j = 0; j < grid_per_segment; ++j)
            grid.push_back(mid + rad * std::cos(j * std::numbers::pi /
                                                (grid_per_segment - 1)));
    }
    if (static_cast<std::size_t>(N) > grid.size())
        throw Error(errc::grid_too_small,
                    "requested more points than the grid provides");

    const std::size_t M = grid.size();
    std::vector<double> logsum(M, 0.0);
    std::vector<char> used(M, 0);

    // start from the most extreme grid value: deterministic and extremal
    std::size_t first = 0;
    for (std::size_t i = 1; i < M; ++i)
        if (grid[i] > grid[first]) first = i;

    LejaResult out;
    out.points.reserve(N);
    out.diameters.reserve(N - 1);
    double pairlog = 0.0;

    std::size_t pick = first;
    for (int k = 0; k < N; ++k) {
        if (k > 0) {
            pick = M; // argmax over unused
            for (std::size_t i = 0; i < M; ++i)
                if (!used[i] && (pick == M || logsum[i] > logsum[pick]))
                    pick = i;
            pairlog += logsum[pick];
        }
        used[pick] = 1;
        const double z = grid[pick];
        out.points.push_back(z);
        for (std::size_t i = 0; i < M; ++i) {
            if (used[i]) continue;
            const double d = std::abs(grid[i] - z);
            logsum[i] = (d == 0.0) ? -std::numeric_limits<double>::infinity()
                                   : logsum[i] + std::log(d);
        }
        if (k >= 1)
            out.diameters.push_back(
                std::exp(2.0 * pairlog / (static_cast<double>(k + 1) * k)));
    }
    return out;
}

double transfinite_diameter_estimate(const SegmentSystem& E, int N,
                                     int grid_per_segment) {
    return leja_diameters(E, N, grid_per_segment).diameters.back();
}

} // namespace segcap
