#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "segcap/capacity.hpp"
#include "segcap/oracles.hpp"

using namespace segcap;
using std::numbers::pi;

namespace {

// [-1,-k] u [k,1], the level set of a quadratic
SegmentSystem elliptic_pair(double k) {
    return SegmentSystem::create({-1.0, -k, k, 1.0});
}

PolynomialOracle elliptic_oracle(double k) {
    const double d = 1.0 - k * k;
    return PolynomialOracle{{-(1.0 + k * k) / d, 0.0, 2.0 / d}};
}

// level set of 6x^3 - 9x^2 + 1: critical values exactly +1 and -2, so the
// full [-1,1]-preimage is real -- two uneven segments with capacity 12^(-1/3)
SegmentSystem cubic_set() {
    // roots of 6x^3 - 9x^2 + 2 = 0 via the trigonometric form; the upper
    // endpoint of the second segment is the simple root of 6x^3 - 9x^2 = 0
    const double theta = std::acos(-1.0 / 3.0);
    const double r0 = 0.5 + std::cos((theta + 2.0 * pi) / 3.0); // smallest
    const double r1 = 0.5 + std::cos((theta - 2.0 * pi) / 3.0); // middle
    const double r2 = 0.5 + std::cos(theta / 3.0);              // largest
    return SegmentSystem::create({r0, r1, r2, 1.5});
}

PolynomialOracle cubic_oracle() { return PolynomialOracle{{1.0, 0.0, -9.0, 6.0}}; }

} // namespace

TEST_CASE("single segment closed form") {
    auto r = capacity(SegmentSystem::create({0.0, 1.0}));
    CHECK(r.closed_form);
    CHECK(r.genus == 0);
    CHECK(r.capacity == doctest::Approx(0.25).epsilon(1e-15));

    auto r2 = capacity(SegmentSystem::create({-17.0, 3.0}));
    CHECK(r2.capacity == doctest::Approx(5.0).epsilon(1e-15));

    // no divisor selection exists at genus zero
    CHECK_THROWS_AS(capacity(SegmentSystem::create({0.0, 1.0}), {}, {2}),
                    Error);
}

TEST_CASE("single segment green function") {
    GreenEvaluator ge(SegmentSystem::create({-1.0, 1.0}));
    CHECK(ge.green(cplx(2.0, 0.0)) ==
          doctest::Approx(std::log(2.0 + std::sqrt(3.0))).epsilon(1e-14));
    // vanishes on the segment, including endpoints
    CHECK(ge.green(cplx(0.3, 0.0)) == 0.0);
    CHECK(ge.green(cplx(1.0, 0.0)) == 0.0);
    // log-singularity at infinity normalized by the capacity
    double G = ge.green(cplx(1e8, 0.0));
    CHECK(G - std::log(1e8) ==
          doctest::Approx(-std::log(0.5)).epsilon(1e-7));
    // symmetric in the real axis
    CHECK(ge.green(cplx(0.7, 0.4)) ==
          doctest::Approx(ge.green(cplx(0.7, -0.4))).epsilon(1e-15));
}

TEST_CASE("two symmetric segments match the quadratic level-set oracle") {
    const double k = 0.6;
    auto E = elliptic_pair(k);
    auto p = elliptic_oracle(k);
    GreenEvaluator ge(E);
    CHECK(ge.genus() == 1);
    // capacity k'/2 both from the series and from the preimage rule
    const double kp = std::sqrt(1.0 - k * k);
    CHECK(ge.capacity_value() == doctest::Approx(kp / 2.0).epsilon(1e-12));
    CHECK(polynomial_preimage_capacity(p) ==
          doctest::Approx(kp / 2.0).epsilon(1e-15));
    for (cplx x : {cplx(2.0, 0.0), cplx(-1.7, 0.0), cplx(0.0, 0.0),
                   cplx(0.3, 0.0), cplx(1.5, 0.8), cplx(-0.2, 2.0),
                   cplx(0.1, -0.5)}) {
        CHECK(ge.green(x) ==
              doctest::Approx(polynomial_preimage_green(p, x)).epsilon(1e-9));
    }
}

TEST_CASE("asymmetric cubic level set") {
    auto E = cubic_set();
    auto p = cubic_oracle();
    // the construction really is a level set: p = -1 at the three cubic
    // roots and +1 at the simple top root
    for (int s : {0, 1, 2})
        CHECK(p.eval(E.endpoints()[s]).real() ==
              doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(p.eval(1.5).real() == doctest::Approx(1.0).epsilon(1e-12));

    GreenEvaluator ge(E);
    CHECK(ge.genus() == 1);
    const double cap = std::pow(12.0, -1.0 / 3.0);
    CHECK(ge.capacity_value() == doctest::Approx(cap).epsilon(1e-10));
    CHECK(polynomial_preimage_capacity(p) ==
          doctest::Approx(cap).epsilon(1e-15));
    for (cplx x : {cplx(2.0, 0.0), cplx(-1.0, 0.0), cplx(0.9, 0.0),
                   cplx(1.1, 0.0), cplx(0.3, 0.8), cplx(1.4, 0.3),
                   cplx(-0.5, 0.1)}) {
        CHECK(ge.green(x) ==
              doctest::Approx(polynomial_preimage_green(p, x)).epsilon(1e-8));
    }
}

TEST_CASE("higher-genus level sets reproduce the closed-form capacities") {
    for (int n = 1; n <= 3; ++n) {
        auto E = chebyshev_preimage_set(n);
        auto r = capacity(E);
        CHECK(r.genus == n);
        CHECK(r.capacity ==
              doctest::Approx(chebyshev_capacity(n)).epsilon(1e-11));
    }
}

TEST_CASE("capacity does not depend on the divisor selection") {
    auto E = SegmentSystem::create({0.0, 0.17, 0.33, 0.52, 0.86, 1.0});
    auto base = capacity(E);
    for (int s = 2; s <= 5; ++s) {
        auto alt = capacity(E, {}, {s});
        CHECK(alt.capacity ==
              doctest::Approx(base.capacity).epsilon(1e-10));
    }
    CHECK(base.divisor_indices == std::vector<int>{2}); // the default
}

TEST_CASE("green is symmetric under conjugation and zero on the set") {
    auto E = cubic_set();
    GreenEvaluator ge(E);
    CHECK(ge.green(cplx(0.5, 1.0)) ==
          doctest::Approx(ge.green(cplx(0.5, -1.0))).epsilon(1e-15));
    // on-set points (endpoints and interior): boundary values cancel
    const auto& e = E.endpoints();
    for (double x : {e[0], e[1], e[2], e[3], 0.5 * (e[0] + e[1]), 0.0, 1.4})
        CHECK(std::abs(ge.green(cplx(x, 0.0))) < 1e-7);
}

TEST_CASE("affine covariance") {
    std::mt19937 rng(314159);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    auto E = SegmentSystem::create({0.0, 0.2, 0.45, 0.6, 0.85, 1.0});
    auto base = capacity(E);
    for (double a : {3.5, 0.01, -2.0}) {
        const double b = 4.0 * U(rng) - 2.0;
        std::vector<double> mapped;
        for (double e : E.endpoints()) mapped.push_back(a * e + b);
        if (a < 0) std::reverse(mapped.begin(), mapped.end());
        auto EM = SegmentSystem::create(mapped);
        auto r = capacity(EM);
        CHECK(r.capacity ==
              doctest::Approx(std::abs(a) * base.capacity).epsilon(1e-10));
        // Green transported through the map agrees
        GreenEvaluator g0(E), g1(EM);
        for (int t = 0; t < 4; ++t) {
            cplx x(2.0 * U(rng) - 0.5, 2.0 * U(rng));
            CHECK(g1.green(a * x + b) ==
                  doctest::Approx(g0.green(x)).epsilon(1e-9));
        }
    }
}

TEST_CASE("x_of_point inverts the abel map") {
    auto [N, back] = normalize(cubic_set());
    auto pd = compute_periods(N);
    auto chr = divisor_char(pd.g(), default_divisor_indices(pd.g()));
    std::mt19937 rng(2718);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    int done = 0;
    while (done < 12) {
        cplx x(3.0 * U(rng) - 1.0, 2.0 * U(rng) - 0.5);
        if (x.imag() < 0.0) x = std::conj(x);
        if (x.imag() < 0.05 && N.contains(x.real())) continue;
        auto u = abel_jacobi_point(pd, x);
        cplx xr = x_of_point(pd, chr, u.value);
        CHECK(std::abs(xr - x) < 1e-8 * std::max(1.0, std::abs(x)));
        ++done;
    }
    // branch points land exactly on the endpoint list
    for (int s = 1; s <= 2 * pd.g() + 2; ++s) {
        auto u = abel_jacobi_branch_point(pd, s);
        cplx xr = x_of_point(pd, chr, u.value);
        CHECK(std::abs(xr - N.endpoints()[s - 1]) < 1e-8);
    }
}

TEST_CASE("x_of_point has a pole at the point over infinity") {
    // u = u_infinity is the image of the point at infinity; the coordinate
    // blows up there (the denominator contains the vanishing odd constant)
    auto [N, back] = normalize(elliptic_pair(0.5));
    auto pd = compute_periods(N);
    auto chr = divisor_char(1, {});
    CHECK(std::abs(x_of_point(pd, chr, pd.u_infinity)) > 1e8);
}

TEST_CASE("diagnostics expose the series magnitudes") {
    auto r = capacity(elliptic_pair(0.6));
    const auto& d = r.diagnostics;
    CHECK(d.scale == doctest::Approx(2.0));
    CHECK(d.t_odd_u > 0.0);
    CHECK(d.t_part_u > 0.0);
    CHECK(d.t_odd_2u > 0.0);
    CHECK(d.t_part_0 > 0.0);
    const double ratio = d.t_odd_u * d.t_part_u / (d.t_odd_2u * d.t_part_0);
    CHECK(r.capacity == doctest::Approx(d.scale * ratio * ratio));
}
