#pragma once

#include <complex>
#include <vector>

#include "segcap/segment_system.hpp"

namespace segcap {

// Real polynomial with ascending coefficients; the oracles use polynomials
// whose preimage of [-1,1] is the segment system under study, which pins
// capacity and Green's function in closed form.
struct PolynomialOracle {
    std::vector<double> coeffs; // coeffs[k] multiplies x^k

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    double lead() const { return coeffs.back(); }
    std::complex<double> eval(std::complex<double> x) const;
};

// Coefficients of the degree-m Chebyshev polynomial of the first kind.
std::vector<double> chebyshev_coeffs(int m);

// The 2n+2 points {+-1, +-cos(k pi / 4n), k odd}: endpoints of the n+1
// segments where the degree-2n Chebyshev polynomial lies in [0,1].
// Construction is verified against the polynomial before returning.
SegmentSystem chebyshev_preimage_set(int n);

// Exact logarithmic capacity of chebyshev_preimage_set(n):
// the set is the [-1,1]-preimage of 2*T_{2n} - 1, so (2 * 2^{2n})^{-1/(2n)}.
double chebyshev_capacity(int n);

// The polynomial 2*T_{2n} - 1 itself.
PolynomialOracle chebyshev_level_oracle(int n);

// Capacity of p^{-1}([-1,1]): (2 |lead|)^{-1/deg}.
double polynomial_preimage_capacity(const PolynomialOracle& p);

// Green's function of the complement of p^{-1}([-1,1]):
// log|p(x) + sqrt(p(x)^2 - 1)| / deg, with the branch of modulus >= 1.
double polynomial_preimage_green(const PolynomialOracle& p,
                                 std::complex<double> x);

struct LejaResult {
    std::vector<double> points;    // greedily selected nodes
    std::vector<double> diameters; // diameters[k-2] = estimate from k points
};

// Greedy max-product points on a per-segment cosine-clustered grid, with the
// running geometric-mean pairwise distance (an upper-biased capacity
// estimate that decreases toward the true value).
LejaResult leja_diameters(const SegmentSystem& E, int N,
                          int grid_per_segment = 2000);

double transfinite_diameter_estimate(const SegmentSystem& E, int N,
                                     int grid_per_segment = 2000);

} // namespace segcap
