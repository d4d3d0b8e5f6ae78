#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "segcap/quadrature.hpp"
#include "segcap/segment_system.hpp"
#include "segcap/theta.hpp"

namespace segcap {

struct QuadratureConfig {
    int nodes_per_interval = 64;  // starting Gauss-Legendre size per piece
    int max_refinements = 6;      // node-doubling passes allowed
    double target_tol = 1e-12;    // successive-sweep agreement threshold
    double far_field_split = 2.0; // switch to the 1/x chart beyond split*e_max
    double theta_tol = 1e-13;     // series truncation tolerance downstream

    RefineOpts refine() const {
        return {nodes_per_interval, max_refinements, target_tol};
    }
};

// Point of C^g modulo the lattice Z^g + Pi Z^g.  `m`/`m_prime` record the
// integer lattice coefficients subtracted during reduction, so
// original = value + Pi*m + m_prime.
struct JacobianPoint {
    Eigen::VectorXcd value;
    Eigen::VectorXi m;
    Eigen::VectorXi m_prime;
    bool reduced = false;
};

// Value on the distinguished sheet of w^2 = prod(x - e_j): product of
// principal square roots, with real x treated as a limit from the upper
// half-plane.  Real and positive to the right of the last endpoint.
cplx upper_sheet_w(cplx x, const SegmentSystem& E);

// Periods and holomorphic-integral data of the curve attached to a
// normalized segment system (first endpoint 0, last endpoint 1).
struct PeriodData {
    SegmentSystem E;          // normalized system the data belongs to
    QuadratureConfig cfg;     // settings everything downstream reuses
    RiemannMatrix rm;         // period matrix Pi with caches
    Eigen::MatrixXcd norm_matrix; // N: columns are basis coefficients, A*N = I
    Eigen::VectorXcd u_infinity;  // image of the upper point over infinity, reduced
    // Raw images of the branch points P_1..P_{2g+2} (unreduced prefix sums;
    // index s-1).  u_branch_raw[0] is zero: the base point.
    std::vector<Eigen::VectorXcd> u_branch_raw;
    double a_period_residual = 0.0; // independent re-integration check
    double u_infinity_imag_residual = 0.0;

    int g() const { return static_cast<int>(rm.g()); }
};

// Builds the full period package.  Throws GENUS_ZERO_NO_PERIODS for a single
// segment and NOT_NORMALIZED if E is not scaled onto [0,1].
PeriodData compute_periods(const SegmentSystem& E, const QuadratureConfig& cfg = {});

// Reduces u into the fundamental cell: both the real parts and the
// Y^{-1}-coordinates of the imaginary part land in [-1/2, 1/2).
JacobianPoint reduce_mod_lattice(const Eigen::VectorXcd& u,
                                 const PeriodData& pd);

// Image of branch point s (1-based, in [1, 2g+2]) under the Abel map.
JacobianPoint abel_jacobi_branch_point(const PeriodData& pd, int s);

// Abel map of the point over x on the distinguished sheet; x must lie in
// the closed upper half-plane (conjugate first for the lower one).
JacobianPoint abel_jacobi_point(const PeriodData& pd, cplx x);

// Sup-norm distance from u to the period lattice; ~0 iff u is a lattice
// point up to numerical noise.
double distance_to_lattice(const Eigen::VectorXcd& u, const PeriodData& pd);

} // namespace segcap
