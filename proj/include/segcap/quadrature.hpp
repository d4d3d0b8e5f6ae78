#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "segcap/errors.hpp"

namespace segcap {

// Gauss-Legendre rule on [-1,1].
struct GLRule {
    std::vector<double> x; // nodes, ascending
    std::vector<double> w; // weights
};

// Returns the n-point rule, computed once and cached (thread-safe).
const GLRule& gauss_legendre(int n);

struct RefineOpts {
    int nodes = 64;          // starting node count
    int max_refinements = 6; // doublings allowed
    double tol = 1e-12;      // accept when successive sweeps differ by less
};

// Vector-valued integrand: several integrals sharing the same nodes.
using VecIntegrand = std::function<Eigen::VectorXcd(double)>;

// ∫_a^b f(x) dx for f smooth on [a,b].  Node-doubling until two successive
// sweeps agree within tol * max(1, |I|) per component; throws
// QUADRATURE_NO_CONVERGENCE otherwise.
Eigen::VectorXcd integrate_refined(const VecIntegrand& f, double a, double b,
                                   int dim, const RefineOpts& opts);

// Same contract, but f may blow up like an inverse square root at a and/or b.
// Uses x = mid + rad*cos(theta): the substitution absorbs such endpoint
// singularities and the transformed integrand is smooth.
Eigen::VectorXcd integrate_endpoint_sqrt(const VecIntegrand& f, double a,
                                         double b, int dim,
                                         const RefineOpts& opts);

} // namespace segcap
