#include "segcap/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

namespace segcap {

namespace {

GLRule build_rule(int n) {
    // Newton iteration on P_n, seeded with the Chebyshev approximation to
    // the k-th root.  Symmetric, so only half the roots are solved for.
    GLRule r;
    r.x.assign(n, 0.0);
    r.w.assign(n, 0.0);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (z * p0 - p1) / (z * z - 1.0);
            double dz = p0 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15) break;
        }
        r.x[i] = -z;
        r.x[n - 1 - i] = z;
        r.w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
        r.w[n - 1 - i] = r.w[i];
    }
    return r;
}

std::map<int, GLRule> g_rules;
std::mutex g_rules_mutex;

Eigen::VectorXcd sweep_plain(const VecIntegrand& f, double a, double b,
                             int dim, int n) {
    const GLRule& r = gauss_legendre(n);
    const double mid = 0.5 * (a + b), rad = 0.5 * (b - a);
    Eigen::VectorXcd acc = Eigen::VectorXcd::Zero(dim);
    for (int i = 0; i < n; ++i)
        acc += (rad * r.w[i]) * f(mid + rad * r.x[i]);
    return acc;
}

Eigen::VectorXcd sweep_cos(const VecIntegrand& f, double a, double b, int dim,
                           int n) {
    // x = mid + rad*cos(theta), dx = -rad*sin(theta) dtheta, theta: pi -> 0
    const GLRule& r = gauss_legendre(n);
    const double mid = 0.5 * (a + b), rad = 0.5 * (b - a);
    const double half_pi = 0.5 * std::numbers::pi;
    Eigen::VectorXcd acc = Eigen::VectorXcd::Zero(dim);
    for (int i = 0; i < n; ++i) {
        const double theta = half_pi * (1.0 + r.x[i]);
        const double x = mid + rad * std::cos(theta);
        acc += (half_pi * rad * std::sin(theta) * r.w[i]) * f(x);
    }
    return acc;
}

template <class Sweep>
Eigen::VectorXcd refine(const Sweep& sweep, int dim, const RefineOpts& opts) {
    if (opts.nodes < 2 || opts.max_refinements < 0 || !(opts.tol > 0.0))
        throw Error(errc::bad_arguments, "invalid refinement options");
    int n = opts.nodes;
    Eigen::VectorXcd prev = sweep(n);
    if (opts.max_refinements == 0) return prev; // single sweep, caller's call
    for (int k = 0; k < opts.max_refinements; ++k) {
        n *= 2;
        Eigen::VectorXcd cur = sweep(n);
        const double diff = (cur - prev).cwiseAbs().maxCoeff();
        const double scale = std::max(1.0, cur.cwiseAbs().maxCoeff());
        if (diff < opts.tol * scale) return cur;
        prev = std::move(cur);
    }
    throw Error(errc::quadrature_no_convergence,
                "integral did not settle within " +
                    std::to_string(opts.max_refinements) + " refinements");
}

} // namespace

const GLRule& gauss_legendre(int n) {
    if (n < 1) throw Error(errc::bad_arguments, "rule size must be positive");
    std::lock_guard<std::mutex> lock(g_rules_mutex);
    auto it = g_rules.find(n);
    if (it == g_rules.end()) it = g_rules.emplace(n, build_rule(n)).first;
    return it->second;
}

Eigen::VectorXcd integrate_refined(const VecIntegrand& f, double a, double b,
                                   int dim, const RefineOpts& opts) {
    if (a == b) return Eigen::VectorXcd::Zero(dim);
    return refine([&](int n) { return sweep_plain(f, a, b, dim, n); }, dim,
                  opts);
}

Eigen::VectorXcd integrate_endpoint_sqrt(const VecIntegrand& f, double a,
                                         double b, int dim,
                                         const RefineOpts& opts) {
    if (a == b) return Eigen::VectorXcd::Zero(dim);
    return refine([&](int n) { return sweep_cos(f, a, b, dim, n); }, dim,
                  opts);
}

} // namespace segcap
