#include "segcap/curve.hpp"

#include <cmath>

namespace segcap {

namespace {

// Principal square root of (x - e); real arguments are limits from above,
// so negative values go to the positive imaginary axis.
cplx limit_sqrt(cplx x, double e) {
    const cplx d = x - e;
    if (d.imag() == 0.0) {
        if (d.real() >= 0.0) return {std::sqrt(d.real()), 0.0};
        return {0.0, std::sqrt(-d.real())};
    }
    return std::sqrt(d);
}

// Product of the limit square roots with one or two endpoint factors left
// out — used by charts that peel the vanishing factors off analytically.
cplx w_omitting(cplx x, const SegmentSystem& E, std::size_t omit1,
                std::size_t omit2 = static_cast<std::size_t>(-1)) {
    cplx r(1.0, 0.0);
    const auto& e = E.endpoints();
    for (std::size_t j = 0; j < e.size(); ++j)
        if (j != omit1 && j != omit2) r *= limit_sqrt(x, e[j]);
    return r;
}

// Monomial integrals over the whole rim piece [e_p, e_{p+1}] in the chart
// x = mid + rad*cos(theta).  Both endpoint factors of w combine with the
// Jacobian into exactly i*rad*sin(theta), so the integrand below is smooth
// and free of subtractive cancellation:
//   int_a^b x^k dx / w = int_0^pi x^k / (i * w_rest(x)) dtheta.
Eigen::VectorXcd whole_piece_integral(const SegmentSystem& E, int g, int p,
                                      const RefineOpts& opts) {
    const auto& e = E.endpoints();
    const double mid = 0.5 * (e[p] + e[p + 1]);
    const double rad = 0.5 * (e[p + 1] - e[p]);
    const cplx minus_i(0.0, -1.0);
    auto f = [&, mid, rad, p](double theta) {
        const double x = mid + rad * std::cos(theta);
        const cplx rest = w_omitting(cplx(x, 0.0), E, p, p + 1);
        Eigen::VectorXcd out(g);
        cplx pw(1.0, 0.0);
        for (int k = 0; k < g; ++k) {
            out[k] = minus_i * pw / rest;
            pw *= x;
        }
        return out;
    };
    return integrate_refined(f, 0.0, std::numbers::pi, g, opts);
}

// Monomial integrals over the partial piece [e_p, xr], xr regular.  Only
// the left factor of w vanishes; in the same chart it cancels against half
// the Jacobian, leaving sqrt(2*rad)*sin(theta/2) explicitly.
Eigen::VectorXcd partial_piece_integral(const SegmentSystem& E, int g, int p,
                                        double xr, const RefineOpts& opts) {
    const auto& e = E.endpoints();
    const double mid = 0.5 * (e[p] + xr);
    const double rad = 0.5 * (xr - e[p]);
    const double amp = std::sqrt(2.0 * rad);
    auto f = [&, mid, rad, amp, p](double theta) {
        const double x = mid + rad * std::cos(theta);
        const cplx rest = w_omitting(cplx(x, 0.0), E, p);
        const double s = amp * std::sin(0.5 * theta);
        Eigen::VectorXcd out(g);
        cplx pw(1.0, 0.0);
        for (int k = 0; k < g; ++k) {
            out[k] = s * pw / rest;
            pw *= x;
        }
        return out;
    };
    return integrate_refined(f, 0.0, std::numbers::pi, g, opts);
}

// Chart x = e_last + t^2 for the right exterior: the vanishing factor is
// t by construction, so the integrand stays benign through t -> 0.
VecIntegrand right_chart_integrand(const SegmentSystem& E, int g) {
    const std::size_t last = E.endpoints().size() - 1;
    const double e_last = E.endpoints().back();
    return [&E, g, last, e_last](double t) {
        const double x = e_last + t * t;
        Eigen::VectorXcd out(g);
        const cplx rest = w_omitting(cplx(x, 0.0), E, last);
        cplx p(1.0, 0.0);
        for (int k = 0; k < g; ++k) {
            out[k] = 2.0 * p / rest;
            p *= x;
        }
        return out;
    };
}

// Mirror chart x = e_first - t^2 for the left exterior; here
// w = (i t) * rest.
VecIntegrand left_chart_integrand(const SegmentSystem& E, int g) {
    const double e_first = E.endpoints().front();
    return [&E, g, e_first](double t) {
        const double x = e_first - t * t;
        Eigen::VectorXcd out(g);
        const cplx rest = cplx(0.0, 1.0) * w_omitting(cplx(x, 0.0), E, 0);
        cplx p(1.0, 0.0);
        for (int k = 0; k < g; ++k) {
            out[k] = 2.0 * p / rest;
            p *= x;
        }
        return out;
    };
}

// Far-field chart s = 1/x: x^k dx / w becomes s^{g-1-k} ds / sqrt(prod(1 - e_j s)),
// smooth through s = 0 and valid on either side of the origin.
VecIntegrand far_chart_integrand(const SegmentSystem& E, int g) {
    return [&E, g](double s) {
        double prod = 1.0;
        for (double e : E.endpoints()) prod *= 1.0 - e * s;
        const double root = std::sqrt(prod);
        Eigen::VectorXcd out(g);
        double p = 1.0; // s^{g-1-k}, built from the high end down
        for (int k = g - 1; k >= 0; --k) {
            out[k] = p / root;
            p *= s;
        }
        return out;
    };
}

// Straight chart from branch point js into the upper half-plane:
// x(tau) = e_s + (x - e_s) tau^2.  The substitution absorbs the endpoint
// zero of w and leaves a net sqrt(x - e_s) in the numerator:
// x^k dx / w = 2 sqrt(x - e_s) x(tau)^k / w_rest dtau.
VecIntegrand uhp_chart_integrand(const SegmentSystem& E, int g, int js,
                                 cplx x) {
    const double es = E.endpoints()[js];
    const cplx dx = x - es;
    const cplx root_dx = std::sqrt(dx);
    return [&E, g, js, es, dx, root_dx](double tau) {
        const cplx xt = es + dx * tau * tau;
        Eigen::VectorXcd out(g);
        const cplx pref = 2.0 * root_dx / w_omitting(xt, E, js);
        cplx p(1.0, 0.0);
        for (int k = 0; k < g; ++k) {
            out[k] = pref * p;
            p *= xt;
        }
        return out;
    };
}

JacobianPoint reduce_impl(const Eigen::VectorXcd& u, const RiemannMatrix& rm) {
    const int g = rm.g();
    if (u.size() != g)
        throw Error(errc::bad_arguments, "point dimension mismatch");
    JacobianPoint out;
    const Eigen::VectorXd imc = rm.Y_inv() * u.imag();
    out.m.resize(g);
    for (int i = 0; i < g; ++i)
        out.m[i] = static_cast<int>(std::floor(imc[i] + 0.5));
    Eigen::VectorXcd v = u - rm.Pi() * out.m.cast<double>().cast<cplx>();
    out.m_prime.resize(g);
    for (int i = 0; i < g; ++i) {
        out.m_prime[i] = static_cast<int>(std::floor(v[i].real() + 0.5));
        v[i] -= static_cast<double>(out.m_prime[i]);
    }
    out.value = std::move(v);
    out.reduced = true;
    return out;
}

void require_normalized(const SegmentSystem& E) {
    if (std::abs(E.endpoints().front()) > 1e-13 ||
        std::abs(E.endpoints().back() - 1.0) > 1e-13)
        throw Error(errc::not_normalized,
                    "system must be scaled onto [0,1] first");
}

} // namespace

cplx upper_sheet_w(cplx x, const SegmentSystem& E) {
    if (x.imag() < 0.0)
        throw Error(errc::lower_half_plane,
                    "w is defined on the closed upper half-plane");
    cplx r(1.0, 0.0);
    for (double e : E.endpoints()) r *= limit_sqrt(x, e);
    return r;
}

PeriodData compute_periods(const SegmentSystem& E, const QuadratureConfig& cfg) {
    require_normalized(E);
    const int g = static_cast<int>(E.genus());
    if (g < 1)
        throw Error(errc::genus_zero_no_periods,
                    "a single segment has no periods");
    const auto& e = E.endpoints();
    const int pieces = 2 * g + 1;
    const auto opts = cfg.refine();

    // Raw monomial integrals piece by piece along the upper rim.
    std::vector<Eigen::VectorXcd> M(pieces);
    for (int p = 0; p < pieces; ++p)
        M[p] = whole_piece_integral(E, g, p, opts);

    // Gap-cycle matrix and the basis normalization A*N = I.
    Eigen::MatrixXcd A(g, g);
    for (int j = 0; j < g; ++j)
        for (int k = 0; k < g; ++k) A(j, k) = 2.0 * M[2 * j + 1][k];
    Eigen::MatrixXcd N =
        A.partialPivLu().solve(Eigen::MatrixXcd::Identity(g, g));
    const double solve_residual =
        (A * N - Eigen::MatrixXcd::Identity(g, g)).cwiseAbs().maxCoeff();
    if (!(solve_residual < 1e-10))
        throw Error(errc::singular_period_matrix,
                    "gap-cycle matrix is numerically singular, residual " +
                        std::to_string(solve_residual));

    // Per-piece integrals of the normalized basis.
    std::vector<Eigen::VectorXcd> U(pieces);
    for (int p = 0; p < pieces; ++p) U[p] = N.transpose() * M[p];

    // Period matrix: cumulative segment contributions, column by column,
    // oriented so that the imaginary part is positive definite.
    Eigen::MatrixXcd Pi_raw(g, g);
    Eigen::VectorXcd cum = Eigen::VectorXcd::Zero(g);
    for (int j = 0; j < g; ++j) {
        cum += 2.0 * U[2 * j];
        Pi_raw.col(j) = cum;
    }
    if (Pi_raw(0, 0).imag() < 0.0) Pi_raw = -Pi_raw;

    const double asym = (Pi_raw - Pi_raw.transpose()).cwiseAbs().maxCoeff();
    if (!(asym < 1e-10))
        throw Error(errc::period_asymmetry,
                    "period matrix asymmetry " + std::to_string(asym));
    RiemannMatrix rm = RiemannMatrix::build(Pi_raw);

    // Independent re-integration of the gap cycles at an unrelated node
    // count; catches quadrature that merely looked converged.
    double a_res;
    {
        Eigen::MatrixXcd A2(g, g);
        for (int j = 0; j < g; ++j) {
            Eigen::VectorXcd Mg = whole_piece_integral(
                E, g, 2 * j + 1, RefineOpts{opts.nodes * 2 + 17, 0, 1.0});
            for (int k = 0; k < g; ++k) A2(j, k) = 2.0 * Mg[k];
        }
        a_res = (A2 * N - Eigen::MatrixXcd::Identity(g, g)).cwiseAbs().maxCoeff();
        if (!(a_res < 1e-10))
            throw Error(errc::quadrature_no_convergence,
                        "gap normalization re-check failed, residual " +
                            std::to_string(a_res));
    }

    // Branch point images: prefix sums along the rim.
    std::vector<Eigen::VectorXcd> prefix(2 * g + 2);
    prefix[0] = Eigen::VectorXcd::Zero(g);
    for (int p = 0; p < pieces; ++p) prefix[p + 1] = prefix[p] + U[p];

    // Image of the point over +infinity: continue past the last endpoint.
    const double X0 = cfg.far_field_split * e.back();
    const double t_max = std::sqrt(X0 - e.back());
    Eigen::VectorXcd M_tail =
        integrate_refined(right_chart_integrand(E, g), 0.0, t_max, g, opts);
    M_tail += integrate_refined(far_chart_integrand(E, g), 0.0, 1.0 / X0, g, opts);
    Eigen::VectorXcd u_inf_raw = prefix[2 * g + 1] + N.transpose() * M_tail;
    JacobianPoint u_inf = reduce_impl(u_inf_raw, rm);

    PeriodData pd{E,
                  cfg,
                  std::move(rm),
                  std::move(N),
                  std::move(u_inf.value),
                  std::move(prefix),
                  a_res,
                  0.0};
    pd.u_infinity_imag_residual = pd.u_infinity.imag().cwiseAbs().maxCoeff();
    return pd;
}

JacobianPoint reduce_mod_lattice(const Eigen::VectorXcd& u,
                                 const PeriodData& pd) {
    return reduce_impl(u, pd.rm);
}

JacobianPoint abel_jacobi_branch_point(const PeriodData& pd, int s) {
    const int n = static_cast<int>(pd.u_branch_raw.size());
    if (s < 1 || s > n)
        throw Error(errc::branch_index_range,
                    "branch index " + std::to_string(s) + " outside [1, " +
                        std::to_string(n) + "]");
    return reduce_impl(pd.u_branch_raw[s - 1], pd.rm);
}

JacobianPoint abel_jacobi_point(const PeriodData& pd, cplx x) {
    if (x.imag() < 0.0)
        throw Error(errc::lower_half_plane,
                    "conjugate the argument for the lower half-plane");
    const int g = pd.g();
    const auto& e = pd.E.endpoints();
    const auto opts = pd.cfg.refine();
    Eigen::VectorXcd u = Eigen::VectorXcd::Zero(g);

    if (x.imag() > 0.0) {
        // Anchor at the nearest branch point: any endpoint lying
        // horizontally between it and x would be closer to x, so the
        // straight ray from the anchor never passes over another branch
        // point and the integrand stays smooth down to the real axis.
        int js = 0;
        double best = std::abs(x - cplx(e[0], 0.0));
        for (std::size_t j = 1; j < e.size(); ++j) {
            const double d = std::abs(x - cplx(e[j], 0.0));
            if (d < best) {
                best = d;
                js = static_cast<int>(j);
            }
        }
        u = pd.u_branch_raw[js] +
            pd.norm_matrix.transpose() *
                integrate_refined(uhp_chart_integrand(pd.E, g, js, x), 0.0,
                                  1.0, g, opts);
        return reduce_impl(u, pd.rm);
    }

    const double xr = x.real();
    const double diam = pd.E.diameter();
    const double split = pd.cfg.far_field_split;

    if (xr < e.front()) {
        // left exterior: u = -integral from x up to the first endpoint
        const double XL = e.front() - (split - 1.0) * diam;
        Eigen::VectorXcd Mx;
        if (xr >= XL) {
            Mx = integrate_refined(left_chart_integrand(pd.E, g), 0.0,
                                   std::sqrt(e.front() - xr), g, opts);
        } else {
            Mx = integrate_refined(left_chart_integrand(pd.E, g), 0.0,
                                   std::sqrt(e.front() - XL), g, opts);
            Mx += integrate_refined(far_chart_integrand(pd.E, g), 1.0 / XL,
                                    1.0 / xr, g, opts);
        }
        u = -(pd.norm_matrix.transpose() * Mx);
        return reduce_impl(u, pd.rm);
    }

    if (xr > e.back()) {
        const double X0 = split * e.back();
        Eigen::VectorXcd Mx;
        if (xr <= X0) {
            Mx = integrate_refined(right_chart_integrand(pd.E, g), 0.0,
                                   std::sqrt(xr - e.back()), g, opts);
        } else {
            Mx = integrate_refined(right_chart_integrand(pd.E, g), 0.0,
                                   std::sqrt(X0 - e.back()), g, opts);
            Mx += integrate_refined(far_chart_integrand(pd.E, g), 1.0 / xr,
                                    1.0 / X0, g, opts);
        }
        u = pd.u_branch_raw.back() + pd.norm_matrix.transpose() * Mx;
        return reduce_impl(u, pd.rm);
    }

    // On [e_first, e_last]: walk whole rim pieces, then a partial one.
    int p = 0;
    while (p < 2 * g + 1 && e[p + 1] <= xr) ++p;
    u = pd.u_branch_raw[p];
    if (p < 2 * g + 1 && xr > e[p]) {
        Eigen::VectorXcd Mx = partial_piece_integral(pd.E, g, p, xr, opts);
        u += pd.norm_matrix.transpose() * Mx;
    }
    return reduce_impl(u, pd.rm);
}

double distance_to_lattice(const Eigen::VectorXcd& u, const PeriodData& pd) {
    return reduce_impl(u, pd.rm).value.cwiseAbs().maxCoeff();
}

} // namespace segcap
