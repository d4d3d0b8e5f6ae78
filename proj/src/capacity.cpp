#include "segcap/capacity.hpp"

#include <cmath>

#include "segcap/theta.hpp"

namespace segcap {

namespace {
constexpr double kUnderflowFloor = 1e-300;

// Green's function of a single segment mapped onto [-1,1]: log of the
// Joukowski-type conformal coordinate, clamped to the exterior branch.
double green_single_segment(cplx phi) {
    const cplx s = std::sqrt(phi * phi - 1.0);
    cplx v = phi + s;
    if (std::abs(v) < 1.0) v = phi - s;
    return std::log(std::max(std::abs(v), 1.0));
}
} // namespace

std::vector<int> default_divisor_indices(int g) {
    if (g < 1) throw Error(errc::bad_arguments, "genus must be positive");
    std::vector<int> idx;
    for (int s = 2; s <= g; ++s) idx.push_back(s);
    return idx;
}

double green_function(const PeriodData& pd, const BinaryChar& chr, cplx x) {
    if (x.imag() < 0.0) x = std::conj(x);
    const Eigen::VectorXcd u = abel_jacobi_point(pd, x).value;
    const double tol = pd.cfg.theta_tol;
    const cplx tp = theta_char(chr, u + pd.u_infinity, pd.rm, tol);
    const cplx tm = theta_char(chr, u - pd.u_infinity, pd.rm, tol);
    if (std::abs(tp) < kUnderflowFloor || std::abs(tm) < kUnderflowFloor)
        throw Error(errc::theta_underflow,
                    "series ratio degenerate at this point");
    return std::abs(std::log(std::abs(tp) / std::abs(tm)));
}

cplx x_of_point(const PeriodData& pd, const BinaryChar& chr,
                const Eigen::VectorXcd& u) {
    const double tol = pd.cfg.theta_tol;
    const BinaryChar part = partner_char(chr);
    const cplx t_u = theta_char(chr, u, pd.rm, tol);
    const cplx t_p = theta_char(chr, u + pd.u_infinity, pd.rm, tol);
    const cplx t_m = theta_char(chr, u - pd.u_infinity, pd.rm, tol);
    const cplx c_u = theta_char(part, pd.u_infinity, pd.rm, tol);
    const cplx c_0 =
        theta_char(part, Eigen::VectorXcd::Zero(pd.g()), pd.rm, tol);
    const cplx den = t_p * t_m * c_0 * c_0;
    if (std::abs(den) < kUnderflowFloor)
        throw Error(errc::theta_underflow,
                    "denominator vanishes (argument sits over infinity)");
    return (t_u * t_u) * (c_u * c_u) / den;
}

GreenEvaluator::GreenEvaluator(const SegmentSystem& E, QuadratureConfig cfg,
                               const std::vector<int>& divisor_indices)
    : E_(E), to_original_{1.0, 0.0} {
    NormalizedSystem ns = normalize(E);
    to_original_ = ns.to_original;
    const int g = static_cast<int>(ns.system.genus());
    result_.genus = g;
    result_.diagnostics.scale = std::abs(to_original_.scale);

    if (g == 0) {
        if (!divisor_indices.empty())
            throw Error(errc::bad_divisor_set,
                        "a single segment takes no divisor indices");
        result_.closed_form = true;
        result_.capacity = result_.diagnostics.scale / 4.0;
        return;
    }

    pd_ = compute_periods(ns.system, cfg);
    result_.divisor_indices =
        divisor_indices.empty() ? default_divisor_indices(g) : divisor_indices;
    chr_ = divisor_char(g, result_.divisor_indices);
    result_.char_used = chr_;

    const BinaryChar part = partner_char(chr_);
    const double tol = cfg.theta_tol;
    const Eigen::VectorXcd& ub = pd_->u_infinity;
    CapacityDiagnostics& d = result_.diagnostics;
    d.t_odd_u = std::abs(theta_char(chr_, ub, pd_->rm, tol));
    d.t_part_u = std::abs(theta_char(part, ub, pd_->rm, tol));
    d.t_odd_2u = std::abs(theta_char(chr_, 2.0 * ub, pd_->rm, tol));
    d.t_part_0 =
        std::abs(theta_char(part, Eigen::VectorXcd::Zero(g), pd_->rm, tol));
    if (d.t_odd_2u < kUnderflowFloor || d.t_part_0 < kUnderflowFloor)
        throw Error(errc::theta_underflow, "degenerate capacity denominator");
    const double ratio = (d.t_odd_u * d.t_part_u) / (d.t_odd_2u * d.t_part_0);
    result_.capacity = d.scale * ratio * ratio;
}

double GreenEvaluator::green(cplx x) const {
    const AffineMap from_original = to_original_.inverse();
    const cplx xn = from_original(x);
    if (result_.genus == 0) return green_single_segment(2.0 * xn - 1.0);
    return green_function(*pd_, chr_, xn);
}

CapacityResult capacity(const SegmentSystem& E, const QuadratureConfig& cfg,
                        const std::vector<int>& divisor_indices) {
    return GreenEvaluator(E, cfg, divisor_indices).result();
}

} // namespace segcap
