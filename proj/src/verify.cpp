#include "segcap/verify.hpp"

#include <cmath>
#include <numbers>

#include "segcap/capacity.hpp"
#include "segcap/oracles.hpp"
#include "segcap/theta.hpp"

namespace segcap {

namespace {
void check(std::vector<CheckResult>& out, const std::string& name, double err,
           double tol) {
    out.push_back({name, std::isfinite(err) && err < tol, err, tol});
}
} // namespace

std::vector<CheckResult> run_verify_battery(const VerifyOptions& opts) {
    std::vector<CheckResult> out;

    for (int n : opts.orders) {
        const std::string tag = "preimage[" + std::to_string(n) + "]";
        SegmentSystem E = chebyshev_preimage_set(n);
        PolynomialOracle S = chebyshev_level_oracle(n);

        // apply a divisor override only where its size fits this genus
        std::vector<int> divisor;
        if (static_cast<int>(opts.divisor.size()) == n - 1)
            divisor = opts.divisor;
        GreenEvaluator ev(E, opts.cfg, divisor);
        check(out, tag + " capacity vs closed form",
              std::abs(ev.capacity_value() - chebyshev_capacity(n)), 1e-10);
        check(out, tag + " capacity vs preimage rule",
              std::abs(ev.capacity_value() - polynomial_preimage_capacity(S)),
              1e-10);

        double green_err = 0.0;
        const cplx probes[] = {{1.5, 0.0}, {-2.0, 0.0}, {0.0, 0.0},
                               {0.3, 0.7}, {-1.1, 0.2}, {2.0, 1.0}};
        for (cplx x : probes)
            green_err = std::max(green_err,
                                 std::abs(ev.green(x) -
                                          polynomial_preimage_green(S, x)));
        check(out, tag + " green vs oracle (6 probes)", green_err, 1e-8);

        const PeriodData& pd = *ev.periods();
        check(out, tag + " period matrix asymmetry",
              (pd.rm.Pi() - pd.rm.Pi().transpose()).cwiseAbs().maxCoeff(),
              1e-10);
        check(out, tag + " period matrix spurious real part",
              pd.rm.Pi().real().cwiseAbs().maxCoeff(), 1e-10);
        check(out, tag + " infinity image imaginary residue",
              pd.u_infinity_imag_residual, 1e-9);
        check(out, tag + " gap normalization re-check", pd.a_period_residual,
              1e-10);

        // series engine symmetries on the computed matrix, fixed arguments
        const int g = pd.g();
        Eigen::VectorXcd u(g);
        for (int i = 0; i < g; ++i)
            u[i] = cplx(0.137 + 0.061 * i, 0.083 - 0.029 * i);
        const cplx tv = theta(u, pd.rm, opts.cfg.theta_tol);
        const cplx tn = theta(-u, pd.rm, opts.cfg.theta_tol);
        check(out, tag + " series evenness",
              std::abs(tv - tn) / std::max(1.0, std::abs(tv)), 1e-12);

        Eigen::VectorXi mm(g);
        for (int i = 0; i < g; ++i) mm[i] = (i % 2 == 0) ? 1 : -1;
        const Eigen::VectorXcd shift =
            pd.rm.Pi() * mm.cast<double>().cast<cplx>();
        const cplx lhs = theta(u + shift, pd.rm, opts.cfg.theta_tol);
        cplx expo(0.0, 0.0);
        const Eigen::VectorXcd mc = mm.cast<double>().cast<cplx>();
        const cplx mPim = (mc.transpose() * pd.rm.Pi() * mc)(0);
        const cplx mu = (mc.transpose() * u)(0);
        expo = cplx(0.0, -std::numbers::pi) * mPim +
               cplx(0.0, -2.0 * std::numbers::pi) * mu;
        const cplx rhs = std::exp(expo) * tv;
        check(out, tag + " series quasi-periodicity",
              std::abs(lhs - rhs) / std::abs(rhs), 1e-12);

        const BinaryChar chr = ev.result().char_used;
        const cplx d1 = theta_char(chr, u, pd.rm, opts.cfg.theta_tol);
        const cplx d2 = theta_char_via_identity(to_real(chr), u, pd.rm,
                                                opts.cfg.theta_tol);
        check(out, tag + " shifted-series identity",
              std::abs(d1 - d2) / std::max(1.0, std::abs(d1)),
              2.0 * opts.cfg.theta_tol);

        // a second admissible divisor must give the same capacity
        if (pd.g() >= 2) {
            std::vector<int> alt = default_divisor_indices(pd.g());
            alt.back() = 2 * pd.g() + 1;
            const double cap_alt =
                GreenEvaluator(E, opts.cfg, alt).capacity_value();
            check(out, tag + " divisor independence",
                  std::abs(cap_alt - ev.capacity_value()) /
                      ev.capacity_value(),
                  1e-10);
        }
    }

    // upper-biased distance-product estimate brackets the series value
    {
        SegmentSystem E2 = chebyshev_preimage_set(2);
        const double cap = GreenEvaluator(E2, opts.cfg).capacity_value();
        const double est = transfinite_diameter_estimate(E2, 200);
        check(out, "distance-product upper bias", (est >= cap) ? 0.0 : 1.0,
              0.5);
        check(out, "distance-product within 5%", std::abs(est - cap) / cap,
              0.05);
    }

    return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

} // namespace segcap
