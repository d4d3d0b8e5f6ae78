#include "segcap/theta.hpp"

#include <cmath>
#include <numbers>

namespace segcap {

namespace {
constexpr int kMaxRadius = 64;
using cplxl = std::complex<long double>;

// Core shifted series with characteristic shifts a, b (may be zero vectors).
cplx theta_sum(const Eigen::VectorXd& a, const Eigen::VectorXd& b,
               const Eigen::VectorXcd& u, const RiemannMatrix& rm,
               double tol) {
    const int g = rm.g();
    if (u.size() != g || a.size() != g || b.size() != g)
        throw Error(errc::bad_arguments, "argument dimension mismatch");

    // Saddle of |term| sits at m ~ -a - Y^{-1} Im u; center the box there.
    const Eigen::VectorXd center = -a - rm.Y_inv() * u.imag();
    Eigen::VectorXi c(g);
    for (int i = 0; i < g; ++i)
        c[i] = static_cast<int>(std::floor(center[i] + 0.5));
    const double offset =
        (center - c.cast<double>()).norm();
    const int R = truncation_radius(rm, offset, tol);

    const long double two_pi = 2.0L * std::numbers::pi_v<long double>;
    const long double pi_l = std::numbers::pi_v<long double>;

    Eigen::VectorXi m = c.array() - R; // odometer, lexicographic
    cplxl acc(0.0L, 0.0L);
    for (;;) {
        // exponent = 2 pi i (m+a).(u+b) + pi i (m+a).Pi.(m+a)
        cplxl lin(0.0L, 0.0L), quad(0.0L, 0.0L);
        for (int i = 0; i < g; ++i) {
            const long double mi = m[i] + static_cast<long double>(a[i]);
            lin += mi * cplxl(u[i].real() + b[i], u[i].imag());
            cplxl row(0.0L, 0.0L);
            for (int j = 0; j < g; ++j) {
                const long double mj = m[j] + static_cast<long double>(a[j]);
                row += mj * cplxl(rm.Pi()(i, j).real(), rm.Pi()(i, j).imag());
            }
            quad += mi * row;
        }
        const cplxl expo = cplxl(0.0L, two_pi) * lin + cplxl(0.0L, pi_l) * quad;
        acc += std::exp(expo);

        int d = g - 1;
        while (d >= 0 && m[d] == c[d] + R) {
            m[d] = c[d] - R;
            --d;
        }
        if (d < 0) break;
        ++m[d];
    }
    return cplx(static_cast<double>(acc.real()),
                static_cast<double>(acc.imag()));
}
} // namespace

RiemannMatrix RiemannMatrix::build(const Eigen::MatrixXcd& Pi) {
    if (Pi.rows() != Pi.cols() || Pi.rows() < 1)
        throw Error(errc::bad_arguments, "matrix must be square and nonempty");
    const double asym = (Pi - Pi.transpose()).cwiseAbs().maxCoeff();
    if (asym > 1e-8)
        throw Error(errc::period_asymmetry,
                    "matrix asymmetry " + std::to_string(asym));
    RiemannMatrix rm;
    rm.Pi_ = Pi;
    rm.Y_ = 0.5 * (Pi.imag() + Pi.imag().transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(rm.Y_);
    rm.lambda_min_ = es.eigenvalues().minCoeff();
    if (!(rm.lambda_min_ > 0.0))
        throw Error(errc::not_positive_definite,
                    "imaginary part must be positive definite, lambda_min = " +
                        std::to_string(rm.lambda_min_));
    rm.Y_inv_ = rm.Y_.inverse();
    return rm;
}

int truncation_radius(const RiemannMatrix& rm, double offset_norm,
                      double tol) {
    if (!(tol > 0.0))
        throw Error(errc::bad_tolerance, "tolerance must be positive");
    if (!(offset_norm >= 0.0))
        throw Error(errc::bad_arguments, "offset norm must be nonnegative");
    const double Cg = std::pow(10.0, rm.g());
    const double val =
        std::max(0.0, std::log(Cg / tol)) / (std::numbers::pi * rm.lambda_min());
    const int R = static_cast<int>(std::ceil(std::sqrt(val))) + 2 +
                  static_cast<int>(std::ceil(offset_norm));
    if (R > kMaxRadius)
        throw Error(errc::theta_radius_overflow,
                    "summation radius " + std::to_string(R) +
                        " exceeds limit; imaginary part too close to singular");
    return R;
}

cplx theta(const Eigen::VectorXcd& u, const RiemannMatrix& rm, double tol) {
    const Eigen::VectorXd zero = Eigen::VectorXd::Zero(rm.g());
    return theta_sum(zero, zero, u, rm, tol);
}

cplx theta_char(const RealChar& c, const Eigen::VectorXcd& u,
                const RiemannMatrix& rm, double tol) {
    return theta_sum(0.5 * c.eps, 0.5 * c.eps_prime, u, rm, tol);
}

cplx theta_char(const BinaryChar& c, const Eigen::VectorXcd& u,
                const RiemannMatrix& rm, double tol) {
    return theta_char(to_real(c), u, rm, tol);
}

cplx theta_char_via_identity(const RealChar& c, const Eigen::VectorXcd& u,
                             const RiemannMatrix& rm, double tol) {
    const int g = rm.g();
    if (c.eps.size() != g || c.eps_prime.size() != g || u.size() != g)
        throw Error(errc::bad_arguments, "argument dimension mismatch");
    const Eigen::VectorXd a = 0.5 * c.eps;
    const Eigen::VectorXd b = 0.5 * c.eps_prime;
    const Eigen::VectorXcd shifted =
        u + rm.Pi() * a.cast<cplx>() + b.cast<cplx>();
    cplx expo(0.0, 0.0);
    const cplx aPa = (a.cast<cplx>().transpose() * rm.Pi() * a.cast<cplx>())(0);
    cplx au(0.0, 0.0);
    for (int i = 0; i < g; ++i) au += a[i] * (u[i] + b[i]);
    expo = cplx(0.0, std::numbers::pi) * aPa +
           cplx(0.0, 2.0 * std::numbers::pi) * au;
    return std::exp(expo) * theta(shifted, rm, tol);
}

} // namespace segcap
