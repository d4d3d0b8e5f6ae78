#pragma once

#include <Eigen/Dense>
#include <complex>

#include "segcap/characteristics.hpp"
#include "segcap/errors.hpp"

namespace segcap {

using cplx = std::complex<double>;

// Symmetric g x g matrix with positive definite imaginary part, plus the
// caches the series evaluator needs (spectral bound, inverse of Im part).
class RiemannMatrix {
public:
    static RiemannMatrix build(const Eigen::MatrixXcd& Pi);

    const Eigen::MatrixXcd& Pi() const { return Pi_; }
    const Eigen::MatrixXd& Y() const { return Y_; }           // Im Pi, symmetrized
    const Eigen::MatrixXd& Y_inv() const { return Y_inv_; }
    double lambda_min() const { return lambda_min_; }
    int g() const { return static_cast<int>(Pi_.rows()); }

private:
    Eigen::MatrixXcd Pi_;
    Eigen::MatrixXd Y_, Y_inv_;
    double lambda_min_ = 0.0;
};

inline constexpr double kDefaultThetaTol = 1e-13;

// Half-width of the summation box guaranteeing truncation error below tol
// for an argument whose saddle sits offset_norm away from the box center.
int truncation_radius(const RiemannMatrix& rm, double offset_norm, double tol);

// theta(u) = sum over m in Z^g of exp(2 pi i m.u + pi i m.Pi.m),
// summed deterministically (lexicographic) over a centered box.
cplx theta(const Eigen::VectorXcd& u, const RiemannMatrix& rm,
           double tol = kDefaultThetaTol);

// Characteristic version, evaluated as the shifted series
//   sum exp(2 pi i (m+a).(u+b) + pi i (m+a).Pi.(m+a)),  a = eps/2, b = eps'/2.
cplx theta_char(const RealChar& c, const Eigen::VectorXcd& u,
                const RiemannMatrix& rm, double tol = kDefaultThetaTol);
cplx theta_char(const BinaryChar& c, const Eigen::VectorXcd& u,
                const RiemannMatrix& rm, double tol = kDefaultThetaTol);

// Same value through the exponential-prefactor identity
//   exp(pi i a.Pi.a + 2 pi i a.(u+b)) * theta(u + Pi a + b).
// Kept as an independent path so the two evaluations can cross-check.
cplx theta_char_via_identity(const RealChar& c, const Eigen::VectorXcd& u,
                             const RiemannMatrix& rm,
                             double tol = kDefaultThetaTol);

} // namespace segcap
