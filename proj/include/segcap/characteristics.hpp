#pragma once

#include <Eigen/Dense>
#include <vector>

#include "segcap/errors.hpp"

namespace segcap {

// Half-integer theta characteristic written in binary form: the series shift
// is (eps/2, eps_prime/2).  Entries live in {0,1}; addition is XOR.
struct BinaryChar {
    std::vector<int> eps;
    std::vector<int> eps_prime;

    int g() const { return static_cast<int>(eps.size()); }
    bool operator==(const BinaryChar&) const = default;
};

// General (real-entry) characteristic, e.g. produced when reading a point
// off the Jacobian before snapping to half-integers.
struct RealChar {
    Eigen::VectorXd eps;
    Eigen::VectorXd eps_prime;
};

RealChar to_real(const BinaryChar& c);

// Characteristic of the image of branch point s (1-based, s in [1, 2g+2])
// under the Abel map with base point at the first branch point.
BinaryChar branch_point_char(int g, int s);

// Vector of Riemann constants for the same base point, as a characteristic.
BinaryChar riemann_constant_char(int g);

// Component-wise XOR.
BinaryChar add_char(const BinaryChar& a, const BinaryChar& b);

// eps . eps_prime mod 2; odd characteristics (parity 1) are the useful ones
// here: their theta vanishes at the origin.
int parity(const BinaryChar& c);

// Characteristic of the degree-(g-1) branch-point divisor sum(P_s, s in I)
// offset by the Riemann constants.  I must contain g-1 distinct indices from
// {2,...,2g+1} and the result must be odd; throws otherwise.
BinaryChar divisor_char(int g, const std::vector<int>& branch_indices);

// Partner characteristic entering the capacity product: eps_prime shifted by
// the all-ones vector mod 2.
BinaryChar partner_char(const BinaryChar& c);

struct PeriodData;    // curve.hpp
struct JacobianPoint; // curve.hpp

// (eps_prime + Pi*eps)/2 reduced into the fundamental cell.
JacobianPoint char_to_point(const BinaryChar& c, const PeriodData& pd);

// Reads the characteristic of a point: eps = Y^{-1} Im(2u), eps' = Re(2u).
RealChar point_to_char(const Eigen::VectorXcd& u, const PeriodData& pd);

// Rounds a real characteristic to binary entries mod 2; every entry must be
// within snap_tol of an integer or SNAP_FAILED is thrown.
BinaryChar snap_char(const RealChar& c, double snap_tol = 1e-7);

} // namespace segcap
