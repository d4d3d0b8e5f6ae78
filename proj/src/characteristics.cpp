#include "segcap/characteristics.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "segcap/curve.hpp"

namespace segcap {

namespace {
void require_binary(const BinaryChar& c) {
    if (c.eps.size() != c.eps_prime.size() || c.eps.empty())
        throw Error(errc::bad_characteristic, "mismatched characteristic halves");
    for (int v : c.eps)
        if (v != 0 && v != 1)
            throw Error(errc::bad_characteristic, "entries must be 0 or 1");
    for (int v : c.eps_prime)
        if (v != 0 && v != 1)
            throw Error(errc::bad_characteristic, "entries must be 0 or 1");
}
} // namespace

RealChar to_real(const BinaryChar& c) {
    require_binary(c);
    RealChar r;
    r.eps.resize(c.g());
    r.eps_prime.resize(c.g());
    for (int i = 0; i < c.g(); ++i) {
        r.eps[i] = c.eps[i];
        r.eps_prime[i] = c.eps_prime[i];
    }
    return r;
}

BinaryChar branch_point_char(int g, int s) {
    if (g < 1) throw Error(errc::bad_arguments, "genus must be positive");
    if (s < 1 || s > 2 * g + 2)
        throw Error(errc::branch_index_range,
                    "branch index " + std::to_string(s) + " outside [1, " +
                        std::to_string(2 * g + 2) + "]");
    BinaryChar c{std::vector<int>(g, 0), std::vector<int>(g, 0)};
    if (s == 1) return c;
    if (s == 2 * g + 2) {
        std::fill(c.eps_prime.begin(), c.eps_prime.end(), 1);
        return c;
    }
    const int k = s / 2; // 1-based pivot row
    c.eps[k - 1] = 1;
    const int ones = (s % 2 == 0) ? k - 1 : k; // fill eps' over 1..ones
    for (int j = 0; j < ones; ++j) c.eps_prime[j] = 1;
    return c;
}

BinaryChar riemann_constant_char(int g) {
    if (g < 1) throw Error(errc::bad_arguments, "genus must be positive");
    BinaryChar c{std::vector<int>(g, 1), std::vector<int>(g, 0)};
    for (int j = 1; j <= g; ++j)
        if ((g - j) % 2 == 0) c.eps_prime[j - 1] = 1;
    return c;
}

BinaryChar add_char(const BinaryChar& a, const BinaryChar& b) {
    require_binary(a);
    require_binary(b);
    if (a.g() != b.g())
        throw Error(errc::bad_characteristic, "genus mismatch");
    BinaryChar c = a;
    for (int i = 0; i < a.g(); ++i) {
        c.eps[i] ^= b.eps[i];
        c.eps_prime[i] ^= b.eps_prime[i];
    }
    return c;
}

int parity(const BinaryChar& c) {
    require_binary(c);
    int p = 0;
    for (int i = 0; i < c.g(); ++i) p ^= (c.eps[i] & c.eps_prime[i]);
    return p;
}

BinaryChar divisor_char(int g, const std::vector<int>& branch_indices) {
    if (static_cast<int>(branch_indices.size()) != g - 1)
        throw Error(errc::bad_divisor_set,
                    "need exactly " + std::to_string(g - 1) +
                        " branch indices, got " +
                        std::to_string(branch_indices.size()));
    std::set<int> seen;
    BinaryChar c = riemann_constant_char(g);
    for (int s : branch_indices) {
        if (s < 2 || s > 2 * g + 1)
            throw Error(errc::bad_divisor_set,
                        "index " + std::to_string(s) +
                            " outside the admissible range [2, " +
                            std::to_string(2 * g + 1) + "]");
        if (!seen.insert(s).second)
            throw Error(errc::bad_divisor_set,
                        "duplicate index " + std::to_string(s));
        c = add_char(c, branch_point_char(g, s));
    }
    if (parity(c) != 1)
        throw Error(errc::even_characteristic,
                    "selected divisor produces an even characteristic");
    return c;
}

BinaryChar partner_char(const BinaryChar& c) {
    require_binary(c);
    BinaryChar p = c;
    for (int i = 0; i < p.g(); ++i) p.eps_prime[i] ^= 1;
    return p;
}

JacobianPoint char_to_point(const BinaryChar& c, const PeriodData& pd) {
    require_binary(c);
    if (c.g() != pd.g())
        throw Error(errc::bad_characteristic, "genus mismatch with period data");
    Eigen::VectorXcd u(pd.g());
    for (int i = 0; i < pd.g(); ++i) {
        cplx v(0.5 * c.eps_prime[i], 0.0);
        for (int j = 0; j < pd.g(); ++j)
            v += 0.5 * static_cast<double>(c.eps[j]) * pd.rm.Pi()(i, j);
        u[i] = v;
    }
    return reduce_mod_lattice(u, pd);
}

RealChar point_to_char(const Eigen::VectorXcd& u, const PeriodData& pd) {
    if (u.size() != pd.g())
        throw Error(errc::bad_arguments, "point dimension mismatch");
    RealChar r;
    const Eigen::VectorXcd two_u = 2.0 * u;
    r.eps = pd.rm.Y_inv() * two_u.imag();
    r.eps_prime = two_u.real();
    return r;
}

BinaryChar snap_char(const RealChar& c, double snap_tol) {
    const int g = static_cast<int>(c.eps.size());
    if (g == 0 || c.eps_prime.size() != g)
        throw Error(errc::bad_characteristic, "mismatched characteristic halves");
    BinaryChar out{std::vector<int>(g, 0), std::vector<int>(g, 0)};
    auto snap = [&](double v) {
        const double r = std::floor(v + 0.5);
        if (std::abs(v - r) > snap_tol)
            throw Error(errc::snap_failed,
                        "entry " + std::to_string(v) +
                            " is not within tolerance of an integer");
        const long long n = static_cast<long long>(r);
        return static_cast<int>(((n % 2) + 2) % 2);
    };
    for (int i = 0; i < g; ++i) {
        out.eps[i] = snap(c.eps[i]);
        out.eps_prime[i] = snap(c.eps_prime[i]);
    }
    return out;
}

} // namespace segcap
