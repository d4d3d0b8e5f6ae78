#include "segcap/segment_system.hpp"

#include <cmath>

namespace segcap {

AffineMap AffineMap::inverse() const {
    if (scale == 0.0)
        throw Error(errc::bad_arguments, "affine map with zero scale has no inverse");
    return {1.0 / scale, -shift / scale};
}

AffineMap AffineMap::compose(const AffineMap& inner) const {
    return {scale * inner.scale, scale * inner.shift + shift};
}

SegmentSystem SegmentSystem::create(std::vector<double> endpoints,
                                    double min_sep_rel) {
    if (endpoints.empty())
        throw Error(errc::empty_system, "endpoint list is empty");
    if (endpoints.size() % 2 != 0)
        throw Error(errc::odd_endpoint_count,
                    "endpoint count must be even, got " +
                        std::to_string(endpoints.size()));
    for (double v : endpoints)
        if (!std::isfinite(v))
            throw Error(errc::bad_arguments, "endpoint is not finite");
    for (std::size_t i = 1; i < endpoints.size(); ++i)
        if (!(endpoints[i] > endpoints[i - 1]))
            throw Error(errc::nonincreasing_endpoints,
                        "endpoints must be strictly increasing at position " +
                            std::to_string(i));
    const double diam = endpoints.back() - endpoints.front();
    const double min_sep = min_sep_rel * diam;
    for (std::size_t i = 1; i < endpoints.size(); ++i)
        if (endpoints[i] - endpoints[i - 1] <= min_sep)
            throw Error(errc::separation_too_small,
                        "endpoint separation below " + std::to_string(min_sep) +
                            " at position " + std::to_string(i));
    return SegmentSystem(std::move(endpoints));
}

double SegmentSystem::total_length() const {
    double L = 0.0;
    for (std::size_t i = 0; i < segment_count(); ++i)
        L += e_[2 * i + 1] - e_[2 * i];
    return L;
}

bool SegmentSystem::contains(double x) const {
    for (std::size_t i = 0; i < segment_count(); ++i)
        if (x >= e_[2 * i] && x <= e_[2 * i + 1]) return true;
    return false;
}

NormalizedSystem normalize(const SegmentSystem& E) {
    const double a = E.diameter();
    const double b = E.endpoints().front();
    std::vector<double> ne(E.endpoints().size());
    for (std::size_t i = 0; i < ne.size(); ++i)
        ne[i] = (E.endpoints()[i] - b) / a;
    ne.front() = 0.0; // exact by construction, pin against rounding
    ne.back() = 1.0;
    return {SegmentSystem::create(std::move(ne)), AffineMap{a, b}};
}

} // namespace segcap
