#pragma once

#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include "segcap/errors.hpp"

namespace segcap {

// Affine change of coordinates x -> scale*x + shift on the real line.
struct AffineMap {
    double scale = 1.0;
    double shift = 0.0;

    double operator()(double x) const { return scale * x + shift; }
    std::complex<double> operator()(std::complex<double> x) const {
        return scale * x + shift;
    }
    AffineMap inverse() const;
    AffineMap compose(const AffineMap& inner) const; // this ∘ inner
};

// A finite union of disjoint closed real segments
//   [e_1,e_2] ∪ [e_3,e_4] ∪ ... ∪ [e_{2g+1},e_{2g+2}],
// stored as the strictly increasing endpoint list.  The complementary
// bounded open intervals (e_{2j},e_{2j+1}) are the "gaps"; g = gap count.
class SegmentSystem {
public:
    // Validates and builds.  Endpoints must have even size >= 2 and be
    // strictly increasing with pairwise separation > min_sep_rel * diameter.
    // Input order is the caller's responsibility; nothing is sorted silently.
    static SegmentSystem create(std::vector<double> endpoints,
                                double min_sep_rel = 1e-12);

    const std::vector<double>& endpoints() const { return e_; }
    std::size_t genus() const { return e_.size() / 2 - 1; }
    std::size_t segment_count() const { return e_.size() / 2; }
    double diameter() const { return e_.back() - e_.front(); }
    double total_length() const;

    // i in [0, segment_count)
    std::pair<double, double> segment(std::size_t i) const {
        return {e_[2 * i], e_[2 * i + 1]};
    }
    // j in [0, genus)
    std::pair<double, double> gap(std::size_t j) const {
        return {e_[2 * j + 1], e_[2 * j + 2]};
    }

    bool contains(double x) const;

private:
    explicit SegmentSystem(std::vector<double> e) : e_(std::move(e)) {}
    std::vector<double> e_;
};

// Rescales E onto [0,1] (first endpoint to 0, last to 1).  Returns the
// normalized system together with the map sending normalized coordinates
// back to the original ones.
struct NormalizedSystem {
    SegmentSystem system;
    AffineMap to_original; // x_orig = to_original(x_norm)
};

NormalizedSystem normalize(const SegmentSystem& E);

} // namespace segcap
