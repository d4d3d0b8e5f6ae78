#pragma once

#include <optional>
#include <vector>

#include "segcap/characteristics.hpp"
#include "segcap/curve.hpp"

namespace segcap {

struct CapacityDiagnostics {
    // Magnitudes of the four series values entering the product, plus the
    // affine scale; capacity = scale * (t_odd_u * t_part_u / (t_odd_2u * t_part_0))^2.
    double t_odd_u = 0.0;
    double t_part_u = 0.0;
    double t_odd_2u = 0.0;
    double t_part_0 = 0.0;
    double scale = 0.0;
};

struct CapacityResult {
    double capacity = 0.0;
    int genus = 0;
    bool closed_form = false;           // single segment: length/4, no series
    std::vector<int> divisor_indices;   // empty when closed_form
    BinaryChar char_used;               // empty when closed_form
    CapacityDiagnostics diagnostics;
};

// Default degree-(g-1) branch selection {2, ..., g} (empty at genus 1).
std::vector<int> default_divisor_indices(int g);

// Green's function of the complement at x via the series ratio; pd must
// belong to the system the characteristic was built for.  Arguments in the
// lower half-plane are conjugated first (the function is symmetric).
double green_function(const PeriodData& pd, const BinaryChar& chr, cplx x);

// Coordinate of the curve point with Abel image u, normalized so the first
// branch point maps to 0 and the last to 1.
cplx x_of_point(const PeriodData& pd, const BinaryChar& chr,
                const Eigen::VectorXcd& u);

// Bundles normalization, period computation and characteristic selection so
// repeated Green/capacity evaluations reuse one set of periods.
class GreenEvaluator {
public:
    explicit GreenEvaluator(const SegmentSystem& E, QuadratureConfig cfg = {},
                            const std::vector<int>& divisor_indices = {});

    double green(cplx x) const;
    const CapacityResult& result() const { return result_; }
    double capacity_value() const { return result_.capacity; }
    int genus() const { return result_.genus; }
    const PeriodData* periods() const { return pd_ ? &*pd_ : nullptr; }
    const AffineMap& to_original() const { return to_original_; }

private:
    SegmentSystem E_;
    AffineMap to_original_;  // normalized -> original coordinates
    std::optional<PeriodData> pd_;
    BinaryChar chr_;
    CapacityResult result_;
};

// Logarithmic capacity of the union of segments.
CapacityResult capacity(const SegmentSystem& E, const QuadratureConfig& cfg = {},
                        const std::vector<int>& divisor_indices = {});

} // namespace segcap
