#pragma once

#include <vector>

#include "shiftspec/finite_seq.hpp"

namespace shiftspec {

struct SpectralRegion;

// Laurent polynomial z -> sum phi(n) z^n attached to a multiplier or
// Toeplitz kernel.
struct LaurentSymbol {
    FiniteSeq coeffs;

    explicit LaurentSymbol(FiniteSeq c) : coeffs(std::move(c)) {}

    bool has_negative_powers() const { return !coeffs.is_zero() && coeffs.first() < 0; }
};

// Exact finite Laurent sum, Horner-evaluated separately on the nonnegative
// and negative powers; z = 0 with negative support raises a pole error.
Complex eval_symbol(const LaurentSymbol& s, Complex z);

struct CircleSup {
    double value = 0.0; // grid maximum after one refinement pass
    double slack = 0.0; // Lipschitz bound on the gap to the true supremum
};

// max |s| over an m-point grid on the circle of radius r, refined by one
// golden-section pass around the argmax.
CircleSup sup_on_circle(const LaurentSymbol& s, double r, int m);

struct CloudMeta {
    int radial_grid = 0;
    int angular_grid = 0;
    bool truncated = false;          // outer radius replaced by a finite cutoff
    double truncation_radius = 0.0;  // the cutoff actually sampled
    bool inner_punctured = false;    // r = 0 ring skipped (pole at 0)
};

struct PointCloud {
    std::vector<Complex> points;
    CloudMeta meta;
};

// Samples s over a tensor grid of the region's radii and angles. Unbounded
// regions need a declared truncation radius (<= 0 means none given).
PointCloud image_of_region(const LaurentSymbol& s, const SpectralRegion& region, int radial_grid,
                           int angular_grid, double truncation_radius = 0.0);

} // namespace shiftspec
