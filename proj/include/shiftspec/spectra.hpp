#pragma once

#include <string>

#include "shiftspec/ext_real.hpp"
#include "shiftspec/symbols.hpp"
#include "shiftspec/spaces.hpp"

namespace shiftspec {

enum class RegionKind { Annulus, Disk, Circle, Cloud, Image };

// Image regions from the one-sided spectral inclusions are never reported
// as the full spectrum.
enum class RegionSemantics { Equality, InclusionOnly };

inline constexpr int kDefaultAngularGrid = 4096;
inline constexpr int kDefaultRadialGrid = 257;

struct SpectralRegion {
    RegionKind kind = RegionKind::Circle;

    // Annulus [rmin, rmax]; Disk [0, rmax]; Circle rmin = rmax.
    ExtReal rmin;
    ExtReal rmax;

    // Cloud / Image payload.
    PointCloud cloud;

    // Image provenance: the symbol and the base radii it was sampled over.
    FiniteSeq symbol_coeffs;
    ExtReal base_rmin;
    ExtReal base_rmax;
    RegionSemantics semantics = RegionSemantics::Equality;

    static SpectralRegion annulus(ExtReal lo, ExtReal hi);
    static SpectralRegion disk(ExtReal r);
    static SpectralRegion circle(double r);
    static SpectralRegion from_cloud(PointCloud c);

    std::string kind_name() const;
};

// sigma(S) on a bilateral space: the annulus between 1/rho(S^-1) and rho(S),
// degenerating to a circle when the radii coincide; an unbounded direction
// propagates as an infinite outer radius.
SpectralRegion predicted_sigma_shift(const SpaceSpec& space);

// sigma of the forward/backward shift on a Z+ space: the closed disk of the
// corresponding spectral radius. Requires both directions bounded.
SpectralRegion predicted_sigma_unilateral(const SpaceSpec& space, ShiftDirection dir);

// Closure of the symbol image of sigma(S); the full spectrum for
// convolution multipliers.
SpectralRegion predicted_sigma_multiplier(const FiniteSeq& phi, const SpaceSpec& space,
                                          int radial_grid = kDefaultRadialGrid,
                                          int angular_grid = kDefaultAngularGrid);

enum class ToeplitzSide { CommutesWithForward, CommutesWithBackward };

// Inclusion-only prediction for Toeplitz operators with one-sided kernels.
// The backward side is sampled in the backward-shift variable, i.e. with the
// reflected kernel, so the image stays inside the spectrum.
SpectralRegion predicted_sigma_toeplitz(const FiniteSeq& phi, const SpaceSpec& space, ToeplitzSide side,
                                        int radial_grid = kDefaultRadialGrid,
                                        int angular_grid = kDefaultAngularGrid);

enum class ContainsVerdict { Inside, Boundary, Outside };

ContainsVerdict region_contains(const SpectralRegion& region, Complex lambda, double tol);

// Symmetric Hausdorff distance between nonempty point clouds.
double hausdorff(const PointCloud& a, const PointCloud& b);

} // namespace shiftspec
