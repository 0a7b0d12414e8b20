#include "shiftspec/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>

#include "shiftspec/errors.hpp"

namespace shiftspec {

SpectralRegion SpectralRegion::annulus(ExtReal lo, ExtReal hi) {
    if (!(lo <= hi)) throw std::invalid_argument("annulus: rmin must not exceed rmax");
    SpectralRegion r;
    r.kind = RegionKind::Annulus;
    r.rmin = lo;
    r.rmax = hi;
    return r;
}

SpectralRegion SpectralRegion::disk(ExtReal radius) {
    SpectralRegion r;
    r.kind = RegionKind::Disk;
    r.rmin = ExtReal(0.0);
    r.rmax = radius;
    return r;
}

SpectralRegion SpectralRegion::circle(double radius) {
    if (!(radius > 0.0)) throw std::invalid_argument("circle: radius must be positive");
    SpectralRegion r;
    r.kind = RegionKind::Circle;
    r.rmin = ExtReal(radius);
    r.rmax = ExtReal(radius);
    return r;
}

SpectralRegion SpectralRegion::from_cloud(PointCloud c) {
    if (c.points.empty()) throw std::invalid_argument("cloud region: no points");
    SpectralRegion r;
    r.kind = RegionKind::Cloud;
    r.cloud = std::move(c);
    return r;
}

std::string SpectralRegion::kind_name() const {
    switch (kind) {
    case RegionKind::Annulus: return "annulus";
    case RegionKind::Disk: return "disk";
    case RegionKind::Circle: return "circle";
    case RegionKind::Cloud: return "cloud";
    case RegionKind::Image: return "image";
    }
    return "?";
}

SpectralRegion predicted_sigma_shift(const SpaceSpec& space) {
    if (space.domain != Domain::Bilateral)
        throw std::invalid_argument("predicted_sigma_shift: bilateral space required");
    const RadiusBracket fwd = spectral_radius_shift(space, ShiftDirection::Forward, 16);
    const RadiusBracket bwd = spectral_radius_shift(space, ShiftDirection::Backward, 16);
    if (fwd.upper.is_infinite() && bwd.upper.is_infinite())
        throw HypothesisError("predicted_sigma_shift: both shift directions unbounded");

    const ExtReal rmax = fwd.upper;
    const ExtReal rmin =
        bwd.upper.is_infinite() ? ExtReal(0.0) : ExtReal(1.0 / bwd.upper.value());
    if (rmax.is_finite() && rmin == rmax) return SpectralRegion::circle(rmax.value());
    return SpectralRegion::annulus(rmin, rmax);
}

SpectralRegion predicted_sigma_unilateral(const SpaceSpec& space, ShiftDirection dir) {
    if (space.domain != Domain::Unilateral)
        throw std::invalid_argument("predicted_sigma_unilateral: Z+ space required");
    const RadiusBracket fwd = spectral_radius_shift(space, ShiftDirection::Forward, 16);
    const RadiusBracket bwd = spectral_radius_shift(space, ShiftDirection::Backward, 16);
    if (fwd.upper.is_infinite() || bwd.upper.is_infinite())
        throw HypothesisError("predicted_sigma_unilateral: both shifts must be bounded");
    return SpectralRegion::disk(dir == ShiftDirection::Forward ? fwd.upper : bwd.upper);
}

namespace {

double default_truncation(const SpectralRegion& base) {
    // 4x the largest finite radius present
    double largest = 0.0;
    if (base.rmax.is_finite()) largest = std::max(largest, base.rmax.value());
    if (base.rmin.is_finite()) largest = std::max(largest, base.rmin.value());
    return 4.0 * largest;
}

} // namespace

SpectralRegion predicted_sigma_multiplier(const FiniteSeq& phi, const SpaceSpec& space,
                                          int radial_grid, int angular_grid) {
    const SpectralRegion base = predicted_sigma_shift(space);
    const LaurentSymbol sym(phi);
    const double trunc = base.rmax.is_infinite() ? default_truncation(base) : 0.0;

    SpectralRegion out;
    out.kind = RegionKind::Image;
    out.cloud = image_of_region(sym, base, radial_grid, angular_grid, trunc);
    out.symbol_coeffs = phi;
    out.base_rmin = base.rmin;
    out.base_rmax = base.rmax;
    out.semantics = RegionSemantics::Equality;
    return out;
}

SpectralRegion predicted_sigma_toeplitz(const FiniteSeq& phi, const SpaceSpec& space, ToeplitzSide side,
                                        int radial_grid, int angular_grid) {
    if (space.domain != Domain::Unilateral)
        throw std::invalid_argument("predicted_sigma_toeplitz: Z+ space required");
    if (!phi.is_zero()) {
        if (side == ToeplitzSide::CommutesWithForward && phi.first() < 0)
            throw std::invalid_argument(
                "predicted_sigma_toeplitz: commuting with the forward shift needs support in Z+");
        if (side == ToeplitzSide::CommutesWithBackward && phi.last() > 0)
            throw std::invalid_argument(
                "predicted_sigma_toeplitz: commuting with the backward shift needs support in Z-");
    }
    const SpectralRegion base = predicted_sigma_unilateral(
        space, side == ToeplitzSide::CommutesWithForward ? ShiftDirection::Forward
                                                         : ShiftDirection::Backward);

    // The backward side is a power series in the backward shift, so the
    // kernel is reflected before sampling the disk.
    const FiniteSeq coeffs =
        side == ToeplitzSide::CommutesWithForward ? phi : phi.reflected();
    const LaurentSymbol sym(coeffs);

    SpectralRegion out;
    out.kind = RegionKind::Image;
    out.cloud = image_of_region(sym, base, radial_grid, angular_grid, 0.0);
    out.symbol_coeffs = coeffs;
    out.base_rmin = base.rmin;
    out.base_rmax = base.rmax;
    out.semantics = RegionSemantics::InclusionOnly;
    return out;
}

namespace {

// Uniform-grid nearest-point index; query cost stays near constant for
// evenly spread clouds.
class NearestIndex {
public:
    explicit NearestIndex(const std::vector<Complex>& pts) : pts_(pts) {
        double xmin = pts[0].real(), xmax = xmin, ymin = pts[0].imag(), ymax = ymin;
        for (const auto& p : pts) {
            xmin = std::min(xmin, p.real());
            xmax = std::max(xmax, p.real());
            ymin = std::min(ymin, p.imag());
            ymax = std::max(ymax, p.imag());
        }
        x0_ = xmin;
        y0_ = ymin;
        const double diam = std::max(xmax - xmin, ymax - ymin);
        const int k = std::min<int>(512, static_cast<int>(std::ceil(std::sqrt(static_cast<double>(pts.size())))));
        cell_ = diam > 0.0 ? diam / k : 1.0;
        buckets_.reserve(pts.size());
        for (std::size_t i = 0; i < pts.size(); ++i)
            buckets_[key(cell_x(pts[i].real()), cell_y(pts[i].imag()))].push_back(i);
    }

    double min_dist(Complex q) const {
        const std::int64_t cx = cell_x(q.real());
        const std::int64_t cy = cell_y(q.imag());
        double best = std::numeric_limits<double>::infinity();
        for (std::int64_t ring = 0;; ++ring) {
            if (best < std::numeric_limits<double>::infinity() &&
                static_cast<double>(ring - 1) * cell_ > best)
                break;
            for (std::int64_t dx = -ring; dx <= ring; ++dx) {
                for (std::int64_t dy = -ring; dy <= ring; ++dy) {
                    if (std::max(std::abs(dx), std::abs(dy)) != ring) continue;
                    const auto it = buckets_.find(key(cx + dx, cy + dy));
                    if (it == buckets_.end()) continue;
                    for (std::size_t i : it->second) best = std::min(best, std::abs(pts_[i] - q));
                }
            }
            if (ring > ring_limit()) break; // beyond the populated box
        }
        if (!std::isfinite(best)) {
            for (const auto& p : pts_) best = std::min(best, std::abs(p - q));
        }
        return best;
    }

private:
    std::int64_t ring_limit() const {
        return static_cast<std::int64_t>(2.0 * std::sqrt(static_cast<double>(pts_.size()))) + 4;
    }
    std::int64_t cell_x(double x) const { return static_cast<std::int64_t>(std::floor((x - x0_) / cell_)); }
    std::int64_t cell_y(double y) const { return static_cast<std::int64_t>(std::floor((y - y0_) / cell_)); }
    static std::int64_t key(std::int64_t ix, std::int64_t iy) { return (ix << 21) ^ (iy & ((1 << 21) - 1)); }

    const std::vector<Complex>& pts_;
    double x0_ = 0.0, y0_ = 0.0, cell_ = 1.0;
    std::unordered_map<std::int64_t, std::vector<std::size_t>> buckets_;
};

double directed_hausdorff(const std::vector<Complex>& a, const NearestIndex& bidx) {
    double worst = 0.0;
    for (const auto& p : a) worst = std::max(worst, bidx.min_dist(p));
    return worst;
}

} // namespace

ContainsVerdict region_contains(const SpectralRegion& region, Complex lambda, double tol) {
    if (tol < 0.0) throw std::invalid_argument("region_contains: tol must be >= 0");
    const double a = std::abs(lambda);
    switch (region.kind) {
    case RegionKind::Annulus: {
        if (region.rmin.is_finite() && region.rmin.value() > 0.0 &&
            std::abs(a - region.rmin.value()) <= tol)
            return ContainsVerdict::Boundary;
        if (region.rmax.is_finite() && std::abs(a - region.rmax.value()) <= tol)
            return ContainsVerdict::Boundary;
        if (a >= region.rmin.raw() && a <= region.rmax.raw()) return ContainsVerdict::Inside;
        return ContainsVerdict::Outside;
    }
    case RegionKind::Disk: {
        if (region.rmax.is_finite() && std::abs(a - region.rmax.value()) <= tol)
            return ContainsVerdict::Boundary;
        return a <= region.rmax.raw() ? ContainsVerdict::Inside : ContainsVerdict::Outside;
    }
    case RegionKind::Circle:
        return std::abs(a - region.rmax.value()) <= tol ? ContainsVerdict::Inside
                                                        : ContainsVerdict::Outside;
    case RegionKind::Cloud:
    case RegionKind::Image: {
        if (region.cloud.points.empty())
            throw std::invalid_argument("region_contains: empty cloud");
        NearestIndex idx(region.cloud.points);
        const double d = idx.min_dist(lambda);
        if (d <= tol) return ContainsVerdict::Inside;
        if (d <= 2.0 * tol) return ContainsVerdict::Boundary;
        return ContainsVerdict::Outside;
    }
    }
    throw std::logic_error("unreachable region kind");
}

double hausdorff(const PointCloud& a, const PointCloud& b) {
    if (a.points.empty() || b.points.empty())
        throw std::invalid_argument("hausdorff: clouds must be nonempty");
    NearestIndex ai(a.points);
    NearestIndex bi(b.points);
    return std::max(directed_hausdorff(a.points, bi), directed_hausdorff(b.points, ai));
}

} // namespace shiftspec
