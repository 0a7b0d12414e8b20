#include "shiftspec/symbols.hpp"

#include <algorithm>
#include <cmath>

#include "shiftspec/errors.hpp"
#include "shiftspec/spectra.hpp"

namespace shiftspec {

Complex eval_symbol(const LaurentSymbol& s, Complex z) {
    const FiniteSeq& c = s.coeffs;
    if (c.is_zero()) return {0.0, 0.0};
    if (z == Complex(0.0, 0.0)) {
        if (c.first() < 0) throw PoleError("eval_symbol: pole at z = 0");
        return c.coeff(0);
    }

    // nonnegative powers, Horner from the top
    Complex plus(0.0, 0.0);
    if (c.last() >= 0) {
        for (int n = c.last(); n >= 0; --n) plus = plus * z + c.coeff(n);
    }
    // negative powers, Horner in 1/z
    Complex minus(0.0, 0.0);
    if (c.first() < 0) {
        const Complex u = Complex(1.0, 0.0) / z;
        for (int n = c.first(); n <= -1; ++n) minus = minus * u + c.coeff(n);
        minus *= u;
    }
    return plus + minus;
}

namespace {

double abs_at(const LaurentSymbol& s, double r, double theta) {
    return std::abs(eval_symbol(s, Complex(r * std::cos(theta), r * std::sin(theta))));
}

} // namespace

CircleSup sup_on_circle(const LaurentSymbol& s, double r, int m) {
    if (!(r > 0.0)) throw std::invalid_argument("sup_on_circle: radius must be positive");
    if (m < 16) throw std::invalid_argument("sup_on_circle: grid must have >= 16 points");

    const double two_pi = 2.0 * 3.14159265358979323846;
    double best = 0.0;
    double best_theta = 0.0;
    for (int i = 0; i < m; ++i) {
        const double theta = two_pi * static_cast<double>(i) / static_cast<double>(m);
        const double v = abs_at(s, r, theta);
        if (v > best) {
            best = v;
            best_theta = theta;
        }
    }

    // one golden-section pass around the argmax cell
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double lo = best_theta - two_pi / m;
    double hi = best_theta + two_pi / m;
    double x1 = hi - gr * (hi - lo);
    double x2 = lo + gr * (hi - lo);
    double f1 = abs_at(s, r, x1);
    double f2 = abs_at(s, r, x2);
    for (int it = 0; it < 60; ++it) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + gr * (hi - lo);
            f2 = abs_at(s, r, x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - gr * (hi - lo);
            f1 = abs_at(s, r, x1);
        }
        best = std::max(best, std::max(f1, f2));
    }

    CircleSup out;
    out.value = best;

    // |d/dtheta s(r e^{i theta})| <= sum |n| |c_n| r^n
    double lip = 0.0;
    const FiniteSeq& c = s.coeffs;
    for (int n = c.first(); n <= c.last() && !c.is_zero(); ++n) {
        const double a = std::abs(c.coeff(n));
        if (a == 0.0) continue;
        lip += std::abs(static_cast<double>(n)) * a * std::pow(r, n);
    }
    out.slack = lip * 3.14159265358979323846 / static_cast<double>(m);
    return out;
}

PointCloud image_of_region(const LaurentSymbol& s, const SpectralRegion& region, int radial_grid,
                           int angular_grid, double truncation_radius) {
    if (radial_grid < 1 || angular_grid < 4)
        throw std::invalid_argument("image_of_region: grid too small");
    if (region.kind == RegionKind::Cloud || region.kind == RegionKind::Image)
        throw std::invalid_argument("image_of_region: base region must be a radial set");

    double lo = region.rmin.is_finite() ? region.rmin.value() : 0.0;
    double hi;
    PointCloud out;
    if (region.rmax.is_infinite()) {
        if (!(truncation_radius > 0.0))
            throw ConfigError("image_of_region: unbounded region needs a truncation radius");
        hi = truncation_radius;
        out.meta.truncated = true;
        out.meta.truncation_radius = truncation_radius;
    } else {
        hi = region.rmax.value();
    }
    if (region.kind == RegionKind::Disk) lo = 0.0;
    if (region.kind == RegionKind::Circle) lo = hi;

    const int radial = (hi == lo) ? 1 : radial_grid;
    out.meta.radial_grid = radial;
    out.meta.angular_grid = angular_grid;
    out.points.reserve(static_cast<std::size_t>(radial) * static_cast<std::size_t>(angular_grid));

    const double two_pi = 2.0 * 3.14159265358979323846;
    for (int ri = 0; ri < radial; ++ri) {
        const double r =
            radial == 1 ? lo : lo + (hi - lo) * static_cast<double>(ri) / static_cast<double>(radial - 1);
        if (r == 0.0 && s.has_negative_powers()) {
            out.meta.inner_punctured = true;
            continue;
        }
        for (int ai = 0; ai < angular_grid; ++ai) {
            const double theta = two_pi * static_cast<double>(ai) / static_cast<double>(angular_grid);
            out.points.push_back(eval_symbol(s, Complex(r * std::cos(theta), r * std::sin(theta))));
        }
    }
    return out;
}

} // namespace shiftspec
