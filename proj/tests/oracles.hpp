// Test-side oracles, deliberately independent of the library's computation
// paths: plain windowed sups, scatter-style convolution, Sturm bisection.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "shiftspec/finite_seq.hpp"
#include "shiftspec/weights.hpp"

namespace oracles {

using shiftspec::Complex;
using shiftspec::Domain;
using shiftspec::FiniteSeq;
using shiftspec::WeightFamily;

// sup of omega(n+k)/omega(n) over a plain window, no tail reasoning
inline double brute_shift_norm(const WeightFamily& w, int k, int window = 1000) {
    double best = 0.0;
    const int lo = w.domain() == Domain::Unilateral ? std::max(0, -k) : -window;
    for (int n = lo; n <= window; ++n) {
        if (!w.in_domain(n) || !w.in_domain(n + k)) continue;
        best = std::max(best, std::exp(w.log_weight(n + k) - w.log_weight(n)));
    }
    return best;
}

// Gelfand evaluation from the brute-force power norms
inline double brute_spectral_radius(const WeightFamily& w, int sign, int horizon,
                                    int window = 1000) {
    double best = std::numeric_limits<double>::infinity();
    for (int n = 1; n <= horizon; ++n)
        best = std::min(best, std::pow(brute_shift_norm(w, sign * n, window),
                                       1.0 / static_cast<double>(n)));
    return best;
}

// scatter-style convolution: accumulate products over input index pairs
inline FiniteSeq conv_scatter(const FiniteSeq& a, const FiniteSeq& b) {
    if (a.is_zero() || b.is_zero()) return FiniteSeq::zero();
    const int lo = a.first() + b.first();
    const int hi = a.last() + b.last();
    std::vector<Complex> out(static_cast<std::size_t>(hi - lo + 1), Complex(0.0, 0.0));
    for (int i = a.first(); i <= a.last(); ++i)
        for (int j = b.first(); j <= b.last(); ++j)
            out[static_cast<std::size_t>(i + j - lo)] += a.coeff(i) * b.coeff(j);
    return FiniteSeq(lo, std::move(out));
}

// eigenvalues of a symmetric tridiagonal matrix (diag d, offdiag e) by Sturm
// sequence counting and bisection
inline std::vector<double> sturm_tridiag_eigenvalues(const std::vector<double>& d,
                                                     const std::vector<double>& e,
                                                     double tol = 1e-12) {
    const std::size_t n = d.size();
    // eigenvalue count below x via the shifted LDL^T recurrence
    const auto count_below = [&](double x) {
        int count = 0;
        double q = d[0] - x;
        if (q < 0.0) ++count;
        for (std::size_t i = 1; i < n; ++i) {
            double denom = q;
            if (std::abs(denom) < 1e-300) denom = denom < 0.0 ? -1e-300 : 1e-300;
            q = d[i] - x - e[i - 1] * e[i - 1] / denom;
            if (q < 0.0) ++count;
        }
        return count;
    };

    double lo = d[0], hi = d[0];
    for (std::size_t i = 0; i < n; ++i) {
        const double r = (i > 0 ? std::abs(e[i - 1]) : 0.0) + (i + 1 < n ? std::abs(e[i]) : 0.0);
        lo = std::min(lo, d[i] - r);
        hi = std::max(hi, d[i] + r);
    }
    lo -= 1.0;
    hi += 1.0;

    std::vector<double> eig(n);
    for (std::size_t k = 0; k < n; ++k) {
        double a = lo, b = hi;
        while (b - a > tol) {
            const double mid = 0.5 * (a + b);
            if (count_below(mid) >= static_cast<int>(k) + 1)
                b = mid;
            else
                a = mid;
        }
        eig[k] = 0.5 * (a + b);
    }
    return eig;
}

// dense-grid sup of |f| on the circle of radius r
template <typename F>
double dense_circle_sup(F&& f, double r, int grid = 1 << 20) {
    double best = 0.0;
    const double two_pi = 2.0 * 3.14159265358979323846;
    for (int i = 0; i < grid; ++i) {
        const double t = two_pi * static_cast<double>(i) / static_cast<double>(grid);
        best = std::max(best, std::abs(f(Complex(r * std::cos(t), r * std::sin(t)))));
    }
    return best;
}

} // namespace oracles
