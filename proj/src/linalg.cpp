#include "shiftspec/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace shiftspec {

std::optional<std::vector<Complex>> lu_solve(const ComplexMatrix& a, const std::vector<Complex>& b,
                                             double pivot_tol) {
    const std::size_t n = a.dim();
    if (b.size() != n) throw std::invalid_argument("lu_solve: dimension mismatch");

    ComplexMatrix lu = a;
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        double best = std::abs(lu.at(perm[col], col));
        for (std::size_t r = col + 1; r < n; ++r) {
            const double v = std::abs(lu.at(perm[r], col));
            if (v > best) {
                best = v;
                pivot = r;
            }
        }
        if (best < pivot_tol) return std::nullopt;
        std::swap(perm[col], perm[pivot]);
        const Complex d = lu.at(perm[col], col);
        for (std::size_t r = col + 1; r < n; ++r) {
            const Complex m = lu.at(perm[r], col) / d;
            lu.at(perm[r], col) = m;
            if (m == Complex(0.0, 0.0)) continue;
            for (std::size_t c = col + 1; c < n; ++c) lu.at(perm[r], c) -= m * lu.at(perm[col], c);
        }
    }

    std::vector<Complex> y(n);
    for (std::size_t i = 0; i < n; ++i) {
        Complex s = b[perm[i]];
        for (std::size_t j = 0; j < i; ++j) s -= lu.at(perm[i], j) * y[j];
        y[i] = s;
    }
    std::vector<Complex> x(n);
    for (std::size_t ii = n; ii-- > 0;) {
        Complex s = y[ii];
        for (std::size_t j = ii + 1; j < n; ++j) s -= lu.at(perm[ii], j) * x[j];
        x[ii] = s / lu.at(perm[ii], ii);
    }
    return x;
}

double vec_norm(const std::vector<Complex>& v) {
    double s = 0.0;
    for (const auto& c : v) s += std::norm(c);
    return std::sqrt(s);
}

namespace {

void banded_matvec(const ComplexMatrix& a, const std::vector<Complex>& x, std::vector<Complex>& y,
                   int band, bool adjoint) {
    const std::size_t n = a.dim();
    const std::ptrdiff_t w = band >= 0 ? band : static_cast<std::ptrdiff_t>(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::ptrdiff_t lo = std::max<std::ptrdiff_t>(0, static_cast<std::ptrdiff_t>(i) - w);
        const std::ptrdiff_t hi =
            std::min<std::ptrdiff_t>(static_cast<std::ptrdiff_t>(n) - 1, static_cast<std::ptrdiff_t>(i) + w);
        Complex s(0.0, 0.0);
        if (!adjoint) {
            for (std::ptrdiff_t j = lo; j <= hi; ++j)
                s += a.at(i, static_cast<std::size_t>(j)) * x[static_cast<std::size_t>(j)];
        } else {
            for (std::ptrdiff_t j = lo; j <= hi; ++j)
                s += std::conj(a.at(static_cast<std::size_t>(j), i)) * x[static_cast<std::size_t>(j)];
        }
        y[i] = s;
    }
}

} // namespace

double largest_singular_value(const ComplexMatrix& a, double tol, int max_iter, int band) {
    const std::size_t n = a.dim();
    if (n == 0) return 0.0;

    std::vector<Complex> v(n, Complex(1.0 / std::sqrt(static_cast<double>(n)), 0.0));
    std::vector<Complex> av(n), ahav(n);
    double lambda = 0.0;
    for (int it = 0; it < max_iter; ++it) {
        banded_matvec(a, v, av, band, false);
        double lambda_next = 0.0;
        for (const auto& c : av) lambda_next += std::norm(c);
        banded_matvec(a, av, ahav, band, true);
        const double nn = vec_norm(ahav);
        if (nn == 0.0) return std::sqrt(lambda_next);
        for (std::size_t i = 0; i < n; ++i) v[i] = ahav[i] / nn;
        if (std::abs(lambda_next - lambda) <= tol * std::max(1.0, lambda_next)) {
            lambda = lambda_next;
            break;
        }
        lambda = lambda_next;
    }
    return std::sqrt(lambda);
}

void fft_radix2(std::vector<Complex>& data, bool inverse) {
    const std::size_t n = data.size();
    if (n == 0 || (n & (n - 1)) != 0) throw std::invalid_argument("fft: size must be a power of two");

    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(data[i], data[j]);
    }
    const double pi = 3.14159265358979323846;
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = 2.0 * pi / static_cast<double>(len) * (inverse ? 1.0 : -1.0);
        const Complex wl(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            Complex w(1.0, 0.0);
            for (std::size_t j = 0; j < len / 2; ++j) {
                const Complex u = data[i + j];
                const Complex t = data[i + j + len / 2] * w;
                data[i + j] = u + t;
                data[i + j + len / 2] = u - t;
                w *= wl;
            }
        }
    }
    if (inverse)
        for (auto& c : data) c /= static_cast<double>(n);
}

void parallel_for(std::size_t n, int workers, const std::function<void(std::size_t)>& fn) {
    if (workers <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    const std::size_t count = std::min<std::size_t>(static_cast<std::size_t>(workers), n);
    std::vector<std::thread> pool;
    pool.reserve(count);
    for (std::size_t t = 0; t < count; ++t)
        pool.emplace_back([&, t] {
            for (std::size_t i = t; i < n; i += count) fn(i);
        });
    for (auto& th : pool) th.join();
}

} // namespace shiftspec
