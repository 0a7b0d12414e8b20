#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

namespace shiftspec {

using Complex = std::complex<double>;

// Dense square complex matrix, row major.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim, Complex(0.0, 0.0)) {}

    std::size_t dim() const { return dim_; }
    Complex& at(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
    const Complex& at(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }
    const std::vector<Complex>& data() const { return data_; }

private:
    std::size_t dim_ = 0;
    std::vector<Complex> data_;
};

// Solves A x = b by LU with partial pivoting; nullopt when a pivot falls
// below `pivot_tol` (numerically singular).
std::optional<std::vector<Complex>> lu_solve(const ComplexMatrix& a, const std::vector<Complex>& b,
                                             double pivot_tol = 1e-14);

// Largest singular value estimated by power iteration on A*A with a
// deterministic all-ones start. The returned Rayleigh value never exceeds
// the true maximum. `band` restricts the matvec to |i - j| <= band when
// nonnegative (entries outside the band must be zero).
double largest_singular_value(const ComplexMatrix& a, double tol = 1e-10, int max_iter = 10000,
                              int band = -1);

// In-place radix-2 FFT, n a power of two; inverse divides by n.
void fft_radix2(std::vector<Complex>& data, bool inverse);

// Euclidean norm of a complex vector.
double vec_norm(const std::vector<Complex>& v);

// Runs fn(i) for i in [0, n) on `workers` threads; any worker count <= 1
// runs inline. Work items must be independent.
void parallel_for(std::size_t n, int workers, const std::function<void(std::size_t)>& fn);

} // namespace shiftspec
