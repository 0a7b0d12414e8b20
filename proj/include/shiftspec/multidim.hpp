#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "shiftspec/spectra.hpp"
#include "shiftspec/verify.hpp"

namespace shiftspec {

// Finitely supported sequence on Z^k, k >= 2; zero entries are never stored.
class MultiIndexSeq {
public:
    using Index = std::vector<int>;

    explicit MultiIndexSeq(int k) : k_(k) {
        if (k < 2) throw std::invalid_argument("MultiIndexSeq: k must be >= 2");
    }

    static MultiIndexSeq unit(Index n, Complex value = Complex(1.0, 0.0)) {
        MultiIndexSeq s(static_cast<int>(n.size()));
        s.set(std::move(n), value);
        return s;
    }

    int dim() const { return k_; }
    bool is_zero() const { return entries_.empty(); }
    const std::map<Index, Complex>& entries() const { return entries_; }

    void set(Index n, Complex value) {
        if (static_cast<int>(n.size()) != k_)
            throw std::invalid_argument("MultiIndexSeq: index arity mismatch");
        if (value == Complex(0.0, 0.0))
            entries_.erase(n);
        else
            entries_[std::move(n)] = value;
    }

    Complex coeff(const Index& n) const {
        const auto it = entries_.find(n);
        return it == entries_.end() ? Complex(0.0, 0.0) : it->second;
    }

    friend MultiIndexSeq operator+(const MultiIndexSeq& a, const MultiIndexSeq& b) {
        if (a.k_ != b.k_) throw std::invalid_argument("MultiIndexSeq: arity mismatch");
        MultiIndexSeq out = a;
        for (const auto& [n, c] : b.entries_) out.set(n, out.coeff(n) + c);
        return out;
    }

private:
    int k_;
    std::map<Index, Complex> entries_;
};

// Exact multi-convolution of finitely supported sequences.
MultiIndexSeq convolve_multi(const MultiIndexSeq& a, const MultiIndexSeq& b);

struct JointRegion {
    std::vector<SpectralRegion> factors;
    bool exact = false;
};

// Per-coordinate predicted shift spectra for a separable product weight;
// exact for constant, geometric and two-sided exponential factors.
JointRegion joint_region_separable(const std::vector<SpaceSpec>& spaces);

struct ExclusionOutcome {
    bool excluded = false;
    double witness_value = 0.0; // |symbol(z)| of the excluding test
    double witness_bound = 0.0; // its operator-norm bound
    std::string witness; // short description of the excluding test
};

// Tries monomials up to degree `monomial_degree` plus seeded random
// polynomials; Excluded needs a test with |symbol(z)| strictly above its
// norm bound, otherwise Unknown (membership is never certified).
ExclusionOutcome joint_exclusion_test(const std::vector<Complex>& z,
                                      const std::vector<SpaceSpec>& spaces, int monomial_degree = 4,
                                      int random_polys = 64, std::uint64_t seed = 1);

Complex eval_symbol_multi(const MultiIndexSeq& phi, const std::vector<Complex>& z);

// Symbol values over the tensor polytorus grid of the joint region.
PointCloud predicted_sigma_multiplier_multi(const MultiIndexSeq& phi,
                                            const std::vector<SpaceSpec>& spaces,
                                            int angular_grid = 64, int radial_grid = 9);

// Tensor-product approximate eigenvector residual on [-N, N]^k.
double approx_eigen_residual_multi(const MultiIndexSeq& phi, const std::vector<Complex>& z,
                                   const std::vector<SpaceSpec>& spaces, int N);

// k-dimensional analogue of the Laurent-inversion certificate: one circle
// per axis, k-dimensional transform, shift-norm weighted validation.
Certificate outside_certificate_multi(const MultiIndexSeq& phi, Complex lambda,
                                      const std::vector<SpaceSpec>& spaces, int m = 256);

} // namespace shiftspec
