#pragma once

#include <algorithm>
#include <complex>
#include <cstddef>
#include <vector>

namespace shiftspec {

using Complex = std::complex<double>;

// Finitely supported complex sequence on Z, stored as a support window
// [offset, offset + coeffs.size() - 1]. Canonically trimmed: first and last
// stored coefficients are nonzero; the empty window is the zero sequence.
class FiniteSeq {
public:
    FiniteSeq() = default;

    FiniteSeq(int offset, std::vector<Complex> coeffs) : offset_(offset), coeffs_(std::move(coeffs)) {
        trim();
    }

    // e_k: the unit atom at index k.
    static FiniteSeq unit(int k, Complex value = Complex(1.0, 0.0)) {
        return FiniteSeq(k, {value});
    }

    static FiniteSeq zero() { return FiniteSeq(); }

    bool is_zero() const { return coeffs_.empty(); }
    int first() const { return offset_; }
    int last() const { return offset_ + static_cast<int>(coeffs_.size()) - 1; }
    std::size_t support_size() const { return coeffs_.size(); }

    Complex coeff(int n) const {
        if (coeffs_.empty() || n < first() || n > last()) return {0.0, 0.0};
        return coeffs_[static_cast<std::size_t>(n - offset_)];
    }

    const std::vector<Complex>& coeffs() const { return coeffs_; }

    double max_abs() const {
        double m = 0.0;
        for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
        return m;
    }

    double abs_sum() const {
        double s = 0.0;
        for (const auto& c : coeffs_) s += std::abs(c);
        return s;
    }

    FiniteSeq scaled(Complex c) const {
        if (c == Complex(0.0, 0.0)) return zero();
        std::vector<Complex> out(coeffs_);
        for (auto& v : out) v *= c;
        return FiniteSeq(offset_, std::move(out));
    }

    // Index translation: result(n) = this(n - k).
    FiniteSeq translated(int k) const {
        if (is_zero()) return zero();
        return FiniteSeq(offset_ + k, coeffs_);
    }

    // Index reflection: result(n) = this(-n).
    FiniteSeq reflected() const {
        if (is_zero()) return zero();
        std::vector<Complex> out(coeffs_.rbegin(), coeffs_.rend());
        return FiniteSeq(-last(), std::move(out));
    }

    friend FiniteSeq operator+(const FiniteSeq& a, const FiniteSeq& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        int lo = std::min(a.first(), b.first());
        int hi = std::max(a.last(), b.last());
        std::vector<Complex> out(static_cast<std::size_t>(hi - lo + 1), Complex(0.0, 0.0));
        for (int n = a.first(); n <= a.last(); ++n) out[static_cast<std::size_t>(n - lo)] += a.coeff(n);
        for (int n = b.first(); n <= b.last(); ++n) out[static_cast<std::size_t>(n - lo)] += b.coeff(n);
        return FiniteSeq(lo, std::move(out));
    }

    friend FiniteSeq operator-(const FiniteSeq& a, const FiniteSeq& b) {
        return a + b.scaled(Complex(-1.0, 0.0));
    }

    friend double max_abs_diff(const FiniteSeq& a, const FiniteSeq& b) {
        return (a - b).max_abs();
    }

private:
    void trim() {
        std::size_t lead = 0;
        while (lead < coeffs_.size() && coeffs_[lead] == Complex(0.0, 0.0)) ++lead;
        if (lead == coeffs_.size()) {
            coeffs_.clear();
            offset_ = 0;
            return;
        }
        std::size_t tail = coeffs_.size();
        while (tail > lead && coeffs_[tail - 1] == Complex(0.0, 0.0)) --tail;
        if (lead > 0 || tail < coeffs_.size()) {
            coeffs_ = std::vector<Complex>(coeffs_.begin() + static_cast<std::ptrdiff_t>(lead),
                                           coeffs_.begin() + static_cast<std::ptrdiff_t>(tail));
            offset_ += static_cast<int>(lead);
        }
    }

    int offset_ = 0;
    std::vector<Complex> coeffs_;
};

} // namespace shiftspec
