#pragma once

#include <optional>
#include <string>

#include "shiftspec/finite_seq.hpp"
#include "shiftspec/linalg.hpp"
#include "shiftspec/spaces.hpp"

namespace shiftspec {

enum class OperatorKind { Multiplier, Toeplitz, ShiftPower };

// A convolution multiplier, a Toeplitz operator u -> P+(phi * u), or a pure
// shift power, together with the space it acts on.
struct OperatorSpec {
    OperatorKind kind = OperatorKind::Multiplier;
    FiniteSeq phi;
    int power = 0; // ShiftPower only; negative means the backward direction
    SpaceSpec space;

    static OperatorSpec multiplier(FiniteSeq phi, SpaceSpec space);
    static OperatorSpec toeplitz(FiniteSeq phi, SpaceSpec space);
    static OperatorSpec shift_power(int k, SpaceSpec space);

    // Convolution kernel: phi, or e_k for a shift power.
    FiniteSeq kernel() const;

    std::string describe() const;
};

// Dense compression of the operator to a finite index window, taken in the
// coordinates where the weighted l2 space is isometric to unweighted l2.
struct FiniteSection {
    int window_lo = 0;
    int window_hi = 0;
    int band = 0; // entries vanish for |i - j| > band
    ComplexMatrix matrix;

    int dim() const { return window_hi - window_lo + 1; }
    int row_of(int n) const { return n - window_lo; }
};

// Exact finite convolution; the support window is the Minkowski sum of the
// inputs' windows, trimmed.
FiniteSeq convolve(const FiniteSeq& phi, const FiniteSeq& f);

// Drops coefficients at negative indices.
FiniteSeq project_plus(const FiniteSeq& u);

FiniteSeq apply_operator(const OperatorSpec& op, const FiniteSeq& f);

// Window [-N, N] on Z, [0, N] on Z+ (the window itself encodes P+ for
// Toeplitz kernels with negative support). Requires p = 2.
FiniteSection finite_section(const OperatorSpec& op, int N);

struct NormBracket {
    std::optional<double> lower; // largest singular value of the section (p = 2 only)
    ExtReal upper;               // sum_k |phi(k)| * ||S^k||
};

NormBracket operator_norm_bracket(const OperatorSpec& op, int N);

// Row-major CSV with "re,im" pairs per entry.
std::string section_to_csv(const FiniteSection& s);

} // namespace shiftspec
