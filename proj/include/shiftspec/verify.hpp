#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "shiftspec/operators.hpp"
#include "shiftspec/spectra.hpp"

namespace shiftspec {

enum class VerdictKind { InsideWitness, BlowupWitness, OutsideBound, Inconclusive };

std::string verdict_name(VerdictKind v);

// Machine-checkable verdict carrying the numeric evidence that produced it.
struct Certificate {
    VerdictKind verdict = VerdictKind::Inconclusive;
    Complex lambda;
    std::string context;

    // InsideWitness: N -> relative residual of the approximate eigenvector.
    std::vector<std::pair<int, double>> residual_table;

    // BlowupWitness: N -> ||(A_N - lambda)^-1 e0|| (inf for singular sections).
    std::vector<std::pair<int, double>> growth_table;
    double growth_factor = 0.0; // per-unit-N geometric factor across the table

    // OutsideBound: sum_k |c_k| ||S^k|| for an explicit inverse kernel c.
    double bound = 0.0;
    double tail = 0.0;              // certified tail of the bound
    double identity_residual = 0.0; // shift-norm weighted residual of c * (phi - lambda e0) - e0
    double margin = 0.0;            // min |symbol - lambda| over the sampled circles

    std::string reason; // Inconclusive only

    std::map<std::string, double> params; // grids, radii, N values, seeds
};

// Relative residual ||op f_N - mu f_N|| / ||f_N|| for the truncated
// geometric vector f_N(n) = z^{-n}, mu the symbol value at z. Window
// [-N, N] on Z, [0, N] on Z+. Requires weighted l2.
double approx_eigen_residual(const OperatorSpec& op, Complex z, int N);

// ||(A_N - lambda)^-1 e_0|| per section size; +inf entries mark singular
// sections. Shift sections solve by substitution, everything else by LU.
std::vector<std::pair<int, double>> blowup_witness(const OperatorSpec& op, Complex lambda,
                                                   const std::vector<int>& Ns);

// Constructive resolvent certificate: Laurent coefficients of
// 1/(symbol - lambda) from discrete circle transforms at the two radii
// (nonnegative powers on C_{r_plus}, negative on C_{r_minus}), validated by
// convolving back against phi - lambda e0 in the shift-norm weighted l1.
Certificate outside_certificate(const FiniteSeq& phi, Complex lambda, const SpaceSpec& space,
                                double r_minus, double r_plus, int m);

// Resolvent bound from the operator power series in 1/lambda; Inconclusive
// when the term ratio does not stay below 1.
Certificate neumann_outside_certificate(const OperatorSpec& op, Complex lambda, int horizon = 64,
                                        double tail_tol = 1e-6);

struct SymbolBoundRadius {
    double r = 0.0;
    double sup = 0.0;
    double slack = 0.0;
};

struct SymbolBoundReport {
    ExtReal upper;               // sum_k |phi(k)| ||S^k||
    std::optional<double> lower; // largest singular value of the N-section
    double max_circle_sup = 0.0;
    std::vector<SymbolBoundRadius> per_radius;
    bool upper_ok = false;                 // every circle sup <= upper + 1e-9
    bool conjugation_case = false;         // p = 2 with constant/geometric weight
    std::optional<double> lower_gap;       // |lower - max sup| in the conjugation case
    bool lower_ok = true;                  // gap <= 0.05 when applicable
};

// Checks sup |symbol| on each circle against the operator-norm bracket.
SymbolBoundReport check_symbol_bound(const FiniteSeq& phi, const SpaceSpec& space,
                                     const std::vector<double>& radii, int section_N = 256,
                                     int grid_m = 4096);

enum class ScalingKind { Bilateral, Unilateral };

struct ScalingCheck {
    double abs_dev = 0.0;
    double rel_dev = 0.0;
};

// Deviation between the two evaluation orders of the r-scaling identity for
// convolution (bilateral) or Toeplitz action (unilateral).
ScalingCheck check_scaling_identity(ScalingKind kind, const FiniteSeq& phi, const FiniteSeq& f,
                                    double r);

struct VerifyParams {
    int residual_N = 200;
    std::vector<int> blowup_Ns = {20, 30, 40, 50, 60};
    int transform_m = 256;
    int neumann_horizon = 64;
    double tol = 1e-2;
    double tail_tol = 1e-6;
    double blowup_trend_min = 1.02; // per-unit-N factor that counts as growth
};

// Chooses the witness route for a point: outside certificates when the
// predicted region excludes lambda, approximate eigenvectors on boundary
// circles, finite-section blow-up in the interior. Never returns a wrong
// verdict; everything it cannot settle is Inconclusive.
Certificate verify_point(const OperatorSpec& op, Complex lambda, const VerifyParams& params);

} // namespace shiftspec
