#pragma once

#include <string>
#include <utility>
#include <vector>

#include "shiftspec/ext_real.hpp"

namespace shiftspec {

struct SpaceSpec;

enum class Domain { Bilateral, Unilateral };

enum class TableExtension { ConstantTail, GeometricTail };

// Rule producing a positive weight omega(n) on Z or Z+. Evaluation is pure;
// families carry enough closed-form structure to reason about their tails.
class WeightFamily {
public:
    enum class Kind { Constant, Geometric, TwoSidedExp, Polynomial, PiecewiseSuperExp, Table };

    static WeightFamily constant(Domain d = Domain::Bilateral);
    // omega(n) = a^n, a > 0
    static WeightFamily geometric(double a, Domain d = Domain::Bilateral);
    // omega(n) = exp(alpha * |n|)
    static WeightFamily two_sided_exp(double alpha, Domain d = Domain::Bilateral);
    // omega(n) = (1 + |n|)^s
    static WeightFamily polynomial(double s, Domain d = Domain::Bilateral);
    // omega(n) = exp(n^2) for n >= 0, 1 for n < 0
    static WeightFamily piecewise_super_exp(Domain d = Domain::Bilateral);
    // finite window of positive values starting at `offset`, extended by the
    // tail rule outside the window
    static WeightFamily table(int offset, std::vector<double> values, TableExtension ext,
                              double tail_ratio = 1.0, Domain d = Domain::Bilateral);

    Kind kind() const { return kind_; }
    Domain domain() const { return domain_; }
    double param() const { return param_; }

    bool in_domain(int n) const { return domain_ == Domain::Bilateral || n >= 0; }

    // log(omega(n)); throws std::domain_error outside the domain.
    double log_weight(int n) const;

    std::string describe() const;

    // Window the sup-of-ratios scan must cover so that only pure-tail pairs
    // remain outside (exact there by the tail rule).
    std::pair<int, int> scan_window(int k) const;

    // limsup as n -> +inf (and n -> -inf, bilateral only) of
    // log omega(n+k) - log omega(n); +inf marks an unbounded tail.
    double tail_log_ratio_limit(int k, bool positive_side) const;

private:
    WeightFamily(Kind k, Domain d) : kind_(k), domain_(d) {}

    Kind kind_;
    Domain domain_;
    double param_ = 0.0; // a, alpha or s depending on kind
    int table_offset_ = 0;
    std::vector<double> table_log_values_;
    TableExtension table_ext_ = TableExtension::ConstantTail;
    double table_tail_log_ratio_ = 0.0;
};

double eval_weight(const WeightFamily& w, int n);

enum class ShiftDirection { Forward, Backward };

struct ShiftNormDetail {
    ExtReal value;
    double log_value = 0.0;      // meaningful when finite
    int attained_at = 0;         // window argmax of the ratio
    bool window_limited = false; // sup could only be bounded below by the window
    // trailing ratio samples (n, omega(n+k)/omega(n)) recorded when the
    // divergence rule fires
    std::vector<std::pair<int, double>> divergence_samples;
};

// ||S^k|| = sup_n omega(n+k)/omega(n) on a weighted-lp space.
ExtReal shift_norm(const SpaceSpec& space, int k);
ShiftNormDetail shift_norm_detail(const SpaceSpec& space, int k);

struct RadiusBracket {
    ExtReal lower;
    ExtReal upper;
};

// Bracket for the spectral radius of the shift power sequence in the given
// direction. Collapses to the exact value for families with closed-form
// tails; the upper bound is min_n ||S^n||^(1/n) over n <= horizon.
RadiusBracket spectral_radius_shift(const SpaceSpec& space, ShiftDirection dir, int horizon);

struct BoundednessReport {
    bool bounded = false;
    double sup_ratio = 0.0; // attained/approached sup when bounded
    int attained_at = 0;
    bool window_limited = false;
    std::vector<std::pair<int, double>> divergence; // ratio subsequence when unbounded
};

BoundednessReport boundedness(const SpaceSpec& space, ShiftDirection dir);

} // namespace shiftspec
