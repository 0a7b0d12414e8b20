#pragma once

#include <optional>
#include <vector>

#include "shiftspec/finite_seq.hpp"
#include "shiftspec/weights.hpp"

namespace shiftspec {

// Convex nondecreasing K with K(0) = 0 and K(x) > 0 for x > 0, either a
// power rule or a piecewise-linear table on [0, xmax] extended by its last
// slope. Table convexity is validated at construction on a 512-point grid.
class OrliczFunction {
public:
    static OrliczFunction power(double p);
    static OrliczFunction table(std::vector<double> xs, std::vector<double> ys);

    double operator()(double x) const;
    bool is_power() const { return is_power_; }
    double power_exponent() const { return p_; }

private:
    OrliczFunction() = default;
    bool is_power_ = true;
    double p_ = 1.0;
    std::vector<double> xs_, ys_;
};

// Exponent rule q(n) >= 1: constant, or a table with a constant tail value.
class ExponentRule {
public:
    static ExponentRule constant(double q);
    static ExponentRule table(int offset, std::vector<double> values, double tail);

    double operator()(int n) const;
    bool is_constant() const { return values_.empty(); }
    double constant_value() const { return tail_; }

private:
    ExponentRule() = default;
    int offset_ = 0;
    std::vector<double> values_;
    double tail_ = 1.0;
};

enum class NormFamilyKind { WeightedLp, Orlicz, VariableExponent };

struct SpaceSpec {
    Domain domain = Domain::Bilateral;
    NormFamilyKind family = NormFamilyKind::WeightedLp;

    // WeightedLp
    double p = 2.0;
    WeightFamily weight = WeightFamily::constant();

    // Orlicz (Luxemburg norm with modular sum K(|x(n)|/t) * weight(n))
    std::optional<OrliczFunction> orlicz;

    // Variable exponent
    std::optional<ExponentRule> exponent;

    static SpaceSpec weighted_lp(Domain d, double p, WeightFamily w);
    static SpaceSpec orlicz_space(Domain d, OrliczFunction K, WeightFamily w);
    static SpaceSpec variable_exponent(Domain d, ExponentRule q);

    bool in_domain(int n) const { return domain == Domain::Bilateral || n >= 0; }
    bool is_weighted_lp() const { return family == NormFamilyKind::WeightedLp; }
    bool is_hilbert_lp() const { return is_weighted_lp() && p == 2.0; }
};

// Norm of a finitely supported sequence in the given space. Luxemburg norms
// (Orlicz, variable exponent) are computed by bisection on the modular.
double space_norm(const SpaceSpec& space, const FiniteSeq& f);

// (f)_r: n -> f(n) * r^n, r != 0.
FiniteSeq scale_seq(const FiniteSeq& f, Complex r);

} // namespace shiftspec
