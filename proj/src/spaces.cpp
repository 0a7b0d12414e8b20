#include "shiftspec/spaces.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "shiftspec/errors.hpp"

namespace shiftspec {

OrliczFunction OrliczFunction::power(double p) {
    if (!(p >= 1.0)) throw std::invalid_argument("orlicz power: exponent must be >= 1");
    OrliczFunction k;
    k.is_power_ = true;
    k.p_ = p;
    return k;
}

OrliczFunction OrliczFunction::table(std::vector<double> xs, std::vector<double> ys) {
    if (xs.size() != ys.size() || xs.size() < 2)
        throw std::invalid_argument("orlicz table: need matching lists with >= 2 knots");
    if (xs.front() != 0.0 || ys.front() != 0.0)
        throw std::invalid_argument("orlicz table: must start at K(0) = 0");
    for (std::size_t i = 1; i < xs.size(); ++i) {
        if (!(xs[i] > xs[i - 1])) throw std::invalid_argument("orlicz table: x knots must increase");
        if (ys[i] < ys[i - 1]) throw std::invalid_argument("orlicz table: K must be nondecreasing");
    }
    if (!(ys.back() > 0.0)) throw std::invalid_argument("orlicz table: K must be positive for x > 0");

    OrliczFunction k;
    k.is_power_ = false;
    k.xs_ = std::move(xs);
    k.ys_ = std::move(ys);

    // discrete convexity check on a 2^9-point grid over [0, xmax]
    const int grid = 512;
    const double xmax = k.xs_.back();
    double prev_slope = -1.0;
    for (int i = 0; i + 1 < grid; ++i) {
        const double x0 = xmax * static_cast<double>(i) / (grid - 1);
        const double x1 = xmax * static_cast<double>(i + 1) / (grid - 1);
        const double slope = (k(x1) - k(x0)) / (x1 - x0);
        if (slope < prev_slope - 1e-12 * std::max(1.0, std::abs(prev_slope)))
            throw std::invalid_argument("orlicz table: sampled slopes decrease (not convex)");
        prev_slope = slope;
    }
    return k;
}

double OrliczFunction::operator()(double x) const {
    if (x < 0.0) throw std::domain_error("orlicz function: negative argument");
    if (is_power_) return std::pow(x, p_);
    if (x >= xs_.back()) {
        const std::size_t n = xs_.size();
        const double slope = (ys_[n - 1] - ys_[n - 2]) / (xs_[n - 1] - xs_[n - 2]);
        return ys_.back() + slope * (x - xs_.back());
    }
    const auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
    const std::size_t i = static_cast<std::size_t>(it - xs_.begin());
    if (i == 0) return ys_.front();
    const double t = (x - xs_[i - 1]) / (xs_[i] - xs_[i - 1]);
    return ys_[i - 1] + t * (ys_[i] - ys_[i - 1]);
}

ExponentRule ExponentRule::constant(double q) {
    if (!(q >= 1.0)) throw std::invalid_argument("exponent rule: q must be >= 1");
    ExponentRule r;
    r.tail_ = q;
    return r;
}

ExponentRule ExponentRule::table(int offset, std::vector<double> values, double tail) {
    if (!(tail >= 1.0)) throw std::invalid_argument("exponent rule: tail must be >= 1");
    for (double q : values)
        if (!(q >= 1.0)) throw std::invalid_argument("exponent rule: q(n) must be >= 1");
    ExponentRule r;
    r.offset_ = offset;
    r.values_ = std::move(values);
    r.tail_ = tail;
    return r;
}

double ExponentRule::operator()(int n) const {
    if (values_.empty()) return tail_;
    const int i = n - offset_;
    if (i < 0 || i >= static_cast<int>(values_.size())) return tail_;
    return values_[static_cast<std::size_t>(i)];
}

SpaceSpec SpaceSpec::weighted_lp(Domain d, double p, WeightFamily w) {
    if (!(p >= 1.0)) throw std::invalid_argument("weighted_lp: p must be >= 1");
    if (w.domain() != d) throw std::invalid_argument("weighted_lp: weight domain mismatch");
    SpaceSpec s;
    s.domain = d;
    s.family = NormFamilyKind::WeightedLp;
    s.p = p;
    s.weight = std::move(w);
    return s;
}

SpaceSpec SpaceSpec::orlicz_space(Domain d, OrliczFunction K, WeightFamily w) {
    if (w.domain() != d) throw std::invalid_argument("orlicz_space: weight domain mismatch");
    SpaceSpec s;
    s.domain = d;
    s.family = NormFamilyKind::Orlicz;
    s.weight = std::move(w);
    s.orlicz = std::move(K);
    return s;
}

SpaceSpec SpaceSpec::variable_exponent(Domain d, ExponentRule q) {
    SpaceSpec s;
    s.domain = d;
    s.family = NormFamilyKind::VariableExponent;
    s.exponent = std::move(q);
    return s;
}

namespace {

void require_support_in_domain(const SpaceSpec& space, const FiniteSeq& f, const char* op) {
    if (!f.is_zero() && space.domain == Domain::Unilateral && f.first() < 0)
        throw std::domain_error(std::string(op) + ": support extends below 0 on a Z+ space");
}

double weighted_lp_norm(const SpaceSpec& space, const FiniteSeq& f) {
    // scaled accumulation keeps huge weights (e.g. exp(n^2)) in range
    double max_term = 0.0;
    for (int n = f.first(); n <= f.last(); ++n) {
        const double a = std::abs(f.coeff(n));
        if (a == 0.0) continue;
        max_term = std::max(max_term, std::exp(std::log(a) + space.weight.log_weight(n)));
    }
    if (max_term == 0.0) return 0.0;
    double acc = 0.0;
    for (int n = f.first(); n <= f.last(); ++n) {
        const double a = std::abs(f.coeff(n));
        if (a == 0.0) continue;
        const double term = std::exp(std::log(a) + space.weight.log_weight(n)) / max_term;
        acc += std::pow(term, space.p);
    }
    return max_term * std::pow(acc, 1.0 / space.p);
}

// Modular whose unit level set defines the Luxemburg norm; strictly
// decreasing in t on the support of f.
double modular(const SpaceSpec& space, const FiniteSeq& f, double t) {
    double acc = 0.0;
    for (int n = f.first(); n <= f.last(); ++n) {
        const double a = std::abs(f.coeff(n));
        if (a == 0.0) continue;
        if (space.family == NormFamilyKind::Orlicz)
            acc += (*space.orlicz)(a / t) * std::exp(space.weight.log_weight(n));
        else
            acc += std::pow(a / t, (*space.exponent)(n));
    }
    return acc;
}

double luxemburg_norm(const SpaceSpec& space, const FiniteSeq& f) {
    double sup_w = 1.0;
    if (space.family == NormFamilyKind::Orlicz)
        for (int n = f.first(); n <= f.last(); ++n)
            if (std::abs(f.coeff(n)) > 0.0)
                sup_w = std::max(sup_w, std::exp(space.weight.log_weight(n)));

    double t_hi = 0.0;
    for (int n = f.first(); n <= f.last(); ++n) {
        const double a = std::abs(f.coeff(n));
        if (a == 0.0) continue;
        double w = 1.0;
        if (space.family == NormFamilyKind::Orlicz)
            w = std::max(1.0, std::exp(space.weight.log_weight(n)));
        t_hi += a * w;
    }
    double t_lo = f.max_abs() * 1e-6 / (1.0 + sup_w);

    // both ends must straddle modular value 1; expand up to 5 times if not
    int expansions = 0;
    while (modular(space, f, t_hi) > 1.0 && expansions < 5) {
        t_hi *= 10.0;
        ++expansions;
    }
    expansions = 0;
    while (modular(space, f, t_lo) < 1.0 && expansions < 5) {
        t_lo /= 10.0;
        ++expansions;
    }
    if (modular(space, f, t_hi) > 1.0 || modular(space, f, t_lo) < 1.0)
        throw std::runtime_error("luxemburg norm: failed to bracket the modular");

    while (t_hi - t_lo > 1e-12 * t_hi) {
        const double mid = 0.5 * (t_lo + t_hi);
        if (modular(space, f, mid) <= 1.0)
            t_hi = mid;
        else
            t_lo = mid;
    }
    return t_hi;
}

} // namespace

double space_norm(const SpaceSpec& space, const FiniteSeq& f) {
    require_support_in_domain(space, f, "space_norm");
    if (f.is_zero()) return 0.0;
    if (space.family == NormFamilyKind::WeightedLp) return weighted_lp_norm(space, f);
    return luxemburg_norm(space, f);
}

FiniteSeq scale_seq(const FiniteSeq& f, Complex r) {
    if (r == Complex(0.0, 0.0)) throw std::invalid_argument("scale_seq: r must be nonzero");
    if (f.is_zero()) return f;
    std::vector<Complex> out;
    out.reserve(f.support_size());
    // r^first by square-and-multiply, then one multiply per step
    Complex p(1.0, 0.0);
    int e = f.first();
    const bool invert = e < 0;
    unsigned long long m = invert ? static_cast<unsigned long long>(-(static_cast<long long>(e)))
                                  : static_cast<unsigned long long>(e);
    Complex base = r;
    while (m > 0) {
        if (m & 1ull) p *= base;
        base *= base;
        m >>= 1;
    }
    if (invert) p = Complex(1.0, 0.0) / p;
    for (int n = f.first(); n <= f.last(); ++n) {
        out.push_back(f.coeff(n) * p);
        p *= r;
    }
    return FiniteSeq(f.first(), std::move(out));
}

} // namespace shiftspec
