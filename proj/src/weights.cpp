#include "shiftspec/weights.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "shiftspec/errors.hpp"
#include "shiftspec/spaces.hpp"

namespace shiftspec {

namespace {

constexpr int kScanHalfWidth = 1024;      // default brute-force window
constexpr double kDivergenceRatio = 1e12; // ratio threshold of the +inf rule
constexpr int kDivergenceTrend = 64;      // trailing points checked for monotone growth
constexpr double kInf = std::numeric_limits<double>::infinity();

void require_weighted_lp(const SpaceSpec& space, const char* op) {
    if (!space.is_weighted_lp())
        throw UnsupportedNormError(std::string(op) + ": requires a weighted-lp norm family");
}

} // namespace

WeightFamily WeightFamily::constant(Domain d) { return WeightFamily(Kind::Constant, d); }

WeightFamily WeightFamily::geometric(double a, Domain d) {
    if (!(a > 0.0)) throw std::invalid_argument("geometric weight: ratio must be positive");
    WeightFamily w(Kind::Geometric, d);
    w.param_ = a;
    return w;
}

WeightFamily WeightFamily::two_sided_exp(double alpha, Domain d) {
    WeightFamily w(Kind::TwoSidedExp, d);
    w.param_ = alpha;
    return w;
}

WeightFamily WeightFamily::polynomial(double s, Domain d) {
    WeightFamily w(Kind::Polynomial, d);
    w.param_ = s;
    return w;
}

WeightFamily WeightFamily::piecewise_super_exp(Domain d) {
    return WeightFamily(Kind::PiecewiseSuperExp, d);
}

WeightFamily WeightFamily::table(int offset, std::vector<double> values, TableExtension ext,
                                 double tail_ratio, Domain d) {
    if (values.empty()) throw std::invalid_argument("table weight: empty value list");
    if (d == Domain::Unilateral && offset < 0)
        throw std::invalid_argument("table weight: negative offset on a Z+ family");
    WeightFamily w(Kind::Table, d);
    w.table_offset_ = offset;
    w.table_log_values_.reserve(values.size());
    for (double v : values) {
        if (!(v > 0.0)) throw std::invalid_argument("table weight: values must be positive");
        w.table_log_values_.push_back(std::log(v));
    }
    w.table_ext_ = ext;
    if (ext == TableExtension::GeometricTail) {
        if (!(tail_ratio > 0.0)) throw std::invalid_argument("table weight: tail ratio must be positive");
        w.table_tail_log_ratio_ = std::log(tail_ratio);
    }
    return w;
}

double WeightFamily::log_weight(int n) const {
    if (!in_domain(n)) throw std::domain_error("weight index outside the family domain");
    switch (kind_) {
    case Kind::Constant:
        return 0.0;
    case Kind::Geometric:
        return static_cast<double>(n) * std::log(param_);
    case Kind::TwoSidedExp:
        return param_ * std::abs(static_cast<double>(n));
    case Kind::Polynomial:
        return param_ * std::log1p(std::abs(static_cast<double>(n)));
    case Kind::PiecewiseSuperExp:
        return n >= 0 ? static_cast<double>(n) * static_cast<double>(n) : 0.0;
    case Kind::Table: {
        const int len = static_cast<int>(table_log_values_.size());
        const int lo = table_offset_;
        const int hi = table_offset_ + len - 1;
        if (n >= lo && n <= hi) return table_log_values_[static_cast<std::size_t>(n - lo)];
        if (table_ext_ == TableExtension::ConstantTail)
            return n < lo ? table_log_values_.front() : table_log_values_.back();
        if (n < lo) return table_log_values_.front() + static_cast<double>(n - lo) * table_tail_log_ratio_;
        return table_log_values_.back() + static_cast<double>(n - hi) * table_tail_log_ratio_;
    }
    }
    throw std::logic_error("unreachable weight kind");
}

std::string WeightFamily::describe() const {
    std::ostringstream os;
    switch (kind_) {
    case Kind::Constant: os << "constant"; break;
    case Kind::Geometric: os << "geometric(" << param_ << ")"; break;
    case Kind::TwoSidedExp: os << "two_sided_exp(" << param_ << ")"; break;
    case Kind::Polynomial: os << "polynomial(" << param_ << ")"; break;
    case Kind::PiecewiseSuperExp: os << "piecewise_super_exp"; break;
    case Kind::Table:
        os << "table[" << table_log_values_.size() << " values, "
           << (table_ext_ == TableExtension::ConstantTail ? "constant tail" : "geometric tail") << "]";
        break;
    }
    return os.str();
}

std::pair<int, int> WeightFamily::scan_window(int k) const {
    const int pad = std::abs(k) + 4;
    if (kind_ == Kind::Table) {
        const int lo = table_offset_;
        const int hi = table_offset_ + static_cast<int>(table_log_values_.size()) - 1;
        return {lo - pad, hi + pad};
    }
    return {-(kScanHalfWidth + pad), kScanHalfWidth + pad};
}

double WeightFamily::tail_log_ratio_limit(int k, bool positive_side) const {
    const double dk = static_cast<double>(k);
    switch (kind_) {
    case Kind::Constant:
    case Kind::Polynomial:
        return 0.0;
    case Kind::Geometric:
        return dk * std::log(param_);
    case Kind::TwoSidedExp:
        return positive_side ? param_ * dk : -param_ * dk;
    case Kind::PiecewiseSuperExp:
        if (!positive_side) return 0.0;
        if (k > 0) return kInf;
        if (k < 0) return -kInf;
        return 0.0;
    case Kind::Table:
        return table_ext_ == TableExtension::ConstantTail ? 0.0 : dk * table_tail_log_ratio_;
    }
    throw std::logic_error("unreachable weight kind");
}

double eval_weight(const WeightFamily& w, int n) { return std::exp(w.log_weight(n)); }

namespace {

// Closed-form log(||S^k||) for the families whose sup of ratios is known
// exactly; nullopt falls back to the windowed scan.
std::optional<double> closed_form_log_shift_norm(const WeightFamily& w, Domain d, int k) {
    const double dk = static_cast<double>(k);
    switch (w.kind()) {
    case WeightFamily::Kind::Constant:
        return 0.0;
    case WeightFamily::Kind::Geometric:
        return dk * std::log(w.param());
    case WeightFamily::Kind::TwoSidedExp:
        return d == Domain::Bilateral ? std::abs(w.param() * dk) : w.param() * dk;
    case WeightFamily::Kind::Polynomial: {
        const double s = w.param();
        const double bump = std::log1p(std::abs(dk));
        if (d == Domain::Bilateral) return std::abs(s) * bump;
        if (s >= 0.0) return k > 0 ? s * bump : 0.0;
        return k < 0 ? -s * bump : 0.0;
    }
    default:
        return std::nullopt;
    }
}

ShiftNormDetail scan_shift_norm(const WeightFamily& w, Domain d, int k) {
    ShiftNormDetail out;
    auto [lo, hi] = w.scan_window(k);
    if (d == Domain::Unilateral) lo = std::max(lo, std::max(0, -k));

    double best = -kInf;
    int best_at = 0;
    std::vector<std::pair<int, double>> trail; // ascending-n log ratios
    trail.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (int n = lo; n <= hi; ++n) {
        if (!w.in_domain(n) || !w.in_domain(n + k)) continue;
        const double lr = w.log_weight(n + k) - w.log_weight(n);
        trail.emplace_back(n, lr);
        if (lr > best) {
            best = lr;
            best_at = n;
        }
    }

    bool unbounded_tail = false;
    double tail_best = -kInf;
    const bool sides[2] = {true, d == Domain::Bilateral};
    for (int i = 0; i < 2; ++i) {
        if (!sides[i]) continue;
        const double t = w.tail_log_ratio_limit(k, i == 0);
        if (t == kInf)
            unbounded_tail = true;
        else
            tail_best = std::max(tail_best, t);
    }

    if (unbounded_tail) {
        // +inf verdict requires the trailing ratios to exceed 1e12 with a
        // monotone upward trend; anything weaker stays window-limited.
        const int m = std::min<int>(kDivergenceTrend, static_cast<int>(trail.size()));
        bool monotone = m >= 2;
        for (int i = static_cast<int>(trail.size()) - m + 1; i < static_cast<int>(trail.size()); ++i)
            if (trail[static_cast<std::size_t>(i)].second <= trail[static_cast<std::size_t>(i - 1)].second)
                monotone = false;
        const bool exceeds = !trail.empty() && trail.back().second > std::log(kDivergenceRatio);
        if (monotone && exceeds) {
            out.value = ExtReal::infinity();
            out.log_value = kInf;
            // record the last samples that still fit in a double
            for (int i = static_cast<int>(trail.size()) - 1;
                 i >= 0 && out.divergence_samples.size() < 8; --i) {
                const double lr = trail[static_cast<std::size_t>(i)].second;
                if (lr <= 700.0)
                    out.divergence_samples.emplace_back(trail[static_cast<std::size_t>(i)].first,
                                                        std::exp(lr));
            }
            std::reverse(out.divergence_samples.begin(), out.divergence_samples.end());
            return out;
        }
        out.window_limited = true;
    }

    out.log_value = std::max(best, tail_best);
    out.value = ext_exp(out.log_value);
    out.attained_at = best_at;
    return out;
}

ShiftNormDetail shift_norm_detail_impl(const WeightFamily& w, Domain d, int k) {
    if (k == 0) {
        ShiftNormDetail out;
        out.value = ExtReal(1.0);
        return out;
    }
    if (auto cf = closed_form_log_shift_norm(w, d, k)) {
        ShiftNormDetail out;
        out.log_value = *cf;
        out.value = ext_exp(*cf);
        return out;
    }
    return scan_shift_norm(w, d, k);
}

// Closed-form log spectral radius in the given direction (sign = +1 forward,
// -1 backward); +inf when the single-step norm already diverges.
double closed_form_log_radius(const WeightFamily& w, Domain d, int sign) {
    switch (w.kind()) {
    case WeightFamily::Kind::Constant:
    case WeightFamily::Kind::Polynomial:
        return 0.0;
    case WeightFamily::Kind::Geometric:
        return sign * std::log(w.param());
    case WeightFamily::Kind::TwoSidedExp:
        return d == Domain::Bilateral ? std::abs(w.param()) : sign * w.param();
    case WeightFamily::Kind::PiecewiseSuperExp:
        return sign > 0 ? kInf : 0.0;
    case WeightFamily::Kind::Table:
        return sign * w.tail_log_ratio_limit(1, true);
    }
    throw std::logic_error("unreachable weight kind");
}

} // namespace

ShiftNormDetail shift_norm_detail(const SpaceSpec& space, int k) {
    require_weighted_lp(space, "shift_norm");
    return shift_norm_detail_impl(space.weight, space.domain, k);
}

ExtReal shift_norm(const SpaceSpec& space, int k) { return shift_norm_detail(space, k).value; }

RadiusBracket spectral_radius_shift(const SpaceSpec& space, ShiftDirection dir, int horizon) {
    require_weighted_lp(space, "spectral_radius_shift");
    if (horizon < 1) throw std::invalid_argument("spectral_radius_shift: horizon must be >= 1");
    const int sign = dir == ShiftDirection::Forward ? 1 : -1;

    if (shift_norm(space, sign).is_infinite())
        return {ExtReal::infinity(), ExtReal::infinity()};

    // ||S^n||^(1/n) bounds the radius above for every n; take the min over
    // all computed n since the sequence need not be monotone.
    double gelfand = kInf;
    for (int n = 1; n <= horizon; ++n) {
        const auto d = shift_norm_detail(space, sign * n);
        if (d.value.is_infinite()) return {ExtReal::infinity(), ExtReal::infinity()};
        gelfand = std::min(gelfand, d.log_value / static_cast<double>(n));
    }

    const double exact = closed_form_log_radius(space.weight, space.domain, sign);
    const double upper = std::min(gelfand, exact);
    return {ext_exp(std::min(exact, upper)), ext_exp(upper)};
}

BoundednessReport boundedness(const SpaceSpec& space, ShiftDirection dir) {
    require_weighted_lp(space, "boundedness");
    const int k = dir == ShiftDirection::Forward ? 1 : -1;
    const auto d = shift_norm_detail(space, k);
    BoundednessReport r;
    r.bounded = d.value.is_finite();
    if (r.bounded) {
        r.sup_ratio = d.value.value();
        r.attained_at = d.attained_at;
        r.window_limited = d.window_limited;
    } else {
        r.divergence = d.divergence_samples;
    }
    return r;
}

} // namespace shiftspec
