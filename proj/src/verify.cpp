#include "shiftspec/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "shiftspec/errors.hpp"
#include "shiftspec/linalg.hpp"

namespace shiftspec {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
const double kTwoPi = 2.0 * 3.14159265358979323846;

double shift_norm_factor(const SpaceSpec& space, int k) {
    const ExtReal v = shift_norm(space, k);
    return v.is_finite() ? v.value() : kInf;
}

} // namespace

std::string verdict_name(VerdictKind v) {
    switch (v) {
    case VerdictKind::InsideWitness: return "inside_witness";
    case VerdictKind::BlowupWitness: return "blowup_witness";
    case VerdictKind::OutsideBound: return "outside_bound";
    case VerdictKind::Inconclusive: return "inconclusive";
    }
    return "?";
}

double approx_eigen_residual(const OperatorSpec& op, Complex z, int N) {
    if (!op.space.is_hilbert_lp())
        throw UnsupportedNormError("approx_eigen_residual: requires weighted l2");
    if (N < 1) throw std::invalid_argument("approx_eigen_residual: N must be >= 1");
    if (z == Complex(0.0, 0.0)) throw std::invalid_argument("approx_eigen_residual: z must be nonzero");

    const int lo = op.space.domain == Domain::Bilateral ? -N : 0;
    const int hi = N;
    const double log_r = std::log(std::abs(z));
    const double arg = std::arg(z);
    const auto& w = op.space.weight;

    // scale so the largest weighted entry is 1; the residual ratio is
    // invariant and exp(n^2)-type weights stay in range
    double hmax = -kInf;
    for (int n = lo; n <= hi; ++n)
        hmax = std::max(hmax, -static_cast<double>(n) * log_r + w.log_weight(n));

    std::vector<Complex> coeffs;
    coeffs.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (int n = lo; n <= hi; ++n) {
        const double mag = std::exp(-static_cast<double>(n) * log_r - hmax);
        const double phase = -static_cast<double>(n) * arg;
        coeffs.emplace_back(mag * std::cos(phase), mag * std::sin(phase));
    }
    const FiniteSeq f(lo, std::move(coeffs));

    const Complex mu = eval_symbol(LaurentSymbol(op.kernel()), z);
    const FiniteSeq g = apply_operator(op, f) - f.scaled(mu);
    return space_norm(op.space, g) / space_norm(op.space, f);
}

namespace {

// (A - lambda) x = e0 for a pure shift-power section: single subdiagonal at
// offset k plus the -lambda diagonal, solved by substitution.
std::optional<std::vector<Complex>> shift_section_solve(const FiniteSection& s, int k, Complex lambda,
                                                        std::size_t rhs_index, double pivot_tol) {
    const std::size_t n = static_cast<std::size_t>(s.dim());
    if (k == 0) {
        // diagonal case: entries (1 - lambda)
        std::vector<Complex> x(n, Complex(0.0, 0.0));
        const Complex d = Complex(1.0, 0.0) - lambda;
        if (std::abs(d) < pivot_tol) return std::nullopt;
        x[rhs_index] = Complex(1.0, 0.0) / d;
        return x;
    }
    if (std::abs(lambda) < pivot_tol) return std::nullopt;
    std::vector<Complex> x(n, Complex(0.0, 0.0));
    if (k > 0) {
        for (std::size_t i = 0; i < n; ++i) {
            Complex b = i == rhs_index ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
            if (i >= static_cast<std::size_t>(k))
                b -= s.matrix.at(i, i - static_cast<std::size_t>(k)) * x[i - static_cast<std::size_t>(k)];
            x[i] = -b / lambda;
        }
    } else {
        const std::size_t m = static_cast<std::size_t>(-k);
        for (std::size_t ii = n; ii-- > 0;) {
            Complex b = ii == rhs_index ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
            if (ii + m < n) b -= s.matrix.at(ii, ii + m) * x[ii + m];
            x[ii] = -b / lambda;
        }
    }
    return x;
}

} // namespace

std::vector<std::pair<int, double>> blowup_witness(const OperatorSpec& op, Complex lambda,
                                                   const std::vector<int>& Ns) {
    if (!op.space.is_hilbert_lp()) throw UnsupportedNormError("blowup_witness: requires weighted l2");
    std::vector<std::pair<int, double>> table;
    table.reserve(Ns.size());
    for (int N : Ns) {
        FiniteSection s = finite_section(op, N);
        const std::size_t rhs_index = static_cast<std::size_t>(s.row_of(0));
        std::optional<std::vector<Complex>> x;
        if (op.kind == OperatorKind::ShiftPower) {
            x = shift_section_solve(s, op.power, lambda, rhs_index, 1e-14);
        } else {
            ComplexMatrix m = s.matrix;
            for (std::size_t i = 0; i < m.dim(); ++i) m.at(i, i) -= lambda;
            std::vector<Complex> rhs(m.dim(), Complex(0.0, 0.0));
            rhs[rhs_index] = Complex(1.0, 0.0);
            x = lu_solve(m, rhs, 1e-14);
        }
        table.emplace_back(N, x ? vec_norm(*x) : kInf);
    }
    return table;
}

Certificate outside_certificate(const FiniteSeq& phi, Complex lambda, const SpaceSpec& space,
                                double r_minus, double r_plus, int m) {
    if (space.domain != Domain::Bilateral)
        throw std::invalid_argument("outside_certificate: bilateral space required");
    if (!(r_minus > 0.0) || r_minus > r_plus)
        throw std::invalid_argument("outside_certificate: need 0 < r_minus <= r_plus");
    if (m < 256 || (m & (m - 1)) != 0)
        throw std::invalid_argument("outside_certificate: m must be a power of two >= 256");

    const SpectralRegion base = predicted_sigma_shift(space);
    const double lo_ok = base.rmin.raw();
    const double hi_ok = base.rmax.raw();
    if (r_minus < lo_ok - 1e-12 || r_plus > hi_ok + 1e-12)
        throw std::invalid_argument("outside_certificate: radii outside the predicted annulus");

    Certificate cert;
    cert.lambda = lambda;
    cert.context = "multiplier " + std::to_string(phi.first()) + ".." + std::to_string(phi.last()) +
                   " on " + space.weight.describe();
    cert.params["m"] = static_cast<double>(m);
    cert.params["r_minus"] = r_minus;
    cert.params["r_plus"] = r_plus;

    const LaurentSymbol sym(phi);

    // (i) margin on r_minus, r_plus and 8 intermediate circles
    double delta = kInf;
    double sup_abs = 0.0;
    for (int ci = 0; ci < 10; ++ci) {
        const double r = r_minus + (r_plus - r_minus) * static_cast<double>(ci) / 9.0;
        for (int j = 0; j < m; ++j) {
            const double t = kTwoPi * static_cast<double>(j) / static_cast<double>(m);
            const Complex v = eval_symbol(sym, Complex(r * std::cos(t), r * std::sin(t)));
            delta = std::min(delta, std::abs(v - lambda));
            sup_abs = std::max(sup_abs, std::abs(v));
        }
    }
    cert.margin = delta;
    cert.params["delta"] = delta;
    if (!(delta >= 1e-3 * sup_abs) || delta == 0.0) {
        cert.verdict = VerdictKind::Inconclusive;
        cert.reason = "symbol approaches lambda on the sampled circles";
        return cert;
    }

    // (ii) Laurent coefficients of 1/(symbol - lambda): k >= 0 from the
    // outer circle, k < 0 from the inner one
    const int K = m / 2 - 1;
    std::vector<Complex> outer(static_cast<std::size_t>(m)), inner(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) {
        const double t = kTwoPi * static_cast<double>(j) / static_cast<double>(m);
        const Complex zp(r_plus * std::cos(t), r_plus * std::sin(t));
        const Complex zm(r_minus * std::cos(t), r_minus * std::sin(t));
        outer[static_cast<std::size_t>(j)] = Complex(1.0, 0.0) / (eval_symbol(sym, zp) - lambda);
        inner[static_cast<std::size_t>(j)] = Complex(1.0, 0.0) / (eval_symbol(sym, zm) - lambda);
    }
    fft_radix2(outer, false); // outer[t] = sum_j g_j e^{-2pi i j t / m}
    fft_radix2(inner, false);

    std::vector<Complex> c(static_cast<std::size_t>(2 * K + 1));
    for (int k = 0; k <= K; ++k)
        c[static_cast<std::size_t>(K + k)] =
            outer[static_cast<std::size_t>(k)] / static_cast<double>(m) / std::pow(r_plus, k);
    for (int k = 1; k <= K; ++k)
        c[static_cast<std::size_t>(K - k)] = inner[static_cast<std::size_t>(m - k)] /
                                             static_cast<double>(m) * std::pow(r_minus, k);
    const FiniteSeq inverse_kernel(-K, std::move(c));

    // (iii) validate the convolution inverse in the shift-norm weighted l1;
    // this is what actually bounds ||M_c (M_phi - lambda) - I||
    const FiniteSeq shifted = phi - FiniteSeq::unit(0, lambda);
    const FiniteSeq residual_seq = convolve(inverse_kernel, shifted) - FiniteSeq::unit(0);
    double identity_residual = 0.0;
    for (int n = residual_seq.first(); n <= residual_seq.last() && !residual_seq.is_zero(); ++n) {
        const double a = std::abs(residual_seq.coeff(n));
        if (a == 0.0) continue;
        identity_residual += a * shift_norm_factor(space, n);
    }
    cert.identity_residual = identity_residual;
    cert.params["K"] = static_cast<double>(K);
    if (!(identity_residual <= 1e-8)) {
        cert.verdict = VerdictKind::Inconclusive;
        cert.reason = "inverse kernel fails the convolution identity";
        return cert;
    }

    // (iv) weighted bound plus a geometric tail from the observed decay
    std::vector<double> wplus, wminus;
    double bound = 0.0;
    for (int k = -K; k <= K; ++k) {
        const double a = std::abs(inverse_kernel.coeff(k));
        const double term = a == 0.0 ? 0.0 : a * shift_norm_factor(space, k);
        bound += term;
        if (k >= 0) wplus.push_back(term);
        if (k <= 0) wminus.push_back(term);
    }
    std::reverse(wminus.begin(), wminus.end()); // index by |k|

    // once the weighted terms sink to the transform's noise floor the edge
    // value itself bounds the truncated mass; otherwise fit a ratio
    auto tail_of = [&bound](const std::vector<double>& wseq) -> double {
        const std::size_t n = wseq.size();
        if (n < 8) return 0.0;
        const double edge = wseq.back();
        if (edge <= 1e-13 * std::max(1.0, bound)) return edge;
        double q = 0.0;
        for (std::size_t i = n - 8; i + 1 < n; ++i)
            if (wseq[i] > 0.0) q = std::max(q, wseq[i + 1] / wseq[i]);
        if (!(q < 1.0)) return kInf;
        return edge * q / (1.0 - q);
    };
    const double tail = tail_of(wplus) + tail_of(wminus);
    cert.bound = bound + (std::isfinite(tail) ? tail : 0.0);
    cert.tail = tail;
    if (!std::isfinite(bound) || !std::isfinite(tail)) {
        cert.verdict = VerdictKind::Inconclusive;
        cert.reason = "weighted coefficient series does not certify a finite bound";
        return cert;
    }

    cert.verdict = VerdictKind::OutsideBound;
    return cert;
}

namespace {

// n-th power norm bound used by the series certificate. Shift powers use
// the exact ||S^{nk}||; one-sided Toeplitz kernels and multipliers use the
// convolution power, two-sided Toeplitz kernels the single-step bound.
class PowerNormBound {
public:
    explicit PowerNormBound(const OperatorSpec& op) : op_(op), kernel_(op.kernel()) {
        one_sided_ = kernel_.is_zero() || kernel_.first() >= 0 || kernel_.last() <= 0;
        use_convolution_ = op.kind == OperatorKind::Multiplier ||
                           (op.kind == OperatorKind::Toeplitz && one_sided_) ||
                           op.kind == OperatorKind::ShiftPower;
        power_ = FiniteSeq::unit(0);
        if (!use_convolution_) {
            single_ = 0.0;
            for (int k = kernel_.first(); k <= kernel_.last(); ++k)
                single_ += std::abs(kernel_.coeff(k)) * shift_norm_factor(op.space, k);
        }
    }

    // bound for ||op^n||, called with n = 1, 2, ... in order
    double next() {
        ++n_;
        if (!use_convolution_) return std::pow(single_, n_);
        power_ = convolve(power_, kernel_);
        double b = 0.0;
        for (int k = power_.first(); k <= power_.last() && !power_.is_zero(); ++k) {
            const double a = std::abs(power_.coeff(k));
            if (a == 0.0) continue;
            b += a * shift_norm_factor(op_.space, k);
        }
        return b;
    }

private:
    const OperatorSpec& op_;
    FiniteSeq kernel_;
    FiniteSeq power_;
    bool one_sided_ = true;
    bool use_convolution_ = true;
    double single_ = 0.0;
    int n_ = 0;
};

} // namespace

Certificate neumann_outside_certificate(const OperatorSpec& op, Complex lambda, int horizon,
                                        double tail_tol) {
    if (horizon < 4) throw std::invalid_argument("neumann_outside_certificate: horizon too small");
    Certificate cert;
    cert.lambda = lambda;
    cert.context = op.describe() + " on " + op.space.weight.describe();
    cert.params["horizon"] = static_cast<double>(horizon);
    cert.params["tail_tol"] = tail_tol;

    const double al = std::abs(lambda);
    if (al == 0.0) {
        cert.verdict = VerdictKind::Inconclusive;
        cert.reason = "series in 1/lambda undefined at lambda = 0";
        return cert;
    }

    PowerNormBound powers(op);
    double bound = 1.0 / al;
    double last_term = bound;
    double ratio = 0.0;
    for (int n = 1; n <= horizon; ++n) {
        const double term = powers.next() / std::pow(al, n + 1);
        if (!std::isfinite(term)) {
            cert.verdict = VerdictKind::Inconclusive;
            cert.reason = "power norm bound diverges";
            return cert;
        }
        bound += term;
        if (n > horizon - 8 && last_term > 0.0) ratio = std::max(ratio, term / last_term);
        last_term = term;
    }
    cert.params["final_term"] = last_term;
    if (!(ratio < 1.0)) {
        cert.verdict = VerdictKind::Inconclusive;
        cert.reason = "term ratio does not stay below 1";
        return cert;
    }
    const double tail = last_term * ratio / (1.0 - ratio);
    cert.tail = tail;
    cert.bound = bound + tail;
    if (!(tail < tail_tol)) {
        cert.verdict = VerdictKind::Inconclusive;
        cert.reason = "tail above the declared tolerance";
        return cert;
    }
    cert.verdict = VerdictKind::OutsideBound;
    return cert;
}

SymbolBoundReport check_symbol_bound(const FiniteSeq& phi, const SpaceSpec& space,
                                     const std::vector<double>& radii, int section_N, int grid_m) {
    if (space.domain != Domain::Bilateral)
        throw std::invalid_argument("check_symbol_bound: bilateral space required");
    const SpectralRegion base = predicted_sigma_shift(space);
    for (double r : radii)
        if (r < base.rmin.raw() - 1e-12 || r > base.rmax.raw() + 1e-12)
            throw std::invalid_argument("check_symbol_bound: radius outside the predicted annulus");

    SymbolBoundReport rep;
    const OperatorSpec op = OperatorSpec::multiplier(phi, space);
    const NormBracket bracket = operator_norm_bracket(op, section_N);
    rep.upper = bracket.upper;
    rep.lower = bracket.lower;

    const LaurentSymbol sym(phi);
    rep.upper_ok = true;
    for (double r : radii) {
        const CircleSup s = sup_on_circle(sym, r, grid_m);
        rep.per_radius.push_back({r, s.value, s.slack});
        rep.max_circle_sup = std::max(rep.max_circle_sup, s.value);
        if (bracket.upper.is_finite() && s.value > bracket.upper.value() + 1e-9) rep.upper_ok = false;
    }

    const auto wk = space.weight.kind();
    rep.conjugation_case = space.is_hilbert_lp() && (wk == WeightFamily::Kind::Constant ||
                                                     wk == WeightFamily::Kind::Geometric);
    if (rep.conjugation_case && rep.lower) {
        rep.lower_gap = std::abs(*rep.lower - rep.max_circle_sup);
        rep.lower_ok = *rep.lower_gap <= 0.05;
    }
    return rep;
}

ScalingCheck check_scaling_identity(ScalingKind kind, const FiniteSeq& phi, const FiniteSeq& f,
                                    double r) {
    if (!(r > 0.0)) throw std::invalid_argument("check_scaling_identity: r must be positive");
    const Complex rc(r, 0.0);
    FiniteSeq lhs, rhs;
    if (kind == ScalingKind::Bilateral) {
        lhs = scale_seq(convolve(phi, f), rc);
        rhs = convolve(scale_seq(phi, rc), scale_seq(f, rc));
    } else {
        if (!f.is_zero() && f.first() < 0)
            throw std::domain_error("check_scaling_identity: unilateral argument must live on Z+");
        lhs = scale_seq(project_plus(convolve(phi, f)), rc);
        rhs = project_plus(convolve(scale_seq(phi, rc), scale_seq(f, rc)));
    }
    ScalingCheck out;
    out.abs_dev = max_abs_diff(lhs, rhs);
    const double scale = std::max(lhs.max_abs(), rhs.max_abs());
    out.rel_dev = scale > 0.0 ? out.abs_dev / scale : out.abs_dev;
    return out;
}

namespace {

// best symbol preimage of lambda on the circle of radius r
std::pair<Complex, double> preimage_on_circle(const LaurentSymbol& sym, Complex lambda, double r,
                                              int m) {
    Complex best_z(r, 0.0);
    double best = kInf;
    for (int j = 0; j < m; ++j) {
        const double t = kTwoPi * static_cast<double>(j) / static_cast<double>(m);
        const Complex z(r * std::cos(t), r * std::sin(t));
        const double d = std::abs(eval_symbol(sym, z) - lambda);
        if (d < best) {
            best = d;
            best_z = z;
        }
    }
    return {best_z, best};
}

Certificate residual_route(const OperatorSpec& op, Complex lambda, Complex z,
                           const VerifyParams& params) {
    Certificate cert;
    cert.lambda = lambda;
    cert.context = op.describe() + " on " + op.space.weight.describe();
    cert.params["N"] = static_cast<double>(params.residual_N);
    cert.params["witness_z_re"] = z.real();
    cert.params["witness_z_im"] = z.imag();
    const int N = params.residual_N;
    for (int n : {std::max(8, N / 4), std::max(8, N / 2), N})
        cert.residual_table.emplace_back(n, approx_eigen_residual(op, z, n));
    cert.verdict = VerdictKind::InsideWitness;
    return cert;
}

Certificate blowup_route(const OperatorSpec& op, Complex lambda, const VerifyParams& params) {
    Certificate cert;
    cert.lambda = lambda;
    cert.context = op.describe() + " on " + op.space.weight.describe();
    cert.growth_table = blowup_witness(op, lambda, params.blowup_Ns);

    // per-unit-N geometric factor between consecutive finite entries
    double factor = kInf;
    bool any = false;
    for (std::size_t i = 0; i + 1 < cert.growth_table.size(); ++i) {
        const auto& [n0, v0] = cert.growth_table[i];
        const auto& [n1, v1] = cert.growth_table[i + 1];
        if (!std::isfinite(v0) || !std::isfinite(v1) || v0 <= 0.0) continue;
        factor = std::min(factor, std::pow(v1 / v0, 1.0 / static_cast<double>(n1 - n0)));
        any = true;
    }
    if (!any) {
        // singular sections everywhere already witness the blow-up
        cert.growth_factor = kInf;
        cert.verdict = VerdictKind::BlowupWitness;
        return cert;
    }
    cert.growth_factor = factor;
    if (factor >= params.blowup_trend_min) {
        cert.verdict = VerdictKind::BlowupWitness;
    } else {
        cert.verdict = VerdictKind::Inconclusive;
        cert.reason = "no blow-up trend across the section sizes";
    }
    return cert;
}

} // namespace

Certificate verify_point(const OperatorSpec& op, Complex lambda, const VerifyParams& params) {
    const LaurentSymbol sym(op.kernel());

    if (op.space.domain == Domain::Bilateral) {
        const SpectralRegion base = predicted_sigma_shift(op.space);
        const SpectralRegion image = predicted_sigma_multiplier(op.kernel(), op.space, 65, 1024);
        if (region_contains(image, lambda, params.tol) == ContainsVerdict::Outside) {
            if (base.rmin.is_finite() && base.rmax.is_finite() && base.rmin.raw() > 0.0) {
                Certificate c = outside_certificate(op.kernel(), lambda, op.space, base.rmin.value(),
                                                    base.rmax.value(), params.transform_m);
                if (c.verdict == VerdictKind::OutsideBound) return c;
            }
            return neumann_outside_certificate(op, lambda, params.neumann_horizon, params.tail_tol);
        }
        // boundary-circle preimage, if one exists, gives the witness vector
        for (const ExtReal& r : {base.rmax, base.rmin}) {
            if (!r.is_finite() || r.raw() <= 0.0) continue;
            const auto [z, dist] = preimage_on_circle(sym, lambda, r.value(), 2048);
            if (dist <= params.tol * (1.0 + std::abs(lambda)))
                return residual_route(op, lambda, z, params);
        }
        return blowup_route(op, lambda, params);
    }

    // Z+ operators
    const FiniteSeq ker = op.kernel();
    const bool backward_kernel = !ker.is_zero() && ker.last() <= 0 && ker.first() < 0;
    const NormBracket bracket = operator_norm_bracket(op, 32);
    if (bracket.upper.is_finite() && std::abs(lambda) > bracket.upper.value()) {
        Certificate c = neumann_outside_certificate(op, lambda, params.neumann_horizon, params.tail_tol);
        if (c.verdict == VerdictKind::OutsideBound) return c;
    }
    if (backward_kernel && std::abs(lambda) > 0.0) {
        // power series in the backward shift: lambda = psi(w) at w on the
        // disk gives the exact decaying eigenvector z^{-n} with z = 1/w
        const LaurentSymbol psi(ker.reflected());
        const SpectralRegion disk = predicted_sigma_unilateral(op.space, ShiftDirection::Backward);
        const double R = disk.rmax.is_finite() ? disk.rmax.value() : 1.0;
        for (int ri = 1; ri <= 32; ++ri) {
            const double r = R * static_cast<double>(ri) / 32.0 * 0.98;
            const auto [wz, dist] = preimage_on_circle(psi, lambda, r, 1024);
            if (dist <= params.tol * (1.0 + std::abs(lambda)))
                return residual_route(op, lambda, Complex(1.0, 0.0) / wz, params);
        }
    }
    return blowup_route(op, lambda, params);
}

} // namespace shiftspec
