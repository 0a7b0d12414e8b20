#include "shiftspec/operators.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "shiftspec/errors.hpp"
#include "shiftspec/weights.hpp"

namespace shiftspec {

OperatorSpec OperatorSpec::multiplier(FiniteSeq phi, SpaceSpec space) {
    if (space.domain != Domain::Bilateral)
        throw std::invalid_argument("multiplier: requires a bilateral space");
    OperatorSpec op;
    op.kind = OperatorKind::Multiplier;
    op.phi = std::move(phi);
    op.space = std::move(space);
    return op;
}

OperatorSpec OperatorSpec::toeplitz(FiniteSeq phi, SpaceSpec space) {
    if (space.domain != Domain::Unilateral)
        throw std::invalid_argument("toeplitz: requires a Z+ space");
    OperatorSpec op;
    op.kind = OperatorKind::Toeplitz;
    op.phi = std::move(phi);
    op.space = std::move(space);
    return op;
}

OperatorSpec OperatorSpec::shift_power(int k, SpaceSpec space) {
    OperatorSpec op;
    op.kind = OperatorKind::ShiftPower;
    op.power = k;
    op.space = std::move(space);
    return op;
}

FiniteSeq OperatorSpec::kernel() const {
    return kind == OperatorKind::ShiftPower ? FiniteSeq::unit(power) : phi;
}

std::string OperatorSpec::describe() const {
    switch (kind) {
    case OperatorKind::Multiplier: return "multiplier";
    case OperatorKind::Toeplitz: return "toeplitz";
    case OperatorKind::ShiftPower:
        return "shift_power(" + std::to_string(power) + ")";
    }
    return "?";
}

FiniteSeq convolve(const FiniteSeq& phi, const FiniteSeq& f) {
    if (phi.is_zero() || f.is_zero()) return FiniteSeq::zero();
    const int lo = phi.first() + f.first();
    const int hi = phi.last() + f.last();
    std::vector<Complex> out(static_cast<std::size_t>(hi - lo + 1), Complex(0.0, 0.0));
    for (int m = lo; m <= hi; ++m) {
        Complex s(0.0, 0.0);
        for (int j = phi.first(); j <= phi.last(); ++j) s += phi.coeff(j) * f.coeff(m - j);
        out[static_cast<std::size_t>(m - lo)] = s;
    }
    return FiniteSeq(lo, std::move(out));
}

FiniteSeq project_plus(const FiniteSeq& u) {
    if (u.is_zero() || u.first() >= 0) return u;
    if (u.last() < 0) return FiniteSeq::zero();
    std::vector<Complex> out;
    out.reserve(static_cast<std::size_t>(u.last() + 1));
    for (int n = 0; n <= u.last(); ++n) out.push_back(u.coeff(n));
    return FiniteSeq(0, std::move(out));
}

FiniteSeq apply_operator(const OperatorSpec& op, const FiniteSeq& f) {
    if (!f.is_zero() && op.space.domain == Domain::Unilateral && f.first() < 0)
        throw std::domain_error("apply_operator: argument support extends below 0");
    switch (op.kind) {
    case OperatorKind::Multiplier:
        return convolve(op.phi, f);
    case OperatorKind::Toeplitz:
        return project_plus(convolve(op.phi, f));
    case OperatorKind::ShiftPower: {
        const FiniteSeq moved = f.translated(op.power);
        return op.space.domain == Domain::Unilateral ? project_plus(moved) : moved;
    }
    }
    throw std::logic_error("unreachable operator kind");
}

FiniteSection finite_section(const OperatorSpec& op, int N) {
    if (N < 1) throw std::invalid_argument("finite_section: N must be >= 1");
    if (!op.space.is_hilbert_lp())
        throw UnsupportedNormError("finite_section: isometric coordinates need weighted l2");

    FiniteSection s;
    s.window_lo = op.space.domain == Domain::Bilateral ? -N : 0;
    s.window_hi = N;
    const FiniteSeq ker = op.kernel();
    s.band = ker.is_zero() ? 0 : std::max(std::abs(ker.first()), std::abs(ker.last()));

    const std::size_t dim = static_cast<std::size_t>(s.dim());
    s.matrix = ComplexMatrix(dim);
    const auto& w = op.space.weight;
    for (int i = s.window_lo; i <= s.window_hi; ++i) {
        const int jlo = std::max(s.window_lo, i - s.band);
        const int jhi = std::min(s.window_hi, i + s.band);
        for (int j = jlo; j <= jhi; ++j) {
            const Complex c = ker.coeff(i - j);
            if (c == Complex(0.0, 0.0)) continue;
            const double scale = std::exp(w.log_weight(i) - w.log_weight(j));
            s.matrix.at(static_cast<std::size_t>(s.row_of(i)), static_cast<std::size_t>(s.row_of(j))) =
                c * scale;
        }
    }
    return s;
}

NormBracket operator_norm_bracket(const OperatorSpec& op, int N) {
    NormBracket out;
    const FiniteSeq ker = op.kernel();

    double upper_acc = 0.0;
    bool upper_inf = false;
    for (int k = ker.first(); k <= ker.last() && !ker.is_zero(); ++k) {
        const double a = std::abs(ker.coeff(k));
        if (a == 0.0) continue;
        const ExtReal nk = shift_norm(op.space, k);
        if (nk.is_infinite()) {
            upper_inf = true;
            break;
        }
        upper_acc += a * nk.value();
    }
    out.upper = upper_inf ? ExtReal::infinity() : ExtReal(upper_acc);

    if (op.space.is_hilbert_lp()) {
        const FiniteSection s = finite_section(op, N);
        out.lower = largest_singular_value(s.matrix, 1e-10, 10000, s.band);
    }
    return out;
}

std::string section_to_csv(const FiniteSection& s) {
    std::string out;
    char buf[64];
    const std::size_t dim = static_cast<std::size_t>(s.dim());
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            const Complex& c = s.matrix.at(i, j);
            std::snprintf(buf, sizeof buf, "%.17g,%.17g", c.real(), c.imag());
            if (j > 0) out += ',';
            out += buf;
        }
        out += '\n';
    }
    return out;
}

} // namespace shiftspec
