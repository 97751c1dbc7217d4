#include "cphardy/kernel_span.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cphardy/errors.hpp"

namespace cphardy {

namespace {

// Neumaier compensated accumulation; the Gram double sums mix widely scaled
// terms when orbits are expansive.
struct CompensatedSum {
    double s = 0.0;
    double c = 0.0;
    void add(double x) {
        const double t = s + x;
        if (std::abs(s) >= std::abs(x))
            c += (s - t) + x;
        else
            c += (x - t) + s;
        s = t;
    }
    double value() const { return s + c; }
};

} // namespace

KernelElement KernelElement::kernel(cplx beta) {
    if (!(beta.real() > 0.0))
        throw std::invalid_argument("kernel pole must have Re(beta) > 0");
    KernelElement f;
    f.terms_.push_back(Term{cplx(1.0, 0.0), beta});
    return f;
}

KernelElement KernelElement::from_terms(std::vector<Term> terms) {
    for (const Term& t : terms)
        if (!(t.pole.real() > 0.0))
            throw std::invalid_argument("kernel pole must have Re(beta) > 0");
    KernelElement f;
    f.terms_ = std::move(terms);
    f.normalize();
    return f;
}

void KernelElement::normalize() {
    std::vector<Term> merged;
    merged.reserve(terms_.size());
    for (const Term& t : terms_) {
        bool found = false;
        for (Term& m : merged) {
            if (m.pole.real() == t.pole.real() && m.pole.imag() == t.pole.imag()) {
                m.coeff += t.coeff;
                found = true;
                break;
            }
        }
        if (!found) merged.push_back(t);
    }
    terms_.clear();
    for (const Term& m : merged)
        if (m.coeff != cplx(0.0, 0.0)) terms_.push_back(m);
    if (terms_.size() > term_cap)
        throw std::invalid_argument("kernel element exceeds the 512-term cap");
}

cplx KernelElement::evaluate(cplx w) const {
    if (!(w.real() > 0.0))
        throw std::invalid_argument("evaluation point must have Re(w) > 0");
    cplx acc(0.0, 0.0);
    for (const Term& t : terms_) acc += t.coeff / (w + std::conj(t.pole));
    return acc;
}

KernelElement& KernelElement::operator+=(const KernelElement& rhs) {
    terms_.insert(terms_.end(), rhs.terms_.begin(), rhs.terms_.end());
    normalize();
    return *this;
}

KernelElement& KernelElement::operator-=(const KernelElement& rhs) {
    terms_.reserve(terms_.size() + rhs.terms_.size());
    for (const Term& t : rhs.terms_) terms_.push_back(Term{-t.coeff, t.pole});
    normalize();
    return *this;
}

KernelElement& KernelElement::operator*=(cplx scalar) {
    for (Term& t : terms_) t.coeff *= scalar;
    normalize();
    return *this;
}

cplx inner(const KernelElement& f, const KernelElement& g) {
    CompensatedSum re, im;
    for (const auto& ft : f.terms()) {
        const cplx alpha_conj = std::conj(ft.pole);
        for (const auto& gt : g.terms()) {
            const cplx z = ft.coeff * std::conj(gt.coeff) / (gt.pole + alpha_conj);
            re.add(z.real());
            im.add(z.imag());
        }
    }
    return cplx(re.value(), im.value());
}

double norm(const KernelElement& f) {
    const double sq = inner(f, f).real();
    if (sq < -1e-14)
        throw numerical_error("Gram matrix lost positive semidefiniteness (inner(f,f) = " +
                              std::to_string(sq) + ")");
    return std::sqrt(std::max(sq, 0.0));
}

KernelElement apply(const AffineSymbol& phi, const KernelElement& f) {
    // C_phi k_alpha = (1/a) k_{(alpha + conj(b))/a}; new poles stay in the
    // half-plane because Re((alpha + conj(b))/a) = (Re alpha + Re b)/a > 0.
    std::vector<KernelElement::Term> out;
    out.reserve(f.size());
    const cplx bc = std::conj(phi.b);
    for (const auto& t : f.terms())
        out.push_back({t.coeff / phi.a, (t.pole + bc) / phi.a});
    return KernelElement::from_terms(std::move(out));
}

KernelElement apply_adjoint(const AffineSymbol& phi, const KernelElement& f) {
    // C_phi* k_beta = k_{phi(beta)}.
    std::vector<KernelElement::Term> out;
    out.reserve(f.size());
    for (const auto& t : f.terms())
        out.push_back({t.coeff, phi.a * t.pole + phi.b});
    return KernelElement::from_terms(std::move(out));
}

namespace {

std::vector<double> orbit_norms_impl(const AffineSymbol& phi, const KernelElement& f,
                                     long N, long cap, bool parallel) {
    if (N < 0) throw std::invalid_argument("orbit length must be nonnegative");
    if (N > cap) throw std::invalid_argument("orbit length exceeds cap");
    std::vector<double> out(static_cast<std::size_t>(N) + 1);

    // Elements are produced sequentially by repeated apply; norms of a block
    // are independent, so they are the parallel part.
    constexpr long block = 128;
    KernelElement current = f;
    long n = 0;
    std::vector<KernelElement> buf;
    while (n <= N) {
        const long m = std::min(block, N - n + 1);
        buf.clear();
        buf.reserve(static_cast<std::size_t>(m));
        buf.push_back(current);
        for (long i = 1; i < m; ++i) buf.push_back(apply(phi, buf.back()));

#pragma omp parallel for schedule(static) if (parallel)
        for (long i = 0; i < m; ++i)
            out[static_cast<std::size_t>(n + i)] = norm(buf[static_cast<std::size_t>(i)]);

        n += m;
        if (n <= N) current = apply(phi, buf.back());
    }
    return out;
}

} // namespace

std::vector<double> orbit_norms(const AffineSymbol& phi, const KernelElement& f,
                                long N, long cap) {
    return orbit_norms_impl(phi, f, N, cap, true);
}

std::vector<double> orbit_norms_serial(const AffineSymbol& phi, const KernelElement& f,
                                       long N, long cap) {
    return orbit_norms_impl(phi, f, N, cap, false);
}

double orbit_norm_kernel_closed(const AffineSymbol& phi, cplx w, long n) {
    if (!(w.real() > 0.0))
        throw std::invalid_argument("kernel pole must have Re(w) > 0");
    if (n < 0) throw std::invalid_argument("orbit index must be nonnegative");
    const double nn = static_cast<double>(n);
    double d; // Re(w) pushed forward by the adjoint-symbol iteration, rescaled by a^n
    if (phi.a == 1.0) {
        d = w.real() + nn * phi.b.real();
    } else {
        const double an = std::pow(phi.a, nn);
        d = w.real() + (1.0 - an) / (1.0 - phi.a) * phi.b.real();
    }
    return std::pow(phi.a, -0.5 * nn) / std::sqrt(2.0 * d);
}

double expansivity_lower_bound_at(const AffineSymbol& phi, const KernelElement& f,
                                  long n, double base) {
    if (!(phi.a < 1.0))
        throw precondition_error("Prop 3.1",
                                 "expansivity lower bound requires a in (0,1)");
    if (n < 0) throw std::invalid_argument("orbit index must be nonnegative");
    const double an = std::pow(phi.a, static_cast<double>(n));
    const cplx point = cplx(base, 0.0) + (1.0 - an) / (1.0 - phi.a) * phi.b;
    return std::sqrt(2.0 * base) * std::pow(phi.a, -0.5 * static_cast<double>(n)) *
           std::abs(f.evaluate(point));
}

double expansivity_lower_bound(const AffineSymbol& phi, const KernelElement& f, long n) {
    return expansivity_lower_bound_at(phi, f, n, 1.0);
}

bool pointwise_bound_check(const KernelElement& f, cplx w) {
    if (!(w.real() > 0.0))
        throw std::invalid_argument("evaluation point must have Re(w) > 0");
    return std::abs(f.evaluate(w)) <= norm(f) / std::sqrt(2.0 * w.real()) + 1e-12;
}

} // namespace cphardy
