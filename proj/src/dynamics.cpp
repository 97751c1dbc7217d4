#include "cphardy/dynamics.hpp"

#include <cmath>
#include <stdexcept>

#include "cphardy/errors.hpp"

namespace cphardy {

std::string to_string(VerdictValue v) {
    switch (v) {
    case VerdictValue::yes: return "yes";
    case VerdictValue::no: return "no";
    case VerdictValue::not_applicable: return "not_applicable";
    }
    return "?";
}

std::optional<VerdictValue> verdict_value_from_string(const std::string& s) {
    if (s == "yes") return VerdictValue::yes;
    if (s == "no") return VerdictValue::no;
    if (s == "not_applicable") return VerdictValue::not_applicable;
    return std::nullopt;
}

std::string to_string(SpectrumDescriptor::Variant v) {
    switch (v) {
    case SpectrumDescriptor::Variant::Singleton1: return "Singleton1";
    case SpectrumDescriptor::Variant::UnitCircle: return "UnitCircle";
    case SpectrumDescriptor::Variant::DecayingSpiralWithZero: return "DecayingSpiralWithZero";
    case SpectrumDescriptor::Variant::Circle: return "Circle";
    case SpectrumDescriptor::Variant::ClosedDisc: return "ClosedDisc";
    case SpectrumDescriptor::Variant::TruncationOnly: return "TruncationOnly";
    }
    return "?";
}

std::optional<SpectrumDescriptor::Variant> spectrum_variant_from_string(const std::string& s) {
    using V = SpectrumDescriptor::Variant;
    for (V v : {V::Singleton1, V::UnitCircle, V::DecayingSpiralWithZero, V::Circle, V::ClosedDisc,
                V::TruncationOnly}) {
        if (to_string(v) == s) return v;
    }
    return std::nullopt;
}

namespace {

Verdict yes(const char* prov, const char* note) {
    return Verdict{VerdictValue::yes, prov, note};
}
Verdict no(const char* prov, const char* note) {
    return Verdict{VerdictValue::no, prov, note};
}
Verdict na(const char* prov, const char* note) {
    return Verdict{VerdictValue::not_applicable, prov, note};
}

SpectrumDescriptor spectrum_for(const AffineSymbol& phi, SymbolClass cls) {
    using V = SpectrumDescriptor::Variant;
    const double radius = operator_norm(phi);
    switch (cls) {
    case SymbolClass::Identity:
        return SpectrumDescriptor{V::Singleton1, std::nullopt, std::nullopt};
    case SymbolClass::ParabolicAutomorphism:
        return SpectrumDescriptor{V::UnitCircle, std::nullopt, std::nullopt};
    case SymbolClass::ParabolicNonAutomorphism:
        return SpectrumDescriptor{V::DecayingSpiralWithZero, std::nullopt, phi.b};
    case SymbolClass::HyperbolicAutomorphismTypeI:
    case SymbolClass::HyperbolicAutomorphismTypeII:
        if (phi.b == cplx(0.0, 0.0))
            return SpectrumDescriptor{V::TruncationOnly, std::nullopt, std::nullopt};
        return SpectrumDescriptor{V::Circle, radius, std::nullopt};
    case SymbolClass::HyperbolicNonAutomorphismTypeI:
    case SymbolClass::HyperbolicNonAutomorphismTypeII:
        return SpectrumDescriptor{V::ClosedDisc, radius, std::nullopt};
    }
    return SpectrumDescriptor{V::TruncationOnly, std::nullopt, std::nullopt};
}

} // namespace

DynamicsReport report(const AffineSymbol& phi) {
    const SymbolClass cls = classify(phi);
    DynamicsReport r;
    r.symbol_class = cls;
    r.operator_norm = operator_norm(phi);
    r.invertible = phi.b.real() == 0.0;
    r.normal = phi.a == 1.0 || phi.b.real() == 0.0;
    r.self_adjoint = phi.a == 1.0 && phi.b.imag() == 0.0;
    r.unitary = phi.a == 1.0 && phi.b.real() == 0.0;
    r.spectrum = spectrum_for(phi, cls);
    r.li_yorke = no("Thm 5.1", "no affine symbol admits a semi-irregular vector");

    switch (cls) {
    case SymbolClass::Identity:
        r.positively_expansive = no("Prop 3.3", "orbit norms are constant");
        r.uniformly_positively_expansive = no("Prop 3.3", "orbit norms are constant");
        r.expansive = no("Thm 3.5", "a = 1");
        r.uniformly_expansive = no("Thm 3.5", "a = 1");
        r.positive_shadowing = no("S.2", "not hyperbolic; every point is fixed");
        break;
    case SymbolClass::ParabolicAutomorphism:
        r.positively_expansive = no("Prop 3.3", "unit kernel orbits stay bounded");
        r.uniformly_positively_expansive = no("Prop 3.3", "unit kernel orbits stay bounded");
        r.expansive = no("Thm 3.5", "a = 1");
        r.uniformly_expansive = no("Thm 3.5", "unit kernels k_{1/2+ni} have constant orbit");
        r.positive_shadowing = no("S.2", "unitary, hence not hyperbolic");
        break;
    case SymbolClass::ParabolicNonAutomorphism:
        r.positively_expansive = no("Prop 3.3", "kernel orbit norms decay");
        r.uniformly_positively_expansive = no("Prop 3.3", "kernel orbit norms decay");
        r.expansive = na("Def 2.1", "operator not invertible (Re b > 0)");
        r.uniformly_expansive = na("Def 2.1", "operator not invertible (Re b > 0)");
        r.positive_shadowing = no("S.2", "spectrum meets the unit circle");
        break;
    case SymbolClass::HyperbolicAutomorphismTypeI:
        r.positively_expansive = yes("Thm 3.4", "orbits of nonzero vectors are unbounded");
        r.uniformly_positively_expansive =
            yes("Thm 3.4", "orbit growth is uniform on the unit sphere");
        r.expansive = yes("Thm 3.5", "a != 1");
        r.uniformly_expansive = yes("Thm 3.5", "a != 1");
        r.positive_shadowing = yes("S.1 via Cor 2.6", "invertible hyperbolic operator");
        break;
    case SymbolClass::HyperbolicAutomorphismTypeII:
        r.positively_expansive = no("Prop 3.3", "norm a^{-1/2} < 1 contracts orbits");
        r.uniformly_positively_expansive = no("Prop 3.3", "norm a^{-1/2} < 1 contracts orbits");
        r.expansive = yes("Thm 3.5", "a != 1");
        r.uniformly_expansive = yes("Thm 3.5", "a != 1");
        r.positive_shadowing = yes("S.1", "power bounded by p^n with p = a^{-1/2} < 1");
        break;
    case SymbolClass::HyperbolicNonAutomorphismTypeI:
        r.positively_expansive = yes("Thm 3.4", "orbits of nonzero vectors are unbounded");
        r.uniformly_positively_expansive =
            yes("Thm 3.4", "orbit growth is uniform on the unit sphere");
        r.expansive = na("Def 2.1", "operator not invertible (Re b > 0)");
        r.uniformly_expansive = na("Def 2.1", "operator not invertible (Re b > 0)");
        r.positive_shadowing = no("S.2", "interior fixed point b/(1-a)");
        break;
    case SymbolClass::HyperbolicNonAutomorphismTypeII:
        r.positively_expansive = no("Prop 3.3", "norm a^{-1/2} < 1 contracts orbits");
        r.uniformly_positively_expansive = no("Prop 3.3", "norm a^{-1/2} < 1 contracts orbits");
        r.expansive = na("Def 2.1", "operator not invertible (Re b > 0)");
        r.uniformly_expansive = na("Def 2.1", "operator not invertible (Re b > 0)");
        r.positive_shadowing = yes("S.1", "spectrum inside the open unit disc");
        break;
    }
    return r;
}

double eigen_check(const AffineSymbol& phi, cplx w) {
    if (phi.b.real() != 0.0)
        throw precondition_error("Thm 3.5", "eigen check requires an automorphism (Re b = 0)");
    const KernelElement kw = KernelElement::kernel(w);
    const KernelElement lhs = apply_adjoint(phi, apply(phi, kw));
    return norm(lhs - cplx(1.0 / phi.a, 0.0) * kw);
}

std::vector<std::pair<long, double>> uniform_expansivity_counterexample(const AffineSymbol& phi,
                                                                        long N) {
    if (phi.a != 1.0)
        throw precondition_error("Prop 3.3",
                                 "the unit-sphere kernel counterexample requires a = 1");
    if (N < 0) throw std::invalid_argument("orbit length must be nonnegative");
    std::vector<std::pair<long, double>> out;
    out.reserve(static_cast<std::size_t>(N) + 1);
    for (long n = 0; n <= N; ++n) {
        const cplx wn(0.5, static_cast<double>(n));
        const KernelElement fn = apply(iterate(phi, n), KernelElement::kernel(wn));
        out.emplace_back(n, norm(fn));
    }
    return out;
}

double max_step_deviation(const AffineSymbol& phi, const PseudoOrbit& orbit) {
    double dev = 0.0;
    for (std::size_t n = 0; n + 1 < orbit.elements.size(); ++n)
        dev = std::max(dev, norm(apply(phi, orbit.elements[n]) - orbit.elements[n + 1]));
    return dev;
}

bool is_delta_pseudo_orbit(const AffineSymbol& phi, const PseudoOrbit& orbit, double slack) {
    return max_step_deviation(phi, orbit) <= orbit.delta * (1.0 + slack);
}

double max_orbit_deviation(const AffineSymbol& phi, const KernelElement& f0,
                           const std::vector<KernelElement>& elements) {
    double dev = 0.0;
    KernelElement current = f0;
    for (std::size_t n = 0; n < elements.size(); ++n) {
        if (n > 0) current = apply(phi, current);
        dev = std::max(dev, norm(current - elements[n]));
    }
    return dev;
}

PseudoOrbit non_shadowing_witness(const AffineSymbol& phi, const KernelElement& f,
                                  double delta, long N) {
    if (!(delta > 0.0)) throw std::invalid_argument("delta must be positive");
    if (N < 0) throw std::invalid_argument("orbit length must be nonnegative");
    const auto fp = fixed_point(phi);
    if (!fp || !fp->interior)
        throw precondition_error("Prop 4.1 precondition",
                                 "the symbol has no interior fixed point");
    const cplx eta = fp->point;
    if (f.evaluate(eta) == cplx(0.0, 0.0))
        throw precondition_error("Prop 4.1 precondition", "f must not vanish at the fixed point");

    const double cf = norm(apply(phi, f));
    const cplx scale(delta / cf, 0.0);

    // f_n = (delta/||C_phi f||) sum_{j=1}^{n} C_phi^j f, built through the
    // recursion S_n = C_phi(S_{n-1} + f); consecutive deviations are then
    // exactly delta and f_n(eta) = n delta f(eta)/||C_phi f||.
    PseudoOrbit orbit;
    orbit.delta = delta;
    orbit.elements.reserve(static_cast<std::size_t>(N) + 1);
    orbit.elements.emplace_back(); // zero
    KernelElement partial;         // S_n
    for (long n = 1; n <= N; ++n) {
        partial = apply(phi, partial + f);
        orbit.elements.push_back(scale * partial);
    }
    return orbit;
}

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

double uniform01(std::uint64_t& state) {
    return static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-53;
}

} // namespace

PseudoOrbit random_pseudo_orbit(const AffineSymbol& phi, const KernelElement& f0,
                                double delta, long N, std::uint64_t seed) {
    if (delta < 0.0) throw std::invalid_argument("delta must be nonnegative");
    if (N < 0) throw std::invalid_argument("orbit length must be nonnegative");
    std::uint64_t state = seed ^ 0xD1B54A32D192ED03ull;

    PseudoOrbit orbit;
    orbit.delta = delta;
    orbit.elements.reserve(static_cast<std::size_t>(N) + 1);
    orbit.elements.push_back(f0);
    for (long n = 0; n < N; ++n) {
        KernelElement next = apply(phi, orbit.elements.back());
        const double r = delta * uniform01(state);
        const double theta = 2.0 * 3.14159265358979323846 * uniform01(state);
        const cplx beta(0.5 + 2.0 * uniform01(state), -2.0 + 4.0 * uniform01(state));
        if (r > 0.0) {
            // unit kernel scaled to norm r: ||k_beta|| = 1/sqrt(2 Re beta)
            const cplx amp = std::polar(r * std::sqrt(2.0 * beta.real()), theta);
            next += amp * KernelElement::kernel(beta);
        }
        orbit.elements.push_back(std::move(next));
    }
    return orbit;
}

ShadowResult shadow_construct(const AffineSymbol& phi, const PseudoOrbit& orbit,
                              double epsilon) {
    if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
    if (!(phi.a > 1.0))
        throw precondition_error("Thm 4.2 S.1",
                                 "the constructive shadowing bound requires a > 1");
    if (orbit.elements.empty()) throw std::invalid_argument("empty pseudo-orbit");
    const double p = operator_norm(phi); // a^{-1/2} < 1, and ||C_phi^n|| = p^n
    const double max_delta = (1.0 - p) * epsilon / 2.0;
    if (orbit.delta > max_delta * (1.0 + 1e-12))
        throw precondition_error("Thm 4.2 S.1",
                                 "delta exceeds the admissible (1-p)*epsilon/2 = " +
                                     std::to_string(max_delta));
    return ShadowResult{orbit.elements.front(), orbit.delta / (1.0 - p)};
}

LiYorkeCertificate li_yorke_certificate(const AffineSymbol& phi, const KernelElement& f,
                                        long N) {
    if (f.is_zero()) throw std::invalid_argument("f must be nonzero");
    if (N < 2) throw std::invalid_argument("window length too short");
    const std::vector<double> norms = orbit_norms(phi, f, N);

    double lo = norms[static_cast<std::size_t>(N / 2)];
    double hi = lo;
    for (long n = N / 2; n <= N; ++n) {
        lo = std::min(lo, norms[static_cast<std::size_t>(n)]);
        hi = std::max(hi, norms[static_cast<std::size_t>(n)]);
    }

    std::string reason;
    const SymbolClass cls = classify(phi);
    if (phi.a == 1.0 || phi.b.real() == 0.0) {
        reason = "normal operator (Cor 2.8): cannot be Li-Yorke chaotic";
    } else if (cls == SymbolClass::HyperbolicNonAutomorphismTypeII) {
        reason = "norm a^{-1/2} < 1: orbit norms decay to 0, no semi-irregular vector";
    } else {
        // Type I: the lower bound sqrt(2 Re z) a^{-n/2} |f(z + (1-a^n)b/(1-a))|
        // eventually exceeds 2; nudge the base point if f vanishes at the
        // limit point (kernel-span zeros are isolated).
        double base = 1.0;
        const cplx limit_shift = phi.b / (1.0 - phi.a);
        for (int k = 0; k < 60; ++k) {
            if (f.evaluate(cplx(base, 0.0) + limit_shift) != cplx(0.0, 0.0)) break;
            base = 1.0 + std::pow(2.0, -(k + 1));
        }
        long hit = -1;
        for (long n = 0; n <= N; ++n) {
            if (expansivity_lower_bound_at(phi, f, n, base) > 2.0) {
                hit = n;
                break;
            }
        }
        reason = hit >= 0 ? ("orbit floor exceeds 2 from n = " + std::to_string(hit) +
                             " on: liminf ||C^n f|| >= 2")
                          : "orbit floor grows like a^{-n/2}; bound not yet above 2 in window";
    }
    return LiYorkeCertificate{lo, hi, reason};
}

} // namespace cphardy
