#include "cphardy/affine_symbol.hpp"

#include <cmath>
#include <stdexcept>

namespace cphardy {

AffineSymbol::AffineSymbol(double a_, cplx b_) : a(a_), b(b_) {
    if (!(a > 0.0) || !std::isfinite(a))
        throw std::invalid_argument("affine symbol requires a > 0");
    if (!(b.real() >= 0.0) || !std::isfinite(b.real()) || !std::isfinite(b.imag()))
        throw std::invalid_argument("affine symbol requires Re(b) >= 0");
}

std::string to_string(SymbolClass c) {
    switch (c) {
    case SymbolClass::Identity: return "Identity";
    case SymbolClass::ParabolicAutomorphism: return "ParabolicAutomorphism";
    case SymbolClass::ParabolicNonAutomorphism: return "ParabolicNonAutomorphism";
    case SymbolClass::HyperbolicAutomorphismTypeI: return "HyperbolicAutomorphismTypeI";
    case SymbolClass::HyperbolicAutomorphismTypeII: return "HyperbolicAutomorphismTypeII";
    case SymbolClass::HyperbolicNonAutomorphismTypeI: return "HyperbolicNonAutomorphismTypeI";
    case SymbolClass::HyperbolicNonAutomorphismTypeII: return "HyperbolicNonAutomorphismTypeII";
    }
    return "?";
}

std::optional<SymbolClass> symbol_class_from_string(const std::string& s) {
    for (SymbolClass c : {SymbolClass::Identity, SymbolClass::ParabolicAutomorphism,
                          SymbolClass::ParabolicNonAutomorphism,
                          SymbolClass::HyperbolicAutomorphismTypeI,
                          SymbolClass::HyperbolicAutomorphismTypeII,
                          SymbolClass::HyperbolicNonAutomorphismTypeI,
                          SymbolClass::HyperbolicNonAutomorphismTypeII}) {
        if (to_string(c) == s) return c;
    }
    return std::nullopt;
}

SymbolClass classify(const AffineSymbol& phi) {
    const bool automorphism = phi.b.real() == 0.0;
    if (phi.a == 1.0) {
        if (phi.b == cplx(0.0, 0.0)) return SymbolClass::Identity;
        return automorphism ? SymbolClass::ParabolicAutomorphism
                            : SymbolClass::ParabolicNonAutomorphism;
    }
    if (phi.a < 1.0)
        return automorphism ? SymbolClass::HyperbolicAutomorphismTypeI
                            : SymbolClass::HyperbolicNonAutomorphismTypeI;
    return automorphism ? SymbolClass::HyperbolicAutomorphismTypeII
                        : SymbolClass::HyperbolicNonAutomorphismTypeII;
}

AffineSymbol iterate(const AffineSymbol& phi, long n) {
    if (n < 0) throw std::invalid_argument("iterate requires n >= 0");
    if (n == 0) return AffineSymbol::identity();
    if (phi.a == 1.0) return AffineSymbol(1.0, static_cast<double>(n) * phi.b);
    const double an = std::pow(phi.a, static_cast<double>(n));
    return AffineSymbol(an, (1.0 - an) / (1.0 - phi.a) * phi.b);
}

AffineSymbol compose(const AffineSymbol& phi1, const AffineSymbol& phi2) {
    return AffineSymbol(phi1.a * phi2.a, phi1.a * phi2.b + phi1.b);
}

std::optional<AffineSymbol> inverse(const AffineSymbol& phi) {
    if (phi.b.real() != 0.0) return std::nullopt;
    return AffineSymbol(1.0 / phi.a, -phi.b / phi.a);
}

AdjointSymbol adjoint_symbol(const AffineSymbol& phi) {
    const double inv_a = 1.0 / phi.a;
    return AdjointSymbol{inv_a, AffineSymbol(inv_a, std::conj(phi.b) * inv_a)};
}

std::optional<FixedPointInfo> fixed_point(const AffineSymbol& phi) {
    if (phi.a == 1.0) {
        if (phi.b == cplx(0.0, 0.0))
            return FixedPointInfo{FixedPointInfo::Kind::EveryPoint, cplx(1.0, 0.0), true};
        return std::nullopt;
    }
    // Component-wise division keeps the sign of the real part exact.
    const double d = 1.0 - phi.a;
    const cplx p(phi.b.real() / d, phi.b.imag() / d);
    return FixedPointInfo{FixedPointInfo::Kind::Unique, p, p.real() > 0.0};
}

double derivative_at_infinity(const AffineSymbol& phi) { return 1.0 / phi.a; }

double operator_norm(const AffineSymbol& phi) { return 1.0 / std::sqrt(phi.a); }

} // namespace cphardy
