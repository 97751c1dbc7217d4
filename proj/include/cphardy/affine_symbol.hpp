#pragma once

#include <complex>
#include <optional>
#include <string>

namespace cphardy {

using cplx = std::complex<double>;

/// Affine self-map phi(w) = a*w + b of the right half-plane, with a > 0 and
/// Re(b) >= 0. These are exactly the linear-fractional symbols that induce
/// bounded composition operators on the Hardy space of the half-plane.
///
/// Parameters are kept as the exact binary doubles supplied; every
/// classification below compares them without tolerance, so boundary classes
/// (a = 1, Re b = 0) are selected by typing exact values.
struct AffineSymbol {
    double a;
    cplx b;

    AffineSymbol(double a_, cplx b_);

    static AffineSymbol identity() { return AffineSymbol(1.0, cplx(0.0, 0.0)); }

    /// Point evaluation phi(w).
    cplx operator()(cplx w) const { return a * w + b; }
};

enum class SymbolClass {
    Identity,
    ParabolicAutomorphism,
    ParabolicNonAutomorphism,
    HyperbolicAutomorphismTypeI,
    HyperbolicAutomorphismTypeII,
    HyperbolicNonAutomorphismTypeI,
    HyperbolicNonAutomorphismTypeII,
};

std::string to_string(SymbolClass c);
std::optional<SymbolClass> symbol_class_from_string(const std::string& s);

/// Exact seven-way classification:
///   a = 1, b = 0      -> Identity
///   a = 1, b != 0     -> Parabolic (automorphism iff Re b = 0)
///   a < 1             -> hyperbolic type I  (automorphism iff Re b = 0)
///   a > 1             -> hyperbolic type II (automorphism iff Re b = 0)
SymbolClass classify(const AffineSymbol& phi);

/// n-th iterate phi^[n] in closed form:
///   a = 1  -> (1, n*b)
///   a != 1 -> (a^n, (1 - a^n)/(1 - a) * b)
/// iterate(phi, 0) is the identity. n must be nonnegative.
AffineSymbol iterate(const AffineSymbol& phi, long n);

/// Composition (phi1 o phi2)(w) = a1*a2*w + a1*b2 + b1.
AffineSymbol compose(const AffineSymbol& phi1, const AffineSymbol& phi2);

/// Inverse map (1/a, -b/a); a self-map of the half-plane only when Re(b)=0
/// (the automorphism case), absent otherwise.
std::optional<AffineSymbol> inverse(const AffineSymbol& phi);

/// The adjoint of C_phi is (1/a) * C_psi with psi(w) = w/a + conj(b)/a.
struct AdjointSymbol {
    double scale;       // 1/a
    AffineSymbol symbol; // psi
};
AdjointSymbol adjoint_symbol(const AffineSymbol& phi);

/// Fixed points of phi in the plane.
struct FixedPointInfo {
    enum class Kind { Unique, EveryPoint };
    Kind kind;
    cplx point;    // the fixed point (a representative, 1, when every point is fixed)
    bool interior; // Re(point) > 0
};

/// a != 1: unique fixed point b/(1-a). a = 1, b = 0: every point (identity).
/// a = 1, b != 0: none.
std::optional<FixedPointInfo> fixed_point(const AffineSymbol& phi);

/// Angular derivative at infinity, lim w/phi(w) = 1/a. The operator norm of
/// C_phi is its square root, a^{-1/2}.
double derivative_at_infinity(const AffineSymbol& phi);

/// ||C_phi|| = a^{-1/2}.
double operator_norm(const AffineSymbol& phi);

} // namespace cphardy
