#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cphardy/affine_symbol.hpp"
#include "cphardy/kernel_span.hpp"

namespace cphardy {

enum class VerdictValue { yes, no, not_applicable };

std::string to_string(VerdictValue v);
std::optional<VerdictValue> verdict_value_from_string(const std::string& s);

/// A yes/no/not_applicable answer together with the tag of the result that
/// decides it and a short reason. not_applicable occurs only for the
/// two-sided expansivity notions on non-invertible operators: their
/// definition requires invertibility.
struct Verdict {
    VerdictValue value;
    std::string provenance;
    std::string note;
};

/// Shape of the spectrum of C_phi.
struct SpectrumDescriptor {
    enum class Variant {
        Singleton1,            // identity: {1}
        UnitCircle,            // parabolic automorphism
        DecayingSpiralWithZero, // parabolic non-automorphism: {e^{-b t}} u {0}
        Circle,                // hyperbolic automorphism, b != 0: |z| = a^{-1/2}
        ClosedDisc,            // hyperbolic non-automorphism: |z| <= a^{-1/2}
        TruncationOnly,        // pure dilation a != 1, b = 0: no closed form
    };

    Variant variant;
    std::optional<double> radius; // a^{-1/2} when present
    std::optional<cplx> b;        // spiral rate when present
};

std::string to_string(SpectrumDescriptor::Variant v);
std::optional<SpectrumDescriptor::Variant> spectrum_variant_from_string(const std::string& s);

/// Complete dynamical profile of C_phi, decided exactly from the symbol
/// class. The expansivity pair (positive / uniformly positive) always agrees,
/// and Li-Yorke chaos is always absent.
struct DynamicsReport {
    SymbolClass symbol_class;
    double operator_norm; // a^{-1/2}
    bool invertible;      // Re(b) = 0
    bool normal;          // a = 1 or Re(b) = 0
    bool self_adjoint;    // a = 1 and b real
    bool unitary;         // a = 1 and Re(b) = 0
    Verdict positively_expansive;
    Verdict uniformly_positively_expansive;
    Verdict expansive;
    Verdict uniformly_expansive;
    Verdict positive_shadowing;
    Verdict li_yorke;
    SpectrumDescriptor spectrum;
};

DynamicsReport report(const AffineSymbol& phi);

/// ||C_phi* C_phi k_w - (1/a) k_w|| for an automorphism symbol (Re b = 0),
/// computed in the kernel span. The operator identity makes this vanish;
/// the contract is <= 1e-13.
double eigen_check(const AffineSymbol& phi, cplx w);

/// Orbit norms ||C_phi^n k_{w_n}|| along the unit-sphere kernels
/// w_n = 1/2 + n i, for a parabolic-type symbol (a = 1). The values tend to
/// 0 when Re(b) > 0 and stay equal to 1 when Re(b) = 0, which rules out
/// uniform positive expansivity.
std::vector<std::pair<long, double>> uniform_expansivity_counterexample(const AffineSymbol& phi,
                                                                        long N);

/// delta-pseudotrajectory: ||C_phi x_n - x_{n+1}|| <= delta for consecutive
/// elements.
struct PseudoOrbit {
    double delta;
    std::vector<KernelElement> elements; // indices 0..N
};

/// Largest consecutive deviation max_n ||C_phi elements[n] - elements[n+1]||.
double max_step_deviation(const AffineSymbol& phi, const PseudoOrbit& orbit);

bool is_delta_pseudo_orbit(const AffineSymbol& phi, const PseudoOrbit& orbit,
                           double slack = 1e-10);

/// max_n ||C_phi^n f0 - elements[n]||: how well the true orbit of f0 shadows
/// the pseudo-orbit.
double max_orbit_deviation(const AffineSymbol& phi, const KernelElement& f0,
                           const std::vector<KernelElement>& elements);

/// The divergent pseudotrajectory f_n = (delta/||C_phi f||) * sum_{j=1}^{n} C_phi^j f
/// attached to an interior fixed point eta of phi (f(eta) != 0 required;
/// the symbol must fix an interior point). Its consecutive deviations equal
/// delta exactly and f_n(eta) grows linearly, so no true orbit stays close.
PseudoOrbit non_shadowing_witness(const AffineSymbol& phi, const KernelElement& f,
                                  double delta, long N);

/// Seeded random pseudo-orbit f_{n+1} = C_phi f_n + g_{n+1} with single-kernel
/// perturbations of norm uniform in [0, delta], poles drawn from a fixed box
/// in the half-plane. Deterministic for a fixed seed.
PseudoOrbit random_pseudo_orbit(const AffineSymbol& phi, const KernelElement& f0,
                                double delta, long N, std::uint64_t seed);

struct ShadowResult {
    KernelElement seed;  // elements[0]
    double bound;        // delta/(1 - a^{-1/2}), at most epsilon/2
};

/// Shadowing certificate for a > 1 (then ||C_phi^n|| = p^n with p = a^{-1/2}):
/// the orbit of elements[0] epsilon/2-shadows every delta-pseudotrajectory
/// with delta <= (1 - p) epsilon / 2. Rejects a <= 1 and oversized delta.
ShadowResult shadow_construct(const AffineSymbol& phi, const PseudoOrbit& orbit,
                              double epsilon);

struct LiYorkeCertificate {
    double liminf_est; // min of ||C_phi^n f|| over n in [N/2, N]
    double limsup_est; // max over the same window
    std::string reason;
};

/// Why f cannot witness Li-Yorke chaos: normal symbol classes, contractive
/// type II orbits, or the eventual orbit floor > 2 of type I.
LiYorkeCertificate li_yorke_certificate(const AffineSymbol& phi, const KernelElement& f,
                                        long N);

} // namespace cphardy
