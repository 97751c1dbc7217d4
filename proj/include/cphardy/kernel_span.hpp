#pragma once

#include <complex>
#include <vector>

#include "cphardy/affine_symbol.hpp"

namespace cphardy {

/// Finite linear combination f = sum_i c_i * k_{beta_i} of reproducing
/// kernels k_beta(w) = 1/(w + conj(beta)), Re(beta) > 0. The span is
/// invariant under C_phi and its adjoint, so orbits, Gram inner products and
/// the operator identities of the theory are computed without discretization.
///
/// Normal form: poles are pairwise distinct (terms with bitwise-equal poles
/// are merged; fuzzy merging would corrupt exact cancellations), zero
/// coefficients are dropped. Term count is capped at 512 to bound the
/// O(k^2) Gram cost.
class KernelElement {
public:
    struct Term {
        cplx coeff;
        cplx pole; // Re > 0
    };

    static constexpr std::size_t term_cap = 512;

    /// The zero element.
    KernelElement() = default;

    /// The single kernel k_beta. Re(beta) <= 0 is rejected.
    static KernelElement kernel(cplx beta);

    /// Build from arbitrary terms; validates poles and normalizes.
    static KernelElement from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Point evaluation sum_i c_i/(w + conj(beta_i)); requires Re(w) > 0.
    cplx evaluate(cplx w) const;

    KernelElement& operator+=(const KernelElement& rhs);
    KernelElement& operator-=(const KernelElement& rhs);
    KernelElement& operator*=(cplx scalar);

    friend KernelElement operator+(KernelElement lhs, const KernelElement& rhs) {
        lhs += rhs;
        return lhs;
    }
    friend KernelElement operator-(KernelElement lhs, const KernelElement& rhs) {
        lhs -= rhs;
        return lhs;
    }
    friend KernelElement operator*(cplx scalar, KernelElement f) {
        f *= scalar;
        return f;
    }

private:
    void normalize();
    std::vector<Term> terms_;
};

/// Gram inner product <f, g> = sum_{i,j} c_i * conj(d_j) / (beta_j + conj(alpha_i)).
/// Conjugate-symmetric; inner(f, f) is real and >= 0 up to rounding.
cplx inner(const KernelElement& f, const KernelElement& g);

/// sqrt(inner(f, f)). Tiny negative Gram values (>= -1e-14) coming from
/// rounding are clamped to zero; anything below that threshold raises
/// numerical_error because the Gram matrix must be positive semidefinite.
double norm(const KernelElement& f);

/// C_phi f: term-by-term (c, alpha) -> (c/a, (alpha + conj(b))/a).
KernelElement apply(const AffineSymbol& phi, const KernelElement& f);

/// C_phi* f: term-by-term (c, beta) -> (c, a*beta + b).
KernelElement apply_adjoint(const AffineSymbol& phi, const KernelElement& f);

inline constexpr long orbit_cap_default = 10000;

/// [||f||, ||C_phi f||, ..., ||C_phi^N f||] by repeated apply + norm.
/// Norms of the orbit elements are computed in parallel; the result is
/// bitwise identical to orbit_norms_serial.
std::vector<double> orbit_norms(const AffineSymbol& phi, const KernelElement& f,
                                long N, long cap = orbit_cap_default);

/// Single-threaded reference implementation of orbit_norms.
std::vector<double> orbit_norms_serial(const AffineSymbol& phi, const KernelElement& f,
                                       long N, long cap = orbit_cap_default);

/// Closed form for ||C_phi^n k_w||. With psi the adjoint symbol map,
/// C_phi^n k_w = a^{-n} k_{psi^n(w)}, so the norm is a^{-n/2}/sqrt(2*D) with
///   D = Re(w) + n*Re(b)                      (a = 1)
///   D = Re(w) + (1 - a^n)/(1 - a) * Re(b)    (a != 1).
double orbit_norm_kernel_closed(const AffineSymbol& phi, cplx w, long n);

/// Lower bound sqrt(2*Re z)*a^{-n/2}*|f(z + (1 - a^n)/(1 - a)*b)| for the
/// orbit norm ||C_phi^n f||, valid for a in (0,1). The fixed base point of
/// the public contract is z = 1.
double expansivity_lower_bound(const AffineSymbol& phi, const KernelElement& f, long n);
double expansivity_lower_bound_at(const AffineSymbol& phi, const KernelElement& f,
                                  long n, double base);

/// Checks the local bound |f(w)| <= ||f||/sqrt(2*Re w) + 1e-12.
bool pointwise_bound_check(const KernelElement& f, cplx w);

} // namespace cphardy
