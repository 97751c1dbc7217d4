#pragma once

#include <complex>
#include <vector>

#include "cphardy/affine_symbol.hpp"

namespace cphardy {

/// Orthonormal Laguerre basis of L^2(0, inf):
///   l_n(t) = sqrt(2c) * exp(-c t) * L_n(2 c t).
/// Under the Laplace identification f(w) = int_0^inf F(t) e^{-w t} dt the
/// Hardy space is unitarily equivalent to L^2(0, inf) and C_phi acts as
///   (T F)(s) = (1/a) * exp(-b s / a) * F(s / a).
struct LaguerreBasis {
    double scale; // c > 0
    int size;     // N >= 1

    LaguerreBasis(double c, int n);
};

/// N x N truncation of the time-domain operator in the Laguerre basis,
/// entries[m][n] = <T l_n, l_m>.
struct TruncatedOperator {
    LaguerreBasis basis;
    AffineSymbol symbol;
    std::vector<cplx> entries; // row-major, size N*N
    int quadrature_nodes;      // node count at convergence

    cplx at(int m, int n) const { return entries[static_cast<std::size_t>(m) * basis.size + n]; }
};

/// Expansion coefficients of the time representative exp(-conj(beta) t) of
/// k_beta: coeff_n = sqrt(2c) * (conj(beta) - c)^n / (conj(beta) + c)^{n+1}.
/// Partial sums of squared moduli increase to ||k_beta||^2 = 1/(2 Re beta).
std::vector<cplx> kernel_time_coeffs(cplx beta, const LaguerreBasis& basis);

/// Assembles the truncation matrix by composite Gauss-Legendre quadrature
/// (substitution s = y^2 with truncation past the Laguerre turning points),
/// doubling the panel count until no entry moves by more than 1e-10.
/// Raises numerical_error if two further doublings fail to converge.
/// Row assembly runs in parallel; bitwise identical to build_matrix_serial.
TruncatedOperator build_matrix(const AffineSymbol& phi, const LaguerreBasis& basis);

/// Single-threaded reference implementation of build_matrix.
TruncatedOperator build_matrix_serial(const AffineSymbol& phi, const LaguerreBasis& basis);

struct NormEstimate {
    double value;
    bool converged;
    int iterations;
};

/// Largest singular value of the truncation via power iteration on T*T,
/// stopping when successive estimates differ by < 1e-13 (at most 10^4
/// iterations; non-convergence is reported through the flag, with the last
/// estimate).
NormEstimate norm_estimate(const TruncatedOperator& op);

/// Eigenvalues of the truncation matrix (N <= 256) via unitary Hessenberg
/// reduction and shifted QR iteration. These are truncation eigenvalues:
/// spectrally faithful for the Hermitian cases, containment-only otherwise.
std::vector<cplx> spectrum_estimate(const TruncatedOperator& op);

/// Dense complex eigenvalue solver used by spectrum_estimate (exposed for
/// direct testing). Row-major n x n input.
std::vector<cplx> eigenvalues_dense(std::vector<cplx> a, int n);

} // namespace cphardy
