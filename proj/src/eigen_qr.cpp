#include "cphardy/laguerre_model.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "cphardy/errors.hpp"

namespace cphardy {

namespace {

struct Givens {
    double c;
    cplx s;
};

// Rotation [c, s; -conj(s), c] mapping (f, g) to (r, 0).
Givens make_givens(cplx f, cplx g) {
    const double af = std::abs(f), ag = std::abs(g);
    if (ag == 0.0) return {1.0, cplx(0.0, 0.0)};
    const double d = std::hypot(af, ag);
    if (af == 0.0) return {0.0, std::conj(g) / d};
    const cplx sign_f = f / af;
    return {af / d, sign_f * std::conj(g) / d};
}

class Matrix {
public:
    Matrix(std::vector<cplx> data, int n) : a_(std::move(data)), n_(n) {}
    cplx& at(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    const cplx& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

    void rotate_rows(int p, int q, const Givens& g, int col_lo, int col_hi) {
        for (int j = col_lo; j < col_hi; ++j) {
            const cplx u = at(p, j), v = at(q, j);
            at(p, j) = g.c * u + g.s * v;
            at(q, j) = -std::conj(g.s) * u + g.c * v;
        }
    }

    // Right-multiply columns p, q by the adjoint rotation.
    void rotate_cols(int p, int q, const Givens& g, int row_lo, int row_hi) {
        for (int i = row_lo; i < row_hi; ++i) {
            const cplx u = at(i, p), v = at(i, q);
            at(i, p) = g.c * u + std::conj(g.s) * v;
            at(i, q) = -g.s * u + g.c * v;
        }
    }

private:
    std::vector<cplx> a_;
    int n_;
};

// Eigenvalues of [[a, b], [c, d]]: mean +- sqrt(((a-d)/2)^2 + b c).
void eig2(cplx a, cplx b, cplx c, cplx d, cplx& l1, cplx& l2) {
    const cplx mean = 0.5 * (a + d);
    const cplx disc = std::sqrt(0.25 * (a - d) * (a - d) + b * c);
    l1 = mean + disc;
    l2 = mean - disc;
}

} // namespace

std::vector<cplx> eigenvalues_dense(std::vector<cplx> data, int n) {
    if (n < 1) throw std::invalid_argument("matrix dimension must be positive");
    if (data.size() != static_cast<std::size_t>(n) * n)
        throw std::invalid_argument("matrix data does not match dimension");
    if (n == 1) return {data[0]};

    Matrix h(std::move(data), n);

    // Unitary similarity to upper Hessenberg form by Givens rotations.
    for (int k = 0; k + 2 < n; ++k) {
        for (int i = n - 1; i >= k + 2; --i) {
            if (h.at(i, k) == cplx(0.0, 0.0)) continue;
            const Givens g = make_givens(h.at(i - 1, k), h.at(i, k));
            h.rotate_rows(i - 1, i, g, k, n);
            h.at(i, k) = cplx(0.0, 0.0);
            h.rotate_cols(i - 1, i, g, 0, n);
        }
    }

    const double eps = std::numeric_limits<double>::epsilon();
    double hnorm = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = std::max(0, i - 1); j < n; ++j) hnorm += std::abs(h.at(i, j));
    if (hnorm == 0.0) return std::vector<cplx>(static_cast<std::size_t>(n), cplx(0.0, 0.0));

    std::vector<cplx> eig(static_cast<std::size_t>(n));
    int m = n;
    int iter = 0;
    while (m > 0) {
        // Look for a negligible subdiagonal entry.
        int l = m - 1;
        while (l > 0) {
            double s = std::abs(h.at(l - 1, l - 1)) + std::abs(h.at(l, l));
            if (s == 0.0) s = hnorm;
            if (std::abs(h.at(l, l - 1)) <= eps * s) {
                h.at(l, l - 1) = cplx(0.0, 0.0);
                break;
            }
            --l;
        }

        if (l == m - 1) {
            eig[static_cast<std::size_t>(m - 1)] = h.at(m - 1, m - 1);
            --m;
            iter = 0;
            continue;
        }
        if (l == m - 2) {
            cplx l1, l2;
            eig2(h.at(m - 2, m - 2), h.at(m - 2, m - 1), h.at(m - 1, m - 2), h.at(m - 1, m - 1),
                 l1, l2);
            eig[static_cast<std::size_t>(m - 2)] = l1;
            eig[static_cast<std::size_t>(m - 1)] = l2;
            m -= 2;
            iter = 0;
            continue;
        }

        if (++iter > 40)
            throw numerical_error("QR eigenvalue iteration failed to converge");

        // Wilkinson shift from the trailing 2x2 block; occasionally an
        // exceptional shift to break symmetry-induced stalls.
        cplx shift;
        if (iter % 12 == 0) {
            shift = h.at(m - 1, m - 1) +
                    cplx(0.75 * (std::abs(h.at(m - 1, m - 2)) + std::abs(h.at(m - 2, m - 3))), 0.0);
        } else {
            cplx l1, l2;
            eig2(h.at(m - 2, m - 2), h.at(m - 2, m - 1), h.at(m - 1, m - 2), h.at(m - 1, m - 1),
                 l1, l2);
            shift = (std::abs(l1 - h.at(m - 1, m - 1)) < std::abs(l2 - h.at(m - 1, m - 1))) ? l1
                                                                                            : l2;
        }

        // Explicitly shifted QR step on the active window [l, m).
        for (int i = l; i < m; ++i) h.at(i, i) -= shift;
        std::vector<Givens> rots(static_cast<std::size_t>(m - 1 - l));
        for (int k = l; k < m - 1; ++k) {
            const Givens g = make_givens(h.at(k, k), h.at(k + 1, k));
            rots[static_cast<std::size_t>(k - l)] = g;
            h.rotate_rows(k, k + 1, g, k, m);
            h.at(k + 1, k) = cplx(0.0, 0.0);
        }
        for (int k = l; k < m - 1; ++k)
            h.rotate_cols(k, k + 1, rots[static_cast<std::size_t>(k - l)], l,
                          std::min(k + 2, m));
        for (int i = l; i < m; ++i) h.at(i, i) += shift;
    }
    return eig;
}

} // namespace cphardy
