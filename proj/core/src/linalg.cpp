#include "kklo/linalg.hpp"

#include "kklo/errors.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace kklo {

namespace {
constexpr double kPivotTol = 1e-12;
constexpr double kSpectralRelTol = 1e-9;
constexpr int kSpectralMaxIter = 10000;
}  // namespace

LuFactors lu_factor(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("lu_factor: matrix must be square");
    const std::size_t n = m.rows();
    LuFactors f{m, std::vector<std::size_t>(n)};
    for (std::size_t i = 0; i < n; ++i) f.perm[i] = i;

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        double best = std::fabs(f.lu(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            const double v = std::fabs(f.lu(i, k));
            if (v > best) {
                best = v;
                piv = i;
            }
        }
        if (best < kPivotTol) {
            throw NumericError("lu_factor: singular or ill-conditioned matrix (pivot " +
                               std::to_string(best) + " below 1e-12 at column " +
                               std::to_string(k) + ")");
        }
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(f.lu(k, j), f.lu(piv, j));
            std::swap(f.perm[k], f.perm[piv]);
        }
        const double pivot = f.lu(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const double l = f.lu(i, k) / pivot;
            f.lu(i, k) = l;
            for (std::size_t j = k + 1; j < n; ++j) f.lu(i, j) -= l * f.lu(k, j);
        }
    }
    return f;
}

Vec lu_solve(const LuFactors& f, const Vec& rhs) {
    const std::size_t n = f.lu.rows();
    if (rhs.size() != n) throw std::invalid_argument("lu_solve: rhs size mismatch");
    Vec x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = rhs[f.perm[i]];
    // Forward substitution (unit lower triangle).
    for (std::size_t i = 1; i < n; ++i) {
        double s = x[i];
        for (std::size_t j = 0; j < i; ++j) s -= f.lu(i, j) * x[j];
        x[i] = s;
    }
    // Back substitution.
    for (std::size_t ii = n; ii-- > 0;) {
        double s = x[ii];
        for (std::size_t j = ii + 1; j < n; ++j) s -= f.lu(ii, j) * x[j];
        x[ii] = s / f.lu(ii, ii);
    }
    return x;
}

Matrix mat_inverse(const Matrix& m) {
    const LuFactors f = lu_factor(m);
    const std::size_t n = m.rows();
    Matrix inv(n, n);
    Vec e(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        e[j] = 1.0;
        const Vec col = lu_solve(f, e);
        for (std::size_t i = 0; i < n; ++i) inv(i, j) = col[i];
        e[j] = 0.0;
    }
    return inv;
}

double spectral_norm(const Matrix& m) {
    if (m.rows() == 0 || m.cols() == 0) {
        throw std::invalid_argument("spectral_norm: matrix must be nonempty");
    }
    if (m.max_abs() == 0.0) return 0.0;

    // Iterate on the smaller Gram matrix; its top eigenvalue is sigma_max^2.
    const bool use_mtm = m.cols() <= m.rows();
    const Matrix b = use_mtm ? m.transpose() * m : m * m.transpose();
    const std::size_t k = b.rows();

    Vec v(k, 1.0 / std::sqrt(static_cast<double>(k)));
    double lambda_prev = -1.0;
    int restarts = 0;
    for (int iter = 0; iter < kSpectralMaxIter; ++iter) {
        Vec w = b * v;
        const double wn = norm2(w);
        if (wn == 0.0) {
            // Start vector landed in the null space; deterministic restart.
            ++restarts;
            for (std::size_t i = 0; i < k; ++i) {
                v[i] += 1e-3 * static_cast<double>((i * 2654435761ULL + restarts) % 17 + 1);
            }
            const double vn = norm2(v);
            for (double& c : v) c /= vn;
            lambda_prev = -1.0;
            continue;
        }
        const double lambda = dot(v, w);  // Rayleigh quotient (v is unit)
        for (std::size_t i = 0; i < k; ++i) v[i] = w[i] / wn;
        if (lambda_prev >= 0.0 &&
            std::fabs(lambda - lambda_prev) <= kSpectralRelTol * std::fabs(lambda)) {
            return std::sqrt(lambda);
        }
        lambda_prev = lambda;
    }
    throw NumericError("spectral_norm: power iteration did not reach relative tolerance 1e-9 "
                       "within 10000 iterations");
}

Matrix solve_lyapunov(const Matrix& a, const Matrix& q) {
    if (a.rows() != a.cols()) throw std::invalid_argument("solve_lyapunov: a must be square");
    if (q.rows() != q.cols() || q.rows() != a.rows())
        throw std::invalid_argument("solve_lyapunov: q shape must match a");
    const std::size_t n = a.rows();
    const double qscale = q.max_abs();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::fabs(q(i, j) - q(j, i)) > 1e-9 * std::max(1.0, qscale))
                throw std::invalid_argument("solve_lyapunov: q must be symmetric");

    // Row (i,j) of the vectorized system encodes (A P)_ij + (P A^T)_ij = -q_ij.
    Matrix big(n * n, n * n);
    Vec rhs(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t r = i * n + j;
            for (std::size_t t = 0; t < n; ++t) {
                big(r, t * n + j) += a(i, t);
                big(r, i * n + t) += a(j, t);
            }
            rhs[r] = -q(i, j);
        }
    }

    Vec p;
    try {
        p = lu_solve(lu_factor(big), rhs);
    } catch (const NumericError&) {
        throw NumericError("solve_lyapunov: vectorized system is numerically singular "
                           "(a is likely not Hurwitz)");
    }

    Matrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = p[i * n + j];
    // Symmetrize: the exact solution is symmetric, the solve is only
    // symmetric to rounding.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double s = 0.5 * (out(i, j) + out(j, i));
            out(i, j) = s;
            out(j, i) = s;
        }
    }
    return out;
}

namespace {

// Characteristic polynomial coefficients c[0..n] of det(sI - A),
// c[0] = 1 (leading), via the Faddeev-LeVerrier recursion.
Vec char_poly(const Matrix& a) {
    const std::size_t n = a.rows();
    Vec c(n + 1, 0.0);
    c[0] = 1.0;
    Matrix m = Matrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        m = a * m;
        double tr = 0.0;
        for (std::size_t i = 0; i < n; ++i) tr += m(i, i);
        c[k] = -tr / static_cast<double>(k);
        for (std::size_t i = 0; i < n; ++i) m(i, i) += c[k];
    }
    return c;
}

}  // namespace

bool is_hurwitz(const Matrix& a) {
    if (a.rows() != a.cols() || a.rows() == 0)
        throw std::invalid_argument("is_hurwitz: matrix must be square and nonempty");
    const std::size_t n = a.rows();
    const Vec c = char_poly(a);
    // Necessary: all coefficients strictly positive.
    for (double ci : c)
        if (!(ci > 0.0)) return false;
    if (n <= 2) return true;  // positivity is also sufficient for n <= 2

    // Routh array; every first-column entry must be strictly positive.
    const std::size_t w = n / 2 + 1;
    Vec r0(w + 1, 0.0), r1(w + 1, 0.0);
    for (std::size_t i = 0; i <= n; i += 2) r0[i / 2] = c[i];
    for (std::size_t i = 1; i <= n; i += 2) r1[(i - 1) / 2] = c[i];
    for (std::size_t r = 2; r <= n; ++r) {
        if (!(r1[0] > 0.0)) return false;
        Vec next(w + 1, 0.0);
        for (std::size_t j = 0; j < w; ++j) {
            next[j] = (r1[0] * r0[j + 1] - r0[0] * r1[j + 1]) / r1[0];
        }
        r0 = r1;
        r1 = next;
    }
    return r1[0] > 0.0;
}

}  // namespace kklo
