#include "spingate/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace spingate {

namespace {

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
    if (a.dim() != b.dim())
        throw std::invalid_argument(std::string(op) + ": dimension mismatch (" +
                                    std::to_string(a.dim()) + " vs " + std::to_string(b.dim()) +
                                    ")");
}

}  // namespace

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

bool ComplexMatrix::all_finite() const {
    for (const cplx& z : data_)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
}

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b, "multiply");
    const std::size_t n = a.dim();
    ComplexMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const cplx aik = a(i, k);
            if (aik == cplx{}) continue;
            for (std::size_t j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
        }
    }
    return out;
}

ComplexMatrix adjoint(const ComplexMatrix& m) {
    const std::size_t n = m.dim();
    ComplexMatrix out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = std::conj(m(j, i));
    return out;
}

ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b, "add");
    const std::size_t n = a.dim();
    ComplexMatrix out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = a(i, j) + b(i, j);
    return out;
}

ComplexMatrix subtract(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b, "subtract");
    const std::size_t n = a.dim();
    ComplexMatrix out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = a(i, j) - b(i, j);
    return out;
}

ComplexMatrix scale(const cplx& factor, const ComplexMatrix& m) {
    const std::size_t n = m.dim();
    ComplexMatrix out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = factor * m(i, j);
    return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    const std::size_t na = a.dim(), nb = b.dim();
    ComplexMatrix out(na * nb);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j) {
            const cplx aij = a(i, j);
            if (aij == cplx{}) continue;
            for (std::size_t r = 0; r < nb; ++r)
                for (std::size_t s = 0; s < nb; ++s) out(i * nb + r, j * nb + s) = aij * b(r, s);
        }
    return out;
}

double frobenius_norm(const ComplexMatrix& m) {
    double sum = 0.0;
    for (const cplx& z : m.data()) sum += std::norm(z);
    return std::sqrt(sum);
}

double hermiticity_defect(const ComplexMatrix& m) {
    return frobenius_norm(subtract(m, adjoint(m))) / std::max(1.0, frobenius_norm(m));
}

double unitarity_defect(const ComplexMatrix& u) {
    return frobenius_norm(
        subtract(multiply(adjoint(u), u), ComplexMatrix::identity(u.dim())));
}

double max_abs_difference(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b, "max_abs_difference");
    double worst = 0.0;
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
    return worst;
}

namespace {

double off_diagonal_norm(const ComplexMatrix& m) {
    double sum = 0.0;
    const std::size_t n = m.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) sum += std::norm(m(i, j));
    return std::sqrt(sum);
}

constexpr int kMaxSweeps = 100;

}  // namespace

EigenDecomposition hermitian_eigen(const ComplexMatrix& m, double tol) {
    const std::size_t n = m.dim();
    if (n == 0) throw std::invalid_argument("hermitian_eigen: empty matrix");
    if (!m.all_finite()) throw std::invalid_argument("hermitian_eigen: non-finite entries");

    const double defect = hermiticity_defect(m);
    if (defect > tol)
        throw hermiticity_error("hermitian_eigen: input is not Hermitian (relative defect " +
                                std::to_string(defect) + " > tol " + std::to_string(tol) + ")");

    ComplexMatrix w = m;
    // Symmetrize so accumulated rotations act on an exactly Hermitian matrix.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const cplx avg = 0.5 * (w(i, j) + std::conj(w(j, i)));
            w(i, j) = avg;
            w(j, i) = std::conj(avg);
        }
        w(i, i) = cplx(w(i, i).real(), 0.0);
    }

    ComplexMatrix v = ComplexMatrix::identity(n);
    const double stop = 1e-14 * std::max(1.0, frobenius_norm(w));
    const double skip = stop / (2.0 * static_cast<double>(n) * static_cast<double>(n));

    bool converged = off_diagonal_norm(w) <= stop;
    for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cplx beta = w(p, q);
                const double r = std::abs(beta);
                if (r <= skip) continue;

                const cplx f = beta / r;  // unit phase of the pivot
                const double alpha = w(p, p).real();
                const double gamma = w(q, q).real();
                const double tau = (gamma - alpha) / (2.0 * r);
                const double t =
                    (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const cplx fc = std::conj(f);

                // W <- W G, columns p and q
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx wp = w(k, p), wq = w(k, q);
                    w(k, p) = c * wp - s * fc * wq;
                    w(k, q) = s * wp + c * fc * wq;
                }
                // W <- G^dagger W, rows p and q
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx wp = w(p, k), wq = w(q, k);
                    w(p, k) = c * wp - s * f * wq;
                    w(q, k) = s * wp + c * f * wq;
                }
                w(p, q) = 0.0;
                w(q, p) = 0.0;
                w(p, p) = cplx(w(p, p).real(), 0.0);
                w(q, q) = cplx(w(q, q).real(), 0.0);
                // V <- V G
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx vp = v(k, p), vq = v(k, q);
                    v(k, p) = c * vp - s * fc * vq;
                    v(k, q) = s * vp + c * fc * vq;
                }
            }
        }
        converged = off_diagonal_norm(w) <= stop;
    }
    if (!converged)
        throw convergence_error("hermitian_eigen: no convergence within " +
                                std::to_string(kMaxSweeps) + " sweeps");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return w(a, a).real() < w(b, b).real();
    });

    EigenDecomposition out;
    out.eigenvalues.resize(n);
    out.eigenvectors = ComplexMatrix(n);
    for (std::size_t k = 0; k < n; ++k) {
        out.eigenvalues[k] = w(order[k], order[k]).real();
        for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = v(i, order[k]);
    }
    return out;
}

ComplexMatrix unitary_exponential(const ComplexMatrix& h, double duration,
                                  double hermiticity_tol) {
    const EigenDecomposition eig = hermitian_eigen(h, hermiticity_tol);
    const std::size_t n = h.dim();
    std::vector<cplx> phases(n);
    for (std::size_t k = 0; k < n; ++k)
        phases[k] = std::exp(cplx(0.0, -eig.eigenvalues[k] * duration));

    const ComplexMatrix& v = eig.eigenvectors;
    ComplexMatrix u(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            cplx sum = 0.0;
            for (std::size_t k = 0; k < n; ++k) sum += v(i, k) * phases[k] * std::conj(v(j, k));
            u(i, j) = sum;
        }
    return u;
}

}  // namespace spingate
