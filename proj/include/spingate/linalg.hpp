#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "spingate/errors.hpp"

namespace spingate {

using cplx = std::complex<double>;

// Dense square complex matrix, row-major storage.
class ComplexMatrix {
public:
    ComplexMatrix() : dim_(0) {}
    explicit ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

    static ComplexMatrix identity(std::size_t dim);

    std::size_t dim() const noexcept { return dim_; }

    cplx& operator()(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }
    const cplx& operator()(std::size_t row, std::size_t col) const {
        return data_[row * dim_ + col];
    }

    const std::vector<cplx>& data() const noexcept { return data_; }

    bool all_finite() const;

private:
    std::size_t dim_;
    std::vector<cplx> data_;
};

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix adjoint(const ComplexMatrix& m);
ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix subtract(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix scale(const cplx& factor, const ComplexMatrix& m);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

double frobenius_norm(const ComplexMatrix& m);

// ||m - m^dagger||_F / max(1, ||m||_F)
double hermiticity_defect(const ComplexMatrix& m);

// ||u^dagger u - I||_F
double unitarity_defect(const ComplexMatrix& u);

// Largest |a(i,j) - b(i,j)| over all entries.
double max_abs_difference(const ComplexMatrix& a, const ComplexMatrix& b);

struct EigenDecomposition {
    std::vector<double> eigenvalues;  // ascending
    ComplexMatrix eigenvectors;       // column k pairs with eigenvalues[k]
};

// Hermitian eigendecomposition by cyclic complex Jacobi rotations.
// Throws hermiticity_error if ||m - m^dagger||_F > tol * max(1, ||m||_F),
// convergence_error if the off-diagonal norm is not annihilated within the sweep cap.
EigenDecomposition hermitian_eigen(const ComplexMatrix& m, double tol = 1e-12);

// U = V exp(-i Lambda t) V^dagger for Hermitian h.
ComplexMatrix unitary_exponential(const ComplexMatrix& h, double duration,
                                  double hermiticity_tol = 1e-12);

}  // namespace spingate
