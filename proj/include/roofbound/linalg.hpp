#pragma once

#include <complex>
#include <vector>

namespace roofbound {

using cplx = std::complex<double>;

/// Dense square complex matrix, row-major.
class CMatrix {
public:
    CMatrix() = default;
    explicit CMatrix(int dim) : n_(dim), a_(static_cast<size_t>(dim) * dim) {}

    static CMatrix identity(int dim);

    int dim() const { return n_; }
    cplx& operator()(int r, int c) { return a_[static_cast<size_t>(r) * n_ + c]; }
    const cplx& operator()(int r, int c) const { return a_[static_cast<size_t>(r) * n_ + c]; }

    CMatrix adjoint() const;
    CMatrix conj() const;
    CMatrix operator*(const CMatrix& rhs) const;
    CMatrix& operator+=(const CMatrix& rhs);
    CMatrix& operator*=(cplx s);

    cplx trace() const;
    double max_abs() const;
    /// max_{r,c} |a(r,c) - conj(a(c,r))|
    double hermiticity_defect() const;
    /// max_{r,c} |a(r,c) + a(c,r)|
    double antisymmetry_defect() const;

private:
    int n_ = 0;
    std::vector<cplx> a_;
};

/// Eigenvalues ascending; `vectors` holds the orthonormal eigenvectors as columns.
struct HermEig {
    std::vector<double> values;
    CMatrix vectors;
};

/// Cyclic Jacobi eigendecomposition of a Hermitian matrix. Deterministic
/// (fixed rotation order), intended for the small dense matrices used here.
/// Throws NotHermitian when the relative asymmetry exceeds `herm_tol`.
HermEig eig_hermitian(const CMatrix& m, double herm_tol = 1e-9);

/// Pfaffian of an antisymmetric even-dimensional matrix via Gaussian
/// elimination with partial pivoting (sign-tracked row/column swaps).
cplx pfaffian(const CMatrix& a);

/// Determinant by LU with partial pivoting (used to cross-check pf^2 = det).
cplx determinant(CMatrix a);

} // namespace roofbound
