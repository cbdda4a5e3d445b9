#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace qchan {

using cplx = std::complex<double>;

/// Dense row-major complex matrix of dimension 2, 3, 4 or 8.
///
/// Storage is inline (no heap) so matrices are cheap value types. Hermiticity,
/// trace and positivity are not invariants of this type; downstream modules
/// check them.
class ComplexMatrix {
public:
    static constexpr std::size_t max_dim = 8;

    ComplexMatrix() = default;
    explicit ComplexMatrix(std::size_t dim);
    ComplexMatrix(std::size_t dim, std::span<const cplx> row_major);

    static ComplexMatrix identity(std::size_t dim);
    static ComplexMatrix diagonal(std::initializer_list<double> diag);
    static ComplexMatrix outer(std::span<const cplx> ket); // |v><v|

    std::size_t dim() const noexcept { return dim_; }

    cplx& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * dim_ + c]; }
    const cplx& operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * dim_ + c]; }

    std::span<const cplx> entries() const noexcept { return {data_.data(), dim_ * dim_}; }

    ComplexMatrix adjoint() const;
    ComplexMatrix conj() const;
    cplx trace() const;
    double frobenius_norm() const;
    double max_abs() const;
    /// max |H_ij - conj(H_ji)|
    double hermiticity_residual() const;

    ComplexMatrix& operator+=(const ComplexMatrix& o);
    ComplexMatrix& operator-=(const ComplexMatrix& o);
    ComplexMatrix& operator*=(cplx s);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(ComplexMatrix a, cplx s) { return a *= s; }
    friend ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

private:
    std::size_t dim_ = 0;
    std::array<cplx, max_dim * max_dim> data_{};
};

/// Kronecker product; result dimension must stay within {2,3,4,8}.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// max_ij |a_ij - b_ij|; dimensions must agree.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// Tr(a b) without forming the product.
cplx trace_of_product(const ComplexMatrix& a, const ComplexMatrix& b);

namespace pauli {
ComplexMatrix id();
ComplexMatrix x();
ComplexMatrix y();
ComplexMatrix z();
/// index 0..2 -> x, y, z
ComplexMatrix by_index(int k);
} // namespace pauli

struct Spectrum {
    std::vector<double> eigenvalues;   // ascending
    std::vector<std::vector<cplx>> eigenvectors; // eigenvectors[i] pairs with eigenvalues[i]
    int sweeps = 0;
};

inline constexpr int jacobi_max_sweeps = 100;
inline constexpr double jacobi_rel_threshold = 1e-13;
inline constexpr double default_psd_tol = 1e-10;

/// Cyclic complex Jacobi eigensolver for a Hermitian matrix.
/// Throws Error(NotHermitian) when the input is not Hermitian within tol and
/// Error(NoConvergence) when jacobi_max_sweeps sweeps do not bring the
/// off-diagonal Frobenius norm below jacobi_rel_threshold * ||H||_F.
Spectrum herm_eigen(const ComplexMatrix& h, double tol = 1e-10);

/// Eigenvalues only, ascending.
std::vector<double> herm_eigenvalues(const ComplexMatrix& h, double tol = 1e-10);

/// Hermitian PSD square root. Eigenvalues in [-tol, 0) are clamped to zero;
/// anything below -tol throws Error(NotPSD).
ComplexMatrix psd_sqrt(const ComplexMatrix& h, double tol = default_psd_tol);

/// Eigenvalues at or below this magnitude are indistinguishable from zero for
/// a Hermitian matrix of the given Frobenius norm.
double zero_eigenvalue_threshold(double frobenius_norm);

} // namespace qchan
