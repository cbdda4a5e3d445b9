#include "qchan/numerics.hpp"

#include "qchan/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace qchan {

namespace {

bool valid_dim(std::size_t d) { return d == 2 || d == 3 || d == 4 || d == 8; }

void require_dim(std::size_t d) {
    if (!valid_dim(d))
        throw Error(ErrorKind::BadDimension, "matrix dimension " + std::to_string(d) + " not in {2,3,4,8}");
}

void require_same(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim())
        throw Error(ErrorKind::BadDimension, "dimension mismatch " + std::to_string(a.dim()) + " vs " +
                                                 std::to_string(b.dim()));
}

} // namespace

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NotPSD: return "NotPSD";
    case ErrorKind::TraceNotOne: return "TraceNotOne";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::ParamOutOfRange: return "ParamOutOfRange";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::NonRealCorrelation: return "NonRealCorrelation";
    case ErrorKind::BadDimension: return "BadDimension";
    case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what, double residual)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind), residual_(residual) {}

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim) { require_dim(dim); }

ComplexMatrix::ComplexMatrix(std::size_t dim, std::span<const cplx> row_major) : dim_(dim) {
    require_dim(dim);
    if (row_major.size() != dim * dim)
        throw Error(ErrorKind::BadDimension,
                    "expected " + std::to_string(dim * dim) + " entries, got " + std::to_string(row_major.size()));
    std::copy(row_major.begin(), row_major.end(), data_.begin());
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::initializer_list<double> diag) {
    ComplexMatrix m(diag.size());
    std::size_t i = 0;
    for (double d : diag) {
        m(i, i) = d;
        ++i;
    }
    return m;
}

ComplexMatrix ComplexMatrix::outer(std::span<const cplx> ket) {
    ComplexMatrix m(ket.size());
    for (std::size_t r = 0; r < ket.size(); ++r)
        for (std::size_t c = 0; c < ket.size(); ++c) m(r, c) = ket[r] * std::conj(ket[c]);
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix m(dim_);
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t c = 0; c < dim_; ++c) m(r, c) = std::conj((*this)(c, r));
    return m;
}

ComplexMatrix ComplexMatrix::conj() const {
    ComplexMatrix m(dim_);
    for (std::size_t i = 0; i < dim_ * dim_; ++i) m.data_[i] = std::conj(data_[i]);
    return m;
}

cplx ComplexMatrix::trace() const {
    cplx t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (std::size_t i = 0; i < dim_ * dim_; ++i) s += std::norm(data_[i]);
    return std::sqrt(s);
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (std::size_t i = 0; i < dim_ * dim_; ++i) m = std::max(m, std::abs(data_[i]));
    return m;
}

double ComplexMatrix::hermiticity_residual() const {
    double m = 0.0;
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t c = r; c < dim_; ++c)
            m = std::max(m, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
    return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
    require_same(*this, o);
    for (std::size_t i = 0; i < dim_ * dim_; ++i) data_[i] += o.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
    require_same(*this, o);
    for (std::size_t i = 0; i < dim_ * dim_; ++i) data_[i] -= o.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s) {
    for (std::size_t i = 0; i < dim_ * dim_; ++i) data_[i] *= s;
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same(a, b);
    const std::size_t n = a.dim();
    ComplexMatrix m(n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t k = 0; k < n; ++k) {
            const cplx ark = a(r, k);
            if (ark == cplx{}) continue;
            for (std::size_t c = 0; c < n; ++c) m(r, c) += ark * b(k, c);
        }
    return m;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    const std::size_t na = a.dim(), nb = b.dim();
    ComplexMatrix m(na * nb);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j)
            for (std::size_t k = 0; k < nb; ++k)
                for (std::size_t l = 0; l < nb; ++l) m(i * nb + k, j * nb + l) = a(i, j) * b(k, l);
    return m;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) { return (a - b).max_abs(); }

cplx trace_of_product(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same(a, b);
    cplx t = 0.0;
    for (std::size_t r = 0; r < a.dim(); ++r)
        for (std::size_t k = 0; k < a.dim(); ++k) t += a(r, k) * b(k, r);
    return t;
}

namespace pauli {
ComplexMatrix id() { return ComplexMatrix::identity(2); }
ComplexMatrix x() {
    const cplx e[] = {0.0, 1.0, 1.0, 0.0};
    return ComplexMatrix(2, e);
}
ComplexMatrix y() {
    const cplx e[] = {0.0, cplx(0.0, -1.0), cplx(0.0, 1.0), 0.0};
    return ComplexMatrix(2, e);
}
ComplexMatrix z() {
    const cplx e[] = {1.0, 0.0, 0.0, -1.0};
    return ComplexMatrix(2, e);
}
ComplexMatrix by_index(int k) {
    switch (k) {
    case 0: return x();
    case 1: return y();
    case 2: return z();
    default: throw Error(ErrorKind::BadDimension, "pauli index " + std::to_string(k));
    }
}
} // namespace pauli

double zero_eigenvalue_threshold(double frobenius_norm) {
    return 64.0 * std::numeric_limits<double>::epsilon() * frobenius_norm;
}

Spectrum herm_eigen(const ComplexMatrix& h, double tol) {
    const double herm_res = h.hermiticity_residual();
    if (herm_res > tol)
        throw Error(ErrorKind::NotHermitian, "max |H_ij - conj(H_ji)| = " + std::to_string(herm_res), herm_res);

    const std::size_t n = h.dim();
    // Work on the exactly-Hermitian part so that tolerated asymmetry does not leak.
    ComplexMatrix a(n);
    for (std::size_t r = 0; r < n; ++r) {
        a(r, r) = h(r, r).real();
        for (std::size_t c = r + 1; c < n; ++c) {
            const cplx v = 0.5 * (h(r, c) + std::conj(h(c, r)));
            a(r, c) = v;
            a(c, r) = std::conj(v);
        }
    }
    ComplexMatrix w = ComplexMatrix::identity(n);

    const double norm = a.frobenius_norm();
    const double threshold = jacobi_rel_threshold * norm;

    auto off_norm = [&] {
        double s = 0.0;
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                if (r != c) s += std::norm(a(r, c));
        return std::sqrt(s);
    };

    int sweep = 0;
    for (;; ++sweep) {
        const double off = off_norm();
        if (off == 0.0 || off <= threshold) break;
        if (sweep >= jacobi_max_sweeps)
            throw Error(ErrorKind::NoConvergence,
                        "Jacobi did not converge in " + std::to_string(jacobi_max_sweeps) + " sweeps", off);

        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double g = std::abs(a(p, q));
                if (g == 0.0) continue;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                if (sweep > 3 && std::abs(app) + 100.0 * g == std::abs(app) &&
                    std::abs(aqq) + 100.0 * g == std::abs(aqq)) {
                    a(p, q) = a(q, p) = 0.0;
                    continue;
                }
                const cplx phase = a(p, q) / g;
                const double theta = (aqq - app) / (2.0 * g);
                double t;
                if (std::abs(theta) > 1e150)
                    t = 0.5 / theta;
                else
                    t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                // V = diag(1, conj(phase)) * [[c, s], [-s, c]] restricted to (p, q).
                const cplx vpp = c, vpq = s, vqp = -s * std::conj(phase), vqq = c * std::conj(phase);

                for (std::size_t k = 0; k < n; ++k) {
                    const cplx akp = a(k, p), akq = a(k, q);
                    a(k, p) = akp * vpp + akq * vqp;
                    a(k, q) = akp * vpq + akq * vqq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx apk = a(p, k), aqk = a(q, k);
                    a(p, k) = std::conj(vpp) * apk + std::conj(vqp) * aqk;
                    a(q, k) = std::conj(vpq) * apk + std::conj(vqq) * aqk;
                }
                a(p, p) = app - t * g;
                a(q, q) = aqq + t * g;
                a(p, q) = a(q, p) = 0.0;

                for (std::size_t k = 0; k < n; ++k) {
                    const cplx wkp = w(k, p), wkq = w(k, q);
                    w(k, p) = wkp * vpp + wkq * vqp;
                    w(k, q) = wkp * vpq + wkq * vqq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

    Spectrum out;
    out.sweeps = sweep;
    out.eigenvalues.reserve(n);
    out.eigenvectors.reserve(n);
    for (std::size_t i : order) {
        out.eigenvalues.push_back(a(i, i).real());
        std::vector<cplx> v(n);
        for (std::size_t k = 0; k < n; ++k) v[k] = w(k, i);
        out.eigenvectors.push_back(std::move(v));
    }
    return out;
}

std::vector<double> herm_eigenvalues(const ComplexMatrix& h, double tol) { return herm_eigen(h, tol).eigenvalues; }

ComplexMatrix psd_sqrt(const ComplexMatrix& h, double tol) {
    const Spectrum sp = herm_eigen(h, tol);
    const double snap = zero_eigenvalue_threshold(h.frobenius_norm());
    const std::size_t n = h.dim();
    ComplexMatrix r(n);
    for (std::size_t i = 0; i < n; ++i) {
        double lam = sp.eigenvalues[i];
        if (lam < -tol)
            throw Error(ErrorKind::NotPSD, "eigenvalue " + std::to_string(lam) + " below -" + std::to_string(tol),
                        lam);
        if (lam <= snap) continue;
        const double root = std::sqrt(lam);
        const auto& v = sp.eigenvectors[i];
        for (std::size_t rr = 0; rr < n; ++rr)
            for (std::size_t cc = 0; cc < n; ++cc) r(rr, cc) += root * v[rr] * std::conj(v[cc]);
    }
    return r;
}

} // namespace qchan
