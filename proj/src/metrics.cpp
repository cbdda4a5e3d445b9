#include "qchan/metrics.hpp"

#include "qchan/error.hpp"
#include "qchan/parallel.hpp"
#include "qchan/random.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <string>

namespace qchan {

namespace {

const ComplexMatrix& sigma_yy() {
    static const ComplexMatrix yy = kron(pauli::y(), pauli::y());
    return yy;
}

const std::array<std::array<ComplexMatrix, 3>, 3>& pauli_products() {
    static const auto table = [] {
        std::array<std::array<ComplexMatrix, 3>, 3> t;
        for (int n = 0; n < 3; ++n)
            for (int m = 0; m < 3; ++m) t[n][m] = kron(pauli::by_index(n), pauli::by_index(m));
        return t;
    }();
    return table;
}

double expectation(const DensityMatrix& rho, std::span<const cplx> ket) {
    cplx acc = 0.0;
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) acc += std::conj(ket[r]) * rho(r, c) * ket[c];
    return acc.real();
}

} // namespace

double linear_entropy(const DensityMatrix& rho) {
    double purity = 0.0;
    for (const cplx& e : rho.mat().entries()) purity += std::norm(e);
    return std::clamp(4.0 / 3.0 * (1.0 - purity), 0.0, 1.0);
}

ComplexMatrix spin_flip(const DensityMatrix& rho) { return sigma_yy() * rho.mat().conj() * sigma_yy(); }

ConcurrenceSpectrum concurrence_spectrum(const DensityMatrix& rho) {
    const ComplexMatrix root = psd_sqrt(rho.mat());
    const ComplexMatrix product = root * spin_flip(rho) * root;
    const std::vector<double> ev = herm_eigenvalues(product, density_tol);
    const double snap = zero_eigenvalue_threshold(product.frobenius_norm());

    ConcurrenceSpectrum out;
    for (std::size_t i = 0; i < 4; ++i) {
        const double e = ev[3 - i];
        out.product_eigenvalues[i] = e;
        out.lambdas[i] = e > snap ? std::sqrt(e) : 0.0;
    }
    return out;
}

double concurrence(const DensityMatrix& rho) {
    const auto l = concurrence_spectrum(rho).lambdas;
    return std::max(0.0, l[0] - l[1] - l[2] - l[3]);
}

CorrelationMatrix correlation_matrix(const DensityMatrix& rho) {
    CorrelationMatrix out;
    const auto& products = pauli_products();
    for (int n = 0; n < 3; ++n)
        for (int m = 0; m < 3; ++m) {
            const cplx v = trace_of_product(rho.mat(), products[n][m]);
            if (std::abs(v.imag()) > 1e-10)
                throw Error(ErrorKind::NonRealCorrelation,
                            "Im t_" + std::to_string(n) + std::to_string(m) + " = " + std::to_string(v.imag()),
                            v.imag());
            out.t[n][m] = v.real();
        }

    ComplexMatrix tt(3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double s = 0.0;
            for (int k = 0; k < 3; ++k) s += out.t[k][i] * out.t[k][j];
            tt(i, j) = s;
        }
    const auto ev = herm_eigenvalues(tt);
    for (int i = 0; i < 3; ++i) out.u[i] = std::max(0.0, ev[2 - i]);
    return out;
}

double n_value(const CorrelationMatrix& t) { return std::sqrt(t.u[0]) + std::sqrt(t.u[1]) + std::sqrt(t.u[2]); }

double m_value(const CorrelationMatrix& t) { return t.u[0] + t.u[1]; }

double fidelity_from_n_raw(double n) { return 0.5 * (1.0 + n / 3.0); }

double fidelity_from_n(double n) { return fidelity_from_n_raw(std::max(n, 1.0)); }

std::array<std::array<cplx, 4>, 4> magic_basis() {
    const double s = 1.0 / std::sqrt(2.0);
    const cplx i(0.0, 1.0);
    return {{
        {s, 0.0, 0.0, s},
        {i * s, 0.0, 0.0, -i * s},
        {0.0, i * s, i * s, 0.0},
        {0.0, s, -s, 0.0},
    }};
}

double fully_entangled_fraction(const DensityMatrix& rho) {
    const auto e = magic_basis();
    ComplexMatrix real_part(4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            cplx acc = 0.0;
            for (std::size_t r = 0; r < 4; ++r)
                for (std::size_t c = 0; c < 4; ++c) acc += std::conj(e[i][r]) * rho(r, c) * e[j][c];
            real_part(i, j) = acc.real();
        }
    return herm_eigenvalues(real_part).back();
}

// --- fully entangled fraction sampling oracle ---------------------------------

namespace {

std::array<cplx, 4> locally_rotated_phi_plus(const ComplexMatrix& ua, const ComplexMatrix& ub) {
    // (U_A (x) U_B)(|00> + |11>)/sqrt2 has amplitude (ua(i,0) ub(j,0) + ua(i,1) ub(j,1))/sqrt2 at |ij>.
    const double s = 1.0 / std::sqrt(2.0);
    std::array<cplx, 4> psi{};
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) psi[2 * i + j] = s * (ua(i, 0) * ub(j, 0) + ua(i, 1) * ub(j, 1));
    return psi;
}

ComplexMatrix small_rotation(Rng& rng, double angle) {
    std::normal_distribution<double> normal(0.0, 1.0);
    double n[3];
    double nn = 0.0;
    do {
        nn = 0.0;
        for (double& x : n) {
            x = normal(rng);
            nn += x * x;
        }
    } while (nn < 1e-300);
    const double inv = 1.0 / std::sqrt(nn);
    const double c = std::cos(angle), s = std::sin(angle);
    const cplx i(0.0, 1.0);
    // cos(angle) I - i sin(angle) n.sigma
    const cplx e[] = {c - i * s * n[2] * inv, -i * s * (n[0] - i * n[1]) * inv,
                      -i * s * (n[0] + i * n[1]) * inv, c + i * s * n[2] * inv};
    return ComplexMatrix(2, e);
}

double fef_chunk(const DensityMatrix& rho, std::size_t samples, std::uint64_t seed, std::size_t chunk) {
    const ChunkRange range = chunk_range(samples, kernel_chunks, chunk);
    const std::size_t budget = range.end - range.begin;
    if (budget == 0) return -1.0;
    Rng rng = make_rng(seed, chunk);

    const std::size_t explore = (budget + 1) / 2;
    double best = -1.0;
    ComplexMatrix best_b = pauli::id();
    for (std::size_t k = 0; k < explore; ++k) {
        const ComplexMatrix ua = haar_su2(rng);
        const ComplexMatrix ub = haar_su2(rng);
        // Only U_B U_A^T matters; fold everything into Bob's side.
        ComplexMatrix rel(2);
        for (std::size_t r = 0; r < 2; ++r)
            for (std::size_t c = 0; c < 2; ++c) rel(r, c) = ub(r, 0) * ua(c, 0) + ub(r, 1) * ua(c, 1);
        const auto psi = locally_rotated_phi_plus(pauli::id(), rel);
        const double v = expectation(rho, psi);
        if (v > best) {
            best = v;
            best_b = rel;
        }
    }

    double step = 0.5;
    for (std::size_t k = explore; k < budget; ++k) {
        const ComplexMatrix trial = small_rotation(rng, step) * best_b;
        const double v = expectation(rho, locally_rotated_phi_plus(pauli::id(), trial));
        if (v > best) {
            best = v;
            best_b = trial;
            step = std::min(step * 1.5, 1.0);
        } else {
            step = std::max(step * 0.85, 1e-7);
        }
    }
    return best;
}

} // namespace

double fef_sampling_oracle(const DensityMatrix& rho, std::size_t samples, std::uint64_t seed) {
    if (samples == 0) throw Error(ErrorKind::DomainError, "need at least one sample");
    const auto parts =
        parallel_map<double>(kernel_chunks, [&](std::size_t c) { return fef_chunk(rho, samples, seed, c); });
    return *std::max_element(parts.begin(), parts.end());
}

double serial::fef_sampling_oracle(const DensityMatrix& rho, std::size_t samples, std::uint64_t seed) {
    if (samples == 0) throw Error(ErrorKind::DomainError, "need at least one sample");
    double best = -1.0;
    for (std::size_t c = 0; c < kernel_chunks; ++c) best = std::max(best, fef_chunk(rho, samples, seed, c));
    return best;
}

// --- CHSH maximum oracle ------------------------------------------------------

namespace {

using Vec3 = std::array<double, 3>;

Vec3 unit(double theta, double phi) {
    return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

// Operator expectations <sigma_i (x) sigma_j> recomputed locally so the oracle
// shares nothing with correlation_matrix.
struct ChshObjective {
    std::array<std::array<double, 3>, 3> e{};

    explicit ChshObjective(const DensityMatrix& rho) {
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                const ComplexMatrix op = kron(pauli::by_index(i), pauli::by_index(j));
                ComplexMatrix prod = rho.mat() * op;
                e[i][j] = prod.trace().real();
            }
    }

    // max over unit a of <a.sigma (x) v.sigma> = |E v|
    double best_alice(const Vec3& v) const {
        double s = 0.0;
        for (int i = 0; i < 3; ++i) {
            const double g = e[i][0] * v[0] + e[i][1] * v[1] + e[i][2] * v[2];
            s += g * g;
        }
        return std::sqrt(s);
    }

    // |<B>| maximized over Alice's settings for Bob's settings b, b'.
    double operator()(const std::array<double, 4>& angles) const {
        const Vec3 b = unit(angles[0], angles[1]);
        const Vec3 bp = unit(angles[2], angles[3]);
        const Vec3 sum{b[0] + bp[0], b[1] + bp[1], b[2] + bp[2]};
        const Vec3 diff{b[0] - bp[0], b[1] - bp[1], b[2] - bp[2]};
        return best_alice(sum) + best_alice(diff);
    }
};

struct GridBest {
    double value = -1.0;
    std::array<double, 4> angles{};
};

GridBest chsh_grid_row(const ChshObjective& f, int grid, std::size_t row) {
    const int polar = std::max(grid / 2, 1);
    const double dtheta = std::numbers::pi / polar, dphi = 2.0 * std::numbers::pi / grid;
    const std::size_t ib = row;
    const double tb = (static_cast<int>(ib) / grid + 0.5) * dtheta;
    const double pb = (static_cast<int>(ib) % grid) * dphi;
    GridBest best;
    for (int jt = 0; jt < polar; ++jt)
        for (int jp = 0; jp < grid; ++jp) {
            const std::array<double, 4> x{tb, pb, (jt + 0.5) * dtheta, jp * dphi};
            const double v = f(x);
            if (v > best.value) {
                best.value = v;
                best.angles = x;
            }
        }
    return best;
}

double golden_max(const std::function<double(double)>& g, double lo, double hi, int iters) {
    const double r = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - r * (hi - lo), x2 = lo + r * (hi - lo);
    double f1 = g(x1), f2 = g(x2);
    for (int k = 0; k < iters; ++k) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + r * (hi - lo);
            f2 = g(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - r * (hi - lo);
            f1 = g(x1);
        }
    }
    return f1 > f2 ? x1 : x2;
}

double chsh_refine(const ChshObjective& f, GridBest start, int grid) {
    std::array<double, 4> x = start.angles;
    double best = start.value;
    double width = 2.0 * std::numbers::pi / grid;
    for (int step = 0; step < chsh_refinement_steps; ++step) {
        const int k = step % 4;
        auto along = [&](double v) {
            auto y = x;
            y[k] = v;
            return f(y);
        };
        const double v = golden_max(along, x[k] - width, x[k] + width, 40);
        const double fv = along(v);
        if (fv > best) {
            best = fv;
            x[k] = v;
        }
        if (k == 3) width = std::max(width * 0.7, 1e-6);
    }
    return best;
}

void check_grid(int grid) {
    if (grid < 8) throw Error(ErrorKind::DomainError, "CHSH grid needs at least 8 subdivisions, got " + std::to_string(grid));
}

} // namespace

double chsh_max_oracle(const DensityMatrix& rho, int grid) {
    check_grid(grid);
    const ChshObjective f(rho);
    const std::size_t rows = static_cast<std::size_t>(std::max(grid / 2, 1) * grid);
    const auto parts = parallel_map<GridBest>(rows, [&](std::size_t r) { return chsh_grid_row(f, grid, r); });
    GridBest best;
    for (const auto& p : parts)
        if (p.value > best.value) best = p;
    return chsh_refine(f, best, grid);
}

double serial::chsh_max_oracle(const DensityMatrix& rho, int grid) {
    check_grid(grid);
    const ChshObjective f(rho);
    const std::size_t rows = static_cast<std::size_t>(std::max(grid / 2, 1) * grid);
    GridBest best;
    for (std::size_t r = 0; r < rows; ++r) {
        const GridBest p = chsh_grid_row(f, grid, r);
        if (p.value > best.value) best = p;
    }
    return chsh_refine(f, best, grid);
}

MetricsReport analyze(const DensityMatrix& rho) {
    MetricsReport r;
    r.s_lin = linear_entropy(rho);
    r.concurrence = concurrence(rho);
    r.fef = fully_entangled_fraction(rho);
    const CorrelationMatrix t = correlation_matrix(rho);
    r.n_value = n_value(t);
    r.m_value = m_value(t);
    r.f_opt_raw = fidelity_from_n_raw(r.n_value);
    r.f_opt = fidelity_from_n(r.n_value);
    r.useful = r.n_value > 1.0 + verdict_margin;
    r.chsh_violated = r.m_value > 1.0 + verdict_margin;
    return r;
}

} // namespace qchan
