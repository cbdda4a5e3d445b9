#pragma once

#include "qchan/states.hpp"

#include <array>
#include <cstdint>

namespace qchan {

/// Best average fidelity reachable with local operations and classical communication.
inline constexpr double classical_fidelity = 2.0 / 3.0;

/// t_nm = Tr(rho sigma_n (x) sigma_m) and the eigenvalues u of T^T T (descending, clamped >= 0).
struct CorrelationMatrix {
    std::array<std::array<double, 3>, 3> t{};
    std::array<double, 3> u{};
};

/// N and M sit exactly at 1 on whole parameter intervals (e.g. the GHZ/W
/// mixture for p >= 1/4); verdicts require clearing 1 by this much so rounding
/// noise does not flip them.
inline constexpr double verdict_margin = 1e-12;

struct MetricsReport {
    double s_lin = 0.0;
    double concurrence = 0.0;
    double fef = 0.0;
    double n_value = 0.0;
    double m_value = 0.0;
    double f_opt = 0.0;     // clamped at 2/3 when N <= 1
    double f_opt_raw = 0.0; // (1 + N/3) / 2
    bool useful = false;        // N > 1 + verdict_margin
    bool chsh_violated = false; // M > 1 + verdict_margin
};

/// (4/3)(1 - Tr rho^2)
double linear_entropy(const DensityMatrix& rho);

/// (sigma_y (x) sigma_y) rho* (sigma_y (x) sigma_y)
ComplexMatrix spin_flip(const DensityMatrix& rho);

/// Spectral data behind the concurrence. `product_eigenvalues` are the raw
/// eigenvalues of sqrt(rho) rho~ sqrt(rho) (descending, unclamped) and
/// `lambdas` their clamped square roots.
struct ConcurrenceSpectrum {
    std::array<double, 4> product_eigenvalues{};
    std::array<double, 4> lambdas{};
};

ConcurrenceSpectrum concurrence_spectrum(const DensityMatrix& rho);

/// max(0, l1 - l2 - l3 - l4)
double concurrence(const DensityMatrix& rho);

/// Throws Error(NonRealCorrelation) if any Tr(rho sigma_n (x) sigma_m) has an
/// imaginary part above 1e-10.
CorrelationMatrix correlation_matrix(const DensityMatrix& rho);

/// sqrt(u1) + sqrt(u2) + sqrt(u3)
double n_value(const CorrelationMatrix& t);

/// u1 + u2 (two largest)
double m_value(const CorrelationMatrix& t);

double fidelity_from_n_raw(double n);
/// Raw fidelity with N floored at 1, i.e. never below the classical 2/3.
double fidelity_from_n(double n);

/// Largest <Psi|rho|Psi> over maximally entangled Psi, computed as the top
/// eigenvalue of Re<e_i|rho|e_j> in the magic basis.
double fully_entangled_fraction(const DensityMatrix& rho);

/// The four magic-basis vectors, in order e1..e4.
std::array<std::array<cplx, 4>, 4> magic_basis();

/// Sampling lower bound on the fully entangled fraction: best overlap over
/// `samples` maximally entangled states (U_A (x) U_B)|Phi+>. Half of each
/// chunk's budget explores Haar-random local unitaries; the rest refines the
/// chunk's incumbent with shrinking random rotations.
double fef_sampling_oracle(const DensityMatrix& rho, std::size_t samples, std::uint64_t seed);

inline constexpr int chsh_default_grid = 24;
inline constexpr int chsh_refinement_steps = 200;

/// Largest CHSH expectation |Tr(rho B)| found by a spherical grid over Bob's
/// two settings (Alice's settings optimized in closed form for each pair),
/// then coordinate-wise golden-section refinement. `grid` is the number of
/// azimuthal subdivisions; the polar grid uses grid/2. Throws
/// Error(DomainError) when grid < 8.
double chsh_max_oracle(const DensityMatrix& rho, int grid = chsh_default_grid);

MetricsReport analyze(const DensityMatrix& rho);

namespace serial {
double fef_sampling_oracle(const DensityMatrix& rho, std::size_t samples, std::uint64_t seed);
double chsh_max_oracle(const DensityMatrix& rho, int grid = chsh_default_grid);
} // namespace serial

} // namespace qchan
