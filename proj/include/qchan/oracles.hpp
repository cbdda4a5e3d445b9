#pragma once

// Independent reference computations used by the verification suite and the
// tests. Nothing in the main library depends on these.

#include "qchan/random.hpp"
#include "qchan/states.hpp"

#include <array>
#include <functional>
#include <string>
#include <vector>

namespace qchan::oracle {

/// Concurrence through Wootters' subnormalized-ensemble construction: with
/// rho = sum_i |w_i><w_i|, tau_ij = w_i^T (sigma_y (x) sigma_y) w_j and the
/// lambdas are the singular values of tau (square roots of eig(tau tau^dag)).
/// Shares no code path with the sqrt(rho) rho~ sqrt(rho) route.
std::array<double, 4> wootters_lambdas(const DensityMatrix& rho);
double wootters_concurrence(const DensityMatrix& rho);

/// Root of f on [lo, hi] by bisection; f(lo) and f(hi) must differ in sign
/// (f(x) <= 0 counts as the low side). Stops when the bracket is below tol.
double bisect(const std::function<double(double)>& f, double lo, double hi, double tol = 1e-13);

/// Mixture of 1..6 Haar-random pure two-qubit states with random weights.
DensityMatrix random_mixed_state(Rng& rng);

struct NamedState {
    std::string name;
    DensityMatrix rho;
};

/// Fixed set of 20 channels covering every family, the singlet, I/4 and a few
/// random mixed states (seeded).
std::vector<NamedState> test_states();

/// i/(n-1) mapped onto [lo, hi], n >= 2.
std::vector<double> grid(double lo, double hi, std::size_t n);

} // namespace qchan::oracle
