#include "qchan/oracles.hpp"

#include "qchan/error.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace qchan::oracle {

std::array<double, 4> wootters_lambdas(const DensityMatrix& rho) {
    const Spectrum sp = herm_eigen(rho.mat());
    const double snap = zero_eigenvalue_threshold(rho.mat().frobenius_norm());
    // sigma_y (x) sigma_y = antidiag(-1, 1, 1, -1)
    static constexpr double yy[4] = {-1.0, 1.0, 1.0, -1.0};
    std::array<std::array<cplx, 4>, 4> w{};
    for (std::size_t i = 0; i < 4; ++i) {
        const double p = sp.eigenvalues[i] <= snap ? 0.0 : sp.eigenvalues[i];
        for (std::size_t k = 0; k < 4; ++k) w[i][k] = std::sqrt(p) * sp.eigenvectors[i][k];
    }
    ComplexMatrix tau(4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            cplx acc = 0.0;
            for (std::size_t k = 0; k < 4; ++k) acc += w[i][k] * yy[k] * w[j][3 - k];
            tau(i, j) = acc;
        }
    const ComplexMatrix g = tau * tau.adjoint();
    const std::vector<double> ev = herm_eigenvalues(g);
    const double g_snap = zero_eigenvalue_threshold(g.frobenius_norm());
    std::array<double, 4> out{};
    for (std::size_t i = 0; i < 4; ++i) out[i] = ev[3 - i] <= g_snap ? 0.0 : std::sqrt(ev[3 - i]);
    return out;
}

double wootters_concurrence(const DensityMatrix& rho) {
    const auto l = wootters_lambdas(rho);
    return std::max(0.0, l[0] - l[1] - l[2] - l[3]);
}

double bisect(const std::function<double(double)>& f, double lo, double hi, double tol) {
    const bool lo_low = f(lo) <= 0.0;
    if (lo_low == (f(hi) <= 0.0)) throw Error(ErrorKind::DomainError, "bisection bracket has no sign change");
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if ((f(mid) <= 0.0) == lo_low)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

DensityMatrix random_mixed_state(Rng& rng) {
    std::uniform_int_distribution<int> count(1, 6);
    std::exponential_distribution<double> weight(1.0);
    const int k = count(rng);
    ComplexMatrix m(4);
    std::vector<double> ws(static_cast<std::size_t>(k));
    for (double& x : ws) x = weight(rng);
    double total = 0.0;
    for (double x : ws) total += x;
    for (double x : ws) {
        const auto ket = haar_ket(rng, 4);
        m += ComplexMatrix::outer(ket) * (x / total);
    }
    // Force exact Hermiticity before validation.
    return validate_density((m + m.adjoint()) * 0.5);
}

std::vector<NamedState> test_states() {
    std::vector<NamedState> out;
    auto add = [&](std::string name, const FamilySpec& spec) { out.push_back({std::move(name), make_state(spec)}); };
    add("singlet", Werner{1.0});
    add("maximally_mixed", Werner{0.25});
    add("werner_0.6", Werner{0.6});
    add("werner_0.75", Werner{0.75});
    add("werner_0.9", Werner{0.9});
    add("mems_0.2", Mems{0.2});
    add("mems_0.5", Mems{0.5});
    add("mems_0.8", Mems{0.8});
    add("mems_1", Mems{1.0});
    add("wd_0.9_0.9", WernerDerivative{0.9, 0.9});
    add("wd_0.99_0.993147", WernerDerivative{0.99, 0.993147});
    add("wd_0.8_0.6", WernerDerivative{0.8, 0.6});
    add("wd_0.7_0.5", WernerDerivative{0.7, 0.5});
    add("new_0", NmemsNew{0.0});
    add("new_0.27", NmemsNew{0.27});
    add("new_0.5", NmemsNew{0.5});
    add("new_0.9", NmemsNew{0.9});
    Rng rng = make_rng(20240917, 0);
    for (int i = 0; i < 3; ++i) out.push_back({"random_" + std::to_string(i), random_mixed_state(rng)});
    return out;
}

std::vector<double> grid(double lo, double hi, std::size_t n) {
    std::vector<double> xs(n);
    for (std::size_t i = 0; i < n; ++i)
        xs[i] = i + 1 == n ? hi : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    return xs;
}

} // namespace qchan::oracle
