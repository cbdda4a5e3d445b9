#include "qchan/random.hpp"

#include <cmath>

namespace qchan {

std::array<cplx, 2> haar_qubit(Rng& rng) {
    const auto v = haar_ket(rng, 2);
    return {v[0], v[1]};
}

ComplexMatrix haar_su2(Rng& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    double q[4];
    double n2 = 0.0;
    do {
        n2 = 0.0;
        for (double& x : q) {
            x = normal(rng);
            n2 += x * x;
        }
    } while (n2 < 1e-300);
    const double inv = 1.0 / std::sqrt(n2);
    const cplx a(q[0] * inv, q[1] * inv), b(q[2] * inv, q[3] * inv);
    const cplx e[] = {a, -std::conj(b), b, std::conj(a)};
    return ComplexMatrix(2, e);
}

std::vector<cplx> haar_ket(Rng& rng, std::size_t n) {
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<cplx> v(n);
    double n2 = 0.0;
    do {
        n2 = 0.0;
        for (auto& x : v) {
            const double re = normal(rng);
            const double im = normal(rng);
            x = cplx(re, im);
            n2 += re * re + im * im;
        }
    } while (n2 < 1e-300);
    const double inv = 1.0 / std::sqrt(n2);
    for (auto& x : v) x *= inv;
    return v;
}

} // namespace qchan
