#include "qchan/telesim.hpp"

#include "qchan/error.hpp"
#include "qchan/parallel.hpp"
#include "qchan/random.hpp"

#include <cmath>
#include <numeric>

namespace qchan {

PureQubit::PureQubit(cplx alpha, cplx beta) : alpha_(alpha), beta_(beta) {
    const double n = std::norm(alpha) + std::norm(beta);
    if (std::abs(n - 1.0) > 1e-12)
        throw Error(ErrorKind::DomainError, "qubit norm^2 = " + std::to_string(n), n - 1.0);
}

PureQubit PureQubit::normalized(cplx alpha, cplx beta) {
    const double n = std::sqrt(std::norm(alpha) + std::norm(beta));
    if (n == 0.0) throw Error(ErrorKind::DomainError, "zero vector cannot be normalized");
    return PureQubit(alpha / n, beta / n);
}

namespace {

const std::array<std::array<double, 4>, 4>& bell_vectors() {
    static const double s = 1.0 / std::sqrt(2.0);
    static const std::array<std::array<double, 4>, 4> v{{
        {0.0, s, -s, 0.0}, // Psi-
        {0.0, s, s, 0.0},  // Psi+
        {s, 0.0, 0.0, -s}, // Phi-
        {s, 0.0, 0.0, s},  // Phi+
    }};
    return v;
}

const std::array<ComplexMatrix, 4>& corrections() {
    static const std::array<ComplexMatrix, 4> u{pauli::id(), pauli::z(), pauli::x(), pauli::z() * pauli::x()};
    return u;
}

double input_overlap(const ComplexMatrix& rho, const PureQubit& in) {
    const cplx a = in.alpha(), b = in.beta();
    const cplx v = std::conj(a) * rho(0, 0) * a + std::conj(a) * rho(0, 1) * b + std::conj(b) * rho(1, 0) * a +
                   std::conj(b) * rho(1, 1) * b;
    return v.real();
}

} // namespace

TeleportOutcome teleport(const DensityMatrix& channel, const PureQubit& input) {
    const cplx in_ket[] = {input.alpha(), input.beta()};
    const ComplexMatrix total = kron(ComplexMatrix::outer(in_ket), channel.mat());

    TeleportOutcome out;
    for (std::size_t k = 0; k < 4; ++k) {
        const auto& bell = bell_vectors()[k];
        // Unnormalized Bob state <B_k| total |B_k> on qubits (0, 1).
        ComplexMatrix bob(2);
        for (std::size_t m = 0; m < 2; ++m)
            for (std::size_t n = 0; n < 2; ++n) {
                cplx acc = 0.0;
                for (std::size_t ab = 0; ab < 4; ++ab) {
                    if (bell[ab] == 0.0) continue;
                    for (std::size_t cd = 0; cd < 4; ++cd) {
                        if (bell[cd] == 0.0) continue;
                        acc += bell[ab] * total(2 * ab + m, 2 * cd + n) * bell[cd];
                    }
                }
                bob(m, n) = acc;
            }
        const ComplexMatrix& u = corrections()[k];
        const ComplexMatrix corrected = u * bob * u.adjoint();
        const double p = std::max(0.0, bob.trace().real());
        out.probabilities[k] = p;
        out.fidelity += input_overlap(corrected, input);
        out.output_states[k] = p > 1e-300 ? corrected * (1.0 / p) : ComplexMatrix::identity(2) * 0.5;
    }
    return out;
}

std::array<PureQubit, 6> stabilizer_states() {
    const double s = 1.0 / std::sqrt(2.0);
    const cplx i(0.0, 1.0);
    return {PureQubit(1.0, 0.0), PureQubit(0.0, 1.0), PureQubit(s, s),
            PureQubit(s, -s),    PureQubit(s, i * s), PureQubit(s, -i * s)};
}

double average_fidelity_2design(const DensityMatrix& channel) {
    double sum = 0.0;
    for (const PureQubit& q : stabilizer_states()) sum += teleport(channel, q).fidelity;
    return sum / 6.0;
}

namespace {

double haar_chunk_sum(const DensityMatrix& channel, std::size_t n, std::uint64_t seed, std::size_t chunk) {
    const ChunkRange range = chunk_range(n, kernel_chunks, chunk);
    Rng rng = make_rng(seed, chunk);
    double sum = 0.0;
    for (std::size_t k = range.begin; k < range.end; ++k) {
        const auto v = haar_qubit(rng);
        sum += teleport(channel, PureQubit::normalized(v[0], v[1])).fidelity;
    }
    return sum;
}

} // namespace

double haar_average_fidelity(const DensityMatrix& channel, std::size_t n, std::uint64_t seed) {
    if (n == 0) throw Error(ErrorKind::DomainError, "need at least one sample");
    const auto sums =
        parallel_map<double>(kernel_chunks, [&](std::size_t c) { return haar_chunk_sum(channel, n, seed, c); });
    return std::accumulate(sums.begin(), sums.end(), 0.0) / static_cast<double>(n);
}

double serial::haar_average_fidelity(const DensityMatrix& channel, std::size_t n, std::uint64_t seed) {
    if (n == 0) throw Error(ErrorKind::DomainError, "need at least one sample");
    double total = 0.0;
    for (std::size_t c = 0; c < kernel_chunks; ++c) total += haar_chunk_sum(channel, n, seed, c);
    return total / static_cast<double>(n);
}

} // namespace qchan
