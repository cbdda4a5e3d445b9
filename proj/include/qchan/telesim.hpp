#pragma once

#include "qchan/states.hpp"

#include <array>
#include <cstdint>

namespace qchan {

/// Normalized single-qubit pure state alpha|0> + beta|1>.
class PureQubit {
public:
    /// Throws Error(DomainError) unless |alpha|^2 + |beta|^2 = 1 within 1e-12.
    PureQubit(cplx alpha, cplx beta);
    /// Normalizes any nonzero pair.
    static PureQubit normalized(cplx alpha, cplx beta);

    cplx alpha() const noexcept { return alpha_; }
    cplx beta() const noexcept { return beta_; }

private:
    cplx alpha_;
    cplx beta_;
};

/// Bell-measurement outcomes on (input, Alice's channel qubit), in the order
/// used throughout: Psi-, Psi+, Phi-, Phi+.
enum class BellOutcome { PsiMinus = 0, PsiPlus = 1, PhiMinus = 2, PhiPlus = 3 };

struct TeleportOutcome {
    std::array<double, 4> probabilities{};
    std::array<ComplexMatrix, 4> output_states; // corrected Bob states (dim 2); I/2 for zero-probability outcomes
    double fidelity = 0.0;                      // sum_k p_k <in|rho_k|in>
};

/// Standard teleportation of `input` through `channel`. Qubit 0 carries the
/// input, qubits 1 and 2 the channel (1 = Alice, 2 = Bob). Corrections on Bob's
/// qubit per outcome: Psi- -> I, Psi+ -> Z, Phi- -> X, Phi+ -> ZX, which makes
/// the singlet channel perfect.
TeleportOutcome teleport(const DensityMatrix& channel, const PureQubit& input);

/// The six stabilizer states |0>, |1>, |+>, |->, |+i>, |-i>.
std::array<PureQubit, 6> stabilizer_states();

/// Exact input-averaged fidelity of the fixed protocol (six-state 2-design).
double average_fidelity_2design(const DensityMatrix& channel);

/// Monte-Carlo average over n Haar-random inputs, deterministic in `seed`.
double haar_average_fidelity(const DensityMatrix& channel, std::size_t n, std::uint64_t seed);

namespace serial {
double haar_average_fidelity(const DensityMatrix& channel, std::size_t n, std::uint64_t seed);
}

} // namespace qchan
