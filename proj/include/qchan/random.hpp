#pragma once

#include "qchan/numerics.hpp"

#include <array>
#include <cstdint>
#include <random>

namespace qchan {

using Rng = std::mt19937_64;

// Deterministic generator for (seed, stream). Parallel kernels use one stream
// per chunk so results do not depend on the thread count.
inline Rng make_rng(std::uint64_t seed, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32), 0x5eedu};
    return Rng(seq);
}

/// Haar-random pure qubit (normalized complex Gaussian vector).
std::array<cplx, 2> haar_qubit(Rng& rng);

/// Haar-random element of SU(2) from a uniformly random unit quaternion.
ComplexMatrix haar_su2(Rng& rng);

/// Haar-random unit vector in C^n, n <= 8.
std::vector<cplx> haar_ket(Rng& rng, std::size_t n);

} // namespace qchan
