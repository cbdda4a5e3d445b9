#pragma once

#include <cstddef>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qchan {

// Fixed work decomposition shared by the OpenMP kernels and their serial
// references. Chunk results are combined in index order, so both paths are
// bitwise identical for a given input.
inline constexpr std::size_t kernel_chunks = 64;

inline int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

/// Evaluates f(i) for i in [0, n) across OpenMP threads; out[i] = f(i).
template <class T, class F>
std::vector<T> parallel_map(std::size_t n, F&& f) {
    std::vector<T> out(n);
    const long long count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = f(static_cast<std::size_t>(i));
    return out;
}

template <class T, class F>
std::vector<T> serial_map(std::size_t n, F&& f) {
    std::vector<T> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(f(i));
    return out;
}

/// Half-open sample range [begin, end) owned by chunk `c` of `chunks` over `n` samples.
struct ChunkRange {
    std::size_t begin;
    std::size_t end;
};

inline ChunkRange chunk_range(std::size_t n, std::size_t chunks, std::size_t c) {
    const std::size_t base = n / chunks, extra = n % chunks;
    const std::size_t begin = c * base + (c < extra ? c : extra);
    return {begin, begin + base + (c < extra ? 1 : 0)};
}

} // namespace qchan
