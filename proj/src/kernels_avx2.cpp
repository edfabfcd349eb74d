#include <immintrin.h>

#include "cwc/kernels.hpp"

namespace cwc::kernels {

std::size_t hamming_distance_avx2(const std::uint8_t* a, const std::uint8_t* b, std::size_t n) {
    std::size_t dist = 0;
    std::size_t i = 0;
    for (; i + 32 <= n; i += 32) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        auto eq_mask = static_cast<std::uint32_t>(
            _mm256_movemask_epi8(_mm256_cmpeq_epi8(va, vb)));
        dist += 32u - static_cast<unsigned>(__builtin_popcount(eq_mask));
    }
    for (; i < n; ++i)
        dist += a[i] != b[i];
    return dist;
}

}  // namespace cwc::kernels
