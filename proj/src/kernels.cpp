#include "cwc/kernels.hpp"

namespace cwc::kernels {

std::size_t hamming_distance_scalar(const std::uint8_t* a, const std::uint8_t* b, std::size_t n) {
    std::size_t dist = 0;
    for (std::size_t i = 0; i < n; ++i)
        dist += a[i] != b[i];
    return dist;
}

namespace {

const char* selected_name = "scalar";

bool cpu_has_avx2() {
#if defined(__GNUC__) && (defined(__x86_64__) || defined(__i386__))
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

distance_fn select_distance() {
#ifdef CWC_HAVE_AVX2_SOURCE
    if (cpu_has_avx2()) {
        selected_name = "avx2";
        return hamming_distance_avx2;
    }
#endif
    return hamming_distance_scalar;
}

}  // namespace

const distance_fn hamming_distance = select_distance();

const char* active_kernel_name() { return selected_name; }

}  // namespace cwc::kernels
