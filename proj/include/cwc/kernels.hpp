#pragma once

#include <cstddef>
#include <cstdint>

namespace cwc::kernels {

using distance_fn = std::size_t (*)(const std::uint8_t*, const std::uint8_t*, std::size_t);

std::size_t hamming_distance_scalar(const std::uint8_t* a, const std::uint8_t* b, std::size_t n);

// Compiled only when the build enables AVX2; reached through the dispatcher.
std::size_t hamming_distance_avx2(const std::uint8_t* a, const std::uint8_t* b, std::size_t n);

// Selected once at startup from what the CPU reports.
extern const distance_fn hamming_distance;

const char* active_kernel_name();

}  // namespace cwc::kernels
