#include "rgl/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#define RGL_HAVE_X86 1
#endif

namespace rgl::kernels {

#ifdef RGL_HAVE_X86

__attribute__((target("avx2"))) std::uint64_t count_allowed_avx2(std::uint32_t p, const std::uint32_t* forbidden,
                                                                  std::size_t k) {
    const __m256i lane = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);
    const __m256i step = _mm256_set1_epi32(8);
    const __m256i limit = _mm256_set1_epi32(static_cast<int>(p));
    __m256i v = lane;
    std::uint64_t count = 0;
    for (std::uint32_t base = 0; base < p; base += 8) {
        __m256i hit = _mm256_cmpgt_epi32(v, _mm256_sub_epi32(limit, _mm256_set1_epi32(1)));
        for (std::size_t f = 0; f < k; ++f)
            hit = _mm256_or_si256(hit, _mm256_cmpeq_epi32(v, _mm256_set1_epi32(static_cast<int>(forbidden[f]))));
        unsigned mask = static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(hit)));
        count += 8 - __builtin_popcount(mask);
        v = _mm256_add_epi32(v, step);
    }
    return count;
}

#else

std::uint64_t count_allowed_avx2(std::uint32_t p, const std::uint32_t* forbidden, std::size_t k) {
    return count_allowed_scalar(p, forbidden, k);
}

#endif

}  // namespace rgl::kernels
