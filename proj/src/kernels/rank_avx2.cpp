#include "rankcode/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>

namespace rankcode::kernels {

// Sixteen items per register, one uint16 lane each. Elimination is branch-free:
// for every pivot bit b (high to low) a lane either reduces by its basis[b] or,
// when it has no pivot there yet, installs the current column as basis[b].
__attribute__((target("avx2"))) void batch_rank_avx2(const std::uint16_t* const* cols, unsigned n,
                                                      unsigned bits, const std::uint16_t* offset,
                                                      std::size_t count, std::uint8_t* out) {
  std::size_t i = 0;
  alignas(32) std::uint16_t lanes[16];
  for (; i + 16 <= count; i += 16) {
    __m256i basis[16], has[16];
    for (unsigned b = 0; b < bits; ++b) {
      basis[b] = _mm256_setzero_si256();
      has[b] = _mm256_setzero_si256();
    }
    __m256i rank = _mm256_setzero_si256();
    for (unsigned j = 0; j < n; ++j) {
      __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(cols[j] + i));
      v = _mm256_xor_si256(v, _mm256_set1_epi16(static_cast<short>(offset[j])));
      for (int b = static_cast<int>(bits) - 1; b >= 0; --b) {
        const __m256i bit = _mm256_set1_epi16(static_cast<short>(1u << b));
        const __m256i set = _mm256_cmpeq_epi16(_mm256_and_si256(v, bit), bit);
        const __m256i use = _mm256_and_si256(set, has[b]);
        v = _mm256_xor_si256(v, _mm256_and_si256(basis[b], use));
        const __m256i ins = _mm256_andnot_si256(has[b], set);
        basis[b] = _mm256_or_si256(basis[b], _mm256_and_si256(v, ins));
        has[b] = _mm256_or_si256(has[b], ins);
        rank = _mm256_sub_epi16(rank, ins);
        v = _mm256_andnot_si256(ins, v);
      }
    }
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), rank);
    for (int l = 0; l < 16; ++l) out[i + l] = static_cast<std::uint8_t>(lanes[l]);
  }
  if (i < count) {
    const std::uint16_t* tail[16];
    for (unsigned j = 0; j < n; ++j) tail[j] = cols[j] + i;
    batch_rank_scalar(tail, n, bits, offset, count - i, out + i);
  }
}

}  // namespace rankcode::kernels
#endif
