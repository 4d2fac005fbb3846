#include "rankcode/kernels.hpp"

#include <bit>

namespace rankcode::kernels {

void batch_rank_scalar(const std::uint16_t* const* cols, unsigned n, unsigned /*bits*/,
                       const std::uint16_t* offset, std::size_t count, std::uint8_t* out) {
  for (std::size_t i = 0; i < count; ++i) {
    std::uint16_t basis[16] = {};
    unsigned r = 0;
    for (unsigned j = 0; j < n; ++j) {
      std::uint16_t v = cols[j][i] ^ offset[j];
      while (v) {
        int h = 15 - std::countl_zero(v);
        if (!basis[h]) {
          basis[h] = v;
          ++r;
          break;
        }
        v ^= basis[h];
      }
    }
    out[i] = static_cast<std::uint8_t>(r);
  }
}

}  // namespace rankcode::kernels
