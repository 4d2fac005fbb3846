#pragma once

#include "rankcode/gf2.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

// Batched GF(2) rank kernels. A batch is stored column-sliced: cols[j][i] is
// coordinate j of item i. Every variant computes
//   out[i] = rank of the bit matrix with columns cols[j][i] ^ offset[j], j < n
// where bits is an upper bound on the column width (the field degree N).
namespace rankcode::kernels {

enum class Backend { kScalar, kAvx2 };

void batch_rank_scalar(const std::uint16_t* const* cols, unsigned n, unsigned bits,
                       const std::uint16_t* offset, std::size_t count, std::uint8_t* out);

#if defined(__x86_64__) || defined(__i386__)
void batch_rank_avx2(const std::uint16_t* const* cols, unsigned n, unsigned bits,
                     const std::uint16_t* offset, std::size_t count, std::uint8_t* out);
#endif

bool avx2_supported();
const char* backend_name(Backend b);
Backend active_backend();
// For tests and benchmarks; throws InvalidArgument if the CPU lacks the backend.
void force_backend(Backend b);

// Runtime-dispatched entry point.
void batch_rank(const std::uint16_t* const* cols, unsigned n, unsigned bits,
                const std::uint16_t* offset, std::size_t count, std::uint8_t* out);

// Column-sliced storage for a list of packed vectors of common length n.
class WordTable {
 public:
  WordTable(unsigned n, unsigned bits) : n_(n), bits_(bits), cols_(n) {}

  unsigned length() const { return n_; }
  std::size_t size() const { return size_; }
  void reserve(std::size_t count);
  void push(const Packed& w);
  Packed get(std::size_t i) const;

  // out must hold size() entries.
  void ranks_against(const Packed& offset, std::uint8_t* out) const;
  std::vector<std::uint8_t> ranks_against(const Packed& offset) const;
  unsigned min_rank_against(const Packed& offset, std::size_t skip = static_cast<std::size_t>(-1)) const;

 private:
  unsigned n_, bits_;
  std::size_t size_ = 0;
  std::vector<std::vector<std::uint16_t>> cols_;
};

}  // namespace rankcode::kernels
