#include "rankcode/error.hpp"
#include "rankcode/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <cstring>

namespace rankcode::kernels {

namespace {

Backend detect() {
  const char* env = std::getenv("RANKCODE_KERNEL");
  if (env && std::strcmp(env, "scalar") == 0) return Backend::kScalar;
  return avx2_supported() ? Backend::kAvx2 : Backend::kScalar;
}

std::atomic<Backend>& current() {
  static std::atomic<Backend> b{detect()};
  return b;
}

}  // namespace

bool avx2_supported() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const char* backend_name(Backend b) { return b == Backend::kAvx2 ? "avx2" : "scalar"; }

Backend active_backend() { return current().load(std::memory_order_relaxed); }

void force_backend(Backend b) {
  if (b == Backend::kAvx2 && !avx2_supported()) throw InvalidArgument("AVX2 not available on this CPU");
  current().store(b, std::memory_order_relaxed);
}

void batch_rank(const std::uint16_t* const* cols, unsigned n, unsigned bits,
                const std::uint16_t* offset, std::size_t count, std::uint8_t* out) {
#if defined(__x86_64__) || defined(__i386__)
  if (active_backend() == Backend::kAvx2) {
    batch_rank_avx2(cols, n, bits, offset, count, out);
    return;
  }
#endif
  batch_rank_scalar(cols, n, bits, offset, count, out);
}

void WordTable::reserve(std::size_t count) {
  for (auto& c : cols_) c.reserve(count);
}

void WordTable::push(const Packed& w) {
  for (unsigned j = 0; j < n_; ++j) cols_[j].push_back(w[j]);
  ++size_;
}

Packed WordTable::get(std::size_t i) const {
  Packed p{};
  for (unsigned j = 0; j < n_; ++j) p[j] = cols_[j][i];
  return p;
}

void WordTable::ranks_against(const Packed& offset, std::uint8_t* out) const {
  const std::uint16_t* ptrs[kMaxLength];
  for (unsigned j = 0; j < n_; ++j) ptrs[j] = cols_[j].data();
  batch_rank(ptrs, n_, bits_, offset.data(), size_, out);
}

std::vector<std::uint8_t> WordTable::ranks_against(const Packed& offset) const {
  std::vector<std::uint8_t> out(size_);
  ranks_against(offset, out.data());
  return out;
}

unsigned WordTable::min_rank_against(const Packed& offset, std::size_t skip) const {
  constexpr std::size_t kChunk = 4096;
  std::uint8_t buf[kChunk];
  const std::uint16_t* ptrs[kMaxLength];
  unsigned best = 255;
  for (std::size_t base = 0; base < size_; base += kChunk) {
    const std::size_t len = std::min(kChunk, size_ - base);
    for (unsigned j = 0; j < n_; ++j) ptrs[j] = cols_[j].data() + base;
    batch_rank(ptrs, n_, bits_, offset.data(), len, buf);
    for (std::size_t i = 0; i < len; ++i)
      if (base + i != skip) best = std::min<unsigned>(best, buf[i]);
    if (best == 0) break;
  }
  return best;
}

}  // namespace rankcode::kernels
