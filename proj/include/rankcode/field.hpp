#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace rankcode {

class FieldContext;
using FieldRef = std::shared_ptr<const FieldContext>;

// Lowest-weight irreducible of degree N (1 <= N <= 16), bit i = coefficient of x^i.
std::uint32_t default_modulus(unsigned N);

// Trial division by every polynomial of degree 1..deg/2.
bool is_irreducible_gf2(std::uint32_t poly);

// Carry-less product of two GF(2) polynomials of degree < 32.
std::uint64_t clmul(std::uint32_t a, std::uint32_t b);

// Remainder of a GF(2) polynomial division.
std::uint64_t poly_mod(std::uint64_t a, std::uint64_t m);

std::string poly_to_string(std::uint64_t poly);

// GF(2^N) = GF(2)[x]/(modulus). Elements are raw N-bit words; the context is
// immutable after construction, so it can be shared freely between threads.
class FieldContext {
 public:
  static FieldRef make(unsigned N);
  static FieldRef make(unsigned N, std::uint32_t modulus);

  unsigned degree() const { return N_; }
  std::uint32_t modulus() const { return modulus_; }
  std::uint32_t size() const { return 1u << N_; }
  std::uint16_t mask() const { return static_cast<std::uint16_t>(size() - 1); }
  std::string modulus_string() const { return poly_to_string(modulus_); }

  std::uint16_t mul(std::uint16_t a, std::uint16_t b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  // Shift-and-reduce multiplication, independent of the log tables.
  std::uint16_t mul_slow(std::uint16_t a, std::uint16_t b) const;
  std::uint16_t inv(std::uint16_t a) const;
  std::uint16_t pow(std::uint16_t a, std::uint64_t e) const;
  std::uint16_t frobenius(std::uint16_t a, unsigned s) const;
  // Fixed primitive element used for the log tables.
  std::uint16_t generator() const { return gen_; }

  bool same_as(const FieldContext& o) const { return N_ == o.N_ && modulus_ == o.modulus_; }

  FieldContext(unsigned N, std::uint32_t modulus);

 private:
  unsigned N_;
  std::uint32_t modulus_;
  std::uint16_t gen_ = 1;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint16_t> exp_;
};

bool same_field(const FieldRef& a, const FieldRef& b);
void require_same_field(const FieldRef& a, const FieldRef& b);

class FieldElement {
 public:
  FieldElement(FieldRef ctx, std::uint16_t bits);

  const FieldRef& context() const { return ctx_; }
  std::uint16_t bits() const { return bits_; }
  bool is_zero() const { return bits_ == 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const { return *this + o; }
  FieldElement operator*(const FieldElement& o) const;
  FieldElement inverse() const;
  FieldElement frobenius(unsigned s) const;
  FieldElement pow(std::uint64_t e) const;

  bool operator==(const FieldElement& o) const {
    return bits_ == o.bits_ && same_field(ctx_, o.ctx_);
  }

  std::string to_hex() const;
  static FieldElement from_hex(FieldRef ctx, const std::string& s);

 private:
  FieldRef ctx_;
  std::uint16_t bits_;
};

// True iff the coefficient columns have full GF(2)-rank.
bool linearly_independent(std::span<const FieldElement> elems);

std::string to_hex(std::uint64_t v);
// Accepts an optional 0x prefix; throws InvalidArgument on bad digits.
std::uint64_t parse_hex(const std::string& s);

}  // namespace rankcode
