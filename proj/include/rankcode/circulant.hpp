#pragma once

#include "rankcode/error.hpp"
#include "rankcode/gf2.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace rankcode {

// Element a(x) of GF(2)[x]/(x^N + 1), bit i = coefficient of x^i.
class CirculantWord {
 public:
  CirculantWord(unsigned N, std::uint32_t poly);
  // Hex ("0xb", "b") or symbolic ("1+x+x^3").
  static CirculantWord parse(unsigned N, const std::string& text);

  unsigned length() const { return N_; }
  std::uint32_t poly() const { return poly_; }
  bool is_zero() const { return poly_ == 0; }

  CirculantWord operator+(const CirculantWord& o) const;
  CirculantWord operator*(const CirculantWord& o) const;  // product mod x^N + 1
  CirculantWord shifted() const;                           // x * a(x)
  bool operator==(const CirculantWord& o) const = default;

  std::string to_hex() const;

 private:
  unsigned N_;
  std::uint32_t poly_;
};

std::uint64_t poly_gcd_gf2(std::uint64_t a, std::uint64_t b);

// N x N matrix whose column i holds x^i * a(x) mod x^N + 1.
Gf2Matrix circulant_matrix(const CirculantWord& w);
// N - deg gcd(a, x^N + 1).
unsigned circulant_norm(const CirculantWord& w);
// GF(2)-rank of the circulant matrix; agrees with circulant_norm.
unsigned circulant_norm_by_rank(const CirculantWord& w);
unsigned circulant_distance(const CirculantWord& u, const CirculantWord& v);
// norm of every word of length N, indexed by poly.
const std::vector<std::uint8_t>& circulant_norm_table(unsigned N);

// GF(2)-span of independent circulant words.
class CirculantRankCode {
 public:
  CirculantRankCode(unsigned N, std::vector<CirculantWord> basis);

  unsigned length() const { return N_; }
  unsigned dimension() const { return static_cast<unsigned>(basis_.size()); }
  const std::vector<CirculantWord>& basis() const { return basis_; }

  bool contains(const CirculantWord& w) const;
  // All span elements in Gray-code order, zero first.
  std::vector<std::uint32_t> words(const Budget& budget = {}) const;
  std::vector<std::uint64_t> norm_distribution(const Budget& budget = {}) const;
  unsigned min_distance(const Budget& budget = {}) const;
  unsigned divisor(const Budget& budget = {}) const;
  // Closed under multiplication by x.
  bool is_cyclic() const;

  bool is_subcode_of(const CirculantRankCode& other) const;
  bool same_code(const CirculantRankCode& other) const;

 private:
  unsigned N_;
  std::vector<CirculantWord> basis_;
  std::vector<std::uint32_t> echelon_;  // xor basis keyed by leading bit
};

}  // namespace rankcode
