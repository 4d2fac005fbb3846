#include "rankcode/circulant.hpp"

#include "rankcode/field.hpp"

#include <bit>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

namespace rankcode {

namespace {

int deg(std::uint64_t p) { return p ? 63 - std::countl_zero(p) : -1; }

std::uint32_t rotate(std::uint32_t a, unsigned N) {
  const std::uint32_t mask = N == 32 ? ~0u : (1u << N) - 1;
  return ((a << 1) | (a >> (N - 1))) & mask;
}

// Reduce v against an xor basis keyed by leading bit; returns the residue.
std::uint32_t reduce(std::uint32_t v, const std::vector<std::uint32_t>& ech) {
  while (v) {
    const int h = deg(v);
    if (!ech[h]) break;
    v ^= ech[h];
  }
  return v;
}

}  // namespace

CirculantWord::CirculantWord(unsigned N, std::uint32_t poly) : N_(N), poly_(poly) {
  if (N < 1 || N > 16) throw InvalidArgument("circulant length must be 1..16");
  if (poly >> N) throw InvalidArgument("word " + rankcode::to_hex(poly) + " has degree >= N");
}

CirculantWord CirculantWord::parse(unsigned N, const std::string& raw) {
  std::string text;
  for (char ch : raw)
    if (!std::isspace(static_cast<unsigned char>(ch))) text += ch;
  if (text.find('x') != std::string::npos && text.rfind("0x", 0) != 0) {
    std::uint32_t p = 0;
    std::size_t i = 0;
    while (i < text.size()) {
      std::size_t j = text.find('+', i);
      std::string term = text.substr(i, j == std::string::npos ? std::string::npos : j - i);
      i = j == std::string::npos ? text.size() : j + 1;
      unsigned e;
      if (term == "1") e = 0;
      else if (term == "x") e = 1;
      else if (term.rfind("x^", 0) == 0 && term.size() > 2 &&
               term.find_first_not_of("0123456789", 2) == std::string::npos)
        e = static_cast<unsigned>(std::stoul(term.substr(2)));
      else throw InvalidArgument("bad polynomial term '" + term + "'");
      if (e >= N) throw InvalidArgument("term x^" + std::to_string(e) + " has degree >= N");
      p ^= 1u << e;
    }
    return CirculantWord(N, p);
  }
  const std::uint64_t v = parse_hex(text);
  if (v >> N) throw InvalidArgument("word " + text + " has degree >= N");
  return CirculantWord(N, static_cast<std::uint32_t>(v));
}

CirculantWord CirculantWord::operator+(const CirculantWord& o) const {
  if (N_ != o.N_) throw InvalidArgument("circulant words of different lengths");
  return CirculantWord(N_, poly_ ^ o.poly_);
}

CirculantWord CirculantWord::operator*(const CirculantWord& o) const {
  if (N_ != o.N_) throw InvalidArgument("circulant words of different lengths");
  std::uint32_t r = 0, a = poly_;
  for (unsigned i = 0; i < N_; ++i, a = rotate(a, N_))
    if ((o.poly_ >> i) & 1) r ^= a;
  return CirculantWord(N_, r);
}

CirculantWord CirculantWord::shifted() const { return CirculantWord(N_, rotate(poly_, N_)); }

std::string CirculantWord::to_hex() const { return rankcode::to_hex(poly_); }

std::uint64_t poly_gcd_gf2(std::uint64_t a, std::uint64_t b) {
  if (a == 0 && b == 0) throw InvalidArgument("gcd of two zero polynomials");
  while (b) {
    a = poly_mod(a, b);
    std::swap(a, b);
  }
  return a;
}

Gf2Matrix circulant_matrix(const CirculantWord& w) {
  const unsigned N = w.length();
  Gf2Matrix m(N, N);
  std::uint32_t col = w.poly();
  for (unsigned i = 0; i < N; ++i, col = rotate(col, N))
    for (unsigned b = 0; b < N; ++b)
      if ((col >> b) & 1) m.set(b, i, true);
  return m;
}

unsigned circulant_norm(const CirculantWord& w) {
  const unsigned N = w.length();
  const std::uint64_t g = poly_gcd_gf2(w.poly(), (std::uint64_t{1} << N) | 1);
  return N - static_cast<unsigned>(deg(g));
}

unsigned circulant_norm_by_rank(const CirculantWord& w) { return gf2_rank(circulant_matrix(w)); }

unsigned circulant_distance(const CirculantWord& u, const CirculantWord& v) { return circulant_norm(u + v); }

const std::vector<std::uint8_t>& circulant_norm_table(unsigned N) {
  static std::mutex mu;
  static std::map<unsigned, std::unique_ptr<std::vector<std::uint8_t>>> tables;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = tables[N];
  if (!slot) {
    auto t = std::make_unique<std::vector<std::uint8_t>>(std::size_t{1} << N);
    for (std::uint32_t a = 0; a < t->size(); ++a)
      (*t)[a] = static_cast<std::uint8_t>(circulant_norm(CirculantWord(N, a)));
    slot = std::move(t);
  }
  return *slot;
}

CirculantRankCode::CirculantRankCode(unsigned N, std::vector<CirculantWord> basis)
    : N_(N), basis_(std::move(basis)), echelon_(32, 0) {
  if (N < 1 || N > 16) throw InvalidArgument("circulant length must be 1..16");
  if (basis_.empty()) throw InvalidArgument("circulant code needs a nonempty basis");
  for (const auto& b : basis_) {
    if (b.length() != N) throw InvalidArgument("basis word of the wrong length");
    const std::uint32_t r = reduce(b.poly(), echelon_);
    if (!r) throw InvalidArgument("basis words are linearly dependent");
    echelon_[deg(r)] = r;
  }
}

bool CirculantRankCode::contains(const CirculantWord& w) const {
  return w.length() == N_ && reduce(w.poly(), echelon_) == 0;
}

std::vector<std::uint32_t> CirculantRankCode::words(const Budget& budget) const {
  budget.require(dimension(), "circulant code enumeration");
  std::vector<std::uint32_t> out;
  out.reserve(std::size_t{1} << dimension());
  std::uint32_t cur = 0;
  out.push_back(cur);
  for (std::uint64_t idx = 1; idx < (std::uint64_t{1} << dimension()); ++idx) {
    cur ^= basis_[std::countr_zero(idx)].poly();
    out.push_back(cur);
  }
  return out;
}

std::vector<std::uint64_t> CirculantRankCode::norm_distribution(const Budget& budget) const {
  const auto& table = circulant_norm_table(N_);
  std::vector<std::uint64_t> dist(N_ + 1, 0);
  for (auto w : words(budget)) ++dist[table[w]];
  return dist;
}

unsigned CirculantRankCode::min_distance(const Budget& budget) const {
  const auto dist = norm_distribution(budget);
  for (unsigned s = 1; s < dist.size(); ++s)
    if (dist[s]) return s;
  return 0;
}

unsigned CirculantRankCode::divisor(const Budget& budget) const {
  const auto dist = norm_distribution(budget);
  unsigned g = 0;
  for (unsigned s = 1; s < dist.size(); ++s)
    if (dist[s]) g = std::gcd(g, s);
  return g;
}

bool CirculantRankCode::is_cyclic() const {
  for (const auto& b : basis_)
    if (!contains(b.shifted())) return false;
  return true;
}

bool CirculantRankCode::is_subcode_of(const CirculantRankCode& other) const {
  if (N_ != other.N_ || dimension() > other.dimension()) return false;
  for (const auto& b : basis_)
    if (!other.contains(b)) return false;
  return true;
}

bool CirculantRankCode::same_code(const CirculantRankCode& other) const {
  return dimension() == other.dimension() && is_subcode_of(other);
}

}  // namespace rankcode
