#include "rankcode/field.hpp"

#include "rankcode/error.hpp"
#include "rankcode/gf2.hpp"

#include <array>
#include <bit>
#include <cstdlib>

namespace rankcode {

namespace {

constexpr std::array<std::uint32_t, 17> kDefaultModuli = {
    0,      0x3,    0x7,    0xb,    0x13,   0x25,   0x43,   0x83,  0x11b,
    0x203,  0x409,  0x805,  0x1009, 0x201b, 0x4021, 0x8003, 0x1002b};

int degree_of(std::uint64_t p) { return p ? 63 - std::countl_zero(p) : -1; }

std::vector<std::uint32_t> prime_factors(std::uint32_t v) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t p = 2; p * p <= v; ++p) {
    if (v % p) continue;
    out.push_back(p);
    while (v % p == 0) v /= p;
  }
  if (v > 1) out.push_back(v);
  return out;
}

}  // namespace

Budget Budget::from_env() {
  Budget b;
  if (const char* s = std::getenv("RANKCODE_MAX_ENUM_BITS")) {
    char* end = nullptr;
    long v = std::strtol(s, &end, 10);
    if (end != s && *end == '\0' && v > 0 && v <= 62) b.max_enum_bits = static_cast<unsigned>(v);
  }
  return b;
}

void Budget::require(double log2_items, const char* what) const {
  if (!allows(log2_items))
    throw BudgetExceeded(std::string(what) + " needs 2^" + std::to_string(log2_items) +
                         " items, budget is 2^" + std::to_string(max_enum_bits));
}

std::uint32_t default_modulus(unsigned N) {
  if (N < 1 || N > 16) throw InvalidArgument("unsupported extension degree N=" + std::to_string(N));
  return kDefaultModuli[N];
}

std::uint64_t clmul(std::uint32_t a, std::uint32_t b) {
  std::uint64_t r = 0, aa = a;
  for (; b; b >>= 1, aa <<= 1)
    if (b & 1) r ^= aa;
  return r;
}

std::uint64_t poly_mod(std::uint64_t a, std::uint64_t m) {
  int dm = degree_of(m);
  if (dm < 0) throw InvalidArgument("polynomial division by zero");
  for (int da = degree_of(a); da >= dm; da = degree_of(a)) a ^= m << (da - dm);
  return a;
}

bool is_irreducible_gf2(std::uint32_t poly) {
  int d = degree_of(poly);
  if (d < 1) return false;
  for (std::uint64_t q = 2; degree_of(q) <= d / 2; ++q)
    if (poly_mod(poly, q) == 0) return false;
  return true;
}

std::string poly_to_string(std::uint64_t poly) {
  if (poly == 0) return "0";
  std::string s;
  for (int i = degree_of(poly); i >= 0; --i) {
    if (!((poly >> i) & 1)) continue;
    if (!s.empty()) s += "+";
    if (i == 0) s += "1";
    else if (i == 1) s += "x";
    else s += "x^" + std::to_string(i);
  }
  return s;
}

FieldRef FieldContext::make(unsigned N) { return make(N, default_modulus(N)); }

FieldRef FieldContext::make(unsigned N, std::uint32_t modulus) {
  return std::make_shared<const FieldContext>(N, modulus);
}

FieldContext::FieldContext(unsigned N, std::uint32_t modulus) : N_(N), modulus_(modulus) {
  if (N < 1 || N > 16) throw InvalidArgument("unsupported extension degree N=" + std::to_string(N));
  if (degree_of(modulus) != static_cast<int>(N))
    throw InvalidArgument("modulus " + poly_to_string(modulus) + " does not have degree " +
                          std::to_string(N));
  if (!is_irreducible_gf2(modulus))
    throw InvalidArgument("modulus " + poly_to_string(modulus) + " is reducible over GF(2)");

  const std::uint32_t order = size() - 1;
  if (order > 1) {
    auto factors = prime_factors(order);
    for (std::uint32_t g = 2; g < size(); ++g) {
      bool primitive = true;
      for (auto p : factors) {
        std::uint16_t acc = 1, base = static_cast<std::uint16_t>(g);
        for (std::uint32_t e = order / p; e; e >>= 1) {
          if (e & 1) acc = mul_slow(acc, base);
          base = mul_slow(base, base);
        }
        if (acc == 1) { primitive = false; break; }
      }
      if (primitive) { gen_ = static_cast<std::uint16_t>(g); break; }
    }
  }
  log_.assign(size(), 0);
  exp_.assign(2 * order + 1, 0);
  std::uint16_t v = 1;
  for (std::uint32_t i = 0; i < order; ++i) {
    exp_[i] = exp_[i + order] = v;
    log_[v] = i;
    v = mul_slow(v, gen_);
  }
}

std::uint16_t FieldContext::mul_slow(std::uint16_t a, std::uint16_t b) const {
  return static_cast<std::uint16_t>(poly_mod(clmul(a, b), modulus_));
}

std::uint16_t FieldContext::inv(std::uint16_t a) const {
  if (a == 0) throw InvalidArgument("inverse of zero");
  const std::uint32_t order = size() - 1;
  return exp_[(order - log_[a]) % order];
}

std::uint16_t FieldContext::pow(std::uint16_t a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t order = size() - 1;
  return exp_[(static_cast<std::uint64_t>(log_[a]) * (e % order)) % order];
}

std::uint16_t FieldContext::frobenius(std::uint16_t a, unsigned s) const {
  for (unsigned i = 0; i < s % N_; ++i) a = mul(a, a);
  return a;
}

bool same_field(const FieldRef& a, const FieldRef& b) {
  return a == b || (a && b && a->same_as(*b));
}

void require_same_field(const FieldRef& a, const FieldRef& b) {
  if (!same_field(a, b)) throw InvalidArgument("elements belong to different fields");
}

FieldElement::FieldElement(FieldRef ctx, std::uint16_t bits) : ctx_(std::move(ctx)), bits_(bits) {
  if (!ctx_) throw InvalidArgument("field element without context");
  if (bits_ & ~ctx_->mask()) throw InvalidArgument("element " + rankcode::to_hex(bits) + " outside GF(2^" +
                                                   std::to_string(ctx_->degree()) + ")");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  require_same_field(ctx_, o.ctx_);
  return FieldElement(ctx_, bits_ ^ o.bits_);
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  require_same_field(ctx_, o.ctx_);
  return FieldElement(ctx_, ctx_->mul(bits_, o.bits_));
}

FieldElement FieldElement::inverse() const { return FieldElement(ctx_, ctx_->inv(bits_)); }
FieldElement FieldElement::frobenius(unsigned s) const { return FieldElement(ctx_, ctx_->frobenius(bits_, s)); }
FieldElement FieldElement::pow(std::uint64_t e) const { return FieldElement(ctx_, ctx_->pow(bits_, e)); }

std::string FieldElement::to_hex() const { return rankcode::to_hex(bits_); }

FieldElement FieldElement::from_hex(FieldRef ctx, const std::string& s) {
  std::uint64_t v = parse_hex(s);
  if (v > 0xffff) throw InvalidArgument("element " + s + " too wide");
  return FieldElement(std::move(ctx), static_cast<std::uint16_t>(v));
}

bool linearly_independent(std::span<const FieldElement> elems) {
  if (elems.empty()) throw InvalidArgument("empty element sequence");
  std::vector<std::uint16_t> cols;
  for (const auto& e : elems) {
    require_same_field(elems[0].context(), e.context());
    cols.push_back(e.bits());
  }
  return column_rank(cols) == cols.size();
}

std::string to_hex(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  if (v == 0) return "0";
  std::string s;
  for (; v; v >>= 4) s.insert(s.begin(), digits[v & 15]);
  return s;
}

std::uint64_t parse_hex(const std::string& s) {
  std::size_t i = 0;
  if (s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) i = 2;
  if (i == s.size()) throw InvalidArgument("empty hex value '" + s + "'");
  if (s.size() - i > 16) throw InvalidArgument("hex value '" + s + "' too long");
  std::uint64_t v = 0;
  for (; i < s.size(); ++i) {
    char c = s[i];
    int d;
    if (c >= '0' && c <= '9') d = c - '0';
    else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F') d = c - 'A' + 10;
    else throw InvalidArgument("bad hex digit in '" + s + "'");
    v = (v << 4) | static_cast<std::uint64_t>(d);
  }
  return v;
}

}  // namespace rankcode
