#include "rankcode/fuzzy.hpp"

#include "rankcode/rank_metric.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace rankcode {

namespace {

double pairwise_sum(const double* x, std::size_t n) {
  if (n <= 8) {
    double s = 0;
    for (std::size_t i = 0; i < n; ++i) s += x[i];
    return s;
  }
  const std::size_t h = n / 2;
  return pairwise_sum(x, h) + pairwise_sum(x + h, n - h);
}

void check_pair(const RankVector& u, const RankVector& v) {
  require_same_field(u.field(), v.field());
  if (u.length() != v.length()) throw InvalidArgument("vectors of different lengths");
}

}  // namespace

ErrorModel::ErrorModel(ModelKind k, double p_) : kind(k), p(p_) {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgument("model probability must lie in [0,1]");
}

ErrorModel ErrorModel::parse(const std::string& name, double p) {
  if (name == "symmetric") return {ModelKind::kSymmetric, p};
  if (name == "unidirectional") return {ModelKind::kUnidirectional, p};
  if (name == "asym10" || name == "asymmetric-1to0") return {ModelKind::kAsymmetricOneToZero, p};
  if (name == "asym01" || name == "asymmetric-0to1") return {ModelKind::kAsymmetricZeroToOne, p};
  throw InvalidArgument("unknown error model '" + name + "'");
}

const char* model_name(ModelKind k) {
  switch (k) {
    case ModelKind::kSymmetric: return "symmetric";
    case ModelKind::kUnidirectional: return "unidirectional";
    case ModelKind::kAsymmetricOneToZero: return "asym10";
    case ModelKind::kAsymmetricZeroToOne: return "asym01";
  }
  return "?";
}

double membership(const RankVector& u, const RankVector& v, const ErrorModel& model) {
  check_pair(u, v);
  const unsigned n = u.length();
  const double p = model.p, q = model.q();
  if (model.kind == ModelKind::kSymmetric) {
    const unsigned r = rank_distance(u, v);
    return std::pow(p, n - r) * std::pow(q, r);
  }
  const unsigned N = u.field()->degree();
  double f = 1.0;
  for (unsigned i = 0; i < n; ++i) {
    const unsigned k1 = std::popcount(static_cast<unsigned>(u[i] & ~v[i]));  // 1 -> 0 flips
    const unsigned k2 = std::popcount(static_cast<unsigned>(v[i] & ~u[i]));  // 0 -> 1 flips
    if (k1 && k2) return 0.0;
    const unsigned ones = std::popcount(static_cast<unsigned>(u[i]));
    unsigned d = 0, m = 0;
    switch (model.kind) {
      case ModelKind::kUnidirectional:
        if (!k1 && !k2) {
          d = 0;
          m = std::max(ones, N - ones);
        } else if (!k2) {
          d = k1;
          m = ones;
        } else {
          d = k2;
          m = N - ones;
        }
        break;
      case ModelKind::kAsymmetricOneToZero:
        d = k1;
        m = ones;
        break;
      case ModelKind::kAsymmetricZeroToOne:
        d = k2;
        m = N - ones;
        break;
      case ModelKind::kSymmetric:
        break;
    }
    f *= std::pow(p, m - d) * std::pow(q, d);
  }
  return f;
}

double fuzzy_distance(const RankVector& a, const RankVector& b, const ErrorModel& model, const Budget& budget) {
  check_pair(a, b);
  const unsigned N = a.field()->degree(), n = a.length();
  budget.require(static_cast<double>(N) * n, "fuzzy distance");
  const std::uint64_t total = std::uint64_t{1} << (N * n);
  constexpr std::size_t kChunk = 4096;
  std::vector<double> terms, partials;
  terms.reserve(kChunk);
  Packed z{};
  for (std::uint64_t x = 0; x < total; ++x) {
    for (unsigned j = 0; j < n; ++j) z[j] = static_cast<std::uint16_t>((x >> (j * N)) & a.field()->mask());
    const RankVector zv(a.field(), n, z);
    terms.push_back(std::fabs(membership(a, zv, model) - membership(b, zv, model)));
    if (terms.size() == kChunk) {
      partials.push_back(pairwise_sum(terms.data(), terms.size()));
      terms.clear();
    }
  }
  if (!terms.empty()) partials.push_back(pairwise_sum(terms.data(), terms.size()));
  return pairwise_sum(partials.data(), partials.size());
}

double fuzzy_min_distance(const std::vector<RankVector>& code, const ErrorModel& model, const Budget& budget) {
  if (code.size() < 2) throw InvalidArgument("fuzzy minimum distance needs at least two codewords");
  double best = INFINITY;
  for (std::size_t i = 0; i < code.size(); ++i)
    for (std::size_t j = i + 1; j < code.size(); ++j)
      best = std::min(best, fuzzy_distance(code[i], code[j], model, budget));
  return best;
}

double fuzzy_min_distance(const LinearRdCode& code, const ErrorModel& model, const Budget& budget) {
  return fuzzy_min_distance(code.codewords(budget), model, budget);
}

std::vector<RankVector> theta_decode(const RankVector& u, const std::vector<RankVector>& code,
                                     const ErrorModel& model) {
  if (code.empty()) throw InvalidArgument("empty code");
  std::vector<double> f;
  for (const auto& c : code) f.push_back(membership(c, u, model));
  const double top = *std::max_element(f.begin(), f.end());
  std::vector<RankVector> out;
  for (std::size_t i = 0; i < code.size(); ++i)
    if (f[i] >= top * (1.0 - 1e-12)) out.push_back(code[i]);
  return out;
}

std::vector<RankVector> theta_decode(const RankVector& u, const LinearRdCode& code, const ErrorModel& model,
                                     const Budget& budget) {
  return theta_decode(u, code.codewords(budget), model);
}

}  // namespace rankcode
