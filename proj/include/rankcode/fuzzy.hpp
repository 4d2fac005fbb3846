#pragma once

#include "rankcode/linear_code.hpp"

#include <string>
#include <vector>

namespace rankcode {

enum class ModelKind { kSymmetric, kUnidirectional, kAsymmetricOneToZero, kAsymmetricZeroToOne };

// p is the probability that a symbol is received without a transition.
struct ErrorModel {
  ModelKind kind = ModelKind::kSymmetric;
  double p = 0.9;

  ErrorModel(ModelKind k, double p_);
  double q() const { return 1.0 - p; }
  static ErrorModel parse(const std::string& name, double p);
};

const char* model_name(ModelKind k);

// f_u(v): probability-like membership of v in the fuzzy word around u.
double membership(const RankVector& u, const RankVector& v, const ErrorModel& model);

// sum over z in V^n of |f_a(z) - f_b(z)|, pairwise-summed in a fixed order.
double fuzzy_distance(const RankVector& a, const RankVector& b, const ErrorModel& model,
                      const Budget& budget = {});
double fuzzy_min_distance(const std::vector<RankVector>& code, const ErrorModel& model,
                          const Budget& budget = {});
double fuzzy_min_distance(const LinearRdCode& code, const ErrorModel& model, const Budget& budget = {});

// Codewords maximizing f_a(u); relative tolerance 1e-12.
std::vector<RankVector> theta_decode(const RankVector& u, const std::vector<RankVector>& code,
                                     const ErrorModel& model);
std::vector<RankVector> theta_decode(const RankVector& u, const LinearRdCode& code, const ErrorModel& model,
                                     const Budget& budget = {});

}  // namespace rankcode
