#pragma once

#include "rankcode/circulant.hpp"
#include "rankcode/linear_code.hpp"

#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace rankcode {

struct ComponentFlags {
  bool is_mrd = false;
  bool is_amrd = false;
  bool is_plain_rd = false;  // linear, not MRD
  bool is_circulant = false;
  bool is_cyclic_circulant = false;
  bool is_divisible = false;
};

class Component {
 public:
  Component(LinearRdCode code) : code_(std::move(code)) {}
  Component(CirculantRankCode code) : code_(std::move(code)) {}

  bool is_linear() const { return std::holds_alternative<LinearRdCode>(code_); }
  const LinearRdCode& linear() const { return std::get<LinearRdCode>(code_); }
  const CirculantRankCode& circulant() const { return std::get<CirculantRankCode>(code_); }

  unsigned length() const;
  unsigned min_distance(const Budget& budget = {}) const;
  unsigned divisor(const Budget& budget = {}) const;
  ComponentFlags flags(const Budget& budget = {}) const;
  std::string describe() const;

  // Same ambient space, so containment is meaningful.
  bool comparable(const Component& o) const;
  bool contained_in(const Component& o) const;

 private:
  std::variant<LinearRdCode, CirculantRankCode> code_;
};

using MWord = std::variant<RankVector, CirculantWord>;

// Ordered tuple of m >= 1 distinct, mutually non-nested components.
class Ensemble {
 public:
  explicit Ensemble(std::vector<Component> components);

  unsigned m() const { return static_cast<unsigned>(components_.size()); }
  const std::vector<Component>& components() const { return components_; }
  const Component& operator[](unsigned i) const { return components_[i]; }

 private:
  std::vector<Component> components_;
};

std::vector<unsigned> m_rank(const Ensemble& E, const std::vector<MWord>& xs);
std::vector<unsigned> m_distance(const Ensemble& E, const std::vector<MWord>& xs, const std::vector<MWord>& ys);
std::vector<unsigned> m_min_distance(const Ensemble& E, const Budget& budget = {});
std::vector<unsigned> m_divisor(const Ensemble& E, const Budget& budget = {});
// Per-component exact multi-covering radii for multiplicities m_i.
std::vector<unsigned> m_covering_radius(const Ensemble& E, const std::vector<unsigned>& multiplicities,
                                        const Budget& budget = {});

std::set<std::string> classify_ensemble(const Ensemble& E, const Budget& budget = {});

}  // namespace rankcode
