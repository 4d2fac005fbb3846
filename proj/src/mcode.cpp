#include "rankcode/mcode.hpp"

#include "rankcode/covering.hpp"
#include "rankcode/rank_metric.hpp"

namespace rankcode {

unsigned Component::length() const { return is_linear() ? linear().n() : circulant().length(); }

unsigned Component::min_distance(const Budget& budget) const {
  return is_linear() ? linear().min_distance(budget) : circulant().min_distance(budget);
}

unsigned Component::divisor(const Budget& budget) const {
  return is_linear() ? linear().divisor(budget) : circulant().divisor(budget);
}

ComponentFlags Component::flags(const Budget& budget) const {
  ComponentFlags f;
  f.is_divisible = divisor(budget) > 1;
  if (is_linear()) {
    f.is_mrd = linear().is_mrd(budget);
    f.is_amrd = linear().is_amrd(budget);
    f.is_plain_rd = !f.is_mrd;
  } else {
    f.is_circulant = true;
    f.is_cyclic_circulant = circulant().is_cyclic();
  }
  return f;
}

std::string Component::describe() const {
  if (is_linear())
    return "linear [" + std::to_string(linear().n()) + "," + std::to_string(linear().k()) + "] over GF(2^" +
           std::to_string(linear().field()->degree()) + ")";
  return "circulant N=" + std::to_string(circulant().length()) + " dim=" + std::to_string(circulant().dimension());
}

bool Component::comparable(const Component& o) const {
  if (is_linear() != o.is_linear()) return false;
  if (is_linear()) return same_field(linear().field(), o.linear().field()) && linear().n() == o.linear().n();
  return circulant().length() == o.circulant().length();
}

bool Component::contained_in(const Component& o) const {
  if (!comparable(o)) return false;
  return is_linear() ? linear().is_subcode_of(o.linear()) : circulant().is_subcode_of(o.circulant());
}

Ensemble::Ensemble(std::vector<Component> components) : components_(std::move(components)) {
  if (components_.empty()) throw InvalidArgument("an m-code needs at least one component");
  for (std::size_t i = 0; i < components_.size(); ++i)
    for (std::size_t j = i + 1; j < components_.size(); ++j) {
      const auto& a = components_[i];
      const auto& b = components_[j];
      if (a.contained_in(b) && b.contained_in(a))
        throw InvalidArgument("components " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " are the same code");
      if (a.contained_in(b) || b.contained_in(a))
        throw InvalidArgument("components " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " are nested");
    }
}

namespace {

unsigned norm_of(const Component& c, const MWord& x) {
  if (c.is_linear()) {
    const auto* v = std::get_if<RankVector>(&x);
    if (!v) throw InvalidArgument("expected a rank vector for a linear component");
    require_same_field(c.linear().field(), v->field());
    if (v->length() != c.linear().n()) throw InvalidArgument("vector length does not match its component");
    return rank_norm(*v);
  }
  const auto* w = std::get_if<CirculantWord>(&x);
  if (!w) throw InvalidArgument("expected a circulant word for a circulant component");
  if (w->length() != c.circulant().length()) throw InvalidArgument("word length does not match its component");
  return circulant_norm(*w);
}

MWord sum(const MWord& a, const MWord& b) {
  if (a.index() != b.index()) throw InvalidArgument("m-words of different kinds");
  if (const auto* v = std::get_if<RankVector>(&a)) return *v + std::get<RankVector>(b);
  return std::get<CirculantWord>(a) + std::get<CirculantWord>(b);
}

void check_shape(const Ensemble& E, std::size_t size) {
  if (size != E.m()) throw InvalidArgument("m-word has " + std::to_string(size) + " parts, ensemble has " + std::to_string(E.m()));
}

}  // namespace

std::vector<unsigned> m_rank(const Ensemble& E, const std::vector<MWord>& xs) {
  check_shape(E, xs.size());
  std::vector<unsigned> out;
  for (unsigned i = 0; i < E.m(); ++i) out.push_back(norm_of(E[i], xs[i]));
  return out;
}

std::vector<unsigned> m_distance(const Ensemble& E, const std::vector<MWord>& xs, const std::vector<MWord>& ys) {
  check_shape(E, xs.size());
  check_shape(E, ys.size());
  std::vector<unsigned> out;
  for (unsigned i = 0; i < E.m(); ++i) out.push_back(norm_of(E[i], sum(xs[i], ys[i])));
  return out;
}

std::vector<unsigned> m_min_distance(const Ensemble& E, const Budget& budget) {
  std::vector<unsigned> out;
  for (const auto& c : E.components()) out.push_back(c.min_distance(budget));
  return out;
}

std::vector<unsigned> m_divisor(const Ensemble& E, const Budget& budget) {
  std::vector<unsigned> out;
  for (const auto& c : E.components()) out.push_back(c.divisor(budget));
  return out;
}

std::vector<unsigned> m_covering_radius(const Ensemble& E, const std::vector<unsigned>& multiplicities,
                                        const Budget& budget) {
  if (multiplicities.size() != E.m()) throw InvalidArgument("one multiplicity per component is required");
  std::vector<unsigned> out;
  for (unsigned i = 0; i < E.m(); ++i) {
    const auto& c = E[i];
    const unsigned mi = multiplicities[i];
    if (c.is_linear()) {
      out.push_back(mi == 1 ? covering_radius(c.linear(), budget)
                            : multi_covering_exact(CoveringSpace::of(c.linear(), budget), mi, budget).t);
    } else {
      out.push_back(multi_covering_exact(CoveringSpace::of(c.circulant(), budget), mi, budget).t);
    }
  }
  return out;
}

std::set<std::string> classify_ensemble(const Ensemble& E, const Budget& budget) {
  const unsigned m = E.m();
  std::vector<ComponentFlags> f;
  for (const auto& c : E.components()) f.push_back(c.flags(budget));
  auto count = [&](auto pred) {
    unsigned k = 0;
    for (const auto& x : f) k += pred(x) ? 1 : 0;
    return k;
  };
  const unsigned mrd = count([](const ComponentFlags& x) { return x.is_mrd; });
  const unsigned amrd = count([](const ComponentFlags& x) { return x.is_amrd; });
  const unsigned plain = count([](const ComponentFlags& x) { return x.is_plain_rd; });
  const unsigned circ = count([](const ComponentFlags& x) { return x.is_circulant; });
  const unsigned cyc = count([](const ComponentFlags& x) { return x.is_cyclic_circulant; });
  const unsigned noncyc = circ - cyc;
  const unsigned linear = m - circ;

  std::set<std::string> labels{"rd-m-code"};
  if (m == 2) labels.insert("bicode");
  if (m == 3) labels.insert("tricode");
  if (mrd == m) labels.insert("mrd-m-code");
  if (amrd == m) labels.insert("amrd-m-code");
  if (m >= 3 && linear == m && mrd >= 1 && plain >= 1)
    labels.insert("quasi-(" + std::to_string(mrd) + "," + std::to_string(plain) + ")-mrd");

  if (m == 2) {
    if (mrd == 1 && plain == 1) {
      const auto& a = E[0].linear();
      const auto& b = E[1].linear();
      if (a.n() != b.n() && a.k() != b.k()) labels.insert("semi-mrd-bicode");
    }
    if (plain == 1 && circ == 1) labels.insert("semi-circulant-type-I");
    if (mrd == 1 && circ == 1) labels.insert("semi-circulant-type-II");
    if (plain == 1 && cyc == 1) labels.insert("semicyclic-circulant-type-I");
    if (mrd == 1 && cyc == 1) labels.insert("semicyclic-circulant-type-II");
    if (circ == 2 && cyc >= 1) labels.insert("semicyclic-circulant");
  }
  if (m >= 4 && plain >= 1 && mrd >= 1 && cyc >= 1 && noncyc >= 1) labels.insert("mixed-quasi-circulant");
  if (m >= 2 && circ == m && cyc >= 1 && noncyc >= 1) labels.insert("mixed-circulant");

  if (count([](const ComponentFlags& x) { return x.is_divisible; }) == m) labels.insert("m-divisible");

  // Divisibility mixes: a nonempty group of divisible linear codes alongside a
  // nonempty group of non-divisible components of one kind. A divisible
  // circulant belongs to neither group and rules the mix out.
  if (m >= 2) {
    unsigned div_linear = 0, div_mrd = 0, other = 0, other_linear = 0, other_mrd = 0, other_amrd = 0,
             other_circ = 0, stray = 0;
    for (const auto& x : f) {
      const bool lin = !x.is_circulant;
      if (lin && x.is_divisible) {
        ++div_linear;
        div_mrd += x.is_mrd;
        continue;
      }
      if (x.is_divisible) {
        ++stray;
        continue;
      }
      ++other;
      other_linear += lin;
      other_mrd += lin && x.is_mrd;
      other_amrd += lin && x.is_amrd;
      other_circ += x.is_circulant;
    }
    const std::string prefix = m == 2 ? "semidivisible-" : "quasi-divisible-";
    if (div_linear >= 1 && other >= 1 && stray == 0) {
      if (other_linear == other) labels.insert(prefix + "rd");
      if (other_mrd == other && (m == 2 || div_mrd == div_linear)) labels.insert(prefix + "mrd");
      if (other_circ == other) labels.insert(prefix + "circulant");
      if (other_amrd == other) labels.insert(prefix + "amrd");
    }
  }
  return labels;
}

}  // namespace rankcode
