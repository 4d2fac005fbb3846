#include "rankcode/cli.hpp"

#include "rankcode/amrd.hpp"
#include "rankcode/code_io.hpp"
#include "rankcode/covering.hpp"
#include "rankcode/extremal.hpp"
#include "rankcode/fuzzy.hpp"
#include "rankcode/kernels.hpp"
#include "rankcode/mcode.hpp"
#include "rankcode/mrd.hpp"
#include "rankcode/rank_metric.hpp"
#include "rankcode/verify.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

namespace rankcode {
namespace {

// Ordered report: key/value lines and tables, printed aligned or as TSV.
class Report {
 public:
  explicit Report(bool tsv) : tsv_(tsv) {}

  void kv(const std::string& key, const std::string& value) { pending_kv_.push_back({key, value}); }
  void kv(const std::string& key, std::uint64_t value) { kv(key, std::to_string(value)); }
  void kv(const std::string& key, bool value) { kv(key, std::string(value ? "yes" : "no")); }
  void kv(const std::string& key, const char* value) { kv(key, std::string(value)); }
  void kv_double(const std::string& key, double value) { kv(key, fmt_double(value)); }

  void table(std::vector<std::string> header, std::vector<std::vector<std::string>> rows) {
    flush_kv();
    if (tsv_) {
      emit_tsv(header);
      for (const auto& r : rows) emit_tsv(r);
      return;
    }
    std::vector<std::size_t> width(header.size(), 0);
    for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
    for (const auto& r : rows)
      for (std::size_t i = 0; i < r.size() && i < width.size(); ++i) width[i] = std::max(width[i], r[i].size());
    auto line = [&](const std::vector<std::string>& r) {
      std::string s;
      for (std::size_t i = 0; i < r.size(); ++i) {
        if (i) s += "  ";
        s += r[i];
        if (i + 1 < r.size()) s.append(width[i] - r[i].size(), ' ');
      }
      out_ << s << "\n";
    };
    line(header);
    for (const auto& r : rows) line(r);
  }

  void text(const std::string& s) {
    flush_kv();
    out_ << s;
  }

  std::string str() {
    flush_kv();
    return out_.str();
  }

  static std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
  }

 private:
  void emit_tsv(const std::vector<std::string>& r) {
    for (std::size_t i = 0; i < r.size(); ++i) out_ << (i ? "\t" : "") << r[i];
    out_ << "\n";
  }

  void flush_kv() {
    std::size_t w = 0;
    for (const auto& [k, v] : pending_kv_) w = std::max(w, k.size());
    for (const auto& [k, v] : pending_kv_) {
      if (tsv_)
        out_ << k << "\t" << v << "\n";
      else
        out_ << k << ":" << std::string(w - k.size() + 1, ' ') << v << "\n";
    }
    pending_kv_.clear();
  }

  bool tsv_;
  std::ostringstream out_;
  std::vector<std::pair<std::string, std::string>> pending_kv_;
};

struct Globals {
  bool tsv = false;
  std::uint64_t seed = 1;
  int max_enum_bits = -1;
};

class VerificationFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Budget budget_of(const Globals& g) {
  Budget b = Budget::from_env();
  if (g.max_enum_bits >= 0) b.max_enum_bits = static_cast<unsigned>(g.max_enum_bits);
  return b;
}

std::string join_num(const std::vector<unsigned>& v, const char* sep = ",") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

RankVector parse_word(const FieldRef& ctx, unsigned n, const std::vector<std::string>& words) {
  if (words.size() != n)
    throw InvalidArgument("word has " + std::to_string(words.size()) + " coordinates, code length is " + std::to_string(n));
  std::vector<FieldElement> elems;
  for (const auto& w : words) elems.push_back(FieldElement::from_hex(ctx, w));
  return RankVector::from_elements(elems);
}

void add_globals(CLI::App& app, Globals& g) {
  app.add_flag("--tsv", g.tsv, "Tab-separated machine-readable output");
  app.add_option("--seed", g.seed, "Seed for randomized searches");
  app.add_option("--max-enum-bits", g.max_enum_bits, "log2 limit on exhaustive enumeration");
}

void report_code(Report& r, const LinearRdCode& code, const Budget& budget) {
  const auto rep = code.classify(budget);
  r.kv("N", std::uint64_t{code.field()->degree()});
  r.kv("modulus", to_hex(code.field()->modulus()));
  r.kv("n", std::uint64_t{rep.n});
  r.kv("k", std::uint64_t{rep.k});
  r.kv("d", std::uint64_t{rep.d});
  r.kv("mrd", rep.is_mrd);
  r.kv("amrd", rep.is_amrd);
  r.kv("divisor", std::uint64_t{rep.divisor});
  r.kv("correctable", std::uint64_t{rep.t});
  const auto& dist = code.rank_distribution(budget);
  std::vector<std::vector<std::string>> rows;
  for (std::size_t s = 0; s < dist.size(); ++s) rows.push_back({std::to_string(s), std::to_string(dist[s])});
  r.table({"rank", "count"}, rows);
}

using Handler = std::function<void(Report&)>;

}  // namespace

CommandResult run_command(const std::vector<std::string>& argv) {
  CLI::App app{"Rank-metric code laboratory"};
  app.require_subcommand(1);
  Globals g;
  add_globals(app, g);
  Handler handler;

  // field info
  auto* field = app.add_subcommand("field", "Finite field GF(2^N)")->require_subcommand(1);
  unsigned f_N = 0;
  std::string f_poly;
  {
    auto* c = field->add_subcommand("info", "Modulus, size and generator");
    c->add_option("--N", f_N, "Extension degree")->required();
    c->add_option("--poly", f_poly, "Irreducible modulus in hex");
    c->callback([&] {
      handler = [&](Report& r) {
        auto ctx = f_poly.empty() ? FieldContext::make(f_N)
                                  : FieldContext::make(f_N, static_cast<std::uint32_t>(parse_hex(f_poly)));
        r.kv("N", std::uint64_t{ctx->degree()});
        r.kv("modulus", to_hex(ctx->modulus()));
        r.kv("polynomial", ctx->modulus_string());
        r.kv("size", std::uint64_t{ctx->size()});
        r.kv("generator", to_hex(ctx->generator()));
        r.kv("kernel", kernels::backend_name(kernels::active_backend()));
      };
    });
  }

  // code
  auto* code = app.add_subcommand("code", "Linear rank-distance codes")->require_subcommand(1);
  std::string c_file, c_other;
  std::vector<std::string> c_word;
  unsigned c_r = 2;
  {
    auto* a = code->add_subcommand("analyze", "n, k, d, MRD/AMRD flags, divisor, rank distribution");
    a->add_option("--file", c_file, "Code definition file")->required();
    a->callback([&] { handler = [&](Report& r) { report_code(r, load_code(c_file), budget_of(g)); }; });

    auto* d = code->add_subcommand("decode", "Nearest codeword by exhaustive search");
    d->add_option("--file", c_file, "Code definition file")->required();
    d->add_option("--word", c_word, "Received word, one hex element per coordinate")->required();
    d->callback([&] {
      handler = [&](Report& r) {
        auto C = load_code(c_file);
        auto y = parse_word(C.field(), C.n(), c_word);
        auto res = decode_nearest(C, y, budget_of(g));
        r.kv("codeword", res.codeword.to_string());
        r.kv("distance", std::uint64_t{res.distance});
        r.kv("unique", res.unique);
      };
    });

    auto* p = code->add_subcommand("product", "Direct product C x D");
    p->add_option("--file", c_file, "First code")->required();
    p->add_option("--with", c_other, "Second code")->required();
    p->callback([&] { handler = [&](Report& r) { r.text(format_code(cartesian_product(load_code(c_file), load_code(c_other)))); }; });

    auto* f = code->add_subcommand("fold", "r-fold repetition (c|c|...|c)");
    f->add_option("--file", c_file, "Code definition file")->required();
    f->add_option("--r", c_r, "Repetition factor");
    f->callback([&] { handler = [&](Report& r) { r.text(format_code(fold_repetition(load_code(c_file), c_r))); }; });
  }

  // mrd
  auto* mrd = app.add_subcommand("mrd", "Gabidulin codes and MRD spectra")->require_subcommand(1);
  unsigned m_N = 0, m_n = 0, m_k = 0, m_q = 2;
  std::vector<std::string> m_g;
  {
    auto* nw = mrd->add_subcommand("new", "Gabidulin generator matrix");
    nw->add_option("--N", m_N)->required();
    nw->add_option("--n", m_n)->required();
    nw->add_option("--k", m_k)->required();
    nw->add_option("--g", m_g, "GF(2)-independent hex elements g_1..g_n (default 1, x, x^2, ...)");
    nw->callback([&] {
      handler = [&](Report& r) {
        auto ctx = FieldContext::make(m_N);
        if (m_g.empty()) {
          r.text(format_code(gabidulin_code(ctx, m_n, m_k)));
          return;
        }
        if (m_g.size() != m_n) throw InvalidArgument("--g needs n elements");
        std::vector<FieldElement> g;
        for (const auto& s : m_g) g.push_back(FieldElement::from_hex(ctx, s));
        r.text(format_code(gabidulin_code(g, m_k)));
      };
    });

    auto* sp = mrd->add_subcommand("spectrum", "Rank distribution A_s of an [n,k] MRD code");
    sp->add_option("--N", m_N)->required();
    sp->add_option("--n", m_n)->required();
    sp->add_option("--k", m_k)->required();
    sp->add_option("--q", m_q);
    sp->callback([&] {
      handler = [&](Report& r) {
        auto t = mrd_spectrum(m_n, m_k, m_q, m_N);
        r.kv("n", std::uint64_t{t.n});
        r.kv("k", std::uint64_t{t.k});
        r.kv("d", std::uint64_t{t.d});
        r.kv("Q", to_string(t.Q));
        r.kv("total", to_string(t.total()));
        std::vector<std::vector<std::string>> rows;
        for (std::size_t s = 0; s < t.A.size(); ++s) rows.push_back({std::to_string(s), to_string(t.A[s])});
        r.table({"s", "A_s"}, rows);
      };
    });

    auto* w = mrd->add_subcommand("witness", "A_d and A_{d+1}; both positive means not divisible");
    w->add_option("--N", m_N)->required();
    w->add_option("--n", m_n)->required();
    w->add_option("--k", m_k)->required();
    w->add_option("--q", m_q);
    w->callback([&] {
      handler = [&](Report& r) {
        auto [ad, ad1] = nondivisibility_witness(m_n, m_k, m_q, m_N);
        r.kv("d", std::uint64_t{m_n - m_k + 1});
        r.kv("A_d", to_string(ad));
        r.kv("A_d+1", to_string(ad1));
        r.kv("divisible", !(ad > 0 && ad1 > 0));
      };
    });
  }

  // circulant
  auto* circ = app.add_subcommand("circulant", "Circulant words and circulant rank codes")->require_subcommand(1);
  unsigned ci_N = 0;
  std::string ci_poly;
  std::vector<std::string> ci_basis;
  {
    auto* nm = circ->add_subcommand("norm", "Rank of the circulant matrix of a(x)");
    nm->add_option("--N", ci_N)->required();
    nm->add_option("--poly", ci_poly, "hex or symbolic, e.g. 1+x+x^3")->required();
    nm->callback([&] {
      handler = [&](Report& r) {
        auto w = CirculantWord::parse(ci_N, ci_poly);
        const std::uint64_t modulus = (std::uint64_t{1} << ci_N) | 1;
        r.kv("word", w.to_hex());
        r.kv("gcd", w.is_zero() ? to_hex(modulus) : to_hex(poly_gcd_gf2(w.poly(), modulus)));
        r.kv("norm", std::uint64_t{circulant_norm(w)});
        r.kv("matrix_rank", std::uint64_t{circulant_norm_by_rank(w)});
      };
    });

    auto* cc = circ->add_subcommand("code", "Analyze the GF(2)-span of circulant words");
    cc->add_option("--N", ci_N)->required();
    cc->add_option("--basis", ci_basis, "Basis words")->required();
    cc->callback([&] {
      handler = [&](Report& r) {
        std::vector<CirculantWord> basis;
        for (const auto& s : ci_basis) basis.push_back(CirculantWord::parse(ci_N, s));
        CirculantRankCode C(ci_N, basis);
        const Budget b = budget_of(g);
        r.kv("N", std::uint64_t{C.length()});
        r.kv("dimension", std::uint64_t{C.dimension()});
        r.kv("d", std::uint64_t{C.min_distance(b)});
        r.kv("divisor", std::uint64_t{C.divisor(b)});
        r.kv("cyclic", C.is_cyclic());
        r.kv("covering_radius", std::uint64_t{covering_radius(C, b)});
        const auto dist = C.norm_distribution(b);
        std::vector<std::vector<std::string>> rows;
        for (std::size_t s = 0; s < dist.size(); ++s) rows.push_back({std::to_string(s), std::to_string(dist[s])});
        r.table({"norm", "count"}, rows);
      };
    });
  }

  // amrd
  auto* amrd = app.add_subcommand("amrd", "Single-error AMRD codes from 3 x n parity checks")->require_subcommand(1);
  std::string a_file, a_mode = "distinct";
  unsigned a_N = 0, a_n = 0, a_k = 0, a_tries = 10000;
  auto mode_of = [&] {
    if (a_mode == "distinct") return SubsetMode::kDistinct;
    if (a_mode == "disjoint") return SubsetMode::kDisjoint;
    throw InvalidArgument("--mode must be distinct or disjoint");
  };
  {
    auto* ch = amrd->add_subcommand("check", "Test the column-subset condition on H");
    ch->add_option("--file", a_file, "H in code-definition format with k=3")->required();
    ch->add_option("--mode", a_mode, "distinct | disjoint");
    ch->callback([&] {
      handler = [&](Report& r) {
        auto H = load_matrix(a_file);
        auto rep = theorem14_condition(H, mode_of());
        r.kv("holds", rep.holds);
        r.kv("pairs_checked", to_string(rep.pairs_checked));
        if (rep.violating_pair) {
          auto [P1, P2] = *rep.violating_pair;
          r.kv("P1", to_hex(P1));
          r.kv("P2", to_hex(P2));
          auto x = low_rank_witness(H, P1, P2);
          r.kv("witness", x.to_string());
          r.kv("witness_rank", std::uint64_t{rank_norm(x)});
        }
      };
    });

    auto* bd = amrd->add_subcommand("build", "Code {x : xH^T = 0}; without --file, search a random H");
    bd->add_option("--file", a_file, "H in code-definition format with k=3");
    bd->add_option("--N", a_N, "Field degree for the search");
    bd->add_option("--n", a_n, "Length for the search");
    bd->add_option("--tries", a_tries, "Random matrices to try");
    bd->add_option("--mode", a_mode, "distinct | disjoint");
    bd->callback([&] {
      handler = [&](Report& r) {
        std::optional<FieldMatrix> H;
        if (!a_file.empty()) {
          H = load_matrix(a_file);
        } else {
          if (!a_N || !a_n) throw InvalidArgument("give --file, or --N and --n to search");
          std::mt19937_64 rng(g.seed);
          H = search_parity_check(FieldContext::make(a_N), a_n, rng, a_tries, mode_of());
          if (!H) throw InvalidArgument("no matrix passed within --tries");
          r.text("# parity check\n" + format_matrix(*H));
        }
        r.text("# code\n" + format_code(build_amrd_from_H(*H, mode_of())));
      };
    });

    auto* cm = amrd->add_subcommand("compare", "Rank ball vs Hamming ball of radius (n-k-1)/2");
    cm->add_option("--N", a_N)->required();
    cm->add_option("--n", a_n)->required();
    cm->add_option("--k", a_k)->required();
    cm->callback([&] {
      handler = [&](Report& r) {
        auto b = rank_vs_hamming_counts(a_n, a_k, a_N);
        r.kv("radius", std::uint64_t{b.r});
        r.kv("rank_ball", to_string(b.rank_ball));
        r.kv("hamming_ball", to_string(b.hamming_ball));
      };
    });
  }

  // extremal
  auto* ext = app.add_subcommand("extremal", "Constant-rank sets and covering-code sizes")->require_subcommand(1);
  unsigned e_N = 0, e_n = 0, e_r = 0, e_d = 0, e_t = 0, e_m = 1;
  bool e_greedy = false;
  {
    auto* a = ext->add_subcommand("a", "A(n,r,d): largest rank-r set with pairwise distance >= d");
    a->add_option("--N", e_N)->required();
    a->add_option("--n", e_n)->required();
    a->add_option("--r", e_r)->required();
    a->add_option("--d", e_d)->required();
    auto* ex = a->add_flag("--exact", "Exact branch and bound (default)");
    a->add_flag("--greedy", e_greedy, "Greedy lower bound")->excludes(ex);
    a->callback([&] {
      handler = [&](Report& r) {
        auto res = a_search(FieldContext::make(e_N), e_n, e_r, e_d, e_greedy ? SearchMode::kGreedy : SearchMode::kExact,
                            budget_of(g));
        r.kv("size", res.size);
        r.kv("exact", res.exact);
        r.kv("nodes", res.nodes);
        r.kv("verified", is_constant_rank_set(res.witness));
        std::vector<std::vector<std::string>> rows;
        for (const auto& w : res.witness.members) rows.push_back({w.to_string()});
        r.table({"witness"}, rows);
      };
    });

    auto* b = ext->add_subcommand("bound", "prod_{i<=n-d} (2^N - 2^i), an upper bound on A(n,n,d)");
    b->add_option("--N", e_N)->required();
    b->add_option("--n", e_n)->required();
    b->add_option("--d", e_d)->required();
    b->callback([&] { handler = [&](Report& r) { r.kv("bound", to_string(a_upper_bound(e_n, e_d, e_N))); }; });

    auto* k = ext->add_subcommand("minK", "Least |C| with t_m(C) <= t by exhaustive search, with bounds");
    k->add_option("--N", e_N)->required();
    k->add_option("--n", e_n)->required();
    k->add_option("--t", e_t)->required();
    k->add_option("--m", e_m);
    k->callback([&] {
      handler = [&](Report& r) {
        auto sb = sphere_bound_min_K(e_n, e_t, e_m, e_N);
        r.kv("sphere_bound", sb ? to_string(*sb) : std::string("inf"));
        auto res = exact_min_K(e_n, e_t, e_m, e_N);
        r.kv("K", res.K ? std::to_string(*res.K) : std::string("inf"));
        auto ctx = FieldContext::make(e_N);
        std::vector<std::vector<std::string>> rows;
        for (auto p : res.witness) {
          Packed v{};
          for (unsigned j = 0; j < e_n; ++j) v[j] = static_cast<std::uint16_t>((p >> (j * e_N)) & ctx->mask());
          rows.push_back({RankVector(ctx, e_n, v).to_string()});
        }
        if (!rows.empty()) r.table({"witness"}, rows);
      };
    });
  }

  // covering
  auto* cov = app.add_subcommand("covering", "Covering and multi-covering radii")->require_subcommand(1);
  std::string v_file;
  unsigned v_m = 1, v_N = 0, v_n = 0, v_t = 0;
  std::uint64_t v_samples = 0;
  {
    auto* rad = cov->add_subcommand("radius", "t(C), exact");
    rad->add_option("--file", v_file)->required();
    rad->callback([&] { handler = [&](Report& r) { r.kv("t", std::uint64_t{covering_radius(load_code(v_file), budget_of(g))}); }; });

    auto* mu = cov->add_subcommand("multi", "t_m(C), exact or a sampled lower bound");
    mu->add_option("--file", v_file)->required();
    mu->add_option("--m", v_m);
    auto* ex = mu->add_flag("--exact", "Exact (default)");
    mu->add_option("--samples", v_samples, "Random m-sets; gives a lower bound")->excludes(ex);
    mu->callback([&] {
      handler = [&](Report& r) {
        const Budget b = budget_of(g);
        auto C = load_code(v_file);
        auto space = CoveringSpace::of(C, b);
        auto rep = v_samples ? multi_covering_sampled(space, v_m, v_samples, g.seed) : multi_covering_exact(space, v_m, b);
        r.kv("m", std::uint64_t{rep.m});
        r.kv("t", std::uint64_t{rep.t});
        r.kv("exact", rep.exact);
        std::vector<std::vector<std::string>> rows;
        for (auto p : rep.witness) rows.push_back({space.describe(p)});
        if (!rows.empty()) r.table({"witness"}, rows);
      };
    });

    auto* sb = cov->add_subcommand("sphere-bound", "Lower bound on |C| for t_m(C) <= t");
    sb->add_option("--N", v_N)->required();
    sb->add_option("--n", v_n)->required();
    sb->add_option("--t", v_t)->required();
    sb->add_option("--m", v_m);
    sb->callback([&] {
      handler = [&](Report& r) {
        auto bnd = sphere_bound_min_K(v_n, v_t, v_m, v_N);
        r.kv("bound", bnd ? to_string(*bnd) : std::string("inf"));
        r.kv("sphere_volume", to_string(sphere_volume(v_n, v_t, v_N)));
      };
    });
  }

  // fuzzy
  auto* fz = app.add_subcommand("fuzzy", "Fuzzy decoding")->require_subcommand(1);
  std::string z_file, z_model = "symmetric";
  std::vector<std::string> z_word;
  double z_p = 0.9;
  {
    auto* de = fz->add_subcommand("decode", "Codewords of maximal membership");
    de->add_option("--file", z_file)->required();
    de->add_option("--word", z_word)->required();
    de->add_option("--model", z_model, "symmetric | unidirectional | asym10 | asym01");
    de->add_option("--p", z_p, "Probability of no transition");
    de->callback([&] {
      handler = [&](Report& r) {
        auto C = load_code(z_file);
        auto model = ErrorModel::parse(z_model, z_p);
        auto u = parse_word(C.field(), C.n(), z_word);
        std::vector<std::vector<std::string>> rows;
        for (const auto& w : theta_decode(u, C, model, budget_of(g)))
          rows.push_back({w.to_string(), Report::fmt_double(membership(w, u, model)), std::to_string(rank_distance(w, u))});
        r.table({"codeword", "membership", "distance"}, rows);
      };
    });

    auto* md = fz->add_subcommand("mindist", "Least fuzzy distance between codewords");
    md->add_option("--file", z_file)->required();
    md->add_option("--model", z_model);
    md->add_option("--p", z_p);
    md->callback([&] {
      handler = [&](Report& r) {
        auto C = load_code(z_file);
        r.kv_double("fuzzy_min_distance", fuzzy_min_distance(C, ErrorModel::parse(z_model, z_p), budget_of(g)));
      };
    });
  }

  // mcode
  auto* mc = app.add_subcommand("mcode", "Ensembles of m component codes")->require_subcommand(1);
  std::string mc_file;
  std::vector<unsigned> mc_mult;
  {
    auto* cl = mc->add_subcommand("classify", "Taxonomy labels");
    cl->add_option("--file", mc_file)->required();
    cl->callback([&] {
      handler = [&](Report& r) {
        std::vector<std::vector<std::string>> rows;
        for (const auto& l : classify_ensemble(load_ensemble(mc_file), budget_of(g))) rows.push_back({l});
        r.table({"label"}, rows);
      };
    });

    auto* an = mc->add_subcommand("analyze", "Componentwise parameters");
    an->add_option("--file", mc_file)->required();
    an->add_option("--mult", mc_mult, "Multiplicities m_i for the covering radii")->delimiter(',');
    an->callback([&] {
      handler = [&](Report& r) {
        const Budget b = budget_of(g);
        auto E = load_ensemble(mc_file);
        r.kv("m", std::uint64_t{E.m()});
        r.kv("min_distance", "(" + join_num(m_min_distance(E, b)) + ")");
        r.kv("divisor", "(" + join_num(m_divisor(E, b)) + ")");
        if (!mc_mult.empty()) r.kv("covering_radius", "(" + join_num(m_covering_radius(E, mc_mult, b)) + ")");
        std::vector<std::vector<std::string>> rows;
        for (unsigned i = 0; i < E.m(); ++i) {
          const auto f = E[i].flags(b);
          std::string kind = f.is_circulant ? (f.is_cyclic_circulant ? "cyclic-circulant" : "circulant")
                                            : (f.is_mrd ? "mrd" : (f.is_amrd ? "amrd" : "rd"));
          rows.push_back({std::to_string(i + 1), kind, E[i].describe(), std::to_string(E[i].min_distance(b)),
                          std::to_string(E[i].divisor(b))});
        }
        r.table({"component", "kind", "code", "d", "divisor"}, rows);
      };
    });
  }

  // verify
  auto* ver = app.add_subcommand("verify", "Run a verification suite");
  std::string suite = "all";
  ver->add_option("--suite", suite, "chapter1 | counting | covering | circulant | mrd | fuzzy | mcode | all");
  ver->callback([&] {
    handler = [&](Report& r) {
      VerifyOptions opts;
      opts.seed = g.seed;
      opts.budget = budget_of(g);
      auto rep = run_suite(suite, opts);
      std::vector<std::vector<std::string>> rows;
      for (const auto& c : rep.checks)
        rows.push_back({std::to_string(c.id), c.pass() ? "PASS" : "FAIL", c.name, c.expected, c.observed});
      r.table({"id", "status", "check", "expected", "observed"}, rows);
      for (const auto& c : rep.checks)
        if (!c.pass())
          for (const auto& d : c.details) r.text("# " + std::to_string(c.id) + ": " + d + "\n");
      if (!rep.all_pass()) throw VerificationFailed("verification failed");
    };
  });

  CommandResult result;
  for (std::size_t i = 0; i < argv.size(); ++i) {
    const auto& a = argv[i];
    if (a.empty() || a[0] == '-') continue;
    if (i > 0 && (argv[i - 1] == "--seed" || argv[i - 1] == "--max-enum-bits")) continue;
    if (!app.get_subcommand_no_throw(a)) {
      result.exit_code = 2;
      result.err = "error: unknown command '" + a + "'\n";
      return result;
    }
    break;
  }
  try {
    std::vector<std::string> args(argv.rbegin(), argv.rend());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    result.out = app.help();
    return result;
  } catch (const CLI::CallForAllHelp&) {
    result.out = app.help("", CLI::AppFormatMode::All);
    return result;
  } catch (const CLI::ParseError& e) {
    result.exit_code = 2;
    result.err = std::string("error: ") + e.what() + "\n";
    return result;
  }

  Report report(g.tsv);
  try {
    handler(report);
    result.out = report.str();
  } catch (const VerificationFailed& e) {
    result.exit_code = 1;
    result.out = report.str();
    result.err = std::string("error: ") + e.what() + "\n";
  } catch (const ParseError& e) {
    result.exit_code = 2;
    result.err = std::string("error: ") + e.what() + "\n";
  } catch (const InvalidArgument& e) {
    result.exit_code = 2;
    result.err = std::string("error: ") + e.what() + "\n";
  } catch (const BudgetExceeded& e) {
    result.exit_code = 3;
    result.err = std::string("error: ") + e.what() + "\n";
  } catch (const std::exception& e) {
    result.exit_code = 2;
    result.err = std::string("error: ") + e.what() + "\n";
  }
  return result;
}

}  // namespace rankcode
