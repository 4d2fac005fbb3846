#include "rankcode/code_io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

namespace rankcode {
namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> words;
};

std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> out;
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ss(raw);
    Line line{number, {}};
    for (std::string w; ss >> w;) line.words.push_back(w);
    if (!line.words.empty()) out.push_back(std::move(line));
  }
  return out;
}

unsigned parse_nat(const Line& line, const std::string& text, const std::string& key) {
  unsigned v = 0;
  auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || p != text.data() + text.size() || text.empty())
    throw ParseError(line.number, "expected a number for " + key + ", got '" + text + "'");
  return v;
}

// key=value pairs after the leading keyword.
std::map<std::string, std::string> keyvals(const Line& line, std::initializer_list<const char*> allowed) {
  std::map<std::string, std::string> kv;
  for (std::size_t i = 1; i < line.words.size(); ++i) {
    const auto& w = line.words[i];
    auto eq = w.find('=');
    if (eq == std::string::npos) throw ParseError(line.number, "expected key=value, got '" + w + "'");
    std::string key = w.substr(0, eq);
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) throw ParseError(line.number, "unknown key '" + key + "'");
    kv[key] = w.substr(eq + 1);
  }
  return kv;
}

std::uint64_t hex_at(const Line& line, const std::string& text) {
  try {
    return parse_hex(text);
  } catch (const std::exception&) {
    throw ParseError(line.number, "bad hex value '" + text + "'");
  }
}

const std::string& require_key(const Line& line, const std::map<std::string, std::string>& kv, const std::string& key) {
  auto it = kv.find(key);
  if (it == kv.end()) throw ParseError(line.number, "missing " + key + "=");
  return it->second;
}

// Cursor over the token lines of one block.
struct Block {
  const std::vector<Line>& lines;
  std::size_t pos;
  std::size_t end;
  std::size_t last_number;

  bool done() const { return pos >= end; }
  const Line& next(const char* expected) {
    if (done()) throw ParseError(last_number, std::string("unexpected end of input, expected ") + expected);
    return lines[pos++];
  }
};

FieldMatrix read_matrix(Block& b) {
  const Line& fl = b.next("'field' line");
  if (fl.words[0] != "field") throw ParseError(fl.number, "expected 'field N=... poly=...', got '" + fl.words[0] + "'");
  auto fkv = keyvals(fl, {"N", "poly"});
  const unsigned N = parse_nat(fl, require_key(fl, fkv, "N"), "N");
  FieldRef ctx;
  try {
    if (auto it = fkv.find("poly"); it != fkv.end()) {
      const std::uint64_t poly = hex_at(fl, it->second);
      if (poly > 0x1ffff) throw InvalidArgument("modulus too large");
      ctx = FieldContext::make(N, static_cast<std::uint32_t>(poly));
    } else {
      ctx = FieldContext::make(N);
    }
  } catch (const InvalidArgument& e) {
    throw ParseError(fl.number, e.what());
  }

  const Line& cl = b.next("'code' line");
  if (cl.words[0] != "code") throw ParseError(cl.number, "expected 'code n=... k=...', got '" + cl.words[0] + "'");
  auto ckv = keyvals(cl, {"n", "k"});
  const unsigned n = parse_nat(cl, require_key(cl, ckv, "n"), "n");
  const unsigned k = parse_nat(cl, require_key(cl, ckv, "k"), "k");
  if (n == 0 || n > kMaxLength) throw ParseError(cl.number, "n must be in 1.." + std::to_string(kMaxLength));
  if (k == 0 || k > n) throw ParseError(cl.number, "k must be in 1..n");

  std::vector<std::uint16_t> data;
  data.reserve(std::size_t(n) * k);
  for (unsigned r = 0; r < k; ++r) {
    const Line& rl = b.next("'row' line");
    if (rl.words[0] != "row") throw ParseError(rl.number, "expected 'row', got '" + rl.words[0] + "'");
    if (rl.words.size() != n + 1)
      throw ParseError(rl.number, "row has " + std::to_string(rl.words.size() - 1) + " entries, expected " +
                                      std::to_string(n));
    for (unsigned c = 0; c < n; ++c) {
      const std::uint64_t v = hex_at(rl, rl.words[c + 1]);
      if (v >= ctx->size()) throw ParseError(rl.number, "element '" + rl.words[c + 1] + "' outside GF(2^" + std::to_string(N) + ")");
      data.push_back(static_cast<std::uint16_t>(v));
    }
  }
  return FieldMatrix(ctx, k, n, std::move(data));
}

LinearRdCode to_code(const FieldMatrix& m, std::size_t line) {
  try {
    return LinearRdCode(m);
  } catch (const InvalidArgument& e) {
    throw ParseError(line, e.what());
  }
}

CirculantRankCode read_circulant(Block& b) {
  const Line& hl = b.next("'circulant' line");
  auto kv = keyvals(hl, {"N"});
  const unsigned N = parse_nat(hl, require_key(hl, kv, "N"), "N");
  if (N < 1 || N > 16) throw ParseError(hl.number, "circulant N must be in 1..16");
  std::vector<CirculantWord> basis;
  std::size_t last = hl.number;
  while (!b.done()) {
    const Line& bl = b.next("'basis' line");
    if (bl.words[0] != "basis") throw ParseError(bl.number, "expected 'basis', got '" + bl.words[0] + "'");
    if (bl.words.size() < 2) throw ParseError(bl.number, "empty basis line");
    for (std::size_t i = 1; i < bl.words.size(); ++i) {
      try {
        basis.push_back(CirculantWord::parse(N, bl.words[i]));
      } catch (const InvalidArgument& e) {
        throw ParseError(bl.number, e.what());
      }
    }
    last = bl.number;
  }
  if (basis.empty()) throw ParseError(hl.number, "circulant component without basis");
  try {
    return CirculantRankCode(N, std::move(basis));
  } catch (const InvalidArgument& e) {
    throw ParseError(last, e.what());
  }
}

void expect_end(const Block& b) {
  if (!b.done()) throw ParseError(b.lines[b.pos].number, "unexpected trailing line '" + b.lines[b.pos].words[0] + "'");
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InvalidArgument("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

FieldMatrix parse_matrix(std::istream& in) {
  auto lines = tokenize(in);
  Block b{lines, 0, lines.size(), lines.empty() ? 1 : lines.back().number};
  FieldMatrix m = read_matrix(b);
  expect_end(b);
  return m;
}

LinearRdCode parse_code(std::istream& in) {
  auto lines = tokenize(in);
  Block b{lines, 0, lines.size(), lines.empty() ? 1 : lines.back().number};
  FieldMatrix m = read_matrix(b);
  expect_end(b);
  return to_code(m, lines.size() > 1 ? lines[1].number : 1);
}

Ensemble parse_ensemble(std::istream& in) {
  auto lines = tokenize(in);
  std::vector<Component> comps;
  std::size_t start = 0;
  auto flush = [&](std::size_t end, std::size_t sep_line) {
    if (start == end) throw ParseError(sep_line, "empty component");
    Block b{lines, start, end, lines[end - 1].number};
    if (lines[start].words[0] == "circulant") {
      comps.emplace_back(read_circulant(b));
    } else {
      FieldMatrix m = read_matrix(b);
      expect_end(b);
      comps.emplace_back(to_code(m, lines[start + 1].number));
    }
  };
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].words[0] == "---") {
      flush(i, lines[i].number);
      start = i + 1;
    }
  }
  flush(lines.size(), lines.empty() ? 1 : lines.back().number);
  try {
    return Ensemble(std::move(comps));
  } catch (const InvalidArgument& e) {
    throw ParseError(lines.empty() ? 1 : lines.back().number, e.what());
  }
}

FieldMatrix parse_matrix_text(const std::string& text) {
  std::istringstream ss(text);
  return parse_matrix(ss);
}
LinearRdCode parse_code_text(const std::string& text) {
  std::istringstream ss(text);
  return parse_code(ss);
}
Ensemble parse_ensemble_text(const std::string& text) {
  std::istringstream ss(text);
  return parse_ensemble(ss);
}

std::string format_matrix(const FieldMatrix& m) {
  std::ostringstream out;
  out << "field N=" << m.field()->degree() << " poly=" << to_hex(m.field()->modulus()) << "\n";
  out << "code n=" << m.cols() << " k=" << m.rows() << "\n";
  for (unsigned r = 0; r < m.rows(); ++r) {
    out << "row";
    for (unsigned c = 0; c < m.cols(); ++c) out << ' ' << to_hex(m(r, c));
    out << "\n";
  }
  return out.str();
}

std::string format_code(const LinearRdCode& code) { return format_matrix(code.generator()); }

std::string format_circulant(const CirculantRankCode& code) {
  std::ostringstream out;
  out << "circulant N=" << code.length() << "\nbasis";
  for (const auto& w : code.basis()) out << ' ' << w.to_hex();
  out << "\n";
  return out.str();
}

std::string format_ensemble(const Ensemble& e) {
  std::string out;
  for (unsigned i = 0; i < e.m(); ++i) {
    if (i) out += "---\n";
    out += e[i].is_linear() ? format_code(e[i].linear()) : format_circulant(e[i].circulant());
  }
  return out;
}

LinearRdCode load_code(const std::string& path) { return parse_code_text(read_file(path)); }
FieldMatrix load_matrix(const std::string& path) { return parse_matrix_text(read_file(path)); }
Ensemble load_ensemble(const std::string& path) { return parse_ensemble_text(read_file(path)); }

}  // namespace rankcode
