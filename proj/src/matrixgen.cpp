#include "legdet/matrixgen.hpp"

#include <cctype>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <string_view>

namespace legdet {

int var_index(unsigned bit) {
  switch (bit) {
    case VX: return 0;
    case VY: return 1;
    case VZ: return 2;
    case VW: return 3;
  }
  throw std::invalid_argument("var_index: not a single variable bit");
}

char var_name(int index) {
  static const char names[4] = {'x', 'y', 'z', 'w'};
  if (index < 0 || index > 3) throw std::invalid_argument("var_name: index out of range");
  return names[index];
}

long long Atom::eval(long long j, long long k) const {
  return alpha * j * j + beta * j * k + gamma * k * k + delta * j +
         eps_coef * k + zeta;
}

long MatrixSpec::dim() const {
  return static_cast<long>(row_hi - row_lo + 1);
}

void MatrixSpec::validate() const {
  if (modulus < 3 || modulus % 2 == 0)
    throw std::invalid_argument("matrix spec: modulus must be odd and > 1");
  if (row_hi - row_lo != col_hi - col_lo)
    throw std::invalid_argument("matrix spec: row and column ranges differ in length");
  if (row_hi < row_lo)
    throw std::invalid_argument("matrix spec: empty index range");
  if (vars & ~(VX | VY | VZ | VW))
    throw std::invalid_argument("matrix spec: unknown variable bit");
  for (const auto& [coef, atom] : atoms) {
    (void)coef;
    if (atom == Atom{})
      throw std::invalid_argument("matrix spec: atom with all coefficients zero");
  }
  if (atoms.empty() && vars == 0)
    throw std::invalid_argument("matrix spec: entry formula is empty (no atoms, no vars)");
}

SymbolTable::SymbolTable(long long n) : n_(n) {
  if (n < 3 || n % 2 == 0)
    throw std::invalid_argument("symbol table: modulus must be odd and > 1");
  tab_.resize(static_cast<size_t>(n));
  for (long long t = 0; t < n; ++t)
    tab_[static_cast<size_t>(t)] = static_cast<signed char>(jacobi(t, n));
}

const SymbolTable& symbol_table(long long n) {
  static std::mutex mu;
  static std::map<long long, std::unique_ptr<SymbolTable>> cache;
  std::lock_guard<std::mutex> g(mu);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<SymbolTable>(n);
  return *slot;
}

IntMat build_numeric(const MatrixSpec& spec, const Assignment& assign) {
  spec.validate();
  const SymbolTable& st = symbol_table(spec.modulus);
  long long vals[4] = {0, 0, 0, 0};
  for (int i = 0; i < 4; ++i) {
    if (!(spec.vars & (1u << i))) continue;
    auto it = assign.find(var_name(i));
    if (it == assign.end())
      throw std::invalid_argument(std::string("build_numeric: missing assignment for '") +
                                  var_name(i) + "'");
    vals[i] = it->second;
  }
  const long n = spec.dim();
  IntMat m(n);
  for (long r = 0; r < n; ++r) {
    const long long j = spec.row_lo + r;
    const int uj = st.sym(j);
    for (long c = 0; c < n; ++c) {
      const long long k = spec.col_lo + c;
      long long e = 0;
      for (const auto& [coef, atom] : spec.atoms) e += coef * st.sym(atom.eval(j, k));
      const int vk = st.sym(k);
      e += vals[0] + vals[1] * uj + vals[2] * vk + vals[3] * st.sym(j * k);
      m.at(r, c) = e;
    }
  }
  return m;
}

FamilyDecomposition decompose(const MatrixSpec& spec) {
  spec.validate();
  const SymbolTable& st = symbol_table(spec.modulus);
  const long n = spec.dim();
  FamilyDecomposition d;
  d.base = IntMat(n);
  d.ones.assign(static_cast<size_t>(n), 1);
  d.u.resize(static_cast<size_t>(n));
  d.v.resize(static_cast<size_t>(n));
  for (long r = 0; r < n; ++r) {
    d.u[static_cast<size_t>(r)] = st.sym(spec.row_lo + r);
    d.v[static_cast<size_t>(r)] = st.sym(spec.col_lo + r);
  }
  for (long r = 0; r < n; ++r) {
    const long long j = spec.row_lo + r;
    for (long c = 0; c < n; ++c) {
      const long long k = spec.col_lo + c;
      long long e = 0;
      for (const auto& [coef, atom] : spec.atoms) e += coef * st.sym(atom.eval(j, k));
      d.base.at(r, c) = e;
    }
  }
  return d;
}

MatrixSpec chapman_spec(long long p, ChapmanVariant variant) {
  if (p < 3 || !is_prime(static_cast<unsigned long long>(p)))
    throw std::invalid_argument("chapman_spec: p must be an odd prime");
  const long long n = (p - 1) / 2 + (variant == ChapmanVariant::C_star ? 1 : 0);
  MatrixSpec s;
  s.modulus = p;
  s.row_lo = s.col_lo = 1;
  s.row_hi = s.col_hi = n;
  s.atoms = {{1, Atom{0, 0, 0, 1, 1, -1}}};
  s.vars = VX;
  return s;
}

IntMat chapman_matrix(long long p, ChapmanVariant variant, long long x) {
  return build_numeric(chapman_spec(p, variant), {{'x', x}});
}

namespace {

// Polynomial in j and k, each monomial of total degree <= 2; doubles as a
// plain integer evaluator when the bindings are constants.
struct Poly2 {
  std::map<std::pair<int, int>, long long> c;

  static Poly2 constant(long long v) {
    Poly2 p;
    if (v) p.c[{0, 0}] = v;
    return p;
  }

  void add(const Poly2& o, long long sign) {
    for (const auto& [m, v] : o.c) {
      long long& slot = c[m];
      slot += sign * v;
      if (!slot) c.erase(m);
    }
  }

  Poly2 mul(const Poly2& o) const {
    Poly2 r;
    for (const auto& [m1, v1] : c)
      for (const auto& [m2, v2] : o.c) {
        const int dj = m1.first + m2.first, dk = m1.second + m2.second;
        if (dj + dk > 2)
          throw std::invalid_argument("expression: degree in j,k exceeds 2");
        long long& slot = r.c[{dj, dk}];
        slot += v1 * v2;
        if (!slot) r.c.erase({dj, dk});
      }
    return r;
  }

  Poly2 div(const Poly2& o) const {
    if (o.c.size() != 1 || !o.c.count({0, 0}))
      throw std::invalid_argument("expression: division only by integer constants");
    const long long d = o.c.at({0, 0});
    Poly2 r;
    for (const auto& [m, v] : c) {
      if (v % d) throw std::invalid_argument("expression: non-integral division");
      r.c[m] = v / d;
    }
    return r;
  }

  bool is_const() const {
    return c.empty() || (c.size() == 1 && c.count({0, 0}));
  }
  long long const_value() const {
    auto it = c.find({0, 0});
    return it == c.end() ? 0 : it->second;
  }
};

class ExprParser {
 public:
  ExprParser(std::string_view s, const std::map<std::string, Poly2>& binds)
      : s_(s), binds_(binds) {}

  Poly2 parse() {
    Poly2 r = expr();
    skip_ws();
    if (pos_ != s_.size())
      throw std::invalid_argument("expression: trailing input at '" +
                                  std::string(s_.substr(pos_)) + "'");
    return r;
  }

 private:
  std::string_view s_;
  const std::map<std::string, Poly2>& binds_;
  size_t pos_ = 0;

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char ch) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly2 expr() {
    Poly2 r = term();
    for (;;) {
      if (eat('+'))
        r.add(term(), 1);
      else if (eat('-'))
        r.add(term(), -1);
      else
        return r;
    }
  }

  Poly2 term() {
    Poly2 r = factor();
    for (;;) {
      if (eat('*'))
        r = r.mul(factor());
      else if (eat('/'))
        r = r.div(factor());
      else
        return r;
    }
  }

  Poly2 factor() {
    if (eat('-')) {
      Poly2 r = factor();
      Poly2 z;
      z.add(r, -1);
      return z;
    }
    if (eat('+')) return factor();
    Poly2 base = primary();
    if (eat('^')) {
      skip_ws();
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
        throw std::invalid_argument("expression: exponent must be a literal integer");
      long long e = integer();
      Poly2 r = Poly2::constant(1);
      for (long long i = 0; i < e; ++i) r = r.mul(base);
      return r;
    }
    return base;
  }

  Poly2 primary() {
    skip_ws();
    if (pos_ >= s_.size()) throw std::invalid_argument("expression: unexpected end");
    const char ch = s_[pos_];
    if (ch == '(') {
      ++pos_;
      Poly2 r = expr();
      if (!eat(')')) throw std::invalid_argument("expression: missing ')'");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) return Poly2::constant(integer());
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      std::string name;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_])))
        name += s_[pos_++];
      auto it = binds_.find(name);
      if (it == binds_.end())
        throw std::invalid_argument("expression: unknown symbol '" + name + "'");
      return it->second;
    }
    throw std::invalid_argument(std::string("expression: unexpected character '") + ch + "'");
  }

  long long integer() {
    skip_ws();
    long long v = 0;
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      v = v * 10 + (s_[pos_++] - '0');
    if (pos_ == start) throw std::invalid_argument("expression: expected integer");
    return v;
  }
};

std::string trim(std::string_view s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

long long eval_bound(const std::string& text, long long modulus) {
  std::map<std::string, Poly2> binds;
  binds["p"] = Poly2::constant(modulus);
  binds["n"] = Poly2::constant(modulus);
  Poly2 r = ExprParser(text, binds).parse();
  if (!r.is_const())
    throw std::invalid_argument("bound expression may not mention j or k: " + text);
  return r.const_value();
}

Atom atom_from_poly(const Poly2& p) {
  Atom a;
  for (const auto& [m, v] : p.c) {
    if (m == std::pair<int, int>{2, 0})
      a.alpha = v;
    else if (m == std::pair<int, int>{1, 1})
      a.beta = v;
    else if (m == std::pair<int, int>{0, 2})
      a.gamma = v;
    else if (m == std::pair<int, int>{1, 0})
      a.delta = v;
    else if (m == std::pair<int, int>{0, 1})
      a.eps_coef = v;
    else
      a.zeta = v;
  }
  return a;
}

void append_term(std::string& out, long long coef, const char* mono) {
  if (!coef) return;
  if (out.empty()) {
    if (coef < 0) out += '-';
  } else {
    out += coef < 0 ? '-' : '+';
  }
  const long long mag = coef < 0 ? -coef : coef;
  if (!mono) {
    out += std::to_string(mag);
    return;
  }
  if (mag != 1) {
    out += std::to_string(mag);
    out += '*';
  }
  out += mono;
}

std::string atom_text(const Atom& a) {
  std::string out;
  append_term(out, a.alpha, "j^2");
  append_term(out, a.beta, "j*k");
  append_term(out, a.gamma, "k^2");
  append_term(out, a.delta, "j");
  append_term(out, a.eps_coef, "k");
  append_term(out, a.zeta, nullptr);
  return out.empty() ? "0" : out;
}

}  // namespace

std::string to_text(const MatrixSpec& spec) {
  std::string out = "n=" + std::to_string(spec.modulus);
  out += "; rows=" + std::to_string(spec.row_lo) + ".." + std::to_string(spec.row_hi);
  out += "; cols=" + std::to_string(spec.col_lo) + ".." + std::to_string(spec.col_hi);
  for (const auto& [coef, atom] : spec.atoms) {
    out += "; atom=";
    if (coef != 1) out += std::to_string(coef) + ":";
    out += atom_text(atom);
  }
  if (spec.vars) {
    out += "; vars=";
    bool first = true;
    for (int i = 0; i < 4; ++i) {
      if (!(spec.vars & (1u << i))) continue;
      if (!first) out += ',';
      out += var_name(i);
      first = false;
    }
  }
  return out;
}

MatrixSpec parse_spec(const std::string& text) {
  std::vector<std::pair<std::string, std::string>> kv;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t semi = text.find(';', pos);
    if (semi == std::string::npos) semi = text.size();
    std::string piece = trim(std::string_view(text).substr(pos, semi - pos));
    pos = semi + 1;
    if (piece.empty()) continue;
    size_t eq = piece.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("matrix spec: expected key=value, got '" + piece + "'");
    kv.emplace_back(trim(std::string_view(piece).substr(0, eq)),
                    trim(std::string_view(piece).substr(eq + 1)));
  }

  long long modulus = 0;
  bool have_modulus = false;
  for (const auto& [key, value] : kv) {
    if (key != "n" && key != "p") continue;
    if (have_modulus)
      throw std::invalid_argument("matrix spec: modulus given more than once");
    modulus = eval_bound(value, 0);
    have_modulus = true;
  }
  if (!have_modulus) throw std::invalid_argument("matrix spec: missing n= (or p=)");

  MatrixSpec s;
  s.modulus = modulus;
  bool have_rows = false, have_cols = false;
  auto parse_range = [&](const std::string& value, long long& lo, long long& hi) {
    size_t dots = value.find("..");
    if (dots == std::string::npos)
      throw std::invalid_argument("matrix spec: range needs lo..hi, got '" + value + "'");
    lo = eval_bound(value.substr(0, dots), modulus);
    hi = eval_bound(value.substr(dots + 2), modulus);
  };

  std::map<std::string, Poly2> atom_binds;
  {
    Poly2 j, k;
    j.c[{1, 0}] = 1;
    k.c[{0, 1}] = 1;
    atom_binds["j"] = j;
    atom_binds["k"] = k;
  }

  for (const auto& [key, value] : kv) {
    if (key == "n" || key == "p") continue;
    if (key == "range") {
      if (have_rows || have_cols)
        throw std::invalid_argument("matrix spec: range conflicts with rows/cols");
      parse_range(value, s.row_lo, s.row_hi);
      s.col_lo = s.row_lo;
      s.col_hi = s.row_hi;
      have_rows = have_cols = true;
    } else if (key == "rows") {
      if (have_rows) throw std::invalid_argument("matrix spec: rows given more than once");
      parse_range(value, s.row_lo, s.row_hi);
      have_rows = true;
    } else if (key == "cols") {
      if (have_cols) throw std::invalid_argument("matrix spec: cols given more than once");
      parse_range(value, s.col_lo, s.col_hi);
      have_cols = true;
    } else if (key == "atom") {
      long long coef = 1;
      std::string body = value;
      size_t colon = value.find(':');
      if (colon != std::string::npos) {
        const std::string head = trim(std::string_view(value).substr(0, colon));
        coef = eval_bound(head, modulus);
        body = trim(std::string_view(value).substr(colon + 1));
      }
      Poly2 p = ExprParser(body, atom_binds).parse();
      s.atoms.emplace_back(coef, atom_from_poly(p));
    } else if (key == "vars") {
      size_t vp = 0;
      while (vp <= value.size()) {
        size_t comma = value.find(',', vp);
        if (comma == std::string::npos) comma = value.size();
        std::string name = trim(std::string_view(value).substr(vp, comma - vp));
        vp = comma + 1;
        if (name.empty()) continue;
        if (name == "x")
          s.vars |= VX;
        else if (name == "y")
          s.vars |= VY;
        else if (name == "z")
          s.vars |= VZ;
        else if (name == "w")
          s.vars |= VW;
        else
          throw std::invalid_argument("matrix spec: unknown variable '" + name + "'");
      }
    } else {
      throw std::invalid_argument("matrix spec: unknown key '" + key + "'");
    }
  }
  if (!have_rows || !have_cols)
    throw std::invalid_argument("matrix spec: missing rows/cols (or range)");
  s.validate();
  return s;
}

}  // namespace legdet
