#include "legdet/multiaffine.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <stdexcept>

namespace legdet {

namespace {

Assignment corner_assignment(unsigned vars, unsigned corner) {
  Assignment a;
  for (int i = 0; i < 4; ++i)
    if (vars & (1u << i)) a[var_name(i)] = (corner >> i) & 1u;
  return a;
}

std::string mono_text(unsigned mask) {
  std::string s;
  for (int i = 0; i < 4; ++i) {
    if (!(mask & (1u << i))) continue;
    if (!s.empty()) s += '*';
    s += var_name(i);
  }
  return s;
}

}  // namespace

void MultiAffinePoly::set_coeff(unsigned mask, mpz_class v) {
  if (mask > 15) throw std::invalid_argument("set_coeff: mask out of range");
  vars_ |= mask;
  c_[mask] = std::move(v);
}

mpz_class MultiAffinePoly::evaluate(const Assignment& point) const {
  long long vals[4] = {0, 0, 0, 0};
  unsigned have = 0;
  for (int i = 0; i < 4; ++i) {
    auto it = point.find(var_name(i));
    if (it == point.end()) continue;
    vals[i] = it->second;
    have |= 1u << i;
  }
  mpz_class total = 0;
  for (unsigned mask = 0; mask < 16; ++mask) {
    if (c_[mask] == 0) continue;
    if (mask & ~have)
      throw std::invalid_argument("evaluate: missing coordinate " +
                                  mono_text(mask & ~have));
    mpz_class term = c_[mask];
    for (int i = 0; i < 4; ++i)
      if (mask & (1u << i)) term *= static_cast<long>(vals[i]);
    total += term;
  }
  return total;
}

bool MultiAffinePoly::is_zero() const {
  return std::all_of(c_.begin(), c_.end(),
                     [](const mpz_class& v) { return v == 0; });
}

bool MultiAffinePoly::is_constant() const {
  for (unsigned mask = 1; mask < 16; ++mask)
    if (c_[mask] != 0) return false;
  return true;
}

std::string MultiAffinePoly::text() const {
  unsigned order[16];
  for (unsigned i = 0; i < 16; ++i) order[i] = i;
  std::sort(order, order + 16, [](unsigned a, unsigned b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    return a < b;  // ascending mask = lexicographic in x < y < z < w
  });
  std::string out;
  for (unsigned mask : order) {
    const mpz_class& v = c_[mask];
    if (v == 0) continue;
    const bool neg = v < 0;
    mpz_class mag = neg ? mpz_class(-v) : v;
    if (out.empty()) {
      if (neg) out += '-';
    } else {
      out += neg ? " - " : " + ";
    }
    if (mask == 0) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += mono_text(mask);
    }
  }
  return out.empty() ? "0" : out;
}

MultiAffinePoly MultiAffinePoly::from_terms(
    unsigned vars, const std::vector<std::pair<unsigned, mpz_class>>& terms) {
  MultiAffinePoly p(vars);
  for (const auto& [mask, v] : terms) {
    if (mask & ~vars) throw std::invalid_argument("from_terms: mask outside vars");
    p.c_[mask] += v;
  }
  return p;
}

MultiAffinePoly MultiAffinePoly::operator-() const {
  MultiAffinePoly r(vars_);
  for (unsigned m = 0; m < 16; ++m) r.c_[m] = -c_[m];
  return r;
}

MultiAffinePoly& MultiAffinePoly::operator*=(const mpz_class& s) {
  for (auto& c : c_) c *= s;
  return *this;
}

MultiAffinePoly operator+(const MultiAffinePoly& a, const MultiAffinePoly& b) {
  MultiAffinePoly r(a.vars_ | b.vars_);
  for (unsigned m = 0; m < 16; ++m) r.c_[m] = a.c_[m] + b.c_[m];
  return r;
}

MultiAffinePoly operator-(const MultiAffinePoly& a, const MultiAffinePoly& b) {
  MultiAffinePoly r(a.vars_ | b.vars_);
  for (unsigned m = 0; m < 16; ++m) r.c_[m] = a.c_[m] - b.c_[m];
  return r;
}

MultiAffinePoly interpolate(unsigned vars,
                            const std::function<mpz_class(unsigned)>& corner) {
  if (vars > 15) throw std::invalid_argument("interpolate: bad variable mask");
  std::array<mpz_class, 16> ev;
  for (unsigned t = vars;; t = (t - 1) & vars) {
    ev[t] = corner(t);
    if (t == 0) break;
  }
  MultiAffinePoly p(vars);
  for (unsigned s = vars;; s = (s - 1) & vars) {
    mpz_class acc = 0;
    for (unsigned t = s;; t = (t - 1) & s) {
      if (std::popcount(s ^ t) % 2)
        acc -= ev[t];
      else
        acc += ev[t];
      if (t == 0) break;
    }
    p.set_coeff(s, acc);
    if (s == 0) break;
  }
  return p;
}

MultiAffinePoly det_poly(const MatrixSpec& spec, Engine e) {
  return interpolate(spec.vars, [&](unsigned corner) {
    return det_exact(build_numeric(spec, corner_assignment(spec.vars, corner)), e);
  });
}

bool multiaffinity_guard_fn(unsigned vars,
                            const std::function<mpz_class(const Assignment&)>& f,
                            unsigned long long seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long long> small(-5, 5);
  for (int probe = 0; probe < 3; ++probe) {
    for (int i = 0; i < 4; ++i) {
      if (!(vars & (1u << i))) continue;
      Assignment a;
      for (int o = 0; o < 4; ++o)
        if (vars & (1u << o)) a[var_name(o)] = small(rng);
      const char v = var_name(i);
      a[v] = 0;
      const mpz_class f0 = f(a);
      a[v] = 1;
      const mpz_class f1 = f(a);
      a[v] = 2;
      const mpz_class f2 = f(a);
      if (f2 - 2 * f1 + f0 != 0) return false;
    }
  }
  return true;
}

bool multiaffinity_guard(const MatrixSpec& spec) {
  return multiaffinity_guard_fn(
      spec.vars,
      [&](const Assignment& a) { return det_exact(build_numeric(spec, a)); });
}

}  // namespace legdet
