#include "legdet/detengine.hpp"

#include <omp.h>

#include <algorithm>
#include <stdexcept>

namespace legdet {

const char* engine_name(Engine e) {
  switch (e) {
    case Engine::bareiss: return "bareiss";
    case Engine::modular: return "modular";
    default: return "auto";
  }
}

bool is_skew_odd(const IntMat& m) {
  if (m.n % 2 == 0) return false;
  for (long r = 0; r < m.n; ++r)
    for (long c = 0; c <= r; ++c)
      if (m.at(r, c) != -m.at(c, r)) return false;
  return true;
}

bool is_centrosymmetric(const IntMat& m) {
  const long n = m.n;
  for (long r = 0; r < n; ++r)
    for (long c = 0; c < n; ++c)
      if (m.at(r, c) != m.at(n - 1 - r, n - 1 - c)) return false;
  return true;
}

mpz_class det_bareiss(const IntMat& m) {
  const long n = m.n;
  if (n == 0) return 1;
  if (is_skew_odd(m)) return 0;
  std::vector<mpz_class> a(static_cast<size_t>(n) * n);
  for (size_t i = 0; i < a.size(); ++i) a[i] = static_cast<long>(m.a[i]);
  auto at = [&](long r, long c) -> mpz_class& {
    return a[static_cast<size_t>(r) * n + c];
  };
  int sign = 1;
  mpz_class prev = 1, t1, t2;
  for (long k = 0; k + 1 < n; ++k) {
    long piv = -1;
    for (long r = k; r < n; ++r)
      if (at(r, k) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return 0;
    if (piv != k) {
      for (long c = 0; c < n; ++c) mpz_swap(at(k, c).get_mpz_t(), at(piv, c).get_mpz_t());
      sign = -sign;
    }
    for (long i = k + 1; i < n; ++i) {
      for (long j = k + 1; j < n; ++j) {
        // Bareiss step: every division by the previous pivot is exact.
        mpz_mul(t1.get_mpz_t(), at(i, j).get_mpz_t(), at(k, k).get_mpz_t());
        mpz_mul(t2.get_mpz_t(), at(i, k).get_mpz_t(), at(k, j).get_mpz_t());
        mpz_sub(t1.get_mpz_t(), t1.get_mpz_t(), t2.get_mpz_t());
        mpz_divexact(at(i, j).get_mpz_t(), t1.get_mpz_t(), prev.get_mpz_t());
      }
      at(i, k) = 0;
    }
    prev = at(k, k);
  }
  return sign < 0 ? mpz_class(-at(n - 1, n - 1)) : at(n - 1, n - 1);
}

namespace {

struct Barrett {
  unsigned long long q;
  unsigned long long magic;  // floor(2^64 / q)

  explicit Barrett(unsigned long long q_)
      : q(q_), magic(static_cast<unsigned long long>(
                    (static_cast<unsigned __int128>(1) << 64) / q_)) {}

  // Reduces any x < 2^63 to x mod q.
  unsigned long long red(unsigned long long x) const {
    unsigned long long hi = static_cast<unsigned long long>(
        (static_cast<unsigned __int128>(x) * magic) >> 64);
    unsigned long long r = x - hi * q;
    while (r >= q) r -= q;
    return r;
  }

  unsigned long long mul(unsigned long long a, unsigned long long b) const {
    return red(a * b);  // a, b < q < 2^31 so the product fits
  }

  unsigned long long pow(unsigned long long b, unsigned long long e) const {
    unsigned long long r = 1 % q;
    while (e) {
      if (e & 1) r = mul(r, b);
      b = mul(b, b);
      e >>= 1;
    }
    return r;
  }
};

}  // namespace

long long det_mod_prime(const IntMat& m, long long q) {
  const long n = m.n;
  if (q < 2 || q >= (1LL << 31) || !is_prime(static_cast<unsigned long long>(q)))
    throw std::invalid_argument("det_mod_prime: need prime modulus < 2^31");
  if (n == 0) return 1 % q;
  Barrett bq(static_cast<unsigned long long>(q));
  std::vector<unsigned long long> w(static_cast<size_t>(n) * n);
  for (size_t i = 0; i < w.size(); ++i) {
    long long v = m.a[i] % q;
    if (v < 0) v += q;
    w[i] = static_cast<unsigned long long>(v);
  }
  auto row = [&](long r) { return w.data() + static_cast<size_t>(r) * n; };
  unsigned long long det = 1 % bq.q;
  bool neg = false;
  for (long col = 0; col < n; ++col) {
    long piv = -1;
    for (long r = col; r < n; ++r)
      if (row(r)[col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return 0;
    if (piv != col) {
      std::swap_ranges(row(col), row(col) + n, row(piv));
      neg = !neg;
    }
    const unsigned long long pivot = row(col)[col];
    det = bq.mul(det, pivot);
    const unsigned long long inv = bq.pow(pivot, bq.q - 2);
    const unsigned long long* src = row(col);
    for (long r = col + 1; r < n; ++r) {
      unsigned long long* dst = row(r);
      unsigned long long f = bq.mul(dst[col], inv);
      if (f == 0) continue;
      unsigned long long g = bq.q - f;
      for (long j = col; j < n; ++j) dst[j] = bq.red(dst[j] + g * src[j]);
    }
  }
  if (neg && det != 0) det = bq.q - det;
  return static_cast<long long>(det);
}

const std::vector<long long>& modular_prime_pool() {
  static const std::vector<long long> pool = [] {
    std::vector<long long> v;
    for (long long q = (1LL << 31) - 1; v.size() < 320; q -= 2)
      if (is_prime(static_cast<unsigned long long>(q))) v.push_back(q);
    return v;
  }();
  return pool;
}

mpz_class det_modular_from(const IntMat& m, size_t offset) {
  if (m.n == 0) return 1;
  if (is_skew_odd(m)) return 0;
  mpz_class bound = hadamard_bound(m);
  if (bound == 0) return 0;
  const auto& pool = modular_prime_pool();
  const mpz_class need = 2 * bound;
  std::vector<long long> used;
  mpz_class prod = 1;
  for (size_t i = offset; prod <= need; ++i) {
    if (i >= pool.size())
      throw std::runtime_error("det_modular: prime pool exhausted");
    used.push_back(pool[i]);
    prod *= static_cast<long>(pool[i]);
  }
  std::vector<long long> res(used.size());
  const long count = static_cast<long>(used.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i)
    res[static_cast<size_t>(i)] = det_mod_prime(m, used[static_cast<size_t>(i)]);
  return crt_reconstruct(res, used);
}

mpz_class det_modular(const IntMat& m) { return det_modular_from(m, 0); }

mpz_class det_exact(const IntMat& m, Engine e) {
  const long n = m.n;
  if (n == 0) return 1;
  if (is_skew_odd(m)) return 0;
  if (n >= 32 && n % 2 == 0 && is_centrosymmetric(m)) {
    // A = JAJ splits over the symmetric/antisymmetric index pairing:
    // det A = det(S) * det(T) with S/T built from half-row sums/differences.
    const long h = n / 2;
    IntMat s(h), t(h);
    for (long r = 0; r < h; ++r)
      for (long c = 0; c < h; ++c) {
        s.at(r, c) = m.at(r, c) + m.at(r, n - 1 - c);
        t.at(r, c) = m.at(r, c) - m.at(r, n - 1 - c);
      }
    return det_exact(s, e) * det_exact(t, e);
  }
  switch (e) {
    case Engine::bareiss: return det_bareiss(m);
    case Engine::modular: return det_modular(m);
    default: return n > 64 ? det_modular(m) : det_bareiss(m);
  }
}

long long det_mod(const IntMat& m, long long mod) {
  if (mod < 2) throw std::invalid_argument("det_mod: modulus must be >= 2");
  if (mod < (1LL << 31) && is_prime(static_cast<unsigned long long>(mod)))
    return det_mod_prime(m, mod);
  mpz_class d = det_exact(m);
  return static_cast<long long>(
      mpz_fdiv_ui(d.get_mpz_t(), static_cast<unsigned long>(mod)));
}

}  // namespace legdet
