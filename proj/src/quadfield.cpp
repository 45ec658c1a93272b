#include "legdet/quadfield.hpp"

#include <cmath>
#include <complex>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace legdet {

namespace {

void require_odd_prime(long p, const char* who) {
  if (p < 3 || p % 2 == 0 || !is_prime(static_cast<unsigned long long>(p)))
    throw std::invalid_argument(std::string(who) + ": need an odd prime");
}

mpz_class unit_norm4(const QuadInt& u) {
  return u.two_a * u.two_a - u.p * u.two_b * u.two_b;  // 4 * field norm
}

// Exact halving with a parity tripwire; doubled representation only works
// if every product keeps two_a = two_b (mod 2).
mpz_class half_exact(const mpz_class& v, const char* who) {
  if (mpz_odd_p(v.get_mpz_t()))
    throw std::logic_error(std::string(who) + ": doubled representation broke parity");
  return v / 2;
}

}  // namespace

QuadInt mul_unit(const QuadInt& u, const QuadInt& v) {
  if (u.p != v.p) throw std::invalid_argument("mul_unit: mixed radicands");
  QuadInt r;
  r.p = u.p;
  r.two_a = half_exact(u.two_a * v.two_a + u.two_b * v.two_b * u.p, "mul_unit");
  r.two_b = half_exact(u.two_a * v.two_b + u.two_b * v.two_a, "mul_unit");
  return r;
}

QuadInt pow_unit(const QuadInt& u, long e) {
  if (e < 0) throw std::invalid_argument("pow_unit: negative exponent");
  QuadInt r;
  r.p = u.p;
  r.two_a = 2;
  r.two_b = 0;
  QuadInt base = u;
  while (e) {
    if (e & 1) r = mul_unit(r, base);
    base = mul_unit(base, base);
    e >>= 1;
  }
  return r;
}

QuadInt fundamental_unit(long p) {
  require_odd_prime(p, "fundamental_unit");
  // Continued fraction of sqrt(p); the first convergent h/k with
  // h^2 - p k^2 = +-1 is the fundamental unit of Z[sqrt p].
  const long a0 = static_cast<long>(std::sqrt(static_cast<double>(p)));
  long sq = a0;
  while (sq * sq > p) --sq;
  while ((sq + 1) * (sq + 1) <= p) ++sq;
  long m = 0, d = 1, a = sq;
  mpz_class h_prev = 1, h = a, k_prev = 0, k = 1;
  mpz_class nrm = h * h - p * k * k;
  while (nrm != 1 && nrm != -1) {
    m = d * a - m;
    d = (p - m * m) / d;
    a = (sq + m) / d;
    mpz_class h_next = a * h + h_prev;
    mpz_class k_next = a * k + k_prev;
    h_prev = h;
    k_prev = k;
    h = h_next;
    k = k_next;
    nrm = h * h - p * k * k;
  }
  QuadInt eta;
  eta.p = p;
  eta.two_a = 2 * h;
  eta.two_b = 2 * k;
  if (p % 4 == 3) return eta;
  // p = 1 (mod 4): the ring of integers may contain a cube root
  // (t + u sqrt p)/2 of eta with t^2 - p u^2 = 4*sign(nrm); then
  // 2 h = t^3 + 3t (norm -1) or t^3 - 3t (norm +1).
  const bool minus = (nrm == -1);
  mpz_class target = 2 * h;
  mpz_class t;
  mpz_root(t.get_mpz_t(), target.get_mpz_t(), 3);
  for (mpz_class cand = t - 1; cand <= t + 1; ++cand) {
    if (cand <= 0) continue;
    mpz_class val = cand * cand * cand + (minus ? 3 : -3) * cand;
    if (val != target) continue;
    mpz_class usq_num = cand * cand + (minus ? 4 : -4);
    if (usq_num % p != 0) continue;
    mpz_class usq = usq_num / p;
    if (!mpz_perfect_square_p(usq.get_mpz_t())) continue;
    QuadInt eps;
    eps.p = p;
    eps.two_a = cand;
    mpz_sqrt(eps.two_b.get_mpz_t(), usq.get_mpz_t());
    return eps;
  }
  return eta;
}

long class_number_imag(long p) {
  require_odd_prime(p, "class_number_imag");
  if (p % 4 != 3 || p == 3)
    throw std::invalid_argument("class_number_imag: need p = 3 (mod 4), p > 3");
  long s = 0;
  for (long k = 1; k <= (p - 1) / 2; ++k) s += jacobi(k, p);
  long div = 2 - jacobi(2, p);
  if (s <= 0 || s % div)
    throw std::logic_error("class_number_imag: character sum not divisible");
  return s / div;
}

long class_number_imag_forms(long p) {
  // Reduced positive forms (a, b, c) of discriminant -p:
  // |b| <= a <= c, with b > 0 when |b| = a or a = c.
  if (p % 4 != 3) throw std::invalid_argument("class_number_imag_forms");
  long count = 0;
  for (long b = 1; 3 * b * b <= p; b += 2) {
    long n4 = b * b + p;
    if (n4 % 4) continue;
    long n = n4 / 4;  // = a*c
    for (long a = b; a * a <= n; ++a) {
      if (n % a) continue;
      long c = n / a;
      count += (a == b || a == c) ? 1 : 2;  // -b gives a distinct class otherwise
    }
  }
  return count;
}

namespace {

long discriminant(long p) { return p % 4 == 1 ? p : 4 * p; }

// chi_D(a) for the real quadratic field of prime radicand p.
int chi_real(long p, long a) {
  if (p % 4 == 1) return jacobi(a, p);
  if (a % 2 == 0) return 0;
  int s = jacobi(a, p);
  return a % 4 == 1 ? s : -s;
}

double log_eps(const QuadInt& eps) {
  // eps = A + sqrt(A^2 - nrm), A = two_a / 2. For units beyond double range
  // the sqrt term equals A to 300 digits, so log(two_a) is exact enough.
  signed long e;
  double d = mpz_get_d_2exp(&e, eps.two_a.get_mpz_t());
  if (e > 500) return std::log(d) + static_cast<double>(e) * M_LN2;
  double a_half = mpz_get_d(eps.two_a.get_mpz_t()) / 2.0;
  double nrm = mpz_get_d(unit_norm4(eps).get_mpz_t()) / 4.0;
  return std::log(a_half + std::sqrt(a_half * a_half - nrm));
}

struct Form {
  long a, b, c;
  bool operator<(const Form& o) const {
    return std::tie(a, b, c) < std::tie(o.a, o.b, o.c);
  }
};

long isqrt_long(long d) {
  long s = static_cast<long>(std::sqrt(static_cast<double>(d)));
  while (s * s > d) --s;
  while ((s + 1) * (s + 1) <= d) ++s;
  return s;
}

// Indefinite (a,b,c) of discriminant D is reduced iff
// 0 < b < sqrt(D) and sqrt(D) - b < 2|a| < sqrt(D) + b.
bool reduced_indefinite(long D, long absa, long b) {
  if (b <= 0 || b * b >= D) return false;
  long t = 2 * absa;
  if (static_cast<long long>(t + b) * (t + b) <= D) return false;  // sqrt(D) < 2|a| + b
  if (t > b && static_cast<long long>(t - b) * (t - b) >= D) return false;  // 2|a| - b < sqrt(D)
  return true;
}

}  // namespace

long class_number_real_forms(long p) {
  require_odd_prime(p, "class_number_real_forms");
  const long D = discriminant(p);
  const long sq = isqrt_long(D);
  std::map<Form, int> forms;
  for (long b = (D % 2 == 0) ? 2 : 1; b * b < D; b += 2) {
    if ((D - b * b) % 4) continue;
    long n = (D - b * b) / 4;  // = |a||c|, a*c = -n
    for (long a = 1; a * a <= n; ++a) {
      if (n % a) continue;
      long c = n / a;
      if (reduced_indefinite(D, a, b)) {
        forms.emplace(Form{a, b, -c}, 0);
        forms.emplace(Form{-a, b, c}, 0);
      }
      if (c != a && reduced_indefinite(D, c, b)) {
        forms.emplace(Form{c, b, -a}, 0);
        forms.emplace(Form{-c, b, a}, 0);
      }
    }
  }
  // rho-orbits of reduced forms = narrow classes; the narrow group is the
  // class group itself when the unit norm is -1 (p = 1 mod 4), twice it
  // otherwise.
  auto rho = [&](const Form& f) -> Form {
    long twoc = 2 * std::labs(f.c);
    long bp = sq - ((sq + f.b) % twoc + twoc) % twoc;
    long cp = static_cast<long>(
        (static_cast<long long>(bp) * bp - D) / (4 * f.c));
    return Form{f.c, bp, cp};
  };
  long cycles = 0;
  for (auto& [start, seen] : forms) {
    if (seen) continue;
    ++cycles;
    Form cur = start;
    while (true) {
      auto it = forms.find(cur);
      if (it == forms.end())
        throw std::logic_error("class_number_real_forms: rho left the reduced set");
      if (it->second) break;
      it->second = 1;
      cur = rho(cur);
    }
  }
  if (p % 4 == 3) {
    if (cycles % 2)
      throw std::logic_error("class_number_real_forms: odd narrow count");
    return cycles / 2;
  }
  return cycles;
}

long class_number_real_analytic(long p) {
  require_odd_prime(p, "class_number_real_analytic");
  const long D = discriminant(p);
  double s = 0.0;
  for (long a = 1; a < D; ++a) {
    int chi = chi_real(p, a);
    if (chi == 0) continue;
    s -= chi * std::log(std::sin(M_PI * static_cast<double>(a) / D));
  }
  const double h = s / (2.0 * log_eps(fundamental_unit(p)));
  const long rounded = std::lround(h);
  if (std::fabs(h - rounded) > 0.01 || rounded < 1)
    throw std::runtime_error("class_number_real_analytic: rounding not decisive");
  return rounded;
}

long class_number_real(long p) {
  long analytic = class_number_real_analytic(p);
  long forms = class_number_real_forms(p);
  if (analytic != forms)
    throw std::logic_error("class_number_real: analytic and form counts disagree");
  return analytic;
}

namespace {

std::map<long, QuadInvariants>& inv_memo() {
  static std::map<long, QuadInvariants> memo;
  return memo;
}
std::mutex inv_mutex;

}  // namespace

void seed_invariants(const QuadInvariants& v) {
  std::lock_guard<std::mutex> lock(inv_mutex);
  inv_memo().insert({v.p, v});
}

const QuadInvariants& invariants(long p) {
  {
    std::lock_guard<std::mutex> lock(inv_mutex);
    auto it = inv_memo().find(p);
    if (it != inv_memo().end()) return it->second;
  }
  QuadInvariants v;
  v.p = p;
  v.eps = fundamental_unit(p);
  mpz_class n4 = unit_norm4(v.eps);
  if (n4 != 4 && n4 != -4)
    throw std::logic_error("invariants: fundamental unit norm not +-1");
  v.unit_norm = n4 == 4 ? 1 : -1;
  v.h_plus = class_number_real(p);
  v.h_minus = (p % 4 == 3 && p > 3) ? class_number_imag(p) : 0;
  v.ab = pow_unit(v.eps, v.h_plus);
  v.ab_prime = pow_unit(v.eps, (2 - jacobi(2, p)) * v.h_plus);
  std::lock_guard<std::mutex> lock(inv_mutex);
  return inv_memo().emplace(p, std::move(v)).first->second;
}

namespace {

bool crosscheck_impl(long p, long a, const QuadInt& eps_pow, int sym) {
  std::complex<double> prod(1.0, 0.0);
  for (long k = 1; k <= (p - 1) / 2; ++k) {
    double ang = 2.0 * M_PI * static_cast<double>(
        mulmod(static_cast<unsigned long long>(a < 0 ? a % p + p : a % p),
               static_cast<unsigned long long>(k) * k % p, p)) / p;
    prod *= std::complex<double>(1.0 - std::cos(ang), -std::sin(ang));
  }
  const double lhs = prod.real();
  if (std::fabs(prod.imag()) > 1e-6 * std::max(1.0, std::fabs(lhs)))
    throw std::runtime_error("dirichlet_crosscheck: imaginary part failed to cancel");
  const double eps_val =
      (mpz_get_d(eps_pow.two_a.get_mpz_t()) +
       mpz_get_d(eps_pow.two_b.get_mpz_t()) * std::sqrt(static_cast<double>(p))) / 2.0;
  const double rhs = std::sqrt(static_cast<double>(p)) *
                     (sym == 1 ? 1.0 / eps_val : eps_val);
  return std::fabs(lhs - rhs) <= 1e-6 * std::max(std::fabs(rhs), 1e-12);
}

}  // namespace

bool dirichlet_crosscheck_with(long p, long a, long h_override) {
  require_odd_prime(p, "dirichlet_crosscheck");
  if (p % 4 != 1)
    throw std::invalid_argument("dirichlet_crosscheck: need p = 1 (mod 4)");
  int sym = jacobi(a, p);
  if (sym == 0) throw std::invalid_argument("dirichlet_crosscheck: gcd(a,p) != 1");
  return crosscheck_impl(p, a, pow_unit(invariants(p).eps, h_override), sym);
}

bool dirichlet_crosscheck(long p, long a) {
  return dirichlet_crosscheck_with(p, a, invariants(p).h_plus);
}

}  // namespace legdet
