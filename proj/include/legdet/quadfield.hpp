#pragma once

#include "legdet/arith.hpp"

namespace legdet {

// (two_a + two_b*sqrt(p)) / 2 with two_a = two_b (mod 2).
struct QuadInt {
  mpz_class two_a = 2;
  mpz_class two_b = 0;
  long p = 0;
};

struct QuadInvariants {
  long p = 0;
  QuadInt eps;        // fundamental unit, minimal > 1
  int unit_norm = 0;  // (two_a^2 - p*two_b^2) / 4
  long h_plus = 0;    // h(p)
  long h_minus = 0;   // h(-p) when p = 3 (mod 4) and p > 3, else 0
  QuadInt ab;         // eps^h(p), housing (2a_p, 2b_p)
  QuadInt ab_prime;   // eps^{(2-(2/p)) h(p)}, housing (2a'_p, 2b'_p)
};

// Least (t, u), t, u > 0, with t^2 - p u^2 = +-4. Continued fraction of
// sqrt(p) for the Z[sqrt p] unit, then a cube-root refinement for the
// half-integer case (p = 1 mod 4 only). Throws unless p is an odd prime.
QuadInt fundamental_unit(long p);

QuadInt mul_unit(const QuadInt& u, const QuadInt& v);
QuadInt pow_unit(const QuadInt& u, long e);  // e >= 0; e = 0 gives 1 = (2, 0)

// h(p) by two independent methods that must agree (throws otherwise).
long class_number_real(long p);
long class_number_real_analytic(long p);  // finite Dirichlet L(1) sum, rounded
long class_number_real_forms(long p);     // reduced indefinite form cycles

// h(-p) = (sum of jacobi(k,p), k <= (p-1)/2) / (2 - (2/p)).
// Requires p = 3 (mod 4), p > 3.
long class_number_imag(long p);
long class_number_imag_forms(long p);  // reduced positive form count oracle

// Memoized read-through assembly of all fields.
const QuadInvariants& invariants(long p);
// Preload one computed record (used by the CLI cache).
void seed_invariants(const QuadInvariants& v);

// prod_{k=1}^{(p-1)/2} (1 - e^{2 pi i a k^2 / p}) against sqrt(p) *
// eps^{-(a/p) h(p)}, both in floating point, relative tolerance 1e-6.
// Requires p = 1 (mod 4) prime and gcd(a, p) = 1. A product whose imaginary
// part fails to cancel throws (precision failure, distinct from mismatch).
bool dirichlet_crosscheck(long p, long a);
// Same check against an arbitrary exponent; negative-control hook.
bool dirichlet_crosscheck_with(long p, long a, long h_override);

}  // namespace legdet
