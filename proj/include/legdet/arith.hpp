#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

namespace legdet {

// Dense row-major square matrix with machine-word entries. Every matrix
// built here keeps entries far below 2^32, so int64 holds them exactly;
// the determinant engines widen to mpz where growth happens.
struct IntMat {
  long n = 0;
  std::vector<long long> a;

  IntMat() = default;
  explicit IntMat(long order)
      : n(order), a(static_cast<size_t>(order) * static_cast<size_t>(order), 0) {}

  long long& at(long r, long c) { return a[static_cast<size_t>(r) * n + c]; }
  long long at(long r, long c) const { return a[static_cast<size_t>(r) * n + c]; }
};

// Jacobi symbol (a/n) for odd n >= 1; equals the Legendre symbol for prime n.
// (a/1) = 1 by convention. Throws std::invalid_argument for even or
// nonpositive n. Binary reciprocity, no powering.
int jacobi(long long a, long long n);

// Deterministic for all n < 2^64 (Miller-Rabin over a fixed witness set).
bool is_prime(unsigned long long n);

// Primes in [lo, hi], ascending.
std::vector<long> primes_in(long lo, long hi);

unsigned long long mulmod(unsigned long long a, unsigned long long b,
                          unsigned long long m);
unsigned long long powmod(unsigned long long b, unsigned long long e,
                          unsigned long long m);

long long totient(long long n);

struct TwoSquares {
  long long a = 0;  // 0 <= a <= b, a*a + b*b == n
  long long b = 0;
  long long n = 0;
};

// Decision by the factorization criterion (every prime q = 3 mod 4 divides n
// to an even power), witness by search from a = 0 upward.
std::optional<TwoSquares> sum_two_squares(long long n);

// sum_{x=0}^{n-1} jacobi(x(x^2+1), n) for odd n > 1.
long long jacobsthal_sum(long long n);

// Unique representative in the symmetric range (-M/2, M/2], M = prod(moduli).
// Throws on length mismatch or non-coprime moduli.
mpz_class crt_reconstruct(const std::vector<long long>& residues,
                          const std::vector<long long>& moduli);

// Integer B with |det M| <= B: ceiling of the product of row Euclidean norms.
mpz_class hadamard_bound(const IntMat& m);

// r_k for k = 1..(p-1)/2 at index k-1, where r_k^2 = -k^2 (mod p),
// r in the same half range, fixed-point-free involution. Needs p = 1 (mod 4).
std::vector<long> wilson_involution(long p);

}  // namespace legdet
