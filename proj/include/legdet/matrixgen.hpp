#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "legdet/arith.hpp"

namespace legdet {

// Perturbation slots. x adds a constant, y scales by the row symbol,
// z by the column symbol, w by their product.
inline constexpr unsigned VX = 1u;
inline constexpr unsigned VY = 2u;
inline constexpr unsigned VZ = 4u;
inline constexpr unsigned VW = 8u;

// Slot index 0..3 for a single-bit mask.
int var_index(unsigned bit);
char var_name(int index);

using Assignment = std::map<char, long long>;

// Symbol argument: alpha*j^2 + beta*j*k + gamma*k^2 + delta*j + eps_coef*k + zeta.
struct Atom {
  long long alpha = 0;
  long long beta = 0;
  long long gamma = 0;
  long long delta = 0;
  long long eps_coef = 0;
  long long zeta = 0;

  long long eval(long long j, long long k) const;
  bool operator==(const Atom&) const = default;
};

// Entry (j, k) of the realized matrix:
//   sum coef * jacobi(atom(j, k), modulus)
//   + x + y*jacobi(j, modulus) + z*jacobi(k, modulus) + w*jacobi(j*k, modulus)
// over inclusive index ranges. Row and column ranges must have equal length.
struct MatrixSpec {
  long long modulus = 0;
  long long row_lo = 0;
  long long row_hi = -1;
  long long col_lo = 0;
  long long col_hi = -1;
  std::vector<std::pair<long long, Atom>> atoms;
  unsigned vars = 0;

  long dim() const;
  void validate() const;
  bool operator==(const MatrixSpec&) const = default;
};

// jacobi(t, n) for 0 <= t < n, built once per modulus. Immutable afterwards,
// so lookups are safe from any thread.
class SymbolTable {
 public:
  explicit SymbolTable(long long n);
  long long modulus() const { return n_; }
  int sym(long long t) const {
    t %= n_;
    if (t < 0) t += n_;
    return tab_[static_cast<size_t>(t)];
  }

 private:
  long long n_;
  std::vector<signed char> tab_;
};

// Shared memoized table for n; reference stays valid for program lifetime.
const SymbolTable& symbol_table(long long n);

IntMat build_numeric(const MatrixSpec& spec, const Assignment& assign);

// Rank-one structure of the variable terms: the full matrix at (x, y, z, w)
// equals base + x*ones*ones^T + y*u*ones^T + z*ones*v^T + w*u*v^T.
struct FamilyDecomposition {
  IntMat base;
  std::vector<long long> ones;
  std::vector<long long> u;
  std::vector<long long> v;
};

FamilyDecomposition decompose(const MatrixSpec& spec);

// [x + ((j+k-1)/p)] over 1..(p-1)/2, or 1..(p+1)/2 for the starred variant.
enum class ChapmanVariant { C, C_star };

MatrixSpec chapman_spec(long long p, ChapmanVariant variant);
IntMat chapman_matrix(long long p, ChapmanVariant variant, long long x);

// Canonical text form, e.g. "n=13; rows=1..6; cols=1..6; atom=j+k; vars=x,y".
// parse_spec also accepts p= for n=, range= setting both bounds, bound
// expressions in p or n such as (p-1)/2, and a repeated atom= key with an
// optional integer symbol-coefficient prefix as in atom=-1:j^2-k^2.
std::string to_text(const MatrixSpec& spec);
MatrixSpec parse_spec(const std::string& text);

}  // namespace legdet
