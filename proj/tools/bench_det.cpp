#include <omp.h>

#include <cstdio>
#include <random>
#include <vector>

#include "legdet/detengine.hpp"
#include "legdet/matrixgen.hpp"

// Times the serial fraction-free elimination against the multi-modular
// kernel at 1 and at all available threads, on symbol matrices of growing
// dimension. The exact values must agree; timing is the only output.

namespace {

using namespace legdet;

IntMat symbol_matrix(long long p, long long dim) {
  MatrixSpec spec{p, 0, dim - 1, 0, dim - 1,
                  {{1, Atom{0, 0, 0, 1, 1, 0}}, {1, Atom{0, 0, 0, 1, -1, 0}}},
                  0};
  return build_numeric(spec, {});
}

double time_once(const IntMat& m, mpz_class (*fn)(const IntMat&)) {
  double t0 = omp_get_wtime();
  mpz_class v = fn(m);
  double dt = omp_get_wtime() - t0;
  static mpz_class sink = 0;
  sink += v;  // keep the call alive
  return dt;
}

}  // namespace

int main() {
  const int max_threads = omp_get_max_threads();
  std::printf("dim    bareiss      modular(1)   modular(%d)   speedup\n",
              max_threads);
  for (long long dim : {24LL, 48LL, 96LL, 160LL, 240LL}) {
    long long p = dim | 1;
    while (!is_prime(static_cast<unsigned long long>(p)) || p <= dim) p += 2;
    IntMat m = symbol_matrix(p, dim);

    double t_bareiss = time_once(m, det_bareiss);

    omp_set_num_threads(1);
    double t_mod1 = time_once(m, det_modular);

    omp_set_num_threads(max_threads);
    double t_modn = time_once(m, det_modular);

    if (det_bareiss(m) != det_modular(m)) {
      std::fprintf(stderr, "engines disagree at dim %lld\n", dim);
      return 1;
    }
    std::printf("%-6lld %-12.4f %-12.4f %-12.4f %.2fx\n", dim, t_bareiss,
                t_mod1, t_modn, t_mod1 / (t_modn > 0 ? t_modn : 1e-9));
  }
  return 0;
}
