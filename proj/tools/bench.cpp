// Compares the OpenMP kernels against their serial reference implementations.

#include <chrono>
#include <cstdio>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "f2q/dense.hpp"
#include "f2q/encoding.hpp"
#include "f2q/gf2.hpp"
#include "f2q/pauli.hpp"

namespace {

double now() {
#ifdef _OPENMP
  return omp_get_wtime();
#else
  return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch())
      .count();
#endif
}

template <typename F>
double best_of(int reps, F&& fn) {
  double best = 1e30;
  for (int r = 0; r < reps; ++r) {
    double t0 = now();
    fn();
    double t1 = now();
    if (t1 - t0 < best) best = t1 - t0;
  }
  return best;
}

void report(const char* name, double serial, double parallel, bool same) {
  std::printf("%-28s %10.4fs %10.4fs %7.2fx %s\n", name, serial, parallel, serial / parallel,
              same ? "outputs match" : "OUTPUTS DIFFER");
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (compiled without OpenMP)\n");
#endif
  std::printf("%-28s %11s %11s %8s\n", "kernel", "serial", "parallel", "speedup");

  {
    std::mt19937_64 rng(12345);
    const std::size_t n = 1024;
    f2q::BitMatrix a(n, n), b(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (rng() & 1) a.set(i, j, true);
        if (rng() & 1) b.set(i, j, true);
      }
    f2q::BitMatrix cs, cp;
    double ts = best_of(3, [&] { cs = f2q::gf2_matmul_serial(a, b); });
    double tp = best_of(3, [&] { cp = f2q::gf2_matmul(a, b); });
    report("gf2_matmul n=1024", ts, tp, cs == cp);
  }

  {
    f2q::Encoding e = f2q::make_encoding(f2q::Scheme::sierpinski, 729);
    std::vector<f2q::PauliString> strings = f2q::majoranas(e);
    std::optional<std::pair<std::size_t, std::size_t>> rs, rp;
    double ts = best_of(3, [&] { rs = f2q::find_commuting_pair_serial(strings); });
    double tp = best_of(3, [&] { rp = f2q::find_commuting_pair(strings); });
    report("pair_anticommute n=729", ts, tp, rs == rp);
  }

  {
    const std::size_t n = 20;
    std::mt19937_64 rng(999);
    f2q::PauliString p(n);
    for (std::size_t j = 0; j < n; ++j)
      p.set_letter(j, static_cast<f2q::Letter>(rng() % 4));
    f2q::StateVector v = f2q::StateVector::zero(n);
    for (auto& a : v.amp) a = f2q::Dyadic(static_cast<long long>(rng() % 5) - 2, 0, 1);
    f2q::StateVector os, op;
    double ts = best_of(3, [&] { os = f2q::apply_pauli_serial(p, v); });
    double tp = best_of(3, [&] { op = f2q::apply_pauli(p, v); });
    report("apply_pauli n=20", ts, tp, os == op);
  }

  return 0;
}
