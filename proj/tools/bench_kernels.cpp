// Times the serial reference kernels against their OpenMP variants and
// checks that both produce bitwise identical coefficients.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <random>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "homtaylor/jet.hpp"
#include "homtaylor/kernels.hpp"
#include "homtaylor/symtensor.hpp"

namespace {

using namespace homtaylor;

double now_seconds() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

std::vector<double> random_coeffs(std::size_t size, std::mt19937_64& eng) {
  std::vector<double> c(size);
  for (double& v : c) {
    v = static_cast<double>(eng() >> 11) * 0x1.0p-53 * 2.0 - 1.0;
  }
  return c;
}

template <class Fn>
double time_best_of(int reps, Fn&& fn) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const double t0 = now_seconds();
    fn();
    best = std::min(best, now_seconds() - t0);
  }
  return best;
}

void bench_jet_mul(int dim, int degree, int reps) {
  const auto layout = JetLayout::get(dim, degree);
  std::mt19937_64 eng(7);
  const auto x = random_coeffs(layout->size(), eng);
  const auto y = random_coeffs(layout->size(), eng);
  std::vector<double> out_serial(layout->size());
  std::vector<double> out_parallel(layout->size());

  const double t_serial = time_best_of(
      reps, [&] { kernels::jet_mul_serial(*layout, x, y, out_serial); });
  const double t_parallel = time_best_of(
      reps, [&] { kernels::jet_mul_parallel(*layout, x, y, out_parallel); });

  const bool identical = std::memcmp(out_serial.data(), out_parallel.data(),
                                     out_serial.size() * sizeof(double)) == 0;
  std::printf("jet_mul   n=%2d m=%2d %9zu coeffs  serial %10.3f ms  parallel "
              "%10.3f ms  speedup %5.2fx  %s\n",
              dim, degree, layout->size(), 1e3 * t_serial, 1e3 * t_parallel,
              t_serial / t_parallel, identical ? "bit-identical" : "MISMATCH");
  if (!identical) {
    std::exit(1);
  }
}

void bench_contract(int dim, int order, int reps) {
  const auto parent = TensorLayout::get(dim, order);
  const auto child = TensorLayout::get(dim, order - 1);
  std::mt19937_64 eng(11);
  const auto t = random_coeffs(parent->size(), eng);
  const auto v = random_coeffs(static_cast<std::size_t>(dim), eng);
  std::vector<double> out_serial(child->size());
  std::vector<double> out_parallel(child->size());

  const double t_serial = time_best_of(reps, [&] {
    kernels::contract_serial(*parent, *child, t, v, out_serial);
  });
  const double t_parallel = time_best_of(reps, [&] {
    kernels::contract_parallel(*parent, *child, t, v, out_parallel);
  });

  const bool identical = std::memcmp(out_serial.data(), out_parallel.data(),
                                     out_serial.size() * sizeof(double)) == 0;
  std::printf("contract  n=%2d k=%2d %9zu coeffs  serial %10.3f ms  parallel "
              "%10.3f ms  speedup %5.2fx  %s\n",
              dim, order, parent->size(), 1e3 * t_serial, 1e3 * t_parallel,
              t_serial / t_parallel, identical ? "bit-identical" : "MISMATCH");
  if (!identical) {
    std::exit(1);
  }
}

}  // namespace

int main(int argc, char** argv) {
  const bool quick = argc > 1 && std::string_view(argv[1]) == "--quick";

#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP disabled; parallel kernels run serially\n");
#endif

  if (quick) {
    bench_jet_mul(3, 4, 3);
    bench_contract(4, 4, 3);
    return 0;
  }

  bench_jet_mul(3, 6, 5);
  bench_jet_mul(5, 6, 5);
  bench_jet_mul(8, 6, 3);
  bench_jet_mul(10, 8, 3);
  bench_contract(6, 6, 5);
  bench_contract(10, 8, 3);
  bench_contract(16, 6, 3);
  return 0;
}
