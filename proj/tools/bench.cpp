// Compares the serial and OpenMP drivers on the two heavy workloads: the
// enumeration suite and the product-lattice sweep.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "relcomp/enumerate.hpp"
#include "relcomp/verify.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double time_ms(const std::function<void()>& fn) {
  auto t0 = Clock::now();
  fn();
  auto t1 = Clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  unsigned max_size = argc > 1 ? static_cast<unsigned>(std::stoul(argv[1])) : 6;

#ifdef _OPENMP
  std::printf("openmp: %d threads\n", omp_get_max_threads());
#else
  std::printf("openmp: not available, both runs are serial\n");
#endif

  double suite_serial = time_ms([&] { relcomp::run_suite(max_size, {}, false); });
  double suite_parallel = time_ms([&] { relcomp::run_suite(max_size, {}, true); });
  std::printf("suite n=%u    serial %9.1f ms   parallel %9.1f ms   speedup %.2fx\n", max_size,
              suite_serial, suite_parallel, suite_serial / suite_parallel);

  std::vector<relcomp::Lattice> factors;
  factors.push_back(relcomp::make_boolean(2));
  factors.push_back(relcomp::make_mn(3));
  factors.push_back(relcomp::make_mn(4));
  double th1_serial = time_ms([&] { relcomp::verify_th1(factors, false); });
  double th1_parallel = time_ms([&] { relcomp::verify_th1(factors, true); });
  std::printf("product sweep  serial %9.1f ms   parallel %9.1f ms   speedup %.2fx\n",
              th1_serial, th1_parallel, th1_serial / th1_parallel);
  return 0;
}
