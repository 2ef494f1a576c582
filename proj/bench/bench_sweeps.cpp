// Wall-clock comparison of the sweep kernels in serial and OpenMP mode.
// Case counts are asserted equal across modes, so the table doubles as a
// smoke test for the fan-out.
#include <cstdio>
#include <functional>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "findec/checks.hpp"

using namespace findec;

namespace {

void row(const std::string& label, const std::function<CheckReport(Exec)>& kernel) {
  CheckReport s = kernel(Exec::serial);
  CheckReport p = kernel(Exec::parallel);
  const bool same = s.cases == p.cases && s.failure_count == p.failure_count;
  std::printf("%-14s %10lld cases   serial %8.3fs   parallel %8.3fs   x%.2f%s\n", label.c_str(),
              s.cases, s.seconds, p.seconds, p.seconds > 0 ? s.seconds / p.seconds : 0.0,
              same ? "" : "   MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  long long bound = argc > 1 ? std::atoll(argv[1]) : 6;
#ifdef _OPENMP
  std::printf("threads: %d, bound: %lld\n", omp_get_max_threads(), bound);
#else
  std::printf("threads: 1 (no OpenMP), bound: %lld\n", bound);
#endif
  row("duality", [&](Exec e) { return check_duality(bound, 1, e); });
  row("qs-laws", [&](Exec e) { return check_qs_laws(std::min<long long>(bound, 6), e); });
  row("qs-oracle", [&](Exec e) { return check_qs_oracle(std::min<long long>(bound, 5), e); });
  row("chen", [&](Exec e) { return check_chen(std::min<long long>(bound, 5), 2000, 1e-8, e); });
  row("convolution", [&](Exec e) { return check_convolution(bound, 1, e); });
  row("structure", [&](Exec e) { return check_structure(e); });
  row("invertibility", [&](Exec e) { return check_invertibility(bound, e); });
  return 0;
}
