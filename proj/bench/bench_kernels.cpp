// Serial vs OpenMP timings for exact elimination and the verification sweep.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>

#include "wt/kernels.hpp"
#include "wt/operators.hpp"
#include "wt/verify.hpp"

namespace {

double seconds(const std::function<void()>& f, int reps) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

void row(const std::string& name, double serial, double parallel, bool same) {
  std::printf("%-34s %10.4f %10.4f %8.2fx  %s\n", name.c_str(), serial, parallel, serial / parallel,
              same ? "identical" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  const int reps = argc > 1 ? std::atoi(argv[1]) : 3;
  std::printf("threads: %d, best of %d\n", omp_get_max_threads(), reps);
  std::printf("%-34s %10s %10s %9s\n", "case", "serial s", "omp s", "speedup");

  for (const auto& [m, qmax] : {std::pair{4u, 16u}, std::pair{6u, 24u}, std::pair{8u, 32u}}) {
    const wt::WeylOperator ts = wt::build_ts_reduced();
    wt::KernelFamily s, p;
    const double ts_serial = seconds([&] { s = wt::kernel_linear_solve(ts, m, qmax, std::nullopt, wt::Exec::Serial); }, reps);
    const double ts_par = seconds([&] { p = wt::kernel_linear_solve(ts, m, qmax, std::nullopt, wt::Exec::Parallel); }, reps);
    row("ker T_s  m=" + std::to_string(m) + " qmax=" + std::to_string(qmax), ts_serial, ts_par, s.basis == p.basis);
  }

  const wt::OperatorTable table = wt::OperatorTable::standard();
  wt::VerificationReport a, b;
  const double v_serial = seconds([&] { a = wt::run_suite("all", table, wt::Exec::Serial); }, reps);
  const double v_par = seconds([&] { b = wt::run_suite("all", table, wt::Exec::Parallel); }, reps);
  row("verify all", v_serial, v_par, wt::to_json(a).dump() == wt::to_json(b).dump());
  return 0;
}
