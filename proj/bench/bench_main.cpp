// Times the OpenMP kernels against the serial reference on the same
// inputs and checks that both modes report identical cuts.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cpmc/exec.hpp"
#include "cpmc/generate.hpp"
#include "cpmc/oracle.hpp"
#include "cpmc/solver.hpp"

using namespace cpmc;
using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct Row {
  std::string name;
  double serial_ms = 0;
  double parallel_ms = 0;
  bool agree = true;
};

void print_rows(const std::vector<Row>& rows) {
  std::printf("%-34s %12s %12s %9s %7s\n", "benchmark", "serial(ms)", "openmp(ms)", "speedup",
              "match");
  for (const auto& r : rows)
    std::printf("%-34s %12.1f %12.1f %8.2fx %7s\n", r.name.c_str(), r.serial_ms, r.parallel_ms,
                r.serial_ms / (r.parallel_ms > 0 ? r.parallel_ms : 1e-9),
                r.agree ? "yes" : "NO");
}

std::vector<PlanarInstance> make_batch(int count, int nodes, int edges) {
  std::vector<PlanarInstance> batch;
  std::mt19937 rng(20260822u);
  for (int i = 0; i < count; ++i) {
    PlanarInstance inst = gen_random_planar(nodes, edges, 1000u + static_cast<unsigned>(i));
    randomize_edge_weights(inst, 1, 5, rng);
    inst.graph = perturb(inst.graph, PerturbMode::Edges);
    batch.push_back(std::move(inst));
  }
  return batch;
}

// Batch of instances, solved one after another against spread over the
// worker pool; this is the same split the command line --jobs flag uses.
Row bench_solver_batch(const std::vector<PlanarInstance>& batch) {
  Row row{"cpmec-planar batch x" + std::to_string(batch.size()), 0, 0, true};
  std::vector<CpmcSolution> got_serial(batch.size()), got_parallel(batch.size());
  SolveOptions opts;
  opts.exec = Exec::Serial;

  Clock::time_point t0 = Clock::now();
  for (std::size_t i = 0; i < batch.size(); ++i) got_serial[i] = solve_cpmec_planar(batch[i], opts);
  row.serial_ms = ms_since(t0);

  t0 = Clock::now();
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (std::size_t i = 0; i < batch.size(); ++i)
    got_parallel[i] = solve_cpmec_planar(batch[i], opts);
  row.parallel_ms = ms_since(t0);

  for (std::size_t i = 0; i < batch.size(); ++i) {
    const auto& a = got_serial[i];
    const auto& b = got_parallel[i];
    if (a.feasible() != b.feasible() ||
        (a.feasible() && (a.cut.elements != b.cut.elements || a.cut.total != b.cut.total)))
      row.agree = false;
  }
  return row;
}

Row bench_oracle(const char* name, bool edge_cut, int nodes, int edges, unsigned seed) {
  PlanarInstance inst = gen_random_planar(nodes, edges, seed);
  inst.graph = perturb(inst.graph, edge_cut ? PerturbMode::Edges : PerturbMode::Nodes);

  Row row{name, 0, 0, true};
  Clock::time_point t0 = Clock::now();
  CutResult a = edge_cut ? oracle_cpmec(inst.graph, inst.s1, inst.s2, inst.t, 26, Exec::Serial)
                         : oracle_cpmnc(inst.graph, inst.s1, inst.s2, inst.t, 26, Exec::Serial);
  row.serial_ms = ms_since(t0);

  t0 = Clock::now();
  CutResult b = edge_cut ? oracle_cpmec(inst.graph, inst.s1, inst.s2, inst.t, 26, Exec::Parallel)
                         : oracle_cpmnc(inst.graph, inst.s1, inst.s2, inst.t, 26, Exec::Parallel);
  row.parallel_ms = ms_since(t0);

  row.agree = a.finite() == b.finite() &&
              (!a.finite() || (a.elements == b.elements && a.total == b.total));
  return row;
}

}  // namespace

int main(int argc, char** argv) {
  int batch_size = argc > 1 ? std::atoi(argv[1]) : 64;

#ifdef _OPENMP
  std::printf("worker threads: %d\n", omp_get_max_threads());
#else
  std::printf("worker threads: 1 (built without OpenMP)\n");
#endif

  std::vector<Row> rows;
  rows.push_back(bench_solver_batch(make_batch(batch_size, 24, 48)));
  rows.push_back(bench_oracle("oracle cpmec n=10 m=22", true, 10, 22, 7u));
  rows.push_back(bench_oracle("oracle cpmec n=11 m=24", true, 11, 24, 11u));
  rows.push_back(bench_oracle("oracle cpmnc n=16 m=28", false, 16, 28, 5u));
  print_rows(rows);

  for (const auto& r : rows)
    if (!r.agree) {
      std::fprintf(stderr, "mode mismatch in %s\n", r.name.c_str());
      return 1;
    }
  return 0;
}
