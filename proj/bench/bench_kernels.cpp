// Serial reference against the OpenMP kernels: membership in A_N (pairs checked in parallel) and the
// batch theorem verifier (cases in parallel). Outputs of both variants are compared before timing.

#include "raviolo/coinv/pools.hpp"
#include "raviolo/config/config.hpp"
#include "raviolo/local/local.hpp"
#include "raviolo/th/th.hpp"

#include <benchmark/benchmark.h>

#include <stdexcept>

using namespace rav;

namespace {

CForm membership_input(int n) {
  if (n == 3) return omega12() * omega12() + kernel_element();
  CForm w;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      CForm vij = v_ij(n, i, j);
      w += (vij * (CForm(1) - vij)).scaled(RatFrac::inv_difference(i - 1, j - 1, 1)) * vij.d();
    }
  return w;
}

void check_membership_agrees(const CForm& w, int n) {
  MembershipReport a = in_A_N(w, n), b = in_A_N_serial(w, n);
  if (a.member != b.member || a.violations != b.violations || a.faces != b.faces)
    throw std::logic_error("serial and parallel membership reports differ");
}

void BM_MembershipSerial(benchmark::State& st) {
  int n = static_cast<int>(st.range(0));
  CForm w = membership_input(n);
  check_membership_agrees(w, n);
  for (auto _ : st) benchmark::DoNotOptimize(in_A_N_serial(w, n));
}

void BM_MembershipParallel(benchmark::State& st) {
  int n = static_cast<int>(st.range(0));
  CForm w = membership_input(n);
  for (auto _ : st) benchmark::DoNotOptimize(in_A_N(w, n));
}

std::vector<TheoremCase> bench_cases(int count) { return theorem_cases(7, count); }

void BM_TheoremSerial(benchmark::State& st) {
  auto cases = bench_cases(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(verify_batch_serial(cases, 3));
}

void BM_TheoremParallel(benchmark::State& st) {
  auto cases = bench_cases(static_cast<int>(st.range(0)));
  auto a = verify_batch(cases, 3), b = verify_batch_serial(cases, 3);
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i].equal != b[i].equal || a[i].lhs_terms != b[i].lhs_terms || a[i].rhs_terms != b[i].rhs_terms)
      throw std::logic_error("serial and parallel verification differ");
  for (auto _ : st) benchmark::DoNotOptimize(verify_batch(cases, 3));
}

void BM_CohomologyTruncated(benchmark::State& st) {
  int K = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(cohomology_truncated(K, 3));
}

void BM_CoverRanks(benchmark::State& st) {
  std::vector<int> Ks;
  for (int k = 1; k <= st.range(0); ++k) Ks.push_back(k);
  for (auto _ : st) benchmark::DoNotOptimize(cover_ranks(Ks));
}

}  // namespace

BENCHMARK(BM_MembershipSerial)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MembershipParallel)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TheoremSerial)->Arg(8)->Arg(24)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TheoremParallel)->Arg(8)->Arg(24)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CohomologyTruncated)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CoverRanks)->Arg(6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
