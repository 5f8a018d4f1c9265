#pragma once

#include "raviolo/loop/vacuum.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace rav {

// Fixed sl2 test material shared by the tests, the acceptance run, the CLI and the benchmarks.
inline constexpr int kE = 0, kH = 1, kF = 2;

struct PoolEntry {
  std::string name;
  std::vector<LoopGen> word;  // state = word |0>
};

// Twelve raviolo states of pole depth <= 2.
const std::vector<PoolEntry>& theorem_pool();
// Classical states of depth <= 2.
const std::vector<PoolEntry>& classical_pool();
// Six lowering generators used for the explicit-versus-recursive comparison.
const std::vector<LoopGen>& explicit_generator_pool();
// PBW monomials of length <= max_len over explicit_generator_pool().
std::vector<Monomial> explicit_monomials(int max_len);

State pool_state(LoopEngine& eng, const PoolEntry& e);

struct TheoremCase {
  int a = 0;
  int b = 0;
  bool adjoint = false;  // far site: adjoint module or the trivial one
  int far_basis = 0;
};

struct CaseResult {
  bool equal = false;
  long lhs_terms = 0;
  long rhs_terms = 0;
};

std::vector<TheoremCase> theorem_cases(std::uint64_t seed, int count);
// N = 3 theorem checks over theorem_pool(); one engine per case.
CaseResult verify_case(const TheoremCase& c, long K, bool classical = false);
std::vector<CaseResult> verify_batch(const std::vector<TheoremCase>& cases, long K, bool classical = false);
std::vector<CaseResult> verify_batch_serial(const std::vector<TheoremCase>& cases, long K, bool classical = false);

}  // namespace rav
