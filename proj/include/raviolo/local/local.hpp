#pragma once

#include "raviolo/local/vform.hpp"

#include <string>
#include <utility>
#include <vector>

namespace rav {

// Element of C{{z}} truncated in z: sum_k z^k (f_k(v) + F_k(v) dv).
using LocalRav = Laurent<VForm>;

LocalRav local_term(int k, const VForm& f);

// Pullbacks at v = 0 and v = 1 have no negative powers of z.
bool boundary_check(const LocalRav& x);
std::pair<LocalRav, LocalRav> split_pm(const LocalRav& x);
bool is_minus(const LocalRav& x);
LocalRav local_d(const LocalRav& x);

// Homotopy on the plus part: h(f + F dv) = int_0^v F.
LocalRav homotopy_h(const LocalRav& x);
// iota o pi_0 on the plus part: constant 0-form x|_{v=0}.
LocalRav project_pi0(const LocalRav& x);
// Homotopy on the minus part: k(f + F dv) = int_0^v F - v int_0^1 F.
LocalRav homotopy_k(const LocalRav& x);
// iota' o pi' on the minus part: (int_0^1 F) dv.
LocalRav project_pi_prime(const LocalRav& x);

struct CohomologyTable {
  int K = 0, D = 0;
  int dim_c0 = 0, dim_c1 = 0, rank_d = 0;
  int h0 = 0, h1 = 0;
  std::vector<LocalRav> reps0, reps1;
};

// Cohomology of C{{z}} restricted to z-powers in [-K, K] and v-degree <= D.
CohomologyTable cohomology_truncated(int K, int D);

std::string local_string(const LocalRav& x);

}  // namespace rav
