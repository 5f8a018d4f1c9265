#pragma once

#include "raviolo/exact/expand.hpp"
#include "raviolo/exact/ratfrac.hpp"
#include "raviolo/forms/polyform.hpp"
#include "raviolo/local/vform.hpp"

#include <string>
#include <utility>
#include <vector>

namespace rav {

// Forms over S_N (and possibly v) with coefficients in B_N or B_{N+1}. Site i is variable i-1; w = z_{N+1}.
using CForm = PolyForm<RatFrac>;
// Element of A_N{{w - z_s}}: Laurent series in (w - z_s) with CForm coefficients over {v} x S_N.
using RavLocal = Laurent<CForm>;

inline constexpr int kMaxFullN = 4;

void check_full_n(int n);

// Canonical u_sigma / du_sigma for a total order sigma on [1,n] (one-line notation).
CForm u_perm(const std::vector<int>& sigma);
CForm du_perm(const std::vector<int>& sigma);
CForm v_form();
// Sum of u_tau over tau in S_n with i preceding j.
CForm precedence_sum(int n, int i, int j);

struct MembershipReport {
  bool member = true;
  std::vector<std::pair<int, int>> violations;  // ordered pairs (i,j), 1-based
  std::vector<std::vector<int>> faces;          // labels of S_N^{ij} set to zero, per violation
};

// Membership in A_N: for each ordered pair (i,j) the restriction to {u_sigma = 0, sigma in S_N^{ij}}
// is regular in z_i - z_j.
MembershipReport in_A_N(const CForm& w, int n);
MembershipReport in_A_N_serial(const CForm& w, int n);

// iota_{J subset [1,N]}: A_{|J|} -> A_N. J holds 1-based sites in increasing order.
CForm iota_embed(const std::vector<int>& J, const CForm& w, int n);

// p*_{N+1 -> s}: forms over S_{N+1} to forms over {v} x S_N (coefficients untouched).
CForm p_pullback(int s, const CForm& w, int n);
// Same with label a of S_m collapsed onto b (labels above a shift down), parameter from param_family.
CForm p_pullback_general(int a, int b, const CForm& w, int m, int param_family);
// q*_s: forms over {v} x S_N to forms over S_{N+1}.
CForm q_pullback(int s, const CForm& w, int n);

// iota_{w -> z_s}: A_{N+1} -> A_N{{w - z_s}}, exact below (w - z_s)^K.
RavLocal expand_at(const CForm& w, int s, int n, long K, bool check_membership = true);
// Same without the membership precondition or boundary assertion (used for non-members in tests).
RavLocal expand_at_raw(const CForm& w, int s, int n, long K);

struct LocalReport {
  bool ok = true;
  std::string reason;
};
// Boundary conditions of A_N{{w - z_s}}.
LocalReport check_rav_local(const RavLocal& x, int n);
bool is_minus_local(const RavLocal& x);
std::pair<RavLocal, RavLocal> split_local(const RavLocal& x);

// g_k: A_N{{w - z_k}}_- -> A'_{N+1}.
CForm g_build(int k, const RavLocal& x, int n);

struct Decomposition {
  CForm global;
  std::vector<RavLocal> plus_remainder;  // one per site
};
// X = expansions of global + plus remainder, sitewise.
Decomposition decompose_global(const std::vector<RavLocal>& X, int n, long K);

// Omega_12 in A'_3 (N = 2, w = z_3), the kernel element u[123] u[312]/(w - z_2), and v_ij over S_n.
CForm omega12();
CForm kernel_element();
CForm v_ij(int n, int i, int j);

std::string cform_string(const CForm& w, int n_vars_w = -1);
std::string rav_local_string(const RavLocal& x, int s);

}  // namespace rav
