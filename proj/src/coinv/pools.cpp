#include "raviolo/coinv/pools.hpp"

#include "raviolo/coinv/coinv.hpp"

#include <random>

namespace rav {

namespace {

LoopGen m0(int a, int pole, int m = 0) { return LoopGen::minus0(a, pole, m); }
LoopGen m1(int a, int pole, int m = 0) { return LoopGen::minus1(a, pole, m); }
LoopGen cl(int a, int p) { return LoopGen::classical(a, p); }

const LieData& sl2() {
  static const LieData g = LieData::sl2();
  return g;
}

}  // namespace

const std::vector<PoolEntry>& theorem_pool() {
  static const std::vector<PoolEntry> pool = {
      {"|0>", {}},
      {"(e dv/z)|0>", {m1(kE, 1)}},
      {"(f dv/z)|0>", {m1(kF, 1)}},
      {"(h e0_0/z)|0>", {m0(kH, 1)}},
      {"(f v dv/z)|0>", {m1(kF, 1, 1)}},
      {"(e e0_0/z^2)|0>", {m0(kE, 2)}},
      {"(h dv/z^2)|0>", {m1(kH, 2)}},
      {"(e dv/z)(f dv/z)|0>", {m1(kE, 1), m1(kF, 1)}},
      {"(e dv/z)(h e0_0/z)|0>", {m1(kE, 1), m0(kH, 1)}},
      {"(h e0_0/z)(h e0_0/z)|0>", {m0(kH, 1), m0(kH, 1)}},
      {"(f dv/z)(e e0_1/z)|0>", {m1(kF, 1), m0(kE, 1, 1)}},
      {"(h dv/z)(f e0_0/z)|0>", {m1(kH, 1), m0(kF, 1)}},
  };
  return pool;
}

const std::vector<PoolEntry>& classical_pool() {
  static const std::vector<PoolEntry> pool = {
      {"|0>", {}},
      {"e_{-1}|0>", {cl(kE, -1)}},
      {"f_{-1}|0>", {cl(kF, -1)}},
      {"h_{-1}|0>", {cl(kH, -1)}},
      {"e_{-2}|0>", {cl(kE, -2)}},
      {"e_{-1}f_{-1}|0>", {cl(kE, -1), cl(kF, -1)}},
      {"h_{-1}h_{-1}|0>", {cl(kH, -1), cl(kH, -1)}},
      {"f_{-1}h_{-1}|0>", {cl(kF, -1), cl(kH, -1)}},
  };
  return pool;
}

const std::vector<LoopGen>& explicit_generator_pool() {
  static const std::vector<LoopGen> pool = {m1(kE, 1), m1(kF, 1), m0(kH, 1), m0(kE, 2), m1(kF, 1, 1), m1(kH, 2)};
  return pool;
}

std::vector<Monomial> explicit_monomials(int max_len) {
  std::vector<LoopGen> gens = explicit_generator_pool();
  std::sort(gens.begin(), gens.end());
  std::vector<Monomial> out{{}};
  std::vector<Monomial> layer{{}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<Monomial> next;
    for (const auto& m : layer) {
      for (const auto& g : gens) {
        if (!m.empty() && g < m.back()) continue;
        if (!m.empty() && g == m.back() && g.degree() == 1) continue;
        Monomial n = m;
        n.push_back(g);
        next.push_back(n);
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

State pool_state(LoopEngine& eng, const PoolEntry& e) { return eng.apply_word(e.word); }

std::vector<TheoremCase> theorem_cases(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  const int np = static_cast<int>(theorem_pool().size());
  std::vector<TheoremCase> out;
  for (int i = 0; i < count; ++i) {
    TheoremCase c;
    c.a = std::uniform_int_distribution<int>(0, np - 1)(rng);
    c.b = std::uniform_int_distribution<int>(0, np - 1)(rng);
    c.adjoint = rng() % 2;
    c.far_basis = c.adjoint ? std::uniform_int_distribution<int>(0, 2)(rng) : 0;
    out.push_back(c);
  }
  return out;
}

CaseResult verify_case(const TheoremCase& c, long K, bool classical) {
  const auto& pool = classical ? classical_pool() : theorem_pool();
  LoopEngine eng(sl2());
  State a = pool_state(eng, pool.at(c.a % pool.size()));
  State b = pool_state(eng, pool.at(c.b % pool.size()));
  std::vector<SiteSpec> far{c.adjoint ? SiteSpec::adjoint(sl2()) : SiteSpec::trivial()};
  TheoremReport rep = classical ? classical_verify(eng, far, {c.far_basis}, a, b, K)
                                : verify_theorem(eng, far, {c.far_basis}, a, b, K);
  return {rep.equal, rep.lhs_terms, rep.rhs_terms};
}

std::vector<CaseResult> verify_batch(const std::vector<TheoremCase>& cases, long K, bool classical) {
  std::vector<CaseResult> out(cases.size());
  const int n = static_cast<int>(cases.size());
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < n; ++i) out[i] = verify_case(cases[i], K, classical);
  return out;
}

std::vector<CaseResult> verify_batch_serial(const std::vector<TheoremCase>& cases, long K, bool classical) {
  std::vector<CaseResult> out;
  for (const auto& c : cases) out.push_back(verify_case(c, K, classical));
  return out;
}

}  // namespace rav
