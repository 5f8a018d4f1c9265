#pragma once

#include "raviolo/config/config.hpp"
#include "raviolo/loop/statefield.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace rav {

enum class SiteKind { Trivial, FiniteDim, Vacuum };

// Module placed at a marked point. Trivial and FiniteDim sites are smooth modules on which
// g (x) C{{w - z_i}}_+ acts through the character f(w) p(v, dv) -> f(z_i) p(eps_v) (1-forms act as 0).
struct SiteSpec {
  SiteKind kind = SiteKind::Vacuum;
  std::vector<RMatrix> mats;  // FiniteDim: action of each basis element of g
  int parity = 0;             // Trivial/FiniteDim: parity of every vector
  int eps_v = 0;              // 0 or 1

  static SiteSpec vacuum();
  static SiteSpec trivial(int parity = 0);
  // Throws std::invalid_argument unless [M_i, M_j] = sum_k c^k_ij M_k.
  static SiteSpec finite_dim(const LieData& g, std::vector<RMatrix> mats, int parity = 0);
  static SiteSpec adjoint(const LieData& g, int parity = 0);

  int dim() const;
  bool is_far() const { return kind != SiteKind::Vacuum; }
};

// Vector at one site: a basis index (Trivial/FiniteDim) or a PBW monomial (Vacuum).
struct SiteVec {
  int basis = 0;
  Monomial mono;

  bool operator<(const SiteVec& o) const { return basis != o.basis ? basis < o.basis : mono < o.mono; }
  bool operator==(const SiteVec& o) const { return basis == o.basis && mono == o.mono; }
};
using TensorKey = std::vector<SiteVec>;

// Sum of coefficient (x) m_1 (x) ... (x) m_N with the coefficient written first.
class TensorState {
 public:
  using Terms = std::map<TensorKey, CForm>;

  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  void add_term(const TensorKey& k, const CForm& c);

  TensorState operator-() const;
  TensorState& operator+=(const TensorState& o);
  friend TensorState operator+(TensorState a, const TensorState& b) { return a += b; }
  friend TensorState operator-(TensorState a, const TensorState& b) { return a += -b; }
  bool operator==(const TensorState& o) const { return t_ == o.t_; }
  bool operator!=(const TensorState& o) const { return !(*this == o); }
  // c * (this), c placed in front of the coefficient.
  TensorState left_multiplied(const CForm& c) const;

 private:
  Terms t_;
};

// Element of (A_{N-1}{{x}} (x) M)-representatives: per tensor key a series in x = z_N - z_{N-1}.
class CoinvSeries {
 public:
  explicit CoinvSeries(long K = kExact) : K_(K) {}

  long precision() const { return K_; }
  const std::map<TensorKey, Laurent<CForm>>& terms() const { return t_; }
  void add(const TensorKey& k, int power, const CForm& c);
  bool is_zero() const { return t_.empty(); }
  // Equal on every power below both precisions.
  bool agrees_with(const CoinvSeries& o) const;
  CoinvSeries operator+(const CoinvSeries& o) const;
  CoinvSeries operator-(const CoinvSeries& o) const;

 private:
  long K_;
  std::map<TensorKey, Laurent<CForm>> t_;
};

// Global element a (x) eta, eta in A'_{N+1}.
struct GlobalElement {
  int lie;
  CForm eta;
};

// One term c (x) Y of an expansion at a site: c in A_N, Y a combination of loop generators.
struct PlusTerm {
  CForm coeff;
  GenCombo gens;
};

// How iota_t g_s(X) is obtained during a swap: closed-form expansion of the pole at z_s with the
// precedence form Q_{ts} substituted for v, or expand_at applied to g_build.
enum class SwapRoute { Closed, Global };

class Coinvariants {
 public:
  Coinvariants(LoopEngine& eng, std::vector<SiteSpec> sites, bool classical = false,
               SwapRoute route = SwapRoute::Closed);

  int n() const { return static_cast<int>(sites_.size()); }
  const std::vector<SiteSpec>& sites() const { return sites_; }
  bool classical() const { return classical_; }
  LoopEngine& engine() const { return *eng_; }

  int vector_parity(int site, const SiteVec& v) const;
  // Validates a key against the site list (canonical monomials, basis range).
  void check_key(const TensorKey& k) const;
  TensorState basis_state(const TensorKey& k, const CForm& c = CForm(1)) const;

  // Terms of iota_t g_s(X) needed against a vector of depth `depth` at site t (powers below depth).
  std::vector<PlusTerm> swap_expansion(int s, int t, const LoopGen& x, int depth) const;
  // Element c (x) Y acting at site t, with Koszul signs for passing the coefficient and earlier sites.
  TensorState act_at_site(int t, const CForm& c, const LoopGen& y, const TensorState& st) const;
  // sum_t (iota_t G) . st (sites in `skip` omitted); expansions truncated by each site's depth.
  TensorState act_global(const GlobalElement& g, const TensorState& st, const std::vector<int>& skip = {}) const;

  // Replaces the outermost generator at site s of every term carrying one.
  TensorState swap_at_site(const TensorState& st, int s) const;
  // Same, requiring that outermost generator to be x in every term.
  TensorState swap_at_site(const TensorState& st, int s, const LoopGen& x) const;
  // (-1)^{|X| (|coefficient| + |m_1| + ... + |m_{s-1}|)} for a homogeneous coefficient of parity p.
  int swap_sign(const TensorKey& k, int s, int coeff_parity) const;

  // Representative with no lowering generators; sites processed in `order` (default N, N-1, ..., 1).
  TensorState reduce(const TensorState& st) const;
  TensorState reduce(const TensorState& st, const std::vector<int>& order) const;

 private:
  TensorState swap_term(const TensorKey& k, const CForm& c, int s) const;
  std::vector<std::pair<SiteVec, Rational>> act_vector(int t, const LoopGen& y, const SiteVec& v) const;
  std::vector<PlusTerm> split_local(const RavLocal& x, int lie, int min_power) const;
  int depth_needed(int t, const SiteVec& v) const;

  LoopEngine* eng_;
  std::vector<SiteSpec> sites_;
  bool classical_;
  SwapRoute route_;
  mutable std::map<std::tuple<int, int, LoopGen, int>, std::vector<PlusTerm>> swap_cache_;
};

struct PropagationResult {
  bool ok = false;
  TensorState state;  // over N-1 sites when ok, otherwise the input
};

// Drops a bare vacuum at site N when every coefficient lies in the image of iota_{[1,N-1]}.
PropagationResult propagate_vacuum(const TensorState& st, int n);
// Recognizes w as iota_{[1,N-1]}(w') and returns w', if possible.
std::optional<CForm> recognize_embedded(const CForm& w, int n);

// Base change iota_{z_N -> z_{N-1}}: site N must carry |0>; coefficients are Laurent expanded in
// x = z_N - z_{N-1} below x^K and forms pulled back along p*_{N -> N-1} (parameter u).
CoinvSeries expand_coinvariant(const TensorState& st, int n, long K);

// sign * [m_far (x) f at site N-1], each coefficient state reduced over the N-1 sites of ctx.
CoinvSeries reduce_field(const Coinvariants& ctx, const TensorKey& far, const Field& f, int sign);

// Relabels sites by perm (new position of old site i is perm[i-1]), with the Koszul sign of the
// reordering of site vectors and the matching relabeling of z's and of the S_N simplex.
TensorState permute_sites(const TensorState& st, const std::vector<int>& perm, const Coinvariants& ctx);

struct TheoremReport {
  bool equal = false;
  CoinvSeries lhs, rhs;
  long lhs_terms = 0, rhs_terms = 0;
};

// Both sides of [m (x) B@z_{N-1} (x) A@z_N] -> (-1)^{|A||B|} [m (x) Y(A; z_N - z_{N-1}) B] below x^K.
// `far` lists the far sites (positions 1..N-2) and `far_basis` their basis vectors.
TheoremReport verify_theorem(LoopEngine& eng, const std::vector<SiteSpec>& far, const std::vector<int>& far_basis,
                             const State& a, const State& b, long K, SwapRoute route = SwapRoute::Closed);
// Classical analogue with generators a (x) z^n and Y computed by y_classical.
TheoremReport classical_verify(LoopEngine& eng, const std::vector<SiteSpec>& far, const std::vector<int>& far_basis,
                               const State& a, const State& b, long K);

std::string site_vec_string(const LieData& g, const SiteSpec& spec, const SiteVec& v);
std::string tensor_state_string(const LieData& g, const Coinvariants& ctx, const TensorState& st);
std::string coinv_series_string(const LieData& g, const std::vector<SiteSpec>& sites, const CoinvSeries& s);

}  // namespace rav
