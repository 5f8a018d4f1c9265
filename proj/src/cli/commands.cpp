#include "raviolo/cli/commands.hpp"

#include "raviolo/cli/parse.hpp"
#include "raviolo/coinv/coinv.hpp"
#include "raviolo/coinv/pools.hpp"
#include "raviolo/coinv/worked.hpp"
#include "raviolo/local/local.hpp"
#include "raviolo/th/th.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <ostream>
#include <random>
#include <sstream>

namespace rav {

namespace {

using Json = nlohmann::ordered_json;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SemanticError : InputError {
  using InputError::InputError;
};

struct Output {
  Json doc;
  std::string text;
  int code = kExitOk;
};

const LieData& sl2_data() {
  static const LieData g = LieData::sl2();
  return g;
}

void check_range(const std::string& name, long value, long lo, long hi) {
  if (value < lo || value > hi)
    throw InputError(name + " must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "], got " +
                     std::to_string(value));
}

std::string z_name(int i, int n, bool name_w) {
  return name_w && i == n ? "w" : "z" + std::to_string(i);
}

std::string face_string(const std::vector<int>& labels, int n) {
  std::string out;
  for (int l : labels) {
    if (!out.empty()) out += ", ";
    out += "u[" + perm_string(permutations(n).at(l)) + "]";
  }
  return out;
}

// --- cohomology -------------------------------------------------------------

Output cmd_cohomology(int K, int D) {
  check_range("K", K, 1, 24);
  check_range("D", D, 1, 8);
  CohomologyTable t = cohomology_truncated(K, D);
  Output o;
  std::vector<std::string> r0, r1;
  for (const auto& x : t.reps0) r0.push_back(local_string(x));
  for (const auto& x : t.reps1) r1.push_back(local_string(x));
  o.doc = {{"command", "cohomology"}, {"K", K}, {"D", D}, {"dim_c0", t.dim_c0}, {"dim_c1", t.dim_c1},
           {"rank_d", t.rank_d}, {"h0", {{"rank", t.h0}, {"representatives", r0}}},
           {"h1", {{"rank", t.h1}, {"representatives", r1}}}};
  std::ostringstream s;
  s << "truncated C{{z}}: z-powers in [-" << K << ", " << K << "], v-degree <= " << D << "\n";
  s << "dim C^0 = " << t.dim_c0 << ", dim C^1 = " << t.dim_c1 << ", rank d = " << t.rank_d << "\n";
  s << "degree  rank  representatives\n";
  auto row = [&](int deg, int rank, const std::vector<std::string>& reps) {
    s << deg << "       " << rank << "     ";
    for (size_t i = 0; i < reps.size(); ++i) s << (i ? ", " : "") << reps[i];
    s << "\n";
  };
  row(0, t.h0, r0);
  row(1, t.h1, r1);
  o.text = s.str();
  return o;
}

// --- statefield -------------------------------------------------------------

Output cmd_statefield(const std::string& a_text, const std::string& b_text, int K, const std::string& mode) {
  check_range("K", K, 1, 10);
  const LieData& g = sl2_data();
  LoopEngine eng(g);
  State a = parse_state(eng, a_text);
  State b = parse_state(eng, b_text);
  Output o;
  o.doc = Json::object();
  Json fields = Json::object();
  std::ostringstream s;
  s << "A = " << state_string(g, a) << "\nB = " << state_string(g, b) << "\n";
  bool ok = true;
  if (mode == "classical") {
    Field y = y_classical(eng, a, b, K);
    fields["classical"] = field_string(g, y);
    s << "Y(A; x) B = " << field_string(g, y) << "\n";
  } else {
    Field rec = y_rav_recursive(eng, a, b, K);
    bool boundary = field_boundary_ok(rec);
    fields["recursive"] = field_string(g, rec);
    s << "Y(A; x) B = " << field_string(g, rec) << "\n";
    s << "boundary conditions at u = 0, 1: " << (boundary ? "ok" : "FAILED") << "\n";
    ok = boundary;
    o.doc["boundary_ok"] = boundary;
    if (mode == "both") {
      Field ex = y_rav_explicit(eng, a, b, K);
      bool agree = ex == rec;
      fields["explicit"] = field_string(g, ex);
      s << "unshuffle formula: " << (agree ? "agrees" : "DIFFERS") << "\n";
      if (!agree) s << "  explicit = " << field_string(g, ex) << "\n";
      o.doc["agree"] = agree;
      ok = ok && agree;
    }
  }
  Json doc = {{"command", "statefield"}, {"mode", mode}, {"K", K}, {"A", state_string(g, a)},
              {"B", state_string(g, b)}, {"fields", fields}};
  doc.update(o.doc);
  doc["ok"] = ok;
  o.doc = doc;
  o.text = s.str();
  o.code = ok ? kExitOk : kExitVerifyFailed;
  return o;
}

// --- membership ---------------------------------------------------------------

Output cmd_membership(int N, const std::string& text) {
  check_range("N", N, 1, kMaxFullN);
  CForm w = parse_form(text, N);
  MembershipReport rep = in_A_N(w, N);
  Output o;
  Json viol = Json::array();
  std::ostringstream s;
  s << "form: " << form_string(w, N) << "\n";
  if (rep.member) s << "member of A_" << N << "\n";
  else s << "not in A_" << N << "\n";
  for (size_t k = 0; k < rep.violations.size(); ++k) {
    auto [i, j] = rep.violations[k];
    std::string diff = z_name(i, N, false) + " - " + z_name(j, N, false);
    std::vector<std::string> face;
    for (int l : rep.faces[k]) face.push_back("u[" + perm_string(permutations(N).at(l)) + "]");
    viol.push_back({{"pair", {i, j}}, {"face", face}, {"not_regular_in", diff}});
    s << "  not regular in " << diff << " on the face " << face_string(rep.faces[k], N) << " = 0\n";
  }
  o.doc = {{"command", "membership"}, {"N", N}, {"form", form_string(w, N)}, {"member", rep.member},
           {"violations", viol}};
  o.text = s.str();
  return o;
}

// --- expand -------------------------------------------------------------------

Json local_terms(const RavLocal& x) {
  Json terms = Json::array();
  for (const auto& [k, c] : x.coeffs()) terms.push_back({{"power", k}, {"coeff", cform_string(c)}});
  return terms;
}

Output cmd_expand(int N, const std::string& text, int site, int K) {
  check_range("N", N, 1, kMaxFullN - 1);
  check_range("s", site, 1, N);
  check_range("K", K, 0, 12);
  CForm w = parse_form(text, N + 1);
  MembershipReport rep = in_A_N(w, N + 1);
  if (!rep.member) {
    auto [i, j] = rep.violations.front();
    throw InputError("form is not in A_" + std::to_string(N + 1) + ": not regular in " + z_name(i, N + 1, true) +
                     " - " + z_name(j, N + 1, true) + " on the face " + face_string(rep.faces.front(), N + 1) +
                     " = 0");
  }
  RavLocal x = expand_at(w, site, N, K);
  LocalReport lr = check_rav_local(x, N);
  Output o;
  o.doc = {{"command", "expand"}, {"N", N}, {"s", site}, {"K", K}, {"form", form_string(w, N + 1, true)},
           {"series", rav_local_string(x, site)}, {"terms", local_terms(x)}, {"boundary_ok", lr.ok}};
  std::ostringstream s;
  s << "iota_{w -> z" << site << "}(" << form_string(w, N + 1, true) << ") =\n  " << rav_local_string(x, site) << "\n";
  s << "boundary conditions: " << (lr.ok ? "ok" : "FAILED: " + lr.reason) << "\n";
  o.text = s.str();
  o.code = lr.ok ? kExitOk : kExitVerifyFailed;
  return o;
}

// --- omega12-demo ---------------------------------------------------------------

Output cmd_omega12() {
  CForm om = omega12();
  bool closed = om.d().is_zero();
  bool member = in_A_N(om, 3).member;
  bool at_infinity = true;
  for (const auto& [key, c] : om.terms()) at_infinity = at_infinity && c.vanishes_at_infinity_in(2);
  Output o;
  std::ostringstream s;
  bool ok = closed && member && at_infinity;
  s << "Omega_12 = " << form_string(om, 3, true) << "\n";
  s << "d-closed: " << (closed ? "yes" : "no") << "\n";
  s << "in A_3: " << (member ? "yes" : "no") << "\n";
  s << "coefficients vanish as w -> infinity: " << (at_infinity ? "yes" : "no") << "\n";
  Json expansions = Json::array();
  for (int site = 1; site <= 2; ++site) {
    RavLocal e = expand_at(om, site, 2, 3);
    bool regular = !e.is_zero() && e.min_degree() >= 0;
    ok = ok && regular;
    expansions.push_back({{"site", site}, {"series", rav_local_string(e, site)}, {"no_negative_powers", regular}});
    s << "iota_{w -> z" << site << "} Omega_12 = " << rav_local_string(e, site) << "\n";
  }
  struct Pullback {
    int i, j;
    CForm expected;
    std::string name;
  };
  std::vector<Pullback> pbs = {{1, 2, u_perm({1, 2}), "u[12]"}, {1, 3, v_form(), "v"}, {2, 3, u_perm({2, 1}), "u[21]"}};
  Json pull = Json::array();
  for (const auto& p : pbs) {
    CForm got = p_pullback(1, v_ij(3, p.i, p.j), 2);
    bool eq = got == p.expected;
    ok = ok && eq;
    std::string lhs = "p*_{3->1}(v_" + std::to_string(p.i) + std::to_string(p.j) + ")";
    pull.push_back({{"lhs", lhs}, {"value", cform_string(got)}, {"expected", p.name}, {"equal", eq}});
    s << lhs << " = " << cform_string(got) << (eq ? "" : "  (expected " + p.name + ")") << "\n";
  }
  Json iota = Json::array();
  for (const auto& sigma : std::vector<std::vector<int>>{{1, 2}, {2, 1}}) {
    CForm img = iota_embed({1, 2}, u_perm(sigma), 3);
    bool in3 = in_A_N(img, 3).member;
    ok = ok && in3;
    std::string lhs = "iota_2(u[" + perm_string(sigma) + "])";
    iota.push_back({{"lhs", lhs}, {"value", form_string(img, 3)}, {"in_A_3", in3}});
    s << lhs << " = " << form_string(img, 3) << "\n";
  }
  CForm ker = kernel_element();
  bool killed = expand_at(ker, 1, 2, 4).is_zero() && expand_at(ker, 2, 2, 4).is_zero();
  ok = ok && killed;
  s << "kernel element " << form_string(ker, 3, true) << " expands to "
    << (killed ? "0 at both sites" : "a nonzero series") << "\n";
  o.doc = {{"command", "omega12-demo"}, {"omega12", form_string(om, 3, true)}, {"d_closed", closed},
           {"member", member}, {"vanishes_at_infinity", at_infinity}, {"expansions", expansions},
           {"pullbacks", pull}, {"iota_images", iota},
           {"kernel_element", {{"form", form_string(ker, 3, true)}, {"expands_to_zero", killed}}}, {"ok", ok}};
  o.text = s.str();
  o.code = ok ? kExitOk : kExitVerifyFailed;
  return o;
}

// --- site specifications ------------------------------------------------------

struct SiteInput {
  SiteSpec spec;
  int basis = 0;
  State state;  // vacuum sites
  std::string label;
};

struct SiteSpecFile {
  long K = -1;
  bool classical = false;
  std::vector<SiteInput> sites;
};

Json load_json(const std::string& spec) {
  std::string text = spec;
  if (!spec.empty() && spec.front() != '{') {
    std::ifstream in(spec);
    if (!in) throw InputError("cannot read site specification file '" + spec + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("site specification is not valid JSON: ") + e.what());
  }
}

template <class T>
T field_or(const Json& j, const char* key, T fallback) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception&) {
    throw InputError(std::string("site specification field '") + key + "' has the wrong type");
  }
}

SiteSpecFile parse_site_spec(LoopEngine& eng, const std::string& spec) {
  Json j = load_json(spec);
  if (!j.is_object()) throw InputError("site specification must be a JSON object");
  for (const auto& [key, val] : j.items())
    if (key != "K" && key != "classical" && key != "sites") throw InputError("unknown site specification field '" + key + "'");
  SiteSpecFile f;
  f.K = field_or<long>(j, "K", -1);
  f.classical = field_or<bool>(j, "classical", false);
  if (!j.contains("sites") || !j["sites"].is_array()) throw InputError("site specification needs a 'sites' array");
  const LieData& g = eng.lie();
  for (const auto& s : j["sites"]) {
    if (!s.is_object()) throw InputError("each site must be a JSON object");
    for (const auto& [key, val] : s.items())
      if (key != "kind" && key != "vector" && key != "parity" && key != "eps_v" && key != "state")
        throw InputError("unknown site field '" + key + "'");
    std::string kind = field_or<std::string>(s, "kind", "");
    int parity = field_or<int>(s, "parity", 0);
    int eps = field_or<int>(s, "eps_v", 0);
    check_range("parity", parity, 0, 1);
    check_range("eps_v", eps, 0, 1);
    SiteInput in;
    if (kind == "vacuum") {
      in.spec = SiteSpec::vacuum();
      in.state = parse_state(eng, field_or<std::string>(s, "state", "|0>"));
      in.label = "vacuum";
    } else if (kind == "trivial") {
      in.spec = SiteSpec::trivial(parity);
      in.label = "trivial";
    } else if (kind == "adjoint") {
      in.spec = SiteSpec::adjoint(g, parity);
      std::string v = field_or<std::string>(s, "vector", "");
      try {
        in.basis = g.index(v);
      } catch (const std::invalid_argument&) {
        throw SemanticError("unknown Lie basis name '" + v + "' in site specification");
      }
      in.label = "adjoint[" + v + "]";
    } else {
      throw InputError("site kind must be vacuum, trivial or adjoint, got '" + kind + "'");
    }
    in.spec.eps_v = eps;
    f.sites.push_back(std::move(in));
  }
  if (f.sites.empty()) throw InputError("site specification has no sites");
  check_range("number of sites", static_cast<long>(f.sites.size()), 1, kMaxFullN);
  return f;
}

TensorState build_tensor(const std::vector<SiteInput>& sites) {
  std::vector<std::pair<TensorKey, Rational>> acc{{{}, Rational(1)}};
  for (const auto& s : sites) {
    std::vector<std::pair<TensorKey, Rational>> next;
    for (const auto& [k, c] : acc) {
      if (s.spec.is_far()) {
        TensorKey nk = k;
        nk.push_back({s.basis, {}});
        next.emplace_back(nk, c);
      } else {
        for (const auto& [m, q] : s.state.terms()) {
          TensorKey nk = k;
          nk.push_back({0, m});
          next.emplace_back(nk, c * q);
        }
      }
    }
    acc = std::move(next);
  }
  TensorState st;
  for (const auto& [k, c] : acc) st.add_term(k, CForm(c));
  return st;
}

std::vector<SiteSpec> specs_of(const std::vector<SiteInput>& sites) {
  std::vector<SiteSpec> out;
  for (const auto& s : sites) out.push_back(s.spec);
  return out;
}

// --- coinvariant ---------------------------------------------------------------

Output cmd_coinvariant(const std::string& spec, int K_flag) {
  const LieData& g = sl2_data();
  LoopEngine eng(g);
  SiteSpecFile f = parse_site_spec(eng, spec);
  long K = K_flag >= 0 ? K_flag : (f.K >= 0 ? f.K : 4);
  check_range("K", K, 1, 8);
  int n = static_cast<int>(f.sites.size());
  Coinvariants ctx(eng, specs_of(f.sites), f.classical);
  TensorState st = build_tensor(f.sites);
  TensorState red = ctx.reduce(st);
  Output o;
  std::ostringstream s;
  s << "state: " << tensor_state_string(g, ctx, st) << "\n";
  s << "reduced: " << tensor_state_string(g, ctx, red) << "\n";
  Json doc = {{"command", "coinvariant"}, {"N", n}, {"K", K}, {"classical", f.classical},
              {"state", tensor_state_string(g, ctx, st)}, {"reduced", tensor_state_string(g, ctx, red)}};
  if (n >= 2 && !f.sites.back().spec.is_far()) {
    CoinvSeries ser = expand_coinvariant(red, n, K);
    std::vector<SiteSpec> rest(ctx.sites().begin(), ctx.sites().end() - 1);
    std::string shown = coinv_series_string(g, rest, ser);
    doc["expansion"] = shown;
    s << "expanded at z" << n << " -> z" << n - 1 << ": " << shown << "\n";
  } else {
    doc["expansion"] = nullptr;
  }
  o.doc = doc;
  o.text = s.str();
  return o;
}

// --- verify-theorem -------------------------------------------------------------

std::string case_label(const LieData& g, const TheoremCase& c, bool classical) {
  const auto& pool = classical ? classical_pool() : theorem_pool();
  std::string far = c.adjoint ? "adjoint[" + g.name(c.far_basis) + "]" : "trivial";
  return "A=" + pool.at(c.a % pool.size()).name + " B=" + pool.at(c.b % pool.size()).name + " far=" + far;
}

Output cmd_worked_example() {
  const LieData& g = sl2_data();
  LoopEngine eng(g);
  struct Variant {
    SiteSpec far;
    int basis;
    State b;
    std::string name;
  };
  State vac = State::vacuum(1);
  State fdv = parse_state(eng, "(lower f 1 (dv)) |0>");
  std::vector<Variant> vs = {{SiteSpec::trivial(), 0, vac, "far trivial, B = |0>"},
                             {SiteSpec::adjoint(g), kF, vac, "far adjoint[f], B = |0>"},
                             {SiteSpec::adjoint(g), kF, fdv, "far adjoint[f], B = " + state_string(g, fdv)}};
  Output o;
  std::ostringstream s;
  Json arr = Json::array();
  bool ok = true;
  s << "A = " << state_string(g, eng.apply_word(std::vector<LoopGen>{LoopGen::minus1(kE, 1, 0)})) << ", K = 5\n";
  for (const auto& v : vs) {
    WorkedExample ex = worked_example(eng, v.far, v.basis, kE, v.b, 5);
    std::vector<SiteSpec> rest(ex.sites.begin(), ex.sites.end() - 1);
    std::string display = field_string(g, ex.display);
    std::string lhs = coinv_series_string(g, rest, ex.lhs);
    std::string rhs = coinv_series_string(g, rest, ex.display_reduced);
    ok = ok && ex.ok();
    arr.push_back({{"variant", v.name}, {"display", display}, {"lhs", lhs}, {"display_reduced", rhs},
                   {"swap_matches", ex.swap_matches}, {"display_matches_y", ex.display_matches_y},
                   {"reduced_match", ex.reduced_match}, {"near_pullback_ok", ex.near_pullback_ok}, {"ok", ex.ok()}});
    s << "\n[" << v.name << "]\n";
    s << "two-sum display at z2: " << display << "\n";
    s << "reduced and expanded: " << lhs << "\n";
    s << "display reduced:      " << rhs << "\n";
    s << "swap " << (ex.swap_matches ? "ok" : "FAILED") << ", display = Y " << (ex.display_matches_y ? "ok" : "FAILED")
      << ", representatives " << (ex.reduced_match ? "equal" : "DIFFER") << ", p*_{3->2} precedence sum "
      << (ex.near_pullback_ok ? "ok" : "FAILED") << "\n";
  }
  o.doc = {{"command", "verify-theorem"}, {"mode", "worked-example"}, {"K", 5}, {"variants", arr}, {"ok", ok}};
  o.text = s.str();
  o.code = ok ? kExitOk : kExitVerifyFailed;
  return o;
}

Output cmd_theorem_cases(int count, std::uint64_t seed, int K, bool classical, bool serial) {
  check_range("cases", count, 1, 1000);
  check_range("K", K, 1, 8);
  const LieData& g = sl2_data();
  std::vector<TheoremCase> cases = theorem_cases(seed, count);
  std::vector<CaseResult> res = serial ? verify_batch_serial(cases, K, classical) : verify_batch(cases, K, classical);
  Output o;
  std::ostringstream s;
  Json arr = Json::array();
  int failed = 0;
  for (size_t i = 0; i < cases.size(); ++i) {
    const auto& c = cases[i];
    Json item = {{"index", i}, {"case", case_label(g, c, classical)}, {"lhs_terms", res[i].lhs_terms},
                 {"rhs_terms", res[i].rhs_terms}, {"equal", res[i].equal}};
    s << "case " << i << ": " << case_label(g, c, classical) << " terms " << res[i].lhs_terms << "/"
      << res[i].rhs_terms << " " << (res[i].equal ? "equal" : "DIFFER") << "\n";
    if (!res[i].equal) {
      ++failed;
      LoopEngine eng(g);
      const auto& pool = classical ? classical_pool() : theorem_pool();
      State a = pool_state(eng, pool.at(c.a % pool.size()));
      State b = pool_state(eng, pool.at(c.b % pool.size()));
      SiteSpec far = c.adjoint ? SiteSpec::adjoint(g) : SiteSpec::trivial();
      TheoremReport rep = classical ? classical_verify(eng, {far}, {c.far_basis}, a, b, K)
                                    : verify_theorem(eng, {far}, {c.far_basis}, a, b, K);
      std::vector<SiteSpec> rest{far, SiteSpec::vacuum()};
      item["lhs"] = coinv_series_string(g, rest, rep.lhs);
      item["rhs"] = coinv_series_string(g, rest, rep.rhs);
      s << "  lhs = " << item["lhs"].get<std::string>() << "\n  rhs = " << item["rhs"].get<std::string>() << "\n";
    }
    arr.push_back(item);
  }
  s << (cases.size() - failed) << "/" << cases.size() << " cases equal (seed " << seed << ", K = " << K << ")\n";
  o.doc = {{"command", "verify-theorem"}, {"mode", classical ? "classical-cases" : "cases"}, {"seed", seed},
           {"K", K}, {"cases", arr}, {"failed", failed}, {"ok", failed == 0}};
  o.text = s.str();
  o.code = failed == 0 ? kExitOk : kExitVerifyFailed;
  return o;
}

Output cmd_theorem_spec(const std::string& spec, int K_flag) {
  const LieData& g = sl2_data();
  LoopEngine eng(g);
  SiteSpecFile f = parse_site_spec(eng, spec);
  long K = K_flag >= 0 ? K_flag : (f.K >= 0 ? f.K : 4);
  check_range("K", K, 1, 8);
  int n = static_cast<int>(f.sites.size());
  if (n < 3) throw InputError("verify-theorem needs at least one far site followed by the B and A vacuum sites");
  std::vector<SiteSpec> far;
  std::vector<int> basis;
  for (int i = 0; i < n - 2; ++i) {
    if (!f.sites[i].spec.is_far()) throw InputError("sites 1..N-2 must be far (trivial or adjoint)");
    far.push_back(f.sites[i].spec);
    basis.push_back(f.sites[i].basis);
  }
  if (f.sites[n - 2].spec.is_far() || f.sites[n - 1].spec.is_far())
    throw InputError("the last two sites must be vacuum sites carrying B and A");
  const State& b = f.sites[n - 2].state;
  const State& a = f.sites[n - 1].state;
  TheoremReport rep = f.classical ? classical_verify(eng, far, basis, a, b, K) : verify_theorem(eng, far, basis, a, b, K);
  std::vector<SiteSpec> rest = far;
  rest.push_back(SiteSpec::vacuum());
  std::string lhs = coinv_series_string(g, rest, rep.lhs), rhs = coinv_series_string(g, rest, rep.rhs);
  Output o;
  o.doc = {{"command", "verify-theorem"}, {"mode", "spec"}, {"K", K}, {"A", state_string(g, a)},
           {"B", state_string(g, b)}, {"lhs", lhs}, {"rhs", rhs}, {"equal", rep.equal}, {"ok", rep.equal}};
  std::ostringstream s;
  s << "A = " << state_string(g, a) << "\nB = " << state_string(g, b) << "\n";
  s << "lhs = " << lhs << "\nrhs = " << rhs << "\n" << (rep.equal ? "equal" : "DIFFER") << "\n";
  o.text = s.str();
  o.code = rep.equal ? kExitOk : kExitVerifyFailed;
  return o;
}

// --- thom-sullivan ---------------------------------------------------------------

std::string ranks_string(const std::vector<int>& r) {
  std::string out;
  for (size_t i = 0; i < r.size(); ++i) out += (i ? "," : "") + std::to_string(r[i]);
  return out;
}

Output cmd_thom_sullivan(int K, int weight, int samples, std::uint64_t seed, bool csv) {
  check_range("K", K, 1, 8);
  check_range("weight", weight, 1, 3);
  check_range("samples", samples, 0, 500);
  std::vector<int> Ks;
  for (int k = 1; k <= K; ++k) Ks.push_back(k);
  std::vector<CoverRanks> rows = cover_ranks(Ks, weight);
  SemiCosimplicialCAlg cover = rav_cover(K);
  std::mt19937_64 rng(seed);
  int chain_ok = 0;
  for (int i = 0; i < samples; ++i) {
    ThElement x = th_random(cover, rng);
    if (integrate(cover, th_d(x)) == cech_d(cover, integrate(cover, x))) ++chain_ok;
  }
  bool ok = chain_ok == samples;
  Json arr = Json::array();
  std::ostringstream s;
  if (csv) s << "K,cech,th,local,agree\n";
  else s << "K  cech  th    local  agree\n";
  for (const auto& r : rows) {
    ok = ok && r.agree();
    arr.push_back({{"K", r.K}, {"cech", r.cech}, {"th", r.th}, {"local", r.local}, {"agree", r.agree()}});
    if (csv)
      s << r.K << ",\"" << ranks_string(r.cech) << "\",\"" << ranks_string(r.th) << "\",\"" << ranks_string(r.local)
        << "\"," << (r.agree() ? "true" : "false") << "\n";
    else
      s << r.K << "  " << ranks_string(r.cech) << "   " << ranks_string(r.th) << "   " << ranks_string(r.local)
        << "    " << (r.agree() ? "yes" : "NO") << "\n";
  }
  if (!csv && samples > 0)
    s << "integration commutes with d on " << chain_ok << "/" << samples << " random elements (K = " << K
      << ", seed " << seed << ")\n";
  Output o;
  o.doc = {{"command", "thom-sullivan"}, {"K", K}, {"weight", weight}, {"rows", arr},
           {"chain_map", {{"samples", samples}, {"seed", seed}, {"passed", chain_ok}}}, {"ok", ok}};
  o.text = s.str();
  o.code = ok ? kExitOk : kExitVerifyFailed;
  return o;
}

Json error_doc(const std::string& kind, const std::string& msg, int line = 0, int col = 0) {
  Json e = {{"kind", kind}, {"message", msg}};
  if (line > 0) {
    e["line"] = line;
    e["column"] = col;
  }
  return {{"error", e}};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact raviolo vertex-algebra computations", "raviolo-cli"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  app.add_flag("--json", json, "Machine-readable JSON output");

  std::function<Output()> action;

  int K = 3, D = 3;
  auto* coh = app.add_subcommand("cohomology", "Truncated cohomology of C{{z}}");
  coh->add_option("--K", K, "z-power window [-K, K]");
  coh->add_option("--D", D, "v-degree bound");
  coh->callback([&] { action = [&] { return cmd_cohomology(K, D); }; });

  std::string a_text, b_text, mode = "rav";
  int sfK = 4;
  auto* sf = app.add_subcommand("statefield", "Y(A; x) B");
  sf->add_option("--A", a_text, "State A")->required();
  sf->add_option("--B", b_text, "State B")->default_val("|0>");
  sf->add_option("--K", sfK, "Truncation below x^K");
  sf->add_option("--mode", mode, "rav, classical, or both (recursion and unshuffle formula compared)")
      ->check(CLI::IsMember({"rav", "classical", "both"}));
  sf->callback([&] { action = [&] { return cmd_statefield(a_text, b_text, sfK, mode); }; });

  int N = 2;
  std::string form;
  auto* mem = app.add_subcommand("membership", "Membership in A_N (forms over S_N, w = z_N)");
  mem->add_option("--N", N, "Number of points")->required();
  mem->add_option("--form", form, "Form")->required();
  mem->callback([&] { action = [&] { return cmd_membership(N, form); }; });

  int site = 1, exK = 4;
  auto* ex = app.add_subcommand("expand", "Expansion iota_{w -> z_s}: A_{N+1} -> A_N{{w - z_s}}");
  ex->add_option("--N", N, "Number of points before adding w")->required();
  ex->add_option("--form", form, "Form over S_{N+1}, w = z_{N+1}")->required();
  ex->add_option("--s", site, "Site")->required();
  ex->add_option("--K", exK, "Truncation below (w - z_s)^K");
  ex->callback([&] { action = [&] { return cmd_expand(N, form, site, exK); }; });

  auto* om = app.add_subcommand("omega12-demo", "The element Omega_12 and its expansions");
  om->callback([&] { action = [&] { return cmd_omega12(); }; });

  std::string spec;
  int cK = -1;
  auto* co = app.add_subcommand("coinvariant", "Reduce a coinvariant and expand it at the last site");
  co->add_option("--spec", spec, "Site specification: JSON text or a file name")->required();
  co->add_option("--K", cK, "Expansion precision (overrides K in the site file)");
  co->callback([&] { action = [&] { return cmd_coinvariant(spec, cK); }; });

  bool demo = false, classical = false, serial = false;
  int cases = 0, vK = -1;
  std::uint64_t seed = 2024;
  auto* vt = app.add_subcommand("verify-theorem", "Check [m (x) B (x) A] = (-1)^{|A||B|} [m (x) Y(A; x) B]");
  vt->add_flag("--demo-worked-example", demo, "Three-point worked example, K = 5");
  vt->add_option("--cases", cases, "Number of seeded random cases over the state pool");
  vt->add_option("--seed", seed, "Seed for --cases");
  vt->add_option("--K", vK, "Truncation");
  vt->add_option("--spec", spec, "Site specification: far sites, then B, then A");
  vt->add_flag("--classical", classical, "Classical generators and the classical state pool");
  vt->add_flag("--serial", serial, "Run cases on one thread");
  vt->callback([&] {
    int modes = int(demo) + int(cases > 0) + int(!spec.empty());
    if (modes != 1) throw CLI::ValidationError("verify-theorem", "give exactly one of --demo-worked-example, --cases, --spec");
    if (demo) action = [&] { return cmd_worked_example(); };
    else if (cases > 0) action = [&] { return cmd_theorem_cases(cases, seed, vK >= 0 ? vK : 4, classical, serial); };
    else action = [&] { return cmd_theorem_spec(spec, vK); };
  });

  int tsK = 6, weight = 2, samples = 20;
  bool csv = false;
  auto* ts = app.add_subcommand("thom-sullivan", "Cech and Thom-Sullivan cohomology of the raviolo cover");
  ts->add_option("--K", tsK, "Largest window K (rows 1..K)");
  ts->add_option("--weight", weight, "Weight truncation of the Thom-Sullivan complex");
  ts->add_option("--samples", samples, "Random elements for the chain-map check");
  ts->add_option("--seed", seed, "Seed for the chain-map check");
  ts->add_flag("--csv", csv, "CSV table");
  ts->callback([&] { action = [&] { return cmd_thom_sullivan(tsK, weight, samples, seed, csv); }; });

  auto emit_error = [&](const std::string& kind, const std::string& msg, int line = 0, int col = 0) {
    if (json) out << error_doc(kind, msg, line, col).dump(2) << "\n";
    else err << "error: " << msg << "\n";
    return int(kExitInputError);
  };

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    return emit_error("usage", e.what());
  }

  try {
    Output o = action();
    if (json) out << o.doc.dump(2) << "\n";
    else out << o.text;
    return o.code;
  } catch (const ParseError& e) {
    return emit_error(e.kind() == ParseError::Kind::Syntax ? "syntax" : "semantic", e.what(), e.line(), e.col());
  } catch (const SemanticError& e) {
    return emit_error("semantic", e.what());
  } catch (const InputError& e) {
    return emit_error("input", e.what());
  } catch (const std::invalid_argument& e) {
    return emit_error("input", e.what());
  } catch (const std::out_of_range& e) {
    return emit_error("input", e.what());
  } catch (const std::domain_error& e) {
    return emit_error("input", e.what());
  }
}

}  // namespace rav
