#include "raviolo/local/local.hpp"

#include "raviolo/exact/linalg.hpp"

#include <stdexcept>

namespace rav {

LocalRav local_term(int k, const VForm& f) { return LocalRav::monomial(k, f); }

bool boundary_check(const LocalRav& x) {
  for (const auto& [k, f] : x.coeffs()) {
    if (k >= 0) break;
    if (!is_zero(v_boundary(f, 0)) || !is_zero(v_boundary(f, 1))) return false;
  }
  return true;
}

std::pair<LocalRav, LocalRav> split_pm(const LocalRav& x) {
  if (!boundary_check(x)) throw std::invalid_argument("split_pm: boundary conditions fail");
  LocalRav minus(x.precision()), plus(x.precision());
  for (const auto& [k, f] : x.coeffs()) (k < 0 ? minus : plus).add_term(k, f);
  return {minus, plus};
}

bool is_minus(const LocalRav& x) { return boundary_check(x) && (x.is_zero() || x.coeffs().rbegin()->first < 0); }

LocalRav local_d(const LocalRav& x) {
  return x.map_coeffs([](const VForm& f) { return f.d(); });
}

namespace {

VForm integrate_0_v(const std::vector<Rational>& F) {
  VForm out;
  for (size_t j = 0; j < F.size(); ++j) out += v_power(static_cast<int>(j) + 1).scaled(F[j] / Rational(j + 1));
  return out;
}

Rational integrate_0_1(const std::vector<Rational>& F) {
  Rational s = 0;
  for (size_t j = 0; j < F.size(); ++j) s += F[j] / Rational(j + 1);
  return s;
}

}  // namespace

LocalRav homotopy_h(const LocalRav& x) {
  return x.map_coeffs([](const VForm& f) { return integrate_0_v(vparts(f).f1); });
}

LocalRav project_pi0(const LocalRav& x) {
  return x.map_coeffs([](const VForm& f) { return VForm(v_boundary(f, 0)); });
}

LocalRav homotopy_k(const LocalRav& x) {
  return x.map_coeffs([](const VForm& f) {
    auto F = vparts(f).f1;
    return integrate_0_v(F) - v_power(1).scaled(integrate_0_1(F));
  });
}

LocalRav project_pi_prime(const LocalRav& x) {
  return x.map_coeffs([](const VForm& f) { return v_power_dv(0).scaled(integrate_0_1(vparts(f).f1)); });
}

CohomologyTable cohomology_truncated(int K, int D) {
  if (K < 1 || D < 1) throw std::invalid_argument("cohomology_truncated needs K >= 1 and D >= 1");
  CohomologyTable t;
  t.K = K;
  t.D = D;
  std::vector<LocalRav> c0, c1;
  for (int k = -K; k <= K; ++k) {
    if (k >= 0) {
      for (int j = 0; j <= D; ++j) c0.push_back(local_term(k, v_power(j)));
    } else {
      for (int m = 0; m <= D - 2; ++m) c0.push_back(local_term(k, e0(m)));
    }
    for (int j = 0; j <= D - 1; ++j) c1.push_back(local_term(k, v_power_dv(j)));
  }
  // Coordinates of a 1-form in the c1 basis.
  auto coords1 = [&](const LocalRav& x) {
    RVector out(c1.size(), Rational(0));
    for (const auto& [k, f] : x.coeffs()) {
      auto F = vparts(f).f1;
      for (size_t j = 0; j < F.size(); ++j) {
        if (static_cast<int>(j) > D - 1) throw std::logic_error("differential leaves the truncation");
        out[(k + K) * D + j] += F[j];
      }
    }
    return out;
  };
  const int n0 = static_cast<int>(c0.size()), n1 = static_cast<int>(c1.size());
  RMatrix dm(n1, RVector(n0, Rational(0)));
  for (int c = 0; c < n0; ++c) {
    RVector col = coords1(local_d(c0[c]));
    for (int r = 0; r < n1; ++r) dm[r][c] = col[r];
  }
  t.dim_c0 = n0;
  t.dim_c1 = n1;
  t.rank_d = rank(dm, n0);
  t.h0 = n0 - t.rank_d;
  t.h1 = n1 - t.rank_d;
  for (const auto& vec : kernel(dm, n0)) {
    LocalRav x;
    for (int c = 0; c < n0; ++c)
      if (!is_zero(vec[c])) x += c0[c].map_coeffs([&](const VForm& f) { return f.scaled(vec[c]); });
    t.reps0.push_back(x);
  }
  // Complement of the image: image columns first, then the c1 basis; new pivots among the latter.
  RMatrix aug(n1, RVector(n0 + n1, Rational(0)));
  for (int r = 0; r < n1; ++r) {
    for (int c = 0; c < n0; ++c) aug[r][c] = dm[r][c];
    aug[r][n0 + r] = 1;
  }
  for (int p : pivot_columns(aug, n0 + n1))
    if (p >= n0) t.reps1.push_back(c1[p - n0]);
  return t;
}

std::string local_string(const LocalRav& x) {
  return x.to_string("z", [](const VForm& f) { return vform_string(f); });
}

}  // namespace rav
