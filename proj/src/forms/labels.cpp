#include "raviolo/forms/labels.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace rav {

int family_size(int family) {
  if (family >= 1 && family <= kMaxPermN) return static_cast<int>(permutations(family).size());
  if (family == kFamV || family == kFamU) return 2;
  if (family >= kFamSimplexBase) return family - kFamSimplexBase + 1;
  throw std::invalid_argument("unknown generator family");
}

const std::vector<std::vector<int>>& permutations(int n) {
  static const std::array<std::vector<std::vector<int>>, kMaxPermN + 1> table = [] {
    std::array<std::vector<std::vector<int>>, kMaxPermN + 1> t;
    for (int k = 1; k <= kMaxPermN; ++k) {
      std::vector<int> s(k);
      for (int i = 0; i < k; ++i) s[i] = i + 1;
      do t[k].push_back(s);
      while (std::next_permutation(s.begin(), s.end()));
    }
    return t;
  }();
  if (n < 1 || n > kMaxPermN) throw std::out_of_range("permutation family size out of supported range");
  return table[n];
}

int perm_index(const std::vector<int>& seq) {
  const auto& all = permutations(static_cast<int>(seq.size()));
  auto it = std::lower_bound(all.begin(), all.end(), seq);
  if (it == all.end() || *it != seq) throw std::invalid_argument("not a permutation: " + perm_string(seq));
  return static_cast<int>(it - all.begin());
}

bool precedes(const std::vector<int>& seq, int i, int j) {
  for (int x : seq) {
    if (x == i) return true;
    if (x == j) return false;
  }
  throw std::invalid_argument("precedes: indices not in order");
}

std::vector<int> labels_with_precedence(int n, int i, int j) {
  std::vector<int> out;
  const auto& all = permutations(n);
  for (size_t k = 0; k < all.size(); ++k)
    if (precedes(all[k], i, j)) out.push_back(static_cast<int>(k));
  return out;
}

std::string perm_string(const std::vector<int>& seq) {
  std::string s;
  for (int x : seq) s += std::to_string(x);
  return s;
}

std::string gen_name(Gen g) {
  int f = gen_family(g), l = gen_label(g);
  if (f >= 1 && f <= kMaxPermN) return "u[" + perm_string(permutations(f).at(l)) + "]";
  if (f == kFamV) return l == 0 ? "v" : "(1-v)";
  if (f == kFamU) return l == 0 ? "u" : "(1-u)";
  return "t" + std::to_string(l);
}

}  // namespace rav
