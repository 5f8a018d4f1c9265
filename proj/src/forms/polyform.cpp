#include "raviolo/forms/polyform.hpp"

namespace rav {

int multiply_keys(const FormKey& a, const FormKey& b, FormKey& out) {
  out.even.clear();
  out.odd.clear();
  size_t i = 0, j = 0;
  while (i < a.even.size() || j < b.even.size()) {
    if (j == b.even.size() || (i < a.even.size() && a.even[i].first < b.even[j].first)) {
      out.even.push_back(a.even[i++]);
    } else if (i == a.even.size() || b.even[j].first < a.even[i].first) {
      out.even.push_back(b.even[j++]);
    } else {
      out.even.emplace_back(a.even[i].first, a.even[i].second + b.even[j].second);
      ++i;
      ++j;
    }
  }
  // Merge the odd words counting inversions: each b-element passing remaining a-elements.
  int inversions = 0;
  i = j = 0;
  while (i < a.odd.size() || j < b.odd.size()) {
    if (j == b.odd.size() || (i < a.odd.size() && a.odd[i] < b.odd[j])) {
      out.odd.push_back(a.odd[i++]);
    } else if (i == a.odd.size() || b.odd[j] < a.odd[i]) {
      inversions += static_cast<int>(a.odd.size() - i);
      out.odd.push_back(b.odd[j++]);
    } else {
      return 0;
    }
  }
  return inversions % 2 ? -1 : 1;
}

std::string key_string(const FormKey& k) {
  std::string s;
  for (const auto& [g, e] : k.even) {
    if (!s.empty()) s += "*";
    s += gen_name(g);
    if (e > 1) s += "^" + std::to_string(e);
  }
  std::string w;
  for (Gen g : k.odd) {
    if (!w.empty()) w += "^";
    w += "d" + gen_name(g);
  }
  if (!w.empty()) s += (s.empty() ? "" : "*") + w;
  return s;
}

}  // namespace rav
