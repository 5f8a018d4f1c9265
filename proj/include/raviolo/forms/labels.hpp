#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rav {

// A form generator u_l is identified by (family, label); du_l shares the id.
using Gen = std::uint16_t;

inline constexpr int kMaxPermN = 5;
inline constexpr int kFamV = 16;  // Delta^1 with labels {v, 1-v}
inline constexpr int kFamU = 17;  // Delta^1 with labels {u, 1-u}
inline constexpr int kFamSimplexBase = 32;  // Delta^n with labels t_0..t_n

inline Gen make_gen(int family, int label) { return static_cast<Gen>((family << 8) | label); }
inline int gen_family(Gen g) { return g >> 8; }
inline int gen_label(Gen g) { return g & 0xff; }

inline int fam_perm(int n) { return n; }
inline int fam_simplex(int n) { return kFamSimplexBase + n; }

// Number of labels of a family; the last one is the eliminated generator.
int family_size(int family);

// Total orders on [1,n] in one-line notation, lexicographic order.
const std::vector<std::vector<int>>& permutations(int n);
int perm_index(const std::vector<int>& seq);
// True iff i comes before j in the order `seq`.
bool precedes(const std::vector<int>& seq, int i, int j);
// Labels sigma of S_n with i preceding j.
std::vector<int> labels_with_precedence(int n, int i, int j);

std::string gen_name(Gen g);
std::string perm_string(const std::vector<int>& seq);

}  // namespace rav
