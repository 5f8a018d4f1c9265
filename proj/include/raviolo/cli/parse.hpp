#pragma once

#include "raviolo/config/config.hpp"
#include "raviolo/loop/vacuum.hpp"

#include <stdexcept>
#include <string>

namespace rav {

class ParseError : public std::runtime_error {
 public:
  enum class Kind { Syntax, Semantic };
  ParseError(Kind kind, int line, int col, const std::string& msg);

  Kind kind() const { return kind_; }
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  Kind kind_;
  int line_, col_;
};

// Forms over S_n (u[...], du[...]), v, dv and u, du (base-change parameter) with coefficients in z1..zn,
// `w` naming z_n. Operators + - * / ^ (power with an integer exponent, wedge otherwise); juxtaposition
// multiplies. Division only by nonzero scalars whose numerator factors into differences z_i - z_j.
CForm parse_form(const std::string& text, int n);
// Canonical text, z_n printed as w when name_w is set; parse_form inverts it.
std::string form_string(const CForm& w, int n, bool name_w = false);

// Sums of [coefficient] word |0> where a word is a list of (lower a k (form)), (raise a k (form))
// or (mode a k); shorthand forms v<m> = v^{m+1}(1-v) and dv<m> = v^m dv.
State parse_state(LoopEngine& eng, const std::string& text);
std::string state_string(const LieData& g, const State& s);

}  // namespace rav
