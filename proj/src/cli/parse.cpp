#include "raviolo/cli/parse.hpp"

#include <cctype>
#include <optional>

namespace rav {

ParseError::ParseError(Kind kind, int line, int col, const std::string& msg)
    : std::runtime_error(std::string(kind == Kind::Syntax ? "syntax error" : "semantic error") + " at " +
                         std::to_string(line) + ":" + std::to_string(col) + ": " + msg),
      kind_(kind),
      line_(line),
      col_(col) {}

namespace {

enum class Tok { Num, Ident, Sym, End };

struct Token {
  Tok kind;
  std::string text;
  int line, col;
};

std::vector<Token> lex(const std::string& s) {
  std::vector<Token> out;
  int line = 1, col = 1;
  size_t i = 0;
  auto advance = [&](size_t k) {
    for (size_t j = 0; j < k; ++j) {
      if (s[i + j] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    i += k;
  };
  while (i < s.size()) {
    const unsigned char c = s[i];
    if (std::isspace(c)) {
      advance(1);
      continue;
    }
    size_t j = i;
    Tok kind;
    if (std::isdigit(c)) {
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      kind = Tok::Num;
    } else if (std::isalpha(c)) {
      while (j < s.size() && std::isalnum(static_cast<unsigned char>(s[j]))) ++j;
      kind = Tok::Ident;
    } else if (std::string("+-*/^()[]|>").find(static_cast<char>(c)) != std::string::npos) {
      j = i + 1;
      kind = Tok::Sym;
    } else {
      throw ParseError(ParseError::Kind::Syntax, line, col, std::string("unexpected character '") + s[i] + "'");
    }
    out.push_back({kind, s.substr(i, j - i), line, col});
    advance(j - i);
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

class Parser {
 public:
  Parser(const std::string& text, int n) : toks_(lex(text)), n_(n) {}

  const Token& peek(size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
  bool at_sym(const std::string& s, size_t k = 0) const { return peek(k).kind == Tok::Sym && peek(k).text == s; }
  bool at_ident(const std::string& s, size_t k = 0) const { return peek(k).kind == Tok::Ident && peek(k).text == s; }
  Token take() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  [[noreturn]] void syntax(const Token& t, const std::string& msg) const {
    throw ParseError(ParseError::Kind::Syntax, t.line, t.col, msg);
  }
  [[noreturn]] void semantic(const Token& t, const std::string& msg) const {
    throw ParseError(ParseError::Kind::Semantic, t.line, t.col, msg);
  }
  void expect(const std::string& s) {
    if (!at_sym(s)) syntax(peek(), "expected '" + s + "'" + (peek().kind == Tok::End ? " before end of input" : ""));
    take();
  }
  long number(const Token& t) const {
    if (t.text.size() > 9) semantic(t, "number too large");
    return std::stol(t.text);
  }
  void expect_end() {
    if (peek().kind != Tok::End) syntax(peek(), "unexpected '" + peek().text + "'");
  }

  // expr := ['-'] term (('+'|'-') term)*
  CForm expr() {
    CForm out;
    bool neg = false;
    if (at_sym("-")) {
      take();
      neg = true;
    }
    out = term();
    if (neg) out = -out;
    while (at_sym("+") || at_sym("-")) {
      bool minus = take().text == "-";
      CForm t = term();
      out = minus ? out - t : out + t;
    }
    return out;
  }

  bool starts_atom() const {
    const Token& t = peek();
    return t.kind == Tok::Num || t.kind == Tok::Ident || (t.kind == Tok::Sym && t.text == "(");
  }

  // term := factor (('*' | '/' | '^' | juxtaposition) factor)*
  CForm term() {
    CForm out = factor();
    for (;;) {
      if (at_sym("*") || at_sym("^")) {
        take();
        out = out * factor();
      } else if (at_sym("/")) {
        Token t = take();
        CForm d = factor();
        out = out * invert(d, t);
      } else if (starts_atom()) {
        out = out * factor();
      } else {
        return out;
      }
    }
  }

  // factor := ['-'] atom ['^' ['-'] integer]
  CForm factor() {
    if (at_sym("-")) {
      take();
      return -factor();
    }
    Token start = peek();
    CForm a = atom();
    if (at_sym("^") && (peek(1).kind == Tok::Num || (at_sym("-", 1) && peek(2).kind == Tok::Num))) {
      take();
      bool neg = false;
      if (at_sym("-")) {
        take();
        neg = true;
      }
      long e = number(take());
      if (e > 64) semantic(start, "exponent too large");
      CForm base = neg ? invert(a, start) : a;
      CForm r(1);
      for (long k = 0; k < e; ++k) r = r * base;
      return r;
    }
    return a;
  }

  CForm atom() {
    Token t = take();
    if (t.kind == Tok::Num) return CForm(RatFrac(Rational(number(t))));
    if (t.kind == Tok::Sym && t.text == "(") {
      CForm e = expr();
      expect(")");
      return e;
    }
    if (t.kind != Tok::Ident) syntax(t, t.kind == Tok::End ? "unexpected end of input" : "unexpected '" + t.text + "'");
    const std::string& s = t.text;
    if ((s == "u" || s == "du") && at_sym("[")) {
      take();
      Token lab = take();
      if (lab.kind != Tok::Num) syntax(lab, "expected a permutation such as [213]");
      expect("]");
      std::vector<int> sigma;
      for (char ch : lab.text) sigma.push_back(ch - '0');
      if (static_cast<int>(sigma.size()) != n_) semantic(lab, "permutation of length " + std::to_string(n_) + " expected");
      std::vector<int> sorted = sigma;
      std::sort(sorted.begin(), sorted.end());
      for (int k = 0; k < n_; ++k)
        if (sorted[k] != k + 1) semantic(lab, "not a permutation of 1.." + std::to_string(n_));
      return s == "u" ? u_perm(sigma) : du_perm(sigma);
    }
    if (s == "u") return simplex_u<RatFrac>(kFamU, 0);
    if (s == "du") return simplex_du<RatFrac>(kFamU, 0);
    if (s == "v") return simplex_u<RatFrac>(kFamV, 0);
    if (s == "dv") return simplex_du<RatFrac>(kFamV, 0);
    if (s == "w") {
      if (n_ < 1) semantic(t, "w needs at least one point");
      return CForm(RatFrac::var(n_ - 1));
    }
    if (s.size() > 1 && std::isdigit(static_cast<unsigned char>(s[1]))) {
      const std::string tail = s.substr(1);
      if (s[0] == 'z') {
        int k = std::stoi(tail);
        if (k < 1 || k > n_) semantic(t, "variable " + s + " out of range 1.." + std::to_string(n_));
        return CForm(RatFrac::var(k - 1));
      }
      if (s[0] == 'v') return lift(e0(std::stoi(tail)));
    }
    if (s.size() > 2 && s.rfind("dv", 0) == 0 && std::isdigit(static_cast<unsigned char>(s[2])))
      return lift(e1(std::stoi(s.substr(2))));
    semantic(t, "unknown symbol '" + s + "'");
  }

  static CForm lift(const VForm& f) { return f.map_coeffs([](const Rational& q) { return RatFrac(q); }); }

  CForm invert(const CForm& d, const Token& at) const {
    if (!d.is_scalar() || d.is_zero()) semantic(at, "division by a form or by zero");
    const RatFrac r = d.scalar_part();
    MultiPoly p = r.numerator();
    RatFrac inv(Rational(1));
    const int nv = std::max(p.nvars(), 1);
    for (int i = 0; i < nv; ++i)
      for (int j = i + 1; j < nv; ++j)
        while (auto q = p.divide_by_difference(i, j)) {
          p = *q;
          inv = inv * RatFrac::inv_difference(i, j);
        }
    if (!p.is_constant()) semantic(at, "denominator is not a product of differences z_i - z_j");
    inv = inv * RatFrac(1 / p.constant_term());
    for (const auto& [ij, e] : r.denominator()) inv = inv * RatFrac::difference(ij.first, ij.second, e);
    return CForm(inv);
  }

  // gen := '(' ('lower' | 'raise') name integer '(' form ')' ')' | '(' 'mode' name ['-'] integer ')'
  GenCombo generator(const LieData& g) {
    expect("(");
    Token kw = take();
    Token name = take();
    if (name.kind != Tok::Ident) syntax(name, "expected a Lie algebra basis name");
    int lie = -1;
    for (int i = 0; i < g.dim(); ++i)
      if (g.name(i) == name.text) lie = i;
    if (lie < 0) semantic(name, "unknown Lie algebra basis element '" + name.text + "'");
    bool neg = false;
    if (at_sym("-")) {
      take();
      neg = true;
    }
    Token num = take();
    if (num.kind != Tok::Num) syntax(num, "expected an integer");
    long k = number(num);
    if (neg) k = -k;
    GenCombo out;
    if (kw.text == "mode") {
      out.emplace_back(LoopGen::classical(lie, static_cast<int>(k)), Rational(1));
    } else if (kw.text == "lower" || kw.text == "raise") {
      if (kw.text == "lower" && k < 1) semantic(num, "pole order of a lowering generator must be >= 1");
      if (kw.text == "raise" && k < 0) semantic(num, "power of a raising generator must be >= 0");
      Token fstart = peek();
      expect("(");
      const int saved = n_;
      n_ = 0;
      CForm f = expr();
      n_ = saved;
      expect(")");
      VForm vf;
      for (const auto& [key, c] : f.terms()) {
        for (const auto& e : key.even)
          if (gen_family(e.first) != kFamV) semantic(fstart, "generator forms may only involve v and dv");
        for (Gen x : key.odd)
          if (gen_family(x) != kFamV) semantic(fstart, "generator forms may only involve v and dv");
        if (!c.is_polynomial() || !c.numerator().is_constant()) semantic(fstart, "generator forms need constant coefficients");
        vf.add_term(key, c.numerator().constant_term());
      }
      try {
        out = gens_from_form(lie, kw.text == "lower" ? -static_cast<int>(k) : static_cast<int>(k), vf);
      } catch (const std::invalid_argument& e) {
        semantic(fstart, std::string("bad form for a lowering generator: ") + e.what());
      }
    } else {
      syntax(kw, "expected lower, raise or mode");
    }
    expect(")");
    return out;
  }

  bool at_generator() const {
    return at_sym("(") && (at_ident("lower", 1) || at_ident("raise", 1) || at_ident("mode", 1));
  }

  Rational rational_literal() {
    bool neg = false;
    if (at_sym("-")) {
      take();
      neg = true;
    }
    Token a = take();
    if (a.kind != Tok::Num) syntax(a, "expected a number");
    Rational r(number(a));
    if (at_sym("/")) {
      take();
      Token b = take();
      if (b.kind != Tok::Num) syntax(b, "expected a denominator");
      if (number(b) == 0) semantic(b, "division by zero");
      r /= Rational(number(b));
    }
    return neg ? -r : r;
  }

  // state := '0' | sterm (('+' | '-') sterm)* ; sterm := [rational | '(' rational ')'] gen* '|0>'
  State state(LoopEngine& eng) {
    if (peek().kind == Tok::Num && peek().text == "0" && peek(1).kind == Tok::End) {
      take();
      return State();
    }
    State out;
    bool minus = false;
    if (at_sym("-")) {
      take();
      minus = true;
    }
    for (;;) {
      Rational c = 1;
      if (at_sym("(") && !at_generator()) {
        take();
        c = rational_literal();
        expect(")");
      } else if (peek().kind == Tok::Num) {
        c = rational_literal();
      }
      std::vector<GenCombo> word;
      while (at_generator()) word.push_back(generator(eng.lie()));
      expect("|");
      Token z = take();
      if (z.kind != Tok::Num || z.text != "0") syntax(z, "expected |0>");
      expect(">");
      State t = eng.apply_word(word).scaled(minus ? -c : c);
      out += t;
      if (at_sym("+") || at_sym("-")) {
        minus = take().text == "-";
        continue;
      }
      return out;
    }
  }

 private:
  std::vector<Token> toks_;
  size_t pos_ = 0;
  int n_;
};

}  // namespace

CForm parse_form(const std::string& text, int n) {
  if (n < 0 || n > kMaxPermN) throw std::invalid_argument("number of points must be in 0.." + std::to_string(kMaxPermN));
  Parser p(text, n);
  CForm out = p.expr();
  p.expect_end();
  return out;
}

std::string form_string(const CForm& w, int n, bool name_w) { return cform_string(w, name_w ? n - 1 : -1); }

State parse_state(LoopEngine& eng, const std::string& text) {
  Parser p(text, 0);
  State out = p.state(eng);
  p.expect_end();
  return out;
}

std::string state_string(const LieData& g, const State& s) {
  return s.to_string(g, [](const Rational& q) { return q.get_str(); });
}

}  // namespace rav
