#include "nilgraded/mcdsl.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <optional>
#include <sstream>

#include "nilgraded/errors.hpp"

namespace nilgraded {

void MCSystem::add(std::size_t k, std::size_t a, std::size_t b, const Scalar& c) {
  if (k >= dim || a >= dim || b >= dim) throw InputError("form index out of range");
  if (a == b) throw InputError("w" + std::to_string(a + 1) + "^w" + std::to_string(a + 1) + " vanishes");
  if (sgn(c) == 0) return;
  Scalar value = a < b ? c : Scalar(-c);
  value.canonicalize();
  if (a > b) std::swap(a, b);
  auto& terms = forms[k];
  auto it = std::lower_bound(terms.begin(), terms.end(), std::pair{a, b},
                             [](const WedgeTerm& t, const std::pair<std::size_t, std::size_t>& key) {
                               return std::pair{t.a, t.b} < key;
                             });
  if (it != terms.end() && it->a == a && it->b == b) {
    it->coeff += value;
    if (sgn(it->coeff) == 0) terms.erase(it);
  } else {
    terms.insert(it, WedgeTerm{a, b, value});
  }
}

namespace {

enum class Tok { Int, Form, D, N, Eq, Plus, Minus, Slash, Wedge, Sep, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1, i = 0;
  auto push = [&](Tok k, std::string t, std::size_t c) { out.push_back({k, std::move(t), line, c}); };
  while (i < src.size()) {
    const char ch = src[i];
    if (ch == '#') {
      while (i < src.size() && src[i] != '\n') ++i, ++col;
      continue;
    }
    if (ch == '\n') {
      push(Tok::Sep, "newline", col);
      ++i, ++line, col = 1;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i, ++col;
      continue;
    }
    const std::size_t start = col;
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::string digits;
      while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) digits += src[i++], ++col;
      push(Tok::Int, digits, start);
      continue;
    }
    if (ch == 'w') {
      ++i, ++col;
      std::string digits;
      while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) digits += src[i++], ++col;
      if (digits.empty()) throw SyntaxError("expected an index after 'w'", line, start);
      push(Tok::Form, digits, start);
      continue;
    }
    Tok kind;
    switch (ch) {
      case 'd': kind = Tok::D; break;
      case 'n': kind = Tok::N; break;
      case '=': kind = Tok::Eq; break;
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '/': kind = Tok::Slash; break;
      case '^': kind = Tok::Wedge; break;
      case ';': kind = Tok::Sep; break;
      default:
        throw SyntaxError(std::string("unexpected character '") + ch + "'", line, start);
    }
    push(kind, std::string(1, ch), start);
    ++i, ++col;
  }
  out.push_back({Tok::End, "end of input", line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(lex(src)) {}

  MCSystem run() {
    skip_separators();
    expect(Tok::N, "expected header 'n = <dim>'");
    expect(Tok::Eq, "expected '=' in header");
    const Token& dim_tok = expect(Tok::Int, "expected the dimension");
    const std::size_t n = to_index(dim_tok, "dimension");
    if (n == 0) throw SyntaxError("dimension must be at least 1", dim_tok.line, dim_tok.column);
    MCSystem sys(n);
    std::vector<bool> declared(n, false);
    while (true) {
      const bool separated = skip_separators();
      if (peek().kind == Tok::End) break;
      if (!separated) fail("expected ';' or newline between declarations");
      declaration(sys, declared);
    }
    return sys;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw SyntaxError(what + " (found " + describe(peek()) + ")", peek().line, peek().column);
  }

  static std::string describe(const Token& t) {
    return t.kind == Tok::End ? t.text : "'" + (t.kind == Tok::Form ? "w" + t.text : t.text) + "'";
  }

  const Token& expect(Tok kind, const std::string& what) {
    if (peek().kind != kind) fail(what);
    return next();
  }

  bool skip_separators() {
    bool any = false;
    while (peek().kind == Tok::Sep) next(), any = true;
    return any;
  }

  static std::size_t to_index(const Token& t, const std::string& what) {
    if (t.text.size() > 9) throw SyntaxError(what + " is too large", t.line, t.column);
    return static_cast<std::size_t>(std::stoul(t.text));
  }

  std::size_t form_index(const Token& t, std::size_t n) const {
    const std::size_t idx = to_index(t, "form index");
    if (idx < 1 || idx > n)
      throw SyntaxError("form index w" + t.text + " outside 1.." + std::to_string(n), t.line, t.column);
    return idx - 1;
  }

  void declaration(MCSystem& sys, std::vector<bool>& declared) {
    expect(Tok::D, "expected a declaration 'd w<k> = ...'");
    const Token& target_tok = expect(Tok::Form, "expected a form 'w<k>' after 'd'");
    const std::size_t target = form_index(target_tok, sys.dim);
    if (declared[target])
      throw SyntaxError("duplicate declaration of d w" + target_tok.text, target_tok.line, target_tok.column);
    declared[target] = true;
    expect(Tok::Eq, "expected '='");
    if (peek().kind == Tok::Int && peek().text.find_first_not_of('0') == std::string::npos &&
        toks_[pos_ + 1].kind != Tok::Slash && toks_[pos_ + 1].kind != Tok::Form) {
      next();
      return;
    }
    Scalar sign = 1;
    if (peek().kind == Tok::Plus || peek().kind == Tok::Minus) sign = next().kind == Tok::Minus ? -1 : 1;
    term(sys, target, sign);
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      sign = next().kind == Tok::Minus ? -1 : 1;
      term(sys, target, sign);
    }
  }

  void term(MCSystem& sys, std::size_t target, const Scalar& sign) {
    Scalar coeff = 1;
    if (peek().kind == Tok::Int) {
      const Token& first = next();
      std::string lit = first.text;
      if (peek().kind == Tok::Slash) {
        next();
        lit += "/" + expect(Tok::Int, "expected a denominator after '/'").text;
      }
      try {
        coeff = parse_scalar(lit);
      } catch (const InputError& e) {
        throw SyntaxError(e.what(), first.line, first.column);
      }
    }
    const Token& lhs = expect(Tok::Form, "expected a form 'w<a>'");
    const std::size_t a = form_index(lhs, sys.dim);
    expect(Tok::Wedge, "expected '^'");
    const Token& rhs = expect(Tok::Form, "expected a form 'w<b>' after '^'");
    const std::size_t b = form_index(rhs, sys.dim);
    if (a == b) throw SyntaxError("w" + lhs.text + "^w" + rhs.text + " repeats a form", lhs.line, lhs.column);
    sys.add(target, a, b, sign * coeff);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

MCSystem parse_mc_system(std::string_view text) { return Parser(text).run(); }

LieAlgebra to_algebra(const MCSystem& system) {
  StructureTensor t(system.dim);
  for (std::size_t k = 0; k < system.dim; ++k)
    for (const auto& term : system.forms[k]) t.add(term.a, term.b, k, -term.coeff);
  return LieAlgebra(std::move(t));
}

MCSystem to_mc_system(const LieAlgebra& g) {
  MCSystem sys(g.dim());
  for (const auto& [idx, c] : g.tensor().entries()) sys.add(idx.k, idx.i, idx.j, -c);
  return sys;
}

LieAlgebra parse_mc(std::string_view text) { return to_algebra(parse_mc_system(text)); }

std::string render_mc(const MCSystem& system) {
  std::ostringstream out;
  out << "n=" << system.dim << ';';
  bool first_decl = true;
  for (std::size_t k = 0; k < system.dim; ++k) {
    const auto& terms = system.forms[k];
    if (terms.empty()) continue;
    out << (first_decl ? " " : "; ") << "d w" << k + 1 << " =";
    first_decl = false;
    for (std::size_t t = 0; t < terms.size(); ++t) {
      const Scalar& c = terms[t].coeff;
      if (t == 0) {
        out << ' ' << to_string(c);
      } else {
        out << (sgn(c) < 0 ? " - " : " + ") << to_string(Scalar(abs(c)));
      }
      out << " w" << terms[t].a + 1 << "^w" << terms[t].b + 1;
    }
  }
  return out.str();
}

std::string render_mc(const LieAlgebra& g) { return render_mc(to_mc_system(g)); }

std::vector<ClosureDefect> closure_defects(const MCSystem& system) {
  using Triple = std::array<std::size_t, 3>;
  std::vector<ClosureDefect> defects;
  for (std::size_t k = 0; k < system.dim; ++k) {
    std::map<Triple, Scalar> acc;
    auto add = [&acc](std::size_t x, std::size_t y, std::size_t z, const Scalar& c) {
      if (x == y || y == z || x == z) return;
      Triple t{x, y, z};
      int sign = 1;
      for (int pass = 0; pass < 2; ++pass)
        for (int i = 0; i < 2; ++i)
          if (t[i] > t[i + 1]) std::swap(t[i], t[i + 1]), sign = -sign;
      acc[t] += sign * c;
    };
    // d(w_a ^ w_b) = dw_a ^ w_b - w_a ^ dw_b
    for (const auto& term : system.forms[k]) {
      for (const auto& inner : system.forms[term.a]) add(inner.a, inner.b, term.b, term.coeff * inner.coeff);
      for (const auto& inner : system.forms[term.b]) add(term.a, inner.a, inner.b, -term.coeff * inner.coeff);
    }
    ClosureDefect d{k, {}};
    for (const auto& [t, c] : acc)
      if (sgn(c) != 0) d.terms.emplace_back(t, c);
    if (!d.terms.empty()) defects.push_back(std::move(d));
  }
  return defects;
}

}  // namespace nilgraded
