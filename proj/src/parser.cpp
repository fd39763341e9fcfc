#include "algqe/parser.hpp"

#include <cctype>
#include <string>
#include <vector>

#include "algqe/errors.hpp"

namespace algqe {

namespace {

enum class Tok {
  Ident, Int, Rat, LParen, RParen, Dot, Plus, Minus, Star,
  Caret, Eq, Le, Lt, Ge, Gt, Ne, Bang, AndAnd, OrOr, Arrow, End
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t col;
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1, i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    const std::size_t l = line, k = col;
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Tok::Ident, std::string(s.substr(i, j - i)), l, k});
      advance(j - i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      Tok kind = Tok::Int;
      if (j + 1 < s.size() && s[j] == '/' && std::isdigit(static_cast<unsigned char>(s[j + 1]))) {
        ++j;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        kind = Tok::Rat;
      }
      out.push_back({kind, std::string(s.substr(i, j - i)), l, k});
      advance(j - i);
      continue;
    }
    auto two = [&](std::string_view p) { return s.substr(i, 2) == p; };
    Tok kind;
    std::size_t len = 1;
    if (two("<=")) { kind = Tok::Le; len = 2; }
    else if (two(">=")) { kind = Tok::Ge; len = 2; }
    else if (two("!=")) { kind = Tok::Ne; len = 2; }
    else if (two("&&")) { kind = Tok::AndAnd; len = 2; }
    else if (two("||")) { kind = Tok::OrOr; len = 2; }
    else if (two("->")) { kind = Tok::Arrow; len = 2; }
    else {
      switch (c) {
        case '(': kind = Tok::LParen; break;
        case ')': kind = Tok::RParen; break;
        case '.': kind = Tok::Dot; break;
        case '+': kind = Tok::Plus; break;
        case '-': kind = Tok::Minus; break;
        case '*': kind = Tok::Star; break;
        case '^': kind = Tok::Caret; break;
        case '=': kind = Tok::Eq; break;
        case '<': kind = Tok::Lt; break;
        case '>': kind = Tok::Gt; break;
        case '!': kind = Tok::Bang; break;
        default: throw ParseError(l, k, std::string("unexpected character '") + c + "'");
      }
    }
    out.push_back({kind, std::string(s.substr(i, len)), l, k});
    advance(len);
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

bool is_keyword(const std::string& s) {
  return s == "exists" || s == "forall" || s == "conj" || s == "true" || s == "false";
}

struct AlgLanguage {
  using Term = AlgTerm;
  using Atom = AlgAtom;
  static constexpr bool kHasConj = true;

  static Term variable(const std::string& n) { return AlgTerm::var(n); }
  static Term integer(const std::string& digits) { return AlgTerm::literal(Integer(digits)); }
  static Term add(Term a, Term b) { return AlgTerm::add(std::move(a), std::move(b)); }
  static Term sub(Term a, Term b) { return AlgTerm::sub(std::move(a), std::move(b)); }
  static Term mul(Term a, Term b) { return AlgTerm::mul(std::move(a), std::move(b)); }
  static Term neg(Term a) { return AlgTerm::neg(std::move(a)); }
  static Term conj(Term a) { return AlgTerm::conj(std::move(a)); }

  static bool accepts(Tok rel) { return rel == Tok::Eq || rel == Tok::Le || rel == Tok::Ne; }
  static Formula<Atom> atom(Tok rel, Term a, Term b) {
    if (rel == Tok::Le) return le(std::move(a), std::move(b));
    auto e = eq(std::move(a), std::move(b));
    return rel == Tok::Ne ? AlgFormula::negation(e) : e;
  }
};

struct RealLanguage {
  using Term = Poly;
  using Atom = RealAtom;
  static constexpr bool kHasConj = false;

  static Term variable(const std::string& n) { return Poly(Var(n)); }
  static Term integer(const std::string& digits) { return Poly(Rational::parse(digits)); }
  static Term add(Term a, const Term& b) { return a + b; }
  static Term sub(Term a, const Term& b) { return a - b; }
  static Term mul(const Term& a, const Term& b) { return a * b; }
  static Term neg(const Term& a) { return -a; }
  static Term conj(Term a) { return a; }

  static bool accepts(Tok rel) { return rel != Tok::End; }
  static Formula<Atom> atom(Tok rel, const Term& a, const Term& b) {
    switch (rel) {
      case Tok::Eq: return real_atom(a - b, Rel::Eq);
      case Tok::Le: return real_atom(a - b, Rel::Le);
      case Tok::Lt: return real_atom(a - b, Rel::Lt);
      case Tok::Ne: return real_atom(a - b, Rel::Ne);
      case Tok::Ge: return real_atom(b - a, Rel::Le);
      default: return real_atom(b - a, Rel::Lt);
    }
  }
};

bool is_rel(Tok t) {
  return t == Tok::Eq || t == Tok::Le || t == Tok::Lt || t == Tok::Ge || t == Tok::Gt || t == Tok::Ne;
}

template <class L>
class Parser {
 public:
  using Term = typename L::Term;
  using F = Formula<typename L::Atom>;

  explicit Parser(std::string_view text) : toks_(lex(text)) {}

  F formula_to_end() {
    F f = implication();
    expect_end();
    return f;
  }

  Term term_to_end() {
    Term t = additive();
    expect_end();
    return t;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }
  [[noreturn]] void fail(const Token& t, const std::string& what) const {
    throw ParseError(t.line, t.col, what + (t.kind == Tok::End ? " at end of input" : " near '" + t.text + "'"));
  }
  void expect(Tok k, const char* what) {
    if (!accept(k)) fail(peek(), std::string("expected ") + what);
  }
  void expect_end() {
    if (peek().kind != Tok::End) fail(peek(), "unexpected trailing input");
  }

  F implication() {
    F lhs = disjunction();
    if (accept(Tok::Arrow)) return F::implies(lhs, implication());
    return lhs;
  }

  F disjunction() {
    F f = conjunction();
    while (accept(Tok::OrOr)) f = F::disj(f, conjunction());
    return f;
  }

  F conjunction() {
    F f = negation();
    while (accept(Tok::AndAnd)) f = F::conj(f, negation());
    return f;
  }

  F negation() {
    if (accept(Tok::Bang)) return F::negation(negation());
    return primary();
  }

  F primary() {
    const Token& t = peek();
    if (t.kind == Tok::Ident && (t.text == "exists" || t.text == "forall")) {
      next();
      const Token& v = next();
      if (v.kind != Tok::Ident || is_keyword(v.text)) fail(v, "expected variable after quantifier");
      expect(Tok::Dot, "'.'");
      F body = implication();
      return t.text == "exists" ? F::exists(v.text, body) : F::forall(v.text, body);
    }
    if (t.kind == Tok::Ident && t.text == "true") {
      next();
      return F::truth();
    }
    if (t.kind == Tok::Ident && t.text == "false") {
      next();
      return F::falsity();
    }
    if (t.kind == Tok::LParen) {
      // A parenthesis opens either a term of an atom or a sub-formula.
      const std::size_t save = pos_;
      try {
        return atom();
      } catch (const UnknownSymbolError&) {
        throw;
      } catch (const ParseError&) {
        pos_ = save;
      }
      next();
      F f = implication();
      expect(Tok::RParen, "')'");
      return f;
    }
    return atom();
  }

  F atom() {
    Term a = additive();
    const Token& r = peek();
    if (!is_rel(r.kind)) fail(r, "expected comparison");
    if (!L::accepts(r.kind))
      throw UnknownSymbolError(r.line, r.col, "relation '" + r.text + "' is not in the algebra language");
    next();
    Term b = additive();
    return L::atom(r.kind, std::move(a), std::move(b));
  }

  Term additive() {
    Term t = multiplicative();
    for (;;) {
      if (accept(Tok::Plus)) t = L::add(std::move(t), multiplicative());
      else if (accept(Tok::Minus)) t = L::sub(std::move(t), multiplicative());
      else return t;
    }
  }

  Term multiplicative() {
    Term t = unary();
    while (accept(Tok::Star)) t = L::mul(std::move(t), unary());
    return t;
  }

  Term unary() {
    if (accept(Tok::Minus)) return L::neg(unary());
    return power();
  }

  Term power() {
    Term t = atom_term();
    const Token& caret = peek();
    if (caret.kind != Tok::Caret) return t;
    if constexpr (L::kHasConj) {
      throw UnknownSymbolError(caret.line, caret.col, "'^' is not in the algebra language");
    } else {
      next();
      const Token& e = next();
      if (e.kind != Tok::Int || e.text.size() > 6) fail(e, "expected small integer exponent");
      return t.pow(static_cast<unsigned>(std::stoul(e.text)));
    }
  }

  Term atom_term() {
    const Token& t = next();
    switch (t.kind) {
      case Tok::Int: return L::integer(t.text);
      case Tok::Rat:
        if constexpr (L::kHasConj) {
          throw UnknownSymbolError(t.line, t.col, "division is not in the algebra language");
        } else {
          return L::integer(t.text);
        }
      case Tok::LParen: {
        Term inner = additive();
        expect(Tok::RParen, "')'");
        return inner;
      }
      case Tok::Ident:
        if (t.text == "conj") {
          if (!L::kHasConj)
            throw UnknownSymbolError(t.line, t.col, "conj is not in the base-field language");
          expect(Tok::LParen, "'(' after conj");
          Term inner = additive();
          expect(Tok::RParen, "')'");
          return L::conj(std::move(inner));
        }
        if (is_keyword(t.text)) fail(t, "unexpected keyword");
        return L::variable(t.text);
      default: fail(t, "expected term");
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

AlgFormula parse_alg_formula(std::string_view text) { return Parser<AlgLanguage>(text).formula_to_end(); }
AlgTerm parse_alg_term(std::string_view text) { return Parser<AlgLanguage>(text).term_to_end(); }
RealFormula parse_real_formula(std::string_view text) { return Parser<RealLanguage>(text).formula_to_end(); }
Poly parse_poly(std::string_view text) { return Parser<RealLanguage>(text).term_to_end(); }

}  // namespace algqe
