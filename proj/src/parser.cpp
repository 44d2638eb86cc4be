#include "catmod/parser.hpp"

#include <cctype>
#include <optional>

#include "catmod/errors.hpp"

namespace catmod {

namespace {

struct Token {
  enum class Kind { Ident, LParen, RParen, Comma, Colon, Dot, Eq, Not, And, Or, Implies, Iff, End };
  Kind kind;
  std::string text;
  size_t pos;
};

std::vector<Token> lex(const std::string& s) {
  std::vector<Token> out;
  size_t i = 0;
  auto push = [&](Token::Kind k, std::string t, size_t p) { out.push_back({k, std::move(t), p}); };
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i;
      while (j < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_' || s[j] == '\''))
        ++j;
      push(Token::Kind::Ident, s.substr(i, j - i), i);
      i = j;
      continue;
    }
    switch (c) {
      case '(': push(Token::Kind::LParen, "(", i); ++i; break;
      case ')': push(Token::Kind::RParen, ")", i); ++i; break;
      case ',': push(Token::Kind::Comma, ",", i); ++i; break;
      case ':': push(Token::Kind::Colon, ":", i); ++i; break;
      case '.': push(Token::Kind::Dot, ".", i); ++i; break;
      case '=': push(Token::Kind::Eq, "=", i); ++i; break;
      case '~': push(Token::Kind::Not, "~", i); ++i; break;
      case '&': push(Token::Kind::And, "&", i); ++i; break;
      case '|': push(Token::Kind::Or, "|", i); ++i; break;
      case '-':
        if (i + 1 < s.size() && s[i + 1] == '>') {
          push(Token::Kind::Implies, "->", i);
          i += 2;
          break;
        }
        fail("SyntaxError", "at position " + std::to_string(i) + ": expected '->'");
      case '<':
        if (i + 2 < s.size() && s[i + 1] == '-' && s[i + 2] == '>') {
          push(Token::Kind::Iff, "<->", i);
          i += 3;
          break;
        }
        fail("SyntaxError", "at position " + std::to_string(i) + ": expected '<->'");
      default:
        fail("SyntaxError",
             "at position " + std::to_string(i) + ": unexpected character '" + std::string(1, c) + "'");
    }
  }
  push(Token::Kind::End, "", s.size());
  return out;
}

class Parser {
public:
  Parser(const std::string& text, const Signature& sig, const ParseOptions& opts)
      : sig_(sig), opts_(opts), toks_(lex(text)) {
    infix_comp_ = false;
    auto it = sig.functions.find("comp");
    if (it != sig.functions.end() && it->second.args.size() == 2) infix_comp_ = true;
    var_sorts_ = opts.free_var_sorts;
    for (const auto& [v, s] : var_sorts_)
      if (!sig_.has_sort(s)) fail("SortError", "free variable " + v + " ascribed undeclared sort " + s);
  }

  Formula run() {
    Formula f = formula();
    expect(Token::Kind::End, "end of input");
    return f;
  }

private:
  const Signature& sig_;
  const ParseOptions& opts_;
  std::vector<Token> toks_;
  size_t at_ = 0;
  bool infix_comp_ = false;
  std::map<std::string, std::string> var_sorts_;  // bound + free

  const Token& peek() const { return toks_[at_]; }
  Token take() { return toks_[at_++]; }

  [[noreturn]] void syntax(const std::string& expected) {
    const Token& t = peek();
    fail("SyntaxError", "at position " + std::to_string(t.pos) + ": expected " + expected +
                            (t.text.empty() ? "" : ", found '" + t.text + "'"));
  }

  void expect(Token::Kind k, const std::string& what) {
    if (peek().kind != k) syntax(what);
    take();
  }

  // ---- terms -------------------------------------------------------------

  // Returns the term and its sort. expected may be empty (no constraint).
  std::pair<Term, std::string> term(const std::string& expected) {
    auto [t, s] = primary_term(infix_comp_ ? std::string() : expected);
    while (infix_comp_ && peek().kind == Token::Kind::Ident && peek().text == "o") {
      take();
      const auto& prof = sig_.functions.at("comp");
      if (s != prof.args[0])
        fail("SortError", "left operand of 'o' has sort " + s + ", expected " + prof.args[0]);
      auto [rhs, rs] = primary_term(prof.args[1]);
      (void)rs;
      t = Term::app("comp", {std::move(t), std::move(rhs)});
      s = prof.result;
    }
    if (!expected.empty() && s != expected)
      fail("SortError", "term " + print_term(t, sig_) + " has sort " + s + ", expected " + expected);
    return {std::move(t), std::move(s)};
  }

  std::pair<Term, std::string> primary_term(const std::string& expected) {
    if (peek().kind == Token::Kind::LParen) {
      take();
      auto r = term(expected);
      expect(Token::Kind::RParen, "')'");
      return r;
    }
    if (peek().kind != Token::Kind::Ident) syntax("a term");
    Token id = take();
    if (auto it = sig_.constants.find(id.text); it != sig_.constants.end()) {
      check_expected(id.text, it->second, expected);
      return {Term::constant(id.text), it->second};
    }
    if (auto it = sig_.functions.find(id.text); it != sig_.functions.end()) {
      const auto& prof = it->second;
      expect(Token::Kind::LParen, "'(' after function " + id.text);
      std::vector<Term> args;
      for (size_t k = 0; k < prof.args.size(); ++k) {
        if (k) expect(Token::Kind::Comma, "','");
        args.push_back(term(prof.args[k]).first);
      }
      if (peek().kind == Token::Kind::Comma)
        fail("SortError", "function " + id.text + " applied to too many arguments");
      expect(Token::Kind::RParen, "')'");
      check_expected(id.text, prof.result, expected);
      return {Term::app(id.text, std::move(args)), prof.result};
    }
    if (sig_.relations.count(id.text))
      fail("SortError", "relation symbol " + id.text + " used in term position");
    // A variable. Sort from binding/declaration, else inferred from context.
    auto it = var_sorts_.find(id.text);
    if (it != var_sorts_.end()) {
      check_expected(id.text, it->second, expected);
      return {Term::var(id.text), it->second};
    }
    if (expected.empty())
      fail("SortError", "cannot infer sort of variable " + id.text + " (quantify it or supply a sort)");
    var_sorts_[id.text] = expected;
    return {Term::var(id.text), expected};
  }

  void check_expected(const std::string& who, const std::string& got, const std::string& expected) {
    if (!expected.empty() && got != expected)
      fail("SortError", who + " has sort " + got + ", expected " + expected);
  }

  // ---- formulas ----------------------------------------------------------

  Formula formula() { return iff_level(); }

  Formula iff_level() {
    Formula f = impl_level();
    while (peek().kind == Token::Kind::Iff) {
      take();
      f = Formula::iff(std::move(f), impl_level());
    }
    return f;
  }

  Formula impl_level() {
    Formula f = or_level();
    if (peek().kind == Token::Kind::Implies) {
      take();
      return Formula::implies(std::move(f), impl_level());
    }
    return f;
  }

  Formula or_level() {
    Formula f = and_level();
    while (peek().kind == Token::Kind::Or) {
      take();
      f = Formula::disj(std::move(f), and_level());
    }
    return f;
  }

  Formula and_level() {
    Formula f = unary();
    while (peek().kind == Token::Kind::And) {
      take();
      f = Formula::conj(std::move(f), unary());
    }
    return f;
  }

  Formula unary() {
    if (peek().kind == Token::Kind::Not) {
      take();
      return Formula::neg(unary());
    }
    if (peek().kind == Token::Kind::Ident && (peek().text == "forall" || peek().text == "exists")) {
      bool uni = peek().text == "forall";
      take();
      if (peek().kind != Token::Kind::Ident) syntax("a variable name");
      Token v = take();
      if (sig_.has_symbol(v.text))
        fail("SortError", "quantified variable " + v.text + " collides with a signature symbol");
      expect(Token::Kind::Colon, "':' with an explicit sort");
      if (peek().kind != Token::Kind::Ident) syntax("a sort name");
      Token s = take();
      if (!sig_.has_sort(s.text)) fail("SortError", "undeclared sort " + s.text);
      expect(Token::Kind::Dot, "'.'");
      auto shadowed = var_sorts_.find(v.text);
      std::optional<std::string> saved;
      if (shadowed != var_sorts_.end()) saved = shadowed->second;
      var_sorts_[v.text] = s.text;
      Formula body = formula();
      if (saved)
        var_sorts_[v.text] = *saved;
      else
        var_sorts_.erase(v.text);
      return Formula::quant(uni ? Formula::Kind::Forall : Formula::Kind::Exists, v.text, s.text,
                            std::move(body));
    }
    return primary();
  }

  Formula primary() {
    // "(" opens either a formula or the left term of an equality; resolved by
    // a bounded backtrack over the term alternative.
    if (peek().kind == Token::Kind::LParen) {
      size_t save = at_;
      try {
        auto [lhs, s] = term("");
        if (peek().kind == Token::Kind::Eq) {
          take();
          Formula f = Formula::eq(std::move(lhs), term(s).first);
          if (!opts_.allow_equality) fail("EqualityForbidden", "equality atom in a homotopic formula");
          return f;
        }
      } catch (const Error& e) {
        if (e.code() == "EqualityForbidden") throw;
      }
      at_ = save;
      take();
      Formula f = formula();
      expect(Token::Kind::RParen, "')'");
      return f;
    }
    if (peek().kind != Token::Kind::Ident) syntax("a formula");
    // Relation atom?
    if (auto it = sig_.relations.find(peek().text); it != sig_.relations.end()) {
      Token id = take();
      const auto& profile = it->second;
      std::vector<Term> args;
      if (!profile.empty() || peek().kind == Token::Kind::LParen) {
        expect(Token::Kind::LParen, "'(' after relation " + id.text);
        for (size_t k = 0; k < profile.size(); ++k) {
          if (k) expect(Token::Kind::Comma, "','");
          args.push_back(term(profile[k]).first);
        }
        if (peek().kind == Token::Kind::Comma)
          fail("SortError", "relation " + id.text + " applied to too many arguments");
        expect(Token::Kind::RParen, "')'");
      }
      return Formula::atom(id.text, std::move(args));
    }
    // Otherwise an equality atom starting with a term.
    auto [lhs, s] = term("");
    expect(Token::Kind::Eq, "'='");
    Formula f = Formula::eq(std::move(lhs), term(s).first);
    if (!opts_.allow_equality) fail("EqualityForbidden", "equality atom in a homotopic formula");
    return f;
  }
};

}  // namespace

Formula parse_formula(const std::string& text, const Signature& sig, const ParseOptions& opts) {
  return Parser(text, sig, opts).run();
}

}  // namespace catmod
