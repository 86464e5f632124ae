#include "pga/parser.hpp"

#include <cctype>
#include <cstdint>
#include <string>
#include <vector>

namespace pga {

namespace {

enum class Tok {
  Ident,
  Nat,
  Decimal,
  KwSkip,
  KwIf,
  KwElse,
  KwObserve,
  KwTrue,
  KwBernoulli,
  KwGeometric,
  Assign,  // :=
  Semi,
  LBrace,
  RBrace,
  LParen,
  RParen,
  OrOr,
  AndAnd,
  Bang,
  Eq,
  Ne,
  Lt,
  Le,
  Gt,
  Ge,
  Plus,
  Slash,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

std::string describe(const Token& t) {
  if (t.kind == Tok::End) return "end of input";
  return "'" + t.text + "'";
}

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> tokens;
    while (true) {
      skip_space_and_comments();
      if (pos_ >= src_.size()) break;
      tokens.push_back(next_token());
    }
    tokens.push_back(Token{Tok::End, "", line_, column_});
    return tokens;
  }

 private:
  void skip_space_and_comments() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else {
        break;
      }
    }
  }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  [[noreturn]] void fail(const std::string& found) {
    throw SyntaxError(line_, column_, found, {"a token"});
  }

  Token next_token() {
    int line = line_, column = column_;
    char c = src_[pos_];

    auto make = [&](Tok kind, std::string text) {
      return Token{kind, std::move(text), line, column};
    };
    auto take = [&](std::size_t count) {
      std::string text(src_.substr(pos_, count));
      for (std::size_t i = 0; i < count; ++i) advance();
      return text;
    };
    auto peek2 = [&]() -> char {
      return pos_ + 1 < src_.size() ? src_[pos_ + 1] : '\0';
    };

    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t end = pos_;
      while (end < src_.size() && std::isdigit(static_cast<unsigned char>(src_[end]))) ++end;
      bool decimal = false;
      if (end < src_.size() && src_[end] == '.' && end + 1 < src_.size() &&
          std::isdigit(static_cast<unsigned char>(src_[end + 1]))) {
        decimal = true;
        ++end;
        while (end < src_.size() && std::isdigit(static_cast<unsigned char>(src_[end]))) ++end;
      }
      return make(decimal ? Tok::Decimal : Tok::Nat, take(end - pos_));
    }

    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t end = pos_;
      while (end < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[end])) || src_[end] == '_'))
        ++end;
      std::string word = take(end - pos_);
      if (word == "skip") return make(Tok::KwSkip, word);
      if (word == "if") return make(Tok::KwIf, word);
      if (word == "else") return make(Tok::KwElse, word);
      if (word == "observe") return make(Tok::KwObserve, word);
      if (word == "true") return make(Tok::KwTrue, word);
      if (word == "bernoulli") return make(Tok::KwBernoulli, word);
      if (word == "geometric") return make(Tok::KwGeometric, word);
      return make(Tok::Ident, word);
    }

    switch (c) {
      case ':':
        if (peek2() == '=') return make(Tok::Assign, take(2));
        fail("':'");
      case ';': return make(Tok::Semi, take(1));
      case '{': return make(Tok::LBrace, take(1));
      case '}': return make(Tok::RBrace, take(1));
      case '(': return make(Tok::LParen, take(1));
      case ')': return make(Tok::RParen, take(1));
      case '|':
        if (peek2() == '|') return make(Tok::OrOr, take(2));
        fail("'|'");
      case '&':
        if (peek2() == '&') return make(Tok::AndAnd, take(2));
        fail("'&'");
      case '!':
        if (peek2() == '=') return make(Tok::Ne, take(2));
        return make(Tok::Bang, take(1));
      case '=': return make(Tok::Eq, take(1));
      case '<':
        if (peek2() == '=') return make(Tok::Le, take(2));
        return make(Tok::Lt, take(1));
      case '>':
        if (peek2() == '=') return make(Tok::Ge, take(2));
        return make(Tok::Gt, take(1));
      case '+': return make(Tok::Plus, take(1));
      case '/': return make(Tok::Slash, take(1));
      default: fail("'" + std::string(1, c) + "'");
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Program parse_top() {
    Program p = parse_program();
    expect(Tok::End, {"';'", "end of input"});
    return p;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& advance() { return tokens_[pos_++]; }
  bool at(Tok kind) const { return peek().kind == kind; }

  bool accept(Tok kind) {
    if (!at(kind)) return false;
    ++pos_;
    return true;
  }

  const Token& expect(Tok kind, std::vector<std::string> expected) {
    if (!at(kind)) throw SyntaxError(peek().line, peek().column, describe(peek()), std::move(expected));
    return advance();
  }

  std::uint64_t parse_nat(const Token& tok) {
    try {
      return std::stoull(tok.text);
    } catch (const std::out_of_range&) {
      throw SemanticError(tok.line, tok.column, "constant too large: " + tok.text);
    }
  }

  Program parse_program() {
    Program p;
    p.stmts.push_back(parse_stmt());
    while (accept(Tok::Semi)) {
      if (at(Tok::End) || at(Tok::RBrace)) break;  // trailing separator
      p.stmts.push_back(parse_stmt());
    }
    return p;
  }

  Stmt parse_stmt() {
    if (accept(Tok::KwSkip)) return Stmt{StmtSkip{}};
    if (at(Tok::Ident)) {
      const Token& name = advance();
      expect(Tok::Assign, {"':='"});
      return Stmt{StmtAssign{VarId(name.text), parse_rhs()}};
    }
    if (accept(Tok::KwIf)) {
      expect(Tok::LParen, {"'('"});
      Guard g = parse_guard();
      expect(Tok::RParen, {"')'"});
      Program then_branch = parse_block();
      expect(Tok::KwElse, {"'else'"});
      Program else_branch = parse_block();
      return Stmt{StmtIfElse{std::move(g), std::move(then_branch), std::move(else_branch)}};
    }
    if (accept(Tok::KwObserve)) {
      expect(Tok::LParen, {"'('"});
      Guard g = parse_guard();
      expect(Tok::RParen, {"')'"});
      return Stmt{StmtObserve{std::move(g)}};
    }
    throw SyntaxError(peek().line, peek().column, describe(peek()),
                      {"'skip'", "an identifier", "'if'", "'observe'"});
  }

  Program parse_block() {
    expect(Tok::LBrace, {"'{'"});
    Program p = parse_program();
    expect(Tok::RBrace, {"'}'"});
    return p;
  }

  Rhs parse_rhs() {
    if (at(Tok::Nat)) {
      const Token& tok = advance();
      return RhsConst{parse_nat(tok)};
    }
    if (at(Tok::Ident)) {
      const Token& name = advance();
      if (accept(Tok::Plus)) {
        const Token& inc = expect(Tok::Nat, {"a natural number"});
        return RhsVarPlus{VarId(name.text), parse_nat(inc)};
      }
      return RhsVar{VarId(name.text)};
    }
    if (accept(Tok::KwBernoulli)) {
      expect(Tok::LParen, {"'('"});
      auto [p, tok] = parse_prob();
      expect(Tok::RParen, {"')'"});
      if (p.is_negative() || p > Rational(1))
        throw SemanticError(tok.line, tok.column,
                            "bernoulli parameter must be in [0, 1], got " + p.to_string());
      return RhsBernoulli{std::move(p)};
    }
    if (accept(Tok::KwGeometric)) {
      expect(Tok::LParen, {"'('"});
      auto [p, tok] = parse_prob();
      expect(Tok::RParen, {"')'"});
      if (p.is_negative() || p >= Rational(1))
        throw SemanticError(tok.line, tok.column,
                            "geometric parameter must be in [0, 1), got " + p.to_string());
      return RhsGeometric{std::move(p)};
    }
    throw SyntaxError(peek().line, peek().column, describe(peek()),
                      {"a natural number", "an identifier", "'bernoulli'", "'geometric'"});
  }

  std::pair<Rational, Token> parse_prob() {
    if (at(Tok::Nat)) {
      const Token& num = advance();
      if (accept(Tok::Slash)) {
        const Token& den = expect(Tok::Nat, {"a natural number"});
        std::uint64_t d = parse_nat(den);
        if (d == 0)
          throw SemanticError(den.line, den.column, "zero denominator in probability");
        return {Rational::parse(num.text + "/" + den.text), num};
      }
      return {Rational::parse(num.text), num};
    }
    if (at(Tok::Decimal)) {
      const Token& tok = advance();
      return {Rational::parse(tok.text), tok};
    }
    throw SyntaxError(peek().line, peek().column, describe(peek()),
                      {"a probability ('p/q' or a decimal)"});
  }

  Guard parse_guard() {
    Guard g = parse_conj();
    while (accept(Tok::OrOr)) g = Guard::disjunction(std::move(g), parse_conj());
    return g;
  }

  Guard parse_conj() {
    Guard g = parse_atom();
    while (accept(Tok::AndAnd)) g = Guard::conjunction(std::move(g), parse_atom());
    return g;
  }

  Guard parse_atom() {
    if (accept(Tok::Bang)) return Guard::negation(parse_atom());
    if (accept(Tok::LParen)) {
      Guard g = parse_guard();
      expect(Tok::RParen, {"')'"});
      return g;
    }
    if (accept(Tok::KwTrue)) return Guard::always_true();
    if (at(Tok::Ident)) {
      const Token& name = advance();
      Cmp cmp;
      switch (peek().kind) {
        case Tok::Eq: cmp = Cmp::Eq; break;
        case Tok::Ne: cmp = Cmp::Ne; break;
        case Tok::Lt: cmp = Cmp::Lt; break;
        case Tok::Le: cmp = Cmp::Le; break;
        case Tok::Gt: cmp = Cmp::Gt; break;
        case Tok::Ge: cmp = Cmp::Ge; break;
        default:
          throw SyntaxError(peek().line, peek().column, describe(peek()),
                            {"'='", "'!='", "'<'", "'<='", "'>'", "'>='"});
      }
      advance();
      const Token& constant = expect(Tok::Nat, {"a natural number"});
      return Guard::atom(VarId(name.text), cmp, parse_nat(constant));
    }
    throw SyntaxError(peek().line, peek().column, describe(peek()),
                      {"'!'", "'('", "'true'", "an identifier"});
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

Program parse(std::string_view source) {
  Lexer lexer(source);
  Parser parser(lexer.run());
  return parser.parse_top();
}

}  // namespace pga
