#include "pathgen/parse.hpp"

#include <cctype>
#include <charconv>
#include <string>
#include <vector>

namespace pathgen {

namespace {

enum class Tok {
  Number, Ident,
  Plus, Minus, Star, Slash,
  LParen, RParen, Comma,
  AndAnd, OrOr, Bang,
  Le, Lt, Ge, Gt, EqEq, Ne,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  double value = 0.0;
  int line = 1;
  int col = 1;
};

const char* tok_desc(Tok t) {
  switch (t) {
    case Tok::Number: return "number";
    case Tok::Ident: return "identifier";
    case Tok::Plus: return "'+'";
    case Tok::Minus: return "'-'";
    case Tok::Star: return "'*'";
    case Tok::Slash: return "'/'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Comma: return "','";
    case Tok::AndAnd: return "'&&'";
    case Tok::OrOr: return "'||'";
    case Tok::Bang: return "'!'";
    case Tok::Le: return "'<='";
    case Tok::Lt: return "'<'";
    case Tok::Ge: return "'>='";
    case Tok::Gt: return "'>'";
    case Tok::EqEq: return "'=='";
    case Tok::Ne: return "'!='";
    case Tok::End: return "end of input";
  }
  return "?";
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_ws();
      Token t = next();
      bool end = t.kind == Tok::End;
      out.push_back(std::move(t));
      if (end) return out;
    }
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '\n') {
        ++line_;
        col_ = 1;
        ++pos_;
      } else if (c == ' ' || c == '\t' || c == '\r') {
        ++col_;
        ++pos_;
      } else {
        return;
      }
    }
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(line_, col_, msg);
  }

  Token make(Tok kind, std::size_t len) {
    Token t{kind, std::string(text_.substr(pos_, len)), 0.0, line_, col_};
    pos_ += len;
    col_ += static_cast<int>(len);
    return t;
  }

  Token next() {
    if (pos_ >= text_.size()) return Token{Tok::End, "", 0.0, line_, col_};
    char c = text_[pos_];
    switch (c) {
      case '+': return make(Tok::Plus, 1);
      case '-': return make(Tok::Minus, 1);
      case '*': return make(Tok::Star, 1);
      case '/': return make(Tok::Slash, 1);
      case '(': return make(Tok::LParen, 1);
      case ')': return make(Tok::RParen, 1);
      case ',': return make(Tok::Comma, 1);
      case '&':
        if (peek(1) == '&') return make(Tok::AndAnd, 2);
        fail("expected '&&', got '&'");
      case '|':
        if (peek(1) == '|') return make(Tok::OrOr, 2);
        fail("expected '||', got '|'");
      case '!':
        if (peek(1) == '=') return make(Tok::Ne, 2);
        return make(Tok::Bang, 1);
      case '<':
        if (peek(1) == '=') return make(Tok::Le, 2);
        return make(Tok::Lt, 1);
      case '>':
        if (peek(1) == '=') return make(Tok::Ge, 2);
        return make(Tok::Gt, 1);
      case '=':
        if (peek(1) == '=') return make(Tok::EqEq, 2);
        fail("expected '==', got '='");
      default:
        break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return lex_number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return lex_ident();
    fail(std::string("unexpected character '") + c + "'");
  }

  Token lex_number() {
    std::size_t start = pos_;
    std::size_t p = pos_;
    auto digits = [&] {
      std::size_t n = 0;
      while (p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]))) {
        ++p;
        ++n;
      }
      return n;
    };
    digits();
    if (p < text_.size() && text_[p] == '.') {
      ++p;
      if (digits() == 0) {
        col_ += static_cast<int>(p - start);
        fail("expected digits after '.'");
      }
    }
    if (p < text_.size() && (text_[p] == 'e' || text_[p] == 'E')) {
      ++p;
      if (p < text_.size() && (text_[p] == '+' || text_[p] == '-')) ++p;
      if (digits() == 0) {
        col_ += static_cast<int>(p - start);
        fail("expected digits in exponent");
      }
    }
    Token t = make(Tok::Number, p - start);
    auto res = std::from_chars(t.text.data(), t.text.data() + t.text.size(), t.value);
    if (res.ec != std::errc() || res.ptr != t.text.data() + t.text.size()) {
      throw ParseError(t.line, t.col, "invalid number literal '" + t.text + "'");
    }
    return t;
  }

  Token lex_ident() {
    std::size_t p = pos_;
    while (p < text_.size()) {
      char c = text_[p];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
        ++p;
      } else {
        break;
      }
    }
    return make(Tok::Ident, p - pos_);
  }

  char peek(std::size_t ahead) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  PathConditionPtr parse() {
    PathConditionPtr pc = parse_or();
    expect(Tok::End);
    return pc;
  }

 private:
  static constexpr int kMaxDepth = 512;

  const Token& cur() const { return toks_[pos_]; }

  bool at(Tok k) const { return cur().kind == k; }

  Token take() { return toks_[pos_++]; }

  [[noreturn]] void fail_at(const Token& t, const std::string& what) const {
    throw ParseError(t.line, t.col,
                     "expected " + what + ", got " + tok_desc(t.kind));
  }

  void expect(Tok k) {
    if (!at(k)) fail_at(cur(), tok_desc(k));
    ++pos_;
  }

  struct DepthGuard {
    explicit DepthGuard(Parser& p) : p_(p) {
      if (++p_.depth_ > kMaxDepth) {
        const Token& t = p_.cur();
        throw ParseError(t.line, t.col, "expression nested too deeply");
      }
    }
    ~DepthGuard() { --p_.depth_; }
    Parser& p_;
  };

  PathConditionPtr parse_or() {
    DepthGuard g(*this);
    std::vector<PathConditionPtr> parts{parse_and()};
    while (at(Tok::OrOr)) {
      take();
      parts.push_back(parse_and());
    }
    if (parts.size() == 1) return parts[0];
    return PathCondition::disj(std::move(parts));
  }

  PathConditionPtr parse_and() {
    DepthGuard g(*this);
    std::vector<PathConditionPtr> parts{parse_not()};
    while (at(Tok::AndAnd)) {
      take();
      parts.push_back(parse_not());
    }
    if (parts.size() == 1) return parts[0];
    return PathCondition::conj(std::move(parts));
  }

  // The only backtracking point: after "(" the content may be a nested
  // condition or the parenthesized start of an arithmetic comparison.
  // Try the condition reading first; if it fails, rewind and parse a
  // comparison whose lhs begins at the "(". The error that made it
  // furthest is reported when both readings fail.
  PathConditionPtr parse_not() {
    DepthGuard g(*this);
    if (at(Tok::Bang)) {
      take();
      return PathCondition::negate(parse_not());
    }
    if (at(Tok::LParen)) {
      std::size_t mark = pos_;
      try {
        take();  // "("
        PathConditionPtr inner = parse_or();
        expect(Tok::RParen);
        return inner;
      } catch (const ParseError& cond_err) {
        std::size_t cond_progress = pos_;
        pos_ = mark;
        try {
          return parse_comparison();
        } catch (const ParseError& cmp_err) {
          if (cond_progress > pos_) throw cond_err;
          throw cmp_err;
        }
      }
    }
    return parse_comparison();
  }

  PathConditionPtr parse_comparison() {
    DepthGuard g(*this);
    NumExprPtr lhs = parse_arith();
    RelOp op;
    switch (cur().kind) {
      case Tok::Le: op = RelOp::Le; break;
      case Tok::Lt: op = RelOp::Lt; break;
      case Tok::Ge: op = RelOp::Ge; break;
      case Tok::Gt: op = RelOp::Gt; break;
      case Tok::EqEq: op = RelOp::Eq; break;
      case Tok::Ne: op = RelOp::Ne; break;
      default:
        fail_at(cur(), "relational operator");
    }
    take();
    NumExprPtr rhs = parse_arith();
    return PathCondition::leaf(Predicate{std::move(lhs), op, std::move(rhs)});
  }

  NumExprPtr parse_arith() {
    DepthGuard g(*this);
    NumExprPtr e = parse_term();
    while (at(Tok::Plus) || at(Tok::Minus)) {
      bool add = take().kind == Tok::Plus;
      NumExprPtr r = parse_term();
      e = add ? NumExpr::add(std::move(e), std::move(r))
              : NumExpr::sub(std::move(e), std::move(r));
    }
    return e;
  }

  NumExprPtr parse_term() {
    DepthGuard g(*this);
    NumExprPtr e = parse_unary();
    while (at(Tok::Star) || at(Tok::Slash)) {
      bool mul = take().kind == Tok::Star;
      NumExprPtr r = parse_unary();
      e = mul ? NumExpr::mul(std::move(e), std::move(r))
              : NumExpr::div(std::move(e), std::move(r));
    }
    return e;
  }

  NumExprPtr parse_unary() {
    DepthGuard g(*this);
    if (at(Tok::Minus)) {
      take();
      return NumExpr::neg(parse_unary());
    }
    return parse_atom();
  }

  NumExprPtr parse_atom() {
    DepthGuard g(*this);
    if (at(Tok::Number)) {
      return NumExpr::constant(take().value);
    }
    if (at(Tok::Ident)) {
      Token name = take();
      if (!at(Tok::LParen)) {
        return NumExpr::var(std::move(name.text));
      }
      const FuncInfo* fi = func_by_name(name.text);
      if (!fi) {
        throw ParseError(name.line, name.col,
                         "unknown function '" + name.text + "'");
      }
      take();  // "("
      std::vector<NumExprPtr> args{parse_arith()};
      while (at(Tok::Comma)) {
        take();
        args.push_back(parse_arith());
      }
      const Token& close = cur();
      expect(Tok::RParen);
      if (static_cast<int>(args.size()) != fi->arity) {
        throw ParseError(name.line, name.col,
                         "function '" + name.text + "' expects " +
                             std::to_string(fi->arity) + " argument" +
                             (fi->arity == 1 ? "" : "s") + ", got " +
                             std::to_string(args.size()));
      }
      (void)close;
      return NumExpr::call(fi->id, std::move(args));
    }
    if (at(Tok::LParen)) {
      take();
      NumExprPtr e = parse_arith();
      expect(Tok::RParen);
      return e;
    }
    fail_at(cur(), "number, identifier, or '('");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  int depth_ = 0;
};

}  // namespace

PathConditionPtr parse_condition(std::string_view text) {
  Parser parser(Lexer(text).run());
  return parser.parse();
}

}  // namespace pathgen
