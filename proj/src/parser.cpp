#include <cctype>
#include <optional>

#include "mvlab/error.hpp"
#include "mvlab/formula.hpp"
#include "mvlab/logic.hpp"

namespace mvlab {

namespace {

bool word_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool word_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

enum class Tok { atom, op, lparen, rparen, comma, turnstile, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
  const Connective* op = nullptr;
};

class Lexer {
 public:
  Lexer(const Logic& logic, std::string_view text, bool sequent)
      : logic_(logic), text_(text), sequent_(sequent) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    std::size_t i = 0;
    while (true) {
      while (i < text_.size() && space(text_[i])) ++i;
      if (i >= text_.size()) {
        out.push_back({Tok::end, "", i});
        return out;
      }
      const char c = text_[i];
      if (c == '(') {
        out.push_back({Tok::lparen, "(", i});
        ++i;
      } else if (c == ')') {
        out.push_back({Tok::rparen, ")", i});
        ++i;
      } else if (word_start(c)) {
        std::size_t j = i;
        while (j < text_.size() && word_char(text_[j])) ++j;
        std::string word(text_.substr(i, j - i));
        if (const Connective* op = logic_.find_symbol(word)) {
          out.push_back({Tok::op, word, i, op});
        } else {
          out.push_back({Tok::atom, word, i});
        }
        i = j;
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        throw ParseError(std::string("unexpected character '") + c + "'", i);
      } else {
        out.push_back(punct(i));
        i += out.back().text.size();
      }
    }
  }

 private:
  Token punct(std::size_t i) const {
    const Connective* best = nullptr;
    std::size_t best_len = 0;
    for (const Connective& c : logic_.signature()) {
      const std::string& s = c.symbol();
      if (word_start(s[0])) continue;
      if (s.size() > best_len && text_.substr(i, s.size()) == s) {
        best = &c;
        best_len = s.size();
      }
    }
    if (sequent_) {
      if (text_.substr(i, 2) == "=>" && best_len < 2) return {Tok::turnstile, "=>", i};
      if (text_[i] == ',' && best_len < 1) return {Tok::comma, ",", i};
    }
    if (best) return {Tok::op, best->symbol(), i, best};
    std::size_t j = i;
    while (j < text_.size() && !space(text_[j]) && !word_char(text_[j]) && text_[j] != '(' &&
           text_[j] != ')') {
      ++j;
    }
    throw ParseError("unknown symbol '" + std::string(text_.substr(i, j - i)) + "' in " + logic_.name(), i);
  }

  const Logic& logic_;
  std::string_view text_;
  bool sequent_;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  Formula formula() { return expr(0); }

  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  void expect_end() {
    const Token& t = peek();
    if (t.kind == Tok::rparen) throw ParseError("unbalanced ')'", t.pos);
    if (t.kind != Tok::end) throw ParseError("unexpected '" + t.text + "'", t.pos);
  }

 private:
  static bool is_infix(const Token& t) {
    return t.kind == Tok::op && t.op->notation().fixity == Fixity::infix;
  }

  Formula expr(int min_prec) {
    Formula lhs = unary();
    std::optional<int> level;
    bool level_nonassoc = false;
    while (is_infix(peek()) && peek().op->notation().precedence >= min_prec) {
      const Token& t = next();
      const Notation& n = t.op->notation();
      const bool nonassoc = n.assoc == Assoc::none;
      if (level && *level == n.precedence && (nonassoc || level_nonassoc)) {
        throw ParseError("non-associative connective '" + t.text + "' requires parentheses", t.pos);
      }
      Formula rhs = expr(n.precedence + 1);
      lhs = Formula::apply(t.op->name(), {std::move(lhs), std::move(rhs)});
      level = n.precedence;
      level_nonassoc = nonassoc;
    }
    return lhs;
  }

  Formula unary() {
    const Token& t = next();
    switch (t.kind) {
      case Tok::atom:
        return Formula::atom(t.text);
      case Tok::lparen: {
        Formula inner = expr(0);
        const Token& close = peek();
        if (close.kind != Tok::rparen) {
          if (close.kind == Tok::end) throw ParseError("unbalanced '(': missing ')'", t.pos);
          throw ParseError("expected ')' but found '" + close.text + "'", close.pos);
        }
        next();
        return inner;
      }
      case Tok::op:
        if (t.op->notation().fixity != Fixity::prefix) {
          throw ParseError("infix connective '" + t.text + "' is missing its left operand", t.pos);
        }
        return Formula::apply(t.op->name(), {unary()});
      case Tok::rparen:
        throw ParseError("unbalanced ')'", t.pos);
      case Tok::end:
        throw ParseError("unexpected end of input", t.pos);
      default:
        throw ParseError("unexpected '" + t.text + "'", t.pos);
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

bool blank(std::string_view text) {
  for (char c : text) {
    if (!space(c)) return false;
  }
  return true;
}

}  // namespace

Formula parse(const Logic& logic, std::string_view text) {
  if (blank(text)) throw ParseError("empty formula", 0);
  Parser p(Lexer(logic, text, false).run());
  Formula f = p.formula();
  p.expect_end();
  return f;
}

Sequent parse_sequent(const Logic& logic, std::string_view text) {
  std::vector<Token> toks = Lexer(logic, text, true).run();
  // Split on top-level commas and the single turnstile.
  std::vector<std::vector<Token>> parts(1);
  std::optional<std::size_t> turnstile_part;
  int depth = 0;
  for (const Token& t : toks) {
    if (t.kind == Tok::lparen) ++depth;
    if (t.kind == Tok::rparen) --depth;
    if (depth == 0 && t.kind == Tok::turnstile) {
      if (turnstile_part) throw ParseError("sequent has more than one '=>'", t.pos);
      turnstile_part = parts.size();
      parts.emplace_back();
      continue;
    }
    if (depth == 0 && t.kind == Tok::comma) {
      if (turnstile_part) throw ParseError("',' after '=>'", t.pos);
      parts.emplace_back();
      continue;
    }
    if (t.kind == Tok::end) continue;
    parts.back().push_back(t);
  }
  if (!turnstile_part) throw ParseError("sequent needs '=>'", text.size());

  auto parse_part = [&](std::vector<Token> part, std::size_t fallback_pos) {
    if (part.empty()) throw ParseError("empty formula in sequent", fallback_pos);
    std::size_t end_pos = part.back().pos + part.back().text.size();
    part.push_back({Tok::end, "", end_pos});
    Parser p(std::move(part));
    Formula f = p.formula();
    p.expect_end();
    return f;
  };

  Sequent s{{}, Formula::atom("_")};
  const bool no_premises = *turnstile_part == 1 && parts[0].empty();
  for (std::size_t i = 0; i < *turnstile_part; ++i) {
    if (no_premises) break;
    s.premises.push_back(parse_part(parts[i], 0));
  }
  s.conclusion = parse_part(parts[*turnstile_part], text.size());
  return s;
}

}  // namespace mvlab
