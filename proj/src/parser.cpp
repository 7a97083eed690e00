// SPDX-License-Identifier: Apache-2.0

#include "qentail/parser.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace qentail {

namespace {

enum class Tok : std::uint8_t {
  Ident, Int, Decimal,
  LParen, RParen, LBracket, RBracket, LBrace, RBrace,
  Comma, Colon, Semi, Plus, Minus, Star, Dot, Slash,
  Bang, Amp, Pipe, Eq, Neq, EqEmp, NeqEmp, MapsTo, WandOp,
  Assign, Lt, Gt, Eof,
};

struct Token {
  Tok kind;
  std::string text;
  int line, col;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Lexer {
public:
  explicit Lexer(const std::string& text) : s_(text) { scan_all(); }
  const std::vector<Token>& tokens() const { return toks_; }

private:
  void scan_all() {
    while (true) {
      skip_ws();
      if (pos_ >= s_.size()) break;
      scan_one();
    }
    toks_.push_back({Tok::Eof, "", line_, col_});
  }

  void skip_ws() {
    while (pos_ < s_.size()) {
      char c = s_[pos_];
      if (c == '\n') {
        ++line_;
        col_ = 1;
        ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++col_;
        ++pos_;
      } else if (c == '/' && pos_ + 1 < s_.size() && s_[pos_ + 1] == '/') {
        while (pos_ < s_.size() && s_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  [[noreturn]] void fail(const std::string& msg) { throw SyntaxError(line_, col_, msg); }

  void push(Tok k, std::string text, int n) {
    toks_.push_back({k, std::move(text), line_, col_});
    pos_ += n;
    col_ += n;
  }

  bool at(const char* lit) const {
    std::size_t n = std::char_traits<char>::length(lit);
    return s_.compare(pos_, n, lit) == 0;
  }

  // `=emp` / `!=emp` must not swallow a longer identifier (e.g. `=empty`)
  bool at_emp_suffix(std::size_t off) const {
    if (s_.compare(pos_ + off, 3, "emp") != 0) return false;
    std::size_t end = pos_ + off + 3;
    return end >= s_.size() || !ident_char(s_[end]);
  }

  void scan_one() {
    char c = s_[pos_];
    if (ident_start(c)) {
      std::size_t end = pos_;
      while (end < s_.size() && ident_char(s_[end])) ++end;
      push(Tok::Ident, s_.substr(pos_, end - pos_), static_cast<int>(end - pos_));
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t end = pos_;
      while (end < s_.size() && std::isdigit(static_cast<unsigned char>(s_[end]))) ++end;
      bool decimal = false;
      if (end < s_.size() && s_[end] == '.' && end + 1 < s_.size() &&
          std::isdigit(static_cast<unsigned char>(s_[end + 1]))) {
        decimal = true;
        ++end;
        while (end < s_.size() && std::isdigit(static_cast<unsigned char>(s_[end]))) ++end;
      }
      push(decimal ? Tok::Decimal : Tok::Int, s_.substr(pos_, end - pos_),
           static_cast<int>(end - pos_));
      return;
    }
    if (at("|->")) return push(Tok::MapsTo, "|->", 3);
    if (at("-*")) return push(Tok::WandOp, "-*", 2);
    if (at(":=")) return push(Tok::Assign, ":=", 2);
    if (at("!=") && at_emp_suffix(2)) return push(Tok::NeqEmp, "!=emp", 5);
    if (at("!=")) return push(Tok::Neq, "!=", 2);
    if (c == '=' && at_emp_suffix(1)) return push(Tok::EqEmp, "=emp", 4);
    switch (c) {
      case '(': return push(Tok::LParen, "(", 1);
      case ')': return push(Tok::RParen, ")", 1);
      case '[': return push(Tok::LBracket, "[", 1);
      case ']': return push(Tok::RBracket, "]", 1);
      case '{': return push(Tok::LBrace, "{", 1);
      case '}': return push(Tok::RBrace, "}", 1);
      case ',': return push(Tok::Comma, ",", 1);
      case ':': return push(Tok::Colon, ":", 1);
      case ';': return push(Tok::Semi, ";", 1);
      case '+': return push(Tok::Plus, "+", 1);
      case '-': return push(Tok::Minus, "-", 1);
      case '*': return push(Tok::Star, "*", 1);
      case '.': return push(Tok::Dot, ".", 1);
      case '/': return push(Tok::Slash, "/", 1);
      case '!': return push(Tok::Bang, "!", 1);
      case '&': return push(Tok::Amp, "&", 1);
      case '|': return push(Tok::Pipe, "|", 1);
      case '=': return push(Tok::Eq, "=", 1);
      case '<': return push(Tok::Lt, "<", 1);
      case '>': return push(Tok::Gt, ">", 1);
      default: fail(std::string("unexpected character '") + c + "'");
    }
  }

  const std::string& s_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  std::vector<Token> toks_;
};

const char* kReserved[] = {"true", "emp", "ls", "max", "min", "E", "A", "S", "J",
                           "skip", "new", "free", "if", "else", "while"};

bool is_reserved(const std::string& name) {
  for (const char* r : kReserved)
    if (name == r) return true;
  return false;
}

class Parser {
public:
  Parser(const std::string& text, const AtomConfig& cfg) : lex_(text), cfg_(cfg) {}

  SlPtr run_sl() {
    SlPtr f = sl_expr();
    expect(Tok::Eof, "end of input");
    return f;
  }

  QslPtr run_qsl() {
    QslPtr f = qsl_expr(limit_of(Tok::Eof));
    expect(Tok::Eof, "end of input");
    return f;
  }

  HpPtr run_hpgcl() {
    HpPtr c = hp_seq_expr();
    expect(Tok::Eof, "end of input");
    return c;
  }

private:
  const Token& peek(int n = 0) const {
    std::size_t i = idx_ + n;
    if (i >= lex_.tokens().size()) i = lex_.tokens().size() - 1;
    return lex_.tokens()[i];
  }
  const Token& next() { return lex_.tokens()[idx_++]; }
  bool accept(Tok k) {
    if (peek().kind == k) {
      ++idx_;
      return true;
    }
    return false;
  }
  const Token& expect(Tok k, const char* what) {
    if (peek().kind != k)
      throw SyntaxError(peek().line, peek().col,
                        std::string("expected ") + what + ", got '" + peek().text + "'");
    return next();
  }
  [[noreturn]] void fail_here(const std::string& msg) {
    throw SyntaxError(peek().line, peek().col, msg);
  }

  std::size_t limit_of(Tok) const { return lex_.tokens().size() - 1; }

  // ----- terms and atoms -----

  std::string ident() {
    const Token& t = expect(Tok::Ident, "identifier");
    if (is_reserved(t.text))
      throw SyntaxError(t.line, t.col, "'" + t.text + "' is reserved");
    return t.text;
  }

  Term term() {
    if (peek().kind == Tok::Int) return Term::literal(std::stoll(next().text));
    return Term::var(ident());
  }

  bool term_ahead() const {
    return peek().kind == Tok::Int ||
           (peek().kind == Tok::Ident && !is_reserved(peek().text));
  }

  Atom atom() {
    const Token& t = peek();
    if (t.kind == Tok::Ident && t.text == "true") {
      next();
      return Atom::mk_true();
    }
    if (t.kind == Tok::Ident && t.text == "emp") {
      next();
      return Atom::emp();
    }
    if (t.kind == Tok::Ident && t.text == "ls") {
      next();
      expect(Tok::LParen, "'('");
      Term a = term();
      expect(Tok::Comma, "','");
      Term b = term();
      expect(Tok::RParen, "')'");
      Atom out = Atom::ls(std::move(a), std::move(b));
      validate_atom(out, cfg_);
      return out;
    }
    Term lhs = term();
    switch (peek().kind) {
      case Tok::Eq: next(); return Atom::eq(std::move(lhs), term());
      case Tok::Neq: next(); return Atom::neq(std::move(lhs), term());
      case Tok::EqEmp: next(); return Atom::eq_emp(std::move(lhs), term());
      case Tok::NeqEmp: next(); return Atom::neq_emp(std::move(lhs), term());
      case Tok::MapsTo: {
        next();
        std::vector<Term> rec;
        if (accept(Tok::LParen)) {
          rec.push_back(term());
          while (accept(Tok::Comma)) rec.push_back(term());
          expect(Tok::RParen, "')'");
        } else {
          rec.push_back(term());
        }
        Atom out = Atom::points_to(std::move(lhs), std::move(rec));
        validate_atom(out, cfg_);
        return out;
      }
      default:
        fail_here("expected an atom");
    }
  }

  // ----- SL -----

  SlPtr sl_expr() {
    if (peek().kind == Tok::Ident && (peek().text == "E" || peek().text == "A") &&
        peek(1).kind == Tok::Ident && peek(2).kind == Tok::Colon) {
      bool exists = next().text == "E";
      std::string x = ident();
      expect(Tok::Colon, "':'");
      SlPtr body = sl_expr();
      return exists ? sl_exists(std::move(x), std::move(body))
                    : sl_forall(std::move(x), std::move(body));
    }
    return sl_or();
  }

  SlPtr sl_or() {
    SlPtr f = sl_and();
    while (accept(Tok::Pipe)) f = qentail::sl_or(f, sl_and());
    return f;
  }

  SlPtr sl_and() {
    SlPtr f = sl_wand_lvl();
    while (accept(Tok::Amp)) f = qentail::sl_and(f, sl_wand_lvl());
    return f;
  }

  SlPtr sl_wand_lvl() {
    SlPtr f = sl_star_lvl();
    if (accept(Tok::WandOp)) return sl_wand(f, sl_wand_lvl());
    return f;
  }

  SlPtr sl_star_lvl() {
    SlPtr f = sl_unary();
    while (accept(Tok::Star)) f = sl_star(f, sl_unary());
    return f;
  }

  SlPtr sl_unary() {
    if (accept(Tok::Bang)) return sl_not(sl_unary());
    if (accept(Tok::LParen)) {
      SlPtr f = sl_expr();
      expect(Tok::RParen, "')'");
      return f;
    }
    return sl_atom(atom());
  }

  // ----- QSL -----
  //
  // `limit` is the token index one past the current subexpression; the sum
  // forms are detected by scanning for a '+' at nesting depth zero below it.

  std::optional<std::size_t> find_plus(std::size_t limit) const {
    int depth = 0;
    for (std::size_t i = idx_; i < limit; ++i) {
      const Token& t = lex_.tokens()[i];
      switch (t.kind) {
        case Tok::LParen:
        case Tok::LBracket:
        case Tok::LBrace: ++depth; break;
        case Tok::RParen:
        case Tok::RBracket:
        case Tok::RBrace:
          if (depth == 0) return std::nullopt;
          --depth;
          break;
        case Tok::Comma:
          if (depth == 0) return std::nullopt;
          break;
        case Tok::Plus:
          if (depth == 0) return i;
          break;
        case Tok::Eof:
          return std::nullopt;
        default: break;
      }
    }
    return std::nullopt;
  }

  QslPtr qsl_expr(std::size_t limit) {
    if (peek().kind == Tok::Ident && (peek().text == "S" || peek().text == "J") &&
        peek(1).kind == Tok::Ident && peek(2).kind == Tok::Colon) {
      bool sup = next().text == "S";
      std::string x = ident();
      expect(Tok::Colon, "':'");
      QslPtr body = qsl_expr(limit);
      return sup ? qsl_sup(std::move(x), std::move(body))
                 : qsl_inf(std::move(x), std::move(body));
    }
    if (find_plus(limit)) return qsl_sum(limit);
    return qsl_wand_lvl(limit);
  }

  // weight * branch + weight * branch, weights both numeric or both guards
  QslPtr qsl_sum(std::size_t limit) {
    const Token& lead = peek();
    if (lead.kind == Tok::Int || lead.kind == Tok::Decimal) {
      Prob w1 = probability();
      expect(Tok::Star, "'*'");
      QslPtr g = qsl_wand_lvl(limit);
      expect(Tok::Plus, "'+'");
      Prob w2 = probability();
      expect(Tok::Star, "'*'");
      QslPtr u = qsl_wand_lvl(limit);
      if (!(w2 == w1.complement()))
        throw GrammarError(RestrictionKind::BadConvexWeights,
                           "convex weights must sum to 1: " + w1.str() + " + " + w2.str());
      return qsl_convex(std::move(w1), std::move(g), std::move(u));
    }
    if (lead.kind == Tok::LBracket) {
      auto [neg1, b1] = bracket_guard();
      expect(Tok::Star, "'*'");
      QslPtr g = qsl_wand_lvl(limit);
      expect(Tok::Plus, "'+'");
      auto [neg2, b2] = bracket_guard();
      expect(Tok::Star, "'*'");
      QslPtr u = qsl_wand_lvl(limit);
      if (!guards_complementary(neg1, b1, neg2, b2))
        throw GrammarError(RestrictionKind::GuardMismatch,
                           "Boolean choice guards must be complementary: [" + to_string(b1) +
                               "] vs [" + to_string(b2) + "]");
      return qsl_bool_choice(normalize_guard(neg1, b1), std::move(g), std::move(u));
    }
    fail_here("expected a convex sum or Boolean choice before '+'");
  }

  std::pair<bool, Atom> bracket_guard() {
    expect(Tok::LBracket, "'['");
    bool neg = accept(Tok::Bang);
    Atom b = atom();
    expect(Tok::RBracket, "']'");
    return {neg, std::move(b)};
  }

  static Atom normalize_guard(bool neg, const Atom& b) {
    if (!neg) return b;
    auto nb = negate_atom(b);
    if (!nb)
      throw GrammarError(RestrictionKind::GuardMismatch,
                         "cannot negate guard atom " + to_string(b));
    return *nb;
  }

  static bool guards_complementary(bool neg1, const Atom& b1, bool neg2, const Atom& b2) {
    if (b1 == b2) return neg1 != neg2;
    // one side written as the registry negation of the other
    auto nb1 = negate_atom(b1);
    return neg1 == neg2 && nb1 && *nb1 == b2;
  }

  Prob probability() {
    const Token& t = peek();
    if (t.kind == Tok::Decimal) return Prob::parse(next().text);
    if (t.kind == Tok::Int) {
      std::string text = next().text;
      if (accept(Tok::Slash)) text += "/" + expect(Tok::Int, "denominator").text;
      return Prob::parse(text);
    }
    fail_here("expected a probability");
  }

  QslPtr qsl_wand_lvl(std::size_t limit) {
    QslPtr f = qsl_star_lvl(limit);
    if (accept(Tok::WandOp)) {
      if (f->tag != QslTag::Iverson)
        throw GrammarError(RestrictionKind::GuardedWandRestriction,
                           "wand antecedent must be a single Iverson atom, got " +
                               qentail::to_string(f));
      return qsl_wand(f->atom, qsl_wand_lvl(limit));
    }
    return f;
  }

  QslPtr qsl_star_lvl(std::size_t limit) {
    QslPtr f = qsl_mul_lvl(limit);
    while (accept(Tok::Star)) f = qsl_star(f, qsl_mul_lvl(limit));
    return f;
  }

  QslPtr qsl_mul_lvl(std::size_t limit) {
    QslPtr f = qsl_unary(limit);
    while (accept(Tok::Dot)) f = qsl_mul(f, qsl_unary(limit));
    return f;
  }

  QslPtr qsl_unary(std::size_t limit) {
    const Token& t = peek();
    if (t.kind == Tok::Int && t.text == "1" && peek(1).kind == Tok::Minus) {
      next();
      next();
      return qsl_one_minus(qsl_unary(limit));
    }
    if (t.kind == Tok::Ident && (t.text == "max" || t.text == "min")) {
      bool mx = next().text == "max";
      expect(Tok::LParen, "'('");
      std::size_t arg_limit = matching_paren_limit();
      QslPtr g = qsl_expr(arg_limit);
      expect(Tok::Comma, "','");
      QslPtr u = qsl_expr(arg_limit);
      expect(Tok::RParen, "')'");
      return mx ? qsl_max(std::move(g), std::move(u)) : qsl_min(std::move(g), std::move(u));
    }
    if (t.kind == Tok::LBracket) {
      next();
      Atom b = atom();
      expect(Tok::RBracket, "']'");
      return qsl_iverson(std::move(b));
    }
    if (accept(Tok::LParen)) {
      std::size_t inner_limit = matching_paren_limit_from(idx_ - 1);
      QslPtr f = qsl_expr(inner_limit);
      expect(Tok::RParen, "')'");
      return f;
    }
    fail_here("expected a quantitative formula");
  }

  // token index of the ')' matching the '(' we just consumed
  std::size_t matching_paren_limit() const { return matching_paren_limit_from(idx_ - 1); }

  std::size_t matching_paren_limit_from(std::size_t open_idx) const {
    int depth = 0;
    for (std::size_t i = open_idx; i < lex_.tokens().size(); ++i) {
      switch (lex_.tokens()[i].kind) {
        case Tok::LParen: ++depth; break;
        case Tok::RParen:
          if (--depth == 0) return i;
          break;
        default: break;
      }
    }
    const Token& t = lex_.tokens()[open_idx];
    throw SyntaxError(t.line, t.col, "unbalanced '('");
  }

  // ----- hpGCL -----

  HpPtr hp_seq_expr() {
    HpPtr c = hp_stmt();
    while (accept(Tok::Semi)) {
      if (peek().kind == Tok::Eof || peek().kind == Tok::RBrace) break;  // trailing ';'
      c = hp_seq(c, hp_stmt());
    }
    return c;
  }

  HpPtr hp_stmt() {
    const Token& t = peek();
    if (t.kind == Tok::Ident && t.text == "skip") {
      next();
      return hp_skip();
    }
    if (t.kind == Tok::Ident && t.text == "free") {
      next();
      expect(Tok::LParen, "'('");
      Term e = term();
      expect(Tok::RParen, "')'");
      return hp_free(std::move(e));
    }
    if (t.kind == Tok::Ident && t.text == "if") {
      next();
      expect(Tok::LParen, "'('");
      Atom g = guard_atom();
      expect(Tok::RParen, "')'");
      HpPtr a = block();
      if (accept_ident("else")) {
        HpPtr b = block();
        return hp_ite(std::move(g), std::move(a), std::move(b));
      }
      return hp_ite(std::move(g), std::move(a), hp_skip());
    }
    if (t.kind == Tok::Ident && t.text == "while") {
      next();
      expect(Tok::LParen, "'('");
      Atom g = guard_atom();
      expect(Tok::RParen, "')'");
      HpPtr body = block();
      return hp_while(std::move(g), std::move(body));
    }
    if (t.kind == Tok::LBrace) {
      // {c} [p] {c}
      HpPtr a = block();
      expect(Tok::LBracket, "'['");
      Prob p = probability();
      expect(Tok::RBracket, "']'");
      HpPtr b = block();
      return hp_pchoice(std::move(p), std::move(a), std::move(b));
    }
    if (t.kind == Tok::Lt) {
      next();
      Term e = term();
      expect(Tok::Gt, "'>'");
      expect(Tok::Assign, "':='");
      return hp_mutate(std::move(e), record_expr());
    }
    if (t.kind == Tok::Ident) {
      std::string x = ident();
      expect(Tok::Assign, "':='");
      if (accept_ident("new")) {
        expect(Tok::LParen, "'('");
        std::vector<Term> rec;
        rec.push_back(term());
        while (accept(Tok::Comma)) rec.push_back(term());
        expect(Tok::RParen, "')'");
        check_record_width(rec.size());
        return hp_alloc(std::move(x), std::move(rec));
      }
      if (accept(Tok::Lt)) {
        Term e = term();
        expect(Tok::Gt, "'>'");
        if (cfg_.k != 1)
          throw GrammarError(RestrictionKind::RecordWidthMismatch,
                             "lookup reads a single cell and needs k = 1");
        return hp_lookup(std::move(x), std::move(e));
      }
      return hp_assign(std::move(x), term());
    }
    fail_here("expected a statement");
  }

  std::vector<Term> record_expr() {
    std::vector<Term> rec;
    if (accept(Tok::LParen)) {
      rec.push_back(term());
      while (accept(Tok::Comma)) rec.push_back(term());
      expect(Tok::RParen, "')'");
    } else {
      rec.push_back(term());
    }
    check_record_width(rec.size());
    return rec;
  }

  void check_record_width(std::size_t n) {
    if (static_cast<int>(n) != cfg_.k)
      throw GrammarError(RestrictionKind::RecordWidthMismatch,
                         "record has width " + std::to_string(n) + ", configured k = " +
                             std::to_string(cfg_.k));
  }

  Atom guard_atom() {
    if (peek().kind == Tok::Ident && peek().text == "true") {
      next();
      return Atom::mk_true();
    }
    Term a = term();
    if (accept(Tok::Eq)) return Atom::eq(std::move(a), term());
    if (accept(Tok::Neq)) return Atom::neq(std::move(a), term());
    fail_here("expected a pure guard (t = t, t != t or true)");
  }

  bool accept_ident(const char* name) {
    if (peek().kind == Tok::Ident && peek().text == name) {
      next();
      return true;
    }
    return false;
  }

  HpPtr block() {
    expect(Tok::LBrace, "'{'");
    HpPtr c = hp_seq_expr();
    expect(Tok::RBrace, "'}'");
    return c;
  }

  Lexer lex_;
  AtomConfig cfg_;
  std::size_t idx_ = 0;
};

}  // namespace

SlPtr parse_sl(const std::string& text, const AtomConfig& cfg) {
  return Parser(text, cfg).run_sl();
}

QslPtr parse_qsl(const std::string& text, const AtomConfig& cfg) {
  return Parser(text, cfg).run_qsl();
}

HpPtr parse_hpgcl(const std::string& text, const AtomConfig& cfg) {
  return Parser(text, cfg).run_hpgcl();
}

}  // namespace qentail
