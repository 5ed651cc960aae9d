// Keyword-prefix concrete syntax. Every constructor has a fixed arity, so the
// grammar needs no precedence: parentheses only group, and tube lists are the
// maximal run of `[` ... `]` blocks after a composition's cap.

#include <cctype>
#include <sstream>

#include "ccl/syntax.hpp"

namespace ccl {

ParseError::ParseError(std::size_t offset, std::size_t line, std::size_t column, const std::string& msg)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
      offset_(offset),
      line_(line),
      column_(column) {}

namespace {

const std::set<std::string>& keywords() {
  static const std::set<std::string> k = {
      "lam",  "app",  "pair",   "fst", "snd",   "dlam", "dapp",  "pi",    "sg",   "path",  "eq",   "void",
      "nat",  "bool", "wbool",  "S1",  "zero",  "suc",  "natrec", "true", "false", "if",   "base",  "loop",
      "S1elim", "U",  "pre",    "kan", "V",     "Vin",  "Vproj", "coe",   "hcom", "com",   "fcom", "ghcom",
      "gcom", "box",  "cap",
  };
  return k;
}

enum class Tok { Ident, Num, LParen, RParen, LBrack, RBrack, Dot, Colon, Equals, Arrow, Star, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t offset;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip();
      if (pos_ >= src_.size()) {
        out.push_back({Tok::End, "", pos_});
        return out;
      }
      std::size_t start = pos_;
      char c = src_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_' ||
                                      src_[pos_] == '\''))
          ++pos_;
        out.push_back({Tok::Ident, std::string(src_.substr(start, pos_ - start)), start});
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        out.push_back({Tok::Num, std::string(src_.substr(start, pos_ - start)), start});
      } else if (c == '~' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
        pos_ += 2;
        out.push_back({Tok::Arrow, "~>", start});
      } else {
        Tok k;
        switch (c) {
          case '(': k = Tok::LParen; break;
          case ')': k = Tok::RParen; break;
          case '[': k = Tok::LBrack; break;
          case ']': k = Tok::RBrack; break;
          case '.': k = Tok::Dot; break;
          case ':': k = Tok::Colon; break;
          case '=': k = Tok::Equals; break;
          case '*': k = Tok::Star; break;
          default:
            throw error(start, std::string("unexpected character '") + c + "'");
        }
        ++pos_;
        out.push_back({k, std::string(1, c), start});
      }
    }
  }

  ParseError error(std::size_t offset, const std::string& msg) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < offset && i < src_.size(); ++i) {
      if (src_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    return ParseError(offset, line, col, msg);
  }

 private:
  void skip() {
    while (pos_ < src_.size()) {
      if (std::isspace(static_cast<unsigned char>(src_[pos_]))) {
        ++pos_;
      } else if (src_.compare(pos_, 2, "--") == 0) {
        while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : lex_(src), toks_(lex_.run()) {}

  Term whole_term() {
    Term t = term();
    expect(Tok::End, "end of input");
    return t;
  }

  Dim whole_dim() {
    Dim d = dim();
    expect(Tok::End, "end of input");
    return d;
  }

  EquationList whole_equations() {
    EquationList out;
    if (peek().kind == Tok::End) return out;
    while (true) {
      Dim l = dim();
      expect(Tok::Equals, "'='");
      out.push_back({l, dim()});
      if (peek().kind == Tok::End) break;
      // Separators: commas are not tokens, so accept a bare sequence.
    }
    return out;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  Token next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  [[noreturn]] void fail(const std::string& msg) const { throw lex_.error(peek().offset, msg); }

  Token expect(Tok k, const char* what) {
    if (peek().kind != k) fail(std::string("expected ") + what + ", found '" + peek().text + "'");
    return next();
  }

  void expect_kw(const char* kw) {
    if (peek().kind != Tok::Ident || peek().text != kw) fail(std::string("expected '") + kw + "'");
    next();
  }

  std::string ident() {
    if (peek().kind != Tok::Ident) fail("expected an identifier, found '" + peek().text + "'");
    if (keywords().contains(peek().text)) fail("'" + peek().text + "' is a keyword");
    return next().text;
  }

  Dim dim() {
    const Token& t = peek();
    if (t.kind == Tok::Num) {
      if (t.text == "0") return next(), Dim::zero();
      if (t.text == "1") return next(), Dim::one();
      fail("dimension constants are 0 and 1");
    }
    return Dim::name(ident());
  }

  unsigned number() {
    Token t = expect(Tok::Num, "a level");
    try {
      return static_cast<unsigned>(std::stoul(t.text));
    } catch (const std::exception&) {
      throw lex_.error(t.offset, "level out of range");
    }
  }

  // `(x. body)` or `x. body`
  std::pair<std::string, Term> binder_group() {
    bool paren = peek().kind == Tok::LParen;
    if (paren) next();
    std::string x = ident();
    expect(Tok::Dot, "'.'");
    Term body = term();
    if (paren) expect(Tok::RParen, "')'");
    return {x, std::move(body)};
  }

  std::pair<Dim, Dim> direction() {
    Dim r = dim();
    expect(Tok::Arrow, "'~>'");
    return {r, dim()};
  }

  System tubes(bool binding) {
    System out;
    while (peek().kind == Tok::LBrack) {
      next();
      Dim l = dim();
      expect(Tok::Equals, "'='");
      Dim r = dim();
      if (binding) {
        std::string y = ident();
        expect(Tok::Dot, "'.'");
        out.push_back(mk::tube(l, r, y, term()));
      } else {
        out.push_back(mk::cap_face(l, r, term()));
      }
      expect(Tok::RBrack, "']'");
    }
    return out;
  }

  Term term() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::LParen: {
        next();
        Term inner = term();
        expect(Tok::RParen, "')'");
        return inner;
      }
      case Tok::Star:
        next();
        return mk::star();
      case Tok::Ident:
        break;
      default:
        fail("expected a term, found '" + t.text + "'");
    }
    const std::string kw = t.text;
    if (!keywords().contains(kw)) return mk::var(next().text);
    next();
    if (kw == "lam") {
      std::string a = ident();
      expect(Tok::Dot, "'.'");
      return mk::lam(a, term());
    }
    if (kw == "dlam") {
      std::string x = ident();
      expect(Tok::Dot, "'.'");
      return mk::dlam(x, term());
    }
    if (kw == "app") {
      Term m = term();
      return mk::app(m, term());
    }
    if (kw == "pair") {
      Term m = term();
      return mk::pair(m, term());
    }
    if (kw == "fst") return mk::fst(term());
    if (kw == "snd") return mk::snd(term());
    if (kw == "dapp") {
      Term m = term();
      return mk::dapp(m, dim());
    }
    if (kw == "pi" || kw == "sg") {
      expect(Tok::LParen, "'('");
      std::string a = ident();
      expect(Tok::Colon, "':'");
      Term dom = term();
      expect(Tok::RParen, "')'");
      Term cod = term();
      return kw == "pi" ? mk::pi(a, dom, cod) : mk::sigma(a, dom, cod);
    }
    if (kw == "path") {
      auto [x, ty] = binder_group();
      Term p0 = term();
      return mk::path(x, ty, p0, term());
    }
    if (kw == "eq") {
      Term ty = term();
      Term m = term();
      return mk::eq(ty, m, term());
    }
    if (kw == "void") return mk::void_();
    if (kw == "nat") return mk::nat();
    if (kw == "bool") return mk::bool_();
    if (kw == "wbool") return mk::wbool();
    if (kw == "S1") return mk::circle();
    if (kw == "zero") return mk::zero();
    if (kw == "true") return mk::tt();
    if (kw == "false") return mk::ff();
    if (kw == "base") return mk::base();
    if (kw == "suc") return mk::suc(term());
    if (kw == "natrec") {
      Term m = term();
      Term z = term();
      expect(Tok::LParen, "'('");
      std::string n = ident();
      std::string a = ident();
      expect(Tok::Dot, "'.'");
      Term s = term();
      expect(Tok::RParen, "')'");
      return mk::natrec(m, z, n, a, s);
    }
    if (kw == "if") {
      auto [b, motive] = binder_group();
      Term m = term();
      Term tt = term();
      return mk::if_(b, motive, m, tt, term());
    }
    if (kw == "loop") return mk::loop(dim());
    if (kw == "S1elim") {
      auto [c, motive] = binder_group();
      Term m = term();
      Term p = term();
      auto [x, l] = binder_group();
      return mk::s1elim(c, motive, m, p, x, l);
    }
    if (kw == "U") {
      if (peek().kind == Tok::Ident && (peek().text == "pre" || peek().text == "kan")) {
        bool kan = next().text == "kan";
        return mk::universe(kan, number());
      }
      fail("expected 'pre' or 'kan' after 'U'");
    }
    if (kw == "V" || kw == "Vin" || kw == "Vproj") {
      Dim r = dim();
      Term a = term();
      Term b = term();
      if (kw == "Vin") return mk::vin(r, a, b);
      if (kw == "Vproj") return mk::vproj(r, a, b);
      return mk::V(r, a, b, term());
    }
    if (kw == "coe") {
      auto [x, ty] = binder_group();
      auto [r, r2] = direction();
      return mk::coe(x, ty, r, r2, term());
    }
    if (kw == "hcom" || kw == "ghcom") {
      Term ty = term();
      auto [r, r2] = direction();
      Term m = term();
      System sys = tubes(true);
      return kw == "hcom" ? mk::hcom(ty, r, r2, m, std::move(sys)) : mk::ghcom(ty, r, r2, m, std::move(sys));
    }
    if (kw == "com" || kw == "gcom") {
      auto [y, ty] = binder_group();
      auto [r, r2] = direction();
      Term m = term();
      System sys = tubes(true);
      return kw == "com" ? mk::com(y, ty, r, r2, m, std::move(sys)) : mk::gcom(y, ty, r, r2, m, std::move(sys));
    }
    if (kw == "fcom" || kw == "box" || kw == "cap") {
      auto [r, r2] = direction();
      Term m = term();
      if (kw == "fcom") return mk::fcom(r, r2, m, tubes(true));
      if (kw == "cap") return mk::cap(r, r2, m, tubes(true));
      return mk::box(r, r2, m, tubes(false));
    }
    fail("'" + kw + "' cannot start a term");
  }

  Lexer lex_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

// ---------------------------------------------------------------------------

class Printer {
 public:
  explicit Printer(const Term& root) {
    avoid_terms_ = free_vars(root);
    avoid_dims_ = fd(root);
    for (const auto& k : keywords()) {
      avoid_terms_.insert(k);
      avoid_dims_.insert(k);
    }
  }

  void top(const Term& t) { emit(t); }
  std::string str() const { return out_.str(); }

 private:
  static bool atomic(const Term& t) {
    switch (t.tag()) {
      case Tag::Var: case Tag::BVar: case Tag::Void: case Tag::Nat: case Tag::Bool: case Tag::WBool:
      case Tag::Circle: case Tag::Star: case Tag::Zero: case Tag::True: case Tag::False: case Tag::Base:
        return true;
      default:
        return false;
    }
  }

  std::string push(Sort s, const std::string& hint) {
    auto& stack = s == Sort::Term ? terms_ : dims_;
    std::set<std::string> avoid = s == Sort::Term ? avoid_terms_ : avoid_dims_;
    avoid.insert(stack.begin(), stack.end());
    std::string n = fresh_name(hint.empty() ? (s == Sort::Term ? "a" : "x") : hint, avoid);
    stack.push_back(n);
    return n;
  }

  void pop(Sort s) { (s == Sort::Term ? terms_ : dims_).pop_back(); }

  void dim(const Dim& d) {
    if (d.is_bound()) {
      if (d.index() >= dims_.size()) {
        out_ << "#" << d.index();
      } else {
        out_ << dims_[dims_.size() - 1 - d.index()];
      }
    } else {
      out_ << d.str();
    }
  }

  void arg(const Term& t) {
    if (atomic(t)) {
      emit(t);
    } else {
      out_ << "(";
      emit(t);
      out_ << ")";
    }
  }

  // Prints `x. body` for a scope whose binders are all named up front.
  void scoped(const Scope& sc, bool parens) {
    if (parens) out_ << "(";
    for (std::size_t i = 0; i < sc.binders.size(); ++i) {
      if (i) out_ << " ";
      out_ << push(sc.binders[i].sort, sc.binders[i].hint);
    }
    out_ << ". ";
    emit(sc.body);
    for (auto it = sc.binders.rbegin(); it != sc.binders.rend(); ++it) pop(it->sort);
    if (parens) out_ << ")";
  }

  void direction(const Node& n) {
    dim(n.dims[0]);
    out_ << " ~> ";
    dim(n.dims[1]);
  }

  void tubes(const System& sys) {
    for (const auto& tb : sys) {
      out_ << " [";
      dim(tb.eq.lhs);
      out_ << "=";
      dim(tb.eq.rhs);
      out_ << " ";
      if (tb.binds) {
        out_ << push(Sort::Dim, tb.hint) << ". ";
        emit(tb.body);
        pop(Sort::Dim);
      } else {
        emit(tb.body);
      }
      out_ << "]";
    }
  }

  void emit(const Term& t) {
    const Node& n = t.node();
    switch (n.tag) {
      case Tag::Var:
        out_ << n.name;
        return;
      case Tag::BVar:
        if (n.index >= terms_.size()) {
          out_ << "#" << n.index;
        } else {
          out_ << terms_[terms_.size() - 1 - n.index];
        }
        return;
      case Tag::Pi:
      case Tag::Sigma: {
        out_ << (n.tag == Tag::Pi ? "pi (" : "sg (");
        std::string a = push(Sort::Term, n.args[1].binders[0].hint);
        pop(Sort::Term);
        out_ << a << " : ";
        emit(n.args[0].body);
        out_ << ") ";
        push(Sort::Term, n.args[1].binders[0].hint);
        arg(n.args[1].body);
        pop(Sort::Term);
        return;
      }
      case Tag::UPre:
        out_ << "U pre " << n.level;
        return;
      case Tag::UKan:
        out_ << "U kan " << n.level;
        return;
      case Tag::Lam:
      case Tag::DLam:
        out_ << shape_of(n.tag).keyword << " ";
        scoped(n.args[0], false);
        return;
      default:
        break;
    }
    const Shape& sh = shape_of(n.tag);
    out_ << sh.keyword;
    switch (n.tag) {
      case Tag::Coe:
      case Tag::Com:
      case Tag::Gcom:
        out_ << " ";
        scoped(n.args[0], true);
        out_ << " ";
        direction(n);
        out_ << " ";
        arg(n.args[1].body);
        tubes(n.tubes);
        return;
      case Tag::Hcom:
      case Tag::Ghcom:
        out_ << " ";
        arg(n.args[0].body);
        out_ << " ";
        direction(n);
        out_ << " ";
        arg(n.args[1].body);
        tubes(n.tubes);
        return;
      case Tag::Fcom:
      case Tag::Box:
      case Tag::Cap:
        out_ << " ";
        direction(n);
        out_ << " ";
        arg(n.args[0].body);
        tubes(n.tubes);
        return;
      case Tag::DApp:
        out_ << " ";
        arg(n.args[0].body);
        out_ << " ";
        dim(n.dims[0]);
        return;
      default:
        break;
    }
    // Generic: leading dims, then arguments (binding ones in parentheses).
    for (const auto& d : n.dims) {
      out_ << " ";
      dim(d);
    }
    for (const auto& sc : n.args) {
      out_ << " ";
      if (sc.binders.empty()) {
        arg(sc.body);
      } else {
        scoped(sc, true);
      }
    }
  }

  std::ostringstream out_;
  std::vector<std::string> terms_, dims_;
  std::set<std::string> avoid_terms_, avoid_dims_;
};

}  // namespace

Term parse(std::string_view text) { return Parser(text).whole_term(); }

Dim parse_dim(std::string_view text) { return Parser(text).whole_dim(); }

EquationList parse_equations(std::string_view text) {
  std::string cleaned(text);
  for (auto& c : cleaned) {
    if (c == ',') c = ' ';
  }
  return Parser(cleaned).whole_equations();
}

std::string print(const Term& m) {
  Printer p(m);
  p.top(m);
  return p.str();
}

}  // namespace ccl
