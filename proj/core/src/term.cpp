#include "meadow/term.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <sstream>

#include "meadow/numeric.hpp"

namespace meadow {

struct Term::Node {
  TermKind kind;
  std::string name;
  std::vector<Term> args;
  std::optional<std::uint64_t> numeral;
  bool closed = true;
  std::size_t hash = 0;
  std::size_t depth = 1;

  Node(TermKind k, std::string n, std::vector<Term> a) : kind(k), name(std::move(n)), args(std::move(a)) {}

  // Long numeral chains would otherwise unwind recursively.
  ~Node() {
    std::vector<std::shared_ptr<const Node>> pending;
    for (auto& a : args) pending.push_back(std::move(a.node_));
    while (!pending.empty()) {
      auto n = std::move(pending.back());
      pending.pop_back();
      if (n && n.use_count() == 1) {
        auto& owned = const_cast<Node&>(*n);
        for (auto& a : owned.args) pending.push_back(std::move(a.node_));
      }
    }
  }
};

Term Term::make(TermKind kind, std::string name, std::vector<Term> args) {
  auto node = std::make_shared<Node>(kind, std::move(name), std::move(args));
  std::size_t h = std::hash<int>{}(static_cast<int>(kind)) ^ (std::hash<std::string>{}(node->name) << 1);
  for (const auto& a : node->args) {
    h = h * 1099511628211ULL + a.hash();
    node->closed = node->closed && a.is_closed();
    node->depth = std::max(node->depth, a.depth() + 1);
  }
  if (kind == TermKind::Var) node->closed = false;
  node->hash = h;
  if (kind == TermKind::Zero) {
    node->numeral = 0;
  } else if (kind == TermKind::Add && node->args[1].kind() == TermKind::One) {
    if (auto k = node->args[0].numeral_value()) node->numeral = *k + 1;
  }
  return Term(std::move(node));
}

Term::Term() : Term(zero()) {}

Term Term::zero() {
  static const Term z = make(TermKind::Zero, {}, {});
  return z;
}
Term Term::one() {
  static const Term o = make(TermKind::One, {}, {});
  return o;
}
Term Term::var(std::string name) { return make(TermKind::Var, std::move(name), {}); }
Term Term::constant(std::string name) { return make(TermKind::Const, std::move(name), {}); }
Term Term::add(Term a, Term b) { return make(TermKind::Add, {}, {std::move(a), std::move(b)}); }
Term Term::neg(Term a) { return make(TermKind::Neg, {}, {std::move(a)}); }
Term Term::mul(Term a, Term b) { return make(TermKind::Mul, {}, {std::move(a), std::move(b)}); }
Term Term::inv(Term a) { return make(TermKind::Inv, {}, {std::move(a)}); }
Term Term::app(std::string symbol, std::vector<Term> args) {
  return make(TermKind::App, std::move(symbol), std::move(args));
}

TermKind Term::kind() const { return node_->kind; }
const std::string& Term::name() const { return node_->name; }
const std::vector<Term>& Term::args() const { return node_->args; }
std::optional<std::uint64_t> Term::numeral_value() const { return node_->numeral; }
bool Term::is_closed() const { return node_->closed; }
std::size_t Term::hash() const { return node_->hash; }
std::size_t Term::depth() const { return node_->depth; }

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.kind() != b.kind() || a.name() != b.name()) return false;
  if (a.numeral_value() || b.numeral_value()) return a.numeral_value() == b.numeral_value();
  return a.args() == b.args();
}

Signature Signature::standard() {
  Signature s;
  s.functions = {{"s", 1}, {"eq", 2}, {"sqrt", 1}};
  return s;
}

Signature Signature::with_constants(std::set<std::string> names) const {
  Signature s = *this;
  s.constants.insert(names.begin(), names.end());
  return s;
}

bool Signature::is_reserved(const std::string& ident) const {
  return ident == "inv" || ident == "const" || functions.count(ident) > 0;
}

ParseError::ParseError(const std::string& what, std::size_t line, std::size_t column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

Term numeral(std::uint64_t n) {
  Term t = Term::zero();
  for (std::uint64_t i = 0; i < n; ++i) t = Term::add(std::move(t), Term::one());
  return t;
}

Term sub(Term a, Term b) { return Term::add(std::move(a), Term::neg(std::move(b))); }
Term div(Term a, Term b) { return Term::mul(std::move(a), Term::inv(std::move(b))); }
Term one_of(Term t) { return Term::mul(t, Term::inv(t)); }
Term zero_of(Term t) { return Term::add(Term::one(), Term::neg(one_of(std::move(t)))); }

Term power(Term t, unsigned k) {
  if (k == 0) throw std::invalid_argument("power exponent must be positive");
  Term acc = t;
  for (unsigned i = 1; i < k; ++i) acc = Term::mul(std::move(acc), t);
  return acc;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

enum class Tok { Nat, Ident, Plus, Minus, Star, Slash, LParen, RParen, Comma, Equals, InvPow, Pow, OneOf, ZeroOf, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

class Lexer {
 public:
  Lexer(std::string_view src, std::size_t line) : src_(src), line_(line) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      const std::size_t col = pos_ + 1;
      if (pos_ >= src_.size()) {
        out.push_back({Tok::End, "", line_, col});
        return out;
      }
      const char c = src_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t end = pos_;
        while (end < src_.size() && std::isdigit(static_cast<unsigned char>(src_[end]))) ++end;
        std::string digits(src_.substr(pos_, end - pos_));
        if (src_.substr(end, 2) == "_(" && (digits == "0" || digits == "1")) {
          out.push_back({digits == "1" ? Tok::OneOf : Tok::ZeroOf, digits + "_(", line_, col});
          pos_ = end + 2;
          continue;
        }
        out.push_back({Tok::Nat, std::move(digits), line_, col});
        pos_ = end;
        continue;
      }
      if (std::isalpha(static_cast<unsigned char>(c))) {
        std::size_t end = pos_;
        while (end < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[end])) || src_[end] == '_')) {
          ++end;
        }
        out.push_back({Tok::Ident, std::string(src_.substr(pos_, end - pos_)), line_, col});
        pos_ = end;
        continue;
      }
      if (c == '^') {
        ++pos_;
        skip_space();
        if (pos_ < src_.size() && src_[pos_] == '-') {
          ++pos_;
          skip_space();
          if (pos_ < src_.size() && src_[pos_] == '1' &&
              (pos_ + 1 >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_ + 1])))) {
            ++pos_;
            out.push_back({Tok::InvPow, "^-1", line_, col});
            continue;
          }
          throw ParseError("only ^-1 is allowed as a negative exponent", line_, col);
        }
        std::size_t end = pos_;
        while (end < src_.size() && std::isdigit(static_cast<unsigned char>(src_[end]))) ++end;
        if (end == pos_) throw ParseError("expected exponent after '^'", line_, col);
        out.push_back({Tok::Pow, std::string(src_.substr(pos_, end - pos_)), line_, col});
        pos_ = end;
        continue;
      }
      Tok kind;
      switch (c) {
        case '+': kind = Tok::Plus; break;
        case '-': kind = Tok::Minus; break;
        case '*': kind = Tok::Star; break;
        case '/': kind = Tok::Slash; break;
        case '(': kind = Tok::LParen; break;
        case ')': kind = Tok::RParen; break;
        case ',': kind = Tok::Comma; break;
        case '=': kind = Tok::Equals; break;
        default: throw ParseError(std::string("unexpected character '") + c + "'", line_, col);
      }
      out.push_back({kind, std::string(1, c), line_, col});
      ++pos_;
    }
  }

 private:
  void skip_space() {
    while (pos_ < src_.size() && (src_[pos_] == ' ' || src_[pos_] == '\t' || src_[pos_] == '\r')) ++pos_;
  }
  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_;
};

class Parser {
 public:
  Parser(std::vector<Token> toks, const Signature& sig) : toks_(std::move(toks)), sig_(sig) {}

  Term term() { return sum(); }

  Equation equation() {
    Term lhs = sum();
    expect(Tok::Equals, "'='");
    Term rhs = sum();
    return {std::move(lhs), std::move(rhs)};
  }

  void finish() {
    if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  Token next() { return toks_[pos_++]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, peek().line, peek().column);
  }
  void expect(Tok k, const std::string& what) {
    if (!accept(k)) fail("expected " + what + (peek().kind == Tok::End ? " at end of input" : " before '" + peek().text + "'"));
  }

  Term sum() {
    Term acc = prod();
    while (true) {
      if (accept(Tok::Plus)) {
        acc = Term::add(std::move(acc), prod());
      } else if (accept(Tok::Minus)) {
        acc = sub(std::move(acc), prod());
      } else {
        return acc;
      }
    }
  }

  Term prod() {
    Term acc = unary();
    while (true) {
      if (accept(Tok::Star)) {
        acc = Term::mul(std::move(acc), unary());
      } else if (accept(Tok::Slash)) {
        acc = div(std::move(acc), unary());
      } else {
        return acc;
      }
    }
  }

  Term unary() {
    if (accept(Tok::Minus)) return Term::neg(unary());
    return postfix();
  }

  Term postfix() {
    Term t = atom();
    while (true) {
      if (accept(Tok::InvPow)) {
        t = Term::inv(std::move(t));
      } else if (peek().kind == Tok::Pow) {
        const Token tok = next();
        const auto k = parse_u64(tok.text);
        if (k == 0 || k > 64) throw ParseError("exponent must be between 1 and 64", tok.line, tok.column);
        t = power(std::move(t), static_cast<unsigned>(k));
      } else {
        return t;
      }
    }
  }

  Term atom() {
    const Token tok = next();
    switch (tok.kind) {
      case Tok::Nat: {
        if (tok.text.size() > 6 || parse_u64(tok.text) > kMaxNumeralLiteral) {
          throw ParseError("numeral literal exceeds " + std::to_string(kMaxNumeralLiteral), tok.line, tok.column);
        }
        const auto n = parse_u64(tok.text);
        if (n == 1) return Term::one();
        return numeral(n);
      }
      case Tok::OneOf: {
        Term inner = sum();
        expect(Tok::RParen, "')'");
        return one_of(std::move(inner));
      }
      case Tok::ZeroOf: {
        Term inner = sum();
        expect(Tok::RParen, "')'");
        return zero_of(std::move(inner));
      }
      case Tok::LParen: {
        Term inner = sum();
        expect(Tok::RParen, "')'");
        return inner;
      }
      case Tok::Ident:
        return identifier(tok);
      default:
        --pos_;
        fail(tok.kind == Tok::End ? "unexpected end of input" : "unexpected '" + tok.text + "'");
    }
  }

  Term identifier(const Token& tok) {
    if (peek().kind == Tok::LParen) {
      ++pos_;
      std::vector<Term> args;
      args.push_back(sum());
      while (accept(Tok::Comma)) args.push_back(sum());
      expect(Tok::RParen, "')'");
      if (tok.text == "inv") {
        if (args.size() != 1) throw ParseError("inv takes 1 argument", tok.line, tok.column);
        return Term::inv(std::move(args[0]));
      }
      auto it = sig_.functions.find(tok.text);
      if (it == sig_.functions.end()) throw ParseError("unknown function symbol '" + tok.text + "'", tok.line, tok.column);
      if (args.size() != it->second) {
        throw ParseError("'" + tok.text + "' takes " + std::to_string(it->second) + " argument(s), got " +
                             std::to_string(args.size()),
                         tok.line, tok.column);
      }
      return Term::app(tok.text, std::move(args));
    }
    if (sig_.is_reserved(tok.text)) {
      throw ParseError("'" + tok.text + "' is a function symbol and needs arguments", tok.line, tok.column);
    }
    if (sig_.constants.count(tok.text)) return Term::constant(tok.text);
    return Term::var(tok.text);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  const Signature& sig_;
};

}  // namespace

Term parse_term(std::string_view text, const Signature& sig) {
  Parser p(Lexer(text, 1).run(), sig);
  Term t = p.term();
  p.finish();
  return t;
}

Equation parse_equation(std::string_view text, const Signature& sig) {
  Parser p(Lexer(text, 1).run(), sig);
  Equation e = p.equation();
  p.finish();
  return e;
}

// ---------------------------------------------------------------------------
// Printer

namespace {

// Binding strength of the context a term is printed into.
enum Level { kSum = 0, kProd = 1, kUnary = 2, kPostfix = 3 };

void render(const Term& t, Level ctx, std::string& out);

void render_wrapped(Level own, Level ctx, std::string& out, const std::function<void()>& body) {
  const bool paren = own < ctx;
  if (paren) out += '(';
  body();
  if (paren) out += ')';
}

void render(const Term& t, Level ctx, std::string& out) {
  if (auto n = t.numeral_value(); n && *n >= 2) {
    out += std::to_string(*n);
    return;
  }
  switch (t.kind()) {
    case TermKind::Zero: out += '0'; return;
    case TermKind::One: out += '1'; return;
    case TermKind::Var:
    case TermKind::Const: out += t.name(); return;
    case TermKind::App:
      out += t.name();
      out += '(';
      for (std::size_t i = 0; i < t.args().size(); ++i) {
        if (i) out += ", ";
        render(t.arg(i), kSum, out);
      }
      out += ')';
      return;
    case TermKind::Add:
      render_wrapped(kSum, ctx, out, [&] {
        render(t.arg(0), kSum, out);
        if (t.arg(1).kind() == TermKind::Neg) {
          out += " - ";
          render(t.arg(1).arg(0), kProd, out);
        } else {
          out += " + ";
          render(t.arg(1), kProd, out);
        }
      });
      return;
    case TermKind::Mul:
      render_wrapped(kProd, ctx, out, [&] {
        render(t.arg(0), kProd, out);
        out += " * ";
        render(t.arg(1), kUnary, out);
      });
      return;
    case TermKind::Neg:
      render_wrapped(kUnary, ctx, out, [&] {
        out += '-';
        render(t.arg(0), kUnary, out);
      });
      return;
    case TermKind::Inv:
      render(t.arg(0), kPostfix, out);
      out += "^-1";
      return;
  }
}

}  // namespace

std::string to_string(const Term& t) {
  std::string out;
  render(t, kSum, out);
  return out;
}

std::string to_string(const Equation& e) { return to_string(e.lhs) + " = " + to_string(e.rhs); }

// ---------------------------------------------------------------------------

Term substitute(const Term& t, const std::map<std::string, Term>& env) {
  if (t.is_closed()) return t;
  switch (t.kind()) {
    case TermKind::Var: {
      auto it = env.find(t.name());
      return it == env.end() ? t : it->second;
    }
    case TermKind::Add: return Term::add(substitute(t.arg(0), env), substitute(t.arg(1), env));
    case TermKind::Mul: return Term::mul(substitute(t.arg(0), env), substitute(t.arg(1), env));
    case TermKind::Neg: return Term::neg(substitute(t.arg(0), env));
    case TermKind::Inv: return Term::inv(substitute(t.arg(0), env));
    case TermKind::App: {
      std::vector<Term> args;
      args.reserve(t.args().size());
      for (const auto& a : t.args()) args.push_back(substitute(a, env));
      return Term::app(t.name(), std::move(args));
    }
    default: return t;
  }
}

Equation substitute(const Equation& e, const std::map<std::string, Term>& env) {
  return {substitute(e.lhs, env), substitute(e.rhs, env)};
}

namespace {
void collect(const Term& t, TermKind kind, std::set<std::string>& out) {
  if (kind == TermKind::Var && t.is_closed()) return;
  if (t.numeral_value()) return;
  if (t.kind() == kind) out.insert(t.name());
  for (const auto& a : t.args()) collect(a, kind, out);
}
}  // namespace

std::set<std::string> free_vars(const Term& t) {
  std::set<std::string> out;
  collect(t, TermKind::Var, out);
  return out;
}

std::set<std::string> free_vars(const Equation& e) {
  auto out = free_vars(e.lhs);
  auto r = free_vars(e.rhs);
  out.insert(r.begin(), r.end());
  return out;
}

std::set<std::string> constants_of(const Term& t) {
  std::set<std::string> out;
  collect(t, TermKind::Const, out);
  return out;
}

EquationFile parse_equation_file(std::string_view text, const Signature& sig) {
  EquationFile file;
  Signature local = sig;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.front()))) line.remove_prefix(1);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.remove_suffix(1);
    if (line.empty()) continue;
    if (line.substr(0, 6) == "const " || line == "const") {
      std::string rest(line.substr(5));
      std::replace(rest.begin(), rest.end(), ',', ' ');
      std::istringstream names(rest);
      std::string name;
      bool any = false;
      while (names >> name) {
        const bool ident = std::isalpha(static_cast<unsigned char>(name[0])) &&
                           std::all_of(name.begin(), name.end(), [](char c) {
                             return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
                           });
        if (!ident || local.is_reserved(name)) throw ParseError("invalid constant name '" + name + "'", line_no, 1);
        local.constants.insert(name);
        file.constants.push_back(name);
        any = true;
      }
      if (!any) throw ParseError("const declaration without names", line_no, 1);
      continue;
    }
    Parser p(Lexer(line, line_no).run(), local);
    file.equations.push_back(p.equation());
    p.finish();
  }
  return file;
}

EquationFile load_equation_file(const std::string& path, const Signature& sig) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open equation file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_equation_file(buf.str(), sig);
}

// ---------------------------------------------------------------------------

namespace theories {

namespace {
Theory from_text(std::string name, std::initializer_list<std::pair<const char*, const char*>> rows) {
  Theory th{std::move(name), {}, std::nullopt};
  for (const auto& [label, text] : rows) th.equations.push_back({label, parse_equation(text)});
  return th;
}
}  // namespace

Theory md() {
  return from_text("Md", {
                             {"(1)", "(x + y) + z = x + (y + z)"},
                             {"(2)", "x + y = y + x"},
                             {"(3)", "x + 0 = x"},
                             {"(4)", "x + -x = 0"},
                             {"(5)", "(x * y) * z = x * (y * z)"},
                             {"(6)", "x * y = y * x"},
                             {"(7)", "1 * x = x"},
                             {"(8)", "x * (y + z) = x * y + x * z"},
                             {"(9)", "x^-1^-1 = x"},
                             {"(10)", "x * (x * x^-1) = x"},
                         });
}

Theory inv_p(std::uint64_t bound) {
  Theory th{"Inv_P", {}, bound};
  for (auto p : primes_up_to(bound)) {
    th.equations.push_back({"p=" + std::to_string(p), {one_of(numeral(p)), Term::one()}});
  }
  return th;
}

Theory signs() {
  return from_text("Signs", {
                                {"S1", "s(1_(x)) = 1_(x)"},
                                {"S2", "s(0_(x)) = 0_(x)"},
                                {"S3", "s(-1) = -1"},
                                {"S4", "s(x^-1) = s(x)"},
                                {"S5", "s(x * y) = s(x) * s(y)"},
                                {"S6", "0_(s(x) - s(y)) * (s(x + y) - s(x)) = 0"},
                            });
}

Theory efr(std::uint64_t max_n) {
  Theory th{"EFR", {}, max_n};
  for (std::uint64_t n = 0; n <= max_n; ++n) {
    Term squares = Term::mul(Term::var("x0"), Term::var("x0"));
    for (std::uint64_t i = 1; i <= n; ++i) {
      const auto xi = Term::var("x" + std::to_string(i));
      squares = Term::add(std::move(squares), Term::mul(xi, xi));
    }
    th.equations.push_back({"n=" + std::to_string(n), {Term::mul(zero_of(squares), Term::var("x0")), Term::zero()}});
  }
  return th;
}

Theory sr() {
  return from_text("SR", {
                             {"SR1", "sqrt(x^-1) = sqrt(x)^-1"},
                             {"SR2", "sqrt(x * y) = sqrt(x) * sqrt(y)"},
                             {"SR3", "sqrt(x * x * s(x)) = x"},
                             {"SR4", "s(sqrt(x) - sqrt(y)) = s(x - y)"},
                         });
}

std::optional<Theory> by_name(std::string_view name) {
  if (name == "md") return md();
  if (name == "signs") return signs();
  if (name == "sr") return sr();
  if (name.substr(0, 4) == "inv:") return inv_p(parse_u64(name.substr(4)));
  if (name.substr(0, 4) == "efr:") return efr(parse_u64(name.substr(4)));
  return std::nullopt;
}

}  // namespace theories

}  // namespace meadow
