#ifndef MEADOW_TERM_HPP
#define MEADOW_TERM_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace meadow {

enum class TermKind { Zero, One, Var, Const, Add, Neg, Mul, Inv, App };

/// Immutable meadow term over {0, 1, +, -, *, ^-1}, variables, named
/// constants and declared function symbols. Cheap to copy (shared nodes).
class Term {
 public:
  /// The constant 0.
  Term();
  static Term zero();
  static Term one();
  static Term var(std::string name);
  static Term constant(std::string name);
  static Term add(Term a, Term b);
  static Term neg(Term a);
  static Term mul(Term a, Term b);
  static Term inv(Term a);
  static Term app(std::string symbol, std::vector<Term> args);

  TermKind kind() const;
  /// Variable, constant or function symbol name; empty otherwise.
  const std::string& name() const;
  const std::vector<Term>& args() const;
  const Term& arg(std::size_t i) const { return args().at(i); }

  /// n when this term is syntactically the numeral n (0, 0+1, (0+1)+1, ...).
  std::optional<std::uint64_t> numeral_value() const;
  bool is_closed() const;  // no variables
  std::size_t hash() const;
  std::size_t depth() const;

  friend bool operator==(const Term& a, const Term& b);
  friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Term make(TermKind kind, std::string name, std::vector<Term> args);
  std::shared_ptr<const Node> node_;
};

struct Equation {
  Term lhs;
  Term rhs;
  friend bool operator==(const Equation&, const Equation&) = default;
};

/// Declared extra function symbols (name -> arity) and constant names.
struct Signature {
  std::map<std::string, unsigned> functions;
  std::set<std::string> constants;

  /// s (unary), eq (binary) and sqrt (unary); no constants.
  static Signature standard();
  Signature with_constants(std::set<std::string> names) const;
  bool is_reserved(const std::string& ident) const;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Largest decimal literal the parser expands into a numeral.
inline constexpr std::uint64_t kMaxNumeralLiteral = 100000;

/// 0 for n = 0, numeral(n - 1) + 1 otherwise.
Term numeral(std::uint64_t n);
Term sub(Term a, Term b);  // a + (-b)
Term div(Term a, Term b);  // a * b^-1
Term one_of(Term t);       // t * t^-1
Term zero_of(Term t);      // 1 + -(t * t^-1)
Term power(Term t, unsigned k);  // left-folded product, k >= 1

Term parse_term(std::string_view text, const Signature& sig = Signature::standard());
Equation parse_equation(std::string_view text, const Signature& sig = Signature::standard());

std::string to_string(const Term& t);
std::string to_string(const Equation& e);

/// Simultaneous, capture-free replacement of variables; constants untouched.
Term substitute(const Term& t, const std::map<std::string, Term>& env);
Equation substitute(const Equation& e, const std::map<std::string, Term>& env);

std::set<std::string> free_vars(const Term& t);
std::set<std::string> free_vars(const Equation& e);
std::set<std::string> constants_of(const Term& t);

/// One `lhs = rhs` per line, `#` comments, and `const a, b` declarations.
struct EquationFile {
  std::vector<std::string> constants;
  std::vector<Equation> equations;
};
EquationFile parse_equation_file(std::string_view text, const Signature& sig = Signature::standard());
EquationFile load_equation_file(const std::string& path, const Signature& sig = Signature::standard());

struct NamedEquation {
  std::string label;
  Equation equation;
};

/// A finite list of equations, possibly instantiated from a bounded
/// parametric family.
struct Theory {
  std::string name;
  std::vector<NamedEquation> equations;
  std::optional<std::uint64_t> bound;
};

namespace theories {
/// The ten meadow axioms.
Theory md();
/// p * p^-1 = 1 for every prime p <= bound.
Theory inv_p(std::uint64_t bound);
/// S1-S6 for the sign function s.
Theory signs();
/// 0_(x0^2 + ... + xn^2) * x0 = 0 for n = 0..max_n.
Theory efr(std::uint64_t max_n);
/// Signed square root axioms; display only.
Theory sr();
/// Resolves `md`, `inv:<B>`, `signs`, `efr:<N>`, `sr`.
std::optional<Theory> by_name(std::string_view name);
}  // namespace theories

}  // namespace meadow

template <>
struct std::hash<meadow::Term> {
  std::size_t operator()(const meadow::Term& t) const noexcept { return t.hash(); }
};

#endif  // MEADOW_TERM_HPP
