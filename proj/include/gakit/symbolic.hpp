#pragma once
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gakit/rational.hpp"

namespace gakit {

class RationalExpr;

// Interned symbols plus the registry of square-root atoms. An atom is a
// fresh symbol standing for sqrt(inner); CSE and evaluation treat it as an
// opaque leaf whose definition lives here.
class SymbolTable {
public:
  uint32_t intern(std::string_view name);
  std::optional<uint32_t> find(std::string_view name) const;
  const std::string& name(uint32_t id) const;
  size_t size() const;

  uint32_t sqrt_atom(const RationalExpr& inner);
  bool is_atom(uint32_t id) const;
  const RationalExpr& atom_inner(uint32_t id) const;

private:
  mutable std::mutex mu_;
  std::vector<std::string> names_;
  std::map<std::string, uint32_t, std::less<>> ids_;
  std::map<uint32_t, std::shared_ptr<const RationalExpr>> atoms_;
  std::map<std::string, uint32_t> atom_by_form_;
};

// Sorted (symbol, exponent) pairs, exponents positive. The empty monomial is
// the constant term.
using Monomial = std::vector<std::pair<uint32_t, uint32_t>>;

int compare_monomials(const Monomial& a, const Monomial& b); // graded lex; <0, 0, >0

struct MonomialDescending {
  bool operator()(const Monomial& a, const Monomial& b) const { return compare_monomials(a, b) > 0; }
};

// Exact multivariate polynomial in canonical form: descending graded-lex term
// order, no zero coefficients stored.
class Polynomial {
public:
  using TermMap = std::map<Monomial, Rational, MonomialDescending>;

  Polynomial() = default;
  explicit Polynomial(Rational c);
  static Polynomial symbol(uint32_t id);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  std::optional<Rational> as_constant() const;
  size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial scaled(const Rational& c) const;

  bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

  // gcd of coefficient numerators over gcd of denominators; 0 for the zero
  // polynomial. Always nonnegative.
  Rational content() const;
  // Sign of the leading (first in descending order) coefficient.
  int leading_sign() const;

  template <class Num, class Getter>
  Num eval(const Getter& value_of) const {
    Num acc = Num(0);
    for (const auto& [mono, coef] : terms_) {
      Num term = Num(coef);
      for (const auto& [sym, exp] : mono) {
        Num v = value_of(sym);
        for (uint32_t e = 0; e < exp; ++e) term = term * v;
      }
      acc = acc + term;
    }
    return acc;
  }

  std::string to_string(const SymbolTable& symbols) const;
  std::string dump() const; // stable form used for atom identity

  void add_term(Monomial mono, Rational coef); // accumulates, drops zeros

private:
  TermMap terms_;
};

// A quotient of polynomials, normalized by joint integer content and by the
// sign of the denominator's leading coefficient. Square roots appear only as
// atom symbols (see SymbolTable).
class RationalExpr {
public:
  RationalExpr() : num_(), den_(Rational(1)) {}
  explicit RationalExpr(Rational c) : num_(std::move(c)), den_(Rational(1)) { normalize(); }
  static RationalExpr symbol(uint32_t id) { return RationalExpr(Polynomial::symbol(id), Polynomial(Rational(1))); }
  RationalExpr(Polynomial num, Polynomial den);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool den_is_one() const { return den_.is_one(); }
  std::optional<Rational> as_constant() const;

  RationalExpr operator+(const RationalExpr& o) const;
  RationalExpr operator-(const RationalExpr& o) const;
  RationalExpr operator*(const RationalExpr& o) const;
  RationalExpr operator/(const RationalExpr& o) const;
  RationalExpr operator-() const;
  RationalExpr scaled(const Rational& c) const;
  RationalExpr sqrt(SymbolTable& symbols) const;

  bool operator==(const RationalExpr& o) const { return num_ == o.num_ && den_ == o.den_; }

  // Exact evaluation resolving atoms recursively through the table; the
  // getter supplies base-symbol values. Perfect-square atoms only.
  Rational eval_exact(const SymbolTable& symbols, const std::function<Rational(uint32_t)>& value_of) const;
  double eval_double(const SymbolTable& symbols, const std::function<double(uint32_t)>& value_of) const;

  std::string to_string(const SymbolTable& symbols) const;
  std::string dump() const;

private:
  void normalize();
  Polynomial num_;
  Polynomial den_;
};

} // namespace gakit
