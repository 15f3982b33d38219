#include "gakit/symbolic.hpp"

#include <algorithm>
#include <sstream>

namespace gakit {

// ---------------------------------------------------------------------------
// SymbolTable

uint32_t SymbolTable::intern(std::string_view name) {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = ids_.find(name);
  if (it != ids_.end()) return it->second;
  uint32_t id = static_cast<uint32_t>(names_.size());
  names_.emplace_back(name);
  ids_.emplace(std::string(name), id);
  return id;
}

std::optional<uint32_t> SymbolTable::find(std::string_view name) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = ids_.find(name);
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

const std::string& SymbolTable::name(uint32_t id) const {
  std::lock_guard<std::mutex> lock(mu_);
  return names_.at(id);
}

size_t SymbolTable::size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return names_.size();
}

uint32_t SymbolTable::sqrt_atom(const RationalExpr& inner) {
  std::string form = inner.dump();
  std::lock_guard<std::mutex> lock(mu_);
  auto it = atom_by_form_.find(form);
  if (it != atom_by_form_.end()) return it->second;
  uint32_t id = static_cast<uint32_t>(names_.size());
  std::string name = "#sqrt" + std::to_string(atom_by_form_.size());
  names_.push_back(name);
  ids_.emplace(std::move(name), id);
  atoms_.emplace(id, std::make_shared<RationalExpr>(inner));
  atom_by_form_.emplace(std::move(form), id);
  return id;
}

bool SymbolTable::is_atom(uint32_t id) const {
  std::lock_guard<std::mutex> lock(mu_);
  return atoms_.count(id) != 0;
}

const RationalExpr& SymbolTable::atom_inner(uint32_t id) const {
  std::lock_guard<std::mutex> lock(mu_);
  return *atoms_.at(id);
}

// ---------------------------------------------------------------------------
// Monomials

int compare_monomials(const Monomial& a, const Monomial& b) {
  auto degree = [](const Monomial& m) {
    uint64_t d = 0;
    for (const auto& [sym, exp] : m) d += exp;
    return d;
  };
  uint64_t da = degree(a), db = degree(b);
  if (da != db) return da < db ? -1 : 1;
  // Lexicographic with lower symbol ids more significant: at the earliest
  // symbol where exponents differ, the larger exponent wins.
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first != b[j].first) return a[i].first < b[j].first ? 1 : -1;
    if (a[i].second != b[j].second) return a[i].second > b[j].second ? 1 : -1;
    ++i, ++j;
  }
  if (i < a.size()) return 1;
  if (j < b.size()) return -1;
  return 0;
}

namespace {

Monomial merge_monomials(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first == b[j].first) {
      out.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i, ++j;
    } else if (a[i].first < b[j].first) {
      out.push_back(a[i++]);
    } else {
      out.push_back(b[j++]);
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back(b[j]);
  return out;
}

} // namespace

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(Rational c) {
  if (c != 0) terms_.emplace(Monomial{}, std::move(c));
}

Polynomial Polynomial::symbol(uint32_t id) {
  Polynomial p;
  p.terms_.emplace(Monomial{{id, 1}}, Rational(1));
  return p;
}

bool Polynomial::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first.empty() && terms_.begin()->second == 1;
}

std::optional<Rational> Polynomial::as_constant() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_.begin()->first.empty()) return terms_.begin()->second;
  return std::nullopt;
}

void Polynomial::add_term(Monomial mono, Rational coef) {
  if (coef == 0) return;
  auto [it, inserted] = terms_.emplace(std::move(mono), coef);
  if (!inserted) {
    it->second += coef;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial out = *this;
  for (const auto& [mono, coef] : o.terms_) out.add_term(mono, coef);
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial out = *this;
  for (const auto& [mono, coef] : o.terms_) out.add_term(mono, -coef);
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial out;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) out.add_term(merge_monomials(ma, mb), ca * cb);
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out;
  for (const auto& [mono, coef] : terms_) out.terms_.emplace(mono, -coef);
  return out;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  Polynomial out;
  if (c == 0) return out;
  for (const auto& [mono, coef] : terms_) out.terms_.emplace(mono, coef * c);
  return out;
}

Rational Polynomial::content() const {
  BigInt num_gcd = 0, den_gcd = 0;
  for (const auto& [mono, coef] : terms_) {
    num_gcd = boost::multiprecision::gcd(num_gcd, boost::multiprecision::numerator(coef));
    den_gcd = boost::multiprecision::gcd(den_gcd, boost::multiprecision::denominator(coef));
  }
  if (num_gcd == 0) return Rational(0);
  return Rational(num_gcd, den_gcd);
}

int Polynomial::leading_sign() const {
  if (terms_.empty()) return 0;
  return terms_.begin()->second < 0 ? -1 : 1;
}

std::string Polynomial::to_string(const SymbolTable& symbols) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mono, coef] : terms_) {
    Rational c = coef;
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    bool need_star = false;
    if (mono.empty() || c != 1) {
      os << rational_to_string(c);
      need_star = true;
    }
    for (const auto& [sym, exp] : mono) {
      if (need_star) os << "*";
      need_star = true;
      if (symbols.is_atom(sym))
        os << "sqrt(" << symbols.atom_inner(sym).to_string(symbols) << ")";
      else
        os << symbols.name(sym);
      if (exp > 1) os << "**" << exp;
    }
  }
  return os.str();
}

std::string Polynomial::dump() const {
  std::ostringstream os;
  for (const auto& [mono, coef] : terms_) {
    os << "(" << rational_to_string(coef) << ")";
    for (const auto& [sym, exp] : mono) os << "s" << sym << "^" << exp;
    os << ";";
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// RationalExpr

RationalExpr::RationalExpr(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) fail(ErrorCode::DomainError, "division by identically-zero expression");
  normalize();
}

void RationalExpr::normalize() {
  if (num_.is_zero()) {
    den_ = Polynomial(Rational(1));
    return;
  }
  if (!den_.is_one()) {
    // Joint integer-content and sign normalization.
    Rational scale = boost::multiprecision::gcd(num_.content(), den_.content());
    if (den_.leading_sign() < 0) scale = -scale;
    if (scale != 1) {
      Rational inv = Rational(1) / scale;
      num_ = num_.scaled(inv);
      den_ = den_.scaled(inv);
    }
    // Syntactic proportionality: num = c * den collapses the quotient.
    if (num_.term_count() == den_.term_count()) {
      auto itn = num_.terms().begin();
      auto itd = den_.terms().begin();
      Rational ratio = itn->second / itd->second;
      bool proportional = true;
      for (; itn != num_.terms().end(); ++itn, ++itd) {
        if (itn->first != itd->first || itn->second != itd->second * ratio) {
          proportional = false;
          break;
        }
      }
      if (proportional) {
        num_ = Polynomial(ratio);
        den_ = Polynomial(Rational(1));
      }
    }
  }
}

std::optional<Rational> RationalExpr::as_constant() const {
  if (!den_.is_one()) return std::nullopt;
  return num_.as_constant();
}

RationalExpr RationalExpr::operator+(const RationalExpr& o) const {
  if (den_ == o.den_) return RationalExpr(num_ + o.num_, den_);
  return RationalExpr(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalExpr RationalExpr::operator-(const RationalExpr& o) const {
  if (den_ == o.den_) return RationalExpr(num_ - o.num_, den_);
  return RationalExpr(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalExpr RationalExpr::operator*(const RationalExpr& o) const {
  return RationalExpr(num_ * o.num_, den_ * o.den_);
}

RationalExpr RationalExpr::operator/(const RationalExpr& o) const {
  if (o.num_.is_zero()) fail(ErrorCode::DomainError, "division by identically-zero expression");
  return RationalExpr(num_ * o.den_, den_ * o.num_);
}

RationalExpr RationalExpr::operator-() const { return RationalExpr(-num_, den_); }

RationalExpr RationalExpr::scaled(const Rational& c) const {
  if (c == 0) return RationalExpr();
  return RationalExpr(num_.scaled(c), den_);
}

RationalExpr RationalExpr::sqrt(SymbolTable& symbols) const {
  if (is_zero()) return RationalExpr();
  if (auto c = as_constant()) {
    if (*c == 1) return RationalExpr(Rational(1));
  }
  return RationalExpr::symbol(symbols.sqrt_atom(*this));
}

Rational RationalExpr::eval_exact(const SymbolTable& symbols,
                                  const std::function<Rational(uint32_t)>& value_of) const {
  std::function<Rational(uint32_t)> resolve = [&](uint32_t sym) -> Rational {
    if (symbols.is_atom(sym)) {
      Rational inner = symbols.atom_inner(sym).eval_exact(symbols, value_of);
      auto root = rational_sqrt(inner);
      if (!root) fail(ErrorCode::DomainError, "exact evaluation of sqrt atom on a non-perfect-square");
      return *root;
    }
    return value_of(sym);
  };
  Rational n = num_.eval<Rational>(resolve);
  Rational d = den_.eval<Rational>(resolve);
  if (d == 0) fail(ErrorCode::DomainError, "denominator evaluated to zero");
  return n / d;
}

double RationalExpr::eval_double(const SymbolTable& symbols,
                                 const std::function<double(uint32_t)>& value_of) const {
  struct D {
    double v;
    D(double x) : v(x) {}
    D(const Rational& r) : v(to_double(r)) {}
    D operator+(D o) const { return D(v + o.v); }
    D operator*(D o) const { return D(v * o.v); }
  };
  std::function<D(uint32_t)> resolve = [&](uint32_t sym) -> D {
    if (symbols.is_atom(sym)) return D(std::sqrt(symbols.atom_inner(sym).eval_double(symbols, value_of)));
    return D(value_of(sym));
  };
  double n = num_.eval<D>(resolve).v;
  double d = den_.eval<D>(resolve).v;
  return n / d;
}

std::string RationalExpr::to_string(const SymbolTable& symbols) const {
  if (den_.is_one()) return num_.to_string(symbols);
  std::string n = num_.to_string(symbols);
  std::string d = den_.to_string(symbols);
  return "(" + n + ") / (" + d + ")";
}

std::string RationalExpr::dump() const { return "n:" + num_.dump() + "|d:" + den_.dump(); }

} // namespace gakit
