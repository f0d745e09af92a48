#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace braid3 {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Formal variable of a Laurent polynomial.  `u` is shorthand for -t,
// `A` is the bracket variable, `q` satisfies q^2 = t.
enum class Var : unsigned char { t, u, A, q };

inline const char* var_name(Var v) {
  switch (v) {
    case Var::t: return "t";
    case Var::u: return "u";
    case Var::A: return "A";
    case Var::q: return "q";
  }
  return "?";
}

// Laurent polynomial with exact coefficients, stored densely as a
// coefficient vector plus the exponent of its first entry.
template <typename C>
class LaurentPoly {
 public:
  explicit LaurentPoly(Var v = Var::t) : var_(v) {}

  static LaurentPoly zero(Var v) { return LaurentPoly(v); }

  static LaurentPoly constant(Var v, C c) { return term(v, 0, std::move(c)); }

  static LaurentPoly term(Var v, int exp, C c) {
    LaurentPoly p(v);
    if (c != 0) {
      p.min_ = exp;
      p.coef_.push_back(std::move(c));
    }
    return p;
  }

  Var var() const { return var_; }
  bool is_zero() const { return coef_.empty(); }

  bool is_constant() const {
    return coef_.empty() || (coef_.size() == 1 && min_ == 0);
  }

  C constant_value() const {
    if (coef_.empty()) return C(0);
    if (!is_constant()) throw std::domain_error("polynomial is not constant");
    return coef_[0];
  }

  int min_exp() const {
    require_nonzero();
    return min_;
  }

  int max_exp() const {
    require_nonzero();
    return min_ + static_cast<int>(coef_.size()) - 1;
  }

  // max_exp - min_exp; 0 for monomials and for the zero polynomial.
  int span() const { return coef_.empty() ? 0 : max_exp() - min_exp(); }

  C coeff(int e) const {
    if (coef_.empty() || e < min_ || e > min_ + static_cast<int>(coef_.size()) - 1)
      return C(0);
    return coef_[static_cast<size_t>(e - min_)];
  }

  // Number of nonzero terms.
  size_t term_count() const {
    size_t n = 0;
    for (const auto& c : coef_)
      if (c != 0) ++n;
    return n;
  }

  std::vector<std::pair<int, C>> terms() const {
    std::vector<std::pair<int, C>> out;
    for (size_t i = 0; i < coef_.size(); ++i)
      if (coef_[i] != 0) out.emplace_back(min_ + static_cast<int>(i), coef_[i]);
    return out;
  }

  friend bool operator==(const LaurentPoly& x, const LaurentPoly& y) {
    if (x.coef_.empty() && y.coef_.empty()) return true;
    return x.var_ == y.var_ && x.min_ == y.min_ && x.coef_ == y.coef_;
  }
  friend bool operator!=(const LaurentPoly& x, const LaurentPoly& y) { return !(x == y); }

  LaurentPoly operator-() const {
    LaurentPoly r = *this;
    for (auto& c : r.coef_) c = -c;
    return r;
  }

  friend LaurentPoly operator+(const LaurentPoly& x, const LaurentPoly& y) {
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    check_vars(x, y);
    int lo = std::min(x.min_, y.min_);
    int hi = std::max(x.max_exp(), y.max_exp());
    LaurentPoly r(x.var_);
    r.min_ = lo;
    r.coef_.assign(static_cast<size_t>(hi - lo + 1), C(0));
    for (size_t i = 0; i < x.coef_.size(); ++i)
      r.coef_[static_cast<size_t>(x.min_ - lo) + i] += x.coef_[i];
    for (size_t i = 0; i < y.coef_.size(); ++i)
      r.coef_[static_cast<size_t>(y.min_ - lo) + i] += y.coef_[i];
    r.trim();
    return r;
  }

  friend LaurentPoly operator-(const LaurentPoly& x, const LaurentPoly& y) { return x + (-y); }

  friend LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y) {
    if (x.is_zero()) return LaurentPoly(x.var_);
    if (y.is_zero()) return LaurentPoly(y.var_);
    check_vars(x, y);
    LaurentPoly r(x.var_);
    r.min_ = x.min_ + y.min_;
    r.coef_.assign(x.coef_.size() + y.coef_.size() - 1, C(0));
    // iterate over the sparser factor first
    const LaurentPoly& s = x.term_count() <= y.term_count() ? x : y;
    const LaurentPoly& l = (&s == &x) ? y : x;
    for (size_t i = 0; i < s.coef_.size(); ++i) {
      if (s.coef_[i] == 0) continue;
      for (size_t j = 0; j < l.coef_.size(); ++j) {
        if (l.coef_[j] == 0) continue;
        r.coef_[i + j] += s.coef_[i] * l.coef_[j];
      }
    }
    r.trim();
    return r;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  LaurentPoly pow(int n) const {
    if (n == 0) return constant(var_, C(1));
    if (n < 0) {
      // invertible only for units +-x^k
      if (coef_.size() != 1 || (coef_[0] != 1 && coef_[0] != -1))
        throw std::domain_error("negative power of a non-unit");
      LaurentPoly inv = term(var_, -min_, coef_[0]);
      return inv.pow(-n);
    }
    LaurentPoly r = constant(var_, C(1));
    LaurentPoly b = *this;
    int e = n;
    while (e > 0) {
      if (e & 1) r *= b;
      b *= b;
      e >>= 1;
    }
    return r;
  }

  LaurentPoly shifted(int k) const {
    LaurentPoly r = *this;
    r.min_ += k;
    return r;
  }

  // Exact evaluation at a nonzero rational point.
  Rational eval(const Rational& x) const {
    if (x == 0) throw std::domain_error("evaluation at 0 of a Laurent polynomial");
    Rational acc = 0;
    // Horner on the ordinary part, then multiply by x^min.
    for (size_t i = coef_.size(); i-- > 0;) acc = acc * x + Rational(coef_[i]);
    return acc * pow_rational(x, min_);
  }

  static Rational pow_rational(const Rational& x, int e) {
    if (e == 0) return 1;
    Rational b = e > 0 ? x : Rational(1) / x;
    int m = e > 0 ? e : -e;
    Rational r = 1;
    while (m > 0) {
      if (m & 1) r *= b;
      b *= b;
      m >>= 1;
    }
    return r;
  }

  // Substitute u = -t in either direction (the map is an involution on
  // exponents, flipping the sign of odd-degree coefficients).
  LaurentPoly with_negated_variable(Var newVar) const {
    LaurentPoly r(newVar);
    r.min_ = min_;
    r.coef_ = coef_;
    for (size_t i = 0; i < r.coef_.size(); ++i) {
      int e = min_ + static_cast<int>(i);
      if (e & 1) r.coef_[i] = -r.coef_[i];
    }
    r.trim();
    return r;
  }

  // Substitute t = q^2: exponents double, variable retagged.
  LaurentPoly with_doubled_exponents(Var newVar) const {
    LaurentPoly r(newVar);
    if (coef_.empty()) return r;
    r.min_ = 2 * min_;
    r.coef_.assign(2 * coef_.size() - 1, C(0));
    for (size_t i = 0; i < coef_.size(); ++i) r.coef_[2 * i] = coef_[i];
    return r;
  }

  LaurentPoly retagged(Var newVar) const {
    LaurentPoly r = *this;
    r.var_ = newVar;
    return r;
  }

  template <typename D>
  LaurentPoly<D> convert() const {
    LaurentPoly<D> r(var_);
    for (const auto& [e, c] : terms()) r += LaurentPoly<D>::term(var_, e, D(c));
    return r;
  }

  std::string str() const {
    if (coef_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms()) {
      C mag = c;
      if (first) {
        if (c < 0) {
          os << "-";
          mag = -c;
        }
        first = false;
      } else {
        os << (c < 0 ? " - " : " + ");
        if (c < 0) mag = -c;
      }
      if (e == 0) {
        os << mag;
      } else {
        os << mag << "*" << var_name(var_) << "^" << e;
      }
    }
    return os.str();
  }

 private:
  void require_nonzero() const {
    if (coef_.empty()) throw std::domain_error("zero polynomial has no degree");
  }

  static void check_vars(const LaurentPoly& x, const LaurentPoly& y) {
    if (x.var_ != y.var_) throw std::invalid_argument("mixed polynomial variables");
  }

  void trim() {
    size_t lo = 0;
    while (lo < coef_.size() && coef_[lo] == 0) ++lo;
    size_t hi = coef_.size();
    while (hi > lo && coef_[hi - 1] == 0) --hi;
    if (lo == hi) {
      coef_.clear();
      min_ = 0;
      return;
    }
    if (lo > 0 || hi < coef_.size()) {
      std::vector<C> kept(coef_.begin() + static_cast<long>(lo), coef_.begin() + static_cast<long>(hi));
      coef_ = std::move(kept);
      min_ += static_cast<int>(lo);
    }
  }

  Var var_;
  int min_ = 0;
  std::vector<C> coef_;
};

using ZLaurent = LaurentPoly<Integer>;
using QLaurent = LaurentPoly<Rational>;

inline QLaurent to_rational_poly(const ZLaurent& p) { return p.template convert<Rational>(); }

// (-x)^e as an integer Laurent polynomial in the given variable.
inline ZLaurent neg_var_power(Var v, int e) {
  return ZLaurent::term(v, e, (e % 2 == 0) ? Integer(1) : Integer(-1));
}

}  // namespace braid3
