#pragma once

#include <array>
#include <optional>

#include "braid3/laurent.hpp"

namespace braid3 {

// p = content * square^2 * squarefree, with content a positive rational,
// square a primitive integer polynomial whose lowest coefficient is positive,
// and squarefree a primitive integer polynomial free of repeated factors.
struct SquarefreeDecomposition {
  Rational content;
  QLaurent square;
  QLaurent squarefree;
};

SquarefreeDecomposition squarefree_decompose(const QLaurent& p);

// Exact square root in Q[t, t^-1], if one exists.  The result is normalized
// so its lowest-exponent coefficient is positive.
std::optional<QLaurent> poly_sqrt(const QLaurent& p);

// Reduced fraction of Laurent polynomials.  The denominator is an ordinary
// monic polynomial with nonzero constant term; gcd(num, den) = 1.
class RationalFunction {
 public:
  RationalFunction() : num_(QLaurent::zero(Var::t)), den_(QLaurent::constant(Var::t, 1)) {}
  RationalFunction(QLaurent num, QLaurent den);
  explicit RationalFunction(const QLaurent& num) : RationalFunction(num, QLaurent::constant(num.var(), 1)) {}

  static RationalFunction constant(Var v, const Rational& c) {
    return RationalFunction(QLaurent::constant(v, c));
  }

  const QLaurent& num() const { return num_; }
  const QLaurent& den() const { return den_; }
  Var var() const { return num_.var(); }

  bool is_zero() const { return num_.is_zero(); }

  // True when the denominator is trivial, i.e. the value lies in Q[t, t^-1].
  bool is_laurent() const { return den_.is_constant(); }
  QLaurent as_laurent() const;

  Rational eval(const Rational& x) const;

  friend RationalFunction operator+(const RationalFunction& x, const RationalFunction& y);
  friend RationalFunction operator-(const RationalFunction& x, const RationalFunction& y);
  friend RationalFunction operator*(const RationalFunction& x, const RationalFunction& y);
  friend RationalFunction operator/(const RationalFunction& x, const RationalFunction& y);
  RationalFunction operator-() const;
  friend bool operator==(const RationalFunction& x, const RationalFunction& y) {
    return x.num_ == y.num_ && x.den_ == y.den_;
  }
  friend bool operator!=(const RationalFunction& x, const RationalFunction& y) { return !(x == y); }

  std::string str() const;

 private:
  void normalize();
  QLaurent num_, den_;
};

// Solution shapes for small affine systems over Q(t).
struct AffineLine {
  std::array<RationalFunction, 4> base;
  std::array<RationalFunction, 4> direction;
  int freeCoordinate = 3;
};

struct LinearSolution {
  enum Kind { NoSolution, Unique, Line, Degenerate } kind = NoSolution;
  std::array<RationalFunction, 4> point{};  // for Unique
  std::optional<AffineLine> line;           // for Line
  int dimension = 0;                        // solution-space dimension (Degenerate: >= 2)
};

// Solve rows * x = rhs for x in Q(t)^4.  When several parametrizations of a
// one-dimensional solution set are possible, coordinate 3 is preferred as the
// free coordinate.
LinearSolution solve_affine(const std::vector<std::array<RationalFunction, 4>>& rows,
                            const std::vector<RationalFunction>& rhs);

}  // namespace braid3
