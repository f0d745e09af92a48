#include "braid3/algebra.hpp"

#include <boost/multiprecision/integer.hpp>

namespace braid3 {

namespace {

// Ordinary polynomials over Q, dense, index = exponent.
using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int deg(const Poly& p) { return static_cast<int>(p.size()) - 1; }  // -1 for zero

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

Poly scale(Poly p, const Rational& c) {
  for (auto& x : p) x *= c;
  trim(p);
  return p;
}

Poly sub(const Poly& a, const Poly& b) {
  Poly r = a;
  if (b.size() > r.size()) r.resize(b.size(), Rational(0));
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

// Division with remainder; requires b nonzero.
std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
  Poly q;
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rational(0));
  while (!a.empty() && a.size() >= b.size()) {
    Rational c = a.back() / b.back();
    size_t shift = a.size() - b.size();
    q[shift] = c;
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    trim(a);
  }
  trim(q);
  return {q, a};
}

Poly monic(Poly p) {
  trim(p);
  if (p.empty()) return p;
  Rational lc = p.back();
  for (auto& c : p) c /= lc;
  return p;
}

Poly gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

Poly derivative(const Poly& p) {
  Poly r;
  for (size_t i = 1; i < p.size(); ++i) r.push_back(p[i] * Rational(static_cast<long>(i)));
  trim(r);
  return r;
}

Poly exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.empty()) throw std::domain_error("inexact polynomial division");
  return q;
}

// Yun's squarefree factorization of a monic polynomial: p = prod a_i^i.
std::vector<std::pair<Poly, int>> yun(const Poly& p) {
  std::vector<std::pair<Poly, int>> out;
  Poly g = gcd(p, derivative(p));
  if (deg(g) == 0) {
    if (deg(p) > 0) out.emplace_back(monic(p), 1);
    return out;
  }
  Poly c = exact_div(p, g);
  Poly d = sub(derivative(p).empty() ? Poly{} : exact_div(derivative(p), g), derivative(c));
  int i = 1;
  while (deg(c) > 0) {
    Poly a = gcd(c, d);
    if (deg(a) > 0) out.emplace_back(a, i);
    c = exact_div(c, a);
    d = sub(exact_div(d, a), derivative(c));
    ++i;
  }
  return out;
}

Poly poly_of(const QLaurent& p, int& minExp) {
  minExp = p.min_exp();
  Poly out(static_cast<size_t>(p.span()) + 1, Rational(0));
  for (const auto& [e, c] : p.terms()) out[static_cast<size_t>(e - minExp)] = c;
  return out;
}

QLaurent laurent_of(const Poly& p, Var v, int shift) {
  QLaurent out = QLaurent::zero(v);
  for (size_t i = 0; i < p.size(); ++i)
    if (p[i] != 0) out += QLaurent::term(v, static_cast<int>(i) + shift, p[i]);
  return out;
}

// Scale to a primitive integer polynomial whose lowest nonzero coefficient is
// positive; returns the applied factor f with result = f * p.
std::pair<Poly, Rational> primitive_positive(const Poly& p) {
  Integer den = 1, num = 0;
  for (const auto& c : p) {
    if (c == 0) continue;
    den = boost::multiprecision::lcm(den, denominator(c));
  }
  for (const auto& c : p) {
    if (c == 0) continue;
    Integer n = numerator(c) * (den / denominator(c));
    num = boost::multiprecision::gcd(num, boost::multiprecision::abs(n));
  }
  if (num == 0) return {p, Rational(1)};
  Rational f(den, num);
  Poly r = scale(p, f);
  for (const auto& c : r) {
    if (c == 0) continue;
    if (c < 0) {
      f = -f;
      r = scale(r, Rational(-1));
    }
    break;
  }
  return {r, f};
}

std::optional<Rational> rational_sqrt(const Rational& x) {
  if (x < 0) return std::nullopt;
  if (x == 0) return Rational(0);
  Integer n = numerator(x), d = denominator(x);
  Integer sn = boost::multiprecision::sqrt(n), sd = boost::multiprecision::sqrt(d);
  if (sn * sn != n || sd * sd != d) return std::nullopt;
  return Rational(sn, sd);
}

}  // namespace

SquarefreeDecomposition squarefree_decompose(const QLaurent& p) {
  if (p.is_zero()) throw std::domain_error("squarefree decomposition of zero");
  Var v = p.var();
  int shift = 0;
  Poly P = poly_of(p, shift);
  Poly Pm = monic(P);

  Poly squareMonic{Rational(1)};
  Poly sfMonic{Rational(1)};
  for (const auto& [a, i] : yun(Pm)) {
    for (int j = 0; j < i / 2; ++j) squareMonic = mul(squareMonic, a);
    if (i % 2 == 1) sfMonic = mul(sfMonic, a);
  }

  auto [sq, sqF] = primitive_positive(squareMonic);
  auto [sf, sfF] = primitive_positive(sfMonic);
  (void)sqF;
  (void)sfF;
  // content = p / (square^2 * squarefree); squarefree absorbs its sign.
  Poly prod = mul(mul(sq, sq), sf);
  Rational content = P.back() / prod.back();
  if (content < 0) {
    content = -content;
    sf = scale(sf, Rational(-1));
  }

  // split the monomial factor t^shift as (t^h)^2 * t^r with r in {0,1}
  int halfShift = (shift >= 0) ? shift / 2 : (shift - 1) / 2;
  int rem = shift - 2 * halfShift;

  SquarefreeDecomposition out;
  out.content = content;
  out.square = laurent_of(sq, v, halfShift);
  out.squarefree = laurent_of(sf, v, rem);
  return out;
}

std::optional<QLaurent> poly_sqrt(const QLaurent& p) {
  if (p.is_zero()) return QLaurent::zero(p.var());
  if (p.min_exp() % 2 != 0 || p.max_exp() % 2 != 0) return std::nullopt;
  int shift = 0;
  Poly P = poly_of(p, shift);
  size_t d = P.size() - 1;  // even
  auto r0 = rational_sqrt(P[0]);
  if (!r0 || *r0 == 0) return std::nullopt;
  Poly r(d / 2 + 1, Rational(0));
  r[0] = *r0;
  for (size_t k = 1; k <= d / 2; ++k) {
    Rational acc = k < P.size() ? P[k] : Rational(0);
    for (size_t i = 1; i < k; ++i)
      if (i < r.size() && k - i < r.size()) acc -= r[i] * r[k - i];
    r[k] = acc / (2 * r[0]);
  }
  trim(r);
  Poly check = mul(r, r);
  if (check != P) return std::nullopt;
  return laurent_of(r, p.var(), shift / 2);
}

RationalFunction::RationalFunction(QLaurent num, QLaurent den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("zero denominator");
  if (num_.var() != den_.var()) throw std::invalid_argument("mixed variables in fraction");
  normalize();
}

void RationalFunction::normalize() {
  Var v = num_.var();
  if (num_.is_zero()) {
    den_ = QLaurent::constant(v, 1);
    return;
  }
  int ns = 0, ds = 0;
  Poly n = poly_of(num_, ns), d = poly_of(den_, ds);
  Poly g = gcd(n, d);
  if (deg(g) > 0) {
    n = exact_div(n, g);
    d = exact_div(d, g);
  }
  // pull powers of t out of the denominator into the numerator shift
  size_t k = 0;
  while (k < d.size() && d[k] == 0) ++k;
  if (k > 0) {
    d.erase(d.begin(), d.begin() + static_cast<long>(k));
    ds += static_cast<int>(k);
  }
  Rational lc = d.back();
  for (auto& c : d) c /= lc;
  for (auto& c : n) c /= lc;
  num_ = laurent_of(n, v, ns - ds);
  den_ = laurent_of(d, v, 0);
}

QLaurent RationalFunction::as_laurent() const {
  if (!is_laurent()) throw std::domain_error("fraction has a nontrivial denominator");
  Rational c = den_.constant_value();
  QLaurent out = QLaurent::zero(num_.var());
  for (const auto& [e, coef] : num_.terms()) out += QLaurent::term(num_.var(), e, coef / c);
  return out;
}

Rational RationalFunction::eval(const Rational& x) const {
  if (num_.is_zero()) return 0;
  Rational d = den_.eval(x);
  if (d == 0) throw std::domain_error("evaluation at a pole");
  return num_.eval(x) / d;
}

RationalFunction operator+(const RationalFunction& x, const RationalFunction& y) {
  return RationalFunction(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
}
RationalFunction operator-(const RationalFunction& x, const RationalFunction& y) {
  return RationalFunction(x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_);
}
RationalFunction operator*(const RationalFunction& x, const RationalFunction& y) {
  return RationalFunction(x.num_ * y.num_, x.den_ * y.den_);
}
RationalFunction operator/(const RationalFunction& x, const RationalFunction& y) {
  if (y.is_zero()) throw std::domain_error("division by zero fraction");
  return RationalFunction(x.num_ * y.den_, x.den_ * y.num_);
}
RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

std::string RationalFunction::str() const {
  if (is_laurent()) return as_laurent().str();
  return "(" + num_.str() + ") / (" + den_.str() + ")";
}

LinearSolution solve_affine(const std::vector<std::array<RationalFunction, 4>>& rows,
                            const std::vector<RationalFunction>& rhs) {
  if (rows.size() != rhs.size()) throw std::invalid_argument("row/rhs count mismatch");
  size_t m = rows.size();
  Var v = Var::t;
  if (!rows.empty()) v = rows[0][0].var();
  auto zero = RationalFunction::constant(v, 0);
  auto one = RationalFunction::constant(v, 1);

  // augmented matrix
  std::vector<std::array<RationalFunction, 5>> a(m);
  for (size_t i = 0; i < m; ++i) {
    for (int j = 0; j < 4; ++j) a[i][static_cast<size_t>(j)] = rows[i][static_cast<size_t>(j)];
    a[i][4] = rhs[i];
  }

  std::array<int, 4> pivotRow{-1, -1, -1, -1};
  size_t rank = 0;
  for (int col = 0; col < 4 && rank < m; ++col) {
    size_t sel = m;
    for (size_t r = rank; r < m; ++r)
      if (!a[r][static_cast<size_t>(col)].is_zero()) {
        sel = r;
        break;
      }
    if (sel == m) continue;
    std::swap(a[rank], a[sel]);
    RationalFunction inv = one / a[rank][static_cast<size_t>(col)];
    for (int j = col; j <= 4; ++j) a[rank][static_cast<size_t>(j)] = a[rank][static_cast<size_t>(j)] * inv;
    for (size_t r = 0; r < m; ++r) {
      if (r == rank || a[r][static_cast<size_t>(col)].is_zero()) continue;
      RationalFunction f = a[r][static_cast<size_t>(col)];
      for (int j = col; j <= 4; ++j)
        a[r][static_cast<size_t>(j)] = a[r][static_cast<size_t>(j)] - f * a[rank][static_cast<size_t>(j)];
    }
    pivotRow[static_cast<size_t>(col)] = static_cast<int>(rank);
    ++rank;
  }

  LinearSolution out;
  for (size_t r = rank; r < m; ++r) {
    if (!a[r][4].is_zero()) {
      out.kind = LinearSolution::NoSolution;
      return out;
    }
  }
  int freeCount = 0;
  for (int c = 0; c < 4; ++c)
    if (pivotRow[static_cast<size_t>(c)] < 0) ++freeCount;

  auto solve_with_free = [&](int freeCol, const RationalFunction& val) {
    std::array<RationalFunction, 4> x{zero, zero, zero, zero};
    if (freeCol >= 0) x[static_cast<size_t>(freeCol)] = val;
    for (int c = 0; c < 4; ++c) {
      int pr = pivotRow[static_cast<size_t>(c)];
      if (pr < 0) continue;
      RationalFunction s = a[static_cast<size_t>(pr)][4];
      for (int j = 0; j < 4; ++j) {
        if (j == c || pivotRow[static_cast<size_t>(j)] >= 0) continue;
        s = s - a[static_cast<size_t>(pr)][static_cast<size_t>(j)] * x[static_cast<size_t>(j)];
      }
      x[static_cast<size_t>(c)] = s;
    }
    return x;
  };

  if (freeCount == 0) {
    out.kind = LinearSolution::Unique;
    out.point = solve_with_free(-1, zero);
    out.dimension = 0;
    return out;
  }
  if (freeCount == 1) {
    int freeCol = -1;
    for (int c = 3; c >= 0; --c)
      if (pivotRow[static_cast<size_t>(c)] < 0) {
        freeCol = c;
        break;
      }
    AffineLine line;
    line.freeCoordinate = freeCol;
    line.base = solve_with_free(freeCol, zero);
    auto p1 = solve_with_free(freeCol, one);
    for (int j = 0; j < 4; ++j)
      line.direction[static_cast<size_t>(j)] = p1[static_cast<size_t>(j)] - line.base[static_cast<size_t>(j)];
    out.kind = LinearSolution::Line;
    out.line = line;
    out.dimension = 1;
    return out;
  }
  out.kind = LinearSolution::Degenerate;
  out.dimension = freeCount;
  return out;
}

}  // namespace braid3
