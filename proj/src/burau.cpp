#include "braid3/burau.hpp"

#include <cstdlib>
#include <functional>

namespace braid3 {

namespace {

ZLaurent zl(int exp, long coef) { return ZLaurent::term(Var::t, exp, coef); }
ZLaurent zzero() { return ZLaurent::zero(Var::t); }

}  // namespace

BurauMatrix burau_identity() {
  return {zl(0, 1), zzero(), zzero(), zl(0, 1)};
}

BurauMatrix burau_letter(Letter l) {
  if (l.index == 1) {
    if (l.sign > 0) return {zl(1, -1), zl(0, 1), zzero(), zl(0, 1)};
    return {zl(-1, -1), zl(-1, 1), zzero(), zl(0, 1)};
  }
  if (l.sign > 0) return {zl(0, 1), zzero(), zl(1, 1), zl(1, -1)};
  return {zl(0, 1), zzero(), zl(0, 1), zl(-1, -1)};
}

BurauMatrix burau(const BraidWord& w) {
  BurauMatrix m = burau_identity();
  for (const auto& l : w.letters) m = m * burau_letter(l);
  return m;
}

BurauMatrix burau_syllable(int index, int k) {
  if (index != 1 && index != 2) throw std::invalid_argument("index must be 1 or 2");
  if (k == 0) throw std::invalid_argument("zero syllable");
  // (1 - (-t)^k) / (1 + t) as a Laurent polynomial
  ZLaurent series = zzero();
  if (k > 0) {
    for (int j = 0; j < k; ++j) series += neg_var_power(Var::t, j);
  } else {
    for (int j = 1; j <= -k; ++j) series -= neg_var_power(Var::t, -j);
  }
  ZLaurent diag = neg_var_power(Var::t, k);
  if (index == 1) return {diag, series, zzero(), zl(0, 1)};
  return {zl(0, 1), zzero(), zl(1, 1) * series, diag};
}

ZLaurent burau_trace(const BraidWord& w) { return burau(w).trace(); }

BurauMatrixQ burau_q_identity() { return {Rational(1), Rational(0), Rational(0), Rational(1)}; }

BurauMatrixQ burau_letter_at(Letter l, const Rational& t0) {
  if (t0 == 0 || t0 == -1) throw std::invalid_argument("parameter value must avoid 0 and -1");
  Rational one(1), zero(0);
  if (l.index == 1) {
    if (l.sign > 0) return {-t0, one, zero, one};
    return {Rational(-1) / t0, Rational(1) / t0, zero, one};
  }
  if (l.sign > 0) return {one, zero, t0, -t0};
  return {one, zero, one, Rational(-1) / t0};
}

BurauMatrixQ burau_at(const BraidWord& w, const Rational& t0) {
  BurauMatrixQ m = burau_q_identity();
  for (const auto& l : w.letters) m = m * burau_letter_at(l, t0);
  return m;
}

std::optional<long> scalar_central(const BurauMatrix& m) {
  if (!m.b.is_zero() || !m.c.is_zero() || m.a != m.d) return std::nullopt;
  const ZLaurent& a = m.a;
  if (a.is_zero() || a.term_count() != 1 || a.coeff(a.min_exp()) != 1 || a.min_exp() % 3 != 0)
    throw std::domain_error("scalar Burau matrix is not a power of t^3");
  return a.min_exp() / 3;
}

std::optional<BraidWord> preimage_search(const BurauMatrix& m, int maxLen) {
  if (maxLen < 0 || maxLen > 16) throw std::invalid_argument("maxLen must be in [0, 16]");
  // the determinant pins the exponent sum, so only matching lengths/parities
  // need scanning
  ZLaurent det = m.det();
  if (det.is_zero() || det.term_count() != 1) return std::nullopt;
  int s = det.min_exp();
  Integer lead = det.coeff(s);
  if (lead != ((s % 2 == 0) ? 1 : -1)) return std::nullopt;  // not (-t)^s

  static const Letter alphabet[4] = {{1, 1}, {2, 1}, {1, -1}, {2, -1}};
  for (int len = std::abs(s); len <= maxLen; len += 2) {
    std::optional<BraidWord> found;
    // depth-first in letter order = lexicographic order of reduced words
    BraidWord cur;
    std::function<bool(const BurauMatrix&)> dfs = [&](const BurauMatrix& acc) -> bool {
      if (static_cast<int>(cur.size()) == len) {
        if (acc == m) {
          found = cur;
          return true;
        }
        return false;
      }
      for (const Letter& l : alphabet) {
        if (!cur.empty() && cur.letters.back() == l.inverse()) continue;
        cur.letters.push_back(l);
        bool hit = dfs(acc * burau_letter(l));
        cur.letters.pop_back();
        if (hit) return true;
      }
      return false;
    };
    if (dfs(burau_identity())) return found;
  }
  return std::nullopt;
}

}  // namespace braid3
