#pragma once

#include <optional>

#include "braid3/laurent.hpp"
#include "braid3/word.hpp"

namespace braid3 {

template <typename R>
struct Matrix2 {
  R a, b, c, d;  // row-major: [[a, b], [c, d]]

  friend Matrix2 operator*(const Matrix2& x, const Matrix2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  friend Matrix2 operator+(const Matrix2& x, const Matrix2& y) {
    return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
  }
  friend Matrix2 operator*(const R& s, const Matrix2& y) {
    return {s * y.a, s * y.b, s * y.c, s * y.d};
  }
  friend bool operator==(const Matrix2& x, const Matrix2& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
  friend bool operator!=(const Matrix2& x, const Matrix2& y) { return !(x == y); }

  R trace() const { return a + d; }
  R det() const { return a * d - b * c; }
};

using BurauMatrix = Matrix2<ZLaurent>;
using BurauMatrixQ = Matrix2<Rational>;

// Reduced Burau image of a single letter: s1 -> [[-t, 1], [0, 1]],
// s2 -> [[1, 0], [t, -t]], and the corresponding inverses.
BurauMatrix burau_letter(Letter l);

BurauMatrix burau_identity();

BurauMatrix burau(const BraidWord& w);

// Closed form for a syllable s_index^k (k any nonzero integer).
BurauMatrix burau_syllable(int index, int k);

ZLaurent burau_trace(const BraidWord& w);

// Numeric Burau image at a rational parameter value (t0 not in {0, -1}).
BurauMatrixQ burau_at(const BraidWord& w, const Rational& t0);
BurauMatrixQ burau_letter_at(Letter l, const Rational& t0);
BurauMatrixQ burau_q_identity();

// For a scalar matrix t^{3k} * I returns k; non-scalar gives nullopt; a
// scalar that is not a power of t^3 is an inconsistency and throws.
std::optional<long> scalar_central(const BurauMatrix& m);

// Breadth-first search over reduced words for an exact Burau preimage,
// shortest (then lexicographically least) first.  maxLen <= 16.
std::optional<BraidWord> preimage_search(const BurauMatrix& m, int maxLen);

}  // namespace braid3
