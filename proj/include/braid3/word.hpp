#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace braid3 {

// A letter of a 3-strand braid word: one of s1, s2, s1^-1, s2^-1.
struct Letter {
  int index;  // 1 or 2
  int sign;   // +1 or -1

  // total order 1 < 2 < -1 < -2 used for canonical forms
  int code() const { return (sign < 0 ? 2 : 0) + (index - 1); }
  int gen() const { return sign * index; }
  Letter inverse() const { return {index, -sign}; }
  Letter flipped() const { return {3 - index, sign}; }
  Letter mirrored() const { return {index, -sign}; }

  friend bool operator==(Letter a, Letter b) { return a.index == b.index && a.sign == b.sign; }
  friend bool operator!=(Letter a, Letter b) { return !(a == b); }
};

inline Letter letter_from_gen(int g) {
  if (g == 0 || g < -2 || g > 2) throw std::invalid_argument("letter index out of range");
  return {g < 0 ? -g : g, g < 0 ? -1 : 1};
}

struct BraidWord {
  std::vector<Letter> letters;

  BraidWord() = default;
  BraidWord(std::initializer_list<int> gens) {
    for (int g : gens) letters.push_back(letter_from_gen(g));
  }
  explicit BraidWord(std::vector<Letter> ls) : letters(std::move(ls)) {}

  size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  const Letter& operator[](size_t i) const { return letters[i]; }
  Letter& operator[](size_t i) { return letters[i]; }

  int exponent_sum() const {
    int s = 0;
    for (const auto& l : letters) s += l.sign;
    return s;
  }

  friend bool operator==(const BraidWord& a, const BraidWord& b) { return a.letters == b.letters; }
  friend bool operator!=(const BraidWord& a, const BraidWord& b) { return !(a == b); }
  friend bool operator<(const BraidWord& a, const BraidWord& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (size_t i = 0; i < a.size(); ++i) {
      int x = a[i].code(), y = b[i].code();
      if (x != y) return x < y;
    }
    return false;
  }
};

BraidWord concat(const BraidWord& a, const BraidWord& b);
BraidWord repeat(const BraidWord& w, int k);  // k >= 0
BraidWord inverse_word(const BraidWord& w);

// Bracket notation: word := item*; item := atom ('^' int)?;
// atom := '-'? ('1'|'2') | '(' word ')'.  '[', ']', '|' and whitespace are
// ignored; exponent 0 is rejected; a negative exponent on a group inverts it.
BraidWord parse_word(const std::string& text);

enum class RenderStyle { Plain, Syllable };
std::string render_word(const BraidWord& w, RenderStyle style = RenderStyle::Plain);

struct Symmetry {
  enum Kind { Invert, Mirror, Flip, Rotate } kind;
  int k = 0;  // rotation amount
};

BraidWord transform(const BraidWord& w, const Symmetry& s);

// Lexicographic minimum (letter order 1 < 2 < -1 < -2) over the orbit of w
// under inversion, mirroring, index flipping and all rotations.
BraidWord canonicalize(const BraidWord& w);

// Free (and optionally cyclic) cancellation of adjacent inverse pairs.
BraidWord reduce(const BraidWord& w, bool cyclic = false);
bool is_reduced(const BraidWord& w, bool cyclic = false);

// Syllable decomposition of a reduced word: runs of equal letters.
struct ExponentVector {
  std::vector<int> entries;  // signed syllable exponents
  int startIndex = 1;        // index (1 or 2) of the first syllable
  bool cyclic = false;

  int weight() const { return static_cast<int>(entries.size()); }
  int exponent_sum() const {
    int s = 0;
    for (int e : entries) s += e;
    return s;
  }
};

ExponentVector syllables(const BraidWord& w, bool cyclic = false);

enum class Pattern { Delta, DeltaInv, Delta2 };

// Start positions of occurrences of a named pattern (or explicit subword).
std::vector<int> find_pattern(const BraidWord& w, Pattern p, bool cyclic = false);
std::vector<int> find_pattern(const BraidWord& w, const BraidWord& sub, bool cyclic = false);

// All positive 6-letter words representing the full twist.
const std::vector<BraidWord>& full_twist_words();

// w = alpha . Delta . beta with the Delta occurrence starting at deltaPos;
// returns Delta . bar(alpha) . beta (bar = index flip), the same braid.
BraidWord slide_delta(const BraidWord& w, int deltaPos);

// Rewrite s_a^e s_b^k s_a^-e -> s_b^-e s_a^k s_b^e in place (a != b, k != 0,
// the conjugating letters at pos and pos+|k|+1).
BraidWord apply_o9(const BraidWord& w, int pos, int k);

// Rewrite a 4-letter commutator-shaped cyclic subword into its 2-letter form,
// e.g. [1 2 -1 -2] -> [-2 1].
BraidWord rewrite_commutator(const BraidWord& w, int pos);

BraidWord switch_crossing(const BraidWord& w, int pos);
BraidWord delete_letter(const BraidWord& w, int pos);
BraidWord delete_range(const BraidWord& w, int pos, int len);

}  // namespace braid3
