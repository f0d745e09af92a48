#include "braid3/word.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace braid3 {

BraidWord concat(const BraidWord& a, const BraidWord& b) {
  BraidWord r = a;
  r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
  return r;
}

BraidWord repeat(const BraidWord& w, int k) {
  if (k < 0) throw std::invalid_argument("negative repetition");
  BraidWord r;
  for (int i = 0; i < k; ++i) r = concat(r, w);
  return r;
}

BraidWord inverse_word(const BraidWord& w) {
  BraidWord r;
  for (size_t i = w.size(); i-- > 0;) r.letters.push_back(w[i].inverse());
  return r;
}

namespace {

struct Parser {
  const std::string& s;
  size_t pos = 0;

  explicit Parser(const std::string& text) : s(text) {}

  void skip() {
    while (pos < s.size()) {
      char c = s[pos];
      if (std::isspace(static_cast<unsigned char>(c)) || c == '[' || c == ']' || c == '|')
        ++pos;
      else
        break;
    }
  }

  bool done() {
    skip();
    return pos >= s.size();
  }

  char peek() {
    skip();
    return pos < s.size() ? s[pos] : '\0';
  }

  [[noreturn]] void fail(const std::string& what) {
    std::ostringstream os;
    os << "parse error at offset " << pos << ": " << what;
    throw std::invalid_argument(os.str());
  }

  int parse_int() {
    skip();
    bool neg = false;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
      neg = s[pos] == '-';
      ++pos;
    }
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) fail("expected integer");
    long v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + (s[pos] - '0');
      if (v > 1000000) fail("exponent too large");
      ++pos;
    }
    return static_cast<int>(neg ? -v : v);
  }

  BraidWord parse_atom() {
    skip();
    if (pos >= s.size()) fail("expected atom");
    char c = s[pos];
    if (c == '(') {
      ++pos;
      BraidWord inner = parse_word_inner(true);
      if (peek() != ')') fail("expected ')'");
      ++pos;
      return inner;
    }
    bool neg = false;
    if (c == '-') {
      ++pos;
      skip();
      if (pos >= s.size()) fail("dangling '-'");
      c = s[pos];
    }
    if (c != '1' && c != '2') fail("expected generator 1 or 2");
    ++pos;
    BraidWord w;
    w.letters.push_back({c - '0', neg ? -1 : 1});
    return w;
  }

  BraidWord parse_word_inner(bool inGroup) {
    BraidWord out;
    for (;;) {
      skip();
      if (pos >= s.size()) break;
      if (s[pos] == ')') {
        if (!inGroup) fail("unmatched ')'");
        break;
      }
      BraidWord atom = parse_atom();
      skip();
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        int e = parse_int();
        if (e == 0) fail("zero exponent");
        BraidWord powered;
        if (e > 0) {
          powered = repeat(atom, e);
        } else {
          powered = repeat(inverse_word(atom), -e);
        }
        out = concat(out, powered);
      } else {
        out = concat(out, atom);
      }
    }
    return out;
  }
};

}  // namespace

BraidWord parse_word(const std::string& text) {
  Parser p(text);
  BraidWord w = p.parse_word_inner(false);
  if (!p.done()) p.fail("trailing input");
  return w;
}

std::string render_word(const BraidWord& w, RenderStyle style) {
  std::ostringstream os;
  if (style == RenderStyle::Plain) {
    for (const auto& l : w.letters) {
      if (l.sign < 0) os << '-';
      os << l.index;
    }
    return os.str();
  }
  size_t i = 0;
  while (i < w.size()) {
    size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    int run = static_cast<int>(j - i);
    if (w[i].sign < 0) os << '-';
    os << w[i].index;
    if (run > 1) os << '^' << run;
    i = j;
  }
  return os.str();
}

BraidWord transform(const BraidWord& w, const Symmetry& s) {
  BraidWord r;
  switch (s.kind) {
    case Symmetry::Invert:
      return inverse_word(w);
    case Symmetry::Mirror:
      for (const auto& l : w.letters) r.letters.push_back(l.mirrored());
      return r;
    case Symmetry::Flip:
      for (const auto& l : w.letters) r.letters.push_back(l.flipped());
      return r;
    case Symmetry::Rotate: {
      if (w.empty()) return w;
      int n = static_cast<int>(w.size());
      int k = ((s.k % n) + n) % n;
      for (int i = 0; i < n; ++i) r.letters.push_back(w[static_cast<size_t>((i + k) % n)]);
      return r;
    }
  }
  throw std::logic_error("unreachable");
}

BraidWord canonicalize(const BraidWord& w) {
  if (w.empty()) return w;
  BraidWord best = w;
  bool first = true;
  for (int inv = 0; inv < 2; ++inv) {
    for (int mir = 0; mir < 2; ++mir) {
      for (int flp = 0; flp < 2; ++flp) {
        BraidWord v = w;
        if (inv) v = transform(v, {Symmetry::Invert, 0});
        if (mir) v = transform(v, {Symmetry::Mirror, 0});
        if (flp) v = transform(v, {Symmetry::Flip, 0});
        int n = static_cast<int>(v.size());
        for (int k = 0; k < n; ++k) {
          BraidWord cand = transform(v, {Symmetry::Rotate, k});
          if (first || cand < best) {
            best = cand;
            first = false;
          }
        }
      }
    }
  }
  return best;
}

BraidWord reduce(const BraidWord& w, bool cyclic) {
  std::vector<Letter> st;
  for (const auto& l : w.letters) {
    if (!st.empty() && st.back() == l.inverse())
      st.pop_back();
    else
      st.push_back(l);
  }
  if (cyclic) {
    size_t lo = 0, hi = st.size();
    while (hi - lo >= 2 && st[lo] == st[hi - 1].inverse()) {
      ++lo;
      --hi;
    }
    st = std::vector<Letter>(st.begin() + static_cast<long>(lo), st.begin() + static_cast<long>(hi));
  }
  return BraidWord(std::move(st));
}

bool is_reduced(const BraidWord& w, bool cyclic) { return reduce(w, cyclic) == w; }

ExponentVector syllables(const BraidWord& w, bool cyclic) {
  if (!is_reduced(w, cyclic)) throw std::invalid_argument("syllable decomposition needs a reduced word");
  ExponentVector ev;
  ev.cyclic = cyclic;
  if (w.empty()) return ev;
  ev.startIndex = w[0].index;
  size_t i = 0;
  std::vector<int> indices;
  while (i < w.size()) {
    size_t j = i;
    while (j < w.size() && w[j].index == w[i].index) ++j;
    int e = 0;
    for (size_t k = i; k < j; ++k) e += w[k].sign;
    ev.entries.push_back(e);
    indices.push_back(w[i].index);
    i = j;
  }
  if (cyclic && ev.entries.size() >= 2 && indices.front() == indices.back()) {
    ev.entries.front() += ev.entries.back();
    ev.entries.pop_back();
  }
  return ev;
}

namespace {

bool match_at(const BraidWord& w, const BraidWord& sub, int pos, bool cyclic) {
  int n = static_cast<int>(w.size());
  for (size_t i = 0; i < sub.size(); ++i) {
    int j = pos + static_cast<int>(i);
    if (j >= n) {
      if (!cyclic) return false;
      j %= n;
    }
    if (w[static_cast<size_t>(j)] != sub[i]) return false;
  }
  return true;
}

std::vector<BraidWord> pattern_words(Pattern p) {
  switch (p) {
    case Pattern::Delta:
      return {BraidWord{1, 2, 1}, BraidWord{2, 1, 2}};
    case Pattern::DeltaInv:
      return {BraidWord{-1, -2, -1}, BraidWord{-2, -1, -2}};
    case Pattern::Delta2:
      return full_twist_words();
  }
  throw std::logic_error("unreachable");
}

}  // namespace

const std::vector<BraidWord>& full_twist_words() {
  static const std::vector<BraidWord> words = {
      BraidWord{1, 2, 1, 2, 1, 2}, BraidWord{2, 1, 2, 1, 2, 1}, BraidWord{2, 1, 2, 2, 1, 2},
      BraidWord{1, 2, 1, 1, 2, 1}, BraidWord{2, 1, 1, 2, 1, 1}, BraidWord{1, 2, 2, 1, 2, 2},
      BraidWord{1, 1, 2, 1, 1, 2}, BraidWord{2, 2, 1, 2, 2, 1}};
  return words;
}

std::vector<int> find_pattern(const BraidWord& w, const BraidWord& sub, bool cyclic) {
  std::vector<int> out;
  if (sub.empty() || sub.size() > w.size()) return out;
  int n = static_cast<int>(w.size());
  int last = cyclic ? n - 1 : n - static_cast<int>(sub.size());
  for (int p = 0; p <= last; ++p)
    if (match_at(w, sub, p, cyclic)) out.push_back(p);
  return out;
}

std::vector<int> find_pattern(const BraidWord& w, Pattern p, bool cyclic) {
  std::vector<int> out;
  for (const auto& sub : pattern_words(p)) {
    auto hits = find_pattern(w, sub, cyclic);
    out.insert(out.end(), hits.begin(), hits.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

BraidWord slide_delta(const BraidWord& w, int deltaPos) {
  int n = static_cast<int>(w.size());
  if (deltaPos < 0 || deltaPos + 3 > n) throw std::invalid_argument("delta position out of range");
  BraidWord occ;
  for (int i = 0; i < 3; ++i) occ.letters.push_back(w[static_cast<size_t>(deltaPos + i)]);
  if (!(occ == BraidWord{1, 2, 1} || occ == BraidWord{2, 1, 2}))
    throw std::invalid_argument("no delta occurrence at position");
  BraidWord alpha, beta;
  for (int i = 0; i < deltaPos; ++i) alpha.letters.push_back(w[static_cast<size_t>(i)]);
  for (int i = deltaPos + 3; i < n; ++i) beta.letters.push_back(w[static_cast<size_t>(i)]);
  return concat(concat(occ, transform(alpha, {Symmetry::Flip, 0})), beta);
}

BraidWord apply_o9(const BraidWord& w, int pos, int k) {
  if (k == 0) throw std::invalid_argument("empty inner run");
  int n = static_cast<int>(w.size());
  int len = std::abs(k) + 2;
  if (pos < 0 || pos + len > n) throw std::invalid_argument("pattern out of range");
  Letter outer = w[static_cast<size_t>(pos)];
  Letter closer = w[static_cast<size_t>(pos + len - 1)];
  if (closer != outer.inverse()) throw std::invalid_argument("outer letters are not inverse");
  int b = 3 - outer.index;
  int innerSign = k > 0 ? 1 : -1;
  for (int i = 1; i < len - 1; ++i) {
    Letter l = w[static_cast<size_t>(pos + i)];
    if (l.index != b || l.sign != innerSign) throw std::invalid_argument("inner run mismatch");
  }
  BraidWord out;
  for (int i = 0; i < pos; ++i) out.letters.push_back(w[static_cast<size_t>(i)]);
  out.letters.push_back({b, -outer.sign});
  for (int i = 0; i < std::abs(k); ++i) out.letters.push_back({outer.index, innerSign});
  out.letters.push_back({b, outer.sign});
  for (int i = pos + len; i < n; ++i) out.letters.push_back(w[static_cast<size_t>(i)]);
  return out;
}

BraidWord rewrite_commutator(const BraidWord& w, int pos) {
  int n = static_cast<int>(w.size());
  if (n < 4 || pos < 0 || pos >= n) throw std::invalid_argument("position out of range");
  static const std::vector<std::pair<BraidWord, BraidWord>> table = {
      {BraidWord{1, 2, -1, -2}, BraidWord{-2, 1}},
      {BraidWord{2, 1, -2, -1}, BraidWord{-1, 2}},
      {BraidWord{-1, -2, 1, 2}, BraidWord{2, -1}},
      {BraidWord{-2, -1, 2, 1}, BraidWord{1, -2}}};
  for (const auto& [pat, rep] : table) {
    if (match_at(w, pat, pos, true)) {
      BraidWord out;
      std::vector<bool> drop(static_cast<size_t>(n), false);
      for (int i = 0; i < 4; ++i) drop[static_cast<size_t>((pos + i) % n)] = true;
      // replacement goes where the pattern started
      for (int i = 0; i < n; ++i) {
        if (i == pos) out = concat(out, rep);
        if (!drop[static_cast<size_t>(i)]) out.letters.push_back(w[static_cast<size_t>(i)]);
      }
      if (pos + 4 > n) {
        // wrapped pattern: replacement appended at the seam start
        BraidWord alt;
        for (int i = 0; i < n; ++i)
          if (!drop[static_cast<size_t>(i)]) alt.letters.push_back(w[static_cast<size_t>(i)]);
        out = concat(alt, rep);
      }
      return out;
    }
  }
  throw std::invalid_argument("no commutator pattern at position");
}

BraidWord switch_crossing(const BraidWord& w, int pos) {
  if (pos < 0 || static_cast<size_t>(pos) >= w.size()) throw std::invalid_argument("position out of range");
  BraidWord r = w;
  r[static_cast<size_t>(pos)].sign = -r[static_cast<size_t>(pos)].sign;
  return r;
}

BraidWord delete_letter(const BraidWord& w, int pos) { return delete_range(w, pos, 1); }

BraidWord delete_range(const BraidWord& w, int pos, int len) {
  if (pos < 0 || len < 0 || static_cast<size_t>(pos + len) > w.size())
    throw std::invalid_argument("range out of bounds");
  BraidWord r;
  for (size_t i = 0; i < w.size(); ++i)
    if (i < static_cast<size_t>(pos) || i >= static_cast<size_t>(pos + len)) r.letters.push_back(w[i]);
  return r;
}

}  // namespace braid3
