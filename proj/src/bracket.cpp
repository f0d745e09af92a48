#include "braid3/bracket.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace braid3 {

namespace {

// A positive crossing smooths to the identity tangle under an A-splice and to
// the cup-cap tangle under a B-splice; signs swap the roles.
bool is_cupcap(Letter l, Splice s) { return (s == Splice::B) == (l.sign > 0); }

// Planar matchings of {top 0,1,2; bottom 3,4,5} track the partial closure.
using Matching = std::array<int, 6>;

constexpr Matching identity_matching() { return {3, 4, 5, 0, 1, 2}; }

// Apply a cup-cap on frontier strands (a, a+1); returns loops closed (0/1).
int apply_cupcap(Matching& m, int a) {
  int b1 = 3 + a, b2 = 4 + a;
  if (m[static_cast<size_t>(b1)] == b2) {
    // the two frontier points were already joined: a loop closes
    m[static_cast<size_t>(b1)] = b2;
    m[static_cast<size_t>(b2)] = b1;
    return 1;
  }
  int p = m[static_cast<size_t>(b1)], q = m[static_cast<size_t>(b2)];
  m[static_cast<size_t>(p)] = q;
  m[static_cast<size_t>(q)] = p;
  m[static_cast<size_t>(b1)] = b2;
  m[static_cast<size_t>(b2)] = b1;
  return 0;
}

int closure_loops(const Matching& m) {
  bool seen[6] = {false, false, false, false, false, false};
  int loops = 0;
  for (int s = 0; s < 6; ++s) {
    if (seen[s]) continue;
    ++loops;
    int cur = s;
    do {
      seen[static_cast<size_t>(cur)] = true;
      int p = m[static_cast<size_t>(cur)];  // matching arc
      seen[static_cast<size_t>(p)] = true;
      cur = p < 3 ? p + 3 : p - 3;  // closure arc joins top k with bottom k
    } while (cur != s);
  }
  return loops;
}

ZLaurent delta_poly() {
  // -A^2 - A^-2
  return ZLaurent::term(Var::A, 2, -1) + ZLaurent::term(Var::A, -2, -1);
}

}  // namespace

int splice_loop_count(const BraidWord& w, const std::vector<Splice>& choice) {
  if (choice.size() != w.size()) throw std::invalid_argument("one splice per crossing required");
  Matching m = identity_matching();
  int loops = 0;
  for (size_t j = 0; j < w.size(); ++j)
    if (is_cupcap(w[j], choice[j])) loops += apply_cupcap(m, w[j].index - 1);
  return loops + closure_loops(m);
}

SpliceState splice(const BraidWord& w, const std::vector<Splice>& choice) {
  if (choice.size() != w.size()) throw std::invalid_argument("one splice per crossing required");
  SpliceState out;
  out.choice = choice;
  int c = static_cast<int>(w.size());
  if (c == 0) {
    out.loops = 3;
    out.loopStructure.assign(3, {});
    return out;
  }

  // 1-manifold on points (level j, strand s), j < c; level c wraps to 0.
  struct Edge {
    int u, v;
    int endpoint;  // trace endpoint id carried by this arc, or -1
  };
  auto pt = [c](int level, int strand) { return 3 * (((level % c) + c) % c) + strand; };
  std::vector<Edge> edges;
  for (int j = 0; j < c; ++j) {
    int a = w[static_cast<size_t>(j)].index - 1;
    int other = a == 0 ? 2 : 0;
    if (is_cupcap(w[static_cast<size_t>(j)], choice[static_cast<size_t>(j)])) {
      edges.push_back({pt(j, a), pt(j, a + 1), 2 * j});          // cap
      edges.push_back({pt(j + 1, a), pt(j + 1, a + 1), 2 * j + 1});  // cup
    } else {
      edges.push_back({pt(j, a), pt(j + 1, a), 2 * j});
      edges.push_back({pt(j, a + 1), pt(j + 1, a + 1), 2 * j + 1});
    }
    edges.push_back({pt(j, other), pt(j + 1, other), -1});
  }

  int n = 3 * c;
  std::vector<std::array<int, 2>> inc(static_cast<size_t>(n), {-1, -1});
  for (size_t e = 0; e < edges.size(); ++e) {
    auto add = [&](int v) {
      auto& slots = inc[static_cast<size_t>(v)];
      if (slots[0] < 0)
        slots[0] = static_cast<int>(e);
      else
        slots[1] = static_cast<int>(e);
    };
    add(edges[e].u);
    add(edges[e].v);  // a self-edge occupies both slots of its point
  }

  std::vector<std::pair<int, int>> endpointLoc(static_cast<size_t>(2 * c), {-1, -1});
  std::vector<bool> used(edges.size(), false);
  for (size_t start = 0; start < edges.size(); ++start) {
    if (used[start]) continue;
    std::vector<int> seq;
    int loopId = static_cast<int>(out.loopStructure.size());
    size_t e = start;
    int at = edges[start].u;
    while (!used[e]) {
      used[e] = true;
      if (edges[e].endpoint >= 0) {
        endpointLoc[static_cast<size_t>(edges[e].endpoint)] = {loopId, static_cast<int>(seq.size())};
        seq.push_back(edges[e].endpoint);
      }
      int next = (edges[e].u == at) ? edges[e].v : edges[e].u;
      // leave `next` through its other incident edge (a self-edge names
      // itself in both slots, ending the walk)
      auto& slots = inc[static_cast<size_t>(next)];
      size_t e2 = (slots[0] == static_cast<int>(e)) ? static_cast<size_t>(slots[1])
                                                    : static_cast<size_t>(slots[0]);
      at = next;
      e = e2;
    }
    out.loopStructure.push_back(std::move(seq));
  }
  out.loops = static_cast<int>(out.loopStructure.size());

  for (int j = 0; j < c; ++j) {
    TraceSite site;
    site.crossing = j;
    site.endpoints[0] = endpointLoc[static_cast<size_t>(2 * j)];
    site.endpoints[1] = endpointLoc[static_cast<size_t>(2 * j + 1)];
    site.selfTrace = site.endpoints[0].first == site.endpoints[1].first;
    out.traces.push_back(site);
  }
  return out;
}

std::pair<SpliceState, SpliceState> extreme_states(const BraidWord& w) {
  std::vector<Splice> allA(w.size(), Splice::A), allB(w.size(), Splice::B);
  return {splice(w, allA), splice(w, allB)};
}

std::vector<SelfTraceInfo> self_traces(const SpliceState& s) {
  std::vector<SelfTraceInfo> out;
  std::vector<int> idx;  // indices into s.traces
  for (size_t i = 0; i < s.traces.size(); ++i) {
    if (!s.traces[i].selfTrace) continue;
    out.push_back({s.traces[i].crossing, true, false});
    idx.push_back(static_cast<int>(i));
  }
  for (size_t x = 0; x < idx.size(); ++x) {
    const auto& tx = s.traces[static_cast<size_t>(idx[x])];
    int loop = tx.endpoints[0].first;
    int n = static_cast<int>(s.loopStructure[static_cast<size_t>(loop)].size());
    int a1 = tx.endpoints[0].second, a2 = tx.endpoints[1].second;
    if (a1 > a2) std::swap(a1, a2);
    for (size_t y = 0; y < idx.size(); ++y) {
      if (y == x) continue;
      const auto& ty = s.traces[static_cast<size_t>(idx[y])];
      if (ty.endpoints[0].first != loop) continue;
      // endpoints alternate around the loop's cyclic order?
      auto inside = [&](int p) { return p > a1 && p < a2; };
      bool b1in = inside(ty.endpoints[0].second);
      bool b2in = inside(ty.endpoints[1].second);
      (void)n;
      if (b1in != b2in) {
        out[x].intertwined = true;
        out[x].isolated = false;
      }
    }
  }
  return out;
}

AdequacyReport adequacy(const BraidWord& w) {
  auto [sa, sb] = extreme_states(w);
  AdequacyReport r;
  r.aLoops = sa.loops;
  r.bLoops = sb.loops;
  r.aSelfTraces = self_traces(sa);
  r.bSelfTraces = self_traces(sb);
  r.aAdequate = r.aSelfTraces.empty();
  r.bAdequate = r.bSelfTraces.empty();
  r.adequate = r.aAdequate && r.bAdequate;
  r.semiadequate = r.aAdequate != r.bAdequate;
  return r;
}

ZLaurent kauffman_bracket(const BraidWord& w, int stateCap) {
  int c = static_cast<int>(w.size());
  if (c > stateCap) throw std::invalid_argument("word exceeds the state enumeration cap");
  // histogram over (#A-splices, loop count); the polynomial is assembled once
  std::map<std::pair<int, int>, Integer> hist;
  std::vector<Splice> choice(static_cast<size_t>(c), Splice::A);
  for (unsigned long mask = 0; mask < (1ul << c); ++mask) {
    int aCount = 0;
    for (int j = 0; j < c; ++j) {
      bool b = (mask >> j) & 1;
      choice[static_cast<size_t>(j)] = b ? Splice::B : Splice::A;
      if (!b) ++aCount;
    }
    int loops = splice_loop_count(w, choice);
    hist[{aCount, loops}] += 1;
  }
  ZLaurent delta = delta_poly();
  std::map<int, ZLaurent> deltaPow;
  ZLaurent total = ZLaurent::zero(Var::A);
  for (const auto& [key, count] : hist) {
    auto [aCount, loops] = key;
    auto it = deltaPow.find(loops - 1);
    if (it == deltaPow.end()) it = deltaPow.emplace(loops - 1, delta.pow(loops - 1)).first;
    total += ZLaurent::term(Var::A, 2 * aCount - c, count) * it->second;
  }
  return total;
}

ZLaurent bracket_transfer(const BraidWord& w) {
  ZLaurent delta = delta_poly();
  std::map<Matching, ZLaurent> state;
  state.emplace(identity_matching(), ZLaurent::constant(Var::A, 1));
  for (const auto& l : w.letters) {
    std::map<Matching, ZLaurent> next;
    for (const auto& [m, coef] : state) {
      for (Splice s : {Splice::A, Splice::B}) {
        ZLaurent f = coef * ZLaurent::term(Var::A, s == Splice::A ? 1 : -1, 1);
        Matching m2 = m;
        if (is_cupcap(l, s)) {
          int closed = apply_cupcap(m2, l.index - 1);
          if (closed) f *= delta;
        }
        auto it = next.find(m2);
        if (it == next.end())
          next.emplace(m2, f);
        else
          it->second += f;
      }
    }
    state = std::move(next);
  }
  ZLaurent total = ZLaurent::zero(Var::A);
  for (const auto& [m, coef] : state) total += coef * delta.pow(closure_loops(m) - 1);
  return total;
}

ZLaurent jones_via_bracket(const BraidWord& w, int stateCap) {
  ZLaurent bracket = kauffman_bracket(w, stateCap);
  int wr = w.exponent_sum();
  // V = (-t^{-3/4})^{-writhe} <D> at A = t^{-1/4}; in q: A^e -> q^{-e/2},
  // prefactor (-1)^writhe q^{3 writhe / 2}
  ZLaurent v = ZLaurent::zero(Var::q);
  for (const auto& [e, coef] : bracket.terms()) {
    long num = 3L * wr - e;
    if (num % 2 != 0) throw std::logic_error("bracket conversion produced a half-integer exponent");
    Integer c = (wr % 2 == 0) ? coef : -coef;
    v += ZLaurent::term(Var::q, static_cast<int>(num / 2), c);
  }
  return v;
}

}  // namespace braid3
