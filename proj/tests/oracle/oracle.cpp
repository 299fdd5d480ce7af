#include "oracle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <stdexcept>

namespace oracle {

std::vector<int> bits(Mask m) {
  std::vector<int> out;
  for (int i = 0; m; ++i, m >>= 1)
    if (m & 1u) out.push_back(i);
  return out;
}

int lowest(Mask m) { return m ? std::countr_zero(m) : -1; }

Space::Space(int n, const std::vector<std::pair<int, int>>& pairs) : n_(n) {
  if (n < 0 || n > 16) throw std::invalid_argument("oracle supports at most 16 points");
  open_.assign(std::size_t{1} << n, false);
  for (Mask u = 0; u <= full(); ++u) {
    bool ok = true;
    for (auto [a, b] : pairs)
      if (has(u, a) && !has(u, b)) ok = false;
    if (ok) {
      open_[u] = true;
      opens_.push_back(u);
    }
    if (u == full()) break;
  }
}

Space Space::from_opens(int n, const std::vector<Mask>& opens) {
  Space s;
  s.n_ = n;
  s.open_.assign(std::size_t{1} << n, false);
  for (auto o : opens)
    if (!s.open_[o]) {
      s.open_[o] = true;
      s.opens_.push_back(o);
    }
  std::sort(s.opens_.begin(), s.opens_.end());
  return s;
}

Mask Space::closure(Mask a) const {
  Mask out = full();
  for (auto o : opens_)
    if ((o & a) == 0) out &= ~o;
  return out;
}

Mask Space::component(Mask a, int x) const {
  std::set<Mask> traces;
  for (auto o : opens_) traces.insert(o & a);
  Mask out = a;
  for (auto t : traces)
    if (has(t, x) && traces.count(a & ~t)) out &= t;
  return out;
}

std::vector<Mask> Space::components(Mask a) const {
  std::vector<Mask> out;
  Mask left = a;
  while (left) {
    auto c = component(a, lowest(left));
    out.push_back(c);
    left &= ~c;
  }
  return out;
}

Classification classify(const Space& s) {
  Classification c;
  const int n = s.size();
  for (int x = 0; x < n; ++x) {
    if (s.closure(bit(x)) == bit(x))
      c.closed |= bit(x);
    else if (s.is_closed(s.derived(x)))
      c.proper |= bit(x);
    else
      c.nonproper |= bit(x);
    bool dominated = false;
    for (int y = 0; y < n; ++y) {
      Mask cx = s.closure(bit(x)), cy = s.closure(bit(y));
      if (cx != cy && (cx & cy) == cx) dominated = true;
    }
    if (!dominated) c.maximal |= bit(x);
  }
  c.recurrent = c.closed | c.nonproper;
  const Mask seeds = c.recurrent | (s.full() & ~c.maximal);
  for (auto e : elements(s))
    if (e & seeds) c.quasi |= e;
  return c;
}

std::vector<Mask> elements(const Space& s) {
  const int n = s.size();
  std::vector<Mask> out;
  Mask seen = 0;
  for (int x = 0; x < n; ++x) {
    if (has(seen, x)) continue;
    const bool nonproper = !s.is_closed(s.derived(x));
    Mask pool = 0;
    for (int y = 0; y < n; ++y) {
      bool same = nonproper ? s.closure(bit(y)) == s.closure(bit(x)) : s.derived(y) == s.derived(x);
      if (same) pool |= bit(y);
    }
    auto e = s.component(pool, x);
    seen |= e;
    out.push_back(e);
  }
  return out;
}

Mask quasi_lemma_lhs(const Space& s, const Classification& c) {
  Mask derived_union = 0;
  for (int x = 0; x < s.size(); ++x) derived_union |= s.derived(x);
  return c.recurrent | (derived_union & c.proper);
}

HyperGraph hypergraph(const Space& s) {
  auto c = classify(s);
  HyperGraph g;
  g.vertices = s.components(c.quasi);
  for (int x = 0; x < s.size(); ++x) {
    if (has(c.quasi, x)) continue;
    std::vector<int> index;
    for (int i = 0; i < static_cast<int>(g.vertices.size()); ++i)
      if (g.vertices[i] & s.derived(x)) index.push_back(i);
    g.edges[index] |= bit(x);
  }
  return g;
}

namespace {

// Depth of the longest strictly descending closure chain from `top`, found by
// walking every such chain.
int longest_chain(const std::vector<Mask>& cl, int top) {
  int best = 0;
  for (int y = 0; y < static_cast<int>(cl.size()); ++y)
    if (cl[y] != cl[top] && (cl[y] & cl[top]) == cl[y])
      best = std::max(best, 1 + longest_chain(cl, y));
  return best;
}

}  // namespace

int height_by_chains(const Space& s, int x) {
  std::vector<Mask> cl(s.size());
  for (int i = 0; i < s.size(); ++i) cl[i] = s.closure(bit(i));
  return longest_chain(cl, x);
}

std::optional<std::vector<int>> homeomorphism(const Space& a, const Space& b) {
  if (a.size() != b.size() || a.opens().size() != b.opens().size()) return std::nullopt;
  std::vector<int> p(a.size());
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (auto o : a.opens()) {
      Mask image = 0;
      for (auto i : bits(o)) image |= bit(p[i]);
      if (!b.is_open(image)) {
        ok = false;
        break;
      }
    }
    if (ok) return p;
  } while (std::next_permutation(p.begin(), p.end()));
  return std::nullopt;
}

Space subspace(const Space& s, Mask a) {
  auto m = bits(a);
  std::vector<Mask> traces;
  for (auto o : s.opens()) {
    Mask t = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
      if (has(o, m[i])) t |= bit(static_cast<int>(i));
    traces.push_back(t);
  }
  return Space::from_opens(static_cast<int>(m.size()), traces);
}

Decomp::Decomp(const Space& s, std::vector<Mask> blocks,
               std::optional<std::vector<std::string>> labels)
    : s_(s), blocks_(std::move(blocks)), labels_(std::move(labels)), block_of_(s.size(), -1) {
  for (int i = 0; i < static_cast<int>(blocks_.size()); ++i)
    for (auto x : bits(blocks_[i])) block_of_[x] = i;
}

Mask Decomp::expand(Mask block_set) const {
  Mask out = 0;
  for (auto i : bits(block_set)) out |= blocks_[i];
  return out;
}

Mask Decomp::saturation(Mask a) const {
  Mask out = 0;
  for (auto b : blocks_)
    if (b & a) out |= b;
  return out;
}

bool Decomp::invariant() const {
  for (auto o : s_.opens())
    if (!s_.is_open(saturation(o))) return false;
  return true;
}

bool Decomp::closures_saturated() const {
  const Mask all = (Mask{1} << blocks_.size()) - 1;
  for (Mask w = 0;; ++w) {
    auto a = expand(w);
    auto c = s_.closure(a);
    if (saturation(c) != c) return false;
    if (w == all) break;
  }
  return true;
}

std::vector<Mask> Decomp::saturated_opens() const {
  std::set<Mask> out;
  for (auto o : s_.opens()) out.insert(saturation(o));
  return {out.begin(), out.end()};
}

std::vector<Mask> Decomp::quotient_opens() const {
  std::vector<Mask> out;
  const Mask all = (Mask{1} << blocks_.size()) - 1;
  for (Mask w = 0;; ++w) {
    if (s_.is_open(expand(w))) out.push_back(w);
    if (w == all) break;
  }
  return out;
}

std::vector<Mask> Decomp::quotient_components(Mask block_set) const {
  std::set<Mask> traces;
  for (auto v : quotient_opens()) traces.insert(v & block_set);
  std::vector<Mask> out;
  Mask left = block_set;
  while (left) {
    int i = lowest(left);
    Mask c = block_set;
    for (auto t : traces)
      if (has(t, i) && traces.count(block_set & ~t)) c &= t;
    out.push_back(c);
    left &= ~c;
  }
  return out;
}

Classification Decomp::classify() const {
  Classification c;
  const int k = static_cast<int>(blocks_.size());
  std::vector<Mask> cl(k);
  for (int i = 0; i < k; ++i) cl[i] = s_.closure(blocks_[i]);
  for (int i = 0; i < k; ++i) {
    const Mask l = blocks_[i];
    if (cl[i] == l)
      c.closed |= l;
    else if (s_.is_closed(cl[i] & ~l))
      c.proper |= l;
    else
      c.nonproper |= l;
    bool dominated = false;
    for (int j = 0; j < k; ++j)
      if (cl[i] != cl[j] && (cl[i] & cl[j]) == cl[i]) dominated = true;
    if (!dominated) c.maximal |= l;
  }
  c.recurrent = c.closed | c.nonproper;
  const Mask seeds = c.recurrent | (s_.full() & ~c.maximal);
  for (auto e : strong_elements())
    if (e & seeds) c.quasi |= e;
  return c;
}

bool Decomp::blocks_homeomorphic(int i, int j) const {
  if (labels_) return (*labels_)[i] == (*labels_)[j];
  return homeomorphism(subspace(s_, blocks_[i]), subspace(s_, blocks_[j])).has_value();
}

std::vector<Mask> Decomp::elements(bool weak) const {
  const int k = static_cast<int>(blocks_.size());
  std::vector<Mask> cl(k), der(k);
  for (int i = 0; i < k; ++i) {
    cl[i] = s_.closure(blocks_[i]);
    der[i] = cl[i] & ~blocks_[i];
  }
  std::vector<Mask> out;
  Mask seen = 0;
  for (int i = 0; i < k; ++i) {
    if (has(seen, i)) continue;
    const bool nonproper = cl[i] != blocks_[i] && !s_.is_closed(der[i]);
    Mask pool = 0;
    for (int j = 0; j < k; ++j) {
      bool same = nonproper ? cl[j] == cl[i] : der[j] == der[i];
      if (same && (!weak || blocks_homeomorphic(i, j))) pool |= bit(j);
    }
    for (auto c : quotient_components(pool))
      if (has(c, i)) {
        seen |= c;
        out.push_back(expand(c));
      }
  }
  std::sort(out.begin(), out.end(), [](Mask a, Mask b) { return lowest(a) < lowest(b); });
  return out;
}

std::vector<Mask> Decomp::strong_elements() const { return elements(false); }
std::vector<Mask> Decomp::weak_elements() const { return elements(true); }

HyperGraph Decomp::hypergraph() const {
  auto c = classify();
  Mask q_blocks = 0;
  for (int i = 0; i < static_cast<int>(blocks_.size()); ++i)
    if (blocks_[i] & c.quasi) q_blocks |= bit(i);
  HyperGraph g;
  for (auto comp : quotient_components(q_blocks)) g.vertices.push_back(expand(comp));
  std::sort(g.vertices.begin(), g.vertices.end(),
            [](Mask a, Mask b) { return lowest(a) < lowest(b); });
  for (int x = 0; x < s_.size(); ++x) {
    if (has(c.quasi, x)) continue;
    const Mask l = blocks_[block_of_[x]];
    const Mask d = s_.closure(l) & ~l;
    std::vector<int> index;
    for (int i = 0; i < static_cast<int>(g.vertices.size()); ++i)
      if (g.vertices[i] & d) index.push_back(i);
    g.edges[index] |= bit(x);
  }
  return g;
}

bool quotient_of(const HyperGraph& g, const std::vector<Mask>& blocks) {
  for (auto b : blocks) {
    int homes = 0;
    for (auto v : g.vertices)
      if ((b & v) == b) ++homes;
    for (const auto& [index, members] : g.edges)
      if ((b & members) == b) ++homes;
    if (homes != 1) return false;
  }
  return true;
}

}  // namespace oracle
