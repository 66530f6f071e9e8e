#include "seifert/bands/surface.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace seifert::bands {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      auto& p = parent_[static_cast<std::size_t>(x)];
      p = parent_[static_cast<std::size_t>(p)];
      x = p;
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[static_cast<std::size_t>(a)] = b;
    return true;
  }

 private:
  std::vector<int> parent_;
};

// Path of forest edges from `from` to `to`, as traversals. The forest is
// small, so a plain DFS is enough.
std::vector<Traversal> forest_path(const Spine& spine, const std::vector<std::size_t>& forest,
                                   int from, int to) {
  std::vector<int> via_edge(static_cast<std::size_t>(spine.vertices), -1);
  std::vector<int> prev(static_cast<std::size_t>(spine.vertices), -1);
  std::vector<bool> seen(static_cast<std::size_t>(spine.vertices), false);
  std::vector<int> stack{from};
  seen[static_cast<std::size_t>(from)] = true;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    if (v == to) break;
    for (std::size_t e : forest) {
      const auto [a, b] = spine.edges[e];
      int other = -1;
      if (a == v) other = b;
      if (b == v) other = a;
      if (other < 0 || seen[static_cast<std::size_t>(other)]) continue;
      seen[static_cast<std::size_t>(other)] = true;
      prev[static_cast<std::size_t>(other)] = v;
      via_edge[static_cast<std::size_t>(other)] = static_cast<int>(e);
      stack.push_back(other);
    }
  }
  if (!seen[static_cast<std::size_t>(to)]) throw std::logic_error("forest_path: vertices not connected");

  std::vector<Traversal> path;
  for (int v = to; v != from; v = prev[static_cast<std::size_t>(v)]) {
    const auto e = static_cast<std::size_t>(via_edge[static_cast<std::size_t>(v)]);
    const int u = prev[static_cast<std::size_t>(v)];
    path.push_back({e, spine.edges[e].first == u});
  }
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

int Spine::components() const {
  DisjointSets sets(vertices);
  int count = vertices;
  for (const auto& [a, b] : edges)
    if (sets.unite(a, b)) --count;
  return count;
}

Spine make_spine(const BandWord& w) {
  Spine s;
  s.vertices = w.strands();
  for (const auto& g : w.letters()) s.edges.emplace_back(g.i - 1, g.j - 1);
  return s;
}

std::vector<int> HomologyCycle::disks(const BandWord& w) const {
  std::vector<int> out;
  out.reserve(steps.size());
  for (const auto& t : steps) {
    const auto& g = w.letters()[t.letter];
    out.push_back(t.forward ? g.i - 1 : g.j - 1);
  }
  return out;
}

BandSurface homology_basis(const BandWord& w) {
  BandSurface surface{w, make_spine(w), {}};
  const Spine& spine = surface.spine;
  DisjointSets sets(spine.vertices);
  std::vector<std::size_t> forest;

  for (std::size_t l = 0; l < spine.edges.size(); ++l) {
    const auto [u, v] = spine.edges[l];
    if (sets.unite(u, v)) {
      forest.push_back(l);
      continue;
    }
    HomologyCycle cycle;
    cycle.defining_letter = l;
    cycle.steps.push_back({l, true});
    const auto back = forest_path(spine, forest, v, u);
    cycle.steps.insert(cycle.steps.end(), back.begin(), back.end());
    surface.basis.push_back(std::move(cycle));

    std::size_t oldest = back.front().letter;
    for (const auto& t : back) oldest = std::min(oldest, t.letter);
    std::replace(forest.begin(), forest.end(), oldest, l);
  }
  return surface;
}

}  // namespace seifert::bands
