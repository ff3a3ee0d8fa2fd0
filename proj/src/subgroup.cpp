#include "su2erg/subgroup.hpp"

#include <numeric>
#include <tuple>

namespace su2erg {
namespace {

struct Edge {
  std::size_t from;
  int letter;
  std::size_t to;
};

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t a) {
    while (parent_[a] != a) {
      parent_[a] = parent_[parent_[a]];
      a = parent_[a];
    }
    return a;
  }
  // Keeps the smaller representative so the base vertex 0 stays 0.
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

FoldedSubgroup::FoldedSubgroup(std::span<const Word> generators) {
  // Petal graph: one loop at vertex 0 per generator.
  std::vector<Edge> edges;
  std::size_t vertices = 1;
  for (const Word& g : generators) {
    std::size_t at = 0;
    for (std::size_t i = 0; i < g.size(); ++i) {
      const std::size_t next = (i + 1 == g.size()) ? 0 : vertices++;
      edges.push_back({at, g[i], next});
      at = next;
    }
  }

  // Fold: identify targets of equally labelled edges leaving one vertex,
  // until the graph is deterministic.
  UnionFind uf(vertices);
  bool changed = true;
  while (changed) {
    changed = false;
    std::map<std::pair<std::size_t, int>, std::size_t> seen;
    for (const Edge& e : edges) {
      const std::size_t a = uf.find(e.from);
      const std::size_t b = uf.find(e.to);
      for (const auto& [src, letter, dst] :
           {std::tuple{a, e.letter, b}, std::tuple{b, -e.letter, a}}) {
        auto [it, inserted] = seen.try_emplace({src, letter}, dst);
        if (!inserted && uf.find(it->second) != uf.find(dst)) {
          uf.unite(it->second, dst);
          changed = true;
        }
      }
    }
  }

  std::map<std::size_t, std::size_t> compact;
  for (std::size_t v = 0; v < vertices; ++v) {
    compact.try_emplace(uf.find(v), compact.size());
  }
  out_.resize(compact.size());
  for (const Edge& e : edges) {
    const std::size_t a = compact.at(uf.find(e.from));
    const std::size_t b = compact.at(uf.find(e.to));
    out_[a][e.letter] = b;
    out_[b][-e.letter] = a;
  }
}

bool FoldedSubgroup::contains(const Word& w) const {
  std::size_t at = 0;
  for (int x : w.letters()) {
    const auto it = out_[at].find(x);
    if (it == out_[at].end()) return false;
    at = it->second;
  }
  return at == 0;
}

bool FoldedSubgroup::is_whole_group(int rank) const {
  for (int k = 1; k <= rank; ++k) {
    if (!contains(Word::letter(k))) return false;
  }
  return true;
}

}  // namespace su2erg
