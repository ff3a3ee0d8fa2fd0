#pragma once

#include <map>
#include <span>
#include <vector>

#include "su2erg/word.hpp"

namespace su2erg {

// Finitely generated subgroup of a free group, represented by its folded
// Stallings graph: a deterministic labelled graph whose reduced closed paths
// at the base vertex are exactly the subgroup's elements.
class FoldedSubgroup {
 public:
  explicit FoldedSubgroup(std::span<const Word> generators);

  bool contains(const Word& w) const;

  // True when every generator A_1 .. A_rank lies in the subgroup.
  bool is_whole_group(int rank) const;

  std::size_t vertex_count() const { return out_.size(); }

 private:
  // out_[v][letter] = target vertex; both orientations of every edge stored.
  std::vector<std::map<int, std::size_t>> out_;
};

}  // namespace su2erg
