#pragma once

#include <array>
#include <compare>
#include <string>
#include <vector>

#include "su2erg/word.hpp"

namespace su2erg {

// Genus and boundary count of a compact orientable surface.
struct SurfaceId {
  int genus = 0;
  int boundaries = 0;

  friend bool operator==(const SurfaceId&, const SurfaceId&) = default;
  friend auto operator<=>(const SurfaceId&, const SurfaceId&) = default;
};

std::string to_string(SurfaceId id);

// Presentation of pi_1 of Sigma_{g,n} with n >= 1: generators A_1 .. A_{2g+n}
// subject to [A_1,A_2] ... [A_{2g-1},A_{2g}] A_{2g+1} ... A_{2g+n} = 1, so the
// group is free on A_1 .. A_N with N = 2g + n - 1.
//
// Boundary words: boundary i < n is the single letter A_{2g+i}; boundary n is
// solved from the relation, A_{2g+n} = (commutators * A_{2g+1} ... A_{2g+n-1})^{-1}.
class SurfacePresentation {
 public:
  SurfacePresentation(int genus, int boundaries);

  SurfaceId id() const { return {genus_, boundaries_}; }
  int genus() const { return genus_; }
  int boundary_count() const { return boundaries_; }
  int rank() const { return rank_; }
  int euler_characteristic() const { return 2 - 2 * genus_ - boundaries_; }

  // boundary_word(i) for i in 1..n.
  const Word& boundary_word(int i) const { return boundary_words_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<Word>& boundary_words() const { return boundary_words_; }

  // Commutator product followed by every boundary word; freely trivial.
  Word relation_word() const;

  friend bool operator==(const SurfacePresentation& a, const SurfacePresentation& b) {
    return a.id() == b.id();
  }

 private:
  int genus_;
  int boundaries_;
  int rank_;
  std::vector<Word> boundary_words_;
};

// Throws UnsupportedSurface unless n >= 1 and 2 - 2g - n < 0.
SurfacePresentation surface_presentation(int genus, int boundaries);

// Strictly increasing sequence of 1..3 generator indices; names the trace
// coordinate f_I of the ascending product word A_I.
class IndexSet {
 public:
  IndexSet() = default;
  // Throws std::invalid_argument unless 1 <= size <= 3 and strictly increasing
  // positive indices.
  IndexSet(std::initializer_list<int> indices);
  explicit IndexSet(const std::vector<int>& indices);

  std::size_t size() const { return size_; }
  int operator[](std::size_t i) const { return indices_[i]; }
  const int* begin() const { return indices_.data(); }
  const int* end() const { return indices_.data() + size_; }
  int max_index() const { return size_ == 0 ? 0 : indices_[size_ - 1]; }

  // Variable name without the leading 'f': "1", "12", "123"; indices >= 10
  // are joined with '_' ("1_10") so names stay unambiguous.
  std::string name() const;

  // Order used everywhere (enumeration, CSV columns, polynomial printing):
  // by size, then lexicographically.
  friend std::strong_ordering operator<=>(const IndexSet& a, const IndexSet& b);
  friend bool operator==(const IndexSet& a, const IndexSet& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }

 private:
  std::array<int, 3> indices_{};
  std::size_t size_ = 0;
};

// All index sets over {1..N} with 1 to 3 elements, in IndexSet order:
// {1},{2},{1,2} for N = 2.
std::vector<IndexSet> index_sets(int rank);

// A_I = A_{i1} ... A_{ik}.
Word curve_word(const IndexSet& index_set);

}  // namespace su2erg
