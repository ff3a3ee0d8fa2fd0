#include "su2erg/surface.hpp"

#include <stdexcept>

#include "su2erg/error.hpp"

namespace su2erg {

std::string to_string(SurfaceId id) {
  return "Sigma_{" + std::to_string(id.genus) + "," + std::to_string(id.boundaries) + "}";
}

SurfacePresentation::SurfacePresentation(int genus, int boundaries)
    : genus_(genus), boundaries_(boundaries), rank_(2 * genus + boundaries - 1) {
  if (genus < 0 || boundaries < 1) {
    throw UnsupportedSurface("surface needs genus >= 0 and at least one boundary component, got " +
                             to_string(id()));
  }
  if (euler_characteristic() >= 0) {
    throw UnsupportedSurface("surface " + to_string(id()) +
                             " has nonnegative Euler characteristic");
  }
  Word prefix;
  for (int j = 1; j <= genus; ++j) {
    const int a = 2 * j - 1;
    const int b = 2 * j;
    prefix = prefix * Word({a, b, -a, -b});
  }
  for (int i = 1; i < boundaries; ++i) {
    const Word letter = Word::letter(2 * genus + i);
    boundary_words_.push_back(letter);
    prefix = prefix * letter;
  }
  boundary_words_.push_back(prefix.inverse());
}

Word SurfacePresentation::relation_word() const {
  Word r;
  for (int j = 1; j <= genus_; ++j) {
    const int a = 2 * j - 1;
    const int b = 2 * j;
    r = r * Word({a, b, -a, -b});
  }
  for (const Word& w : boundary_words_) r = r * w;
  return r;
}

SurfacePresentation surface_presentation(int genus, int boundaries) {
  return SurfacePresentation(genus, boundaries);
}

IndexSet::IndexSet(std::initializer_list<int> indices)
    : IndexSet(std::vector<int>(indices)) {}

IndexSet::IndexSet(const std::vector<int>& indices) {
  if (indices.empty() || indices.size() > 3) {
    throw std::invalid_argument("index set must have 1 to 3 elements");
  }
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] < 1 || (i > 0 && indices[i] <= indices[i - 1])) {
      throw std::invalid_argument("index set must be strictly increasing positive integers");
    }
    indices_[i] = indices[i];
  }
  size_ = indices.size();
}

std::string IndexSet::name() const {
  const bool wide = max_index() >= 10;
  std::string out;
  for (std::size_t i = 0; i < size_; ++i) {
    if (wide && i > 0) out += '_';
    out += std::to_string(indices_[i]);
  }
  return out;
}

std::strong_ordering operator<=>(const IndexSet& a, const IndexSet& b) {
  if (auto c = a.size_ <=> b.size_; c != 0) return c;
  for (std::size_t i = 0; i < a.size_; ++i) {
    if (auto c = a.indices_[i] <=> b.indices_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::vector<IndexSet> index_sets(int rank) {
  std::vector<IndexSet> out;
  for (int i = 1; i <= rank; ++i) out.push_back(IndexSet{i});
  for (int i = 1; i <= rank; ++i) {
    for (int j = i + 1; j <= rank; ++j) out.push_back(IndexSet{i, j});
  }
  for (int i = 1; i <= rank; ++i) {
    for (int j = i + 1; j <= rank; ++j) {
      for (int k = j + 1; k <= rank; ++k) out.push_back(IndexSet{i, j, k});
    }
  }
  return out;
}

Word curve_word(const IndexSet& index_set) {
  std::vector<int> letters(index_set.begin(), index_set.end());
  return Word(letters);
}

}  // namespace su2erg
