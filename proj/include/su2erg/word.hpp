#pragma once

#include <compare>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "su2erg/su2.hpp"

namespace su2erg {

// A freely reduced word in a free group. Letter +i stands for generator i
// (1-based), -i for its inverse. Construction always freely reduces, so two
// Words compare equal exactly when they are the same group element.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<int> letters);
  explicit Word(std::span<const int> letters);

  static Word letter(int signed_index) { return Word({signed_index}); }

  std::span<const int> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  int operator[](std::size_t i) const { return letters_[i]; }

  // Largest |letter|, 0 for the empty word.
  int max_index() const;

  Word inverse() const;

  // Free group product (reduced).
  friend Word operator*(const Word& a, const Word& b);

  Word pow(int exponent) const;

  // Strips u ... u^{-1} pairs at the two ends: the cyclically reduced
  // representative of the conjugacy class (a conjugate of *this).
  Word cyclically_reduced() const;

  // Rotation starting at position k (only meaningful on cyclically reduced
  // words; the result is a conjugate).
  Word rotated(std::size_t k) const;

  // Canonical representative of the unoriented conjugacy class: the
  // lexicographically least rotation of the cyclic reduction of w or of
  // w^{-1}. Traces are constant on these classes.
  Word cyclic_canonical() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& a, const Word& b) { return a.letters_ <=> b.letters_; }

 private:
  std::vector<int> letters_;
};

// Unique freely reduced form of a raw letter sequence. Zero letters are
// rejected with InvalidWord.
Word free_reduce(std::span<const int> letters);

// Word literal grammar: whitespace-separated tokens <p><k> or <P><k>, where
// <p> is the lowercase generator prefix (default 'a'), the uppercase prefix
// denotes the inverse, and <k> is a positive decimal index. "a1 a2 A1 A2" is
// the commutator of generators 1 and 2. Optional '*' or ',' separators are
// accepted; "1" or "e" (alone) denotes the empty word.
Word parse_word(std::string_view text, char prefix = 'a');

// Inverse of parse_word: "a1 a2 A1 A2"; empty word prints as "1".
std::string format_word(const Word& w, char prefix = 'a');

// Left-to-right product of values[i-1]^{+-1}. Throws InvalidWord when a
// letter exceeds values.size().
GroupElement evaluate(const Word& w, std::span<const GroupElement> values);

// Substitute image[i-1] for generator i (and its inverse for -i), then reduce.
Word substitute(const Word& w, std::span<const Word> images);

}  // namespace su2erg
