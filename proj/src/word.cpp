#include "su2erg/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>

#include "su2erg/error.hpp"

namespace su2erg {

Word free_reduce(std::span<const int> letters) { return Word(letters); }

Word::Word(std::initializer_list<int> letters)
    : Word(std::span<const int>(letters.begin(), letters.size())) {}

Word::Word(std::span<const int> letters) {
  letters_.reserve(letters.size());
  for (int x : letters) {
    if (x == 0) throw InvalidWord("letter index 0 is not a generator");
    if (!letters_.empty() && letters_.back() == -x) {
      letters_.pop_back();
    } else {
      letters_.push_back(x);
    }
  }
}

int Word::max_index() const {
  int m = 0;
  for (int x : letters_) m = std::max(m, std::abs(x));
  return m;
}

Word Word::inverse() const {
  std::vector<int> inv(letters_.rbegin(), letters_.rend());
  for (int& x : inv) x = -x;
  Word w;
  w.letters_ = std::move(inv);
  return w;
}

Word operator*(const Word& a, const Word& b) {
  std::size_t cancel = 0;
  const std::size_t limit = std::min(a.size(), b.size());
  while (cancel < limit && a.letters_[a.size() - 1 - cancel] == -b.letters_[cancel]) ++cancel;
  Word w;
  w.letters_.reserve(a.size() + b.size() - 2 * cancel);
  w.letters_.insert(w.letters_.end(), a.letters_.begin(), a.letters_.end() - cancel);
  w.letters_.insert(w.letters_.end(), b.letters_.begin() + cancel, b.letters_.end());
  return w;
}

Word Word::pow(int exponent) const {
  const Word base = exponent < 0 ? inverse() : *this;
  Word result;
  for (int i = 0; i < std::abs(exponent); ++i) result = result * base;
  return result;
}

Word Word::cyclically_reduced() const {
  std::size_t lo = 0;
  std::size_t hi = letters_.size();
  while (hi - lo >= 2 && letters_[lo] == -letters_[hi - 1]) {
    ++lo;
    --hi;
  }
  Word w;
  w.letters_.assign(letters_.begin() + lo, letters_.begin() + hi);
  return w;
}

Word Word::rotated(std::size_t k) const {
  Word w;
  if (letters_.empty()) return w;
  k %= letters_.size();
  w.letters_.reserve(letters_.size());
  w.letters_.insert(w.letters_.end(), letters_.begin() + k, letters_.end());
  w.letters_.insert(w.letters_.end(), letters_.begin(), letters_.begin() + k);
  return w;
}

Word Word::cyclic_canonical() const {
  const Word base = cyclically_reduced();
  if (base.empty()) return base;
  Word best = base;
  for (const Word& candidate : {base, base.inverse()}) {
    for (std::size_t k = 0; k < candidate.size(); ++k) {
      // Rotations of a cyclically reduced word stay freely reduced.
      Word r = candidate.rotated(k);
      if (r < best) best = std::move(r);
    }
  }
  return best;
}

Word parse_word(std::string_view text, char prefix) {
  const char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(prefix)));
  const char upper = static_cast<char>(std::toupper(static_cast<unsigned char>(prefix)));
  std::vector<int> letters;
  std::size_t i = 0;
  auto skip_separators = [&] {
    while (i < text.size() &&
           (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == '*' || text[i] == ',')) {
      ++i;
    }
  };
  skip_separators();
  if (i < text.size()) {
    std::string_view rest = text.substr(i);
    while (!rest.empty() && std::isspace(static_cast<unsigned char>(rest.back()))) {
      rest.remove_suffix(1);
    }
    if (rest == "1" || rest == "e") return Word();
  }
  while (i < text.size()) {
    const char c = text[i];
    int sign;
    if (c == lower) {
      sign = 1;
    } else if (c == upper) {
      sign = -1;
    } else {
      throw InvalidWord("unexpected character '" + std::string(1, c) + "' in word \"" +
                        std::string(text) + "\" (expected " + lower + "<k> or " + upper + "<k>)");
    }
    ++i;
    const std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    int index = 0;
    const auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + i, index);
    if (start == i || ec != std::errc() || index <= 0) {
      throw InvalidWord("missing or invalid generator index in word \"" + std::string(text) + "\"");
    }
    letters.push_back(sign * index);
    skip_separators();
  }
  return Word(letters);
}

std::string format_word(const Word& w, char prefix) {
  if (w.empty()) return "1";
  const char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(prefix)));
  const char upper = static_cast<char>(std::toupper(static_cast<unsigned char>(prefix)));
  std::string out;
  for (int x : w.letters()) {
    if (!out.empty()) out += ' ';
    out += x > 0 ? lower : upper;
    out += std::to_string(std::abs(x));
  }
  return out;
}

GroupElement evaluate(const Word& w, std::span<const GroupElement> values) {
  GroupElement result;
  for (int x : w.letters()) {
    const auto k = static_cast<std::size_t>(std::abs(x));
    if (k > values.size()) {
      throw InvalidWord("letter index " + std::to_string(k) + " exceeds alphabet size " +
                        std::to_string(values.size()));
    }
    result = result * (x > 0 ? values[k - 1] : values[k - 1].inverse());
  }
  return result;
}

Word substitute(const Word& w, std::span<const Word> images) {
  Word result;
  for (int x : w.letters()) {
    const auto k = static_cast<std::size_t>(std::abs(x));
    if (k > images.size()) {
      throw InvalidWord("letter index " + std::to_string(k) + " exceeds substitution size " +
                        std::to_string(images.size()));
    }
    result = result * (x > 0 ? images[k - 1] : images[k - 1].inverse());
  }
  return result;
}

}  // namespace su2erg
