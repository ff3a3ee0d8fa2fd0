#include <vector>

#include <gtest/gtest.h>

#include "su2erg/error.hpp"
#include "su2erg/random.hpp"
#include "su2erg/su2.hpp"
#include "su2erg/subgroup.hpp"
#include "su2erg/surface.hpp"
#include "su2erg/word.hpp"

namespace su2erg {
namespace {

Word random_word(Rng& rng, int rank, int length) {
  std::vector<int> letters;
  for (int i = 0; i < length; ++i) {
    const int g = static_cast<int>(rng.below(static_cast<std::uint64_t>(rank))) + 1;
    letters.push_back(rng.coin() ? g : -g);
  }
  return free_reduce(letters);
}

TEST(FreeReduceTest, Examples) {
  EXPECT_TRUE(free_reduce(std::vector<int>{1, -1}).empty());
  EXPECT_EQ(free_reduce(std::vector<int>{1, 2, -2, 3}), Word({1, 3}));
  EXPECT_EQ(free_reduce(std::vector<int>{1, 2}), Word({1, 2}));
}

TEST(FreeReduceTest, Idempotent) {
  Rng rng(1);
  for (int i = 0; i < 200; ++i) {
    const Word w = random_word(rng, 3, 12);
    EXPECT_EQ(free_reduce(w.letters()), w);
  }
}

TEST(FreeReduceTest, RejectsZeroLetter) {
  EXPECT_THROW(free_reduce(std::vector<int>{1, 0}), InvalidWord);
}

TEST(WordTest, ParseAndFormat) {
  EXPECT_EQ(parse_word("a1 a2 A1 A2"), Word({1, 2, -1, -2}));
  EXPECT_EQ(parse_word("a1*a3, A2"), Word({1, 3, -2}));
  EXPECT_TRUE(parse_word("1").empty());
  EXPECT_EQ(format_word(Word({1, -3})), "a1 A3");
  EXPECT_EQ(format_word(Word()), "1");
  EXPECT_EQ(parse_word("x1 X3", 'x'), Word({1, -3}));
  EXPECT_THROW(parse_word("b1"), InvalidWord);
  EXPECT_THROW(parse_word("a0"), InvalidWord);
}

TEST(WordTest, CyclicCanonicalIsConjugationAndInversionInvariant) {
  Rng rng(2);
  for (int i = 0; i < 100; ++i) {
    const Word w = random_word(rng, 3, 8);
    const Word u = random_word(rng, 3, 4);
    EXPECT_EQ((u * w * u.inverse()).cyclic_canonical(), w.cyclic_canonical());
    EXPECT_EQ(w.inverse().cyclic_canonical(), w.cyclic_canonical());
  }
}

TEST(EvaluateTest, Examples) {
  Rng rng(3);
  const std::vector<GroupElement> values = {haar_sample(rng), haar_sample(rng)};
  EXPECT_LE(distance(evaluate(Word(), values), GroupElement::identity()), 0.0);
  EXPECT_LE(distance(evaluate(Word({2}), values), values[1]), 1e-15);
  EXPECT_LE(distance(evaluate(Word({1, 2}), values), values[0] * values[1]), 1e-15);
  EXPECT_THROW(evaluate(Word({3}), values), InvalidWord);
}

TEST(EvaluateTest, Homomorphism) {
  Rng rng(4);
  for (int i = 0; i < 100; ++i) {
    const std::vector<GroupElement> values = {haar_sample(rng), haar_sample(rng), haar_sample(rng)};
    const Word u = random_word(rng, 3, 9);
    const Word v = random_word(rng, 3, 9);
    EXPECT_LE(distance(evaluate(u * v, values), evaluate(u, values) * evaluate(v, values)), 1e-12);
  }
}

TEST(SubstituteTest, ComposesImages) {
  const std::vector<Word> images = {Word({1, 2}), Word({-1})};
  EXPECT_EQ(substitute(Word({1, 2}), images), Word({1, 2, -1}));
  EXPECT_EQ(substitute(Word({-1}), images), Word({-2, -1}));
}

TEST(SurfacePresentationTest, Examples) {
  const SurfacePresentation p03 = surface_presentation(0, 3);
  EXPECT_EQ(p03.rank(), 2);
  EXPECT_EQ(p03.boundary_word(1), Word({1}));
  EXPECT_EQ(p03.boundary_word(2), Word({2}));
  EXPECT_EQ(p03.boundary_word(3), Word({-2, -1}));

  const SurfacePresentation p11 = surface_presentation(1, 1);
  EXPECT_EQ(p11.rank(), 2);
  EXPECT_EQ(p11.boundary_word(1), Word({2, 1, -2, -1}));

  const SurfacePresentation p12 = surface_presentation(1, 2);
  EXPECT_EQ(p12.rank(), 3);
  EXPECT_EQ(p12.boundary_word(1), Word({3}));
  EXPECT_EQ(p12.boundary_word(2), Word({-3, 2, 1, -2, -1}));
}

TEST(SurfacePresentationTest, RelationIsFreelyTrivial) {
  for (const auto& [g, n] : std::vector<std::pair<int, int>>{{0, 3}, {0, 4}, {0, 5}, {1, 1}, {1, 2}, {2, 1}, {2, 3}}) {
    EXPECT_TRUE(surface_presentation(g, n).relation_word().empty()) << g << "," << n;
  }
}

TEST(SurfacePresentationTest, RejectsNonnegativeEulerCharacteristic) {
  EXPECT_THROW(surface_presentation(0, 1), UnsupportedSurface);
  EXPECT_THROW(surface_presentation(0, 2), UnsupportedSurface);
  EXPECT_THROW(surface_presentation(1, 0), UnsupportedSurface);
  EXPECT_THROW(surface_presentation(2, 0), UnsupportedSurface);
}

TEST(IndexSetTest, Enumeration) {
  const auto two = index_sets(2);
  ASSERT_EQ(two.size(), 3u);
  EXPECT_EQ(two[0], IndexSet({1}));
  EXPECT_EQ(two[1], IndexSet({2}));
  EXPECT_EQ(two[2], IndexSet({1, 2}));
  EXPECT_EQ(index_sets(3).size(), 7u);
  EXPECT_EQ(index_sets(4).size(), 14u);
  for (int n = 1; n <= 8; ++n) {
    EXPECT_EQ(static_cast<int>(index_sets(n).size()), n + n * (n - 1) / 2 + n * (n - 1) * (n - 2) / 6);
  }
}

TEST(IndexSetTest, NamesAndValidation) {
  EXPECT_EQ(IndexSet({1, 2, 3}).name(), "123");
  EXPECT_EQ(IndexSet({1, 10}).name(), "1_10");
  EXPECT_THROW(IndexSet({2, 1}), std::invalid_argument);
  EXPECT_THROW(IndexSet({1, 2, 3, 4}), std::invalid_argument);
}

TEST(CurveWordTest, Examples) {
  EXPECT_EQ(curve_word(IndexSet({1, 3})), Word({1, 3}));
  EXPECT_EQ(curve_word(IndexSet({2})), Word({2}));
  EXPECT_EQ(curve_word(IndexSet({1, 2, 3})), Word({1, 2, 3}));
}

TEST(FoldedSubgroupTest, Membership) {
  const std::vector<Word> gens = {Word({1, 2}), Word({2, 1})};
  const FoldedSubgroup h(gens);
  EXPECT_TRUE(h.contains(Word()));
  EXPECT_TRUE(h.contains(Word({1, 2, 2, 1})));
  EXPECT_TRUE(h.contains(Word({-1, -2, 2, 1})));
  EXPECT_FALSE(h.contains(Word({1})));
  EXPECT_FALSE(h.is_whole_group(2));
  const std::vector<Word> all = {Word({1, 2}), Word({2})};
  EXPECT_TRUE(FoldedSubgroup(all).is_whole_group(2));
}

}  // namespace
}  // namespace su2erg
