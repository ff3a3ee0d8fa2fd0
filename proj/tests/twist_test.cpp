#include <cmath>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "su2erg/catalog.hpp"
#include "su2erg/error.hpp"
#include "su2erg/random.hpp"
#include "su2erg/repvar.hpp"
#include "su2erg/su2.hpp"
#include "su2erg/twist.hpp"

namespace su2erg {
namespace {

constexpr double kB = 0.47;
constexpr double kEps = 1e-2;

Representation fiber_point(int g, int n, Rng& rng) {
  return sample_representation(surface_presentation(g, n), BoundaryCondition::uniform(n, kB), kEps, rng)
      .representation;
}

double value_distance(const Representation& a, const Representation& b) {
  double worst = 0.0;
  for (std::size_t k = 0; k < a.values().size(); ++k) worst = std::max(worst, distance(a.values()[k], b.values()[k]));
  return worst;
}

const ValidationCheck& check(const ValidationReport& r, char letter) {
  for (const auto& c : r.checks) {
    if (c.name[0] == letter) return c;
  }
  throw std::logic_error("missing check");
}

TEST(TwistFlowTest, TimeZeroIsIdentity) {
  Rng rng(1);
  const Representation rho = fiber_point(1, 2, rng);
  for (const auto& e : catalog(1, 2).entries) {
    EXPECT_LE(value_distance(apply_twist_flow(rho, e.splitting, 0.0), rho), 1e-13) << e.name();
  }
}

TEST(TwistFlowTest, OnceHoledTorusFirstGenerator) {
  Rng rng(2);
  const Representation rho = fiber_point(1, 1, rng);
  const SplittingDatum& s = catalog(1, 1).entry("1").splitting;
  for (double t : {0.3, -1.7, 5.0}) {
    const Representation out = apply_twist_flow(rho, s, t);
    EXPECT_LE(distance(out.value(1), rho.value(1)), 1e-15);
    EXPECT_LE(distance(out.value(2), rho.value(2) * one_param(rho.value(1), t)), 1e-14);
  }
}

TEST(TwistFlowTest, CentralCurveFreezesFlow) {
  const SurfacePresentation s = surface_presentation(1, 1);
  Rng rng(3);
  const Representation rho(s, {GroupElement::minus_identity(), haar_sample(rng)});
  const SplittingDatum& d = catalog(1, 1).entry("1").splitting;
  for (double t : {0.5, 2.0, 100.0}) EXPECT_LE(value_distance(apply_twist_flow(rho, d, t), rho), 1e-15);
}

TEST(DehnTwistTest, PowerZeroAndExample) {
  Rng rng(4);
  const Representation rho = fiber_point(1, 1, rng);
  const SplittingDatum& s = catalog(1, 1).entry("1").splitting;
  EXPECT_LE(value_distance(apply_dehn_twist(rho, s, 0), rho), 0.0);
  const Representation out = apply_dehn_twist(rho, s, 1);
  EXPECT_LE(distance(out.value(1), rho.value(1)), 1e-15);
  EXPECT_LE(distance(out.value(2), rho.value(2) * rho.value(1).inverse()), 1e-14);
  EXPECT_LE(value_distance(apply_dehn_twist(out, s, -1), rho), 1e-14);
  EXPECT_LE(value_distance(apply_dehn_twist(rho, s, 3), apply_dehn_twist(apply_dehn_twist(rho, s, 1), s, 2)), 1e-13);
}

TEST(DehnTwistTest, AgreesWithFlowAtTwistTime) {
  Rng rng(5);
  for (const auto& [g, n] : std::vector<std::pair<int, int>>{{1, 1}, {0, 4}, {1, 2}}) {
    for (const CurveCatalogEntry* e : catalog(g, n).walk_curves()) {
      for (int i = 0; i < 10; ++i) {
        const Representation rho = fiber_point(g, n, rng);
        const double s = twist_time(rho.evaluate(e->splitting.curve));
        const double d = character_distance(trace_coordinates(apply_dehn_twist(rho, e->splitting, 1)),
                                            trace_coordinates(apply_twist_flow(rho, e->splitting, e->splitting.flow_sign * s)));
        EXPECT_LE(d, 1e-9) << g << "," << n << " " << e->name();
      }
    }
  }
}

TEST(TwistAutomorphismTest, OnceHoledTorusFirstGenerator) {
  const SplittingDatum& s = catalog(1, 1).entry("1").splitting;
  const std::vector<Word> images = twist_automorphism(s, 1);
  ASSERT_EQ(images.size(), 2u);
  EXPECT_EQ(images[0], Word({1}));
  EXPECT_EQ(images[1], Word({2, -1}));
}

TEST(TwistAutomorphismTest, InverseComposesToIdentity) {
  for (const auto& [g, n] : std::vector<std::pair<int, int>>{{1, 1}, {0, 4}, {1, 2}}) {
    for (const auto& e : catalog(g, n).entries) {
      const auto fwd = twist_automorphism(e.splitting, 1);
      const auto back = twist_automorphism(e.splitting, -1);
      for (std::size_t k = 0; k < fwd.size(); ++k) {
        const Word gen = Word::letter(static_cast<int>(k) + 1);
        EXPECT_EQ(substitute(back[k], fwd), gen) << e.name();
        EXPECT_EQ(substitute(fwd[k], back), gen) << e.name();
      }
    }
  }
}

TEST(TwistAutomorphismTest, InducesTheDehnTwist) {
  Rng rng(6);
  for (const auto& e : catalog(1, 2).entries) {
    const Representation rho = fiber_point(1, 2, rng);
    const auto images = twist_automorphism(e.splitting, 1);
    const Representation twisted = apply_dehn_twist(rho, e.splitting, 1);
    for (std::size_t k = 0; k < images.size(); ++k) {
      EXPECT_LE(distance(rho.evaluate(images[k]), twisted.values()[k]), 1e-13) << e.name();
    }
  }
}

TEST(TwistAutomorphismTest, BoundaryWordsStayConjugate) {
  Rng rng(7);
  for (const auto& [g, n] : std::vector<std::pair<int, int>>{{1, 1}, {0, 4}, {1, 2}}) {
    const SurfacePresentation s = surface_presentation(g, n);
    for (const auto& e : catalog(g, n).entries) {
      const auto images = twist_automorphism(e.splitting, 1);
      for (int trial = 0; trial < 100; ++trial) {
        std::vector<GroupElement> v;
        for (int k = 0; k < s.rank(); ++k) v.push_back(haar_sample(rng));
        for (const Word& bw : s.boundary_words()) {
          EXPECT_NEAR(evaluate(substitute(bw, images), v).trace(), evaluate(bw, v).trace(), 1e-12);
        }
      }
    }
  }
}

TEST(ValidateSplittingTest, CatalogEntriesPass) {
  Rng rng(8);
  for (const auto& sc : default_catalog().surfaces()) {
    const SurfacePresentation s = surface_presentation(sc.surface.genus, sc.surface.boundaries);
    const BoundaryCondition b = BoundaryCondition::uniform(sc.surface.boundaries, kB);
    for (const auto& e : sc.entries) {
      const ValidationReport r = validate_splitting(s, e.splitting, b, kEps, 10, rng);
      EXPECT_TRUE(r.passed()) << to_string(sc.surface) << " " << e.name();
      EXPECT_EQ(r.checks.size(), 7u);
    }
  }
}

TEST(ValidateSplittingTest, CorruptedStableLetterFailsRelation) {
  Rng rng(9);
  SplittingDatum s = catalog(1, 1).entry("1").splitting;
  s.stable_letter = Word({1});
  const ValidationReport r =
      validate_splitting(surface_presentation(1, 1), s, BoundaryCondition::uniform(1, kB), kEps, 5, rng);
  EXPECT_FALSE(check(r, 'a').passed);
  EXPECT_FALSE(r.passed());
}

TEST(ValidateSplittingTest, WrongReexpressionFailsRoundTrip) {
  Rng rng(10);
  SplittingDatum s = catalog(1, 1).entry("1").splitting;
  s.reexpressions[1] = Word({1});
  const ValidationReport r =
      validate_splitting(surface_presentation(1, 1), s, BoundaryCondition::uniform(1, kB), kEps, 5, rng);
  EXPECT_FALSE(check(r, 'b').passed);
}

TEST(CatalogTest, Contents) {
  const SurfaceCatalog& torus = catalog(1, 1);
  ASSERT_EQ(torus.entries.size(), 3u);
  for (const auto& e : torus.entries) {
    EXPECT_FALSE(e.peripheral);
    EXPECT_EQ(e.splitting.kind, SplittingKind::Hnn);
  }

  const SurfaceCatalog& sphere4 = catalog(0, 4);
  ASSERT_EQ(sphere4.entries.size(), 7u);
  for (const char* name : {"1", "2", "3", "123"}) EXPECT_TRUE(sphere4.entry(name).peripheral) << name;
  for (const char* name : {"12", "13", "23"}) {
    EXPECT_FALSE(sphere4.entry(name).peripheral);
    EXPECT_TRUE(sphere4.entry(name).separating);
    EXPECT_EQ(sphere4.entry(name).splitting.kind, SplittingKind::Amalgam);
  }

  const SurfaceCatalog& pants = catalog(0, 3);
  for (const auto& e : pants.entries) EXPECT_TRUE(e.peripheral);
  EXPECT_TRUE(pants.walk_curves().empty());

  EXPECT_EQ(catalog(1, 2).entries.size(), 7u);
  EXPECT_THROW(catalog(2, 1), UnsupportedSurface);
  EXPECT_THROW(torus.entry("3"), CatalogError);
}

TEST(CatalogTest, DisjointPairsCommute) {
  Rng rng(11);
  const SurfaceCatalog& sc = catalog(1, 2);
  ASSERT_FALSE(sc.disjoint_pairs.empty());
  for (const auto& [x, y] : sc.disjoint_pairs) {
    const SplittingDatum& a = sc.entry(x).splitting;
    const SplittingDatum& b = sc.entry(y).splitting;
    for (int i = 0; i < 20; ++i) {
      const Representation rho = fiber_point(1, 2, rng);
      const double d = character_distance(trace_coordinates(apply_dehn_twist(apply_dehn_twist(rho, a, 1), b, 1)),
                                          trace_coordinates(apply_dehn_twist(apply_dehn_twist(rho, b, 1), a, 1)));
      EXPECT_LE(d, 1e-9) << x << " " << y;
    }
  }
}

TEST(CatalogTest, IntersectingCurvesDoNotCommute) {
  Rng rng(12);
  const SurfaceCatalog& sc = catalog(0, 4);
  const Representation rho = fiber_point(0, 4, rng);
  const SplittingDatum& a = sc.entry("12").splitting;
  const SplittingDatum& b = sc.entry("23").splitting;
  const double d = character_distance(trace_coordinates(apply_dehn_twist(apply_dehn_twist(rho, a, 1), b, 1)),
                                      trace_coordinates(apply_dehn_twist(apply_dehn_twist(rho, b, 1), a, 1)));
  EXPECT_GT(d, 1e-6);
}

TEST(CatalogTest, PeripheralTwistsFixCharacters) {
  Rng rng(13);
  for (const auto& sc : default_catalog().surfaces()) {
    for (const auto& e : sc.entries) {
      if (!e.peripheral) continue;
      for (int i = 0; i < 10; ++i) {
        const Representation rho = fiber_point(sc.surface.genus, sc.surface.boundaries, rng);
        const CharacterPoint p = trace_coordinates(rho);
        EXPECT_LE(character_distance(p, trace_coordinates(apply_dehn_twist(rho, e.splitting, 1))), 1e-12);
        EXPECT_LE(character_distance(p, trace_coordinates(apply_twist_flow(rho, e.splitting, 0.8))), 1e-12);
      }
    }
  }
}

TEST(CatalogParseTest, Errors) {
  EXPECT_THROW(Catalog::parse("not json"), CatalogError);
  EXPECT_THROW(Catalog::parse(R"({"schema_version": 2, "surfaces": []})"), CatalogError);
  EXPECT_THROW(Catalog::parse(R"({"schema_version": 1, "surfaces": [], "extra": 1})"), CatalogError);
  // Missing index sets.
  EXPECT_THROW(Catalog::parse(R"({"schema_version": 1, "surfaces": [
      {"genus": 0, "boundaries": 3, "curves": [{"index_set": [1], "peripheral": true}], "disjoint_pairs": []}]})"),
               CatalogError);
  // Unknown curve key.
  EXPECT_THROW(Catalog::parse(R"({"schema_version": 1, "surfaces": [
      {"genus": 0, "boundaries": 3, "curves": [
        {"index_set": [1], "peripheral": true, "colour": 1},
        {"index_set": [2], "peripheral": true},
        {"index_set": [1, 2], "peripheral": true}], "disjoint_pairs": []}]})"),
               CatalogError);
  const Catalog ok = Catalog::parse(R"({"schema_version": 1, "surfaces": [
      {"genus": 0, "boundaries": 3, "curves": [
        {"index_set": [1], "peripheral": true},
        {"index_set": [2], "peripheral": true},
        {"index_set": [1, 2], "peripheral": true}], "disjoint_pairs": []}]})");
  EXPECT_EQ(ok.surface(0, 3).entries.size(), 3u);
}

}  // namespace
}  // namespace su2erg
