#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "su2erg/random.hpp"
#include "su2erg/su2.hpp"
#include "su2erg/surface.hpp"

namespace su2erg {

// Prescribed boundary traces b_1 .. b_n, each in [-2, 2].
class BoundaryCondition {
 public:
  BoundaryCondition() = default;
  // Throws std::invalid_argument when some b_i lies outside [-2, 2].
  explicit BoundaryCondition(std::vector<double> values);
  // The same value on every boundary component.
  static BoundaryCondition uniform(int boundaries, double value);

  std::span<const double> values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }

 private:
  std::vector<double> values_;
};

// A homomorphism from the surface group to SU(2), stored by the images of the
// free generators A_1 .. A_N. When tagged with a boundary condition, the
// boundary traces are within `epsilon` of it.
class Representation {
 public:
  // Untagged representation (no boundary condition).
  Representation(SurfacePresentation surface, std::vector<GroupElement> values);
  // Tagged; throws std::invalid_argument when the fiber condition fails or
  // sizes disagree with the surface.
  Representation(SurfacePresentation surface, std::vector<GroupElement> values,
                 BoundaryCondition boundary, double epsilon);

  const SurfacePresentation& surface() const { return surface_; }
  std::span<const GroupElement> values() const { return values_; }
  const GroupElement& value(int generator) const {
    return values_.at(static_cast<std::size_t>(generator - 1));
  }
  const std::optional<BoundaryCondition>& boundary() const { return boundary_; }
  double epsilon() const { return epsilon_; }

  GroupElement evaluate(const Word& w) const;
  // tr(rho(boundary_i)) for i = 1..n.
  std::vector<double> boundary_traces() const;

  // Same surface and tag, new generator values (unchecked: maps that preserve
  // boundary traces keep the tag meaningful).
  Representation with_values(std::vector<GroupElement> values) const;
  // h rho h^{-1}.
  Representation conjugated(const GroupElement& h) const;

 private:
  SurfacePresentation surface_;
  std::vector<GroupElement> values_;
  std::optional<BoundaryCondition> boundary_;
  double epsilon_ = 0.0;
};

// Trace coordinates f_I for all I in index_sets(N), stored in that order.
class CharacterPoint {
 public:
  CharacterPoint(SurfaceId surface, int rank, std::vector<double> coords);

  SurfaceId surface() const { return surface_; }
  int rank() const { return rank_; }
  std::span<const double> coords() const { return coords_; }
  // Throws MissingVariable for an index set outside the surface's alphabet.
  double operator[](const IndexSet& index_set) const;
  std::map<IndexSet, double> as_map() const;

 private:
  SurfaceId surface_;
  int rank_;
  std::vector<double> coords_;
};

struct SamplerOptions {
  std::uint64_t proposal_budget = 10'000'000;
};

struct FiberDraw {
  Representation representation;
  std::uint64_t proposals = 0;
};

// Draws from Haar measure on SU(2)^N conditioned on |tr(rho(boundary_i)) - b_i|
// <= epsilon for every i.
//
// Generators that are themselves boundary words (A_{2g+i}, i < n) are drawn
// directly from Haar measure conditioned on their trace window: the trace has
// density proportional to sqrt(4 - t^2), the axis is uniform and independent.
// The remaining generators are Haar; the last boundary condition is then
// imposed by rejection. One proposal is one such joint draw. The accepted
// tuple has exactly the conditioned Haar law.
//
// Throws FiberEmptyOrThin when the budget is exhausted or a window misses
// [-2, 2]; std::invalid_argument on epsilon <= 0 or a size mismatch.
FiberDraw sample_representation(const SurfacePresentation& surface, const BoundaryCondition& b,
                                double epsilon, Rng& rng, const SamplerOptions& options = {});

CharacterPoint trace_coordinates(const Representation& rho);

// max_I |p.f_I - q.f_I|; throws SurfaceMismatch for different surfaces.
double character_distance(const CharacterPoint& p, const CharacterPoint& q);

// 6g - 6 + 2n.
int expected_dimension(SurfaceId surface);

struct TangentRankReport {
  int rank = 0;
  // Rank of the boundary-trace differentials; n at smooth points.
  int boundary_rank = 0;
  int expected = 0;
  // Singular values of the coordinate differentials restricted to the kernel
  // of the boundary differentials, descending.
  std::vector<double> singular_values;
};

// Numerical rank of {d f_I} on the tangent space of the fiber at rho.
//
// Differentials are central differences (h = 1e-5) along rho(A_k) ->
// rho(A_k) exp(h u) for the 3N basis directions. The coordinate Jacobian is
// restricted to the kernel of the boundary-trace Jacobian and its singular
// values above 1e-7 times the largest are counted. Conjugation directions lie
// in the kernel of every d f_I and so never add rank.
TangentRankReport tangent_rank_report(const Representation& rho, const BoundaryCondition& b);
int tangent_rank(const Representation& rho, const BoundaryCondition& b);

// "sample,f1,f2,f12"
void write_csv_header(std::ostream& os, int rank);
// One row per point, numbered from `first_index`; 17 significant digits, LF.
void write_csv_rows(std::ostream& os, std::span<const CharacterPoint> points,
                    std::size_t first_index = 0);

}  // namespace su2erg
