#pragma once

// Rational polyhedral cones in Y(T)_R and their duals in X(T)_R.

#include <cstddef>
#include <span>
#include <vector>

#include "torikit/lattice.hpp"

namespace torikit {

/// Generators of { x in Q^n : <a, x> >= 0 for every inequality a }.
/// Lineality basis plus one primitive integer vector per extreme ray of the
/// pointed part (rays are determined up to the lineality space).
struct DoubleDescription {
  std::vector<IntVector> lineality;
  std::vector<IntVector> rays;
};

/// Double description with incremental insertion of inequalities; two rays
/// are adjacent when their common tight inequalities have rank d - 2, d the
/// dimension of the pointed part.
DoubleDescription double_description(std::size_t n, std::span<const IntVector> inequalities);

/// Cone spanned by primitive generators. `rays()` are indices into the
/// owning fan's ray table (0..k-1 for a standalone cone) and are sorted.
class Cone {
 public:
  Cone() = default;

  /// Standalone cone; generators are normalized to primitive vectors.
  static Cone generated_by(std::size_t ambient_rank, std::vector<LatticeVector> generators);
  /// Cone on a subset of a fan's ray table (table entries must be primitive).
  static Cone from_ray_table(std::size_t ambient_rank, std::vector<std::size_t> ray_indices,
                             std::span<const LatticeVector> table);

  std::size_t ambient_rank() const noexcept { return n_; }
  std::size_t dim() const noexcept { return dim_; }
  const std::vector<std::size_t>& rays() const noexcept { return rays_; }
  const std::vector<LatticeVector>& generators() const noexcept { return generators_; }
  /// Primitive eta with <eta, mu> >= 0 on the cone, one per facet.
  const std::vector<Character>& facet_normals() const noexcept { return facet_normals_; }
  /// Z-basis of sigma^perp cap X(T).
  const std::vector<Character>& orthogonal() const noexcept { return orthogonal_; }

  /// Sub-cone on the generators at the given positions (not ray indices).
  Cone subcone(const std::vector<std::size_t>& positions) const;

 private:
  void compute();

  std::size_t n_ = 0;
  std::size_t dim_ = 0;
  std::vector<std::size_t> rays_;
  std::vector<LatticeVector> generators_;
  std::vector<Character> facet_normals_;
  std::vector<Character> orthogonal_;
  std::vector<IntVector> dual_lineality_;
};

/// Generators of sigma^vee: facet normals, then +/- a basis of sigma^perp.
struct DualConeDescription {
  std::vector<Character> generators;
};

DualConeDescription dual_cone(const Cone& sigma);

/// All faces including {0} and sigma, ordered by dimension then ray set.
std::vector<Cone> faces(const Cone& sigma);

/// Minimal generating set of the monoid sigma^vee cap X(T). For cones of
/// lower dimension the basis contains +/- a basis of sigma^perp cap X(T).
/// Throws PreconditionError when sigma contains a line.
std::vector<Character> hilbert_basis(const Cone& sigma);

bool is_smooth(const Cone& sigma);
bool has_vertex(const Cone& sigma);
bool contains(const Cone& sigma, const LatticeVector& v);
bool dual_contains(const Cone& sigma, const Character& chi);

/// True when every generator spans an extreme ray of the cone.
bool generators_are_extreme(const Cone& sigma);

/// Extreme rays of the intersection of two cones in the same ambient space;
/// empty for the zero cone. Lineality (if any) is returned in `lineality`.
DoubleDescription intersection(const Cone& a, const Cone& b);

}  // namespace torikit
