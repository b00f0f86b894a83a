#pragma once

// Equivariant and ordinary Picard groups of a smooth toric variety:
//   Pic_T(X) = H^2_T(X) = lim X(T_sigma),   Pic(X) = H^2_T(X) / X(T).
// The limit is taken over the maximal cones with pairwise compatibility on
// intersections. Every cone is a face of a maximal one and the restriction
// maps factor through inclusions, so agreement on pairwise intersections of
// maximal cones gives agreement on every face.

#include <cstddef>
#include <optional>
#include <vector>

#include "torikit/fan.hpp"
#include "torikit/lattice.hpp"

namespace torikit {

/// One representative character per maximal cone; the datum is its class in
/// X(T_sigma) = X(T) / (sigma^perp cap X(T)).
struct CharacterFamily {
  std::vector<std::size_t> cones;  // indices into Fan::cones(), the maximal cones
  std::vector<Character> characters;

  CharacterFamily& operator+=(const CharacterFamily& o);
  friend CharacterFamily operator+(CharacterFamily a, const CharacterFamily& b) { return a += b; }
};

struct GroupSummary {
  std::size_t rank = 0;
  IntVector torsion;
};

struct PicardReport {
  GroupSummary equivariant;
  std::vector<CharacterFamily> equivariant_basis;  // free generators, then torsion generators
  std::optional<GroupSummary> ordinary;
};

class PicardGroup {
 public:
  /// Requires a smooth fan.
  explicit PicardGroup(const Fan& f);

  const QuotientLatticePresentation& equivariant() const noexcept { return equivariant_; }
  const QuotientLatticePresentation& ordinary() const noexcept { return ordinary_; }

  /// Class in H^2_T(X). Throws PreconditionError for an incompatible family.
  QuotientElement equivariant_class(const CharacterFamily& family) const;
  /// Class in Pic(X) = H^2_T(X) / X(T).
  QuotientElement ordinary_class(const CharacterFamily& family) const;
  std::vector<CharacterFamily> equivariant_basis() const;

 private:
  IntVector coordinates(const CharacterFamily& family) const;

  std::size_t n_;
  std::vector<std::size_t> maximal_;
  IntMatrix kernel_;       // columns: basis of compatible tuples in Z^{n * #maximal}
  IntMatrix left_inverse_;  // kernel coordinates of a compatible tuple
  QuotientLatticePresentation equivariant_;
  QuotientLatticePresentation ordinary_;
  Fan fan_;
};

PicardReport equivariant_picard(const Fan& f);
PicardReport picard(const Fan& f);

bool is_compatible(const Fan& f, const CharacterFamily& family);
/// Per-cone equality of classes in X(T_sigma).
bool families_equal(const Fan& f, const CharacterFamily& a, const CharacterFamily& b);
CharacterFamily constant_family(const Fan& f, const Character& chi);

/// Isotropy family of O(sum_v a_v D_v) with each section s_v of weight zero:
/// chi_sigma solves <chi_sigma, mu_v> = -a_v for the rays v of sigma.
CharacterFamily divisor_class(const Fan& f, const IntVector& a);

/// chi with family = constant family of chi, if one exists.
std::optional<Character> is_principal(const Fan& f, const CharacterFamily& family);

}  // namespace torikit
