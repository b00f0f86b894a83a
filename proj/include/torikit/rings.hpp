#pragma once

// The Stanley-Reisner algebra of a smooth fan, identified with the
// equivariant cohomology H*_T(X), and the maps out of it: restriction to the
// orbits, linear forms from characters, and the quotient giving H*(X).

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "torikit/fan.hpp"
#include "torikit/polynomial.hpp"

namespace torikit {

class StanleyReisnerRing;

/// Integer combination of face monomials. Monomials whose support is not a
/// simplex are zero and never stored.
class SRElement {
 public:
  const std::map<Exponent, Integer>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t variables() const noexcept { return variables_; }

  SRElement& operator+=(const SRElement& o);
  SRElement& operator-=(const SRElement& o);
  friend SRElement operator+(SRElement a, const SRElement& b) { return a += b; }
  friend SRElement operator-(SRElement a, const SRElement& b) { return a -= b; }
  friend SRElement operator*(const Integer& k, SRElement a);
  friend bool operator==(const SRElement&, const SRElement&) = default;

  std::string to_string() const;

 private:
  friend class StanleyReisnerRing;
  explicit SRElement(std::size_t variables) : variables_(variables) {}
  void add_term(const Exponent& e, const Integer& c);

  std::size_t variables_ = 0;
  std::map<Exponent, Integer> terms_;
};

class StanleyReisnerRing {
 public:
  /// Requires a smooth fan.
  explicit StanleyReisnerRing(const Fan& f);

  std::size_t variables() const noexcept { return variables_; }
  bool is_face(const RaySet& support) const { return faces_.contains(support); }

  SRElement zero() const { return SRElement(variables_); }
  SRElement one() const;
  SRElement variable(std::size_t v) const;
  /// The monomial with this exponent, or zero when its support is a non-face.
  SRElement monomial(const Exponent& e) const;

  SRElement multiply(const SRElement& a, const SRElement& b) const;
  /// Face monomials of total degree k (cohomological degree 2k), sorted.
  std::vector<Exponent> face_monomials(unsigned k) const;

 private:
  std::size_t variables_;
  std::set<RaySet> faces_;
};

RaySet support(const Exponent& e);

struct SRPresentation {
  std::size_t generators = 0;
  std::vector<RaySet> relations;  // squarefree monomials of minimal non-faces

  std::string to_string() const;
};

/// Z[x_v] / (prod_{v in Gamma} x_v : Gamma a minimal non-face). Smooth fans only.
SRPresentation sr_presentation(const Fan& f);

/// Rank of R_Sigma in the given cohomological degree (0 in odd degrees).
Integer face_monomial_count(const Fan& f, unsigned degree);

struct LinearForm {
  IntVector coefficients;  // <chi, mu_v> for each ray v

  std::string to_string() const;
  friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

LinearForm char_to_linear_form(const Fan& f, const Character& chi);
SRElement to_element(const StanleyReisnerRing& ring, const LinearForm& form);

struct GradedPiece {
  unsigned degree = 0;  // cohomological degree 2k
  std::size_t rank = 0;
  IntVector torsion;                 // elementary divisors > 1
  std::vector<Exponent> basis;       // monomials whose classes span the piece over Q
};

struct GradedGroupReport {
  std::vector<GradedPiece> pieces;
};

/// H*(X) = R_Sigma / (theta_1, ..., theta_n) in degrees <= max_degree, with
/// theta_i the linear forms of the rows of `character_basis` (default: the
/// standard basis of X(T)). Requires a smooth complete fan.
GradedGroupReport ordinary_cohomology(const Fan& f, unsigned max_degree,
                                      const std::optional<IntMatrix>& character_basis = std::nullopt);

/// Restriction R_Sigma -> Sym* X(T_sigma). Polynomials are written in the
/// coordinates of the free part of the stabilizer presentation of sigma.
class RestrictionMap {
 public:
  /// Requires a smooth fan.
  explicit RestrictionMap(const Fan& f);

  Polynomial restrict(const SRElement& a, std::size_t cone) const;
  /// Image of x_v on the given cone.
  const Polynomial& image_of_variable(std::size_t cone, std::size_t v) const;
  std::size_t target_variables(std::size_t cone) const { return dims_.at(cone); }

 private:
  std::size_t variables_;
  std::vector<std::vector<Polynomial>> images_;  // [cone][ray]
  std::vector<std::size_t> dims_;
};

Polynomial restriction_map(const Fan& f, const SRElement& a, std::size_t cone);

struct InjectivityDegree {
  unsigned degree = 0;
  std::size_t source_rank = 0;
  std::size_t image_rank = 0;
  bool injective() const noexcept { return source_rank == image_rank; }
};

struct InjectivityReport {
  std::vector<InjectivityDegree> degrees;
  bool injective() const;
};

/// Rank over Q of R_Sigma^{2k} -> (+)_sigma Sym^k X(T_sigma) for 2k <= max_degree.
InjectivityReport check_restriction_injectivity(const Fan& f, unsigned max_degree);

}  // namespace torikit
