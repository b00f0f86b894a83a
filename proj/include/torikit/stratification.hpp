#pragma once

// The decomposition of a smooth toric variety into T-orbits as a strongly
// T-perfect stratification: orbit ordering, normal weights, Euler classes,
// and the equivariant / ordinary Poincare series it determines.

#include <cstddef>
#include <string>
#include <vector>

#include "torikit/fan.hpp"
#include "torikit/lattice.hpp"
#include "torikit/polynomial.hpp"

namespace torikit {

/// chi_v with <chi_v, mu_w> = delta_vw for the rays v, w of a smooth cone,
/// in the order of sigma.rays(). Throws PreconditionError if sigma is not smooth.
std::vector<Character> dual_basis(const Cone& sigma);

struct NormalWeight {
  std::size_t ray;
  Character lift;        // representative in X(T)
  QuotientElement value;  // class in X(T_sigma)
};

struct Stratum {
  std::size_t cone;  // index into Fan::cones()
  std::size_t codim;
  QuotientLatticePresentation stabilizer;
  std::vector<NormalWeight> normal_weights;
  Exponent euler_monomial;  // over all rays of the fan
};

struct Stratification {
  std::vector<Stratum> strata;  // in an order whose prefixes are subfans
};

/// Orders cones by dimension, ties broken by ray set. Requires a smooth fan.
Stratification stratify(const Fan& f);

struct PerfectionFailure {
  std::size_t cone;
  std::size_t ray;
  std::string message;
};

struct PerfectionCertificate {
  std::size_t strata = 0;
  std::size_t weights = 0;
  std::vector<PerfectionFailure> failures;
  bool certified() const noexcept { return failures.empty(); }
};

/// Checks that every normal weight is nonzero in X(T_sigma) (x) Q, so that the
/// Euler class of each stratum is a nonzero product in a polynomial domain.
PerfectionCertificate certify_perfection(const Stratification& s);

/// numerator(t) / (1 - t^2)^denominator_exponent
class PoincareSeries {
 public:
  PoincareSeries(IntVector numerator, std::size_t denominator_exponent);

  const IntVector& numerator() const noexcept { return numerator_; }
  std::size_t denominator_exponent() const noexcept { return denominator_exponent_; }

  /// Coefficient of t^degree in the expanded power series.
  Integer coefficient(std::size_t degree) const;
  std::vector<Integer> coefficients(std::size_t max_degree) const;

  std::string to_string() const;

 private:
  IntVector numerator_;
  std::size_t denominator_exponent_;
};

/// Polynomial in t as a coefficient vector, index = degree. No trailing zeros.
std::string polynomial_to_string(const IntVector& coeffs, const std::string& var = "t");

/// sum over the first `prefix` strata of t^(2 codim) / (1 - t^2)^codim, over (1 - t^2)^n.
PoincareSeries partial_poincare_series(const Fan& f, const Stratification& s, std::size_t prefix);

PoincareSeries equivariant_poincare_series(const Fan& f);

/// Requires a smooth complete fan.
IntVector ordinary_poincare_polynomial(const Fan& f);

/// Throws PreconditionError naming the first singular cone.
void require_smooth(const Fan& f, const std::string& operation);
/// Throws PreconditionError with the completeness note.
void require_complete(const Fan& f, const std::string& operation);

}  // namespace torikit
