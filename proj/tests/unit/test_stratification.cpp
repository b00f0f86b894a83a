#include <algorithm>

#include "doctest.h"
#include "support.hpp"
#include "torikit/errors.hpp"
#include "torikit/stratification.hpp"

using namespace torikit;

namespace {

// Coefficient of t^j in 1 / (1 - t^2)^c.
Integer free_series(std::size_t c, std::size_t j) {
  if (j % 2) return 0;
  if (c == 0) return j == 0 ? 1 : 0;
  return binomial(j / 2 + c - 1, c - 1);
}

IntVector ints(std::initializer_list<long> v) {
  IntVector out;
  for (long x : v) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("stratification of the first quadrant") {
  const Fan f = support::golden("affine_plane");
  const Stratification s = stratify(f);
  REQUIRE(s.strata.size() == 4);
  std::vector<RaySet> order;
  for (const auto& st : s.strata) order.push_back(f.cone(st.cone).rays());
  CHECK(order == std::vector<RaySet>{{}, {0}, {1}, {0, 1}});
  const Stratum& top = s.strata.back();
  REQUIRE(top.normal_weights.size() == 2);
  CHECK(top.normal_weights[0].lift == Character{1, 0});
  CHECK(top.normal_weights[1].lift == Character{0, 1});
  for (const auto& w : top.normal_weights) CHECK_FALSE(w.value.is_zero());
  CHECK(top.euler_monomial == Exponent{1, 1});
}

TEST_CASE("stratification of the torus and P2") {
  const Stratification torus = stratify(support::golden("torus"));
  REQUIRE(torus.strata.size() == 1);
  CHECK(torus.strata[0].normal_weights.empty());
  CHECK(certify_perfection(torus).certified());

  const Stratification p2 = stratify(support::golden("p2"));
  CHECK(p2.strata.size() == 7);
  for (const auto& st : p2.strata)
    if (st.codim == 2) CHECK(st.normal_weights.size() == 2);
  CHECK(certify_perfection(p2).certified());
}

TEST_CASE("stratification invariants on smooth golden fans") {
  for (const auto& name : support::smooth_names()) {
    const Fan f = support::golden(name);
    const Stratification s = stratify(f);
    CHECK(s.strata.size() == f.cones().size());
    std::vector<RaySet> prefix;
    for (const auto& st : s.strata) {
      const Cone& sigma = f.cone(st.cone);
      prefix.push_back(sigma.rays());
      CHECK(st.codim == sigma.dim());
      CHECK(st.normal_weights.size() == st.codim);
      // Every face of this cone already appeared: prefixes are subfans.
      for (std::size_t face : f.faces_of(st.cone))
        CHECK(std::find(prefix.begin(), prefix.end(), f.cone(face).rays()) != prefix.end());
      // Dual basis: <chi_v, mu_w> = delta_vw on the rays of sigma.
      for (std::size_t a = 0; a < st.normal_weights.size(); ++a)
        for (std::size_t b = 0; b < sigma.generators().size(); ++b)
          CHECK(pairing(st.normal_weights[a].lift, sigma.generators()[b]) == (a == b ? 1 : 0));
    }
    const PerfectionCertificate cert = certify_perfection(s);
    CHECK(cert.certified());
    CHECK(cert.strata == s.strata.size());
  }
  CHECK_THROWS_AS(stratify(support::golden("a1_singular")), PreconditionError);
}

TEST_CASE("equivariant Poincare series values") {
  const PoincareSeries torus = equivariant_poincare_series(support::golden("torus"));
  for (std::size_t d = 0; d <= 20; ++d) CHECK(torus.coefficient(d) == (d == 0 ? 1 : 0));

  const PoincareSeries p2 = equivariant_poincare_series(support::golden("p2"));
  CHECK(p2.numerator() == ints({1, 0, 1, 0, 1}));
  CHECK(p2.denominator_exponent() == 2);
  CHECK(p2.to_string() == "(1 + t^2 + t^4)/(1 - t^2)^2");

  const PoincareSeries quadrant = equivariant_poincare_series(support::golden("affine_plane"));
  CHECK(quadrant.numerator() == ints({1}));
  for (std::size_t d = 0; d <= 20; ++d) CHECK(quadrant.coefficient(d) == free_series(2, d));
}

TEST_CASE("series coefficients are nonnegative and vanish in odd degrees") {
  for (const auto& name : support::smooth_names()) {
    const PoincareSeries s = equivariant_poincare_series(support::golden(name));
    const auto c = s.coefficients(30);
    REQUIRE(c.size() == 31);
    for (std::size_t d = 0; d < c.size(); ++d) {
      CHECK(c[d] >= 0);
      if (d % 2) CHECK(c[d] == 0);
      CHECK(c[d] == s.coefficient(d));
    }
  }
}

TEST_CASE("Betti additivity along the stratification") {
  for (const auto& name : support::smooth_names()) {
    const Fan f = support::golden(name);
    const Stratification s = stratify(f);
    for (std::size_t k = 1; k <= s.strata.size(); ++k) {
      const PoincareSeries before = partial_poincare_series(f, s, k - 1);
      const PoincareSeries after = partial_poincare_series(f, s, k);
      const std::size_t c = s.strata[k - 1].codim;
      for (std::size_t i = 0; i <= 20; ++i) {
        const Integer stratum = i >= 2 * c ? free_series(c, i - 2 * c) : Integer(0);
        CHECK(after.coefficient(i) == before.coefficient(i) + stratum);
      }
    }
    const PoincareSeries whole = partial_poincare_series(f, s, s.strata.size());
    CHECK(whole.numerator() == equivariant_poincare_series(f).numerator());
  }
}

TEST_CASE("ordinary Poincare polynomials") {
  CHECK(ordinary_poincare_polynomial(support::golden("p1")) == ints({1, 0, 1}));
  CHECK(ordinary_poincare_polynomial(support::golden("p2")) == ints({1, 0, 1, 0, 1}));
  CHECK(ordinary_poincare_polynomial(support::golden("p1xp1")) == ints({1, 0, 2, 0, 1}));
  CHECK(ordinary_poincare_polynomial(support::golden("f1")) == ints({1, 0, 2, 0, 1}));
  CHECK(polynomial_to_string(ints({1, 0, 2, 0, 1})) == "1 + 2t^2 + t^4");
  CHECK_THROWS_AS(ordinary_poincare_polynomial(support::golden("affine_plane")), PreconditionError);
  CHECK_THROWS_AS(ordinary_poincare_polynomial(support::golden("a1_singular")), PreconditionError);
}

TEST_CASE("ordinary Poincare polynomial: degree, duality, Euler characteristic") {
  for (const auto& name : {"p1", "p2", "p1xp1", "f1"}) {
    const Fan f = support::golden(name);
    const IntVector p = ordinary_poincare_polynomial(f);
    CHECK(p.size() == 2 * f.rank() + 1);
    CHECK(p.front() == 1);
    IntVector reversed(p.rbegin(), p.rend());
    CHECK(reversed == p);
    Integer at_one = 0;
    for (const auto& c : p) at_one += c;
    CHECK(at_one == static_cast<long>(f.maximal_cones().size()));
  }
}

TEST_CASE("precondition messages name the violated entry") {
  try {
    ordinary_poincare_polynomial(support::golden("affine_plane"));
    FAIL("expected a precondition error");
  } catch (const PreconditionError& e) {
    CHECK(std::string(e.what()).find("fan not complete: ray 0 borders one maximal cone") != std::string::npos);
  }
  try {
    stratify(support::golden("a1_singular"));
    FAIL("expected a precondition error");
  } catch (const PreconditionError& e) {
    CHECK(std::string(e.what()).find("fan not smooth: cone {0,1}") != std::string::npos);
  }
}
