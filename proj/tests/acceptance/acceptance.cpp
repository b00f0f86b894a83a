// Acceptance criteria AC1-AC9. One line per criterion; exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "support.hpp"
#include "torikit/cli.hpp"
#include "torikit/picard.hpp"
#include "torikit/rings.hpp"
#include "torikit/stratification.hpp"

using namespace torikit;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition && ok) {
      ok = false;
      detail = what;
    }
  }
};

int failures = 0;

// Sub-millisecond bounds are timed as the best of three runs, so that one-time
// process costs (first exception throw, cold caches) are not charged to them.
void criterion(const char* id, const char* title, double bound_ms, const std::function<Outcome()>& body) {
  Outcome out;
  double ms = 0;
  const int runs = bound_ms <= 1.0 ? 3 : 1;
  for (int run = 0; run < runs; ++run) {
    const auto start = std::chrono::steady_clock::now();
    try {
      out = body();
    } catch (const std::exception& e) {
      out.ok = false;
      out.detail = std::string("exception: ") + e.what();
    }
    const double t = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    ms = run == 0 ? t : std::min(ms, t);
  }
  const bool in_time = ms < bound_ms;
  const bool pass = out.ok && in_time;
  if (!pass) ++failures;
  char timing[96];
  std::snprintf(timing, sizeof timing, "%.3f ms%s, bound %g ms", ms, runs > 1 ? " best of 3" : "", bound_ms);
  std::cout << (pass ? "[PASS] " : "[FAIL] ") << id << " " << title << ": " << out.detail << " (" << timing << ")";
  if (out.ok && !in_time) std::cout << " too slow";
  std::cout << std::endl;
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

IntVector ints(std::initializer_list<long> v) {
  IntVector out;
  for (long x : v) out.emplace_back(x);
  return out;
}

int run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "torikit");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  return cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
}

const std::vector<std::string> kComplete{"p1", "p2", "p1xp1", "f1"};

}  // namespace

int main() {
  // Load the golden fans once; parsing is not part of the criteria below.
  std::map<std::string, Fan> fans;
  for (const auto& name : support::golden_names()) fans.emplace(name, support::golden(name));

  criterion("AC1", "affine-plane orbit count", 1.0, [&] {
    Outcome o;
    const OrbitTable t = orbit_table(fans.at("affine_plane"));
    std::vector<std::size_t> codims;
    for (const auto& orbit : t.orbits) codims.push_back(orbit.codim);
    o.require(codims == std::vector<std::size_t>{0, 1, 1, 2}, "codims " + join(codims));
    o.detail = o.ok ? std::to_string(t.orbits.size()) + " orbits, codims " + join(codims) : o.detail;
    return o;
  });

  criterion("AC2", "two-path Poincare agreement", 1000.0, [&] {
    Outcome o;
    const std::map<std::string, IntVector> expected{{"p1", ints({1, 0, 1})},
                                                    {"p2", ints({1, 0, 1, 0, 1})},
                                                    {"p1xp1", ints({1, 0, 2, 0, 1})},
                                                    {"f1", ints({1, 0, 2, 0, 1})}};
    for (const auto& name : kComplete) {
      const Fan& f = fans.at(name);
      const IntVector strata = ordinary_poincare_polynomial(f);
      IntVector ring(2 * f.rank() + 1, Integer(0));
      for (const auto& piece : ordinary_cohomology(f, 2 * static_cast<unsigned>(f.rank())).pieces)
        ring[piece.degree] = static_cast<unsigned long>(piece.rank);
      o.require(strata == ring, name + ": stratification " + polynomial_to_string(strata) + " vs ring " +
                                    polynomial_to_string(ring));
      o.require(strata == expected.at(name), name + ": unexpected " + polynomial_to_string(strata));
    }
    if (o.ok) o.detail = "P1, P2, P1xP1, F1 agree with 1+t^2, 1+t^2+t^4, 1+2t^2+t^4, 1+2t^2+t^4";
    return o;
  });

  criterion("AC3", "graded-rank identity", 1000.0, [&] {
    Outcome o;
    std::size_t checks = 0;
    for (const auto& name : support::smooth_names()) {
      const Fan& f = fans.at(name);
      const PoincareSeries s = equivariant_poincare_series(f);
      for (unsigned d = 0; d <= 20; d += 2, ++checks)
        o.require(face_monomial_count(f, d) == s.coefficient(d), name + " degree " + std::to_string(d));
    }
    if (o.ok) o.detail = std::to_string(checks) + " (fan, degree) pairs on 6 smooth golden fans";
    return o;
  });

  criterion("AC4", "restriction injectivity", 5000.0, [&] {
    Outcome o;
    for (const auto& name : support::smooth_names()) {
      const InjectivityReport r = check_restriction_injectivity(fans.at(name), 10);
      o.require(r.injective() && r.degrees.size() == 6, name + " not injective");
    }
    if (o.ok) o.detail = "injective in degrees 0..10 on 6 smooth golden fans";
    return o;
  });

  criterion("AC5", "perfection certificate", 1000.0, [&] {
    Outcome o;
    std::size_t strata = 0;
    for (const auto& name : support::smooth_names()) {
      const Fan& f = fans.at(name);
      const Stratification s = stratify(f);
      o.require(certify_perfection(s).certified(), name + ": zero normal weight");
      const StanleyReisnerRing ring(f);
      const RestrictionMap res(f);
      for (const auto& st : s.strata) {
        Polynomial product = Polynomial::constant(res.target_variables(st.cone), 1);
        for (const auto& w : st.normal_weights) product = product * Polynomial::linear(w.value.free);
        o.require(res.restrict(ring.monomial(st.euler_monomial), st.cone) == product,
                  name + ": Euler class of " + to_string(f.cone(st.cone).rays()));
        ++strata;
      }
    }
    if (o.ok) o.detail = std::to_string(strata) + " strata certified, Euler classes match";
    return o;
  });

  criterion("AC6", "Picard groups", 1000.0, [&] {
    Outcome o;
    const std::map<std::string, std::size_t> expected{{"p2", 1}, {"p1xp1", 2}, {"f1", 2}};
    for (const auto& [name, rank] : expected) {
      const PicardReport r = picard(fans.at(name));
      o.require(r.ordinary->rank == rank && r.ordinary->torsion.empty(),
                name + ": Pic rank " + std::to_string(r.ordinary->rank));
    }
    std::size_t principal = 0;
    for (const auto& name : support::smooth_names()) {
      const Fan& f = fans.at(name);
      const PicardReport r = picard(f);
      o.require(Integer(static_cast<unsigned long>(r.equivariant.rank)) == face_monomial_count(f, 2),
                name + ": Pic_T rank differs from degree-2 count");
      for (int trial = 0; trial < 20; ++trial, ++principal) {
        const Character chi(support::random_vector(f.rank(), -9, 9));
        IntVector a;
        for (const auto& mu : f.rays()) a.push_back(pairing(chi, mu));
        o.require(is_principal(f, divisor_class(f, a)).has_value(), name + ": principal divisor not principal");
      }
    }
    if (o.ok) o.detail = "ranks 1,2,2 torsion-free; Pic_T = H^2_T count; " + std::to_string(principal) + " principal divisors";
    return o;
  });

  criterion("AC7", "Hilbert basis soundness and completeness", 30000.0, [&] {
    Outcome o;
    std::size_t points = 0;
    for (int trial = 0; trial < 10; ++trial) {
      const std::size_t n = trial < 5 ? 2 : 3;
      const Cone sigma = support::random_pointed_cone(n, -5, 5);
      std::vector<IntVector> basis;
      for (const auto& h : hilbert_basis(sigma)) {
        o.require(dual_contains(sigma, h), "element outside the dual cone");
        basis.push_back(h.coords());
      }
      IntVector grading(n, Integer(0));
      for (const auto& mu : sigma.generators())
        for (std::size_t i = 0; i < n; ++i) grading[i] += mu[i];
      for (std::size_t i = 0; i < basis.size(); ++i) {
        std::vector<IntVector> others = basis;
        others.erase(others.begin() + static_cast<std::ptrdiff_t>(i));
        o.require(!support::MonoidOracle(others, grading).contains(basis[i]), "reducible basis element");
      }
      support::MonoidOracle monoid(basis, grading);
      for (const auto& x : support::box_points(n, 10)) {
        bool inside = true;
        for (const auto& mu : sigma.generators()) inside = inside && pairing(Character(x), mu) >= 0;
        if (!inside) continue;
        ++points;
        o.require(monoid.contains(x), "lattice point " + to_string(x) + " not generated");
      }
    }
    if (o.ok) o.detail = "10 random cones (5 in rank 2, 5 in rank 3), " + std::to_string(points) + " dual lattice points generated";
    return o;
  });

  criterion("AC8", "Smith normal form contract", 5000.0, [&] {
    Outcome o;
    for (int trial = 0; trial < 200; ++trial) {
      const auto r = static_cast<std::size_t>(support::uniform(1, 8));
      const auto c = static_cast<std::size_t>(support::uniform(1, 8));
      const IntMatrix m = support::random_matrix(r, c, -9, 9);
      const SmithForm s = smith_normal_form(m);
      o.require(s.U * m * s.V == s.D, "UMV != D");
      o.require(abs(determinant(s.U)) == 1 && abs(determinant(s.V)) == 1, "U or V not unimodular");
      const IntVector d = s.diagonal();
      for (std::size_t i = 0; i < s.D.rows(); ++i)
        for (std::size_t j = 0; j < s.D.cols(); ++j)
          if (i != j) o.require(s.D(i, j) == 0, "D not diagonal");
      for (std::size_t i = 0; i + 1 < d.size(); ++i) {
        o.require(d[i] >= 0, "negative divisor");
        o.require(d[i] == 0 ? d[i + 1] == 0 : d[i + 1] % d[i] == 0, "divisor chain broken");
      }
    }
    if (o.ok) o.detail = "200 random matrices up to 8x8, entries in [-9,9]";
    return o;
  });

  criterion("AC9", "negative tests", 1.0, [&] {
    Outcome o;
    const std::string a1 = support::fan_path("a1_singular");
    o.require(run_cli({"ring", a1}) == 1, "ring accepted the A1 fan");
    o.require(run_cli({"certify", a1}) == 1, "certify accepted the A1 fan");
    const ValidationReport v = validate_fan(fans.at("overlap"));
    bool axiom_b = false;
    for (const auto& x : v.violations) axiom_b = axiom_b || x.kind == Violation::Kind::BadIntersection;
    o.require(!v.valid() && axiom_b, "overlap file passed validation");
    if (o.ok) o.detail = "A1 fan rejected by ring and certify (exit 1); overlap fails axiom (b)";
    return o;
  });

  return failures == 0 ? 0 : 1;
}
