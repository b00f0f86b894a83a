#include <algorithm>
#include <set>

#include "doctest.h"
#include "support.hpp"
#include "torikit/errors.hpp"

using namespace torikit;

namespace {

Fan fan2(std::vector<LatticeVector> rays, std::vector<RaySet> cones, Fan::Closure closure = Fan::Closure::AddFaces) {
  return Fan::from_cones(2, std::move(rays), cones, closure);
}

bool has_kind(const ValidationReport& r, Violation::Kind kind) {
  return std::any_of(r.violations.begin(), r.violations.end(), [&](const Violation& v) { return v.kind == kind; });
}

void check_parse_error(const std::string& text, std::size_t line, const std::string& fragment) {
  try {
    parse_fan(text);
    FAIL("expected a parse error for: " << text);
  } catch (const ParseError& e) {
    CHECK(e.line() == line);
    CHECK(std::string(e.what()).find(fragment) != std::string::npos);
  }
}

}  // namespace

TEST_CASE("parse examples") {
  const ParsedFan quadrant = parse_fan("rank 2\nrays 2\n1 0\n0 1\nmaxcones 1\n0 1\n");
  CHECK(quadrant.fan.cones().size() == 4);
  CHECK(quadrant.warnings.empty());
  CHECK(support::golden("p2").cones().size() == 7);
  const ParsedFan torus = parse_fan("rank 3\nrays 0\nmaxcones 0\n");
  CHECK(torus.fan.cones().size() == 1);
  CHECK(torus.fan.cone(0).dim() == 0);
}

TEST_CASE("parse tolerates comments and blank lines") {
  const ParsedFan p = parse_fan("# P1\n\nrank 1   # lattice\nrays 2\n 1\n\n-1\nmaxcones 2\n0\n1 # last\n");
  CHECK(p.fan.cones().size() == 3);
}

TEST_CASE("non-primitive rays are normalized with a warning") {
  const ParsedFan p = parse_fan("rank 2\nrays 2\n2 0\n0 3\nmaxcones 1\n0 1\n");
  CHECK(p.fan.rays()[0] == LatticeVector{1, 0});
  CHECK(p.fan.rays()[1] == LatticeVector{0, 1});
  CHECK(p.warnings.size() == 2);
  CHECK(p.warnings[0].find("line 3") != std::string::npos);
}

TEST_CASE("parse errors carry line numbers") {
  check_parse_error("", 1, "unexpected end of input");
  check_parse_error("rank 2\nrays 1\n1 x\nmaxcones 0\n", 3, "expected an integer");
  check_parse_error("rank 2\nrays 1\n1 0 0\nmaxcones 0\n", 3, "");
  check_parse_error("rank 2\nrays 1\n0 0\nmaxcones 0\n", 3, "zero");
  check_parse_error("rank 2\nrays 2\n1 0\n2 0\nmaxcones 0\n", 4, "duplicate ray");
  check_parse_error("rank 2\nrays 1\n1 0\nmaxcones 1\n3\n", 5, "out of range");
  check_parse_error("rank 2\nrays 1\n1 0\nmaxcones 1\n0 0\n", 5, "repeated");
  check_parse_error("rank 2\nrays 1\n1 0\nmaxcones 1\n0\nextra\n", 6, "unexpected content");
  check_parse_error("rank 0\nrays 0\nmaxcones 0\n", 1, "rank must be positive");
  check_parse_error("rank 2\nrays 2\n1 0\n", 4, "unexpected end of input");
  check_parse_error("dimension 2\n", 1, "");
}

TEST_CASE("parse error column") {
  try {
    parse_fan("rank 2\nrays 1\n1 zz\nmaxcones 0\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.column() == 3);
  }
}

TEST_CASE("load_fan reports unreadable files") {
  CHECK_THROWS_AS(load_fan("/nonexistent/file.fan"), IoError);
}

TEST_CASE("validation") {
  CHECK(validate_fan(support::golden("p2")).valid());
  const ValidationReport overlap = validate_fan(support::golden("overlap"));
  CHECK_FALSE(overlap.valid());
  CHECK(has_kind(overlap, Violation::Kind::BadIntersection));

  // Cone list missing a ray of a listed 2-cone.
  const Fan missing = fan2({{1, 0}, {0, 1}}, {{}, {0}, {0, 1}}, Fan::Closure::AsGiven);
  const ValidationReport m = validate_fan(missing);
  CHECK(has_kind(m, Violation::Kind::MissingFace));

  const Fan line = fan2({{1, 0}, {-1, 0}}, {{0, 1}});
  CHECK(has_kind(validate_fan(line), Violation::Kind::NoVertex));

  const Fan redundant = fan2({{1, 0}, {1, 1}, {0, 1}}, {{0, 1, 2}});
  CHECK(has_kind(validate_fan(redundant), Violation::Kind::RedundantGenerator));

  // Two 2-cones meeting in a ray shared as a face of both: valid.
  CHECK(validate_fan(fan2({{1, 0}, {0, 1}, {-1, 0}}, {{0, 1}, {1, 2}})).valid());
  // Crossing without sharing rays.
  CHECK(has_kind(validate_fan(fan2({{1, 0}, {0, 1}, {1, 1}, {1, -1}}, {{0, 1}, {2, 3}})), Violation::Kind::BadIntersection));
}

TEST_CASE("fan construction rejects bad ray tables") {
  CHECK_THROWS(fan2({{0, 0}}, {}));
  CHECK_THROWS(fan2({{2, 0}}, {}));
  CHECK_THROWS(fan2({{1, 0}, {1, 0}}, {}));
  CHECK_THROWS_AS(fan2({{1, 0, 0}}, {}), DimensionMismatch);
}

TEST_CASE("completeness") {
  CHECK(is_complete(support::golden("p2")));
  CHECK(is_complete(support::golden("p1")));
  CHECK(is_complete(support::golden("p1xp1")));
  CHECK(is_complete(support::golden("f1")));
  const CompletenessReport quadrant = completeness(support::golden("affine_plane"));
  CHECK_FALSE(quadrant.complete);
  CHECK(quadrant.note == "ray 0 borders one maximal cone");
  const CompletenessReport torus = completeness(support::golden("torus"));
  CHECK_FALSE(torus.complete);
  CHECK(torus.note.find("dimension 0 < 2") != std::string::npos);
  // P2 with one maximal cone removed.
  CHECK_FALSE(is_complete(fan2({{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}})));
}

TEST_CASE("smoothness of fans") {
  CHECK(is_smooth_fan(support::golden("p2")));
  CHECK(is_smooth_fan(support::golden("torus")));
  CHECK_FALSE(is_smooth_fan(support::golden("a1_singular")));
  CHECK(first_singular_cone(support::golden("a1_singular")).has_value());
}

TEST_CASE("orbit table") {
  const OrbitTable quadrant = orbit_table(support::golden("affine_plane"));
  REQUIRE(quadrant.orbits.size() == 4);
  std::vector<std::size_t> codims;
  for (const auto& o : quadrant.orbits) codims.push_back(o.codim);
  CHECK(codims == std::vector<std::size_t>{0, 1, 1, 2});

  const OrbitTable p2 = orbit_table(support::golden("p2"));
  CHECK(p2.orbits.size() == 7);
  CHECK(std::count_if(p2.orbits.begin(), p2.orbits.end(), [](const Orbit& o) { return o.codim == 2; }) == 3);

  const OrbitTable torus = orbit_table(support::golden("torus"));
  REQUIRE(torus.orbits.size() == 1);
  CHECK(torus.orbits[0].stabilizer.rank() == 0);
  CHECK(torus.orbits[0].stabilizer.torsion().empty());
}

TEST_CASE("orbit invariants on golden fans") {
  for (const auto& name : {"affine_plane", "torus", "p1", "p2", "p1xp1", "f1", "a1_singular"}) {
    const Fan f = support::golden(name);
    const OrbitTable t = orbit_table(f);
    CHECK(t.orbits.size() == f.cones().size());
    for (const auto& o : t.orbits) {
      const Cone& sigma = f.cone(o.cone);
      CHECK(o.codim == sigma.dim());
      CHECK(o.stabilizer.rank() == sigma.dim());
      if (is_smooth(sigma)) CHECK(o.stabilizer.torsion().empty());
      CHECK(o.divisors == sigma.rays());
      // Faces of sigma form a face-closed family.
      for (std::size_t face : f.faces_of(o.cone))
        for (std::size_t sub : f.faces_of(face)) CHECK(f.is_face_of(sub, o.cone));
    }
  }
}

TEST_CASE("restriction of stabilizer characters along faces is surjective") {
  const Fan f = support::golden("p2");
  for (std::size_t s = 0; s < f.cones().size(); ++s) {
    const auto big = stabilizer_characters(f.cone(s));
    for (std::size_t t : f.faces_of(s)) {
      const auto small = stabilizer_characters(f.cone(t));
      // Well defined: anything killed in X(T_sigma) is killed in X(T_tau).
      for (const auto& l : f.cone(s).orthogonal()) CHECK(small.project(l).is_zero());
      // Surjective: the lifts of X(T_sigma)'s generators together with the
      // kernel of X(T) -> X(T_tau) generate X(T).
      std::vector<IntVector> gens = big.generator_lifts();
      for (const auto& l : f.cone(t).orthogonal()) gens.push_back(l.coords());
      const QuotientLatticePresentation rest(f.rank(), gens);
      CHECK(rest.rank() == 0);
      CHECK(rest.torsion().empty());
    }
  }
}

TEST_CASE("simplicial complex") {
  const SimplicialComplex p2 = simplicial_complex(support::golden("p2"));
  CHECK(p2.minimal_nonfaces == std::vector<RaySet>{{0, 1, 2}});
  const SimplicialComplex p1xp1 = simplicial_complex(support::golden("p1xp1"));
  CHECK(p1xp1.minimal_nonfaces == std::vector<RaySet>{{0, 1}, {2, 3}});
  const SimplicialComplex torus = simplicial_complex(support::golden("torus"));
  CHECK(torus.simplices == std::vector<RaySet>{{}});
  CHECK(torus.minimal_nonfaces.empty());

  for (const auto& name : support::smooth_names()) {
    const Fan f = support::golden(name);
    const SimplicialComplex c = simplicial_complex(f);
    CHECK(c.simplices.size() == f.cones().size());
    for (const auto& s : c.simplices)
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        RaySet sub = s;
        sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(drop));
        CHECK(c.contains(sub));
      }
    for (const auto& nf : c.minimal_nonfaces) {
      CHECK_FALSE(c.contains(nf));
      for (std::size_t drop = 0; drop < nf.size(); ++drop) {
        RaySet sub = nf;
        sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(drop));
        CHECK(c.contains(sub));
      }
    }
  }
}
