#pragma once

// Fans, their validity axioms, the smooth/complete dictionary, the
// orbit-cone correspondence and the simplicial complex of a fan.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "torikit/cone.hpp"
#include "torikit/lattice.hpp"

namespace torikit {

using RaySet = std::vector<std::size_t>;

std::string to_string(const RaySet& rays);

class Fan {
 public:
  enum class Closure { AddFaces, AsGiven };

  Fan() = default;

  /// Builds a fan from a primitive ray table and a list of cones (ray index
  /// sets). With AddFaces every face of every cone, every ray and the zero
  /// cone are added; with AsGiven the list is taken literally, so that
  /// validate_fan can report a missing face.
  static Fan from_cones(std::size_t rank, std::vector<LatticeVector> rays,
                        const std::vector<RaySet>& cones, Closure closure = Closure::AddFaces);

  std::size_t rank() const noexcept { return n_; }
  const std::vector<LatticeVector>& rays() const noexcept { return rays_; }
  /// Sorted by dimension, then by ray set.
  const std::vector<Cone>& cones() const noexcept { return cones_; }
  const Cone& cone(std::size_t i) const { return cones_.at(i); }

  std::optional<std::size_t> find_cone(const RaySet& rays) const;
  /// Indices of cones not strictly contained in another cone.
  const std::vector<std::size_t>& maximal_cones() const noexcept { return maximal_; }
  /// Indices of the cones whose ray set is contained in that of cone i.
  const std::vector<std::size_t>& faces_of(std::size_t i) const { return faces_of_.at(i); }
  bool is_face_of(std::size_t face, std::size_t cone) const;

 private:
  std::size_t n_ = 0;
  std::vector<LatticeVector> rays_;
  std::vector<Cone> cones_;
  std::map<RaySet, std::size_t> index_;
  std::vector<std::size_t> maximal_;
  std::vector<std::vector<std::size_t>> faces_of_;
};

struct ParsedFan {
  Fan fan;
  std::vector<std::string> warnings;
};

/// Parses the line-oriented fan format (see docs/fan-format.md).
ParsedFan parse_fan(std::string_view text);
ParsedFan load_fan(const std::string& path);

struct Violation {
  enum class Kind { MissingFace, BadIntersection, NoVertex, RedundantGenerator };
  Kind kind;
  RaySet first;
  RaySet second;  // empty unless the violation concerns a pair of cones
  std::string message;
};

std::string_view to_string(Violation::Kind kind);

struct ValidationReport {
  std::vector<Violation> violations;
  bool valid() const noexcept { return violations.empty(); }
};

ValidationReport validate_fan(const Fan& f);

struct CompletenessReport {
  bool complete = false;
  std::string note;  // why the fan is not complete; empty when complete
};

CompletenessReport completeness(const Fan& f);
bool is_complete(const Fan& f);
bool is_smooth_fan(const Fan& f);
/// First cone that is not smooth, if any.
std::optional<std::size_t> first_singular_cone(const Fan& f);

/// X(T_sigma) = X(T) / (sigma^perp cap X(T)).
QuotientLatticePresentation stabilizer_characters(const Cone& sigma);

struct Orbit {
  std::size_t cone;
  std::string label;
  std::size_t codim;
  QuotientLatticePresentation stabilizer;
  std::vector<std::size_t> divisors;  // rays v with D_v containing the orbit
};

struct OrbitTable {
  std::vector<Orbit> orbits;  // same order as Fan::cones()
};

OrbitTable orbit_table(const Fan& f);

struct SimplicialComplex {
  std::size_t vertices = 0;
  std::vector<RaySet> simplices;  // includes the empty simplex
  std::vector<RaySet> minimal_nonfaces;

  bool contains(const RaySet& s) const;
};

SimplicialComplex simplicial_complex(const Fan& f);

}  // namespace torikit
