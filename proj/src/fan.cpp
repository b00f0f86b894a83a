#include "torikit/fan.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace torikit {

std::string to_string(const RaySet& rays) {
  std::string s = "{";
  for (std::size_t i = 0; i < rays.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(rays[i]);
  }
  return s + "}";
}

namespace {

bool is_subset(const RaySet& a, const RaySet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

std::string count_word(std::size_t k) {
  static const char* words[] = {"no", "one", "two", "three", "four"};
  return k < 5 ? words[k] : std::to_string(k);
}

}  // namespace

Fan Fan::from_cones(std::size_t rank, std::vector<LatticeVector> rays, const std::vector<RaySet>& cones,
                    Closure closure) {
  for (std::size_t i = 0; i < rays.size(); ++i) {
    if (rays[i].size() != rank) throw DimensionMismatch("ray " + std::to_string(i) + " has wrong rank");
    if (rays[i].is_zero()) throw std::invalid_argument("ray " + std::to_string(i) + " is zero");
    if (!(primitive(rays[i]) == rays[i]))
      throw std::invalid_argument("ray " + std::to_string(i) + " is not primitive");
    for (std::size_t j = 0; j < i; ++j)
      if (rays[j] == rays[i])
        throw std::invalid_argument("rays " + std::to_string(j) + " and " + std::to_string(i) + " coincide");
  }

  Fan f;
  f.n_ = rank;
  f.rays_ = std::move(rays);

  std::set<RaySet> sets;
  for (RaySet c : cones) {
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    for (std::size_t r : c)
      if (r >= f.rays_.size()) throw std::invalid_argument("cone " + to_string(c) + " uses an unknown ray");
    if (closure == Closure::AddFaces) {
      const Cone sigma = Cone::from_ray_table(rank, c, f.rays_);
      for (const auto& face : faces(sigma)) sets.insert(face.rays());
    }
    sets.insert(std::move(c));
  }
  if (closure == Closure::AddFaces) {
    sets.insert(RaySet{});
    for (std::size_t r = 0; r < f.rays_.size(); ++r) sets.insert(RaySet{r});
  }

  for (const auto& s : sets) f.cones_.push_back(Cone::from_ray_table(rank, s, f.rays_));
  std::sort(f.cones_.begin(), f.cones_.end(), [](const Cone& a, const Cone& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    return a.rays() < b.rays();
  });
  for (std::size_t i = 0; i < f.cones_.size(); ++i) f.index_.emplace(f.cones_[i].rays(), i);

  f.faces_of_.resize(f.cones_.size());
  for (std::size_t i = 0; i < f.cones_.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < f.cones_.size(); ++j) {
      if (is_subset(f.cones_[j].rays(), f.cones_[i].rays())) f.faces_of_[i].push_back(j);
      if (j != i && is_subset(f.cones_[i].rays(), f.cones_[j].rays())) maximal = false;
    }
    if (maximal) f.maximal_.push_back(i);
  }
  return f;
}

std::optional<std::size_t> Fan::find_cone(const RaySet& rays) const {
  auto it = index_.find(rays);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool Fan::is_face_of(std::size_t face, std::size_t cone) const {
  return is_subset(cones_.at(face).rays(), cones_.at(cone).rays());
}

// --------------------------------------------------------------- validation

std::string_view to_string(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::MissingFace: return "axiom_a";
    case Violation::Kind::BadIntersection: return "axiom_b";
    case Violation::Kind::NoVertex: return "no_vertex";
    case Violation::Kind::RedundantGenerator: return "redundant_ray";
  }
  return "unknown";
}

ValidationReport validate_fan(const Fan& f) {
  ValidationReport report;
  const auto& cones = f.cones();
  std::vector<std::set<RaySet>> face_sets(cones.size());
  std::vector<bool> pointed(cones.size());

  for (std::size_t i = 0; i < cones.size(); ++i) {
    const Cone& sigma = cones[i];
    pointed[i] = has_vertex(sigma);
    if (!pointed[i]) {
      report.violations.push_back({Violation::Kind::NoVertex, sigma.rays(), {},
                                   "cone " + to_string(sigma.rays()) + " contains a line"});
      continue;
    }
    if (!generators_are_extreme(sigma))
      report.violations.push_back({Violation::Kind::RedundantGenerator, sigma.rays(), {},
                                   "cone " + to_string(sigma.rays()) + " lists a ray that is not extreme"});
    for (const auto& face : faces(sigma)) {
      face_sets[i].insert(face.rays());
      if (!f.find_cone(face.rays()))
        report.violations.push_back({Violation::Kind::MissingFace, sigma.rays(), face.rays(),
                                     "axiom (a): face " + to_string(face.rays()) + " of cone " +
                                         to_string(sigma.rays()) + " is not in the fan"});
    }
  }

  for (std::size_t i = 0; i < cones.size(); ++i) {
    if (!pointed[i]) continue;
    for (std::size_t j = i + 1; j < cones.size(); ++j) {
      if (!pointed[j]) continue;
      const RaySet& a = cones[i].rays();
      const RaySet& b = cones[j].rays();
      RaySet common;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));

      bool ok = face_sets[i].contains(common) && face_sets[j].contains(common);
      if (ok && common != a && common != b) {
        // The geometric intersection must not exceed the cone on the shared rays.
        const DoubleDescription meet = intersection(cones[i], cones[j]);
        const Cone shared = Cone::from_ray_table(f.rank(), common, f.rays());
        ok = meet.lineality.empty();
        for (const auto& r : meet.rays)
          if (ok && !contains(shared, LatticeVector(r))) ok = false;
      }
      if (!ok)
        report.violations.push_back({Violation::Kind::BadIntersection, a, b,
                                     "axiom (b): cones " + to_string(a) + " and " + to_string(b) +
                                         " meet in a cone that is not a face of both"});
    }
  }
  return report;
}

CompletenessReport completeness(const Fan& f) {
  const std::size_t n = f.rank();
  for (std::size_t m : f.maximal_cones()) {
    const Cone& sigma = f.cone(m);
    if (sigma.dim() < n)
      return {false, "maximal cone " + to_string(sigma.rays()) + " has dimension " + std::to_string(sigma.dim()) +
                         " < " + std::to_string(n)};
  }
  for (std::size_t i = 0; i < f.cones().size(); ++i) {
    const Cone& tau = f.cone(i);
    if (tau.dim() + 1 != n) continue;
    std::size_t bordering = 0;
    for (std::size_t m : f.maximal_cones())
      if (f.is_face_of(i, m)) ++bordering;
    if (bordering != 2) {
      std::string what = tau.dim() == 1 ? "ray " + std::to_string(tau.rays().front())
                                        : "cone " + to_string(tau.rays());
      return {false, what + " borders " + count_word(bordering) + " maximal cone" + (bordering == 1 ? "" : "s")};
    }
  }
  return {true, ""};
}

bool is_complete(const Fan& f) { return completeness(f).complete; }

std::optional<std::size_t> first_singular_cone(const Fan& f) {
  for (std::size_t i = 0; i < f.cones().size(); ++i)
    if (!is_smooth(f.cone(i))) return i;
  return std::nullopt;
}

bool is_smooth_fan(const Fan& f) { return !first_singular_cone(f).has_value(); }

// ------------------------------------------------------------------- orbits

QuotientLatticePresentation stabilizer_characters(const Cone& sigma) {
  return quotient_by_sublattice(sigma.ambient_rank(), sigma.orthogonal());
}

OrbitTable orbit_table(const Fan& f) {
  OrbitTable t;
  for (std::size_t i = 0; i < f.cones().size(); ++i) {
    const Cone& sigma = f.cone(i);
    t.orbits.push_back({i, "O" + to_string(sigma.rays()), sigma.dim(), stabilizer_characters(sigma), sigma.rays()});
  }
  return t;
}

// ------------------------------------------------------- simplicial complex

bool SimplicialComplex::contains(const RaySet& s) const {
  return std::binary_search(simplices.begin(), simplices.end(), s, [](const RaySet& a, const RaySet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
}

SimplicialComplex simplicial_complex(const Fan& f) {
  SimplicialComplex c;
  c.vertices = f.rays().size();
  for (const auto& sigma : f.cones()) c.simplices.push_back(sigma.rays());
  std::sort(c.simplices.begin(), c.simplices.end(), [](const RaySet& a, const RaySet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });

  // Level k: k-subsets all of whose (k-1)-subsets are simplices.
  std::vector<RaySet> previous{RaySet{}};
  for (std::size_t k = 1; k <= c.vertices && !previous.empty(); ++k) {
    std::vector<RaySet> current;
    for (const auto& s : previous) {
      const std::size_t start = s.empty() ? 0 : s.back() + 1;
      for (std::size_t v = start; v < c.vertices; ++v) {
        RaySet cand = s;
        cand.push_back(v);
        bool boundary_ok = true;
        for (std::size_t drop = 0; drop + 1 < cand.size() && boundary_ok; ++drop) {
          RaySet sub = cand;
          sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(drop));
          boundary_ok = c.contains(sub);
        }
        if (!boundary_ok) continue;
        if (c.contains(cand))
          current.push_back(std::move(cand));
        else
          c.minimal_nonfaces.push_back(std::move(cand));
      }
    }
    previous = std::move(current);
  }
  return c;
}

}  // namespace torikit
