#pragma once

#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "torikit/cone.hpp"
#include "torikit/fan.hpp"
#include "torikit/lattice.hpp"

namespace support {

using namespace torikit;

inline std::string fan_path(const std::string& name) { return std::string(TORIKIT_SOURCE_DIR) + "/fans/" + name + ".fan"; }

inline Fan golden(const std::string& name) { return load_fan(fan_path(name)).fan; }

inline const std::vector<std::string>& golden_names() {
  static const std::vector<std::string> names{"affine_plane", "torus", "p1", "p2", "p1xp1", "f1", "a1_singular", "overlap"};
  return names;
}

// Valid smooth golden fans.
inline const std::vector<std::string>& smooth_names() {
  static const std::vector<std::string> names{"affine_plane", "torus", "p1", "p2", "p1xp1", "f1"};
  return names;
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20261016);
  return gen;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline IntVector random_vector(std::size_t n, long lo, long hi) {
  IntVector v;
  for (std::size_t i = 0; i < n; ++i) v.emplace_back(uniform(lo, hi));
  return v;
}

inline IntMatrix random_matrix(std::size_t rows, std::size_t cols, long lo, long hi) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = uniform(lo, hi);
  return m;
}

inline bool is_zero_vector(const IntVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

// Random pointed full-dimensional cone in Z^n: n..n+2 generators with entries
// in [lo, hi], rejected until full rank and pointed.
inline Cone random_pointed_cone(std::size_t n, long lo, long hi) {
  for (;;) {
    std::vector<LatticeVector> gens;
    const std::size_t k = n + static_cast<std::size_t>(uniform(0, 2));
    for (std::size_t i = 0; i < k; ++i) {
      IntVector v = random_vector(n, lo, hi);
      if (!is_zero_vector(v)) gens.emplace_back(std::move(v));
    }
    if (gens.size() < n) continue;
    const Cone c = Cone::generated_by(n, gens);
    if (c.dim() == n && has_vertex(c)) return c;
  }
}

// Every lattice point of the box [-b, b]^n.
inline std::vector<IntVector> box_points(std::size_t n, long b) {
  std::vector<IntVector> out;
  IntVector x(n, Integer(-b));
  for (;;) {
    out.push_back(x);
    std::size_t i = 0;
    while (i < n && x[i] == b) x[i++] = -b;
    if (i == n) break;
    ++x[i];
  }
  return out;
}

// Membership in the monoid generated by `gens`, by memoized search. `grading`
// must pair positively with every generator.
class MonoidOracle {
 public:
  MonoidOracle(std::vector<IntVector> gens, IntVector grading) : gens_(std::move(gens)), grading_(std::move(grading)) {}

  bool contains(const IntVector& x) {
    if (is_zero_vector(x)) return true;
    if (dot(grading_, x) <= 0) return false;
    if (auto it = memo_.find(x); it != memo_.end()) return it->second;
    bool found = false;
    for (const auto& g : gens_) {
      IntVector y = x;
      for (std::size_t i = 0; i < y.size(); ++i) y[i] -= g[i];
      if (contains(y)) {
        found = true;
        break;
      }
    }
    memo_.emplace(x, found);
    return found;
  }

 private:
  static Integer dot(const IntVector& a, const IntVector& b) {
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
  }
  std::vector<IntVector> gens_;
  IntVector grading_;
  std::map<IntVector, bool> memo_;
};

}  // namespace support
