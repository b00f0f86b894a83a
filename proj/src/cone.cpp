#include "torikit/cone.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace torikit {

namespace {

IntVector negated(IntVector v) {
  for (auto& c : v) c = -c;
  return v;
}

bool is_zero_vector(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& c) { return c == 0; });
}

// p * r - s * l, made primitive.
IntVector eliminate(const Integer& p, const IntVector& r, const Integer& s, const IntVector& l) {
  IntVector out(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) out[i] = p * r[i] - s * l[i];
  return primitive(out);
}

}  // namespace

DoubleDescription double_description(std::size_t n, std::span<const IntVector> inequalities) {
  DoubleDescription dd;
  for (std::size_t i = 0; i < n; ++i) {
    IntVector e(n, Integer(0));
    e[i] = 1;
    dd.lineality.push_back(std::move(e));
  }
  std::vector<IntVector> processed;

  for (const IntVector& a : inequalities) {
    if (a.size() != n) throw DimensionMismatch("double_description: inequality has wrong length");
    if (is_zero_vector(a)) continue;

    auto pivot = std::find_if(dd.lineality.begin(), dd.lineality.end(),
                              [&](const IntVector& l) { return dot(a, l) != 0; });
    if (pivot != dd.lineality.end()) {
      // The new inequality cuts the lineality space: one lineality direction
      // becomes a ray, everything else is moved into the hyperplane a = 0.
      IntVector l0 = *pivot;
      dd.lineality.erase(pivot);
      Integer p = dot(a, l0);
      if (p < 0) {
        l0 = negated(std::move(l0));
        p = -p;
      }
      for (auto& l : dd.lineality) l = eliminate(p, l, dot(a, l), l0);
      for (auto& r : dd.rays) {
        Integer s = dot(a, r);
        if (s != 0) r = eliminate(p, r, s, l0);
      }
      dd.rays.push_back(std::move(l0));
      processed.push_back(a);
      continue;
    }

    std::vector<Integer> value(dd.rays.size());
    for (std::size_t i = 0; i < dd.rays.size(); ++i) value[i] = dot(a, dd.rays[i]);
    const bool any_negative = std::any_of(value.begin(), value.end(), [](const Integer& v) { return v < 0; });
    if (!any_negative) {
      processed.push_back(a);
      continue;
    }

    const long pointed_dim = static_cast<long>(n - dd.lineality.size());
    auto adjacent = [&](const IntVector& p, const IntVector& q) {
      std::vector<IntVector> tight;
      for (const auto& b : processed)
        if (dot(b, p) == 0 && dot(b, q) == 0) tight.push_back(b);
      if (static_cast<long>(tight.size()) < pointed_dim - 2) return false;
      return static_cast<long>(rational_rank(IntMatrix::from_rows(tight, n))) == pointed_dim - 2;
    };

    std::vector<IntVector> next;
    for (std::size_t i = 0; i < dd.rays.size(); ++i)
      if (value[i] >= 0) next.push_back(dd.rays[i]);
    for (std::size_t i = 0; i < dd.rays.size(); ++i) {
      if (value[i] <= 0) continue;
      for (std::size_t j = 0; j < dd.rays.size(); ++j) {
        if (value[j] >= 0) continue;
        if (!adjacent(dd.rays[i], dd.rays[j])) continue;
        // value[i] > 0 > value[j]: the combination lies on a = 0.
        next.push_back(eliminate(value[i], dd.rays[j], value[j], dd.rays[i]));
      }
    }
    dd.rays = std::move(next);
    processed.push_back(a);
  }

  std::sort(dd.rays.begin(), dd.rays.end());
  dd.rays.erase(std::unique(dd.rays.begin(), dd.rays.end()), dd.rays.end());
  return dd;
}

// --------------------------------------------------------------------- Cone

Cone Cone::generated_by(std::size_t ambient_rank, std::vector<LatticeVector> generators) {
  Cone c;
  c.n_ = ambient_rank;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i].size() != ambient_rank) throw DimensionMismatch("cone generator has wrong rank");
    c.generators_.push_back(primitive(generators[i]));
    c.rays_.push_back(i);
  }
  c.compute();
  return c;
}

Cone Cone::from_ray_table(std::size_t ambient_rank, std::vector<std::size_t> ray_indices,
                          std::span<const LatticeVector> table) {
  Cone c;
  c.n_ = ambient_rank;
  std::sort(ray_indices.begin(), ray_indices.end());
  ray_indices.erase(std::unique(ray_indices.begin(), ray_indices.end()), ray_indices.end());
  for (std::size_t r : ray_indices) {
    if (r >= table.size()) throw DimensionMismatch("ray index out of range");
    if (table[r].size() != ambient_rank) throw DimensionMismatch("cone generator has wrong rank");
    c.generators_.push_back(table[r]);
  }
  c.rays_ = std::move(ray_indices);
  c.compute();
  return c;
}

Cone Cone::subcone(const std::vector<std::size_t>& positions) const {
  Cone c;
  c.n_ = n_;
  for (std::size_t p : positions) {
    c.rays_.push_back(rays_.at(p));
    c.generators_.push_back(generators_.at(p));
  }
  c.compute();
  return c;
}

void Cone::compute() {
  std::vector<IntVector> gens;
  gens.reserve(generators_.size());
  for (const auto& g : generators_) gens.push_back(g.coords());

  DoubleDescription dd = double_description(n_, gens);
  facet_normals_.clear();
  for (auto& r : dd.rays) facet_normals_.emplace_back(std::move(r));
  dual_lineality_ = std::move(dd.lineality);

  const IntMatrix kernel = integer_kernel(IntMatrix::from_rows(gens, n_));
  orthogonal_.clear();
  for (std::size_t j = 0; j < kernel.cols(); ++j) orthogonal_.emplace_back(kernel.column(j));
  dim_ = n_ - orthogonal_.size();
}

// ------------------------------------------------------------------ queries

DualConeDescription dual_cone(const Cone& sigma) {
  DualConeDescription d;
  d.generators = sigma.facet_normals();
  for (const auto& l : sigma.orthogonal()) {
    d.generators.push_back(l);
    d.generators.push_back(-l);
  }
  return d;
}

std::vector<Cone> faces(const Cone& sigma) {
  const auto& gens = sigma.generators();
  std::vector<std::vector<std::size_t>> tight;
  for (const auto& eta : sigma.facet_normals()) {
    std::vector<std::size_t> t;
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (pairing(eta, gens[i]) == 0) t.push_back(i);
    tight.push_back(std::move(t));
  }

  std::vector<std::size_t> all(gens.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  std::set<std::vector<std::size_t>> seen{all};
  std::deque<std::vector<std::size_t>> queue{all};
  while (!queue.empty()) {
    auto f = std::move(queue.front());
    queue.pop_front();
    for (const auto& t : tight) {
      std::vector<std::size_t> g;
      std::set_intersection(f.begin(), f.end(), t.begin(), t.end(), std::back_inserter(g));
      if (seen.insert(g).second) queue.push_back(std::move(g));
    }
  }

  std::vector<Cone> out;
  for (const auto& positions : seen) out.push_back(sigma.subcone(positions));
  std::sort(out.begin(), out.end(), [](const Cone& a, const Cone& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    return a.rays() < b.rays();
  });
  return out;
}

bool is_smooth(const Cone& sigma) {
  if (sigma.generators().size() != sigma.dim()) return false;
  if (sigma.dim() == 0) return true;
  std::vector<IntVector> cols;
  for (const auto& g : sigma.generators()) cols.push_back(g.coords());
  const SmithForm s = smith_normal_form(IntMatrix::from_columns(cols, sigma.ambient_rank()));
  for (const auto& d : s.diagonal())
    if (d != 0 && d != 1) return false;
  return true;
}

bool has_vertex(const Cone& sigma) {
  // sigma is pointed iff sigma^vee is full-dimensional.
  std::vector<IntVector> span;
  for (const auto& eta : sigma.facet_normals()) span.push_back(eta.coords());
  for (const auto& l : sigma.orthogonal()) span.push_back(l.coords());
  if (span.empty()) return sigma.ambient_rank() == 0;
  return rational_rank(IntMatrix::from_rows(span, sigma.ambient_rank())) == sigma.ambient_rank();
}

bool contains(const Cone& sigma, const LatticeVector& v) {
  if (v.size() != sigma.ambient_rank()) throw DimensionMismatch("contains: vector has wrong rank");
  for (const auto& eta : sigma.facet_normals())
    if (pairing(eta, v) < 0) return false;
  for (const auto& l : sigma.orthogonal())
    if (pairing(l, v) != 0) return false;
  return true;
}

bool dual_contains(const Cone& sigma, const Character& chi) {
  for (const auto& g : sigma.generators())
    if (pairing(chi, g) < 0) return false;
  return true;
}

bool generators_are_extreme(const Cone& sigma) {
  const auto& gens = sigma.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    std::vector<IntVector> face;
    for (std::size_t j = 0; j < gens.size(); ++j) {
      bool in_face = true;
      for (const auto& eta : sigma.facet_normals())
        if (pairing(eta, gens[i]) == 0 && pairing(eta, gens[j]) != 0) {
          in_face = false;
          break;
        }
      if (in_face) face.push_back(gens[j].coords());
    }
    if (rational_rank(IntMatrix::from_rows(face, sigma.ambient_rank())) != 1) return false;
  }
  return true;
}

DoubleDescription intersection(const Cone& a, const Cone& b) {
  if (a.ambient_rank() != b.ambient_rank()) throw DimensionMismatch("intersection of cones of different rank");
  std::vector<IntVector> ineq;
  for (const Cone* c : {&a, &b}) {
    for (const auto& eta : c->facet_normals()) ineq.push_back(eta.coords());
    for (const auto& l : c->orthogonal()) {
      ineq.push_back(l.coords());
      ineq.push_back(negated(l.coords()));
    }
  }
  return double_description(a.ambient_rank(), ineq);
}

// ------------------------------------------------------------ Hilbert basis

namespace {

// Hilbert basis of { z in Z^m : A z >= 0 } for a pointed, full-dimensional cone.
std::vector<IntVector> pointed_hilbert_basis(std::size_t m, const std::vector<IntVector>& rows) {
  const DoubleDescription dd = double_description(m, rows);
  if (!dd.lineality.empty()) throw PreconditionError("hilbert_basis: dual cone is not pointed");
  const auto& extreme = dd.rays;

  // Every lattice point x of the cone lies in a simplicial cone on m linearly
  // independent extreme rays (Caratheodory); subtracting the integer parts
  // of its coordinates leaves a point of that cone's half-open parallelepiped.
  // Irreducible elements are therefore among the extreme rays and those
  // parallelepiped points.
  std::set<IntVector> candidates(extreme.begin(), extreme.end());
  std::vector<std::size_t> pick(m);
  auto visit_subset = [&]() {
    std::vector<IntVector> cols;
    for (std::size_t i : pick) cols.push_back(extreme[i]);
    const IntMatrix mat = IntMatrix::from_columns(cols, m);
    Integer det = abs(determinant(mat));
    if (det == 0 || det == 1) return;
    const SmithForm s = smith_normal_form(mat);
    const IntMatrix u_inv = unimodular_inverse(s.U);
    // M * scaled = det * I, with scaled = V diag(det/d_i) U.
    IntMatrix middle(m, m);
    for (std::size_t i = 0; i < m; ++i) middle(i, i) = det / s.D(i, i);
    const IntMatrix scaled = s.V * middle * s.U;

    IntVector w(m, Integer(0));
    for (;;) {
      IntVector lam = scaled.apply(u_inv.apply(w));
      for (auto& c : lam) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), det.get_mpz_t());
      IntVector x = mat.apply(lam);
      for (auto& c : x) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), det.get_mpz_t());
      if (!is_zero_vector(x)) candidates.insert(std::move(x));
      std::size_t k = 0;
      while (k < m) {
        w[k] += 1;
        if (w[k] < s.D(k, k)) break;
        w[k] = 0;
        ++k;
      }
      if (k == m) break;
    }
  };
  if (extreme.size() >= m) {
    // Enumerate m-subsets of the extreme rays.
    for (std::size_t i = 0; i < m; ++i) pick[i] = i;
    for (;;) {
      visit_subset();
      std::size_t i = m;
      while (i > 0 && pick[i - 1] == extreme.size() - m + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < m; ++j) pick[j] = pick[j - 1] + 1;
    }
  }

  IntVector grading(m, Integer(0));
  for (const auto& r : rows)
    for (std::size_t i = 0; i < m; ++i) grading[i] += r[i];

  std::vector<std::pair<Integer, IntVector>> sorted;
  for (const auto& c : candidates) sorted.emplace_back(dot(grading, c), c);
  std::sort(sorted.begin(), sorted.end());

  auto in_cone = [&](const IntVector& z) {
    for (const auto& r : rows)
      if (dot(r, z) < 0) return false;
    return true;
  };

  std::vector<IntVector> basis;
  for (const auto& [deg, x] : sorted) {
    bool reducible = false;
    IntVector diff(m);
    for (const auto& h : basis) {
      for (std::size_t i = 0; i < m; ++i) diff[i] = x[i] - h[i];
      if (in_cone(diff)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) basis.push_back(x);
  }
  return basis;
}

}  // namespace

std::vector<Character> hilbert_basis(const Cone& sigma) {
  if (!has_vertex(sigma)) throw PreconditionError("hilbert_basis: cone contains a line");
  const std::size_t n = sigma.ambient_rank();
  const auto& orth = sigma.orthogonal();
  const std::size_t l = orth.size();
  const std::size_t m = n - l;

  // Split X(T) = (sigma^perp cap X(T)) (+) C with C spanned by the last m
  // columns of a unimodular basis change; the monoid is the lineality
  // lattice plus a pointed monoid in C.
  IntMatrix basis_change = IntMatrix::identity(n);
  if (l > 0) {
    std::vector<IntVector> cols;
    for (const auto& o : orth) cols.push_back(o.coords());
    basis_change = unimodular_inverse(smith_normal_form(IntMatrix::from_columns(cols, n)).U);
  }
  IntMatrix complement(n, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) complement(i, j) = basis_change(i, l + j);

  std::vector<IntVector> rows;
  for (const auto& g : sigma.generators()) {
    IntVector row(m, Integer(0));
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t i = 0; i < n; ++i) row[j] += g[i] * complement(i, j);
    rows.push_back(std::move(row));
  }

  std::vector<Character> out;
  if (m > 0)
    for (const auto& z : pointed_hilbert_basis(m, rows)) out.emplace_back(complement.apply(z));
  std::sort(out.begin(), out.end());
  for (const auto& o : orth) {
    out.push_back(o);
    out.push_back(-o);
  }
  return out;
}

}  // namespace torikit
