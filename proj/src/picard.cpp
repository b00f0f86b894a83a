#include "torikit/picard.hpp"

#include <algorithm>
#include <stdexcept>

#include "torikit/stratification.hpp"

namespace torikit {

CharacterFamily& CharacterFamily::operator+=(const CharacterFamily& o) {
  if (o.cones != cones) throw DimensionMismatch("adding character families over different cones");
  for (std::size_t i = 0; i < characters.size(); ++i) characters[i] += o.characters[i];
  return *this;
}

namespace {

RaySet common_rays(const Cone& a, const Cone& b) {
  RaySet common;
  std::set_intersection(a.rays().begin(), a.rays().end(), b.rays().begin(), b.rays().end(),
                        std::back_inserter(common));
  return common;
}

void check_shape(const Fan& f, const CharacterFamily& family) {
  if (family.cones != f.maximal_cones() || family.characters.size() != family.cones.size())
    throw DimensionMismatch("character family is not indexed by the maximal cones of the fan");
  for (const auto& c : family.characters)
    if (c.size() != f.rank()) throw DimensionMismatch("character family entry has wrong rank");
}

}  // namespace

bool is_compatible(const Fan& f, const CharacterFamily& family) {
  check_shape(f, family);
  for (std::size_t a = 0; a < family.cones.size(); ++a)
    for (std::size_t b = a + 1; b < family.cones.size(); ++b) {
      const Character diff = family.characters[a] - family.characters[b];
      for (std::size_t w : common_rays(f.cone(family.cones[a]), f.cone(family.cones[b])))
        if (pairing(diff, f.rays()[w]) != 0) return false;
    }
  return true;
}

bool families_equal(const Fan& f, const CharacterFamily& a, const CharacterFamily& b) {
  check_shape(f, a);
  check_shape(f, b);
  for (std::size_t i = 0; i < a.cones.size(); ++i) {
    const Cone& sigma = f.cone(a.cones[i]);
    // Classes agree in X(T_sigma) iff the difference pairs to zero with sigma.
    const Character diff = a.characters[i] - b.characters[i];
    for (const auto& mu : sigma.generators())
      if (pairing(diff, mu) != 0) return false;
  }
  return true;
}

CharacterFamily constant_family(const Fan& f, const Character& chi) {
  if (chi.size() != f.rank()) throw DimensionMismatch("constant_family: character has wrong rank");
  CharacterFamily family{f.maximal_cones(), {}};
  family.characters.assign(family.cones.size(), chi);
  return family;
}

// ----------------------------------------------------------------- groups

PicardGroup::PicardGroup(const Fan& f) : n_(f.rank()), maximal_(f.maximal_cones()), fan_(f) {
  require_smooth(f, "picard");
  const std::size_t m = maximal_.size();
  const std::size_t total = n_ * m;

  // Compatibility: <chi_a - chi_b, mu_w> = 0 for every ray w shared by a and b.
  std::vector<IntVector> constraints;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b)
      for (std::size_t w : common_rays(f.cone(maximal_[a]), f.cone(maximal_[b]))) {
        IntVector row(total, Integer(0));
        for (std::size_t i = 0; i < n_; ++i) {
          row[a * n_ + i] = f.rays()[w][i];
          row[b * n_ + i] = -f.rays()[w][i];
        }
        constraints.push_back(std::move(row));
      }
  kernel_ = constraints.empty() ? IntMatrix::identity(total) : integer_kernel(IntMatrix::from_rows(constraints, total));

  // The kernel is saturated, so its SNF is [I; 0] and U K V = [I; 0] gives the
  // left inverse V * (first r rows of U).
  const std::size_t r = kernel_.cols();
  const SmithForm s = smith_normal_form(kernel_);
  IntMatrix top(r, total);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < total; ++j) top(i, j) = s.U(i, j);
  left_inverse_ = s.V * top;

  auto tuple_coordinates = [&](std::size_t block, const IntVector& v) {
    IntVector t(total, Integer(0));
    for (std::size_t i = 0; i < n_; ++i) t[block * n_ + i] = v[i];
    return left_inverse_.apply(t);
  };

  std::vector<IntVector> relations;
  for (std::size_t a = 0; a < m; ++a)
    for (const auto& l : f.cone(maximal_[a]).orthogonal()) relations.push_back(tuple_coordinates(a, l.coords()));
  equivariant_ = QuotientLatticePresentation(r, relations);

  for (std::size_t i = 0; i < n_; ++i) {
    IntVector t(total, Integer(0));
    for (std::size_t a = 0; a < m; ++a) t[a * n_ + i] = 1;
    relations.push_back(left_inverse_.apply(t));
  }
  ordinary_ = QuotientLatticePresentation(r, relations);
}

IntVector PicardGroup::coordinates(const CharacterFamily& family) const {
  if (!is_compatible(fan_, family)) throw PreconditionError("character family is not compatible");
  IntVector t;
  for (const auto& c : family.characters) t.insert(t.end(), c.coords().begin(), c.coords().end());
  return left_inverse_.apply(t);
}

QuotientElement PicardGroup::equivariant_class(const CharacterFamily& family) const {
  return equivariant_.project(coordinates(family));
}

QuotientElement PicardGroup::ordinary_class(const CharacterFamily& family) const {
  return ordinary_.project(coordinates(family));
}

std::vector<CharacterFamily> PicardGroup::equivariant_basis() const {
  std::vector<CharacterFamily> out;
  for (const auto& y : equivariant_.generator_lifts()) {
    const IntVector t = kernel_.apply(y);
    CharacterFamily family{maximal_, {}};
    for (std::size_t a = 0; a < maximal_.size(); ++a)
      family.characters.emplace_back(IntVector(t.begin() + static_cast<std::ptrdiff_t>(a * n_),
                                               t.begin() + static_cast<std::ptrdiff_t>((a + 1) * n_)));
    out.push_back(std::move(family));
  }
  return out;
}

PicardReport equivariant_picard(const Fan& f) {
  const PicardGroup g(f);
  PicardReport report;
  report.equivariant = {g.equivariant().rank(), g.equivariant().torsion()};
  report.equivariant_basis = g.equivariant_basis();
  return report;
}

PicardReport picard(const Fan& f) {
  const PicardGroup g(f);
  PicardReport report;
  report.equivariant = {g.equivariant().rank(), g.equivariant().torsion()};
  report.equivariant_basis = g.equivariant_basis();
  report.ordinary = GroupSummary{g.ordinary().rank(), g.ordinary().torsion()};
  return report;
}

// ---------------------------------------------------------------- divisors

CharacterFamily divisor_class(const Fan& f, const IntVector& a) {
  if (a.size() != f.rays().size()) throw DimensionMismatch("divisor_class: one coefficient per ray expected");
  CharacterFamily family{f.maximal_cones(), {}};
  for (std::size_t m : family.cones) {
    const Cone& sigma = f.cone(m);
    std::vector<IntVector> rows;
    IntVector rhs;
    for (std::size_t k = 0; k < sigma.rays().size(); ++k) {
      rows.push_back(sigma.generators()[k].coords());
      rhs.push_back(-a[sigma.rays()[k]]);
    }
    auto chi = solve_integer(IntMatrix::from_rows(rows, f.rank()), rhs);
    if (!chi)
      throw PreconditionError("divisor_class: no integral isotropy character on cone " + to_string(sigma.rays()) +
                              " (cone not smooth)");
    family.characters.emplace_back(std::move(*chi));
  }
  if (!is_compatible(f, family)) throw std::logic_error("divisor_class: isotropy characters are incompatible");
  return family;
}

std::optional<Character> is_principal(const Fan& f, const CharacterFamily& family) {
  if (!is_compatible(f, family)) throw PreconditionError("is_principal: character family is not compatible");
  std::vector<IntVector> rows;
  IntVector rhs;
  for (std::size_t i = 0; i < family.cones.size(); ++i)
    for (const auto& mu : f.cone(family.cones[i]).generators()) {
      rows.push_back(mu.coords());
      rhs.push_back(pairing(family.characters[i], mu));
    }
  auto chi = solve_integer(IntMatrix::from_rows(rows, f.rank()), rhs);
  if (!chi) return std::nullopt;
  return Character(std::move(*chi));
}

}  // namespace torikit
