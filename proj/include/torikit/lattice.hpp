#pragma once

// Exact integer linear algebra over Z^n: the two dual lattices of a torus,
// integer matrices, Smith normal form, integer solving and quotient lattices.

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "torikit/errors.hpp"

namespace torikit {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

std::string to_string(const Integer& x);
std::string to_string(std::span<const Integer> v);

Integer dot(std::span<const Integer> a, std::span<const Integer> b);

namespace detail {

// Element of a rank-n lattice. The tag keeps one-parameter subgroups and
// characters from being mixed up; the two are related only through pairing().
template <class Tag>
class LatticePoint {
 public:
  LatticePoint() = default;
  explicit LatticePoint(std::size_t n) : coords_(n, Integer(0)) {}
  explicit LatticePoint(IntVector coords) : coords_(std::move(coords)) {}
  LatticePoint(std::initializer_list<long> coords) {
    coords_.reserve(coords.size());
    for (long c : coords) coords_.emplace_back(c);
  }

  std::size_t size() const noexcept { return coords_.size(); }
  const Integer& operator[](std::size_t i) const { return coords_[i]; }
  Integer& operator[](std::size_t i) { return coords_[i]; }
  const IntVector& coords() const noexcept { return coords_; }

  bool is_zero() const {
    for (const auto& c : coords_)
      if (c != 0) return false;
    return true;
  }

  LatticePoint& operator+=(const LatticePoint& o) {
    check(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
  }
  LatticePoint& operator-=(const LatticePoint& o) {
    check(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
  }
  friend LatticePoint operator+(LatticePoint a, const LatticePoint& b) { return a += b; }
  friend LatticePoint operator-(LatticePoint a, const LatticePoint& b) { return a -= b; }
  friend LatticePoint operator-(LatticePoint a) {
    for (auto& c : a.coords_) c = -c;
    return a;
  }
  friend LatticePoint operator*(const Integer& k, LatticePoint a) {
    for (auto& c : a.coords_) c *= k;
    return a;
  }

  friend bool operator==(const LatticePoint& a, const LatticePoint& b) { return a.coords_ == b.coords_; }
  // Lexicographic; used only to make outputs deterministic.
  friend bool operator<(const LatticePoint& a, const LatticePoint& b) { return a.coords_ < b.coords_; }

  std::string to_string() const { return torikit::to_string(coords_); }

 private:
  void check(const LatticePoint& o) const {
    if (o.size() != size()) throw DimensionMismatch("lattice points of different rank");
  }

  IntVector coords_;
};

struct OneParameterSubgroupTag {};
struct CharacterTag {};

}  // namespace detail

/// Element of Y(T), the lattice of one-parameter subgroups.
using LatticeVector = detail::LatticePoint<detail::OneParameterSubgroupTag>;
/// Element of X(T), the character lattice.
using Character = detail::LatticePoint<detail::CharacterTag>;

/// The integer <chi, mu> with chi(mu(t)) = t^<chi, mu>.
Integer pairing(const Character& chi, const LatticeVector& mu);

/// v divided by the gcd of its entries (sign preserved). Throws on v = 0.
LatticeVector primitive(const LatticeVector& v);
Character primitive(const Character& v);
IntVector primitive(const IntVector& v);

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);
  static IntMatrix from_columns(const std::vector<IntVector>& cols, std::size_t rows);
  static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVector row(std::size_t i) const;
  IntVector column(std::size_t j) const;
  IntMatrix transpose() const;
  IntVector apply(std::span<const Integer> x) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row[dst] += k * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& k);
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& k);
  void negate_row(std::size_t i);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Determinant by fraction-free (Bareiss) elimination.
Integer determinant(const IntMatrix& m);

/// Rank over Q by fraction-free elimination; independent of the SNF code path.
std::size_t rational_rank(const IntMatrix& m);

/// U * M * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ..., d_i >= 0.
/// Nonzero diagonal entries come first.
struct SmithForm {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;

  IntVector diagonal() const;
  std::size_t rank() const;
};

SmithForm smith_normal_form(const IntMatrix& m);

/// Some integer x with M x = b, or nullopt when no integer solution exists.
std::optional<IntVector> solve_integer(const IntMatrix& m, std::span<const Integer> b);

/// Z-basis (as columns) of the saturated lattice { x in Z^cols : M x = 0 }.
IntMatrix integer_kernel(const IntMatrix& m);

/// Inverse of a unimodular matrix. Throws PreconditionError if |det| != 1.
IntMatrix unimodular_inverse(const IntMatrix& u);

/// Image of a vector in a finitely generated abelian group Z^rank + (+) Z/t_i.
struct QuotientElement {
  IntVector free;
  IntVector torsion;  // reduced into [0, t_i)

  bool is_zero() const;
  friend bool operator==(const QuotientElement&, const QuotientElement&) = default;
};

/// Z^n / <generators>, computed from the SNF of the generator matrix.
/// The sublattice is never saturated; torsion is reported as found.
class QuotientLatticePresentation {
 public:
  QuotientLatticePresentation() = default;
  QuotientLatticePresentation(std::size_t ambient_rank, const std::vector<IntVector>& generators);

  std::size_t ambient_rank() const noexcept { return ambient_; }
  std::size_t rank() const noexcept { return free_rank_; }
  /// Elementary divisors > 1, in divisibility order.
  const IntVector& torsion() const noexcept { return torsion_; }

  /// Surjection Z^n -> presented group; kills exactly the sublattice.
  QuotientElement project(std::span<const Integer> v) const;
  QuotientElement project(const Character& chi) const { return project(chi.coords()); }

  /// Lifts to Z^n of the standard generators: free ones first, then torsion.
  std::vector<IntVector> generator_lifts() const;

 private:
  std::size_t ambient_ = 0;
  std::size_t free_rank_ = 0;
  IntVector torsion_;
  IntMatrix u_;
  IntMatrix u_inverse_;
  std::vector<std::size_t> torsion_rows_;
  std::vector<std::size_t> free_rows_;
};

QuotientLatticePresentation quotient_by_sublattice(std::size_t ambient_rank,
                                                   const std::vector<Character>& generators);

}  // namespace torikit
