#include "torikit/lattice.hpp"

#include <algorithm>
#include <utility>

namespace torikit {

std::string to_string(const Integer& x) { return x.get_str(); }

std::string to_string(std::span<const Integer> v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

Integer dot(std::span<const Integer> a, std::span<const Integer> b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot product of vectors of different length");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Integer pairing(const Character& chi, const LatticeVector& mu) {
  if (chi.size() != mu.size()) throw DimensionMismatch("pairing of a character and a one-parameter subgroup of different rank");
  return dot(chi.coords(), mu.coords());
}

IntVector primitive(const IntVector& v) {
  Integer g = 0;
  for (const auto& c : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g == 0) throw PreconditionError("primitive: zero vector has no primitive multiple");
  IntVector out(v);
  if (g != 1)
    for (auto& c : out) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return out;
}

LatticeVector primitive(const LatticeVector& v) { return LatticeVector(primitive(v.coords())); }
Character primitive(const Character& v) { return Character(primitive(v.coords())); }

// ---------------------------------------------------------------- IntMatrix

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DimensionMismatch("from_rows: ragged rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& cols, std::size_t rows) {
  IntMatrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw DimensionMismatch("from_columns: ragged columns");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  std::size_t cols = rows.size() ? rows.begin()->size() : 0;
  IntMatrix m(rows.size(), cols);
  std::size_t i = 0;
  for (const auto& r : rows) {
    if (r.size() != cols) throw DimensionMismatch("from_rows: ragged rows");
    std::size_t j = 0;
    for (long x : r) m(i, j++) = x;
    ++i;
  }
  return m;
}

IntVector IntMatrix::row(std::size_t i) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

IntVector IntMatrix::column(std::size_t j) const {
  IntVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntVector IntMatrix::apply(std::span<const Integer> x) const {
  if (x.size() != cols_) throw DimensionMismatch("matrix-vector product: shape mismatch");
  IntVector y(rows_, Integer(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) y[i] += (*this)(i, j) * x[j];
  return y;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& k) {
  if (k == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += k * (*this)(src, j);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& k) {
  if (k == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += k * (*this)(i, src);
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product: shape mismatch");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

std::string IntMatrix::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) s += ",";
    s += torikit::to_string(row(i));
  }
  return s + "]";
}

// ------------------------------------------------------ fraction-free elimination

namespace {

// Bareiss elimination in place; returns the rank. When the matrix is square and
// of full rank, the last pivot is the determinant up to the returned sign.
std::size_t bareiss(IntMatrix& a, int& sign) {
  sign = 1;
  const std::size_t rows = a.rows(), cols = a.cols();
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      a.swap_rows(p, r);
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a(i, j) = a(r, c) * a(i, j) - a(i, c) * a(r, j);
        mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), prev.get_mpz_t());
      }
      a(i, c) = 0;
    }
    prev = a(r, c);
    ++r;
  }
  return r;
}

}  // namespace

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  IntMatrix a = m;
  int sign = 1;
  if (bareiss(a, sign) < m.rows()) return 0;
  return sign * a(m.rows() - 1, m.cols() - 1);
}

std::size_t rational_rank(const IntMatrix& m) {
  IntMatrix a = m;
  int sign = 1;
  return bareiss(a, sign);
}

// ---------------------------------------------------------------- Smith form

IntVector SmithForm::diagonal() const {
  IntVector d(std::min(D.rows(), D.cols()));
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = D(i, i);
  return d;
}

std::size_t SmithForm::rank() const {
  std::size_t r = 0;
  for (const auto& d : diagonal())
    if (d != 0) ++r;
  return r;
}

SmithForm smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  SmithForm s{IntMatrix::identity(rows), m, IntMatrix::identity(cols)};
  IntMatrix& d = s.D;
  Integer q;

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      // Pivot: entry of minimal nonzero absolute value in the trailing block.
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (d(i, j) != 0 && (pi == rows || mpz_cmpabs(d(i, j).get_mpz_t(), d(pi, pj).get_mpz_t()) < 0)) {
            pi = i;
            pj = j;
          }
      if (pi == rows) return s;
      d.swap_rows(t, pi);
      s.U.swap_rows(t, pi);
      d.swap_cols(t, pj);
      s.V.swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (d(i, t) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), d(i, t).get_mpz_t(), d(t, t).get_mpz_t());
        q = -q;
        d.add_row_multiple(i, t, q);
        s.U.add_row_multiple(i, t, q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (d(t, j) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), d(t, j).get_mpz_t(), d(t, t).get_mpz_t());
        q = -q;
        d.add_col_multiple(j, t, q);
        s.V.add_col_multiple(j, t, q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: pull a non-multiple of the pivot into the pivot row.
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      d.add_row_multiple(t, bad, 1);
      s.U.add_row_multiple(t, bad, 1);
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      s.U.negate_row(t);
    }
  }
  return s;
}

std::optional<IntVector> solve_integer(const IntMatrix& m, std::span<const Integer> b) {
  if (b.size() != m.rows()) throw DimensionMismatch("solve_integer: right-hand side has wrong length");
  // M x = b  <=>  D y = U b  with  x = V y.
  const SmithForm s = smith_normal_form(m);
  const IntVector ub = s.U.apply(b);
  const std::size_t r = s.rank();
  IntVector y(m.cols(), Integer(0));
  for (std::size_t i = 0; i < ub.size(); ++i) {
    if (i < r) {
      if (!mpz_divisible_p(ub[i].get_mpz_t(), s.D(i, i).get_mpz_t())) return std::nullopt;
      mpz_divexact(y[i].get_mpz_t(), ub[i].get_mpz_t(), s.D(i, i).get_mpz_t());
    } else if (ub[i] != 0) {
      return std::nullopt;
    }
  }
  return s.V.apply(y);
}

IntMatrix integer_kernel(const IntMatrix& m) {
  const SmithForm s = smith_normal_form(m);
  const std::size_t r = s.rank();
  IntMatrix k(m.cols(), m.cols() - r);
  for (std::size_t j = r; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.cols(); ++i) k(i, j - r) = s.V(i, j);
  return k;
}

IntMatrix unimodular_inverse(const IntMatrix& u) {
  if (u.rows() != u.cols()) throw DimensionMismatch("unimodular_inverse: matrix not square");
  // U' U V' = I  =>  U^{-1} = V' U'.
  const SmithForm s = smith_normal_form(u);
  for (const auto& d : s.diagonal())
    if (d != 1) throw PreconditionError("unimodular_inverse: matrix is not unimodular");
  return s.V * s.U;
}

// --------------------------------------------------------------- quotients

bool QuotientElement::is_zero() const {
  for (const auto& x : free)
    if (x != 0) return false;
  for (const auto& x : torsion)
    if (x != 0) return false;
  return true;
}

QuotientLatticePresentation::QuotientLatticePresentation(std::size_t ambient_rank,
                                                         const std::vector<IntVector>& generators)
    : ambient_(ambient_rank) {
  const IntMatrix g = IntMatrix::from_columns(generators, ambient_rank);
  SmithForm s = smith_normal_form(g);
  const std::size_t r = s.rank();
  for (std::size_t i = 0; i < r; ++i)
    if (s.D(i, i) != 1) {
      torsion_rows_.push_back(i);
      torsion_.push_back(s.D(i, i));
    }
  for (std::size_t i = r; i < ambient_rank; ++i) free_rows_.push_back(i);
  free_rank_ = free_rows_.size();
  u_inverse_ = unimodular_inverse(s.U);
  u_ = std::move(s.U);
}

QuotientElement QuotientLatticePresentation::project(std::span<const Integer> v) const {
  if (v.size() != ambient_) throw DimensionMismatch("project: vector has wrong rank");
  const IntVector w = u_.apply(v);
  QuotientElement e;
  e.free.reserve(free_rows_.size());
  for (std::size_t i : free_rows_) e.free.push_back(w[i]);
  for (std::size_t k = 0; k < torsion_rows_.size(); ++k) {
    Integer t;
    mpz_fdiv_r(t.get_mpz_t(), w[torsion_rows_[k]].get_mpz_t(), torsion_[k].get_mpz_t());
    e.torsion.push_back(t);
  }
  return e;
}

std::vector<IntVector> QuotientLatticePresentation::generator_lifts() const {
  std::vector<IntVector> out;
  for (std::size_t i : free_rows_) out.push_back(u_inverse_.column(i));
  for (std::size_t i : torsion_rows_) out.push_back(u_inverse_.column(i));
  return out;
}

QuotientLatticePresentation quotient_by_sublattice(std::size_t ambient_rank,
                                                   const std::vector<Character>& generators) {
  std::vector<IntVector> cols;
  cols.reserve(generators.size());
  for (const auto& g : generators) {
    if (g.size() != ambient_rank) throw DimensionMismatch("quotient_by_sublattice: generator has wrong rank");
    cols.push_back(g.coords());
  }
  return QuotientLatticePresentation(ambient_rank, cols);
}

}  // namespace torikit
