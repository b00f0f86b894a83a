#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "torikit/lattice.hpp"

namespace torikit {

using Exponent = std::vector<unsigned>;

unsigned total_degree(const Exponent& e);

/// Integer polynomial in a fixed number of commuting variables. Zero
/// coefficients are never stored.
class Polynomial {
 public:
  explicit Polynomial(std::size_t variables = 0) : variables_(variables) {}

  static Polynomial constant(std::size_t variables, const Integer& c);
  /// sum_i coeffs[i] * y_i
  static Polynomial linear(std::span<const Integer> coeffs);

  std::size_t variables() const noexcept { return variables_; }
  const std::map<Exponent, Integer>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add_term(const Exponent& e, const Integer& c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  Polynomial pow(unsigned k) const;
  /// Homogeneous component of the given total degree.
  Polynomial homogeneous_part(unsigned degree) const;

  std::string to_string(const std::string& var = "y") const;

 private:
  std::size_t variables_;
  std::map<Exponent, Integer> terms_;
};

/// All exponent vectors in `variables` variables of the given total degree,
/// in lexicographically decreasing order.
std::vector<Exponent> monomials_of_degree(std::size_t variables, unsigned degree);

Integer binomial(unsigned long n, unsigned long k);

}  // namespace torikit
