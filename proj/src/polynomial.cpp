#include "torikit/polynomial.hpp"

#include <numeric>

namespace torikit {

unsigned total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0u); }

Polynomial Polynomial::constant(std::size_t variables, const Integer& c) {
  Polynomial p(variables);
  p.add_term(Exponent(variables, 0), c);
  return p;
}

Polynomial Polynomial::linear(std::span<const Integer> coeffs) {
  Polynomial p(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    Exponent e(coeffs.size(), 0);
    e[i] = 1;
    p.add_term(e, coeffs[i]);
  }
  return p;
}

void Polynomial::add_term(const Exponent& e, const Integer& c) {
  if (e.size() != variables_) throw DimensionMismatch("polynomial term has wrong number of variables");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.variables_ != variables_) throw DimensionMismatch("adding polynomials in different rings");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.variables_ != variables_) throw DimensionMismatch("subtracting polynomials in different rings");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.variables_ != b.variables_) throw DimensionMismatch("multiplying polynomials in different rings");
  Polynomial p(a.variables_);
  Exponent e(a.variables_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      p.add_term(e, ca * cb);
    }
  return p;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial r = constant(variables_, 1);
  for (unsigned i = 0; i < k; ++i) r = r * *this;
  return r;
}

Polynomial Polynomial::homogeneous_part(unsigned degree) const {
  Polynomial p(variables_);
  for (const auto& [e, c] : terms_)
    if (total_degree(e) == degree) p.terms_.emplace(e, c);
  return p;
}

std::string Polynomial::to_string(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Integer a = abs(c);
    if (first) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += var + std::to_string(i);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      s += a.get_str();
    } else {
      if (a != 1) s += a.get_str() + "*";
      s += mono;
    }
  }
  return s;
}

namespace {

void fill_monomials(std::size_t pos, unsigned remaining, Exponent& cur, std::vector<Exponent>& out) {
  if (pos + 1 == cur.size()) {
    cur[pos] = remaining;
    out.push_back(cur);
    return;
  }
  for (unsigned a = remaining + 1; a-- > 0;) {
    cur[pos] = a;
    fill_monomials(pos + 1, remaining - a, cur, out);
  }
}

}  // namespace

std::vector<Exponent> monomials_of_degree(std::size_t variables, unsigned degree) {
  std::vector<Exponent> out;
  if (variables == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  Exponent cur(variables, 0);
  fill_monomials(0, degree, cur, out);
  return out;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace torikit
