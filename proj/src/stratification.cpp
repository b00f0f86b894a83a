#include "torikit/stratification.hpp"

#include <stdexcept>

namespace torikit {

void require_smooth(const Fan& f, const std::string& operation) {
  if (auto bad = first_singular_cone(f))
    throw PreconditionError(operation + ": fan not smooth: cone " + to_string(f.cone(*bad).rays()) +
                            " is not generated by part of a lattice basis");
}

void require_complete(const Fan& f, const std::string& operation) {
  const CompletenessReport c = completeness(f);
  if (!c.complete) throw PreconditionError(operation + ": fan not complete: " + c.note);
}

std::vector<Character> dual_basis(const Cone& sigma) {
  if (!is_smooth(sigma)) throw PreconditionError("dual_basis: cone " + to_string(sigma.rays()) + " is not smooth");
  const auto& gens = sigma.generators();
  std::vector<IntVector> rows;
  for (const auto& g : gens) rows.push_back(g.coords());
  const IntMatrix m = IntMatrix::from_rows(rows, sigma.ambient_rank());
  std::vector<Character> out;
  for (std::size_t v = 0; v < gens.size(); ++v) {
    IntVector e(gens.size(), Integer(0));
    e[v] = 1;
    auto x = solve_integer(m, e);
    if (!x) throw std::logic_error("dual_basis: no integer solution on a smooth cone");
    out.emplace_back(std::move(*x));
  }
  return out;
}

Stratification stratify(const Fan& f) {
  require_smooth(f, "stratify");
  Stratification s;
  // Fan::cones() is already sorted by dimension then ray set, so every prefix
  // is closed under taking faces.
  for (std::size_t i = 0; i < f.cones().size(); ++i) {
    const Cone& sigma = f.cone(i);
    Stratum st{i, sigma.dim(), stabilizer_characters(sigma), {}, Exponent(f.rays().size(), 0)};
    const auto chi = dual_basis(sigma);
    for (std::size_t k = 0; k < sigma.rays().size(); ++k) {
      const std::size_t v = sigma.rays()[k];
      st.normal_weights.push_back({v, chi[k], st.stabilizer.project(chi[k])});
      st.euler_monomial[v] = 1;
    }
    s.strata.push_back(std::move(st));
  }
  return s;
}

PerfectionCertificate certify_perfection(const Stratification& s) {
  PerfectionCertificate cert;
  for (const auto& st : s.strata) {
    ++cert.strata;
    if (st.normal_weights.size() != st.codim)
      cert.failures.push_back({st.cone, 0,
                               "stratum has " + std::to_string(st.normal_weights.size()) +
                                   " normal weights but codimension " + std::to_string(st.codim)});
    for (const auto& w : st.normal_weights) {
      ++cert.weights;
      bool nonzero = false;
      for (const auto& c : w.value.free)
        if (c != 0) nonzero = true;
      if (!nonzero)
        cert.failures.push_back({st.cone, w.ray,
                                 "weight " + w.lift.to_string() + " of ray " + std::to_string(w.ray) +
                                     " vanishes in X(T_sigma) (x) Q"});
    }
  }
  return cert;
}

// ------------------------------------------------------------------ series

namespace {

IntVector one_minus_t2_pow(std::size_t k) {
  IntVector p(2 * k + 1, Integer(0));
  for (std::size_t j = 0; j <= k; ++j) {
    p[2 * j] = binomial(k, j);
    if (j % 2) p[2 * j] = -p[2 * j];
  }
  return p;
}

void trim(IntVector& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

}  // namespace

PoincareSeries::PoincareSeries(IntVector numerator, std::size_t denominator_exponent)
    : numerator_(std::move(numerator)), denominator_exponent_(denominator_exponent) {
  trim(numerator_);
}

Integer PoincareSeries::coefficient(std::size_t degree) const {
  // 1/(1-t^2)^d = sum_j C(j+d-1, d-1) t^(2j)
  const std::size_t d = denominator_exponent_;
  Integer c = 0;
  for (std::size_t i = 0; i < numerator_.size() && i <= degree; ++i) {
    const std::size_t rest = degree - i;
    if (rest % 2) continue;
    const std::size_t j = rest / 2;
    Integer w = d == 0 ? Integer(j == 0 ? 1 : 0) : binomial(j + d - 1, d - 1);
    c += numerator_[i] * w;
  }
  return c;
}

std::vector<Integer> PoincareSeries::coefficients(std::size_t max_degree) const {
  std::vector<Integer> out;
  for (std::size_t k = 0; k <= max_degree; ++k) out.push_back(coefficient(k));
  return out;
}

std::string polynomial_to_string(const IntVector& coeffs, const std::string& var) {
  std::string s;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const Integer& c = coeffs[i];
    if (c == 0) continue;
    Integer a = abs(c);
    if (s.empty())
      s += c < 0 ? "-" : "";
    else
      s += c < 0 ? " - " : " + ";
    if (i == 0) {
      s += a.get_str();
      continue;
    }
    if (a != 1) s += a.get_str();
    s += var;
    if (i > 1) s += "^" + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

std::string PoincareSeries::to_string() const {
  std::string s = "(" + polynomial_to_string(numerator_) + ")";
  if (denominator_exponent_ > 0) s += "/(1 - t^2)^" + std::to_string(denominator_exponent_);
  return s;
}

PoincareSeries partial_poincare_series(const Fan& f, const Stratification& s, std::size_t prefix) {
  const std::size_t n = f.rank();
  IntVector num(2 * n + 1, Integer(0));
  for (std::size_t k = 0; k < prefix && k < s.strata.size(); ++k) {
    const std::size_t c = s.strata[k].codim;
    const IntVector p = one_minus_t2_pow(n - c);
    for (std::size_t i = 0; i < p.size(); ++i) num[2 * c + i] += p[i];
  }
  return PoincareSeries(std::move(num), n);
}

PoincareSeries equivariant_poincare_series(const Fan& f) {
  const Stratification s = stratify(f);
  return partial_poincare_series(f, s, s.strata.size());
}

IntVector ordinary_poincare_polynomial(const Fan& f) {
  require_smooth(f, "ordinary_poincare_polynomial");
  require_complete(f, "ordinary_poincare_polynomial");
  IntVector p = equivariant_poincare_series(f).numerator();
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] < 0 || (i % 2 == 1 && p[i] != 0))
      throw std::logic_error("ordinary Poincare polynomial has a negative or odd-degree coefficient");
  return p;
}

}  // namespace torikit
