#include "torikit/rings.hpp"

#include <algorithm>

#include "torikit/stratification.hpp"

namespace torikit {

RaySet support(const Exponent& e) {
  RaySet s;
  for (std::size_t v = 0; v < e.size(); ++v)
    if (e[v] > 0) s.push_back(v);
  return s;
}

// ---------------------------------------------------------------- SRElement

void SRElement::add_term(const Exponent& e, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SRElement& SRElement::operator+=(const SRElement& o) {
  if (o.variables_ != variables_) throw DimensionMismatch("adding elements of different rings");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

SRElement& SRElement::operator-=(const SRElement& o) {
  if (o.variables_ != variables_) throw DimensionMismatch("subtracting elements of different rings");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

SRElement operator*(const Integer& k, SRElement a) {
  if (k == 0) {
    a.terms_.clear();
    return a;
  }
  for (auto& [e, c] : a.terms_) c *= k;
  return a;
}

std::string SRElement::to_string() const {
  Polynomial p(variables_);
  for (const auto& [e, c] : terms_) p.add_term(e, c);
  return p.to_string("x");
}

// ------------------------------------------------------------------- ring

StanleyReisnerRing::StanleyReisnerRing(const Fan& f) : variables_(f.rays().size()) {
  require_smooth(f, "Stanley-Reisner ring");
  for (const auto& sigma : f.cones()) faces_.insert(sigma.rays());
}

SRElement StanleyReisnerRing::one() const {
  SRElement a(variables_);
  a.add_term(Exponent(variables_, 0), 1);
  return a;
}

SRElement StanleyReisnerRing::variable(std::size_t v) const {
  Exponent e(variables_, 0);
  e.at(v) = 1;
  return monomial(e);
}

SRElement StanleyReisnerRing::monomial(const Exponent& e) const {
  if (e.size() != variables_) throw DimensionMismatch("monomial has wrong number of variables");
  SRElement a(variables_);
  if (is_face(support(e))) a.add_term(e, 1);
  return a;
}

SRElement StanleyReisnerRing::multiply(const SRElement& a, const SRElement& b) const {
  if (a.variables_ != variables_ || b.variables_ != variables_)
    throw DimensionMismatch("multiplying elements of a different ring");
  SRElement p(variables_);
  Exponent e(variables_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < variables_; ++i) e[i] = ea[i] + eb[i];
      if (is_face(support(e))) p.add_term(e, ca * cb);
    }
  return p;
}

std::vector<Exponent> StanleyReisnerRing::face_monomials(unsigned k) const {
  // For each face, the monomials of degree k with exactly that support.
  std::vector<Exponent> out;
  for (const auto& face : faces_) {
    const std::size_t s = face.size();
    if (s == 0) {
      if (k == 0) out.emplace_back(variables_, 0);
      continue;
    }
    if (k < s) continue;
    for (const auto& extra : monomials_of_degree(s, k - static_cast<unsigned>(s))) {
      Exponent e(variables_, 0);
      for (std::size_t i = 0; i < s; ++i) e[face[i]] = extra[i] + 1;
      out.push_back(std::move(e));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ------------------------------------------------------------ presentation

std::string SRPresentation::to_string() const {
  std::string s = "Z";
  if (generators > 0) {
    s += "[";
    for (std::size_t v = 0; v < generators; ++v) s += (v ? ",x" : "x") + std::to_string(v);
    s += "]";
  }
  if (!relations.empty()) {
    s += "/(";
    for (std::size_t i = 0; i < relations.size(); ++i) {
      if (i) s += ", ";
      for (std::size_t j = 0; j < relations[i].size(); ++j) s += (j ? "*x" : "x") + std::to_string(relations[i][j]);
    }
    s += ")";
  }
  return s;
}

SRPresentation sr_presentation(const Fan& f) {
  require_smooth(f, "sr_presentation");
  return {f.rays().size(), simplicial_complex(f).minimal_nonfaces};
}

Integer face_monomial_count(const Fan& f, unsigned degree) {
  require_smooth(f, "face_monomial_count");
  if (degree % 2) return 0;
  const unsigned k = degree / 2;
  // A face with s rays carries C(k-1, s-1) monomials of degree k with full support.
  Integer count = 0;
  for (const auto& sigma : f.cones()) {
    const std::size_t s = sigma.rays().size();
    if (s == 0)
      count += k == 0 ? 1 : 0;
    else if (k >= s)
      count += binomial(k - 1, s - 1);
  }
  return count;
}

// ------------------------------------------------------------ linear forms

std::string LinearForm::to_string() const {
  Polynomial p(coefficients.size());
  for (std::size_t v = 0; v < coefficients.size(); ++v) {
    Exponent e(coefficients.size(), 0);
    e[v] = 1;
    p.add_term(e, coefficients[v]);
  }
  return p.to_string("x");
}

LinearForm char_to_linear_form(const Fan& f, const Character& chi) {
  LinearForm form;
  for (const auto& mu : f.rays()) form.coefficients.push_back(pairing(chi, mu));
  return form;
}

SRElement to_element(const StanleyReisnerRing& ring, const LinearForm& form) {
  if (form.coefficients.size() != ring.variables()) throw DimensionMismatch("linear form has wrong length");
  SRElement a = ring.zero();
  for (std::size_t v = 0; v < form.coefficients.size(); ++v) a += form.coefficients[v] * ring.variable(v);
  return a;
}

// ---------------------------------------------------- ordinary cohomology

GradedGroupReport ordinary_cohomology(const Fan& f, unsigned max_degree,
                                      const std::optional<IntMatrix>& character_basis) {
  require_smooth(f, "ordinary_cohomology");
  require_complete(f, "ordinary_cohomology");
  const std::size_t n = f.rank();
  const IntMatrix basis = character_basis.value_or(IntMatrix::identity(n));
  if (basis.rows() != n || basis.cols() != n) throw DimensionMismatch("character basis must be n x n");
  if (abs(determinant(basis)) != 1) throw PreconditionError("character basis is not a basis of X(T)");

  const StanleyReisnerRing ring(f);
  std::vector<SRElement> theta;
  for (std::size_t i = 0; i < n; ++i)
    theta.push_back(to_element(ring, char_to_linear_form(f, Character(basis.row(i)))));

  GradedGroupReport report;
  std::vector<Exponent> lower;
  for (unsigned k = 0; 2 * k <= max_degree; ++k) {
    const std::vector<Exponent> upper = ring.face_monomials(k);
    std::map<Exponent, std::size_t> position;
    for (std::size_t i = 0; i < upper.size(); ++i) position.emplace(upper[i], i);

    // Columns: theta_i * m for each lower-degree face monomial m.
    std::vector<IntVector> columns;
    for (const auto& m : lower)
      for (const auto& t : theta) {
        IntVector col(upper.size(), Integer(0));
        const SRElement product = ring.multiply(t, ring.monomial(m));
        for (const auto& [e, c] : product.terms()) col[position.at(e)] += c;
        columns.push_back(std::move(col));
      }
    const IntMatrix relations = IntMatrix::from_columns(columns, upper.size());

    GradedPiece piece;
    piece.degree = 2 * k;
    const SmithForm s = smith_normal_form(relations);
    const std::size_t image_rank = s.rank();
    if (rational_rank(relations) != image_rank) throw std::logic_error("ordinary_cohomology: SNF rank disagrees with rank over Q");
    piece.rank = upper.size() - image_rank;
    for (std::size_t i = 0; i < image_rank; ++i)
      if (s.D(i, i) != 1) piece.torsion.push_back(s.D(i, i));

    // Greedy monomial basis of the quotient over Q.
    std::vector<IntVector> spanning = columns;
    std::size_t current = image_rank;
    for (std::size_t i = 0; i < upper.size() && piece.basis.size() < piece.rank; ++i) {
      IntVector unit(upper.size(), Integer(0));
      unit[i] = 1;
      spanning.push_back(unit);
      const std::size_t r = rational_rank(IntMatrix::from_columns(spanning, upper.size()));
      if (r > current) {
        current = r;
        piece.basis.push_back(upper[i]);
      } else {
        spanning.pop_back();
      }
    }
    report.pieces.push_back(std::move(piece));
    lower = upper;
  }
  return report;
}

// ------------------------------------------------------------- restriction

RestrictionMap::RestrictionMap(const Fan& f) : variables_(f.rays().size()) {
  require_smooth(f, "restriction_map");
  for (std::size_t i = 0; i < f.cones().size(); ++i) {
    const Cone& sigma = f.cone(i);
    const QuotientLatticePresentation stab = stabilizer_characters(sigma);
    const std::size_t d = stab.rank();
    std::vector<Polynomial> images(variables_, Polynomial(d));
    const auto chi = dual_basis(sigma);
    for (std::size_t k = 0; k < sigma.rays().size(); ++k)
      images[sigma.rays()[k]] = Polynomial::linear(stab.project(chi[k]).free);
    images_.push_back(std::move(images));
    dims_.push_back(d);
  }
}

const Polynomial& RestrictionMap::image_of_variable(std::size_t cone, std::size_t v) const {
  return images_.at(cone).at(v);
}

Polynomial RestrictionMap::restrict(const SRElement& a, std::size_t cone) const {
  if (a.variables() != variables_) throw DimensionMismatch("restricting an element of a different ring");
  const auto& images = images_.at(cone);
  const std::size_t d = dims_.at(cone);
  Polynomial out(d);
  for (const auto& [e, c] : a.terms()) {
    Polynomial term = Polynomial::constant(d, c);
    for (std::size_t v = 0; v < e.size() && !term.is_zero(); ++v)
      if (e[v] > 0) term = term * images[v].pow(e[v]);
    out += term;
  }
  return out;
}

Polynomial restriction_map(const Fan& f, const SRElement& a, std::size_t cone) {
  if (cone >= f.cones().size()) throw std::out_of_range("restriction_map: cone not in fan");
  return RestrictionMap(f).restrict(a, cone);
}

bool InjectivityReport::injective() const {
  return std::all_of(degrees.begin(), degrees.end(), [](const InjectivityDegree& d) { return d.injective(); });
}

InjectivityReport check_restriction_injectivity(const Fan& f, unsigned max_degree) {
  const StanleyReisnerRing ring(f);
  const RestrictionMap res(f);
  InjectivityReport report;
  for (unsigned k = 0; 2 * k <= max_degree; ++k) {
    const auto source = ring.face_monomials(k);
    // Row blocks: coefficients of Sym^k X(T_sigma) for each cone sigma.
    std::vector<IntVector> columns(source.size());
    for (std::size_t c = 0; c < f.cones().size(); ++c) {
      const auto targets = monomials_of_degree(res.target_variables(c), k);
      std::map<Exponent, std::size_t> position;
      for (std::size_t i = 0; i < targets.size(); ++i) position.emplace(targets[i], i);
      for (std::size_t j = 0; j < source.size(); ++j) {
        IntVector block(targets.size(), Integer(0));
        const Polynomial image = res.restrict(ring.monomial(source[j]), c);
        for (const auto& [e, coeff] : image.terms()) block[position.at(e)] = coeff;
        columns[j].insert(columns[j].end(), block.begin(), block.end());
      }
    }
    const std::size_t rows = columns.empty() ? 0 : columns.front().size();
    InjectivityDegree d;
    d.degree = 2 * k;
    d.source_rank = source.size();
    d.image_rank = source.empty() ? 0 : rational_rank(IntMatrix::from_columns(columns, rows));
    report.degrees.push_back(d);
  }
  return report;
}

}  // namespace torikit
