#include "polyinv/endo.hpp"

#include <ostream>

#include "polyinv/errors.hpp"

namespace polyinv {

PolyMap::PolyMap(std::vector<Polynomial> components, std::vector<std::string> names)
    : components_(std::move(components)), names_(std::move(names)) {
  const std::size_t n = components_.size();
  if (n == 0) throw ArityMismatch("a polynomial map needs at least one component");
  for (const auto& c : components_) {
    if (c.nvars() != n) {
      throw ArityMismatch("map has " + std::to_string(n) +
                          " components but a component in " +
                          std::to_string(c.nvars()) + " variables");
    }
    if (!(c.domain() == components_.front().domain())) {
      throw DomainMismatch("map components over different domains");
    }
  }
  if (names_.empty()) names_ = default_names(n);
  if (names_.size() != n) throw ArityMismatch("one variable name per coordinate");
}

PolyMap PolyMap::identity(const Domain& domain, std::size_t n,
                          std::vector<std::string> names) {
  std::vector<Polynomial> comps;
  for (std::size_t i = 0; i < n; ++i) comps.push_back(Polynomial::variable(domain, n, i));
  return PolyMap(std::move(comps), std::move(names));
}

int PolyMap::degree() const {
  int d = kDegreeOfZero;
  for (const auto& c : components_) d = std::max(d, c.degree());
  return d;
}

bool PolyMap::is_identity() const {
  for (std::size_t i = 0; i < dim(); ++i) {
    if (!(components_[i] == Polynomial::variable(domain(), dim(), i))) return false;
  }
  return true;
}

PolyMap PolyMap::with_names(std::vector<std::string> names) const {
  return PolyMap(components_, std::move(names));
}

namespace {

void check_same_shape(const PolyMap& a, const PolyMap& b) {
  if (a.dim() != b.dim()) throw ArityMismatch("maps of different dimension");
  if (!(a.domain() == b.domain())) throw DomainMismatch("maps over different domains");
}

}  // namespace

PolyMap operator+(const PolyMap& a, const PolyMap& b) {
  check_same_shape(a, b);
  std::vector<Polynomial> comps;
  for (std::size_t i = 0; i < a.dim(); ++i) comps.push_back(a[i] + b[i]);
  return PolyMap(std::move(comps), a.names());
}

PolyMap operator-(const PolyMap& a, const PolyMap& b) {
  check_same_shape(a, b);
  std::vector<Polynomial> comps;
  for (std::size_t i = 0; i < a.dim(); ++i) comps.push_back(a[i] - b[i]);
  return PolyMap(std::move(comps), a.names());
}

PolyMap NormalizedMap::reconstruct() const {
  return PolyMap::identity(h_part.domain(), h_part.dim(), h_part.names()) - h_part;
}

std::vector<std::vector<Coefficient>> linear_matrix(const PolyMap& f) {
  const std::size_t n = f.dim();
  std::vector<std::vector<Coefficient>> m(n, std::vector<Coefficient>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = f[i].coefficient(Monomial::variable(n, j));
  }
  return m;
}

NormalizedMap normalize(const PolyMap& f) {
  const std::size_t n = f.dim();
  for (std::size_t i = 0; i < n; ++i) {
    if (!f[i].constant_term().is_zero()) {
      throw NotCentered("component " + std::to_string(i + 1) +
                        " has constant term " + f[i].constant_term().to_string());
    }
  }
  auto lin = linear_matrix(f);
  bool identity = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!(lin[i][j] == Coefficient(i == j ? 1 : 0))) identity = false;
    }
  }
  if (!identity) {
    std::string rendered;
    for (std::size_t i = 0; i < n; ++i) {
      rendered += i == 0 ? "[" : "; ";
      for (std::size_t j = 0; j < n; ++j) {
        if (j > 0) rendered += " ";
        rendered += lin[i][j].to_string();
      }
    }
    rendered += "]";
    throw LinearPartNotIdentity("linear part is " + rendered + ", not the identity",
                                rendered);
  }
  PolyMap h = PolyMap::identity(f.domain(), n, f.names()) - f;
  for (const auto& c : h.components()) {
    if (!affine_part(c).is_zero()) throw InvariantViolation("H has an affine part");
  }
  return NormalizedMap{f, std::move(h)};
}

std::vector<Coefficient> evaluate(const PolyMap& f, std::span<const Coefficient> point) {
  std::vector<Coefficient> out;
  out.reserve(f.dim());
  for (const auto& c : f.components()) out.push_back(evaluate(c, point));
  return out;
}

PolyMap compose_maps(const PolyMap& f, const PolyMap& g) {
  check_same_shape(f, g);
  std::vector<Polynomial> comps;
  for (const auto& c : f.components()) comps.push_back(compose(c, g.components()));
  return PolyMap(std::move(comps), f.names());
}

// ---------------------------------------------------------------------------
// Curve

Curve::Curve(std::vector<Polynomial> components, std::string param)
    : components_(std::move(components)), param_(std::move(param)) {
  if (components_.empty()) throw ArityMismatch("a curve needs at least one component");
  for (std::size_t i = 0; i < components_.size(); ++i) {
    const auto& c = components_[i];
    if (c.nvars() != 1) throw ArityMismatch("curve components must be univariate");
    if (!(c.domain() == components_.front().domain())) {
      throw DomainMismatch("curve components over different domains");
    }
    if (!c.constant_term().is_zero()) {
      throw CurveNotCentered("curve component " + std::to_string(i + 1) +
                             " has constant term " + c.constant_term().to_string());
    }
  }
}

Curve Curve::zero(const Domain& domain, std::size_t n, std::string param) {
  return Curve(std::vector<Polynomial>(n, Polynomial(domain, 1)), std::move(param));
}

Curve Curve::line(const Domain& domain, std::span<const Coefficient> direction,
                  std::string param) {
  std::vector<Polynomial> comps;
  for (const auto& c : direction) {
    comps.push_back(Polynomial::term(domain, Monomial{1}, c));
  }
  return Curve(std::move(comps), std::move(param));
}

int Curve::degree() const {
  int d = kDegreeOfZero;
  for (const auto& c : components_) d = std::max(d, c.degree());
  return d;
}

std::vector<Coefficient> Curve::at(const Coefficient& tau) const {
  std::vector<Coefficient> out;
  for (const auto& c : components_) out.push_back(evaluate(c, std::span(&tau, 1)));
  return out;
}

Curve apply_to_curve(const PolyMap& f, const Curve& g) {
  if (f.dim() != g.dim()) throw ArityMismatch("curve and map dimensions differ");
  if (!(f.domain() == g.domain())) throw DomainMismatch("curve and map domains differ");
  for (std::size_t i = 0; i < f.dim(); ++i) {
    if (!f[i].constant_term().is_zero()) {
      throw NotCentered("map does not fix the origin");
    }
  }
  std::vector<Polynomial> comps;
  for (const auto& c : f.components()) comps.push_back(compose(c, g.components()));
  for (const auto& c : comps) {
    if (!c.constant_term().is_zero()) {
      throw InvariantViolation("image curve has a constant term");
    }
  }
  return Curve(std::move(comps), g.param());
}

std::ostream& operator<<(std::ostream& os, const PolyMap& f) {
  os << "[";
  for (std::size_t i = 0; i < f.dim(); ++i) {
    if (i > 0) os << ", ";
    os << format(f[i], f.names());
  }
  return os << "]";
}

std::ostream& operator<<(std::ostream& os, const Curve& g) {
  std::vector<std::string> name{g.param()};
  os << "[";
  for (std::size_t i = 0; i < g.dim(); ++i) {
    if (i > 0) os << ", ";
    os << format(g[i], name);
  }
  return os << "]";
}

}  // namespace polyinv
