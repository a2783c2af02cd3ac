#include "polyinv/affine.hpp"

#include "polyinv/errors.hpp"

namespace polyinv {

std::vector<std::vector<Coefficient>> invert_matrix(
    const Domain& domain, const std::vector<std::vector<Coefficient>>& m) {
  const std::size_t n = m.size();
  // Integers are eliminated over QQ and checked for integrality afterwards.
  const Domain work = domain.is_field() ? domain : Domain::rationals();
  std::vector<std::vector<Coefficient>> a(n, std::vector<Coefficient>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = work.make(m[i][j].value());
    a[i][n + i] = work.one();
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col].is_zero()) ++pivot;
    if (pivot == n) throw LinearPartSingular("linear part is singular");
    std::swap(a[pivot], a[col]);
    const Coefficient inv = work.inv(a[col][col]);
    for (auto& v : a[col]) v = work.mul(v, inv);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      const Coefficient factor = a[r][col];
      for (std::size_t k = 0; k < 2 * n; ++k) {
        a[r][k] = work.sub(a[r][k], work.mul(factor, a[col][k]));
      }
    }
  }
  std::vector<std::vector<Coefficient>> out(n, std::vector<Coefficient>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Coefficient& v = a[i][n + j];
      if (!domain.contains(v)) {
        throw LinearPartSingular("linear part is not invertible over " + domain.name());
      }
      out[i][j] = v;
    }
  }
  return out;
}

namespace {

/// x -> A x + b.
PolyMap affine_map(const Domain& dom, const std::vector<std::vector<Coefficient>>& a,
                   const std::vector<Coefficient>& b, const std::vector<std::string>& names) {
  const std::size_t n = a.size();
  std::vector<Polynomial> comps;
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial p = Polynomial::constant(dom, n, b[i]);
    for (std::size_t j = 0; j < n; ++j) {
      p += Polynomial::term(dom, Monomial::variable(n, j), a[i][j]);
    }
    comps.push_back(std::move(p));
  }
  return PolyMap(std::move(comps), names);
}

}  // namespace

AffineSplit affine_normalize(const PolyMap& f) {
  const Domain& dom = f.domain();
  const std::size_t n = f.dim();
  const auto a = linear_matrix(f);
  std::vector<Coefficient> b;
  for (const auto& c : f.components()) b.push_back(c.constant_term());
  const auto a_inv = invert_matrix(dom, a);

  // L^{-1}(y) = A^{-1} y - A^{-1} b
  std::vector<Coefficient> shift(n, dom.zero());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      shift[i] = dom.sub(shift[i], dom.mul(a_inv[i][j], b[j]));
    }
  }
  PolyMap outer = affine_map(dom, a, b, f.names());
  PolyMap outer_inverse = affine_map(dom, a_inv, shift, f.names());
  PolyMap normalized = compose_maps(outer_inverse, f);
  return {std::move(outer), std::move(outer_inverse), std::move(normalized)};
}

}  // namespace polyinv
