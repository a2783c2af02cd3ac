#pragma once

#include <random>
#include <string>
#include <vector>

#include "polyinv/endo.hpp"
#include "polyinv/text.hpp"

namespace polyinv::test {

inline Polynomial poly(const std::string& text, const Domain& domain = Domain::rationals(),
                       std::vector<std::string> names = {"x", "y"}) {
  return parse_polynomial(text, domain, names);
}

inline PolyMap map(const std::string& literal) { return parse_map(literal); }
inline Curve curve(const std::string& literal) { return parse_curve(literal); }

inline std::vector<Coefficient> point(std::initializer_list<long> values) {
  std::vector<Coefficient> out;
  for (long v : values) out.emplace_back(v);
  return out;
}

/// Random dense-ish polynomial with small integer coefficients.
inline Polynomial random_poly(std::mt19937_64& rng, const Domain& dom, std::size_t nvars,
                              unsigned max_degree, int terms, long range = 5) {
  std::uniform_int_distribution<long> coeff(-range, range);
  std::uniform_int_distribution<unsigned> deg(0, max_degree);
  std::uniform_int_distribution<std::size_t> var(0, nvars - 1);
  Polynomial p(dom, nvars);
  for (int k = 0; k < terms; ++k) {
    Monomial m(nvars);
    const unsigned d = deg(rng);
    for (unsigned e = 0; e < d; ++e) {
      const auto v = var(rng);
      m.set(v, m[v] + 1);
    }
    p += Polynomial::term(dom, m, dom.make(coeff(rng)));
  }
  return p;
}

}  // namespace polyinv::test
