#include "polyinv/tame.hpp"

#include "polyinv/errors.hpp"

namespace polyinv {

namespace {

long draw(std::mt19937_64& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

long nonzero(std::mt19937_64& rng, long range) {
  long v = draw(rng, 1, range);
  return draw(rng, 0, 1) ? v : -v;
}

/// Random polynomial in the variables other than `skip`, every term of
/// total degree in [2, max_degree].
Polynomial shift_polynomial(std::mt19937_64& rng, const TameOptions& o, std::size_t skip) {
  const std::size_t n = o.dim;
  Polynomial p(o.domain, n);
  const long terms = draw(rng, 1, 2);
  for (long k = 0; k < terms; ++k) {
    Monomial m(n);
    const auto deg = static_cast<unsigned>(draw(rng, 2, std::max<long>(2, o.max_shift_degree)));
    for (unsigned e = 0; e < deg; ++e) {
      auto v = static_cast<std::size_t>(draw(rng, 0, static_cast<long>(n) - 2));
      if (v >= skip) ++v;
      m.set(v, m[v] + 1);
    }
    p += Polynomial::term(o.domain, m, o.domain.make(nonzero(rng, o.coeff_range)));
  }
  return p;
}

PolyMap elementary(const TameOptions& o, std::size_t index, const Polynomial& shift) {
  std::vector<Polynomial> comps;
  for (std::size_t i = 0; i < o.dim; ++i) {
    Polynomial x = Polynomial::variable(o.domain, o.dim, i);
    comps.push_back(i == index ? x + shift : x);
  }
  return PolyMap(std::move(comps));
}

TamePair tame_once(std::mt19937_64& rng, const TameOptions& o) {
  PolyMap map = PolyMap::identity(o.domain, o.dim);
  PolyMap inverse = map;
  const long factors = draw(rng, 1, std::max<long>(1, o.max_factors));
  for (long k = 0; k < factors; ++k) {
    const auto i = static_cast<std::size_t>(draw(rng, 0, static_cast<long>(o.dim) - 1));
    Polynomial shift = shift_polynomial(rng, o, i);
    PolyMap e = elementary(o, i, shift);
    PolyMap candidate = compose_maps(map, e);
    if (candidate.degree() > static_cast<int>(o.max_degree)) continue;
    map = std::move(candidate);
    inverse = compose_maps(elementary(o, i, -shift), inverse);
  }
  if (o.linear_conjugation) {
    const long rounds = draw(rng, 0, 2);
    for (long k = 0; k < rounds; ++k) {
      const auto i = static_cast<std::size_t>(draw(rng, 0, static_cast<long>(o.dim) - 1));
      auto j = static_cast<std::size_t>(draw(rng, 0, static_cast<long>(o.dim) - 2));
      if (j >= i) ++j;
      const long a = nonzero(rng, 2);
      Polynomial xj = Polynomial::variable(o.domain, o.dim, j).scaled(o.domain.make(a));
      PolyMap l = elementary(o, i, xj);
      PolyMap l_inv = elementary(o, i, -xj);
      map = compose_maps(l, compose_maps(map, l_inv));
      inverse = compose_maps(l, compose_maps(inverse, l_inv));
    }
  }
  return {std::move(map), std::move(inverse)};
}

}  // namespace

TamePair random_tame_automorphism(std::mt19937_64& rng, const TameOptions& options) {
  if (options.dim < 2) throw ArityMismatch("tame generator needs dimension >= 2");
  while (true) {
    TamePair pair = tame_once(rng, options);
    if (!pair.map.is_identity()) return pair;
  }
}

PolyMap random_noninjective_map(std::mt19937_64& rng, const TameOptions& options) {
  if (options.dim < 2) throw ArityMismatch("generator needs dimension >= 2");
  TameOptions small = options;
  small.max_factors = std::min(options.max_factors, 2u);
  small.max_shift_degree = 2;
  small.coeff_range = std::min(options.coeff_range, 2L);
  while (true) {
    const auto k = static_cast<std::size_t>(draw(rng, 0, static_cast<long>(options.dim) - 1));
    Polynomial xk = Polynomial::variable(options.domain, options.dim, k);
    PolyMap s = elementary(options, k, xk.pow(2).scaled(options.domain.make(nonzero(rng, 2))));
    PolyMap outer = draw(rng, 0, 1) ? tame_once(rng, small).map
                                    : PolyMap::identity(options.domain, options.dim);
    PolyMap inner = draw(rng, 0, 1) ? tame_once(rng, small).map
                                    : PolyMap::identity(options.domain, options.dim);
    PolyMap f = compose_maps(outer, compose_maps(s, inner));
    if (f.degree() <= static_cast<int>(options.max_degree)) return f;
  }
}

Curve random_centered_curve(std::mt19937_64& rng, const Domain& domain, std::size_t dim,
                            unsigned max_degree, long coeff_range) {
  while (true) {
    std::vector<Polynomial> comps;
    for (std::size_t i = 0; i < dim; ++i) {
      Polynomial p(domain, 1);
      const auto deg = static_cast<unsigned>(draw(rng, 1, std::max<long>(1, max_degree)));
      for (unsigned e = 1; e <= deg; ++e) {
        if (e < deg && draw(rng, 0, 2) == 0) continue;  // sparse lower terms
        const long c = draw(rng, -coeff_range, coeff_range);
        p += Polynomial::term(domain, Monomial{e}, domain.make(c));
      }
      comps.push_back(std::move(p));
    }
    Curve g(std::move(comps));
    if (g.degree() >= 1) return g;
  }
}

std::vector<Coefficient> random_point(std::mt19937_64& rng, const Domain& domain,
                                      std::size_t dim, long range) {
  std::vector<Coefficient> p;
  for (std::size_t i = 0; i < dim; ++i) p.push_back(domain.make(draw(rng, -range, range)));
  return p;
}

}  // namespace polyinv
