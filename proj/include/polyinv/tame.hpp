#pragma once

#include <random>
#include <vector>

#include "polyinv/endo.hpp"

namespace polyinv {

/// Knobs for the seeded generators of test and benchmark maps.
struct TameOptions {
  Domain domain = Domain::rationals();
  std::size_t dim = 2;
  /// Generated maps never exceed this total degree.
  unsigned max_degree = 4;
  unsigned max_factors = 4;
  /// Degree range of the shift polynomial in an elementary map.
  unsigned max_shift_degree = 3;
  /// Nonzero coefficients are drawn from [-coeff_range, coeff_range].
  long coeff_range = 3;
  /// Conjugate by random unimodular linear maps.
  bool linear_conjugation = true;
};

struct TamePair {
  PolyMap map;
  /// Built by composing the inverse factors in reverse order.
  PolyMap inverse;
};

/// Composition of 1..max_factors elementary maps x_i -> x_i + c m(x_j, j != i)
/// with deg m >= 2, optionally conjugated by integer linear maps of
/// determinant 1. The result is centered with linear part I and is never the
/// identity. Requires dim >= 2.
TamePair random_tame_automorphism(std::mt19937_64& rng, const TameOptions& options);

/// T1 o S o T2 with S = (x_k + a x_k^2) in one coordinate and T1, T2 tame:
/// centered, linear part I, not injective (S(0) = S(-1/a)).
PolyMap random_noninjective_map(std::mt19937_64& rng, const TameOptions& options);

/// Curve with zero constant term and t-degree in [1, max_degree].
Curve random_centered_curve(std::mt19937_64& rng, const Domain& domain, std::size_t dim,
                            unsigned max_degree, long coeff_range);

std::vector<Coefficient> random_point(std::mt19937_64& rng, const Domain& domain,
                                      std::size_t dim, long range);

}  // namespace polyinv
