#pragma once

#include <span>
#include <vector>

#include "polyinv/endo.hpp"

namespace polyinv {

/// F = L o F' with L affine, F'(0) = 0 and F' having linear part I.
struct AffineSplit {
  /// L(x) = A x + b with A the linear part of F and b = F(0).
  PolyMap outer;
  PolyMap outer_inverse;
  PolyMap normalized;
};

/// Inverse of a square matrix by exact Gauss-Jordan elimination. Over ZZ the
/// inverse must be integral. Throws LinearPartSingular otherwise.
std::vector<std::vector<Coefficient>> invert_matrix(
    const Domain& domain, const std::vector<std::vector<Coefficient>>& m);

/// Splits off the affine part of F so the iterative engines can run on F'.
/// Throws LinearPartSingular if the linear part is not invertible over the
/// coefficient domain.
AffineSplit affine_normalize(const PolyMap& f);

}  // namespace polyinv
