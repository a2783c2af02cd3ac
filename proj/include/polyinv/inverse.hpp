#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "polyinv/endo.hpp"
#include "polyinv/filtration.hpp"

namespace polyinv {

enum class InverseStatus { Inverted, NotInvertibleByDegreeBound, BudgetExhausted };

const char* to_string(InverseStatus status);

struct InverseOptions {
  /// Maximum number of update steps K_d -> K_{d+1}. Defaults to
  /// degree_bound(F) + 1 for the degree filtration and 64 for p-adic ones.
  std::optional<unsigned> budget;
  /// A p-adic run whose iterate grows beyond this many terms stops with
  /// BudgetExhausted.
  std::size_t max_terms = 100000;
  bool keep_trace = true;
};

struct InverseOutcome {
  InverseStatus status;
  /// I + K_d when status is Inverted.
  std::optional<PolyMap> inverse;
  /// Update steps performed.
  unsigned iterations = 0;
  /// Index d of the accepted (or last) iterate K_d.
  unsigned level = 0;
  /// Number of fixed-point checks H(I + K_d) = K_d that were run.
  unsigned checks = 0;
  PolyMap last_k;
  /// K_0, K_1, ... when InverseOptions::keep_trace is set.
  std::vector<PolyMap> trace;
};

/// deg(F)^(n-1): the largest possible degree of a polynomial inverse over a
/// reduced coefficient ring.
unsigned degree_bound(const PolyMap& f);

/// Iterative inversion of F = I - H over a composition-filtration.
///
/// Runs K_0 = 0, K_{d+1} = s_{d+1} pi_{d+1} H(I + K_d). Whenever an iterate
/// repeats (K_{d+1} = K_d with K_{d-1} != K_d) and once more when the budget
/// runs out, the fixed-point equation H(I + K_d) = K_d is tested exactly; on
/// success both F o G and G o F are checked against the identity before
/// G = I + K_d is returned.
///
/// Throws NotCentered if F(0) != 0 and AdmissibilityError (or its subclass
/// LinearPartNotIdentity) if H = I - F does not lie in A_1.
InverseOutcome iterative_inverse(const PolyMap& f, const FiltrationSpec& spec,
                                 const InverseOptions& options = {});

}  // namespace polyinv
