#pragma once

#include <optional>
#include <span>
#include <vector>

#include "polyinv/endo.hpp"

namespace polyinv {

enum class PreimageStatus { Found, NotFoundWithinDegree };

const char* to_string(PreimageStatus status);

struct PreimageOptions {
  /// Largest t-degree of a preimage curve the search will certify.
  unsigned max_deg = 32;
  bool keep_trace = true;
};

struct PreimageOutcome {
  PreimageStatus status;
  /// The unique centered preimage curve when status is Found.
  std::optional<Curve> g;
  unsigned iterations = 0;
  /// Index d of the accepted (or last) iterate K_d.
  unsigned level = 1;
  unsigned max_deg = 0;
  Curve last_k;
  /// K_1, K_2, ... when PreimageOptions::keep_trace is set.
  std::vector<Curve> trace;
};

/// deg(F)^(n-1) * deg_t(f): a t-degree that suffices when F is invertible.
unsigned default_preimage_budget(const PolyMap& f_map, const Curve& f);

/// Finds the centered polynomial curve g with F(g) = f, if it has t-degree at
/// most options.max_deg.
///
/// Runs K_1 = 0, K_{d+1} = H(f + K_d) mod t^(d+1) for H = I - F. Every
/// repeated iterate (and the last one) is tested against H(f + K_d) = K_d;
/// a pass yields g = f + K_d, which is verified by F(g) = f before returning.
/// A centered preimage is unique, so Found is the answer. NotFoundWithinDegree
/// means either no polynomial preimage exists or its degree exceeds the
/// budget.
///
/// Throws NotCentered if F(0) != 0, AdmissibilityError if I - F has a linear
/// part (CurveNotCentered cannot occur: Curve enforces f(0) = 0).
PreimageOutcome curve_preimage(const PolyMap& f_map, const Curve& f,
                               const PreimageOptions& options = {});

struct PointPreimageOutcome {
  bool found = false;
  std::optional<std::vector<Coefficient>> point;
  /// The run on the line t -> c t.
  PreimageOutcome curve;
};

/// Preimage of c computed as g(1), where g is the preimage curve of t -> c t.
PointPreimageOutcome point_preimage(const PolyMap& f_map, std::span<const Coefficient> c,
                                    const PreimageOptions& options = {});

}  // namespace polyinv
