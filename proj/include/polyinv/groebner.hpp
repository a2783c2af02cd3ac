#pragma once

#include <optional>
#include <span>
#include <vector>

#include "polyinv/endo.hpp"

namespace polyinv {

/// Generators of an ideal together with the monomial order to work in.
/// Coefficients must lie in a field (QQ or GF(p)).
struct IdealBasis {
  std::vector<Polynomial> generators;
  MonomialOrder order;
};

struct GroebnerResult {
  /// Reduced Gröbner basis: monic, inter-reduced, sorted by increasing
  /// leading monomial. The unit ideal gives {1}; the zero ideal gives {}.
  std::vector<Polynomial> basis;
  MonomialOrder order;

  bool is_unit_ideal() const { return basis.size() == 1 && basis[0].is_constant(); }
};

/// Remainder of f on full division by `basis` under `order`: no term of the
/// result is divisible by a leading monomial of the basis.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis,
                       const MonomialOrder& order);

/// S-polynomial lcm/LT(f) * f - lcm/LT(g) * g with unit leading coefficients.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order);

/// Buchberger's algorithm with the coprime and chain criteria and the normal
/// (smallest lcm first) selection strategy, followed by inter-reduction.
GroebnerResult buchberger_reduced(const IdealBasis& ideal);

/// Solved form x_i = value when the basis is {x_i - value_i}. Each value is a
/// polynomial in the remaining (non-eliminated) variables.
struct LinearShape {
  /// Indexed by position in the eliminated block.
  std::vector<Polynomial> values;
};

/// Recognizes a basis of the form {x_i - q_i : i in block} with every q_i free
/// of the block's variables.
std::optional<LinearShape> linear_shape(const GroebnerResult& gb,
                                        std::span<const std::size_t> block);

struct GbInverseOutcome {
  bool invertible = false;
  std::optional<PolyMap> inverse;
  /// Reduced basis of (Y_i - F_i(X)) in the variables X_1..X_n, Y_1..Y_n.
  GroebnerResult basis;
};

/// Inverse via the reduced basis of (Y - F(X)) under an order with every X
/// above every Y-monomial: F is invertible exactly when that basis reads
/// {X_i - G_i(Y)}, and then G is the inverse.
GbInverseOutcome gb_inverse(const PolyMap& f,
                            MonomialOrder::Kind inner = MonomialOrder::Kind::GrevLex);

enum class PointPreimageShape { Unique, NotUnique, Empty };
const char* to_string(PointPreimageShape shape);

struct GbPointOutcome {
  PointPreimageShape shape;
  std::optional<std::vector<Coefficient>> point;
  GroebnerResult basis;
};

/// Reduced basis of (c - F): {1} means no solution, {X_i - b_i} means b is
/// the only solution (over the algebraic closure), anything else is reported
/// as NotUnique.
GbPointOutcome gb_point_preimage(const PolyMap& f, std::span<const Coefficient> c,
                                 MonomialOrder::Kind inner = MonomialOrder::Kind::GrevLex);

enum class CurvePreimageShape { Found, ShapeBasis, Evidence };
const char* to_string(CurvePreimageShape shape);

struct GbCurveOutcome {
  CurvePreimageShape shape;
  /// The centered preimage curve when shape is Found.
  std::optional<Curve> g;
  /// ShapeBasis only: the solved components g_i(t); some g_i(0) is nonzero.
  std::vector<Polynomial> solution;
  /// Reduced basis of (F - f) in X_1..X_n, t with every X above every t^m.
  GroebnerResult basis;
};

/// Curve preimage from the reduced basis of (F(X) - f(t)).
///
/// A basis {X_i - g_i(t)} is the solution (Found, or ShapeBasis when g(0) is
/// not 0). Otherwise generators that are linear in a single X with a
/// t-only remainder are solved and substituted in turn; a complete candidate
/// with F(g) = f and g(0) = 0 is Found. Anything else returns Evidence: the
/// basis, which proves nonexistence only when F is known to be an
/// automorphism.
GbCurveOutcome gb_curve_preimage(const PolyMap& f, const Curve& target,
                                 MonomialOrder::Kind inner = MonomialOrder::Kind::GrevLex);

}  // namespace polyinv
