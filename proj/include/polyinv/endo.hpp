#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "polyinv/polynomial.hpp"

namespace polyinv {

/// Polynomial map R^n -> R^n: n polynomials in the same n variables.
class PolyMap {
 public:
  /// Throws ArityMismatch unless there are n >= 1 components, each in n
  /// variables, and DomainMismatch unless they share a domain. Empty
  /// `names` selects default_names(n).
  explicit PolyMap(std::vector<Polynomial> components,
                   std::vector<std::string> names = {});

  static PolyMap identity(const Domain& domain, std::size_t n,
                          std::vector<std::string> names = {});

  std::size_t dim() const noexcept { return components_.size(); }
  const Domain& domain() const noexcept { return components_.front().domain(); }
  const std::vector<Polynomial>& components() const noexcept { return components_; }
  const Polynomial& operator[](std::size_t i) const { return components_[i]; }
  const std::vector<std::string>& names() const noexcept { return names_; }

  /// Largest component degree (kDegreeOfZero for the zero map).
  int degree() const;
  bool is_identity() const;

  PolyMap with_names(std::vector<std::string> names) const;

  friend PolyMap operator+(const PolyMap& a, const PolyMap& b);
  friend PolyMap operator-(const PolyMap& a, const PolyMap& b);
  /// Structural equality of components; names are ignored.
  friend bool operator==(const PolyMap& a, const PolyMap& b) {
    return a.components_ == b.components_;
  }

 private:
  std::vector<Polynomial> components_;
  std::vector<std::string> names_;
};

/// A map written as F = I - H with the affine part of H equal to zero.
struct NormalizedMap {
  PolyMap base;
  PolyMap h_part;

  /// I - h_part.
  PolyMap reconstruct() const;
};

/// Checks F(0) = 0 and linear part I, then splits off H = I - F.
/// Throws NotCentered or LinearPartNotIdentity.
NormalizedMap normalize(const PolyMap& f);

/// Square matrix of linear coefficients: entry (i, j) is the coefficient of
/// x_j in component i.
std::vector<std::vector<Coefficient>> linear_matrix(const PolyMap& f);

std::vector<Coefficient> evaluate(const PolyMap& f,
                                  std::span<const Coefficient> point);

/// F o G: component i is F_i(G_1, ..., G_n).
PolyMap compose_maps(const PolyMap& f, const PolyMap& g);

/// Parametrized curve t -> (g_1(t), ..., g_n(t)) with g(0) = 0.
class Curve {
 public:
  /// Components must be univariate over a shared domain with zero constant
  /// term; throws CurveNotCentered otherwise.
  explicit Curve(std::vector<Polynomial> components, std::string param = "t");

  static Curve zero(const Domain& domain, std::size_t n, std::string param = "t");
  /// c * t.
  static Curve line(const Domain& domain, std::span<const Coefficient> direction,
                    std::string param = "t");

  std::size_t dim() const noexcept { return components_.size(); }
  const Domain& domain() const noexcept { return components_.front().domain(); }
  const std::vector<Polynomial>& components() const noexcept { return components_; }
  const Polynomial& operator[](std::size_t i) const { return components_[i]; }
  const std::string& param() const noexcept { return param_; }
  /// Largest t-degree over the components (kDegreeOfZero if all vanish).
  int degree() const;

  std::vector<Coefficient> at(const Coefficient& tau) const;

  friend bool operator==(const Curve& a, const Curve& b) {
    return a.components_ == b.components_;
  }

 private:
  std::vector<Polynomial> components_;
  std::string param_;
};

/// F(g(t)).
Curve apply_to_curve(const PolyMap& f, const Curve& g);

std::ostream& operator<<(std::ostream& os, const PolyMap& f);
std::ostream& operator<<(std::ostream& os, const Curve& g);

}  // namespace polyinv
