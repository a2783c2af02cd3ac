#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "polyinv/monomial.hpp"
#include "polyinv/ring.hpp"

namespace polyinv {

struct Term {
  Monomial monomial;
  Coefficient coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Degree of the zero polynomial; compares below every real degree.
inline constexpr int kDegreeOfZero = std::numeric_limits<int>::min();

/// Sparse multivariate polynomial over a Domain.
///
/// Terms are stored without zeros or duplicates, sorted by decreasing grevlex
/// order, so two polynomials are equal exactly when their term lists are.
/// Other monomial orders are applied by the algorithms that need them.
class Polynomial {
 public:
  /// Zero polynomial.
  Polynomial(Domain domain, std::size_t nvars)
      : domain_(std::move(domain)), nvars_(nvars) {}

  static Polynomial constant(const Domain& domain, std::size_t nvars,
                             const Coefficient& c);
  static Polynomial variable(const Domain& domain, std::size_t nvars,
                             std::size_t index);
  static Polynomial term(const Domain& domain, const Monomial& m,
                         const Coefficient& c);
  /// Canonicalizes: coefficients go through Domain::make, duplicates merge,
  /// zeros drop.
  static Polynomial from_terms(const Domain& domain, std::size_t nvars,
                               std::vector<Term> terms);

  const Domain& domain() const noexcept { return domain_; }
  std::size_t nvars() const noexcept { return nvars_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one());
  }

  /// Total degree, kDegreeOfZero for zero.
  int degree() const noexcept {
    return terms_.empty() ? kDegreeOfZero
                          : static_cast<int>(terms_.front().monomial.total_degree());
  }
  /// Smallest total degree of a term, kDegreeOfZero for zero.
  int low_degree() const noexcept;
  /// Largest exponent of variable `var`, kDegreeOfZero for zero.
  int degree_in(std::size_t var) const;

  Coefficient coefficient(const Monomial& m) const;
  Coefficient constant_term() const;
  /// Leading term under `order`; requires a nonzero polynomial.
  const Term& leading_term(const MonomialOrder& order) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  Polynomial scaled(const Coefficient& c) const;
  Polynomial pow(unsigned e) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.domain_ == b.domain_ && a.terms_ == b.terms_;
  }

 private:
  friend class TermAccumulator;

  Domain domain_;
  std::size_t nvars_;
  std::vector<Term> terms_;
};

/// Collects terms with repeated monomials and produces a canonical polynomial.
class TermAccumulator {
 public:
  TermAccumulator(const Domain& domain, std::size_t nvars)
      : domain_(domain), nvars_(nvars) {}

  void add(const Monomial& m, const Coefficient& c);
  /// Adds a * b * m without canonicalizing the product first.
  void add_product(const Monomial& m, const Coefficient& a, const Coefficient& b);
  void add(const Polynomial& p);
  /// Adds c * m * p.
  void add_scaled(const Polynomial& p, const Coefficient& c, const Monomial& m);
  Polynomial finish();

 private:
  Domain domain_;
  std::size_t nvars_;
  // Raw sums; reduced into the domain by finish().
  std::unordered_map<Monomial, mpq_class, MonomialHash> sums_;
  mpq_class scratch_;
};

Polynomial add(const Polynomial& f, const Polynomial& g);
Polynomial mul(const Polynomial& f, const Polynomial& g);
Polynomial neg(const Polynomial& f);

/// Product with every term of total degree above `max_degree` discarded.
Polynomial mul_truncated(const Polynomial& f, const Polynomial& g,
                         unsigned max_degree);

/// Keeps the terms of total degree <= d.
Polynomial truncate_total_degree(const Polynomial& f, unsigned d);
/// Terms of total degree exactly k.
Polynomial homogeneous_part(const Polynomial& f, unsigned k);
inline int degree(const Polynomial& f) { return f.degree(); }
Polynomial linear_part(const Polynomial& f);
Polynomial affine_part(const Polynomial& f);

/// Applies `fn` to every coefficient and re-canonicalizes.
Polynomial map_coefficients(const Polynomial& f,
                            const std::function<Coefficient(const Coefficient&)>& fn);

/// Same polynomial over another domain (coefficients pass through make()).
Polynomial change_domain(const Polynomial& f, const Domain& domain);

/// Re-homes f into `nvars` variables, sending variable i to `positions[i]`.
Polynomial embed(const Polynomial& f, std::size_t nvars,
                 std::span<const std::size_t> positions);

Coefficient evaluate(const Polynomial& f, std::span<const Coefficient> point);

struct ComposeOptions {
  /// Drop every term above this total degree, including in intermediates.
  std::optional<unsigned> max_degree;
  /// Applied to every intermediate product and to the result; must be a ring
  /// homomorphism for the result to mean anything.
  std::function<Polynomial(const Polynomial&)> reduce;
};

/// f(args[0], ..., args[n-1]). All args share a domain and arity m; the result
/// lives in m variables.
Polynomial compose(const Polynomial& f, std::span<const Polynomial> args,
                   const ComposeOptions& options = {});

/// Renders with the given variable names; terms in decreasing grevlex order,
/// e.g. "x^2 - 4*y^2" or "-3/2*x*y + 1".
std::string format(const Polynomial& f, std::span<const std::string> names);
/// Default names: x, y, z for up to three variables, else x1, x2, ...
std::vector<std::string> default_names(std::size_t nvars);
std::ostream& operator<<(std::ostream& os, const Polynomial& f);

}  // namespace polyinv
