#pragma once

#include <boost/container/small_vector.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace polyinv {

/// Exponent vector with a cached total degree.
class Monomial {
 public:
  using Exponent = std::uint32_t;
  using Storage = boost::container::small_vector<Exponent, 8>;

  Monomial() = default;
  /// The constant monomial 1 in `nvars` variables.
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  Monomial(std::initializer_list<Exponent> exps);
  explicit Monomial(std::span<const Exponent> exps);

  static Monomial variable(std::size_t nvars, std::size_t index);

  std::size_t nvars() const noexcept { return exps_.size(); }
  unsigned total_degree() const noexcept { return degree_; }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  std::span<const Exponent> exponents() const noexcept {
    return {exps_.data(), exps_.size()};
  }
  bool is_one() const noexcept { return degree_ == 0; }

  void set(std::size_t i, Exponent e);

  /// True if this divides `other`.
  bool divides(const Monomial& other) const;
  /// this / other; requires other.divides(*this).
  Monomial quotient(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.exps_ == b.exps_;
  }

 private:
  Storage exps_;
  unsigned degree_ = 0;
};

/// Graded reverse lexicographic comparison, with x_0 > x_1 > ... .
std::strong_ordering grevlex_compare(const Monomial& a, const Monomial& b);
/// Pure lexicographic comparison, with x_0 > x_1 > ... .
std::strong_ordering lex_compare(const Monomial& a, const Monomial& b);

/// Total, multiplicative well-order on monomials.
///
/// A block order compares the exponents restricted to the high block first
/// and only falls back to the low block on a tie, so a monomial touching the
/// high block always beats a monomial living purely in the low block. Both
/// blocks use the same inner order; within a block variables rank in the
/// order they are listed.
class MonomialOrder {
 public:
  enum class Kind { Lex, GrevLex, Block };

  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, Kind::Lex); }
  static MonomialOrder grevlex() {
    return MonomialOrder(Kind::GrevLex, Kind::GrevLex);
  }
  /// `inner` must be Lex or GrevLex. Together the blocks must list every
  /// variable exactly once.
  static MonomialOrder block(std::vector<std::size_t> high,
                             std::vector<std::size_t> low,
                             Kind inner = Kind::GrevLex);

  Kind kind() const noexcept { return kind_; }
  Kind inner() const noexcept { return inner_; }
  const std::vector<std::size_t>& high_block() const noexcept { return high_; }
  const std::vector<std::size_t>& low_block() const noexcept { return low_; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const {
    return compare(a, b) < 0;
  }

 private:
  MonomialOrder(Kind kind, Kind inner) : kind_(kind), inner_(inner) {}

  Kind kind_;
  Kind inner_;
  std::vector<std::size_t> high_;
  std::vector<std::size_t> low_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

}  // namespace polyinv
