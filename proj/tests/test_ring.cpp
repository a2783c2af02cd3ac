#include <gtest/gtest.h>

#include <random>

#include "polyinv/errors.hpp"
#include "polyinv/ring.hpp"

using namespace polyinv;

namespace {

// Brute force: scan a + m*k for k in [-4, 4] and keep the values in the window.
std::vector<long> residues_in_window(long a, long m, long lo, long hi) {
  std::vector<long> hits;
  for (long k = -4; k <= 4; ++k) {
    long v = a + m * k;
    if (v >= lo && v <= hi) hits.push_back(v);
  }
  return hits;
}

}  // namespace

TEST(BalancedResidue, DocumentedExamples) {
  const Domain zz = Domain::integers();
  EXPECT_EQ(balanced_residue(zz, Coefficient(3), 2, 2), Coefficient(-1));
  EXPECT_EQ(balanced_residue(zz, Coefficient(-2), 3, 2), Coefficient(-2));

  // 14 mod 8 in [-4, 3]
  auto hits = residues_in_window(14, 8, -4, 3);
  ASSERT_EQ(hits.size(), 1u);
  EXPECT_EQ(hits[0], -2);
  EXPECT_EQ(balanced_residue(zz, Coefficient(14), 3, 2), Coefficient(hits[0]));
}

TEST(BalancedResidue, WindowAtLevelOne) {
  const Domain zz = Domain::integers();
  EXPECT_EQ(balanced_residue(zz, Coefficient(1), 1, 2), Coefficient(-1));
  EXPECT_EQ(balanced_residue(zz, Coefficient(0), 1, 2), Coefficient(0));
  EXPECT_EQ(balanced_residue(zz, Coefficient(2), 1, 3), Coefficient(-1));
  EXPECT_EQ(balanced_residue(zz, Coefficient(4), 2, 3), Coefficient(4));
  EXPECT_EQ(balanced_residue(zz, Coefficient(5), 2, 3), Coefficient(-4));
}

TEST(BalancedResidue, RejectsNonIntegerDomains) {
  EXPECT_THROW(balanced_residue(Domain::rationals(), Coefficient(3), 2, 2), DomainMismatch);
  EXPECT_THROW(balanced_residue(Domain::prime_field(5), Coefficient(3), 2, 2), DomainMismatch);
  EXPECT_THROW(balanced_residue(Domain::integers(), Coefficient(3), 0, 2), DomainMismatch);
}

TEST(BalancedResidue, CongruentAndInWindow) {
  std::mt19937_64 rng(7);
  const Domain zz = Domain::integers();
  for (int iter = 0; iter < 2000; ++iter) {
    const long a = std::uniform_int_distribution<long>(-1000000, 1000000)(rng);
    const unsigned d = std::uniform_int_distribution<unsigned>(1, 16)(rng);
    const long p = std::array<long, 4>{2, 3, 5, 7}[iter % 4];
    mpz_class m;
    mpz_ui_pow_ui(m.get_mpz_t(), static_cast<unsigned long>(p), d);
    mpz_class b = balanced_residue(zz, Coefficient(a), d, p).value().get_num();
    EXPECT_EQ(mpz_class(mpz_class(a) - b) % m, 0);
    if (p == 2) {
      EXPECT_GE(b, -m / 2);
      EXPECT_LE(b, m / 2 - 1);
    } else {
      EXPECT_GE(b, -(m - 1) / 2);
      EXPECT_LE(b, (m - 1) / 2);
    }
  }
}

TEST(Domain, PrimeFieldValidatesModulus) {
  EXPECT_THROW(Domain::prime_field(1), DomainMismatch);
  EXPECT_THROW(Domain::prime_field(91), DomainMismatch);
  EXPECT_NO_THROW(Domain::prime_field(101));
  EXPECT_EQ(Domain::prime_field(101).name(), "GF(101)");
}

TEST(Domain, CanonicalForms) {
  const Domain qq = Domain::rationals();
  EXPECT_EQ(qq.make(mpq_class(4, -6)).to_string(), "-2/3");
  EXPECT_THROW(Domain::integers().make(mpq_class(1, 2)), DomainMismatch);
  const Domain gf7 = Domain::prime_field(7);
  EXPECT_EQ(gf7.make(-1), Coefficient(6));
  EXPECT_EQ(gf7.make(mpq_class(1, 2)), Coefficient(4));
  EXPECT_THROW(gf7.make(mpq_class(1, 7)), NotInvertibleElement);
  EXPECT_TRUE(gf7.contains(Coefficient(6)));
  EXPECT_FALSE(gf7.contains(Coefficient(7)));
}

TEST(Domain, IntegerUnits) {
  const Domain zz = Domain::integers();
  EXPECT_EQ(zz.inv(Coefficient(-1)), Coefficient(-1));
  EXPECT_THROW(zz.inv(Coefficient(2)), NotInvertibleElement);
  EXPECT_THROW(Domain::rationals().inv(Coefficient(0)), NotInvertibleElement);
}

class RingAxioms : public ::testing::TestWithParam<int> {};

TEST_P(RingAxioms, RandomTriples) {
  const Domain domains[] = {Domain::rationals(), Domain::integers(), Domain::prime_field(101)};
  const Domain& dom = domains[GetParam()];
  std::mt19937_64 rng(11 + GetParam());
  std::uniform_int_distribution<long> num(-50, 50);
  std::uniform_int_distribution<long> den(1, 9);
  auto sample = [&] {
    if (dom.kind() == DomainKind::Rationals) return dom.make(mpq_class(num(rng), den(rng)));
    return dom.make(num(rng));
  };
  for (int i = 0; i < 500; ++i) {
    Coefficient a = sample(), b = sample(), c = sample();
    EXPECT_EQ(dom.add(dom.add(a, b), c), dom.add(a, dom.add(b, c)));
    EXPECT_EQ(dom.mul(dom.mul(a, b), c), dom.mul(a, dom.mul(b, c)));
    EXPECT_EQ(dom.mul(a, dom.add(b, c)), dom.add(dom.mul(a, b), dom.mul(a, c)));
    EXPECT_EQ(dom.add(a, dom.neg(a)), dom.zero());
    EXPECT_EQ(dom.sub(a, b), dom.add(a, dom.neg(b)));
    EXPECT_TRUE(dom.contains(dom.mul(a, b)));
    if (dom.is_unit(a)) EXPECT_EQ(dom.mul(a, dom.inv(a)), dom.one());
  }
}

INSTANTIATE_TEST_SUITE_P(AllDomains, RingAxioms, ::testing::Values(0, 1, 2));

TEST(Coefficient, Rendering) {
  EXPECT_EQ(Coefficient(mpq_class(-3, 2)).to_string(), "-3/2");
  EXPECT_EQ(Coefficient(-7).to_string(), "-7");
  EXPECT_EQ(Coefficient(0).to_string(), "0");
}
