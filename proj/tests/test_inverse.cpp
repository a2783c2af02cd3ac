#include <gtest/gtest.h>

#include "helpers.hpp"
#include "polyinv/errors.hpp"
#include "polyinv/inverse.hpp"
#include "polyinv/tame.hpp"

using namespace polyinv;
using polyinv::test::map;

namespace {
const char* kTwoAdic = "[x + 2*y + 4*x^2, y + 2*x^2] over ZZ[x,y]";
const char* kExample = "[x + y^2 + 2*x^2*y + x^4, y + x^2] over QQ[x,y]";
}  // namespace

// Iterates are stored under F = I - H; the reference ones use F = I + H.
// Under the balanced window at level 2, the class of 2x^2 mod 4 is -2x^2.
TEST(IterativeInverse, TwoAdicGolden) {
  const auto spec = FiltrationSpec::padic(2);
  InverseOutcome out = iterative_inverse(map(kTwoAdic), spec);
  ASSERT_EQ(out.status, InverseStatus::Inverted);
  EXPECT_EQ(*out.inverse, map("[x - 2*y, y - 2*x^2 + 8*x*y - 8*y^2] over ZZ[x,y]"));
  ASSERT_GE(out.trace.size(), 7u);
  const auto& k = out.trace;
  EXPECT_EQ(k[1], k[0]);
  EXPECT_EQ(k[2], map("[-2*y, -2*x^2] over ZZ[x,y]"));
  EXPECT_EQ(project(spec, k[2], 2), project(spec, map("[-2*y, 2*x^2] over ZZ[x,y]"), 2));
  EXPECT_EQ(k[3], k[2]);
  EXPECT_EQ(k[4], map("[-2*y, -2*x^2 - 8*x*y - 8*y^2] over ZZ[x,y]"));
  EXPECT_EQ(k[5], map("[-2*y, -2*x^2 + 8*x*y - 8*y^2] over ZZ[x,y]"));
  EXPECT_EQ(k[6], k[5]);
  EXPECT_EQ(out.level, 5u);
  // The repeat K_1 = K_0 is checked, then K_3 = K_2, then K_6 = K_5.
  EXPECT_EQ(out.checks, 3u);
}

// Under the truncate-to-degree-<=d projection our K_d is the negated
// reference iterate with index d + 1.
TEST(IterativeInverse, DegreeGolden) {
  InverseOutcome out = iterative_inverse(map(kExample), FiltrationSpec::degree());
  ASSERT_EQ(out.status, InverseStatus::Inverted);
  EXPECT_EQ(*out.inverse, map("[x - y^2, y - x^2 + 2*x*y^2 - y^4] over QQ[x,y]"));
  const auto& k = out.trace;
  ASSERT_GE(k.size(), 6u);
  EXPECT_EQ(k[0], k[1]);
  EXPECT_EQ(k[2], map("[-y^2, -x^2] over QQ[x,y]"));
  EXPECT_EQ(k[3], map("[-y^2, -x^2 + 2*x*y^2] over QQ[x,y]"));
  EXPECT_EQ(k[4], map("[-y^2, -x^2 + 2*x*y^2 - y^4] over QQ[x,y]"));
  EXPECT_EQ(k[5], k[4]);
  EXPECT_LE(out.iterations, degree_bound(map(kExample)) + 1);
}

TEST(IterativeInverse, Identity) {
  for (const auto& spec : {FiltrationSpec::degree(), FiltrationSpec::padic(3)}) {
    InverseOutcome out = iterative_inverse(PolyMap::identity(Domain::integers(), 2), spec);
    ASSERT_EQ(out.status, InverseStatus::Inverted);
    EXPECT_TRUE(out.inverse->is_identity());
    EXPECT_LE(out.iterations, 2u);
  }
}

TEST(IterativeInverse, DegreeBoundRejectsNonInvertible) {
  InverseOutcome out = iterative_inverse(map("[x + y^2, y + x^2] over QQ[x,y]"), FiltrationSpec::degree());
  EXPECT_EQ(out.status, InverseStatus::NotInvertibleByDegreeBound);
  EXPECT_EQ(out.iterations, 3u);
  EXPECT_FALSE(out.inverse.has_value());
}

TEST(IterativeInverse, PAdicWithoutInverseExhaustsBudget) {
  InverseOptions opts;
  opts.budget = 10;
  InverseOutcome out = iterative_inverse(map("[x + 2*x^2, y] over ZZ[x,y]"), FiltrationSpec::padic(2), opts);
  EXPECT_EQ(out.status, InverseStatus::BudgetExhausted);
  EXPECT_EQ(out.iterations, 10u);
  EXPECT_EQ(out.last_k, out.trace.back());
}

TEST(IterativeInverse, Preconditions) {
  EXPECT_THROW(iterative_inverse(map(kTwoAdic), FiltrationSpec::degree()), LinearPartNotIdentity);
  EXPECT_THROW(iterative_inverse(map(kTwoAdic), FiltrationSpec::degree()), AdmissibilityError);
  EXPECT_THROW(iterative_inverse(map("[x + 3*y, y] over ZZ[x,y]"), FiltrationSpec::padic(2)),
               AdmissibilityError);
  EXPECT_THROW(iterative_inverse(map("[x + 1, y] over QQ[x,y]"), FiltrationSpec::degree()), NotCentered);
  EXPECT_THROW(iterative_inverse(map(kExample), FiltrationSpec::padic(2)), DomainMismatch);
}

TEST(IterativeInverse, DegreeBoundValue) {
  EXPECT_EQ(degree_bound(map(kExample)), 4u);
  EXPECT_EQ(degree_bound(map("[x + y^2 + z^3, y, z] over QQ[x,y,z]")), 9u);
  EXPECT_EQ(degree_bound(map("[x] over QQ[x]")), 1u);
}

class TameInversion : public ::testing::TestWithParam<int> {};

// Approximation invariant, idempotent sections and degree-bound completeness
// on maps whose inverse is known by construction.
TEST_P(TameInversion, MatchesKnownInverse) {
  const Domain domain = GetParam() == 0 ? Domain::rationals() : Domain::integers();
  std::mt19937_64 rng(101 + GetParam());
  TameOptions opts;
  opts.domain = domain;
  opts.max_shift_degree = 3;
  const auto spec = FiltrationSpec::degree();
  for (int i = 0; i < 40; ++i) {
    opts.dim = 2 + i % 2;
    TamePair pair = random_tame_automorphism(rng, opts);
    InverseOutcome out = iterative_inverse(pair.map, spec);
    ASSERT_EQ(out.status, InverseStatus::Inverted) << pair.map;
    EXPECT_EQ(*out.inverse, pair.inverse);
    EXPECT_LE(out.iterations, degree_bound(pair.map) + 1);
    EXPECT_LE(out.inverse->degree(), static_cast<int>(degree_bound(pair.map)));
    const PolyMap k = pair.inverse - PolyMap::identity(domain, opts.dim);
    for (unsigned d = 0; d < out.trace.size(); ++d) {
      EXPECT_EQ(project(spec, out.trace[d], d), project(spec, k, d));
      EXPECT_EQ(project(spec, out.trace[d], d), out.trace[d]);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Domains, TameInversion, ::testing::Values(0, 1));

TEST(IterativeInverse, PAdicElementaryProducts) {
  // E1 o E2 with E1 = (x + 2a y^j, y), E2 = (x, y + 2b x^k); inverse E2^-1 o E1^-1.
  std::mt19937_64 rng(107);
  const Domain zz = Domain::integers();
  const auto spec = FiltrationSpec::padic(2);
  const Polynomial x = Polynomial::variable(zz, 2, 0), y = Polynomial::variable(zz, 2, 1);
  for (int i = 0; i < 20; ++i) {
    const long a = static_cast<long>(rng() % 5) - 2, b = static_cast<long>(rng() % 5) - 2;
    const unsigned j = 1 + static_cast<unsigned>(rng() % 3), k = 1 + static_cast<unsigned>(rng() % 3);
    PolyMap e1({x + y.pow(j).scaled(Coefficient(2 * a)), y});
    PolyMap e2({x, y + x.pow(k).scaled(Coefficient(2 * b))});
    PolyMap e1_inv({x - y.pow(j).scaled(Coefficient(2 * a)), y});
    PolyMap e2_inv({x, y - x.pow(k).scaled(Coefficient(2 * b))});
    PolyMap f = compose_maps(e1, e2);
    InverseOutcome out = iterative_inverse(f, spec);
    ASSERT_EQ(out.status, InverseStatus::Inverted) << f;
    EXPECT_EQ(*out.inverse, compose_maps(e2_inv, e1_inv));
    for (unsigned d = 0; d < out.trace.size(); ++d) {
      EXPECT_EQ(project(spec, out.trace[d], d), out.trace[d]);
    }
  }
}
