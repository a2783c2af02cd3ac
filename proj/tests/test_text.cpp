#include <gtest/gtest.h>

#include "helpers.hpp"
#include "polyinv/affine.hpp"
#include "polyinv/errors.hpp"
#include "polyinv/tame.hpp"

using namespace polyinv;
using polyinv::test::map;
using polyinv::test::point;
using polyinv::test::random_poly;

TEST(ParseMap, Examples) {
  const PolyMap f = parse_map("[x + 2*y + 4*x^2, y + 2*x^2] over ZZ[x,y]");
  EXPECT_EQ(f.dim(), 2u);
  EXPECT_EQ(f.domain(), Domain::integers());
  EXPECT_EQ(evaluate(f, point({1, -1})), point({3, 1}));
  EXPECT_EQ(format_map(f), "[4*x^2 + x + 2*y, 2*x^2 + y] over ZZ[x,y]");

  const PolyMap id = parse_map("[x] over QQ[x]");
  EXPECT_TRUE(id.is_identity());
  EXPECT_EQ(id.dim(), 1u);

  const Curve c = parse_curve("[t + 4*t^4, 2*t^2] over QQ[t]");
  EXPECT_EQ(c.degree(), 4);
  EXPECT_EQ(c.param(), "t");
  EXPECT_EQ(format_curve(c), "[4*t^4 + t, 2*t^2] over QQ[t]");
}

TEST(ParseMap, Syntax) {
  // Implicit multiplication, unit division, unicode minus, GF(p).
  EXPECT_EQ(parse_map("[x + 2 x y, y] over QQ[x,y]"), parse_map("[x + 2*x*y, y] over QQ[x,y]"));
  EXPECT_EQ(parse_map("[x + y^2/2, y] over QQ[x,y]"), parse_map("[x + 1/2*y^2, y] over QQ[x,y]"));
  EXPECT_EQ(parse_map("[x \xE2\x88\x92 y^2, y] over QQ[x,y]"), parse_map("[x - y^2, y] over QQ[x,y]"));
  EXPECT_EQ(parse_map("[(x + y)^2 - y^2 - x^2 + x, y] over GF(5)[x,y]"),
            parse_map("[2*x*y + x, y] over GF(5)[x,y]"));
  EXPECT_EQ(parse_map("[x + 6*y^2, y] over GF(5)[x,y]"), parse_map("[x + y^2, y] over GF(5)[x,y]"));
  EXPECT_EQ(parse_map("[u + v^2, v] over QQ[u,v]").names(), (std::vector<std::string>{"u", "v"}));
}

TEST(ParseMap, Errors) {
  auto expect_parse_error = [](const char* text) {
    try {
      parse_map(text);
      ADD_FAILURE() << "no error for " << text;
    } catch (const ParseError& e) {
      EXPECT_GE(e.line(), 1);
      EXPECT_GE(e.column(), 1);
    }
  };
  expect_parse_error("[x + , y] over QQ[x,y]");
  expect_parse_error("[x + z, y] over QQ[x,y]");
  expect_parse_error("[x, y, x] over QQ[x,y]");
  expect_parse_error("[x, y] over RR[x,y]");
  expect_parse_error("[x, y] QQ[x,y]");
  expect_parse_error("[x + y/2, y] over ZZ[x,y]");
  expect_parse_error("[x/y, y] over QQ[x,y]");
  expect_parse_error("[x^-1, y] over QQ[x,y]");
  EXPECT_THROW(parse_map("[x, y] over GF(4)[x,y]"), Error);
  try {
    parse_map("[x,\n y +] over QQ[x,y]");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_FALSE(e.expected().empty());
  }
}

TEST(ParseCurve, RequiresOneVariable) {
  EXPECT_THROW(parse_curve("[t, s] over QQ[t,s]"), ParseError);
  EXPECT_THROW(parse_curve("[t^2 + 3] over QQ[t]"), CurveNotCentered);
}

TEST(ParseCurve, BareList) {
  const Domain qq = Domain::rationals();
  EXPECT_EQ(parse_curve("[t+4*t^4, 2*t^2]", qq), parse_curve("[t + 4*t^4, 2*t^2] over QQ[t]"));
  EXPECT_EQ(parse_curve("[s, s^3]", qq).param(), "s");
  EXPECT_EQ(parse_curve("[0, 0]", qq), Curve::zero(qq, 2));
  EXPECT_THROW(parse_curve("[t, s]", qq), ParseError);
  EXPECT_THROW(parse_curve("[t] over ZZ[t]", qq), ParseError);
}

TEST(ParsePoint, Forms) {
  const Domain qq = Domain::rationals();
  const std::vector<Coefficient> expected{Coefficient(1), Coefficient(mpq_class(-1, 2))};
  EXPECT_EQ(parse_point("1,-1/2", qq), expected);
  EXPECT_EQ(parse_point("(1, -1/2)", qq), expected);
  EXPECT_EQ(parse_point("[1,-1/2]", qq), expected);
  EXPECT_THROW(parse_point("1,-1/2", Domain::integers()), Error);
  EXPECT_THROW(parse_point("1,,2", qq), ParseError);
  EXPECT_EQ(format_point(point({0, 1})), "(0, 1)");
}

TEST(TextProperties, RoundTrip) {
  std::mt19937_64 rng(401);
  const Domain domains[] = {Domain::rationals(), Domain::integers(), Domain::prime_field(13)};
  for (int i = 0; i < 100; ++i) {
    const Domain& dom = domains[i % 3];
    const std::size_t n = 1 + i % 4;
    std::vector<Polynomial> comps;
    for (std::size_t k = 0; k < n; ++k) {
      Polynomial p = random_poly(rng, dom, n, 4, 5, 20);
      if (dom.kind() == DomainKind::Rationals) p = p.scaled(dom.make(mpq_class(1, 1 + static_cast<long>(rng() % 6))));
      comps.push_back(p);
    }
    PolyMap f(std::move(comps));
    const std::string text = format_map(f);
    const PolyMap back = parse_map(text);
    EXPECT_EQ(back, f) << text;
    EXPECT_EQ(format_map(back), text);
  }
}

TEST(AffineNormalize, Examples) {
  const PolyMap f = map("[x + 2*y + 4*x^2, y + 2*x^2] over QQ[x,y]");
  AffineSplit s = affine_normalize(f);
  EXPECT_EQ(s.outer, map("[x + 2*y, y] over QQ[x,y]"));
  EXPECT_EQ(compose_maps(s.outer, s.normalized), f);
  EXPECT_NO_THROW(normalize(s.normalized));

  const PolyMap centered = map("[x + y^2 + 2*x^2*y + x^4, y + x^2] over QQ[x,y]");
  AffineSplit t = affine_normalize(centered);
  EXPECT_TRUE(t.outer.is_identity());
  EXPECT_EQ(t.normalized, centered);

  // With F = L o F', the swap L = (y, x) leaves F' = (x + y^3, y).
  AffineSplit u = affine_normalize(map("[y, x + y^3] over QQ[x,y]"));
  EXPECT_EQ(u.outer, map("[y, x] over QQ[x,y]"));
  EXPECT_EQ(u.normalized, map("[x + y^3, y] over QQ[x,y]"));
  EXPECT_EQ(compose_maps(u.outer, u.normalized), map("[y, x + y^3] over QQ[x,y]"));
}

TEST(AffineNormalize, SingularAndIntegrality) {
  EXPECT_THROW(affine_normalize(map("[x + y, x + y + x^2] over QQ[x,y]")), LinearPartSingular);
  EXPECT_THROW(affine_normalize(map("[2*x, y] over ZZ[x,y]")), LinearPartSingular);
  EXPECT_NO_THROW(affine_normalize(map("[2*x, y] over QQ[x,y]")));
  EXPECT_NO_THROW(affine_normalize(map("[2*x + y, x + y] over ZZ[x,y]")));
}

TEST(AffineNormalize, CompositionLaw) {
  std::mt19937_64 rng(409);
  TameOptions opts;
  const Domain qq = Domain::rationals();
  for (int i = 0; i < 50; ++i) {
    opts.dim = 2 + i % 2;
    const PolyMap f = random_tame_automorphism(rng, opts).map;
    // Perturb by a random invertible affine map: upper-triangular with
    // nonzero diagonal, plus a translation.
    std::vector<Polynomial> comps;
    for (std::size_t r = 0; r < opts.dim; ++r) {
      Polynomial row = Polynomial::constant(qq, opts.dim, qq.make(static_cast<long>(rng() % 7) - 3));
      for (std::size_t c = r; c < opts.dim; ++c) {
        long a = static_cast<long>(rng() % 5) - 2;
        if (c == r && a == 0) a = 1;
        row += Polynomial::variable(qq, opts.dim, c).scaled(qq.make(a));
      }
      comps.push_back(row);
    }
    const PolyMap perturbed = compose_maps(PolyMap(std::move(comps)), f);
    AffineSplit s = affine_normalize(perturbed);
    EXPECT_EQ(compose_maps(s.outer, s.normalized), perturbed);
    EXPECT_TRUE(compose_maps(s.outer, s.outer_inverse).is_identity());
    EXPECT_NO_THROW(normalize(s.normalized));
  }
}
