#include <gtest/gtest.h>

#include <map>

#include "sset/constructions.hpp"
#include "sset/error.hpp"
#include "support.hpp"

namespace sset {
namespace {

using testing::all_functions;
using testing::binomial;
using testing::fixture;
using testing::strictly_increasing;

// Non-degenerate n-simplices of Δ^p are injective monotone maps [n] -> [p].
std::size_t brute_force_injections(int n, int p) {
  std::size_t count = 0;
  for (const auto& v : all_functions(n, p))
    if (strictly_increasing(v)) ++count;
  return count;
}

// Chains of n composable non-identity arrows, counted from the raw table.
std::size_t brute_force_chains(const FiniteCategory& c, int n) {
  std::vector<int> arrows;
  for (int m = 0; m < static_cast<int>(c.morphisms.size()); ++m)
    if (!c.is_identity(m)) arrows.push_back(m);
  if (n == 0) return c.objects.size();
  std::vector<std::vector<int>> chains;
  for (int a : arrows) chains.push_back({a});
  for (int len = 1; len < n; ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& ch : chains)
      for (int a : arrows)
        if (c.morphisms[static_cast<std::size_t>(a)].source == c.morphisms[static_cast<std::size_t>(ch.back())].target) {
          auto ext = ch;
          ext.push_back(a);
          next.push_back(ext);
        }
    chains = std::move(next);
  }
  return chains.size();
}

TEST(StandardSimplex, CountsAgainstInjectiveMaps) {
  for (int p = 0; p <= 6; ++p) {
    const Presentation d = standard_simplex(p);
    EXPECT_TRUE(validate(d).pass);
    for (int n = 0; n <= p; ++n) {
      EXPECT_EQ(d.count(n), brute_force_injections(n, p)) << "p=" << p << " n=" << n;
      EXPECT_EQ(d.count(n), binomial(p + 1, n + 1));
    }
  }
  EXPECT_EQ(standard_simplex(3).counts(), (std::vector<std::size_t>{4, 6, 4, 1}));
}

TEST(StandardSimplex, BoundaryAndHorns) {
  for (int p = 1; p <= 4; ++p) {
    const Presentation b = boundary(p);
    EXPECT_TRUE(validate(b).pass);
    EXPECT_EQ(b.count(p), 0u);
    EXPECT_EQ(b.count(p - 1), static_cast<std::size_t>(p + 1));
    for (int i = 0; i <= p; ++i) {
      const Presentation h = horn(p, i);
      EXPECT_TRUE(validate(h).pass);
      EXPECT_EQ(h.count(p - 1), static_cast<std::size_t>(p));
      EXPECT_FALSE(h.find(p - 1, standard_simplex(p).name(face(standard_simplex(p), i, SimplexExpr(SimplexId{p, 0})).base)));
    }
  }
  EXPECT_THROW(horn(2, 3), InputError);
}

TEST(Sphere, OneVertexOneCell) {
  for (int n = 1; n <= 4; ++n) {
    const Presentation s = sphere(n);
    EXPECT_TRUE(validate(s).pass);
    EXPECT_EQ(s.count(0), 1u);
    EXPECT_EQ(s.count(n), 1u);
    for (int k = 1; k < n; ++k) EXPECT_EQ(s.count(k), 0u);
  }
}

TEST(Product, SquareCounts) {
  const Presentation sq = product(standard_simplex(1), standard_simplex(1));
  EXPECT_EQ(sq.counts(), (std::vector<std::size_t>{4, 5, 2}));
  EXPECT_TRUE(validate(sq).pass);
  for (int n = 0; n <= 5; ++n)
    EXPECT_EQ(count_simplices(sq, n), static_cast<std::size_t>((n + 2) * (n + 2)));
}

TEST(Product, SimplexCountsMultiply) {
  const std::vector<std::pair<Presentation, Presentation>> pairs = {
      {standard_simplex(2), standard_simplex(1)},
      {sphere(1), sphere(1)},
      {sphere(2), standard_simplex(1)},
      {boundary(2), horn(2, 1)},
      {standard_simplex(2), standard_simplex(2)},
  };
  for (const auto& [s, t] : pairs) {
    const Presentation p = product(s, t);
    EXPECT_TRUE(validate(p).pass);
    EXPECT_EQ(p.top_dimension(), s.top_dimension() + t.top_dimension());
    for (int n = 0; n <= 4; ++n) EXPECT_EQ(count_simplices(p, n), count_simplices(s, n) * count_simplices(t, n));
  }
}

TEST(Product, TruncationOfOpenFactor) {
  auto b = share(bg(cyclic_group(2), 3));
  auto d = share(standard_simplex(1));
  const ProductSet p = product_set(b, d);
  EXPECT_TRUE(p.presentation->open());
  EXPECT_EQ(p.presentation->truncation(), 3);
  EXPECT_THROW(enumerate_simplices(*p.presentation, 4), TruncationError);
  for (int n = 0; n <= 3; ++n) EXPECT_EQ(count_simplices(*p.presentation, n), count_simplices(*b, n) * count_simplices(*d, n));
}

TEST(Product, LocateSplitRoundTripAndProjections) {
  auto s = share(standard_simplex(2));
  auto t = share(sphere(1));
  const ProductSet p = product_set(s, t);
  for (int n = 0; n <= 3; ++n)
    for (const auto& a : enumerate_simplices(*s, n))
      for (const auto& b : enumerate_simplices(*t, n)) {
        const SimplexExpr e = p.locate(a, b);
        EXPECT_EQ(p.split(e), std::make_pair(a, b));
      }
  for (int f = 0; f < 2; ++f) EXPECT_TRUE(validate_map(projection(p, f)).pass);
}

TEST(Nerve, ChainCountsOnFixtures) {
  for (const char* name : {"arrow.cat", "ordinal2.cat", "square.cat", "iso.cat"}) {
    const FiniteCategory c = parse_file(fixture(name)).category;
    ASSERT_TRUE(validate_category(c).pass) << name;
    const Presentation n = nerve(c, 4);
    EXPECT_TRUE(validate(n).pass) << name;
    for (int k = 0; k <= 4; ++k) EXPECT_EQ(n.count(k), brute_force_chains(c, k)) << name << " " << k;
  }
}

TEST(Nerve, OrdinalIsSimplex) {
  for (int p = 0; p <= 4; ++p) {
    const Presentation n = nerve(ordinal_category(p), p);
    for (int k = 0; k <= p; ++k) EXPECT_EQ(n.count(k), binomial(p + 1, k + 1));
  }
}

TEST(ClassifyingSpace, EqualsNerveOfGroupCategory) {
  for (const FiniteGroup& g : {cyclic_group(2), cyclic_group(3), symmetric_group(3)}) {
    ASSERT_TRUE(validate_group(g).pass);
    const Presentation b = bg(g, 4);
    EXPECT_TRUE(validate(b).pass);
    EXPECT_EQ(b, nerve(group_category(g), 4));
    std::size_t expect = 1;
    for (int k = 0; k <= 4; ++k, expect *= g.elements.size() - 1) EXPECT_EQ(b.count(k), expect);
  }
}

TEST(Groups, SymmetricGroupTable) {
  const FiniteGroup s3 = symmetric_group(3);
  EXPECT_EQ(s3.elements.size(), 6u);
  // (σ·τ)(x) = σ(τ(x)) on one-line names
  const int sigma = *s3.find("102"), tau = *s3.find("021");
  EXPECT_EQ(s3.elements[static_cast<std::size_t>(s3.multiply(sigma, tau))], "120");
}

TEST(Categories, ValidationCatchesBrokenTables) {
  FiniteCategory c = ordinal_category(2);
  ASSERT_TRUE(validate_category(c).pass);
  const int a = *c.find_morphism("0<1"), b = *c.find_morphism("1<2");
  c.set_composite(b, a, *c.find_morphism("0<1"));
  EXPECT_FALSE(validate_category(c).pass);
  FiniteGroup g = cyclic_group(3);
  g.product[1][1] = 1;
  EXPECT_FALSE(validate_group(g).pass);
}

}  // namespace
}  // namespace sset
