#include <gtest/gtest.h>

#include "sset/constructions.hpp"
#include "sset/error.hpp"
#include "sset/hcnerve.hpp"
#include "sset/invariants.hpp"
#include "support.hpp"

namespace sset {
namespace {

SimplexExpr base(const Presentation& s, int dim, const char* name) { return SimplexExpr(*s.find(dim, name)); }

TEST(WorkedDelta, Composites) {
  EXPECT_EQ(compose(MonotoneMap(1, 1, {0, 1}), MonotoneMap(1, 1, {0, 0})), MonotoneMap(1, 1, {0, 0}));
  EXPECT_EQ(compose(MonotoneMap::coface(3, 2), MonotoneMap::coface(2, 1)), MonotoneMap(1, 3, {0, 3}));
  EXPECT_EQ(compose(MonotoneMap::codegeneracy(0, 0), MonotoneMap::codegeneracy(1, 1)), MonotoneMap(2, 0, {0, 0, 0}));
}

TEST(WorkedDelta, Factorizations) {
  EXPECT_TRUE(epi_mono_factorize(MonotoneMap::identity(3)).empty());
  const OperatorWord w = epi_mono_factorize(MonotoneMap(1, 3, {0, 3}));
  EXPECT_EQ(w.to_string(), "d2 d1");
  EXPECT_EQ(w.evaluate(), MonotoneMap(1, 3, {0, 3}));
  EXPECT_TRUE(verify_cosimplicial_identities(3).pass);
}

TEST(WorkedWords, Normalization) {
  EXPECT_TRUE(normalize_word(std::vector<int>{}, 2).empty());
  const std::vector<int> raw = {0, 2, 1};
  const DegeneracyWord w = normalize_word(raw, 1);
  // s0 s2 s1 acting on a 1-simplex is dual to s^1 s^2 s^0 : [4] -> [1]
  const MonotoneMap f = compose(MonotoneMap::codegeneracy(1, 1),
                                compose(MonotoneMap::codegeneracy(2, 2), MonotoneMap::codegeneracy(3, 0)));
  EXPECT_EQ(surjection_of(w, 1), f);
  EXPECT_EQ(w, DegeneracyWord({3, 2, 0}));
}

TEST(WorkedPresentation, FacesOfDegenerateSimplices) {
  const Presentation d = standard_simplex(2, 4);
  const SimplexExpr x = base(d, 0, "1");
  EXPECT_EQ(face(d, 1, degenerate(d, 0, x)), x);
  const SimplexExpr e = base(d, 1, "12");
  EXPECT_EQ(face(d, 0, degenerate(d, 1, e)), degenerate(d, 0, face(d, 0, e)));
  EXPECT_EQ(face(d, 2, base(d, 2, "012")), base(d, 1, "01"));
  EXPECT_EQ(degenerate(d, 0, e), SimplexExpr(DegeneracyWord({0}), e.base));
  EXPECT_EQ(degenerate(d, 1, SimplexExpr(DegeneracyWord({1}), e.base)), SimplexExpr(DegeneracyWord({2, 1}), e.base));
}

TEST(WorkedPresentation, ValidationAndEnumeration) {
  EXPECT_TRUE(validate(standard_simplex(4)).pass);
  EXPECT_TRUE(validate(bg(cyclic_group(2), 4)).pass);
  Presentation d = standard_simplex(2);
  const SimplexId top{2, 0};
  const SimplexExpr f0 = d.faces(top)[0], f1 = d.faces(top)[1];
  d.set_face(top, 0, f1);
  d.set_face(top, 1, f0);
  const ValidationReport r = validate(d);
  EXPECT_FALSE(r.pass);
  ASSERT_TRUE(r.simplex);
  EXPECT_EQ(d.name(*r.simplex), "012");

  const Presentation d1 = standard_simplex(1);
  std::vector<std::string> names;
  for (const auto& e : enumerate_simplices(d1, 1)) names.push_back(d1.render(e));
  EXPECT_EQ(names, (std::vector<std::string>{"s0 . 0", "s0 . 1", "01"}));
  EXPECT_EQ(enumerate_simplices(standard_simplex(2), 1).size(), 6u);
  const Presentation s2 = sphere(2);
  ASSERT_EQ(enumerate_simplices(s2, 1).size(), 1u);
  EXPECT_EQ(s2.render(enumerate_simplices(s2, 1)[0]), "s0 . v");
  EXPECT_EQ(enumerate_maps(share(standard_simplex(2)), share(standard_simplex(1))).size(), 4u);
}

TEST(WorkedPresentation, ApplyMap) {
  auto d1 = share(standard_simplex(1));
  auto pt = resolve_reference("point");
  const auto maps = enumerate_maps(d1, pt);
  ASSERT_EQ(maps.size(), 1u);
  const SimplicialMap& f = maps[0];
  const SimplexExpr edge = base(*d1, 1, "01");
  EXPECT_EQ(apply_map(identity_map(d1), edge), edge);
  EXPECT_EQ(f.at(edge.base), SimplexExpr(DegeneracyWord({0}), SimplexId{0, 0}));
  EXPECT_EQ(apply_map(f, SimplexExpr(DegeneracyWord({0}), edge.base)), SimplexExpr(DegeneracyWord({1, 0}), SimplexId{0, 0}));
}

TEST(WorkedConstructions, Counts) {
  EXPECT_EQ(standard_simplex(2).counts(), (std::vector<std::size_t>{3, 3, 1}));
  EXPECT_TRUE(validate(standard_simplex(0)).pass);
  EXPECT_EQ(standard_simplex(5).count(2), 20u);
  EXPECT_EQ(boundary(2).counts(), (std::vector<std::size_t>{3, 3}));
  const Presentation h = horn(2, 1);
  EXPECT_EQ(h.counts(), (std::vector<std::size_t>{3, 2}));
  EXPECT_TRUE(h.find(1, "12") && h.find(1, "01"));
  EXPECT_EQ(boundary(1).counts(), (std::vector<std::size_t>{2}));
  EXPECT_EQ(horn(1, 0).count(0), 1u);
  // only d1 survives, and d1(01) = 0
  EXPECT_EQ(horn(1, 0).name(SimplexId{0, 0}), "0");
}

TEST(WorkedConstructions, SpheresAndProducts) {
  const Presentation s1 = sphere(1);
  EXPECT_EQ(s1.faces(SimplexId{1, 0}), (std::vector<SimplexExpr>{SimplexExpr(SimplexId{0, 0}), SimplexExpr(SimplexId{0, 0})}));
  EXPECT_EQ(euler_characteristic(sphere(2)), 2);
  EXPECT_EQ(euler_characteristic(sphere(3)), 0);
  const Presentation torus = product(sphere(1), sphere(1));
  EXPECT_EQ(torus.counts(), (std::vector<std::size_t>{1, 3, 2}));
  EXPECT_EQ(euler_characteristic(torus), 0);
  for (int p = 0; p <= 3; ++p) {
    const Presentation q = product(standard_simplex(p), standard_simplex(0));
    EXPECT_EQ(q.counts(), standard_simplex(p).counts());
    EXPECT_TRUE(validate(q).pass);
  }
}

TEST(WorkedConstructions, NervesAndGroups) {
  const Presentation n1 = nerve(ordinal_category(1), 1);
  EXPECT_EQ(n1.counts(), standard_simplex(1).counts());
  EXPECT_EQ(nerve(parse_file(testing::fixture("square.cat")).category, 2).counts(), (std::vector<std::size_t>{4, 5, 2}));
  EXPECT_EQ(bg(cyclic_group(2), 4).counts(), (std::vector<std::size_t>{1, 1, 1, 1, 1}));
  EXPECT_EQ(bg(cyclic_group(3), 3).counts(), (std::vector<std::size_t>{1, 2, 4, 8}));
  EXPECT_EQ(bg(symmetric_group(3), 3), nerve(group_category(symmetric_group(3)), 3));
  EXPECT_TRUE(validate_group(cyclic_group(4)).pass);
  EXPECT_TRUE(validate_group(symmetric_group(3)).pass);
  FiniteGroup bad = symmetric_group(3);
  bad.product[2][3] = bad.product[2][4];
  const ValidationReport r = validate_group(bad);
  EXPECT_FALSE(r.pass);
  EXPECT_FALSE(r.message.empty());
}

TEST(WorkedCoherentNerve, PathPosetsAndBrackets) {
  const FiniteCategory p = path_poset(2, 0, 2);
  EXPECT_EQ(p.objects, (std::vector<std::string>{"02", "012"}));
  std::size_t arrows = 0;
  for (int m = 0; m < static_cast<int>(p.morphisms.size()); ++m) arrows += !p.is_identity(m);
  EXPECT_EQ(arrows, 1u);
  EXPECT_EQ(path_poset(3, 0, 3).objects.size(), 4u);
  EXPECT_EQ(path_poset(3, 2, 2).objects, (std::vector<std::string>{"2"}));
  const SimplicialCategory c3 = c_bracket(3);
  EXPECT_EQ(c3.hom(0, 2).counts(), standard_simplex(1).counts());
  EXPECT_EQ(c3.hom(1, 3).counts(), standard_simplex(1).counts());
  EXPECT_EQ(c_bracket(1).hom(0, 1).counts(), (std::vector<std::size_t>{1}));
  EXPECT_TRUE(validate_scat(c3).pass);
  EXPECT_TRUE(validate_scat(discrete_enrichment(group_category(symmetric_group(3)))).pass);
}

TEST(WorkedCoherentNerve, SmallNerves) {
  const Presentation point = hc_nerve(discrete_enrichment(group_category(cyclic_group(1))), 3);
  for (int n = 0; n <= 3; ++n) EXPECT_EQ(count_simplices(point, n), 1u);
  const Presentation z2 = hc_nerve(discrete_enrichment(group_category(cyclic_group(2))), 3);
  EXPECT_EQ(count_simplices(z2, 2), 4u);
}

}  // namespace
}  // namespace sset
