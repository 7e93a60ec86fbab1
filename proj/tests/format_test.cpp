#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "sset/constructions.hpp"
#include "sset/format.hpp"
#include "support.hpp"

namespace sset {
namespace {

using testing::fixture;

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ParseError parse_failure(std::string_view text) {
  try {
    parse(text, SSET_FIXTURE_DIR);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no parse error for:\n" << text;
  return ParseError(0, 0, "none");
}

TEST(Parse, TriangleFixture) {
  const Document d = parse_file(fixture("delta2.sset"));
  EXPECT_EQ(d.kind, DocumentKind::sset);
  EXPECT_EQ(d.sset->counts(), (std::vector<std::size_t>{3, 3, 1}));
}

TEST(Parse, EmptyDocument) {
  const ParseError e = parse_failure("");
  EXPECT_EQ(e.line(), 1);
  EXPECT_EQ(e.column(), 1);
  EXPECT_EQ(parse_failure("# only a comment\n\n").line(), 1);
}

TEST(Parse, DanglingReferenceNamesToken) {
  const ParseError e = parse_failure("sset\ntruncation 1\ndim 0 : a\ndim 1 : f\nfaces f = [a, b]\n");
  EXPECT_EQ(e.line(), 5);
  EXPECT_NE(std::string(e.what()).find("dangling reference 'b'"), std::string::npos) << e.what();
}

TEST(Parse, LocatedErrors) {
  EXPECT_EQ(parse_failure("sset\ntruncation 1\ndim 2 : t\n").line(), 3);
  EXPECT_EQ(parse_failure("sset\ntruncation 1\ndim 0 : a\ndim 1 : f\nfaces f = [a]\n").line(), 5);
  EXPECT_EQ(parse_failure("sset\ntruncation x\n").line(), 2);
  EXPECT_EQ(parse_failure("category\nobjects x\nmor f : x -> z\n").line(), 3);
  EXPECT_EQ(parse_failure("group\nelements e a\nunit e\nrow e = e\n").line(), 4);
}

TEST(Parse, ExpressionsAndFaceLists) {
  const Presentation d = standard_simplex(2);
  EXPECT_EQ(parse_expr(d, "s1 s0 . 1", 2), SimplexExpr(DegeneracyWord({1, 0}), *d.find(0, "1")));
  EXPECT_THROW(parse_expr(d, "s0 s1 . 1", 2), InputError);
  EXPECT_THROW(parse_expr(d, "01", 2), InputError);
  const auto faces = parse_face_list(d, "[12, _, 01]", 1);
  ASSERT_EQ(faces.size(), 3u);
  EXPECT_FALSE(faces[1]);
  EXPECT_EQ(d.render(*faces[0]), "12");
}

TEST(RoundTrip, Presentations) {
  std::vector<Presentation> all = {standard_simplex(3), boundary(3), horn(3, 2), sphere(2), bg(symmetric_group(3), 3),
                                   product(standard_simplex(1), sphere(1)), nerve(ordinal_category(2), 3)};
  for (const char* f : {"delta1.sset", "delta2.sset", "torus.sset", "circle.sset", "sphere2.sset", "ez2.sset"})
    all.push_back(*testing::load_sset(f));
  for (const Presentation& p : all) {
    const std::string text = render(p);
    const Document d = parse(text);
    EXPECT_EQ(*d.sset, p) << text;
    EXPECT_EQ(render(*d.sset), text);
  }
}

TEST(RoundTrip, OtherKinds) {
  for (const char* f : {"arrow.cat", "square.cat", "iso.cat", "z3.group", "s3.group", "edge_in_triangle.map",
                        "straight_line.homotopy", "interval.scat", "ez2.scat"}) {
    const Document d = parse_file(fixture(f));
    const std::string text = render(d);
    const Document again = parse(text, SSET_FIXTURE_DIR);
    EXPECT_EQ(again.kind, d.kind) << f;
    EXPECT_EQ(render(again), text) << f;
  }
  const FiniteGroup s3 = symmetric_group(3);
  EXPECT_EQ(parse(render(s3)).group.product, s3.product);
  const FiniteCategory sq = parse_file(fixture("square.cat")).category;
  EXPECT_EQ(parse(render(sq)).category.composition, sq.composition);
}

TEST(References, BuiltIns) {
  EXPECT_EQ(*resolve_reference("std simplex 2"), standard_simplex(2));
  EXPECT_EQ(*resolve_reference("std horn 3 1"), horn(3, 1));
  EXPECT_EQ(resolve_reference("point")->counts(), (std::vector<std::size_t>{1}));
  EXPECT_EQ(resolve_reference("discrete a b")->count(0), 2u);
  EXPECT_EQ(*resolve_reference("torus.sset", SSET_FIXTURE_DIR), *testing::load_sset("torus.sset"));
  EXPECT_THROW(resolve_reference("std cube 2"), InputError);
  EXPECT_THROW(resolve_reference("missing.sset", SSET_FIXTURE_DIR), InputError);
}

TEST(Parse, FixtureFilesAreCanonical) {
  // Comments aside, the shipped presentation fixtures render back to themselves.
  for (const char* f : {"delta2.sset", "torus.sset"}) {
    std::string stripped;
    std::istringstream in(slurp(fixture(f)));
    for (std::string line; std::getline(in, line);)
      if (!line.empty() && line[0] != '#') stripped += line + "\n";
    EXPECT_EQ(render(*testing::load_sset(f)), stripped) << f;
  }
}

}  // namespace
}  // namespace sset
