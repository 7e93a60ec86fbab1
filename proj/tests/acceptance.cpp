// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 only when
// every criterion passes. Thresholds are pinned below.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "sset/constructions.hpp"
#include "sset/delta.hpp"
#include "sset/error.hpp"
#include "sset/format.hpp"
#include "sset/hcnerve.hpp"
#include "sset/invariants.hpp"
#include "sset/kan.hpp"
#include "sset/parallel.hpp"
#include "support.hpp"

namespace {

using namespace sset;
using testing::fixture;

constexpr double kIdentitySuiteSeconds = 10.0;
constexpr double kKanSuiteSeconds = 60.0;
constexpr int kSnfTrials = 500;
constexpr unsigned kSnfSeed = 0x5eed5u;
constexpr int kSnfMaxDim = 4;
constexpr int kSnfEntryBound = 9;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail << "first failure: " << what << "; ";
      pass = false;
    }
  }
};

const char* kCategoryFixtures[] = {"arrow.cat", "ordinal2.cat", "square.cat", "iso.cat"};

std::vector<FiniteCategory> fixture_categories() {
  std::vector<FiniteCategory> out;
  for (const char* f : kCategoryFixtures) out.push_back(parse_file(fixture(f)).category);
  return out;
}

std::vector<FiniteGroup> small_groups() { return {cyclic_group(2), cyclic_group(3), symmetric_group(3)}; }

void identity_suites(Outcome& o) {
  std::size_t checked = 0;
  auto check = [&](const Presentation& s, const std::string& what) {
    const ValidationReport r = validate(s);
    o.require(r.pass, what + ": " + r.message);
    ++checked;
  };
  for (int p = 0; p <= 5; ++p) check(standard_simplex(p), "simplex " + std::to_string(p));
  for (int p = 1; p <= 5; ++p) check(boundary(p), "boundary " + std::to_string(p));
  for (int p = 1; p <= 4; ++p)
    for (int i = 0; i <= p; ++i) check(horn(p, i), "horn " + std::to_string(p) + " " + std::to_string(i));
  for (int n = 1; n <= 4; ++n) check(sphere(n), "sphere " + std::to_string(n));
  for (const auto& c : fixture_categories()) check(nerve(c, 4), "nerve fixture");
  for (const auto& g : small_groups()) check(bg(g, 4), "bg order " + std::to_string(g.elements.size()));
  const IdentityReport id = verify_cosimplicial_identities(4);
  o.require(id.pass, id.violation ? id.violation->description : "cosimplicial identities");
  o.detail << checked << " presentations validated; cosimplicial instances " << id.total_instances();
}

void counting_oracle(Outcome& o) {
  std::size_t cells = 0, alt_formula_mismatches = 0;
  for (int p = 0; p <= 6; ++p) {
    const Presentation d = standard_simplex(p);
    for (int n = 0; n <= p; ++n) {
      std::size_t injections = 0;
      for (const auto& v : testing::all_functions(n, p))
        if (testing::strictly_increasing(v)) ++injections;
      o.require(d.count(n) == injections, "count p=" + std::to_string(p) + " n=" + std::to_string(n));
      o.require(injections == testing::binomial(p + 1, n + 1), "binomial p=" + std::to_string(p));
      if (injections != testing::binomial(p + 1, n)) ++alt_formula_mismatches;
      ++cells;
    }
  }
  o.detail << cells << " (p, n) pairs match C(p+1, n+1); C(p+1, n) disagrees on " << alt_formula_mismatches;
}

void yoneda(Outcome& o) {
  const std::vector<std::pair<std::string, PresentationPtr>> targets = {
      {"simplex 2", share(standard_simplex(2))},
      {"simplex 3", share(standard_simplex(3))},
      {"sphere 2", share(sphere(2))},
      {"bg Z/2", share(bg(cyclic_group(2), 3))},
  };
  for (const auto& [name, s] : targets) {
    o.detail << name << ":";
    for (int n = 0; n <= 3; ++n) {
      const std::size_t maps = enumerate_maps(share(standard_simplex(n)), s).size();
      const std::size_t simplices = enumerate_simplices(*s, n).size();
      o.require(maps == simplices, name + " n=" + std::to_string(n));
      o.detail << " " << maps;
    }
    o.detail << "; ";
  }
  const std::size_t six = enumerate_maps(share(standard_simplex(1)), share(standard_simplex(2))).size();
  o.require(six == 6, "maps simplex 1 -> simplex 2");
  o.detail << "maps(simplex 1, simplex 2) = " << six;
}

void kan_verdicts(Outcome& o) {
  for (const FiniteGroup& g : {cyclic_group(2), cyclic_group(3)}) {
    const std::string name = "bg Z/" + std::to_string(g.elements.size());
    const KanReport r = kan_report(bg(g, 4), KanOptions{3});
    o.require(r.pass, name + " Kan to 3");
    o.detail << name << " horns " << r.horns_checked << " multiplicity";
    for (const auto& d : r.per_dimension) {
      // A 1-horn is a single vertex; every element fills it.
      const std::size_t expect = d.n == 1 ? g.elements.size() : 1;
      o.require(d.min_fillers == expect && d.max_fillers == expect, name + " multiplicity at n=" + std::to_string(d.n));
      o.detail << " n" << d.n << "=" << d.min_fillers;
    }
    o.detail << "; ";
  }
  std::size_t inner = 0;
  for (const auto& c : fixture_categories()) {
    const KanReport r = kan_report(nerve(c, 4), KanOptions{3, true});
    o.require(r.pass && r.min_fillers == 1 && r.max_fillers == 1, "inner horns of a nerve fixture");
    inner += r.horns_checked;
  }
  o.detail << "nerve fixtures inner horns " << inner << " unique; ";
  const Presentation d1 = standard_simplex(1, 2);
  const KanReport r = kan_report(d1, KanOptions{2});
  const bool exact = !r.pass && r.counterexample && r.counterexample->n == 2 && r.counterexample->i == 0 &&
                     render_horn(d1, *r.counterexample) == "[_, s0 . 0, 01]";
  o.require(exact, "interval counterexample");
  o.detail << "interval fails at " << (r.counterexample ? render_horn(d1, *r.counterexample) : "none") << "; ";
  const KanReport one = kan_report(nerve(ordinal_category(1), 3), KanOptions{2});
  const bool outer = !one.pass && one.counterexample &&
                     (one.counterexample->i == 0 || one.counterexample->i == one.counterexample->n);
  o.require(outer, "nerve [1] outer horn");
  o.detail << "nerve [1] fails horn(" << (one.counterexample ? one.counterexample->n : -1) << ","
           << (one.counterexample ? one.counterexample->i : -1) << ")";
}

std::string homology_line(const Presentation& s, int top) {
  std::string out;
  for (int k = 0; k <= top; ++k) out += (k ? ", " : "") + homology(s, k).group.to_string();
  return out;
}

void homology_values(Outcome& o) {
  for (int n = 1; n <= 4; ++n) {
    std::string expect;
    for (int k = 0; k <= n; ++k) expect += std::string(k ? ", " : "") + (k == 0 || k == n ? "Z" : "0");
    o.require(homology_line(sphere(n), n) == expect, "sphere " + std::to_string(n));
  }
  const Presentation torus = product(sphere(1), sphere(1));
  const std::string t = homology_line(torus, 2);
  o.require(t == "Z, Z^2, Z", "torus " + t);
  const Presentation b = bg(cyclic_group(2), 5);
  const std::string z2 = homology_line(b, 3);
  o.require(z2 == "Z, Z/2, 0, Z/2", "bg Z/2 " + z2);
  o.detail << "spheres ok; torus " << t << "; bg Z/2 " << z2 << "; ";

  std::vector<Presentation> all = {torus, b};
  for (int n = 1; n <= 4; ++n) all.push_back(sphere(n));
  for (int p = 1; p <= 5; ++p) all.push_back(standard_simplex(p));
  for (const auto& c : fixture_categories()) all.push_back(nerve(c, 4));
  for (const auto& g : small_groups()) all.push_back(bg(g, 4));
  std::size_t squares = 0;
  for (const auto& s : all)
    for (int n = 2; n <= std::min(s.top_dimension(), s.bound()); ++n, ++squares)
      o.require((boundary_matrix(s, n - 1) * boundary_matrix(s, n)).is_zero(), "boundary squared");
  o.detail << squares << " boundary composites vanish; euler";

  const std::vector<std::pair<Presentation, Presentation>> pairs = {
      {sphere(1), sphere(1)},          {sphere(2), sphere(1)},        {boundary(3), boundary(2)},
      {standard_simplex(2), sphere(2)}, {boundary(3), boundary(3)},
  };
  for (const auto& [s, u] : pairs) {
    const long long lhs = euler_characteristic(product(s, u));
    const long long rhs = euler_characteristic(s) * euler_characteristic(u);
    o.require(lhs == rhs, "euler multiplicativity");
    o.detail << " " << lhs;
  }
}

void fundamental_group(Outcome& o) {
  const char* expect[] = {"Z/2", "Z/3", "Z/2"};
  const auto groups = small_groups();
  for (std::size_t k = 0; k < groups.size(); ++k) {
    const std::string ab = abelianize(pi1_presentation(bg(groups[k], 2), 0)).to_string();
    o.require(ab == expect[k], "abelianized pi1 of bg");
    o.detail << ab << " ";
  }
  const GroupPresentation circle = pi1_presentation(sphere(1), 0);
  o.require(circle.generators.size() == 1 && circle.relators.empty(), "pi1 of the circle is free of rank 1");
  o.detail << "circle " << circle.to_string() << "; ";

  std::vector<PresentationPtr> all;
  for (const char* f : {"delta1.sset", "delta2.sset", "sphere2.sset", "circle.sset", "torus.sset"})
    all.push_back(parse_file(fixture(f)).sset);
  for (int n = 1; n <= 4; ++n) all.push_back(share(sphere(n)));
  for (const auto& c : fixture_categories()) all.push_back(share(nerve(c, 3)));
  for (const auto& g : small_groups()) all.push_back(share(bg(g, 3)));
  all.push_back(share(product(sphere(1), sphere(1))));
  all.push_back(share(product(boundary(3), sphere(1))));
  std::size_t compared = 0;
  for (const auto& s : all) {
    if (pi0(*s).size() != 1) continue;
    o.require(abelianize(pi1_presentation(*s, 0)) == homology(*s, 1).group, "abelianized pi1 vs H1");
    ++compared;
  }
  o.detail << "abelianization = H1 on " << compared << " fixtures";
}

SimplexExpr element_edge(const FiniteGroup& g, const Presentation& b, int x) {
  if (x == g.unit) return SimplexExpr(total_degeneracy(1), SimplexId{0, 0});
  return SimplexExpr(*b.find(1, g.elements[static_cast<std::size_t>(x)]));
}

void edge_calculus(Outcome& o) {
  const FiniteGroup s3 = symmetric_group(3);
  const Presentation b = bg(s3, 3);
  std::size_t pairs = 0;
  for (int x = 0; x < 6; ++x)
    for (int y = 0; y < 6; ++y, ++pairs) {
      const EdgeResult r = compose_edges(b, element_edge(s3, b, x), element_edge(s3, b, y));
      o.require(r.edge == element_edge(s3, b, s3.multiply(y, x)) && verify_certificate(b, r.certificate),
                "S3 composite");
    }
  o.detail << pairs << " S3 composites match the table; ";
  const Presentation z2 = bg(cyclic_group(2), 3);
  const SimplexExpr g = SimplexExpr(*z2.find(1, "1"));
  o.require(edge_inverse(z2, g).edge == g, "Z/2 inverse");
  o.detail << "inverse of g in bg Z/2 is " << z2.render(edge_inverse(z2, g).edge) << "; ";
  const Presentation one = nerve(ordinal_category(1), 2);
  std::string message = "no error";
  try {
    edge_inverse(one, SimplexExpr(*one.find(1, "0<1")));
  } catch (const NoFillerError& e) {
    message = e.what();
  }
  o.require(message.find("no filler") != std::string::npos, "nerve [1] inverse");
  o.detail << "nerve [1]: " << message;
}

// Cofaces [k-1] -> [k] and codegeneracies [k+1] -> [k], sources at most [3].
std::vector<MonotoneMap> generators_into(int k) {
  std::vector<MonotoneMap> out;
  for (int i = 0; i <= k && k >= 1; ++i) out.push_back(MonotoneMap::coface(k, i));
  for (int i = 0; i <= k && k + 1 <= 3; ++i) out.push_back(MonotoneMap::codegeneracy(k, i));
  return out;
}

void coherent_nerve(Outcome& o) {
  std::vector<SimplicialCategory> c;
  for (int k = 0; k <= 3; ++k) c.push_back(c_bracket(k));
  o.require(c[2].hom(0, 2).counts() == std::vector<std::size_t>{2, 1}, "c[2] hom(0,2)");
  o.require(c[3].hom(0, 3).counts() == std::vector<std::size_t>{4, 5, 2}, "c[3] hom(0,3)");
  for (int k = 0; k <= 3; ++k) o.require(validate_scat(c[static_cast<std::size_t>(k)]).pass, "c[k] validates");
  o.detail << "hom counts (2, 1) and (4, 5, 2); ";

  const std::vector<FiniteCategory> cats = {ordinal_category(1), ordinal_category(2), group_category(cyclic_group(2))};
  for (const auto& cat : cats) {
    const Presentation hc = hc_nerve(discrete_enrichment(cat), 3);
    const Presentation n = nerve(cat, 3);
    bool same = true;
    for (int d = 0; d <= 3; ++d) same = same && hc.count(d) == n.count(d);
    o.require(same, "discrete hc nerve counts");
    o.detail << "[";
    for (int d = 0; d <= 3; ++d) o.detail << (d ? " " : "") << hc.count(d);
    o.detail << "] ";
  }

  // Composable generator pairs: outer after inner, all objects at most [3].
  std::size_t pairs = 0;
  for (int b = 0; b <= 3; ++b)
    for (const auto& outer : generators_into(b)) {
      for (const auto& inner : generators_into(outer.domain())) {
        const auto& ca = c[static_cast<std::size_t>(inner.domain())];
        const auto& cb = c[static_cast<std::size_t>(inner.codomain())];
        const auto& cd = c[static_cast<std::size_t>(outer.codomain())];
        const CFunctor f = c_functor(inner, ca, cb);
        const CFunctor g = c_functor(outer, cb, cd);
        const CFunctor gf = c_functor(compose(outer, inner), ca, cd);
        for (int i = 0; i <= inner.domain(); ++i)
          for (int j = i; j <= inner.domain(); ++j)
            o.require(compose_maps(g.homs[static_cast<std::size_t>(inner(i))][static_cast<std::size_t>(inner(j))],
                                   f.homs[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) ==
                          gf.homs[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                      "functoriality");
        ++pairs;
      }
    }
  o.detail << "functoriality on " << pairs << " generator pairs";
}

void smith_suite(Outcome& o) {
  std::mt19937 rng(kSnfSeed);
  std::uniform_int_distribution<int> dim(1, kSnfMaxDim), entry(-kSnfEntryBound, kSnfEntryBound);
  std::size_t square = 0, rank_total = 0;
  for (int t = 0; t < kSnfTrials; ++t) {
    const std::size_t rows = static_cast<std::size_t>(dim(rng)), cols = static_cast<std::size_t>(dim(rng));
    IntMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = entry(rng);
    const SmithNormalForm s = smith_normal_form(m);
    o.require(s.u * m * s.v == s.d, "U M V = D");
    o.require(abs(s.u.determinant()) == 1 && abs(s.v.determinant()) == 1, "unimodular");
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c)
        if (r != c) o.require(s.d(r, c) == 0, "diagonal");
    const auto inv = s.invariants();
    for (std::size_t k = 1; k < inv.size(); ++k) o.require(inv[k] % inv[k - 1] == 0, "divisibility chain");
    rank_total += inv.size();
    if (rows == cols) {
      ++square;
      o.require(abs(m.determinant()) == abs(s.d.determinant()), "|det| preserved");
    }
  }
  o.detail << kSnfTrials << " matrices, " << square << " square, total rank " << rank_total;
}

struct Criterion {
  int number;
  const char* title;
  std::function<void(Outcome&)> run;
};

struct Result {
  bool pass;
  std::string detail;
  double seconds;
};

std::vector<Result> run_all(const std::vector<Criterion>& criteria) {
  std::vector<Result> out;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.push_back({o.pass, o.detail.str(), secs});
  }
  return out;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "identity suites", identity_suites},
      {2, "counting oracle", counting_oracle},
      {3, "Yoneda counts", yoneda},
      {4, "Kan verdicts", kan_verdicts},
      {5, "homology golden values", homology_values},
      {6, "fundamental group", fundamental_group},
      {7, "edge calculus", edge_calculus},
      {8, "coherent nerve", coherent_nerve},
      {9, "Smith normal form properties", smith_suite},
  };

  const unsigned parallel = std::max(4u, std::thread::hardware_concurrency());
  set_thread_count(parallel);
  std::vector<Result> first = run_all(criteria);
  set_thread_count(1);
  const std::vector<Result> serial = run_all(criteria);

  bool identical = true;
  for (std::size_t k = 0; k < criteria.size(); ++k)
    identical = identical && first[k].pass == serial[k].pass && first[k].detail == serial[k].detail;

  if (first[0].seconds >= kIdentitySuiteSeconds) {
    first[0].pass = false;
    first[0].detail += " (over time limit)";
  }
  if (first[3].seconds >= kKanSuiteSeconds) {
    first[3].pass = false;
    first[3].detail += " (over time limit)";
  }

  bool all = true;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const Result& r = first[k];
    all = all && r.pass;
    std::printf("[%s] %d %s: %s (%.2f s)\n", r.pass ? "PASS" : "FAIL", criteria[k].number, criteria[k].title,
                r.detail.c_str(), r.seconds);
  }
  all = all && identical;
  std::printf("[%s] 10 determinism: reports at %u threads and 1 thread are %s\n", identical ? "PASS" : "FAIL", parallel,
              identical ? "byte-identical" : "different");
  return all ? 0 : 1;
}
