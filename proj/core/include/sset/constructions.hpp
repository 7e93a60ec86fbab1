#pragma once

// Builders for the standard simplicial sets: simplices, boundaries, horns,
// minimal spheres, binary products, nerves of finite categories and
// classifying spaces of finite groups.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sset/presentation.hpp"

namespace sset {

struct Morphism {
  std::string name;
  int source = 0;
  int target = 0;
};

// A finite category with an explicit composition table. add_object creates the
// identity morphism "id_<object>" and the table entries involving identities.
struct FiniteCategory {
  std::vector<std::string> objects;
  std::vector<Morphism> morphisms;
  std::vector<int> identities;                  // per object
  std::vector<std::vector<int>> composition;    // [g][f] = g∘f, -1 when not composable

  int add_object(const std::string& name);
  int add_morphism(const std::string& name, int source, int target);
  void set_composite(int g, int f, int h);

  // g∘f. Throws InputError when f and g are not composable or the table has no entry.
  int compose(int g, int f) const;
  bool is_identity(int m) const;
  std::optional<int> find_object(const std::string& name) const;
  std::optional<int> find_morphism(const std::string& name) const;
};

struct FiniteGroup {
  std::vector<std::string> elements;
  int unit = 0;
  std::vector<std::vector<int>> product;  // [a][b] = a·b

  int multiply(int a, int b) const { return product[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
  std::optional<int> find(const std::string& name) const;
};

ValidationReport validate_category(const FiniteCategory& c);
ValidationReport validate_group(const FiniteGroup& g);

FiniteGroup cyclic_group(int n);
// Permutations of {0..n-1} in one-line notation, (σ·τ)(x) = σ(τ(x)).
FiniteGroup symmetric_group(int n);

// One object "*", one morphism per element, g∘f = g·f.
FiniteCategory group_category(const FiniteGroup& g);
// leq[a][b] means a <= b; non-identity arrows are named "a<b".
FiniteCategory poset_category(const std::vector<std::string>& names, const std::vector<std::vector<bool>>& leq);
// The ordinal [n] = {0 < 1 < ... < n}.
FiniteCategory ordinal_category(int n);
// Only identity morphisms.
FiniteCategory discrete_category(const std::vector<std::string>& names);

// Δ^p. Non-degenerate n-simplices are the (n+1)-subsets of {0..p}; the
// presentation is complete, and truncation defaults to p.
Presentation standard_simplex(int p, std::optional<int> truncation = std::nullopt);
// ∂Δ^p: Δ^p without its top simplex.
Presentation boundary(int p, std::optional<int> truncation = std::nullopt);
// Λ^p_i: ∂Δ^p without the face d_i ι_p.
Presentation horn(int p, int i, std::optional<int> truncation = std::nullopt);
// One vertex v and one n-simplex whose faces are all the degenerate (n-1)-simplex on v.
Presentation sphere(int n);

// S × T with its non-degenerate simplices: pairs (a, b) of equal dimension
// whose degeneracy index sets are disjoint.
struct ProductSet {
  PresentationPtr left;
  PresentationPtr right;
  PresentationPtr presentation;
  // components[dim][index] = (a, b) for each non-degenerate product simplex.
  std::vector<std::vector<std::pair<SimplexExpr, SimplexExpr>>> components;

  // The product simplex (a, b) in normal form. Throws InputError on a
  // dimension mismatch and TruncationError beyond the product's truncation.
  SimplexExpr locate(const SimplexExpr& a, const SimplexExpr& b) const;
  // The components of an arbitrary product simplex.
  std::pair<SimplexExpr, SimplexExpr> split(const SimplexExpr& e) const;

  std::vector<std::map<std::pair<SimplexExpr, SimplexExpr>, int>> lookup;
};

// Truncation of the result: the minimum over open factors; when both factors
// are complete the product is complete and reaches the sum of their dimensions.
ProductSet product_set(PresentationPtr s, PresentationPtr t, std::optional<int> truncation = std::nullopt);
Presentation product(const Presentation& s, const Presentation& t, std::optional<int> truncation = std::nullopt);

// Projections S × T -> S and S × T -> T.
SimplicialMap projection(const ProductSet& p, int factor);

// N(C) up to dimension N. Non-degenerate simplices are composable chains of
// non-identity morphisms, named "f1>f2>...".
Presentation nerve(const FiniteCategory& c, int truncation);
// BG up to dimension N using the tuple face formulas directly.
Presentation bg(const FiniteGroup& g, int truncation);

}  // namespace sset
