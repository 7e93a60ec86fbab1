#pragma once

// Simplicially enriched categories, the cosimplicial object 𝔠[k] built from
// path posets, and the homotopy coherent nerve for k <= 3.

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sset/constructions.hpp"
#include "sset/delta.hpp"
#include "sset/presentation.hpp"

namespace sset {

// Subsets U of {i, ..., j} with i, j in U, ordered by inclusion. Objects are
// listed by bitmask and named by their digits ("02", "013"); arrows are "U<V".
// Throws InputError unless 0 <= i <= j <= k.
FiniteCategory path_poset(int k, int i, int j);

// The i-th vertex of e (0 <= i <= dim e), by repeated faces.
int vertex_of(const Presentation& s, const SimplexExpr& e, int i);

// The map out of source determined by a function on vertices, for a target in
// which each vertex sequence spans at most one simplex (nerves of posets,
// discrete sets). Throws InputError when an image sequence spans nothing.
SimplicialMap map_on_vertices(PresentationPtr source, PresentationPtr target, const std::vector<int>& vertex_map);

struct Composition {
  // hom(y, z) × hom(x, y)
  std::shared_ptr<const ProductSet> domain;
  // domain -> hom(x, z)
  SimplicialMap map;
};

struct SimplicialCategory {
  std::vector<std::string> objects;
  // homs[x][y]; an empty presentation when there are no morphisms.
  std::vector<std::vector<PresentationPtr>> homs;
  // Vertex index of the identity in homs[x][x].
  std::vector<int> identities;
  // composition[x][y][z]
  std::vector<std::vector<std::vector<Composition>>> composition;

  const Presentation& hom(int x, int y) const { return *homs.at(static_cast<std::size_t>(x)).at(static_cast<std::size_t>(y)); }
  // g ∘ f for g in hom(y, z), f in hom(x, y) of equal dimension.
  SimplexExpr compose(int x, int y, int z, const SimplexExpr& g, const SimplexExpr& f) const;
  // The identity of x degenerated to dimension n.
  SimplexExpr identity(int x, int n) const;
};

// Builds composition[x][y][z] from a vertex-level rule; every hom(x, z) must
// be a poset nerve or discrete. rule(x, y, z, g, f) returns a vertex of hom(x, z).
void set_vertex_composition(SimplicialCategory& c,
                            const std::function<int(int, int, int, int, int)>& rule);

// Checks the composition maps, then associativity and unit laws on every
// simplex up to each hom's top dimension.
ValidationReport validate_scat(const SimplicialCategory& c);

// hom(i, j) = N(P_{i,j}) for i <= j, empty otherwise; composition is union.
SimplicialCategory c_bracket(int k);

// The simplicial functor 𝔠[θ] : 𝔠[m] -> 𝔠[k] for θ : [m] -> [k], sending U to θ(U).
struct CFunctor {
  MonotoneMap theta;
  // homs[i][j] for i <= j, a map hom_m(i, j) -> hom_k(θi, θj).
  std::vector<std::vector<SimplicialMap>> homs;
};
CFunctor c_functor(const MonotoneMap& theta, const SimplicialCategory& source, const SimplicialCategory& target);

// Homs are the discrete sets of morphisms, vertices named after them.
SimplicialCategory discrete_enrichment(const FiniteCategory& c);

// N(C) up to dimension max_k (<= 3): k-simplices are simplicial functors
// 𝔠[k] -> C. Non-degenerate simplices are named by the objects in dimension 0
// and by their spine vertices "f>g>h" above, with "~n" appended on clashes.
// Throws ResourceError when more than limits.cap candidate hom maps are tried.
Presentation hc_nerve(const SimplicialCategory& c, int max_k, SearchLimits limits = {});

}  // namespace sset
