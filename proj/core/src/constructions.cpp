#include "sset/constructions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "sset/error.hpp"

namespace sset {

// ---------------------------------------------------------------- categories

int FiniteCategory::add_object(const std::string& name) {
  const int obj = static_cast<int>(objects.size());
  objects.push_back(name);
  identities.push_back(-1);
  const int id = add_morphism("id_" + name, obj, obj);
  identities[static_cast<std::size_t>(obj)] = id;
  for (std::size_t m = 0; m < morphisms.size(); ++m) {
    const Morphism& mor = morphisms[m];
    if (mor.source == obj) set_composite(static_cast<int>(m), id, static_cast<int>(m));
    if (mor.target == obj) set_composite(id, static_cast<int>(m), static_cast<int>(m));
  }
  return obj;
}

int FiniteCategory::add_morphism(const std::string& name, int source, int target) {
  const int n_obj = static_cast<int>(objects.size());
  if (source < 0 || source >= n_obj || target < 0 || target >= n_obj) {
    throw InputError("morphism '" + name + "' has an unknown endpoint");
  }
  const int m = static_cast<int>(morphisms.size());
  morphisms.push_back({name, source, target});
  for (auto& row : composition) row.push_back(-1);
  composition.emplace_back(morphisms.size(), -1);
  if (identities[static_cast<std::size_t>(source)] >= 0) {
    set_composite(m, identities[static_cast<std::size_t>(source)], m);
  }
  if (identities[static_cast<std::size_t>(target)] >= 0) {
    set_composite(identities[static_cast<std::size_t>(target)], m, m);
  }
  return m;
}

void FiniteCategory::set_composite(int g, int f, int h) {
  composition.at(static_cast<std::size_t>(g)).at(static_cast<std::size_t>(f)) = h;
}

int FiniteCategory::compose(int g, int f) const {
  const Morphism& mf = morphisms.at(static_cast<std::size_t>(f));
  const Morphism& mg = morphisms.at(static_cast<std::size_t>(g));
  if (mf.target != mg.source) throw InputError("'" + mg.name + "' and '" + mf.name + "' are not composable");
  const int h = composition[static_cast<std::size_t>(g)][static_cast<std::size_t>(f)];
  if (h < 0) throw InputError("composite " + mg.name + " ∘ " + mf.name + " is not defined");
  return h;
}

bool FiniteCategory::is_identity(int m) const {
  const Morphism& mor = morphisms.at(static_cast<std::size_t>(m));
  return identities[static_cast<std::size_t>(mor.source)] == m;
}

std::optional<int> FiniteCategory::find_object(const std::string& name) const {
  auto it = std::find(objects.begin(), objects.end(), name);
  if (it == objects.end()) return std::nullopt;
  return static_cast<int>(it - objects.begin());
}

std::optional<int> FiniteCategory::find_morphism(const std::string& name) const {
  for (std::size_t m = 0; m < morphisms.size(); ++m)
    if (morphisms[m].name == name) return static_cast<int>(m);
  return std::nullopt;
}

std::optional<int> FiniteGroup::find(const std::string& name) const {
  auto it = std::find(elements.begin(), elements.end(), name);
  if (it == elements.end()) return std::nullopt;
  return static_cast<int>(it - elements.begin());
}

namespace {

ValidationReport failure(std::string message) {
  ValidationReport r;
  r.pass = false;
  r.message = std::move(message);
  return r;
}

ValidationReport success() {
  ValidationReport r;
  r.message = "pass";
  return r;
}

}  // namespace

ValidationReport validate_category(const FiniteCategory& c) {
  const std::size_t n = c.morphisms.size();
  if (c.identities.size() != c.objects.size()) return failure("identity table does not match the object list");
  if (c.composition.size() != n) return failure("composition table has the wrong number of rows");
  for (std::size_t o = 0; o < c.objects.size(); ++o) {
    const int id = c.identities[o];
    if (id < 0 || static_cast<std::size_t>(id) >= n || c.morphisms[static_cast<std::size_t>(id)].source != static_cast<int>(o) ||
        c.morphisms[static_cast<std::size_t>(id)].target != static_cast<int>(o)) {
      return failure("object '" + c.objects[o] + "' has no valid identity");
    }
  }
  for (std::size_t g = 0; g < n; ++g) {
    if (c.composition[g].size() != n) return failure("composition table has a short row");
    for (std::size_t f = 0; f < n; ++f) {
      const Morphism& mf = c.morphisms[f];
      const Morphism& mg = c.morphisms[g];
      const int h = c.composition[g][f];
      if (mf.target != mg.source) {
        if (h >= 0) return failure("composite defined for non-composable pair (" + mg.name + ", " + mf.name + ")");
        continue;
      }
      if (h < 0 || static_cast<std::size_t>(h) >= n) {
        return failure("missing composite " + mg.name + " ∘ " + mf.name);
      }
      const Morphism& mh = c.morphisms[static_cast<std::size_t>(h)];
      if (mh.source != mf.source || mh.target != mg.target) {
        return failure("composite " + mg.name + " ∘ " + mf.name + " = " + mh.name + " has the wrong endpoints");
      }
    }
  }
  for (std::size_t f = 0; f < n; ++f) {
    const Morphism& mf = c.morphisms[f];
    const int left = c.composition[static_cast<std::size_t>(c.identities[static_cast<std::size_t>(mf.target)])][f];
    const int right = c.composition[f][static_cast<std::size_t>(c.identities[static_cast<std::size_t>(mf.source)])];
    if (left != static_cast<int>(f) || right != static_cast<int>(f)) {
      return failure("identity law fails for '" + mf.name + "'");
    }
  }
  for (std::size_t f = 0; f < n; ++f)
    for (std::size_t g = 0; g < n; ++g) {
      if (c.morphisms[f].target != c.morphisms[g].source) continue;
      for (std::size_t h = 0; h < n; ++h) {
        if (c.morphisms[g].target != c.morphisms[h].source) continue;
        const int hg = c.composition[h][g];
        const int gf = c.composition[g][f];
        const int lhs = c.composition[static_cast<std::size_t>(hg)][f];
        const int rhs = c.composition[h][static_cast<std::size_t>(gf)];
        if (lhs != rhs) {
          return failure("associativity fails on (" + c.morphisms[h].name + ", " + c.morphisms[g].name + ", " +
                         c.morphisms[f].name + ")");
        }
      }
    }
  return success();
}

ValidationReport validate_group(const FiniteGroup& g) {
  const std::size_t n = g.elements.size();
  if (n == 0) return failure("group has no elements");
  if (g.unit < 0 || static_cast<std::size_t>(g.unit) >= n) return failure("unit is not an element");
  if (g.product.size() != n) return failure("multiplication table has the wrong number of rows");
  for (const auto& row : g.product) {
    if (row.size() != n) return failure("multiplication table has a short row");
    for (int v : row)
      if (v < 0 || static_cast<std::size_t>(v) >= n) return failure("multiplication table leaves the group");
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (g.multiply(g.unit, static_cast<int>(a)) != static_cast<int>(a) ||
        g.multiply(static_cast<int>(a), g.unit) != static_cast<int>(a)) {
      return failure("unit law fails for '" + g.elements[a] + "'");
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        const int ai = static_cast<int>(a), bi = static_cast<int>(b), ci = static_cast<int>(c);
        if (g.multiply(g.multiply(ai, bi), ci) != g.multiply(ai, g.multiply(bi, ci))) {
          return failure("associativity fails on (" + g.elements[a] + ", " + g.elements[b] + ", " + g.elements[c] + ")");
        }
      }
  for (std::size_t a = 0; a < n; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < n && !found; ++b) {
      found = g.multiply(static_cast<int>(a), static_cast<int>(b)) == g.unit &&
              g.multiply(static_cast<int>(b), static_cast<int>(a)) == g.unit;
    }
    if (!found) return failure("'" + g.elements[a] + "' has no inverse");
  }
  return success();
}

FiniteGroup cyclic_group(int n) {
  if (n < 1) throw InputError("cyclic group order must be positive");
  FiniteGroup g;
  for (int a = 0; a < n; ++a) g.elements.push_back(std::to_string(a));
  g.unit = 0;
  g.product.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g.product[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % n;
  return g;
}

FiniteGroup symmetric_group(int n) {
  if (n < 1 || n > 6) throw InputError("symmetric group degree must be in [1, 6]");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<int>, int> index;
  FiniteGroup g;
  for (std::size_t k = 0; k < perms.size(); ++k) {
    index[perms[k]] = static_cast<int>(k);
    std::string name;
    for (int v : perms[k]) name += std::to_string(v);
    g.elements.push_back(name);
  }
  g.unit = 0;
  g.product.assign(perms.size(), std::vector<int>(perms.size()));
  for (std::size_t a = 0; a < perms.size(); ++a)
    for (std::size_t b = 0; b < perms.size(); ++b) {
      std::vector<int> c(static_cast<std::size_t>(n));
      for (int x = 0; x < n; ++x) c[static_cast<std::size_t>(x)] = perms[a][static_cast<std::size_t>(perms[b][static_cast<std::size_t>(x)])];
      g.product[a][b] = index.at(c);
    }
  return g;
}

FiniteCategory group_category(const FiniteGroup& g) {
  FiniteCategory c;
  c.objects.push_back("*");
  const std::size_t n = g.elements.size();
  for (const auto& e : g.elements) c.morphisms.push_back({e, 0, 0});
  c.identities.push_back(g.unit);
  c.composition.assign(n, std::vector<int>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) c.composition[a][b] = g.multiply(static_cast<int>(a), static_cast<int>(b));
  return c;
}

FiniteCategory poset_category(const std::vector<std::string>& names, const std::vector<std::vector<bool>>& leq) {
  FiniteCategory c;
  const std::size_t n = names.size();
  for (const auto& name : names) c.add_object(name);
  std::map<std::pair<std::size_t, std::size_t>, int> arrow;
  for (std::size_t a = 0; a < n; ++a) arrow[{a, a}] = c.identities[a];
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b && leq[a][b]) arrow[{a, b}] = c.add_morphism(names[a] + "<" + names[b], static_cast<int>(a), static_cast<int>(b));
  for (const auto& [ab, f] : arrow)
    for (const auto& [bc, g] : arrow) {
      if (ab.second != bc.first) continue;
      auto it = arrow.find({ab.first, bc.second});
      if (it == arrow.end()) throw InputError("poset relation is not transitive");
      c.set_composite(g, f, it->second);
    }
  return c;
}

FiniteCategory ordinal_category(int n) {
  std::vector<std::string> names;
  std::vector<std::vector<bool>> leq(static_cast<std::size_t>(n) + 1, std::vector<bool>(static_cast<std::size_t>(n) + 1));
  for (int a = 0; a <= n; ++a) {
    names.push_back(std::to_string(a));
    for (int b = 0; b <= n; ++b) leq[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = a <= b;
  }
  return poset_category(names, leq);
}

FiniteCategory discrete_category(const std::vector<std::string>& names) {
  FiniteCategory c;
  for (const auto& name : names) c.add_object(name);
  return c;
}

// ---------------------------------------------------------------- simplices

namespace {

std::string vertex_set_name(const std::vector<int>& vs, int p) {
  std::string out;
  for (std::size_t k = 0; k < vs.size(); ++k) {
    if (p > 9 && k > 0) out += '_';
    out += std::to_string(vs[k]);
  }
  return out;
}

// Sub-presentation of Δ^p on the subsets accepted by keep.
Presentation simplex_subset(int p, int truncation, const std::function<bool(const std::vector<int>&)>& keep) {
  if (p < 0) throw InputError("simplex dimension must be non-negative");
  Presentation s(truncation);
  std::vector<std::map<std::vector<int>, SimplexId>> ids(static_cast<std::size_t>(p) + 1);
  for (int n = 0; n <= p; ++n) {
    // (n+1)-subsets of {0..p} in lexicographic order.
    std::vector<int> subset(static_cast<std::size_t>(n) + 1);
    std::iota(subset.begin(), subset.end(), 0);
    while (true) {
      if (keep(subset)) {
        std::vector<SimplexExpr> faces;
        if (n > 0) {
          for (int i = 0; i <= n; ++i) {
            std::vector<int> f = subset;
            f.erase(f.begin() + i);
            faces.emplace_back(ids[static_cast<std::size_t>(n - 1)].at(f));
          }
        }
        ids[static_cast<std::size_t>(n)][subset] = s.add_simplex(n, vertex_set_name(subset, p), std::move(faces));
      }
      int k = n;
      while (k >= 0 && subset[static_cast<std::size_t>(k)] == p - n + k) --k;
      if (k < 0) break;
      ++subset[static_cast<std::size_t>(k)];
      for (int t = k + 1; t <= n; ++t) subset[static_cast<std::size_t>(t)] = subset[static_cast<std::size_t>(t - 1)] + 1;
    }
  }
  return s;
}

int checked_truncation(std::optional<int> requested, int natural) {
  const int t = requested.value_or(natural);
  if (t < natural) {
    throw InputError("truncation " + std::to_string(t) + " is below the dimension " + std::to_string(natural));
  }
  return t;
}

}  // namespace

Presentation standard_simplex(int p, std::optional<int> truncation) {
  return simplex_subset(p, checked_truncation(truncation, p), [](const std::vector<int>&) { return true; });
}

Presentation boundary(int p, std::optional<int> truncation) {
  if (p < 1) throw InputError("boundary needs p >= 1");
  const int size = p + 1;
  return simplex_subset(p, checked_truncation(truncation, p - 1),
                        [size](const std::vector<int>& v) { return static_cast<int>(v.size()) < size; });
}

Presentation horn(int p, int i, std::optional<int> truncation) {
  if (p < 1) throw InputError("horn needs p >= 1");
  if (i < 0 || i > p) throw InputError("horn index " + std::to_string(i) + " out of range [0," + std::to_string(p) + "]");
  const int size = p + 1;
  return simplex_subset(p, checked_truncation(truncation, p - 1), [size, i](const std::vector<int>& v) {
    if (static_cast<int>(v.size()) == size) return false;
    // d_i ι_p is the subset missing vertex i.
    if (static_cast<int>(v.size()) == size - 1 && std::find(v.begin(), v.end(), i) == v.end()) return false;
    return true;
  });
}

Presentation sphere(int n) {
  if (n < 1) throw InputError("sphere dimension must be >= 1");
  Presentation s(n);
  const SimplexId v = s.add_simplex(0, "v");
  const SimplexExpr f(total_degeneracy(n - 1), v);
  s.add_simplex(n, "sigma", std::vector<SimplexExpr>(static_cast<std::size_t>(n) + 1, f));
  return s;
}

// ---------------------------------------------------------------- products

namespace {

std::vector<int> common_indices(const DegeneracyWord& a, const DegeneracyWord& b) {
  std::vector<int> out;
  for (int j : a.indices())
    if (b.contains(j)) out.push_back(j);
  return out;  // decreasing
}

// Given e = σ^* x and a surjection τ through which σ factors, returns σ'^* x
// with σ = σ'∘τ.
SimplexExpr factor_through(const SimplexExpr& e, const MonotoneMap& tau) {
  const MonotoneMap sigma = surjection_of(e.word, e.base.dim);
  std::vector<int> values(static_cast<std::size_t>(tau.codomain()) + 1);
  for (int t = 0; t <= tau.domain(); ++t) values[static_cast<std::size_t>(tau(t))] = sigma(t);
  return SimplexExpr(word_of_surjection(MonotoneMap(tau.codomain(), e.base.dim, std::move(values))), e.base);
}

}  // namespace

SimplexExpr ProductSet::locate(const SimplexExpr& a, const SimplexExpr& b) const {
  if (a.dim() != b.dim()) throw InputError("product simplex components have different dimensions");
  const std::vector<int> common = common_indices(a.word, b.word);
  const int n = a.dim();
  const int k = n - static_cast<int>(common.size());
  if (k > presentation->truncation()) {
    throw TruncationError("product simplex beyond truncation " + std::to_string(presentation->truncation()));
  }
  SimplexExpr a1 = a, b1 = b;
  DegeneracyWord outer;
  if (!common.empty()) {
    outer = DegeneracyWord(common);
    const MonotoneMap tau = surjection_of(outer, k);
    a1 = factor_through(a, tau);
    b1 = factor_through(b, tau);
  }
  const auto& table = lookup.at(static_cast<std::size_t>(k));
  auto it = table.find({a1, b1});
  if (it == table.end()) throw InputError("pair is not a simplex of the product");
  return SimplexExpr(outer, SimplexId{k, it->second});
}

std::pair<SimplexExpr, SimplexExpr> ProductSet::split(const SimplexExpr& e) const {
  const auto& [a, b] = components.at(static_cast<std::size_t>(e.base.dim)).at(static_cast<std::size_t>(e.base.index));
  return {apply_word(e.word, a), apply_word(e.word, b)};
}

ProductSet product_set(PresentationPtr s, PresentationPtr t, std::optional<int> truncation) {
  bool open = false;
  int trunc = 0;
  if (!s->open() && !t->open()) {
    trunc = std::max(0, std::max(s->top_dimension(), 0) + std::max(t->top_dimension(), 0));
  } else {
    open = true;
    trunc = std::min(s->bound(), t->bound());
  }
  if (truncation) {
    if (open && *truncation > trunc) {
      throw TruncationError("product truncation " + std::to_string(*truncation) + " exceeds what the factors know (" +
                            std::to_string(trunc) + ")");
    }
    if (!open && *truncation < trunc) open = true;
    trunc = *truncation;
  }

  auto out = std::make_shared<Presentation>(trunc, open);
  ProductSet p;
  p.left = s;
  p.right = t;
  p.lookup.resize(static_cast<std::size_t>(trunc) + 1);
  p.components.resize(static_cast<std::size_t>(trunc) + 1);
  p.presentation = out;
  if (s->top_dimension() < 0 || t->top_dimension() < 0) return p;

  for (int n = 0; n <= trunc; ++n) {
    const auto left = enumerate_simplices(*s, n);
    const auto right = enumerate_simplices(*t, n);
    for (const SimplexExpr& a : left) {
      for (const SimplexExpr& b : right) {
        if (!common_indices(a.word, b.word).empty()) continue;
        std::vector<SimplexExpr> faces;
        if (n > 0) {
          for (int i = 0; i <= n; ++i) faces.push_back(p.locate(face(*s, i, a), face(*t, i, b)));
        }
        const std::string name = "(" + s->compact(a) + "|" + t->compact(b) + ")";
        const SimplexId id = out->add_simplex(n, name, std::move(faces));
        p.lookup[static_cast<std::size_t>(n)][{a, b}] = id.index;
        p.components[static_cast<std::size_t>(n)].emplace_back(a, b);
      }
    }
  }
  return p;
}

Presentation product(const Presentation& s, const Presentation& t, std::optional<int> truncation) {
  return *product_set(std::make_shared<const Presentation>(s), std::make_shared<const Presentation>(t), truncation)
              .presentation;
}

SimplicialMap projection(const ProductSet& p, int factor) {
  if (factor != 0 && factor != 1) throw InputError("projection factor must be 0 or 1");
  SimplicialMap f{p.presentation, factor == 0 ? p.left : p.right, {}};
  for (const auto& level : p.components) {
    f.assignment.emplace_back();
    for (const auto& [a, b] : level) f.assignment.back().push_back(factor == 0 ? a : b);
  }
  return f;
}

// ---------------------------------------------------------------- nerves

namespace {

// A possibly degenerate chain, given by its n morphisms (n >= 1) or by a
// single object (n = 0), in a category where `is_unit` recognises identities.
// Converts it to normal form against the non-degenerate chain table.
SimplexExpr chain_to_expr(const std::vector<int>& morphisms, int object,
                          const std::function<bool(int)>& is_unit,
                          const std::vector<std::map<std::vector<int>, int>>& chains,
                          const std::vector<int>& object_index) {
  std::vector<int> word;
  std::vector<int> rest;
  for (int p = static_cast<int>(morphisms.size()) - 1; p >= 0; --p) {
    if (is_unit(morphisms[static_cast<std::size_t>(p)])) word.push_back(p);
  }
  for (int m : morphisms)
    if (!is_unit(m)) rest.push_back(m);
  if (rest.empty()) return SimplexExpr(DegeneracyWord(word), SimplexId{0, object_index.at(static_cast<std::size_t>(object))});
  const int k = static_cast<int>(rest.size());
  return SimplexExpr(DegeneracyWord(word), SimplexId{k, chains.at(static_cast<std::size_t>(k)).at(rest)});
}

std::string join_names(const std::vector<int>& items, const std::function<const std::string&(int)>& name) {
  std::string out;
  for (std::size_t k = 0; k < items.size(); ++k) {
    if (k) out += '>';
    out += name(items[k]);
  }
  return out;
}

}  // namespace

Presentation nerve(const FiniteCategory& c, int truncation) {
  if (truncation < 0) throw InputError("truncation must be non-negative");
  const int n_mor = static_cast<int>(c.morphisms.size());
  std::vector<int> non_identity;
  for (int m = 0; m < n_mor; ++m)
    if (!c.is_identity(m)) non_identity.push_back(m);

  // Non-degenerate chains by length, lexicographic in morphism index.
  std::vector<std::vector<std::vector<int>>> chains(static_cast<std::size_t>(truncation) + 2);
  for (int m : non_identity) chains[1].push_back({m});
  for (int len = 2; len <= truncation + 1; ++len) {
    for (const auto& prefix : chains[static_cast<std::size_t>(len - 1)]) {
      const int last_target = c.morphisms[static_cast<std::size_t>(prefix.back())].target;
      for (int m : non_identity) {
        if (c.morphisms[static_cast<std::size_t>(m)].source != last_target) continue;
        auto chain = prefix;
        chain.push_back(m);
        chains[static_cast<std::size_t>(len)].push_back(std::move(chain));
      }
    }
  }
  const bool open = !chains[static_cast<std::size_t>(truncation) + 1].empty();

  Presentation s(truncation, open);
  std::vector<int> object_index;
  for (std::size_t o = 0; o < c.objects.size(); ++o) {
    object_index.push_back(s.add_simplex(0, c.objects[o]).index);
  }
  std::vector<std::map<std::vector<int>, int>> lookup(static_cast<std::size_t>(truncation) + 1);
  auto is_unit = [&](int m) { return c.is_identity(m); };
  auto mor_name = [&](int m) -> const std::string& { return c.morphisms[static_cast<std::size_t>(m)].name; };
  for (int n = 1; n <= truncation; ++n) {
    for (const auto& chain : chains[static_cast<std::size_t>(n)]) {
      std::vector<SimplexExpr> faces;
      for (int i = 0; i <= n; ++i) {
        std::vector<int> f;
        int object = -1;
        if (n == 1) {
          object = i == 0 ? c.morphisms[static_cast<std::size_t>(chain[0])].target
                          : c.morphisms[static_cast<std::size_t>(chain[0])].source;
        } else if (i == 0) {
          f.assign(chain.begin() + 1, chain.end());
        } else if (i == n) {
          f.assign(chain.begin(), chain.end() - 1);
        } else {
          for (int k = 0; k < n; ++k) {
            if (k == i - 1) {
              f.push_back(c.compose(chain[static_cast<std::size_t>(i)], chain[static_cast<std::size_t>(i - 1)]));
              ++k;
            } else {
              f.push_back(chain[static_cast<std::size_t>(k)]);
            }
          }
        }
        if (object < 0) object = c.morphisms[static_cast<std::size_t>(f.front())].source;
        faces.push_back(chain_to_expr(f, object, is_unit, lookup, object_index));
      }
      const SimplexId id = s.add_simplex(n, join_names(chain, mor_name), std::move(faces));
      lookup[static_cast<std::size_t>(n)][chain] = id.index;
    }
  }
  return s;
}

Presentation bg(const FiniteGroup& g, int truncation) {
  if (truncation < 0) throw InputError("truncation must be non-negative");
  std::vector<int> non_unit;
  for (int a = 0; a < static_cast<int>(g.elements.size()); ++a)
    if (a != g.unit) non_unit.push_back(a);

  Presentation s(truncation, !non_unit.empty());
  s.add_simplex(0, "*");
  const std::vector<int> object_index{0};
  std::vector<std::map<std::vector<int>, int>> lookup(static_cast<std::size_t>(truncation) + 1);
  auto is_unit = [&](int a) { return a == g.unit; };
  auto elem_name = [&](int a) -> const std::string& { return g.elements[static_cast<std::size_t>(a)]; };

  std::vector<std::vector<int>> level{{}};
  for (int n = 1; n <= truncation; ++n) {
    std::vector<std::vector<int>> next;
    for (const auto& prefix : level)
      for (int a : non_unit) {
        auto t = prefix;
        t.push_back(a);
        next.push_back(std::move(t));
      }
    level = std::move(next);
    for (const auto& tuple : level) {
      std::vector<SimplexExpr> faces;
      for (int i = 0; i <= n; ++i) {
        std::vector<int> f;
        if (i == 0) {
          f.assign(tuple.begin() + 1, tuple.end());
        } else if (i == n) {
          f.assign(tuple.begin(), tuple.end() - 1);
        } else {
          // (g_1, ..., g_{i+1}·g_i, ..., g_n)
          for (int k = 0; k < n; ++k) {
            if (k == i - 1) {
              f.push_back(g.multiply(tuple[static_cast<std::size_t>(i)], tuple[static_cast<std::size_t>(i - 1)]));
              ++k;
            } else {
              f.push_back(tuple[static_cast<std::size_t>(k)]);
            }
          }
        }
        faces.push_back(chain_to_expr(f, 0, is_unit, lookup, object_index));
      }
      const SimplexId id = s.add_simplex(n, join_names(tuple, elem_name), std::move(faces));
      lookup[static_cast<std::size_t>(n)][tuple] = id.index;
    }
  }
  return s;
}

}  // namespace sset
