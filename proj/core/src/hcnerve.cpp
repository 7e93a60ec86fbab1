#include "sset/hcnerve.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <set>
#include <tuple>

#include "sset/error.hpp"
#include "sset/parallel.hpp"

namespace sset {

namespace {

// Masks of the subsets of {i..j} containing i and j, ascending.
std::vector<unsigned> path_masks(int i, int j) {
  std::vector<unsigned> out;
  const unsigned ends = (1u << i) | (1u << j);
  const int inner = j - i - 1;
  for (unsigned bits = 0; bits < (inner > 0 ? (1u << inner) : 1u); ++bits) {
    out.push_back(ends | (bits << (i + 1)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string mask_name(unsigned mask) {
  std::string out;
  bool wide = mask >= (1u << 10);
  for (int b = 0; b < 32; ++b) {
    if (!(mask & (1u << b))) continue;
    if (wide && !out.empty()) out += '_';
    out += std::to_string(b);
  }
  return out;
}

int mask_index(const std::vector<unsigned>& masks, unsigned m) {
  auto it = std::lower_bound(masks.begin(), masks.end(), m);
  if (it == masks.end() || *it != m) throw Error("subset missing from path poset");
  return static_cast<int>(it - masks.begin());
}

}  // namespace

FiniteCategory path_poset(int k, int i, int j) {
  if (k < 0 || i < 0 || j > k) throw InputError("path poset needs 0 <= i <= j <= k");
  if (i > j) throw InputError("path poset P(" + std::to_string(i) + "," + std::to_string(j) + ") is empty");
  if (k > 30) throw InputError("path poset supports k <= 30");
  const auto masks = path_masks(i, j);
  std::vector<std::string> names;
  std::vector<std::vector<bool>> leq(masks.size(), std::vector<bool>(masks.size()));
  for (std::size_t a = 0; a < masks.size(); ++a) {
    names.push_back(mask_name(masks[a]));
    for (std::size_t b = 0; b < masks.size(); ++b) leq[a][b] = (masks[a] & ~masks[b]) == 0;
  }
  return poset_category(names, leq);
}

int vertex_of(const Presentation& s, const SimplexExpr& e, int i) {
  const int n = e.dim();
  if (i < 0 || i > n) throw InputError("vertex index out of range");
  SimplexExpr x = e;
  for (int t = n; t > i; --t) x = face(s, t, x);
  for (int t = 0; t < i; ++t) x = face(s, 0, x);
  return x.base.index;
}

SimplicialMap map_on_vertices(PresentationPtr source, PresentationPtr target, const std::vector<int>& vertex_map) {
  if (vertex_map.size() != source->count(0)) throw InputError("vertex map has the wrong size");
  const int top = source->top_dimension();
  std::map<std::vector<int>, SimplexId> spans;
  for (int n = 1; n <= std::min(target->top_dimension(), top); ++n) {
    for (const SimplexId y : target->simplices(n)) {
      std::vector<int> seq;
      for (int t = 0; t <= n; ++t) seq.push_back(vertex_of(*target, SimplexExpr(y), t));
      spans.emplace(std::move(seq), y);
    }
  }
  SimplicialMap f{source, target, {}};
  for (int n = 0; n <= top; ++n) {
    if (!target->knows_dimension(n)) throw TruncationError("target does not reach dimension " + std::to_string(n));
    f.assignment.emplace_back();
    for (const SimplexId x : source->simplices(n)) {
      std::vector<int> seq;
      for (int t = 0; t <= n; ++t) {
        seq.push_back(vertex_map[static_cast<std::size_t>(vertex_of(*source, SimplexExpr(x), t))]);
      }
      std::vector<int> word;
      std::vector<int> stripped{seq.front()};
      for (int p = n - 1; p >= 0; --p)
        if (seq[static_cast<std::size_t>(p)] == seq[static_cast<std::size_t>(p) + 1]) word.push_back(p);
      for (int p = 1; p <= n; ++p)
        if (seq[static_cast<std::size_t>(p)] != seq[static_cast<std::size_t>(p) - 1]) stripped.push_back(seq[static_cast<std::size_t>(p)]);
      SimplexId base{0, stripped.front()};
      if (stripped.size() > 1) {
        auto it = spans.find(stripped);
        if (it == spans.end()) throw InputError("vertex image of '" + source->name(x) + "' spans no simplex");
        base = it->second;
      }
      f.assignment.back().emplace_back(DegeneracyWord(word), base);
    }
  }
  return f;
}

SimplexExpr SimplicialCategory::compose(int x, int y, int z, const SimplexExpr& g, const SimplexExpr& f) const {
  const Composition& c = composition.at(static_cast<std::size_t>(x)).at(static_cast<std::size_t>(y)).at(static_cast<std::size_t>(z));
  return apply_map(c.map, c.domain->locate(g, f));
}

SimplexExpr SimplicialCategory::identity(int x, int n) const {
  return SimplexExpr(total_degeneracy(n), SimplexId{0, identities.at(static_cast<std::size_t>(x))});
}

void set_vertex_composition(SimplicialCategory& c, const std::function<int(int, int, int, int, int)>& rule) {
  const std::size_t n = c.objects.size();
  c.composition.assign(n, std::vector<std::vector<Composition>>(n, std::vector<Composition>(n)));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        auto domain = std::make_shared<const ProductSet>(product_set(c.homs[y][z], c.homs[x][y]));
        std::vector<int> vm;
        for (const auto& [g, f] : domain->components.at(0)) {
          vm.push_back(rule(static_cast<int>(x), static_cast<int>(y), static_cast<int>(z), g.base.index, f.base.index));
        }
        SimplicialMap m = map_on_vertices(domain->presentation, c.homs[x][z], vm);
        c.composition[x][y][z] = Composition{std::move(domain), std::move(m)};
      }
}

ValidationReport validate_scat(const SimplicialCategory& c) {
  auto fail = [](std::string message) {
    ValidationReport r;
    r.pass = false;
    r.message = std::move(message);
    return r;
  };
  const std::size_t n = c.objects.size();
  if (c.homs.size() != n || c.identities.size() != n || c.composition.size() != n) {
    return fail("tables do not match the object list");
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (c.homs[x].size() != n || c.composition[x].size() != n) return fail("ragged hom table");
    for (std::size_t y = 0; y < n; ++y) {
      if (!c.homs[x][y]) return fail("missing hom presentation");
      if (c.composition[x][y].size() != n) return fail("ragged composition table");
    }
    const int id = c.identities[x];
    if (id < 0 || static_cast<std::size_t>(id) >= c.homs[x][x]->count(0)) {
      return fail("object '" + c.objects[x] + "' has no identity vertex");
    }
  }
  const auto& name = [&](std::size_t x) -> const std::string& { return c.objects[x]; };
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        const Composition& comp = c.composition[x][y][z];
        const std::string where = "(" + name(x) + ", " + name(y) + ", " + name(z) + ")";
        if (!comp.domain || !comp.map.source || *comp.map.source != *comp.domain->presentation) {
          return fail("composition " + where + " is not defined on hom(y,z) x hom(x,y)");
        }
        if (*comp.domain->left != *c.homs[y][z] || *comp.domain->right != *c.homs[x][y] ||
            *comp.map.target != *c.homs[x][z]) {
          return fail("composition " + where + " has the wrong source or target");
        }
        if (auto r = validate_map(comp.map); !r.pass) return fail("composition " + where + " is not simplicial: " + r.message);
      }

  auto span = [&](std::size_t x, std::size_t y) { return std::max(c.homs[x][y]->top_dimension(), -1); };
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const Presentation& h = *c.homs[x][y];
      for (int d = 0; d <= span(x, y); ++d)
        for (const SimplexExpr& f : enumerate_simplices(h, d)) {
          const int xi = static_cast<int>(x), yi = static_cast<int>(y);
          if (c.compose(xi, xi, yi, f, c.identity(xi, d)) != f || c.compose(xi, yi, yi, c.identity(yi, d), f) != f) {
            ValidationReport r = fail("unit law fails for " + h.render(f) + " in hom(" + name(x) + ", " + name(y) + ")");
            r.simplex = f.base;
            return r;
          }
        }
    }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        for (std::size_t w = 0; w < n; ++w) {
          const int a = span(x, y), b = span(y, z), cc = span(z, w);
          if (a < 0 || b < 0 || cc < 0) continue;
          const int xi = static_cast<int>(x), yi = static_cast<int>(y), zi = static_cast<int>(z), wi = static_cast<int>(w);
          const int known = std::min({c.homs[x][y]->bound(), c.homs[y][z]->bound(), c.homs[z][w]->bound()});
          for (int d = 0; d <= std::min(a + b + cc, known); ++d) {
            const auto fs = enumerate_simplices(*c.homs[x][y], d);
            const auto gs = enumerate_simplices(*c.homs[y][z], d);
            const auto hs = enumerate_simplices(*c.homs[z][w], d);
            for (const auto& h : hs)
              for (const auto& g : gs) {
                const SimplexExpr hg = c.compose(yi, zi, wi, h, g);
                for (const auto& f : fs) {
                  if (c.compose(xi, zi, wi, h, c.compose(xi, yi, zi, g, f)) != c.compose(xi, yi, wi, hg, f)) {
                    return fail("associativity fails at (" + name(x) + ", " + name(y) + ", " + name(z) + ", " + name(w) +
                                ") on " + c.homs[z][w]->render(h) + ", " + c.homs[y][z]->render(g) + ", " +
                                c.homs[x][y]->render(f));
                  }
                }
              }
          }
        }
  ValidationReport ok;
  ok.message = "pass";
  return ok;
}

SimplicialCategory c_bracket(int k) {
  if (k < 0 || k > 30) throw InputError("c_bracket needs 0 <= k <= 30");
  SimplicialCategory c;
  const std::size_t n = static_cast<std::size_t>(k) + 1;
  for (int i = 0; i <= k; ++i) c.objects.push_back(std::to_string(i));
  c.homs.assign(n, std::vector<PresentationPtr>(n));
  std::vector<std::vector<std::vector<unsigned>>> masks(n, std::vector<std::vector<unsigned>>(n));
  const auto empty = share(Presentation(0));
  for (int i = 0; i <= k; ++i)
    for (int j = 0; j <= k; ++j) {
      if (i > j) {
        c.homs[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = empty;
        continue;
      }
      masks[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = path_masks(i, j);
      c.homs[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = share(nerve(path_poset(k, i, j), std::max(j - i - 1, 0)));
    }
  c.identities.assign(n, 0);
  set_vertex_composition(c, [&](int x, int y, int z, int g, int f) {
    const unsigned u = masks[static_cast<std::size_t>(y)][static_cast<std::size_t>(z)][static_cast<std::size_t>(g)] |
                       masks[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)][static_cast<std::size_t>(f)];
    return mask_index(masks[static_cast<std::size_t>(x)][static_cast<std::size_t>(z)], u);
  });
  return c;
}

CFunctor c_functor(const MonotoneMap& theta, const SimplicialCategory& source, const SimplicialCategory& target) {
  const int m = theta.domain(), k = theta.codomain();
  if (static_cast<int>(source.objects.size()) != m + 1 || static_cast<int>(target.objects.size()) != k + 1) {
    throw InputError("c_functor: categories do not match the map's dimensions");
  }
  CFunctor out{theta, std::vector<std::vector<SimplicialMap>>(static_cast<std::size_t>(m) + 1,
                                                             std::vector<SimplicialMap>(static_cast<std::size_t>(m) + 1))};
  for (int i = 0; i <= m; ++i)
    for (int j = i; j <= m; ++j) {
      const auto src = path_masks(i, j);
      const auto dst = path_masks(theta(i), theta(j));
      std::vector<int> vm;
      for (unsigned u : src) {
        unsigned image = 0;
        for (int b = i; b <= j; ++b)
          if (u & (1u << b)) image |= 1u << theta(b);
        vm.push_back(mask_index(dst, image));
      }
      out.homs[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          map_on_vertices(source.homs[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                          target.homs[static_cast<std::size_t>(theta(i))][static_cast<std::size_t>(theta(j))], vm);
    }
  return out;
}

SimplicialCategory discrete_enrichment(const FiniteCategory& cat) {
  if (auto r = validate_category(cat); !r.pass) throw InputError("category is invalid: " + r.message);
  SimplicialCategory c;
  c.objects = cat.objects;
  const std::size_t n = cat.objects.size();
  c.homs.assign(n, std::vector<PresentationPtr>(n));
  // members[x][y] lists the morphisms x -> y in index order; position[m] is m's vertex.
  std::vector<std::vector<std::vector<int>>> members(n, std::vector<std::vector<int>>(n));
  std::vector<int> position(cat.morphisms.size());
  for (std::size_t m = 0; m < cat.morphisms.size(); ++m) {
    auto& list = members[static_cast<std::size_t>(cat.morphisms[m].source)][static_cast<std::size_t>(cat.morphisms[m].target)];
    position[m] = static_cast<int>(list.size());
    list.push_back(static_cast<int>(m));
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      Presentation h(0);
      for (int m : members[x][y]) h.add_simplex(0, cat.morphisms[static_cast<std::size_t>(m)].name);
      c.homs[x][y] = share(std::move(h));
    }
  for (std::size_t x = 0; x < n; ++x) c.identities.push_back(position[static_cast<std::size_t>(cat.identities[x])]);
  set_vertex_composition(c, [&](int x, int y, int z, int g, int f) {
    const int gm = members[static_cast<std::size_t>(y)][static_cast<std::size_t>(z)][static_cast<std::size_t>(g)];
    const int fm = members[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)][static_cast<std::size_t>(f)];
    return position[static_cast<std::size_t>(cat.compose(gm, fm))];
  });
  return c;
}

// ---------------------------------------------------------------- coherent nerve

namespace {

using Table = std::vector<std::vector<SimplexExpr>>;

// A simplicial functor 𝔠[k] -> C: objects, and for every i < j the assignment
// table of the hom map, stored at pair_index(i, j).
struct Functor {
  std::vector<int> objects;
  std::vector<Table> homs;
  auto operator<=>(const Functor&) const = default;
};

// Pairs (i, j), i < j, ordered by j then i.
std::size_t pair_index(int i, int j) { return static_cast<std::size_t>(j * (j - 1) / 2 + i); }

class CoherentNerve {
 public:
  CoherentNerve(const SimplicialCategory& c, int max_k, SearchLimits limits) : c_(c), max_k_(max_k), limits_(limits) {
    for (int k = 0; k <= max_k; ++k) brackets_.push_back(c_bracket(k));
  }

  std::vector<Functor> functors(int k) {
    const std::size_t n_obj = c_.objects.size();
    std::size_t assignments = 1;
    for (int t = 0; t <= k; ++t) assignments *= n_obj;
    std::vector<std::vector<Functor>> found(assignments);
    parallel_for(assignments, [&](std::size_t code) {
      std::vector<int> objects(static_cast<std::size_t>(k) + 1);
      std::size_t rest = code;
      for (int t = k; t >= 0; --t) {
        objects[static_cast<std::size_t>(t)] = static_cast<int>(rest % n_obj);
        rest /= n_obj;
      }
      search(k, objects, found[code]);
    });
    std::vector<Functor> out;
    for (auto& list : found)
      for (auto& f : list) out.push_back(std::move(f));
    return out;
  }

  // F ∘ 𝔠[θ] for θ : [m] -> [k].
  Functor precompose(const Functor& f, const MonotoneMap& theta) {
    const int m = theta.domain(), k = theta.codomain();
    const CFunctor& cf = c_functor_cached(theta);
    Functor out;
    for (int i = 0; i <= m; ++i) out.objects.push_back(f.objects[static_cast<std::size_t>(theta(i))]);
    out.homs.resize(pair_index(0, m + 1));
    for (int j = 1; j <= m; ++j)
      for (int i = 0; i < j; ++i) {
        const SimplicialMap& inner = cf.homs[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        Table t = inner.assignment;
        const int a = theta(i), b = theta(j);
        for (auto& level : t)
          for (auto& e : level) {
            if (a == b) {
              e = c_.identity(f.objects[static_cast<std::size_t>(a)], e.dim());
            } else {
              e = apply_map(hom_map(k, f, a, b), e);
            }
          }
        out.homs[pair_index(i, j)] = std::move(t);
      }
    return out;
  }

  std::string spine_name(const Functor& f, int k) const {
    if (k == 0) return c_.objects[static_cast<std::size_t>(f.objects[0])];
    std::string out;
    for (int p = 0; p < k; ++p) {
      if (p) out += '>';
      const SimplexExpr& v = f.homs[pair_index(p, p + 1)].at(0).at(0);
      out += c_.hom(f.objects[static_cast<std::size_t>(p)], f.objects[static_cast<std::size_t>(p) + 1]).render(v);
    }
    return out;
  }

 private:
  SimplicialMap hom_map(int k, const Functor& f, int i, int j) const {
    return SimplicialMap{brackets_[static_cast<std::size_t>(k)].homs[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                         c_.homs[static_cast<std::size_t>(f.objects[static_cast<std::size_t>(i)])]
                                [static_cast<std::size_t>(f.objects[static_cast<std::size_t>(j)])],
                         f.homs[pair_index(i, j)]};
  }

  const CFunctor& c_functor_cached(const MonotoneMap& theta) {
    std::lock_guard lock(mutex_);
    const std::string key = theta.to_string() + "/" + std::to_string(theta.domain()) + "/" + std::to_string(theta.codomain());
    auto it = functor_cache_.find(key);
    if (it == functor_cache_.end()) {
      it = functor_cache_
               .emplace(key, c_functor(theta, brackets_[static_cast<std::size_t>(theta.domain())],
                                       brackets_[static_cast<std::size_t>(theta.codomain())]))
               .first;
    }
    return it->second;
  }

  // Maps hom_k(i, j) -> C(x, y); hom_k(i, j) depends only on j - i.
  const std::vector<SimplicialMap>& candidates(int k, int i, int j, int x, int y) {
    const auto key = std::make_tuple(j - i, x, y);
    {
      std::lock_guard lock(mutex_);
      auto it = map_cache_.find(key);
      if (it != map_cache_.end()) return it->second;
    }
    const auto& bracket = brackets_[static_cast<std::size_t>(k)];
    auto maps = enumerate_maps(bracket.homs[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                               c_.homs[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)], limits_);
    std::lock_guard lock(mutex_);
    return map_cache_.emplace(key, std::move(maps)).first->second;
  }

  void search(int k, const std::vector<int>& objects, std::vector<Functor>& out) {
    if (k == 0) {
      out.push_back(Functor{objects, {}});
      return;
    }
    const auto& bracket = brackets_[static_cast<std::size_t>(k)];
    std::vector<std::pair<int, int>> pairs;
    for (int j = 1; j <= k; ++j)
      for (int i = j - 1; i >= 0; --i) pairs.emplace_back(i, j);
    std::vector<const std::vector<SimplicialMap>*> options;
    for (const auto& [i, j] : pairs) {
      options.push_back(&candidates(k, i, j, objects[static_cast<std::size_t>(i)], objects[static_cast<std::size_t>(j)]));
      if (options.back()->empty()) return;
    }
    // Pairs are visited by larger end, then smaller end descending, so when
    // (i, l) is assigned every (i, j) and (j, l) with i < j < l already is.
    Functor f{objects, std::vector<Table>(pairs.size())};
    auto compatible = [&](std::size_t p) {
      const auto [i, l] = pairs[p];
      for (int j = i + 1; j < l; ++j) {
        const Composition& unite = bracket.composition[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
                                                      [static_cast<std::size_t>(l)];
        const SimplicialMap f_il = hom_map(k, f, i, l), f_jl = hom_map(k, f, j, l), f_ij = hom_map(k, f, i, j);
        for (std::size_t d = 0; d < unite.domain->components.size(); ++d)
          for (std::size_t idx = 0; idx < unite.domain->components[d].size(); ++idx) {
            const auto& [g, h] = unite.domain->components[d][idx];
            const SimplexExpr lhs = apply_map(f_il, unite.map.assignment[d][idx]);
            const SimplexExpr rhs = c_.compose(objects[static_cast<std::size_t>(i)], objects[static_cast<std::size_t>(j)],
                                               objects[static_cast<std::size_t>(l)], apply_map(f_jl, g), apply_map(f_ij, h));
            if (lhs != rhs) return false;
          }
      }
      return true;
    };
    auto visit = [&](auto&& self, std::size_t p) -> void {
      if (p == pairs.size()) {
        out.push_back(f);
        return;
      }
      for (const SimplicialMap& m : *options[p]) {
        if (explored_.fetch_add(1) >= limits_.cap) {
          throw ResourceError("coherent nerve search exceeded cap of " + std::to_string(limits_.cap) +
                                  " candidate hom maps in dimension " + std::to_string(k),
                              explored_.load());
        }
        f.homs[pair_index(pairs[p].first, pairs[p].second)] = m.assignment;
        if (compatible(p)) self(self, p + 1);
      }
    };
    visit(visit, 0);
  }

  const SimplicialCategory& c_;
  int max_k_;
  SearchLimits limits_;
  std::vector<SimplicialCategory> brackets_;
  std::mutex mutex_;
  std::map<std::string, CFunctor> functor_cache_;
  std::map<std::tuple<int, int, int>, std::vector<SimplicialMap>> map_cache_;
  std::atomic<std::size_t> explored_{0};
};

}  // namespace

Presentation hc_nerve(const SimplicialCategory& c, int max_k, SearchLimits limits) {
  if (max_k < 0 || max_k > 3) throw InputError("coherent nerve supports 0 <= max_k <= 3");
  CoherentNerve builder(c, max_k, limits);
  Presentation out(max_k, true);
  std::vector<std::map<Functor, SimplexExpr>> exprs(static_cast<std::size_t>(max_k) + 1);

  for (int k = 0; k <= max_k; ++k) {
    std::set<std::string> used;
    for (Functor& f : builder.functors(k)) {
      std::optional<SimplexExpr> e;
      for (int j = 0; j < k && !e; ++j) {
        const Functor below = builder.precompose(f, MonotoneMap::coface(k, j));
        if (builder.precompose(below, MonotoneMap::codegeneracy(k - 1, j)) == f) {
          e = degenerate(out, j, exprs[static_cast<std::size_t>(k) - 1].at(below));
        }
      }
      if (!e) {
        std::vector<SimplexExpr> faces;
        for (int i = 0; k > 0 && i <= k; ++i) {
          faces.push_back(exprs[static_cast<std::size_t>(k) - 1].at(builder.precompose(f, MonotoneMap::coface(k, i))));
        }
        const std::string base = builder.spine_name(f, k);
        std::string name = base;
        for (int suffix = 2; used.contains(name); ++suffix) name = base + "~" + std::to_string(suffix);
        used.insert(name);
        e = SimplexExpr(out.add_simplex(k, name, std::move(faces)));
      }
      exprs[static_cast<std::size_t>(k)].emplace(std::move(f), *e);
    }
  }
  return out;
}

}  // namespace sset
