#include "sset/kan.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <map>

#include "sset/error.hpp"
#include "sset/parallel.hpp"

namespace sset {

const SimplexExpr& HornMap::at(int k) const {
  if (k == i || k < 0 || k > n) throw InputError("horn has no face " + std::to_string(k));
  return faces.at(static_cast<std::size_t>(k < i ? k : k - 1));
}

HornMap HornMap::from_full(int n, int i, const std::vector<SimplexExpr>& all) {
  if (static_cast<int>(all.size()) != n + 1) throw InputError("horn needs n+1 face slots");
  HornMap h{n, i, {}};
  for (int k = 0; k <= n; ++k)
    if (k != i) h.faces.push_back(all[static_cast<std::size_t>(k)]);
  return h;
}

CompatibilityReport horn_compatible(const Presentation& s, const HornMap& h) {
  CompatibilityReport r;
  auto fail = [&](std::string message, int j, int k) {
    r.pass = false;
    r.message = std::move(message);
    r.j = j;
    r.k = k;
    return r;
  };
  if (h.n < 1) return fail("horn dimension must be >= 1", -1, -1);
  if (h.i < 0 || h.i > h.n) return fail("missing index out of range", -1, -1);
  if (static_cast<int>(h.faces.size()) != h.n) return fail("horn needs exactly n faces", -1, -1);
  for (const auto& f : h.faces) {
    if (f.dim() != h.n - 1) return fail("horn face has the wrong dimension", -1, -1);
    if (!s.has(f.base)) return fail("horn face is not a simplex of the presentation", -1, -1);
  }
  for (int k = 0; k <= h.n; ++k) {
    if (k == h.i) continue;
    for (int j = 0; j < k; ++j) {
      if (j == h.i) continue;
      if (face(s, j, h.at(k)) != face(s, k - 1, h.at(j))) {
        return fail("d" + std::to_string(j) + " x" + std::to_string(k) + " != d" + std::to_string(k - 1) + " x" +
                        std::to_string(j),
                    j, k);
      }
    }
  }
  r.message = "compatible";
  return r;
}

namespace {

void require_known(const Presentation& s, int n) {
  if (!s.knows_dimension(n)) {
    throw TruncationError("dimension " + std::to_string(n) + " exceeds truncation " + std::to_string(s.truncation()));
  }
}

bool restricts_to(const Presentation& s, const SimplexExpr& x, const HornMap& h) {
  for (int k = 0; k <= h.n; ++k) {
    if (k != h.i && face(s, k, x) != h.at(k)) return false;
  }
  return true;
}

}  // namespace

std::vector<FillerCertificate> find_fillers(const Presentation& s, const HornMap& h) {
  if (auto c = horn_compatible(s, h); !c.pass) throw InputError("incompatible horn: " + c.message);
  require_known(s, h.n);
  std::vector<FillerCertificate> out;
  for (const SimplexExpr& x : enumerate_simplices(s, h.n)) {
    if (restricts_to(s, x, h)) out.push_back({x, h});
  }
  return out;
}

bool verify_certificate(const Presentation& s, const FillerCertificate& c) {
  if (c.filler.dim() != c.horn.n || !s.has(c.filler.base)) return false;
  if (!horn_compatible(s, c.horn).pass) return false;
  return restricts_to(s, c.filler, c.horn);
}

namespace {

struct Branch {
  std::size_t horns = 0;
  std::size_t min_fillers = std::numeric_limits<std::size_t>::max();
  std::size_t max_fillers = 0;
  std::optional<std::vector<int>> first_failure;
};

// Face tables of one dimension of S, with simplices replaced by their
// positions in the canonical enumeration of the dimension below.
struct Level {
  std::vector<SimplexExpr> simplices;            // X_{n-1}
  std::vector<std::vector<int>> faces;           // faces of X_{n-1} as indices into X_{n-2}
  std::vector<std::vector<int>> filler_faces;    // faces of X_n as indices into X_{n-1}
};

int position(const std::vector<SimplexExpr>& sorted, const SimplexExpr& e) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), e);
  if (it == sorted.end() || *it != e) throw Error("simplex missing from canonical enumeration");
  return static_cast<int>(it - sorted.begin());
}

Level build_level(const Presentation& s, int n) {
  Level level;
  level.simplices = enumerate_simplices(s, n - 1);
  if (n >= 2) {
    const auto below = enumerate_simplices(s, n - 2);
    level.faces.reserve(level.simplices.size());
    for (const auto& x : level.simplices) {
      std::vector<int> f;
      for (int t = 0; t < n; ++t) f.push_back(position(below, face(s, t, x)));
      level.faces.push_back(std::move(f));
    }
  } else {
    level.faces.assign(level.simplices.size(), {});
  }
  for (const auto& x : enumerate_simplices(s, n)) {
    std::vector<int> f;
    for (int t = 0; t <= n; ++t) f.push_back(position(level.simplices, face(s, t, x)));
    level.filler_faces.push_back(std::move(f));
  }
  return level;
}

}  // namespace

KanReport kan_report(const Presentation& s, const KanOptions& options) {
  if (options.max_dim < 1) throw InputError("max_dim must be at least 1");
  require_known(s, options.max_dim);

  KanReport report;
  report.max_dim = options.max_dim;
  report.inner_only = options.inner_only;
  std::size_t global_min = std::numeric_limits<std::size_t>::max();
  std::atomic<std::size_t> explored{0};

  for (int n = 1; n <= options.max_dim; ++n) {
    const Level level = build_level(s, n);
    const std::size_t m = level.simplices.size();
    KanDimensionStats dim_stats{n, 0, std::numeric_limits<std::size_t>::max(), 0};

    for (int i = options.inner_only ? 1 : 0; i <= (options.inner_only ? n - 1 : n); ++i) {
      std::map<std::vector<int>, std::size_t> fillers;
      for (const auto& f : level.filler_faces) {
        std::vector<int> key = f;
        key.erase(key.begin() + i);
        ++fillers[key];
      }
      std::vector<int> slots;
      for (int k = 0; k <= n; ++k)
        if (k != i) slots.push_back(k);

      std::vector<Branch> branches(m);
      parallel_for(m, [&](std::size_t first) {
        Branch& b = branches[first];
        std::vector<int> chosen{static_cast<int>(first)};
        // Depth-first over the remaining slots, candidates in canonical order.
        auto visit = [&](auto&& self) -> void {
          if (chosen.size() == slots.size()) {
            if (explored.fetch_add(1) >= options.limits.cap) {
              throw ResourceError("horn enumeration exceeded cap of " + std::to_string(options.limits.cap),
                                  explored.load());
            }
            auto it = fillers.find(chosen);
            const std::size_t count = it == fillers.end() ? 0 : it->second;
            ++b.horns;
            b.min_fillers = std::min(b.min_fillers, count);
            b.max_fillers = std::max(b.max_fillers, count);
            if (count == 0 && !b.first_failure) b.first_failure = chosen;
            return;
          }
          const int k = slots[chosen.size()];
          for (std::size_t c = 0; c < m; ++c) {
            bool ok = true;
            for (std::size_t t = 0; t < chosen.size() && ok; ++t) {
              const int j = slots[t];
              ok = level.faces[c][static_cast<std::size_t>(j)] ==
                   level.faces[static_cast<std::size_t>(chosen[t])][static_cast<std::size_t>(k - 1)];
            }
            if (!ok) continue;
            chosen.push_back(static_cast<int>(c));
            self(self);
            chosen.pop_back();
          }
        };
        visit(visit);
      });

      for (const Branch& b : branches) {
        if (b.horns == 0) continue;
        dim_stats.horns += b.horns;
        dim_stats.min_fillers = std::min(dim_stats.min_fillers, b.min_fillers);
        dim_stats.max_fillers = std::max(dim_stats.max_fillers, b.max_fillers);
        if (b.first_failure && !report.counterexample) {
          HornMap h{n, i, {}};
          for (int c : *b.first_failure) h.faces.push_back(level.simplices[static_cast<std::size_t>(c)]);
          report.counterexample = std::move(h);
          report.pass = false;
        }
      }
    }
    if (dim_stats.horns == 0) dim_stats.min_fillers = 0;
    report.horns_checked += dim_stats.horns;
    if (dim_stats.horns > 0) {
      global_min = std::min(global_min, dim_stats.min_fillers);
      report.max_fillers = std::max(report.max_fillers, dim_stats.max_fillers);
    }
    report.per_dimension.push_back(dim_stats);
  }
  report.min_fillers = report.horns_checked == 0 ? 0 : global_min;
  return report;
}

namespace {

EdgeResult fill_and_take(const Presentation& k, const HornMap& h, int take, const char* what) {
  require_known(k, 2);
  auto fillers = find_fillers(k, h);
  if (fillers.empty()) {
    throw NoFillerError(std::string(what) + ": no filler for horn " + render_horn(k, h));
  }
  FillerCertificate& least = fillers.front();
  return {face(k, take, least.filler), std::move(least)};
}

void require_edge(const SimplexExpr& e, const Presentation& k) {
  if (e.dim() != 1 || !k.has(e.base)) throw InputError("expected an edge of the presentation");
}

}  // namespace

EdgeResult compose_edges(const Presentation& k, const SimplexExpr& alpha, const SimplexExpr& beta) {
  require_edge(alpha, k);
  require_edge(beta, k);
  if (face(k, 0, alpha) != face(k, 1, beta)) throw InputError("edges are not composable: target of alpha != source of beta");
  return fill_and_take(k, HornMap{2, 1, {beta, alpha}}, 1, "compose");
}

EdgeResult edge_inverse(const Presentation& k, const SimplexExpr& alpha) {
  require_edge(alpha, k);
  const SimplexExpr unit = degenerate(k, 0, face(k, 1, alpha));
  return fill_and_take(k, HornMap{2, 0, {unit, alpha}}, 0, "inverse");
}

EdgeResult edge_right_inverse(const Presentation& k, const SimplexExpr& alpha) {
  require_edge(alpha, k);
  // The horn mirrors edge_inverse: alpha is the second edge of the triangle
  // and the composite slot holds the identity at alpha's target.
  const SimplexExpr unit = degenerate(k, 0, face(k, 0, alpha));
  return fill_and_take(k, HornMap{2, 2, {alpha, unit}}, 2, "right inverse");
}

std::string render_horn(const Presentation& s, const HornMap& h) {
  std::string out = "[";
  for (int k = 0; k <= h.n; ++k) {
    if (k) out += ", ";
    out += k == h.i ? std::string("_") : s.render(h.at(k));
  }
  return out + "]";
}

}  // namespace sset
