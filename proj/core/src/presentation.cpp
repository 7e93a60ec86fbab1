#include "sset/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <random>

#include "sset/error.hpp"

namespace sset {

bool is_valid_name(std::string_view name) {
  if (name.empty() || name == ".") return false;
  for (char c : name) {
    if (std::isspace(static_cast<unsigned char>(c))) return false;
    if (c == '[' || c == ']' || c == ',' || c == '=' || c == ';' || c == '#') return false;
  }
  if (name.size() >= 2 && name[0] == 's' &&
      std::all_of(name.begin() + 1, name.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    return false;
  }
  return true;
}

Presentation::Presentation(int truncation, bool open) : truncation_(truncation), open_(open) {
  if (truncation < 0) throw InputError("truncation must be non-negative");
  cells_.resize(static_cast<std::size_t>(truncation) + 1);
  index_.resize(static_cast<std::size_t>(truncation) + 1);
}

int Presentation::top_dimension() const noexcept {
  for (int d = truncation_; d >= 0; --d)
    if (!cells_[static_cast<std::size_t>(d)].empty()) return d;
  return -1;
}

std::size_t Presentation::count(int dim) const noexcept {
  if (dim < 0 || dim > truncation_) return 0;
  return cells_[static_cast<std::size_t>(dim)].size();
}

std::vector<std::size_t> Presentation::counts() const {
  std::vector<std::size_t> out;
  for (const auto& level : cells_) out.push_back(level.size());
  return out;
}

SimplexId Presentation::add_simplex(int dim, std::string name, std::vector<SimplexExpr> faces) {
  if (dim < 0 || dim > truncation_) {
    throw InputError("simplex '" + name + "' of dimension " + std::to_string(dim) + " exceeds truncation " +
                     std::to_string(truncation_));
  }
  if (!is_valid_name(name)) throw InputError("invalid simplex name '" + name + "'");
  auto& level_index = index_[static_cast<std::size_t>(dim)];
  if (level_index.contains(name)) {
    throw InputError("duplicate simplex name '" + name + "' in dimension " + std::to_string(dim));
  }
  const std::size_t expected = dim == 0 ? 0 : static_cast<std::size_t>(dim) + 1;
  if (faces.size() != expected) {
    throw InputError("simplex '" + name + "' needs " + std::to_string(expected) + " faces, got " +
                     std::to_string(faces.size()));
  }
  for (std::size_t i = 0; i < faces.size(); ++i) {
    const SimplexExpr& f = faces[i];
    if (f.dim() != dim - 1) {
      throw InputError("face d" + std::to_string(i) + " of '" + name + "' has dimension " +
                       std::to_string(f.dim()) + ", expected " + std::to_string(dim - 1));
    }
    if (!has(f.base)) throw InputError("face d" + std::to_string(i) + " of '" + name + "' refers to an unknown simplex");
    if (!f.word.empty() && f.word.indices().front() > dim - 2) {
      throw InputError("face d" + std::to_string(i) + " of '" + name + "' has an invalid degeneracy word");
    }
  }
  auto& level = cells_[static_cast<std::size_t>(dim)];
  const int index = static_cast<int>(level.size());
  level_index.emplace(name, index);
  level.push_back(Cell{std::move(name), std::move(faces)});
  return SimplexId{dim, index};
}

void Presentation::set_face(SimplexId x, int i, SimplexExpr f) {
  auto& c = cells_.at(static_cast<std::size_t>(x.dim)).at(static_cast<std::size_t>(x.index));
  c.faces.at(static_cast<std::size_t>(i)) = std::move(f);
}

const Presentation::Cell& Presentation::cell(SimplexId id) const {
  if (!has(id)) throw InputError("unknown simplex (" + std::to_string(id.dim) + "," + std::to_string(id.index) + ")");
  return cells_[static_cast<std::size_t>(id.dim)][static_cast<std::size_t>(id.index)];
}

const std::string& Presentation::name(SimplexId id) const { return cell(id).name; }

std::optional<SimplexId> Presentation::find(int dim, std::string_view name) const {
  if (dim < 0 || dim > truncation_) return std::nullopt;
  const auto& level_index = index_[static_cast<std::size_t>(dim)];
  if (auto it = level_index.find(name); it != level_index.end()) return SimplexId{dim, it->second};
  return std::nullopt;
}

const std::vector<SimplexExpr>& Presentation::faces(SimplexId id) const { return cell(id).faces; }

std::vector<SimplexId> Presentation::simplices(int dim) const {
  std::vector<SimplexId> out;
  for (std::size_t k = 0; k < count(dim); ++k) out.push_back({dim, static_cast<int>(k)});
  return out;
}

bool Presentation::has(SimplexId id) const noexcept {
  return id.dim >= 0 && id.dim <= truncation_ && id.index >= 0 &&
         static_cast<std::size_t>(id.index) < cells_[static_cast<std::size_t>(id.dim)].size();
}

std::string Presentation::render(const SimplexExpr& e) const {
  if (e.word.empty()) return name(e.base);
  return e.word.to_string() + " . " + name(e.base);
}

std::string Presentation::compact(const SimplexExpr& e) const {
  std::string out;
  for (int i : e.word.indices()) out += 's' + std::to_string(i);
  if (!out.empty()) out += '.';
  return out + name(e.base);
}

SimplexExpr face(const Presentation& s, int i, const SimplexExpr& e) {
  const int n = e.dim();
  if (n < 1) throw InputError("face of a vertex is undefined");
  if (i < 0 || i > n) {
    throw InputError("face index " + std::to_string(i) + " out of range for dimension " + std::to_string(n));
  }
  if (!s.has(e.base)) throw InputError("face: simplex does not belong to the presentation");

  const auto& w = e.word.indices();
  std::vector<int> emitted;
  emitted.reserve(w.size());
  int d = i;
  for (std::size_t k = 0; k < w.size(); ++k) {
    const int j = w[k];
    if (d < j) {
      emitted.push_back(j - 1);  // d_i s_j = s_{j-1} d_i
    } else if (d == j || d == j + 1) {
      emitted.insert(emitted.end(), w.begin() + static_cast<std::ptrdiff_t>(k) + 1, w.end());
      return SimplexExpr(normalize_word(emitted, e.base.dim), e.base);
    } else {
      emitted.push_back(j);  // d_i s_j = s_j d_{i-1}
      --d;
    }
  }
  const SimplexExpr& stored = s.faces(e.base).at(static_cast<std::size_t>(d));
  emitted.insert(emitted.end(), stored.word.indices().begin(), stored.word.indices().end());
  return SimplexExpr(normalize_word(emitted, stored.base.dim), stored.base);
}

SimplexExpr degenerate(const Presentation& s, int i, const SimplexExpr& e) {
  const int n = e.dim();
  if (i < 0 || i > n) {
    throw InputError("degeneracy index " + std::to_string(i) + " out of range for dimension " + std::to_string(n));
  }
  if (!s.knows_dimension(n + 1)) {
    throw TruncationError("degeneracy into dimension " + std::to_string(n + 1) + " exceeds truncation " +
                          std::to_string(s.truncation()));
  }
  std::vector<int> raw{i};
  raw.insert(raw.end(), e.word.indices().begin(), e.word.indices().end());
  return SimplexExpr(normalize_word(raw, e.base.dim), e.base);
}

namespace {

// All t-subsets of {0, ..., n-1}, each listed in decreasing order, sorted
// lexicographically.
std::vector<DegeneracyWord> words_of_length(int n, int t) {
  std::vector<DegeneracyWord> out;
  if (t < 0 || t > n) return out;
  std::vector<int> pick;
  std::function<void(int)> rec = [&](int upper) {
    if (static_cast<int>(pick.size()) == t) {
      out.emplace_back(pick);
      return;
    }
    for (int v = 0; v < upper; ++v) {
      pick.push_back(v);
      rec(v);
      pick.pop_back();
    }
  };
  // Leading index ranges over [t-1, n-1]; rec(n) emits them in increasing order.
  rec(n);
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::size_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
  return r;
}

}  // namespace

std::vector<SimplexExpr> enumerate_simplices(const Presentation& s, int n) {
  if (n < 0) throw InputError("negative dimension");
  if (!s.knows_dimension(n)) {
    throw TruncationError("dimension " + std::to_string(n) + " exceeds truncation " + std::to_string(s.truncation()));
  }
  std::vector<SimplexExpr> out;
  const int top = std::min(n, s.top_dimension());
  for (int m = 0; m <= top; ++m) {
    const auto words = words_of_length(n, n - m);
    for (const SimplexId& b : s.simplices(m))
      for (const DegeneracyWord& w : words) out.emplace_back(w, b);
  }
  return out;
}

std::size_t count_simplices(const Presentation& s, int n) {
  std::size_t total = 0;
  for (int m = 0; m <= std::min(n, s.top_dimension()); ++m) total += s.count(m) * binomial(n, n - m);
  return total;
}

ValidationReport validate(const Presentation& s) {
  ValidationReport report;
  auto fail = [&](SimplexId x, int i, int j, std::string msg) {
    report.pass = false;
    report.simplex = x;
    report.i = i;
    report.j = j;
    report.message = std::move(msg);
    return report;
  };

  for (int n = 2; n <= s.top_dimension(); ++n) {
    for (const SimplexId& x : s.simplices(n)) {
      const SimplexExpr ex(x);
      for (int j = 1; j <= n; ++j) {
        for (int i = 0; i < j; ++i) {
          const SimplexExpr lhs = face(s, i, face(s, j, ex));
          const SimplexExpr rhs = face(s, j - 1, face(s, i, ex));
          if (lhs != rhs) {
            return fail(x, i, j,
                        "simplicial identity d" + std::to_string(i) + " d" + std::to_string(j) + " = d" +
                            std::to_string(j - 1) + " d" + std::to_string(i) + " fails on '" + s.name(x) +
                            "': " + s.render(lhs) + " != " + s.render(rhs));
          }
        }
      }
    }
  }

  // Spot checks of the families involving degeneracies.
  std::mt19937 rng(0x5eed);
  const int max_dim = std::min(s.top_dimension() + 1, s.bound() - 1);
  for (int n = 0; n <= max_dim; ++n) {
    const auto all = enumerate_simplices(s, n);
    if (all.empty()) continue;
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    const std::size_t samples = std::min<std::size_t>(all.size(), 24);
    for (std::size_t k = 0; k < samples; ++k) {
      const SimplexExpr& e = all.size() <= 24 ? all[k] : all[pick(rng)];
      for (int j = 0; j <= n; ++j) {
        const SimplexExpr up = degenerate(s, j, e);
        for (int i = 0; i <= n + 1; ++i) {
          const SimplexExpr lhs = face(s, i, up);
          SimplexExpr rhs;
          if (i == j || i == j + 1) {
            rhs = e;
          } else if (i < j) {
            rhs = degenerate(s, j - 1, face(s, i, e));
          } else {
            rhs = degenerate(s, j, face(s, i - 1, e));
          }
          if (lhs != rhs) {
            return fail(e.base, i, j,
                        "identity d" + std::to_string(i) + " s" + std::to_string(j) + " fails on " + s.render(e));
          }
        }
      }
    }
  }
  report.message = "pass";
  return report;
}

const SimplexExpr& SimplicialMap::at(SimplexId x) const {
  if (x.dim < 0 || static_cast<std::size_t>(x.dim) >= assignment.size() || x.index < 0 ||
      static_cast<std::size_t>(x.index) >= assignment[static_cast<std::size_t>(x.dim)].size()) {
    throw InputError("simplicial map: no image for simplex (" + std::to_string(x.dim) + "," +
                     std::to_string(x.index) + ")");
  }
  return assignment[static_cast<std::size_t>(x.dim)][static_cast<std::size_t>(x.index)];
}

SimplicialMap identity_map(PresentationPtr s) {
  SimplicialMap f{s, s, {}};
  for (int n = 0; n <= s->top_dimension(); ++n) {
    f.assignment.emplace_back();
    for (const SimplexId& x : s->simplices(n)) f.assignment.back().emplace_back(x);
  }
  return f;
}

SimplexExpr apply_map(const SimplicialMap& f, const SimplexExpr& e) {
  if (!f.source->has(e.base)) throw InputError("apply_map: simplex is not in the source");
  const SimplexExpr& image = f.at(e.base);
  if (e.word.empty()) return image;
  std::vector<int> raw(e.word.indices());
  raw.insert(raw.end(), image.word.indices().begin(), image.word.indices().end());
  return SimplexExpr(normalize_word(raw, image.base.dim), image.base);
}

ValidationReport validate_map(const SimplicialMap& f) {
  ValidationReport report;
  const Presentation& a = *f.source;
  const Presentation& b = *f.target;
  for (int n = 0; n <= a.top_dimension(); ++n) {
    for (const SimplexId& x : a.simplices(n)) {
      if (static_cast<std::size_t>(n) >= f.assignment.size() ||
          static_cast<std::size_t>(x.index) >= f.assignment[static_cast<std::size_t>(n)].size()) {
        report.pass = false;
        report.simplex = x;
        report.message = "no image for '" + a.name(x) + "'";
        return report;
      }
      const SimplexExpr& y = f.at(x);
      if (!b.has(y.base) || y.dim() != n) {
        report.pass = false;
        report.simplex = x;
        report.message = "image of '" + a.name(x) + "' is not a " + std::to_string(n) + "-simplex of the target";
        return report;
      }
      if (n == 0) continue;
      for (int i = 0; i <= n; ++i) {
        const SimplexExpr lhs = face(b, i, y);
        const SimplexExpr rhs = apply_map(f, face(a, i, SimplexExpr(x)));
        if (lhs != rhs) {
          report.pass = false;
          report.simplex = x;
          report.i = i;
          report.message = "face d" + std::to_string(i) + " does not commute at '" + a.name(x) + "': " +
                           b.render(lhs) + " != " + b.render(rhs);
          return report;
        }
      }
    }
  }
  report.message = "pass";
  return report;
}

SimplicialMap compose_maps(const SimplicialMap& g, const SimplicialMap& f) {
  if (f.target != g.source && !(f.target && g.source && *f.target == *g.source)) {
    throw InputError("compose_maps: maps are not composable");
  }
  SimplicialMap out{f.source, g.target, f.assignment};
  for (auto& level : out.assignment)
    for (auto& e : level) e = apply_map(g, e);
  return out;
}

std::vector<SimplicialMap> enumerate_maps(PresentationPtr a, PresentationPtr b, SearchLimits limits) {
  const int top = a->top_dimension();
  std::vector<std::vector<SimplexExpr>> vertices_by_dim(static_cast<std::size_t>(std::max(top, 0)) + 1);
  std::vector<std::map<std::vector<SimplexExpr>, std::vector<SimplexExpr>>> by_faces(vertices_by_dim.size());
  for (int n = 0; n <= top; ++n) {
    if (!b->knows_dimension(n)) {
      throw TruncationError("target truncation " + std::to_string(b->truncation()) + " does not reach dimension " +
                            std::to_string(n) + " of the source");
    }
    auto all = enumerate_simplices(*b, n);
    if (n == 0) {
      vertices_by_dim[0] = std::move(all);
      continue;
    }
    for (auto& y : all) {
      std::vector<SimplexExpr> key;
      for (int i = 0; i <= n; ++i) key.push_back(face(*b, i, y));
      by_faces[static_cast<std::size_t>(n)][key].push_back(std::move(y));
    }
  }

  std::vector<SimplexId> order;
  for (int n = 0; n <= top; ++n)
    for (const SimplexId& x : a->simplices(n)) order.push_back(x);

  SimplicialMap partial{a, b, {}};
  for (int n = 0; n <= top; ++n) partial.assignment.emplace_back(a->count(n));

  std::vector<SimplicialMap> out;
  std::size_t explored = 0;
  const std::vector<SimplexExpr> none;
  std::function<void(std::size_t)> place = [&](std::size_t k) {
    if (k == order.size()) {
      out.push_back(partial);
      return;
    }
    const SimplexId x = order[k];
    const std::vector<SimplexExpr>* candidates = &vertices_by_dim[0];
    if (x.dim > 0) {
      std::vector<SimplexExpr> key;
      for (const SimplexExpr& f : a->faces(x)) key.push_back(apply_map(partial, f));
      const auto& table = by_faces[static_cast<std::size_t>(x.dim)];
      auto it = table.find(key);
      candidates = it == table.end() ? &none : &it->second;
    }
    for (const SimplexExpr& y : *candidates) {
      if (++explored > limits.cap) {
        throw ResourceError("map enumeration exceeded the cap of " + std::to_string(limits.cap) +
                                " candidates (" + std::to_string(out.size()) + " maps found so far)",
                            explored);
      }
      partial.assignment[static_cast<std::size_t>(x.dim)][static_cast<std::size_t>(x.index)] = y;
      place(k + 1);
    }
  };
  place(0);
  return out;
}

}  // namespace sset
