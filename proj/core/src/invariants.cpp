#include "sset/invariants.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <sstream>
#include <utility>

#include "sset/error.hpp"
#include "sset/kan.hpp"

namespace sset {

// ---------------------------------------------------------------- matrices

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long long>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InputError("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
  return m;
}

bool IntMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Integer& x) { return x == 0; });
}

Integer IntMatrix::determinant() const {
  if (rows_ != cols_) throw InputError("determinant of a non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return 1;
  IntMatrix a = *this;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(p, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::string IntMatrix::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) out << ", ";
    out << '[';
    for (std::size_t c = 0; c < cols_; ++c) out << (c ? ", " : "") << (*this)(r, c);
    out << ']';
  }
  out << ']';
  return out.str();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw InputError("matrix dimensions do not match");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += x * b(k, j);
    }
  return c;
}

// ---------------------------------------------------------------- Smith normal form

namespace {

std::atomic<bool> g_snf_self_check{false};

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}

// row[dst] += q * row[src]
void add_row(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(dst, c) += q * m(src, c);
}

void add_col(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, dst) += q * m(r, src);
}

// (row i, row j) <- (x row i + y row j, p row i + q row j)
void mix_rows(IntMatrix& m, std::size_t i, std::size_t j, const Integer& x, const Integer& y, const Integer& p,
              const Integer& q) {
  for (std::size_t c = 0; c < m.cols(); ++c) {
    const Integer a = m(i, c), b = m(j, c);
    m(i, c) = x * a + y * b;
    m(j, c) = p * a + q * b;
  }
}

void mix_cols(IntMatrix& m, std::size_t i, std::size_t j, const Integer& x, const Integer& y, const Integer& p,
              const Integer& q) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const Integer a = m(r, i), b = m(r, j);
    m(r, i) = x * a + y * b;
    m(r, j) = p * a + q * b;
  }
}

struct Bezout {
  Integer g, x, y;  // x a + y b = g
};

Bezout bezout(Integer a, Integer b) {
  Integer x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    const Integer q = a / b;
    Integer t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
    t = y0 - q * y1;
    y0 = y1;
    y1 = t;
  }
  return {a, x0, y0};
}

}  // namespace

void set_snf_self_check(bool enabled) { g_snf_self_check = enabled; }

std::vector<Integer> SmithNormalForm::invariants() const {
  std::vector<Integer> out;
  for (std::size_t k = 0; k < std::min(d.rows(), d.cols()); ++k)
    if (d(k, k) != 0) out.push_back(d(k, k));
  return out;
}

SmithNormalForm smith_normal_form(const IntMatrix& m) {
  IntMatrix d = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  IntMatrix v = IntMatrix::identity(m.cols());
  const std::size_t rows = m.rows(), cols = m.cols();

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // Smallest non-zero entry of the remaining block becomes the pivot.
    std::optional<std::pair<std::size_t, std::size_t>> pivot;
    for (std::size_t r = t; r < rows; ++r)
      for (std::size_t c = t; c < cols; ++c)
        if (d(r, c) != 0 && (!pivot || abs(d(r, c)) < abs(d(pivot->first, pivot->second)))) pivot = {{r, c}};
    if (!pivot) break;
    swap_rows(d, t, pivot->first);
    swap_rows(u, t, pivot->first);
    swap_cols(d, t, pivot->second);
    swap_cols(v, t, pivot->second);

    // Clear row and column t with unimodular 2x2 steps; the pivot only ever
    // shrinks to a gcd, so this terminates.
    while (true) {
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (d(r, t) == 0) continue;
        const Integer a = d(t, t), b = d(r, t);
        if (b % a == 0) {
          add_row(d, r, t, -(b / a));
          add_row(u, r, t, -(b / a));
        } else {
          const Bezout e = bezout(a, b);
          mix_rows(d, t, r, e.x, e.y, -(b / e.g), a / e.g);
          mix_rows(u, t, r, e.x, e.y, -(b / e.g), a / e.g);
        }
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (d(t, c) == 0) continue;
        const Integer a = d(t, t), b = d(t, c);
        if (b % a == 0) {
          add_col(d, c, t, -(b / a));
          add_col(v, c, t, -(b / a));
        } else {
          const Bezout e = bezout(a, b);
          mix_cols(d, t, c, e.x, e.y, -(b / e.g), a / e.g);
          mix_cols(v, t, c, e.x, e.y, -(b / e.g), a / e.g);
        }
      }
      bool clear = true;
      for (std::size_t r = t + 1; r < rows && clear; ++r) clear = d(r, t) == 0;
      if (!clear) continue;
      // Divisibility: pull an offending row into the pivot row and go again.
      bool divides = true;
      for (std::size_t r = t + 1; r < rows && divides; ++r)
        for (std::size_t c = t + 1; c < cols && divides; ++c)
          if (d(r, c) % d(t, t) != 0) {
            add_row(d, t, r, 1);
            add_row(u, t, r, 1);
            divides = false;
          }
      if (divides) break;
    }
    if (d(t, t) < 0) {
      add_row(d, t, t, -2);
      add_row(u, t, t, -2);
    }
  }

  SmithNormalForm out{std::move(d), std::move(u), std::move(v)};
  if (g_snf_self_check) {
    if (out.u * m * out.v != out.d) throw Error("Smith normal form self-check failed: U·M·V != D");
    const auto inv = out.invariants();
    for (std::size_t k = 0; k + 1 < inv.size(); ++k)
      if (inv[k + 1] % inv[k] != 0) throw Error("Smith normal form self-check failed: divisibility");
    if (abs(out.u.determinant()) != 1 || abs(out.v.determinant()) != 1) {
      throw Error("Smith normal form self-check failed: transform not unimodular");
    }
  }
  return out;
}

// ---------------------------------------------------------------- abelian groups

std::string AbelianDecomposition::to_string() const {
  std::vector<std::string> parts;
  if (free_rank == 1) parts.emplace_back("Z");
  if (free_rank > 1) parts.push_back("Z^" + std::to_string(free_rank));
  for (const auto& t : torsion) parts.push_back("Z/" + t.str());
  if (parts.empty()) return "0";
  std::string out = parts.front();
  for (std::size_t k = 1; k < parts.size(); ++k) out += " + " + parts[k];
  return out;
}

AbelianDecomposition cokernel(const IntMatrix& m) {
  const auto inv = smith_normal_form(m).invariants();
  AbelianDecomposition a;
  a.free_rank = m.rows() - inv.size();
  for (const auto& x : inv)
    if (x > 1) a.torsion.push_back(x);
  return a;
}

// ---------------------------------------------------------------- homology

IntMatrix boundary_matrix(const Presentation& s, int n) {
  if (n < 1) throw InputError("boundary matrix needs n >= 1");
  if (!s.knows_dimension(n)) {
    throw TruncationError("dimension " + std::to_string(n) + " exceeds truncation " + std::to_string(s.truncation()));
  }
  IntMatrix m(s.count(n - 1), s.count(n));
  for (std::size_t c = 0; c < s.count(n); ++c) {
    const auto& faces = s.faces(SimplexId{n, static_cast<int>(c)});
    for (std::size_t i = 0; i < faces.size(); ++i) {
      if (faces[i].degenerate()) continue;
      m(static_cast<std::size_t>(faces[i].base.index), c) += (i % 2 == 0) ? 1 : -1;
    }
  }
  return m;
}

HomologyResult homology(const Presentation& s, int n) {
  if (n < 0) throw InputError("homology degree must be non-negative");
  if (!s.knows_dimension(n)) {
    throw TruncationError("degree " + std::to_string(n) + " exceeds truncation " + std::to_string(s.truncation()));
  }
  HomologyResult r;
  const std::size_t chains = s.count(n);
  const std::size_t rank_out = n == 0 ? 0 : smith_normal_form(boundary_matrix(s, n)).rank();
  std::vector<Integer> incoming;
  if (s.knows_dimension(n + 1)) {
    incoming = smith_normal_form(boundary_matrix(s, n + 1)).invariants();
  }
  r.truncation_boundary = !s.knows_dimension(n + 1);
  r.group.free_rank = chains - rank_out - incoming.size();
  for (const auto& x : incoming)
    if (x > 1) r.group.torsion.push_back(x);
  return r;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  // The smaller root wins, so each root is the least member of its class.
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent[static_cast<std::size_t>(b)] = a;
  }
};

}  // namespace

std::vector<std::vector<int>> pi0(const Presentation& s) {
  const std::size_t v = s.count(0);
  UnionFind uf(v);
  if (s.truncation() >= 1) {
    for (const SimplexId e : s.simplices(1)) {
      const auto& f = s.faces(e);
      uf.unite(f[0].base.index, f[1].base.index);
    }
  }
  std::vector<std::vector<int>> classes;
  std::vector<int> slot(v, -1);
  for (std::size_t x = 0; x < v; ++x) {
    const int root = uf.find(static_cast<int>(x));
    if (slot[static_cast<std::size_t>(root)] < 0) {
      slot[static_cast<std::size_t>(root)] = static_cast<int>(classes.size());
      classes.emplace_back();
    }
    classes[static_cast<std::size_t>(slot[static_cast<std::size_t>(root)])].push_back(static_cast<int>(x));
  }
  return classes;
}

long long euler_characteristic(const Presentation& s) {
  if (s.open()) {
    throw TruncationError("presentation is a truncation of an infinite-dimensional object; "
                          "its Euler characteristic is not determined");
  }
  long long chi = 0;
  for (int n = 0; n <= s.truncation(); ++n) {
    chi += (n % 2 == 0 ? 1 : -1) * static_cast<long long>(s.count(n));
  }
  return chi;
}

// ---------------------------------------------------------------- fundamental group

std::string GroupPresentation::to_string() const {
  std::string out = "<";
  for (std::size_t g = 0; g < generators.size(); ++g) out += (g ? ", " : "") + generators[g];
  out += " |";
  for (std::size_t r = 0; r < relators.size(); ++r) {
    out += r ? ", " : " ";
    for (std::size_t k = 0; k < relators[r].size(); ++k) {
      if (k) out += ' ';
      out += generators[static_cast<std::size_t>(relators[r][k].generator)];
      if (relators[r][k].inverse) out += "^-1";
    }
  }
  return out + ">";
}

GroupPresentation pi1_presentation(const Presentation& s, int base_vertex) {
  if (!s.knows_dimension(2)) {
    throw TruncationError("fundamental group needs dimension 2, truncation is " + std::to_string(s.truncation()));
  }
  if (base_vertex < 0 || static_cast<std::size_t>(base_vertex) >= s.count(0)) {
    throw InputError("base vertex out of range");
  }
  const auto components = pi0(s);
  if (components.size() != 1) {
    std::string parts;
    for (const auto& c : components) {
      parts += " {";
      for (std::size_t k = 0; k < c.size(); ++k) parts += (k ? " " : "") + s.name(SimplexId{0, c[k]});
      parts += "}";
    }
    throw InputError("presentation is not connected:" + parts);
  }

  GroupPresentation p;
  const std::size_t edges = s.count(1);
  for (std::size_t e = 0; e < edges; ++e) p.generators.push_back(s.name(SimplexId{1, static_cast<int>(e)}));

  for (const SimplexId sigma : s.simplices(2)) {
    const auto& f = s.faces(sigma);
    GroupWord w;
    for (int i : {0, 2})
      if (!f[static_cast<std::size_t>(i)].degenerate()) w.push_back({f[static_cast<std::size_t>(i)].base.index, false});
    if (!f[1].degenerate()) w.push_back({f[1].base.index, true});
    if (!w.empty()) p.relators.push_back(std::move(w));
  }

  // Breadth-first spanning tree; each vertex scans its incident edges in index order.
  std::vector<std::vector<std::pair<int, int>>> incident(s.count(0));
  for (std::size_t e = 0; e < edges; ++e) {
    const auto& f = s.faces(SimplexId{1, static_cast<int>(e)});
    const int a = f[1].base.index, b = f[0].base.index;
    if (a == b) continue;
    incident[static_cast<std::size_t>(a)].emplace_back(static_cast<int>(e), b);
    incident[static_cast<std::size_t>(b)].emplace_back(static_cast<int>(e), a);
  }
  std::vector<bool> seen(s.count(0), false);
  std::vector<int> queue{base_vertex};
  seen[static_cast<std::size_t>(base_vertex)] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto& [e, w] : incident[static_cast<std::size_t>(queue[head])]) {
      if (seen[static_cast<std::size_t>(w)]) continue;
      seen[static_cast<std::size_t>(w)] = true;
      queue.push_back(w);
      p.relators.push_back({{e, false}});
    }
  }
  return p;
}

AbelianDecomposition abelianize(const GroupPresentation& p) {
  // Columns are relators, so the group is the cokernel of the exponent matrix.
  IntMatrix m(p.generators.size(), p.relators.size());
  for (std::size_t r = 0; r < p.relators.size(); ++r)
    for (const GroupLetter& l : p.relators[r]) {
      if (l.generator < 0 || static_cast<std::size_t>(l.generator) >= p.generators.size()) {
        throw InputError("relator uses an undeclared generator");
      }
      m(static_cast<std::size_t>(l.generator), r) += l.inverse ? -1 : 1;
    }
  return cokernel(m);
}

// ---------------------------------------------------------------- homotopies

HomotopyReport verify_homotopy(const HomotopyCertificate& cert) {
  auto fail = [](std::string message) { return HomotopyReport{false, std::move(message)}; };
  if (!cert.domain) return fail("certificate has no domain product");
  const ProductSet& dom = *cert.domain;
  if (!cert.h.source || *cert.h.source != *dom.presentation) return fail("h is not defined on the domain product");
  if (!cert.f0.source || !cert.f1.source || *cert.f0.source != *dom.left || *cert.f1.source != *dom.left) {
    return fail("endpoint maps are not defined on the left factor");
  }
  if (*cert.f0.target != *cert.h.target || *cert.f1.target != *cert.h.target) {
    return fail("endpoint maps and h have different targets");
  }
  if (dom.right->count(0) != 2 || dom.right->count(1) != 1 || dom.right->top_dimension() != 1) {
    return fail("right factor of the domain is not Δ¹");
  }
  if (auto r = validate_map(cert.h); !r.pass) return fail("h is not simplicial: " + r.message);
  if (auto r = validate_map(cert.f0); !r.pass) return fail("f0 is not simplicial: " + r.message);
  if (auto r = validate_map(cert.f1); !r.pass) return fail("f1 is not simplicial: " + r.message);

  const Presentation& s = *dom.left;
  const int top = s.top_dimension();
  for (int n = 0; n <= top; ++n) {
    for (const SimplexId x : s.simplices(n)) {
      for (int vertex : {0, 1}) {
        const SimplexExpr constant(total_degeneracy(n), SimplexId{0, vertex});
        const SimplexExpr image = apply_map(cert.h, dom.locate(SimplexExpr(x), constant));
        const SimplicialMap& f = vertex == 0 ? cert.f0 : cert.f1;
        if (image != f.at(x)) {
          return fail(std::string(vertex == 0 ? "restriction along id x d1 differs from f0" : "restriction along id x d0 differs from f1") +
                      " at " + s.name(x) + ": " + cert.h.target->render(image) + " vs " +
                      cert.h.target->render(f.at(x)));
        }
      }
    }
  }
  return {true, "pass"};
}

HomotopyCertificate constant_homotopy(const SimplicialMap& f) {
  auto domain = std::make_shared<const ProductSet>(product_set(f.source, share(standard_simplex(1))));
  SimplicialMap h = compose_maps(f, projection(*domain, 0));
  return {domain, std::move(h), f, f};
}

// ---------------------------------------------------------------- higher homotopy

PiNClasses pi_n_classes(const Presentation& k, int base_vertex, int n, SearchLimits limits) {
  if (n < 1) throw InputError("pi_n needs n >= 1");
  if (base_vertex < 0 || static_cast<std::size_t>(base_vertex) >= k.count(0)) {
    throw InputError("base vertex out of range");
  }
  if (!k.knows_dimension(n + 1)) {
    throw TruncationError("pi_" + std::to_string(n) + " needs dimension " + std::to_string(n + 1) +
                          ", truncation is " + std::to_string(k.truncation()));
  }
  const KanReport kan = kan_report(k, KanOptions{n + 1, false, limits});
  if (!kan.pass) {
    throw InputError("complex is not Kan up to dimension " + std::to_string(n + 1) +
                     "; homotopy classes are not well defined");
  }

  const SimplexId v{0, base_vertex};
  auto at_base = [&](int dim) { return SimplexExpr(total_degeneracy(dim), v); };
  auto spherical = [&](const SimplexExpr& x, int dim, int skip_from) {
    const SimplexExpr b = at_base(dim - 1);
    for (int i = 0; i < skip_from; ++i)
      if (face(k, i, x) != b) return false;
    return true;
  };

  std::vector<SimplexExpr> candidates;
  for (const SimplexExpr& x : enumerate_simplices(k, n))
    if (spherical(x, n, n + 1)) candidates.push_back(x);

  UnionFind uf(candidates.size());
  auto index_of = [&](const SimplexExpr& e) -> int {
    auto it = std::lower_bound(candidates.begin(), candidates.end(), e);
    return it != candidates.end() && *it == e ? static_cast<int>(it - candidates.begin()) : -1;
  };
  for (const SimplexExpr& w : enumerate_simplices(k, n + 1)) {
    if (!spherical(w, n + 1, n)) continue;
    const int a = index_of(face(k, n, w));
    const int b = index_of(face(k, n + 1, w));
    if (a >= 0 && b >= 0) uf.unite(a, b);
  }

  PiNClasses out;
  out.candidates = candidates.size();
  for (std::size_t c = 0; c < candidates.size(); ++c)
    if (uf.find(static_cast<int>(c)) == static_cast<int>(c)) out.representatives.push_back(candidates[c]);
  out.count = out.representatives.size();
  return out;
}

}  // namespace sset
