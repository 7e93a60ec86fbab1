#pragma once

// Finitely presented, dimension-truncated simplicial sets.
//
// A presentation lists the non-degenerate simplices of each dimension up to
// its truncation N together with their face tables. Every simplex is then a
// unique normal-form degeneracy word applied to a non-degenerate one, so all
// of X_n is described by SimplexExpr values.
//
// A presentation is either complete (nothing non-degenerate exists above N,
// so every X_n is known) or open (a truncation of a larger object: X_n is
// only known for n <= N).

#include <climits>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sset/simplex.hpp"

namespace sset {

// Names are whitespace-free tokens that avoid the format's punctuation
// `[ ] , = ; #`, are not "." and do not look like a degeneracy letter s<k>.
bool is_valid_name(std::string_view name);

class Presentation {
 public:
  explicit Presentation(int truncation = 0, bool open = false);

  int truncation() const noexcept { return truncation_; }
  bool open() const noexcept { return open_; }
  // Largest n for which X_n is fully known.
  int bound() const noexcept { return open_ ? truncation_ : INT_MAX; }
  bool knows_dimension(int n) const noexcept { return n <= bound(); }

  // Highest dimension holding a non-degenerate simplex, -1 when empty.
  int top_dimension() const noexcept;
  std::size_t count(int dim) const noexcept;
  // Non-degenerate counts for dimensions 0..truncation.
  std::vector<std::size_t> counts() const;

  // Adds a non-degenerate simplex. For dim >= 1, faces holds d_0 x, ..., d_dim x.
  // Throws InputError on a bad name, duplicate, dimension mismatch or a face
  // that refers to an unknown simplex.
  SimplexId add_simplex(int dim, std::string name, std::vector<SimplexExpr> faces = {});
  // Replaces one stored face; used to build deliberately broken fixtures.
  void set_face(SimplexId x, int i, SimplexExpr face);

  const std::string& name(SimplexId id) const;
  std::optional<SimplexId> find(int dim, std::string_view name) const;
  const std::vector<SimplexExpr>& faces(SimplexId id) const;
  std::vector<SimplexId> simplices(int dim) const;
  bool has(SimplexId id) const noexcept;

  // "s2 s0 . name" or just "name".
  std::string render(const SimplexExpr& e) const;
  // Compact single-token rendering "s2s0.name", used to build derived names.
  std::string compact(const SimplexExpr& e) const;

  bool operator==(const Presentation&) const = default;

 private:
  struct Cell {
    std::string name;
    std::vector<SimplexExpr> faces;
    bool operator==(const Cell&) const = default;
  };

  const Cell& cell(SimplexId id) const;

  int truncation_;
  bool open_;
  std::vector<std::vector<Cell>> cells_;
  std::vector<std::map<std::string, int, std::less<>>> index_;
};

using PresentationPtr = std::shared_ptr<const Presentation>;

template <typename... Args>
PresentationPtr share(Args&&... args) {
  return std::make_shared<const Presentation>(std::forward<Args>(args)...);
}

// d_i e, computed by pushing d_i through the degeneracy word with the mixed
// simplicial identities and consulting the face table at the base.
SimplexExpr face(const Presentation& s, int i, const SimplexExpr& e);

// s_i e in normal form. Throws TruncationError when the result's dimension is
// not known to the presentation.
SimplexExpr degenerate(const Presentation& s, int i, const SimplexExpr& e);

struct ValidationReport {
  bool pass = true;
  std::string message;
  std::optional<SimplexId> simplex;
  int i = -1;
  int j = -1;
};

// Checks d_i d_j = d_{j-1} d_i (i < j) on every non-degenerate simplex, then
// spot-checks the identities involving degeneracies on a fixed pseudo-random
// sample of simplices.
ValidationReport validate(const Presentation& s);

// Every simplex of dimension n in canonical order.
std::vector<SimplexExpr> enumerate_simplices(const Presentation& s, int n);
// |X_n| without materialising the simplices.
std::size_t count_simplices(const Presentation& s, int n);

struct SimplicialMap {
  PresentationPtr source;
  PresentationPtr target;
  // assignment[dim][index] is the image of the non-degenerate simplex (dim, index).
  std::vector<std::vector<SimplexExpr>> assignment;

  const SimplexExpr& at(SimplexId x) const;
  bool operator==(const SimplicialMap& other) const { return assignment == other.assignment; }
};

SimplicialMap identity_map(PresentationPtr s);

// F(w·x) = w·F(x) in normal form.
SimplexExpr apply_map(const SimplicialMap& f, const SimplexExpr& e);

// Checks that images have matching dimensions and that every face square
// commutes on non-degenerate simplices.
ValidationReport validate_map(const SimplicialMap& f);

// g∘f. Throws InputError unless f.target and g.source are the same presentation.
SimplicialMap compose_maps(const SimplicialMap& g, const SimplicialMap& f);

struct SearchLimits {
  std::size_t cap = 50'000'000;
};

// Every simplicial map A -> B, found dimension by dimension with pruning on
// face constraints. Deterministic lexicographic order of assignments.
std::vector<SimplicialMap> enumerate_maps(PresentationPtr a, PresentationPtr b, SearchLimits limits = {});

}  // namespace sset
