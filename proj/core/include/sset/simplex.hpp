#pragma once

// Degeneracy words in Eilenberg-Zilber normal form and the expressions
// word·base that name every simplex of a finitely presented simplicial set.

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "sset/delta.hpp"

namespace sset {

// s_{i_1} s_{i_2} ... s_{i_t} with i_1 > i_2 > ... > i_t.
class DegeneracyWord {
 public:
  DegeneracyWord() = default;
  // Throws InputError unless indices are strictly decreasing and non-negative.
  explicit DegeneracyWord(std::vector<int> indices);

  const std::vector<int>& indices() const noexcept { return indices_; }
  std::size_t length() const noexcept { return indices_.size(); }
  bool empty() const noexcept { return indices_.empty(); }
  bool contains(int index) const noexcept;

  // "s2 s0"; empty string for the empty word.
  std::string to_string() const;

  auto operator<=>(const DegeneracyWord&) const = default;

 private:
  std::vector<int> indices_;
};

// Rewrites s_{r_1} ∘ ... ∘ s_{r_t} (r_1 outermost, acting on a simplex of
// dimension base_dim) into normal form using s_i s_j = s_{j+1} s_i for i <= j.
// Throws InputError if some letter's index exceeds the dimension it acts on.
DegeneracyWord normalize_word(std::span<const int> raw, int base_dim);

// The surjection [base_dim + t] -> [base_dim] dual to a normal-form word; it
// identifies j and j+1 exactly for the indices j of the word.
MonotoneMap surjection_of(const DegeneracyWord& word, int base_dim);
// Inverse of surjection_of. Throws InputError if f is not surjective.
DegeneracyWord word_of_surjection(const MonotoneMap& f);

// Names a non-degenerate simplex by dimension and position within that dimension.
struct SimplexId {
  int dim = 0;
  int index = 0;

  auto operator<=>(const SimplexId&) const = default;
};

struct SimplexExpr {
  DegeneracyWord word;
  SimplexId base;

  SimplexExpr() = default;
  SimplexExpr(DegeneracyWord w, SimplexId b) : word(std::move(w)), base(b) {}
  // A non-degenerate simplex.
  explicit SimplexExpr(SimplexId b) : base(b) {}

  int dim() const noexcept { return base.dim + static_cast<int>(word.length()); }
  bool degenerate() const noexcept { return !word.empty(); }

  // Canonical order: base dimension, base position, then word. Lower-dimensional
  // (more degenerate) simplices come first.
  std::strong_ordering operator<=>(const SimplexExpr& other) const {
    if (auto c = base <=> other.base; c != 0) return c;
    return word <=> other.word;
  }
  bool operator==(const SimplexExpr& other) const = default;
};

// The strictly decreasing word (n-1, ..., 1, 0): the total degeneracy taking
// a vertex to dimension n.
DegeneracyWord total_degeneracy(int n);

// outer·e in normal form, with no truncation check.
SimplexExpr apply_word(const DegeneracyWord& outer, const SimplexExpr& e);

}  // namespace sset
