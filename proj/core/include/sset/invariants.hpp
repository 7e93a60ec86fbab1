#pragma once

// Invariants computed from a presentation: connected components, normalized
// simplicial homology through Smith normal form, Euler characteristic, edge-path
// presentations of the fundamental group, simplicial homotopies and bounded
// homotopy classes for Kan complexes.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sset/constructions.hpp"
#include "sset/presentation.hpp"

namespace sset {

using Integer = boost::multiprecision::cpp_int;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  // Throws InputError if the rows are ragged.
  static IntMatrix from_rows(const std::vector<std::vector<long long>>& rows);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Integer& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  bool is_zero() const;
  // Bareiss elimination; square matrices only.
  Integer determinant() const;
  std::string to_string() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

struct SmithNormalForm {
  IntMatrix d;
  IntMatrix u;
  IntMatrix v;
  // Non-zero diagonal entries of d, positive, each dividing the next.
  std::vector<Integer> invariants() const;
  std::size_t rank() const { return invariants().size(); }
};

// U·M·V = D with U, V unimodular and D diagonal with a divisibility chain.
SmithNormalForm smith_normal_form(const IntMatrix& m);
// When enabled, every smith_normal_form call re-checks its own output and
// throws Error on a mismatch.
void set_snf_self_check(bool enabled);

struct AbelianDecomposition {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;  // each >= 2, each dividing the next

  // "Z^2 + Z/2", "Z", "0".
  std::string to_string() const;
  bool operator==(const AbelianDecomposition&) const = default;
};

// Cokernel of M : Z^cols -> Z^rows.
AbelianDecomposition cokernel(const IntMatrix& m);

// ∂_n from non-degenerate n-simplices (columns) to non-degenerate
// (n-1)-simplices (rows), ∂ = Σ(-1)^i d_i with degenerate faces dropped.
IntMatrix boundary_matrix(const Presentation& s, int n);

struct HomologyResult {
  AbelianDecomposition group;
  // Set when ∂_{n+1} lies beyond the truncation of an open presentation, so
  // the value may be too large.
  bool truncation_boundary = false;
};

// H_n of the normalized chain complex. Throws TruncationError when n itself
// is beyond what an open presentation knows.
HomologyResult homology(const Presentation& s, int n);

// Vertex partition into connected components; classes are sorted and listed
// by their least vertex.
std::vector<std::vector<int>> pi0(const Presentation& s);

// Alternating sum of non-degenerate counts. Throws TruncationError for open
// presentations.
long long euler_characteristic(const Presentation& s);

struct GroupLetter {
  int generator = 0;
  bool inverse = false;
  bool operator==(const GroupLetter&) const = default;
};
using GroupWord = std::vector<GroupLetter>;

struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<GroupWord> relators;

  // "<a, b | a b a^-1, b>".
  std::string to_string() const;
};

// Generators are the non-degenerate edges. Each non-degenerate 2-simplex σ
// gives d_0σ · d_2σ · (d_1σ)^-1 with degenerate edges dropped, and each edge of
// a BFS spanning tree from base is set to 1. Throws InputError when S is not
// connected and TruncationError when S does not know dimension 2.
GroupPresentation pi1_presentation(const Presentation& s, int base_vertex);

AbelianDecomposition abelianize(const GroupPresentation& p);

// A homotopy h : S × Δ¹ -> T from f0 to f1.
struct HomotopyCertificate {
  std::shared_ptr<const ProductSet> domain;
  SimplicialMap h;
  SimplicialMap f0;
  SimplicialMap f1;
};

struct HomotopyReport {
  bool pass = true;
  std::string message;
};

// h is a simplicial map on S × Δ¹, h∘(id × d¹) = f0 and h∘(id × d⁰) = f1.
HomotopyReport verify_homotopy(const HomotopyCertificate& cert);

// The certificate h = f∘pr_1 from f to itself.
HomotopyCertificate constant_homotopy(const SimplicialMap& f);

struct PiNClasses {
  std::size_t count = 0;
  // The least member of each class, in canonical order.
  std::vector<SimplexExpr> representatives;
  std::size_t candidates = 0;
};

// Classes of n-simplices whose faces are all the degenerate base vertex, under
// α ~ α' when some (n+1)-simplex has d_n = α, d_{n+1} = α' and every other face
// degenerate at the base. Refuses with InputError unless K passes kan_report
// up to n+1.
PiNClasses pi_n_classes(const Presentation& k, int base_vertex, int n, SearchLimits limits = {});

}  // namespace sset
