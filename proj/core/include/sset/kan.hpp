#pragma once

// Horns, exhaustive filler search, Kan and inner-horn verdicts up to a
// dimension bound, and edge composition/inversion through chosen fillers.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sset/presentation.hpp"

namespace sset {

// A map Λ^n_i -> S given by its n faces, listed for k = 0..n with k = i skipped.
struct HornMap {
  int n = 1;
  int i = 0;
  std::vector<SimplexExpr> faces;

  // The face opposite vertex k, k != i.
  const SimplexExpr& at(int k) const;
  // Builds a horn from a full list of n+1 faces, ignoring entry i.
  static HornMap from_full(int n, int i, const std::vector<SimplexExpr>& all);

  bool operator==(const HornMap&) const = default;
};

struct FillerCertificate {
  SimplexExpr filler;
  HornMap horn;
};

struct CompatibilityReport {
  bool pass = true;
  std::string message;
  int j = -1;
  int k = -1;
};

// face(j, faces[k]) = face(k-1, faces[j]) for all j < k different from i,
// plus shape checks (face count, dimensions, membership).
CompatibilityReport horn_compatible(const Presentation& s, const HornMap& h);

// Every n-simplex of S restricting to h, in canonical order. Throws
// InputError for an incompatible horn and TruncationError when n is beyond
// what S knows.
std::vector<FillerCertificate> find_fillers(const Presentation& s, const HornMap& h);

// The given faces of the filler match the horn exactly.
bool verify_certificate(const Presentation& s, const FillerCertificate& c);

struct KanOptions {
  int max_dim = 2;
  bool inner_only = false;
  SearchLimits limits{};
};

struct KanDimensionStats {
  int n = 0;
  std::size_t horns = 0;
  std::size_t min_fillers = 0;
  std::size_t max_fillers = 0;
};

struct KanReport {
  bool pass = true;
  int max_dim = 0;
  bool inner_only = false;
  std::size_t horns_checked = 0;
  std::size_t min_fillers = 0;
  std::size_t max_fillers = 0;
  std::vector<KanDimensionStats> per_dimension;
  // First horn without a filler, in enumeration order (n, then i, then faces
  // in canonical order).
  std::optional<HornMap> counterexample;
};

// Checks every compatible horn with 1 <= n <= max_dim. The verdict says
// nothing about dimensions above max_dim. Throws TruncationError if max_dim
// exceeds what S knows and ResourceError once more than limits.cap horns
// have been explored.
KanReport kan_report(const Presentation& s, const KanOptions& options);

struct EdgeResult {
  SimplexExpr edge;
  FillerCertificate certificate;
};

// Fills Λ^2_1 with d_2 = alpha, d_0 = beta using the canonically least filler
// and returns its d_1, a composite "beta after alpha". Throws InputError unless
// face(0, alpha) = face(1, beta) and NoFillerError when the horn has no filler.
EdgeResult compose_edges(const Presentation& k, const SimplexExpr& alpha, const SimplexExpr& beta);

// Fills Λ^2_0 with d_2 = alpha, d_1 = s_0 d_1 alpha and returns d_0, a left
// inverse of alpha.
EdgeResult edge_inverse(const Presentation& k, const SimplexExpr& alpha);

// Mirror image through Λ^2_2: d_0 = alpha, d_1 = s_0 d_0 alpha, returning d_2,
// so that alpha after the result is witnessed to be the identity on d_0 alpha.
EdgeResult edge_right_inverse(const Presentation& k, const SimplexExpr& alpha);

// "[e0, e1, _, e3]" with the missing face shown as "_".
std::string render_horn(const Presentation& s, const HornMap& h);

}  // namespace sset
