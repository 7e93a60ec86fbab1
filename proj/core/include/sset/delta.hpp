#pragma once

// The simplex category: finite ordinals [n] = {0 < 1 < ... < n} and the
// non-decreasing maps between them.

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sset {

class MonotoneMap {
 public:
  // Throws InputError unless values has length domain+1, is non-decreasing
  // and bounded by codomain.
  MonotoneMap(int domain, int codomain, std::vector<int> values);

  static MonotoneMap identity(int n);
  // d^i : [n-1] -> [n], skips i.
  static MonotoneMap coface(int n, int i);
  // s^i : [n+1] -> [n], repeats i.
  static MonotoneMap codegeneracy(int n, int i);

  int domain() const noexcept { return domain_; }
  int codomain() const noexcept { return codomain_; }
  std::span<const int> values() const noexcept { return values_; }
  int operator()(int x) const { return values_.at(static_cast<std::size_t>(x)); }

  bool injective() const;
  bool surjective() const;

  std::string to_string() const;

  bool operator==(const MonotoneMap&) const = default;

 private:
  int domain_;
  int codomain_;
  std::vector<int> values_;
};

// f∘g (g applied first). Throws InputError when codomain(g) != domain(f).
MonotoneMap compose(const MonotoneMap& f, const MonotoneMap& g);

// Every monotone map [m] -> [n], in lexicographic order of value sequences.
std::vector<MonotoneMap> enumerate_monotone_maps(int m, int n);

enum class Generator { coface, codegeneracy };

struct Letter {
  Generator kind;
  int index;
  int domain;
  int codomain;

  bool operator==(const Letter&) const = default;
};

// A formal composite of cofaces and codegeneracies, stored in written order:
// letters.front() is outermost and is applied last. Consecutive letters are
// compatible: letters[k].domain == letters[k+1].codomain.
class OperatorWord {
 public:
  // Empty word on [n] (the identity).
  explicit OperatorWord(int n);
  OperatorWord(int domain, int codomain, std::vector<Letter> letters);

  int domain() const noexcept { return domain_; }
  int codomain() const noexcept { return codomain_; }
  const std::vector<Letter>& letters() const noexcept { return letters_; }
  bool empty() const noexcept { return letters_.empty(); }

  MonotoneMap evaluate() const;
  // e.g. "d2 d1 s0"; "id" for the empty word.
  std::string to_string() const;

  bool operator==(const OperatorWord&) const = default;

 private:
  int domain_;
  int codomain_;
  std::vector<Letter> letters_;
};

// Canonical d^{i_s}...d^{i_1} s^{j_1}...s^{j_t} with i_1 < ... < i_s the
// complement of the image and j_1 < ... < j_t the positions where f(j) = f(j+1).
OperatorWord epi_mono_factorize(const MonotoneMap& f);

// Source of cofaces and codegeneracies used by the identity checker; tests
// swap individual entries to inject faults.
struct CosimplicialTables {
  std::function<MonotoneMap(int n, int i)> coface = MonotoneMap::coface;
  std::function<MonotoneMap(int n, int i)> codegeneracy = MonotoneMap::codegeneracy;
};

struct IdentityViolation {
  int family;  // 1..5 in the order d d, s d (i<j), s d = id, s d (i>j+1), s s
  int n;       // codomain dimension of the composite
  int i;
  int j;
  std::string description;
};

struct IdentityReport {
  bool pass = true;
  std::array<std::size_t, 5> instances{};  // per family
  std::optional<IdentityViolation> violation;

  std::size_t total_instances() const;
};

// Checks the five cosimplicial identity families by pointwise evaluation for
// every composite whose codomain is [n], 1 <= n <= n_max. Stops at the first
// violation.
IdentityReport verify_cosimplicial_identities(int n_max,
                                              const CosimplicialTables& tables = {});

}  // namespace sset
