#pragma once

#include <cstddef>
#include <filesystem>
#include <ostream>
#include <vector>

#include "sset/format.hpp"

namespace sset {

inline void PrintTo(const IntMatrix& m, std::ostream* os) { *os << m.to_string(); }

}  // namespace sset

namespace sset::testing {

inline std::filesystem::path fixture(const char* name) { return std::filesystem::path(SSET_FIXTURE_DIR) / name; }

inline PresentationPtr load_sset(const char* name) { return parse_file(fixture(name)).sset; }

// Independent of the library: plain Pascal recurrence.
inline std::size_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::vector<std::size_t> row(static_cast<std::size_t>(k) + 1, 0);
  row[0] = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = std::min(i, k); j >= 1; --j) row[static_cast<std::size_t>(j)] += row[static_cast<std::size_t>(j) - 1];
  return row[static_cast<std::size_t>(k)];
}

// All functions {0..m} -> {0..n} as value vectors, by odometer.
inline std::vector<std::vector<int>> all_functions(int m, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> v(static_cast<std::size_t>(m) + 1, 0);
  while (true) {
    out.push_back(v);
    int p = m;
    while (p >= 0 && v[static_cast<std::size_t>(p)] == n) v[static_cast<std::size_t>(p--)] = 0;
    if (p < 0) break;
    ++v[static_cast<std::size_t>(p)];
  }
  return out;
}

inline bool non_decreasing(const std::vector<int>& v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i] < v[i - 1]) return false;
  return true;
}

inline bool strictly_increasing(const std::vector<int>& v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i] <= v[i - 1]) return false;
  return true;
}

}  // namespace sset::testing
