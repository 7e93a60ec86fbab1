#include "sset/simplex.hpp"

#include <algorithm>

#include "sset/error.hpp"

namespace sset {

DegeneracyWord::DegeneracyWord(std::vector<int> indices) : indices_(std::move(indices)) {
  for (std::size_t k = 0; k < indices_.size(); ++k) {
    if (indices_[k] < 0) throw InputError("degeneracy word: negative index");
    if (k > 0 && indices_[k] >= indices_[k - 1]) {
      throw InputError("degeneracy word: indices must be strictly decreasing");
    }
  }
}

bool DegeneracyWord::contains(int index) const noexcept {
  return std::find(indices_.begin(), indices_.end(), index) != indices_.end();
}

std::string DegeneracyWord::to_string() const {
  std::string out;
  for (int i : indices_) {
    if (!out.empty()) out += ' ';
    out += 's' + std::to_string(i);
  }
  return out;
}

DegeneracyWord normalize_word(std::span<const int> raw, int base_dim) {
  const std::size_t t = raw.size();
  for (std::size_t k = 0; k < t; ++k) {
    // Letter k (outermost first) acts on dimension base_dim + (t-1-k).
    const int acts_on = base_dim + static_cast<int>(t - 1 - k);
    if (raw[k] < 0 || raw[k] > acts_on) {
      throw InputError("degeneracy s" + std::to_string(raw[k]) + " is not defined in dimension " +
                       std::to_string(acts_on));
    }
  }
  std::vector<int> w(raw.begin(), raw.end());
  // Bubble with s_a s_b -> s_{b+1} s_a whenever a <= b.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k + 1 < w.size(); ++k) {
      if (w[k] <= w[k + 1]) {
        const int a = w[k];
        w[k] = w[k + 1] + 1;
        w[k + 1] = a;
        changed = true;
      }
    }
  }
  return DegeneracyWord(std::move(w));
}

MonotoneMap surjection_of(const DegeneracyWord& word, int base_dim) {
  const int n = base_dim + static_cast<int>(word.length());
  std::vector<int> values(static_cast<std::size_t>(n) + 1);
  int v = 0;
  for (int x = 0; x <= n; ++x) {
    if (x > 0 && !word.contains(x - 1)) ++v;
    values[static_cast<std::size_t>(x)] = v;
  }
  return MonotoneMap(n, base_dim, std::move(values));
}

DegeneracyWord word_of_surjection(const MonotoneMap& f) {
  if (!f.surjective()) throw InputError("word_of_surjection: map is not surjective");
  std::vector<int> idx;
  for (int j = f.domain() - 1; j >= 0; --j)
    if (f(j) == f(j + 1)) idx.push_back(j);
  return DegeneracyWord(std::move(idx));
}

DegeneracyWord total_degeneracy(int n) {
  std::vector<int> idx;
  for (int j = n - 1; j >= 0; --j) idx.push_back(j);
  return DegeneracyWord(std::move(idx));
}

SimplexExpr apply_word(const DegeneracyWord& outer, const SimplexExpr& e) {
  if (outer.empty()) return e;
  std::vector<int> raw(outer.indices());
  raw.insert(raw.end(), e.word.indices().begin(), e.word.indices().end());
  return SimplexExpr(normalize_word(raw, e.base.dim), e.base);
}

}  // namespace sset
