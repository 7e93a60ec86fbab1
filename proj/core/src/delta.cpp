#include "sset/delta.hpp"

#include <numeric>
#include <sstream>

#include "sset/error.hpp"

namespace sset {

MonotoneMap::MonotoneMap(int domain, int codomain, std::vector<int> values)
    : domain_(domain), codomain_(codomain), values_(std::move(values)) {
  if (domain_ < 0 || codomain_ < 0) throw InputError("monotone map: negative dimension");
  if (values_.size() != static_cast<std::size_t>(domain_) + 1) {
    throw InputError("monotone map: expected " + std::to_string(domain_ + 1) + " values");
  }
  for (std::size_t k = 0; k < values_.size(); ++k) {
    if (values_[k] < 0 || values_[k] > codomain_) {
      throw InputError("monotone map: value out of range [0," + std::to_string(codomain_) + "]");
    }
    if (k > 0 && values_[k] < values_[k - 1]) {
      throw InputError("monotone map: values must be non-decreasing");
    }
  }
}

MonotoneMap MonotoneMap::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n) + 1);
  std::iota(v.begin(), v.end(), 0);
  return MonotoneMap(n, n, std::move(v));
}

MonotoneMap MonotoneMap::coface(int n, int i) {
  if (n < 1 || i < 0 || i > n) throw InputError("coface d^" + std::to_string(i) + " undefined into [" + std::to_string(n) + "]");
  std::vector<int> v;
  for (int x = 0; x < n; ++x) v.push_back(x < i ? x : x + 1);
  return MonotoneMap(n - 1, n, std::move(v));
}

MonotoneMap MonotoneMap::codegeneracy(int n, int i) {
  if (n < 0 || i < 0 || i > n) throw InputError("codegeneracy s^" + std::to_string(i) + " undefined onto [" + std::to_string(n) + "]");
  std::vector<int> v;
  for (int x = 0; x <= n + 1; ++x) v.push_back(x <= i ? x : x - 1);
  return MonotoneMap(n + 1, n, std::move(v));
}

bool MonotoneMap::injective() const {
  for (std::size_t k = 1; k < values_.size(); ++k)
    if (values_[k] == values_[k - 1]) return false;
  return true;
}

bool MonotoneMap::surjective() const {
  return values_.front() == 0 && values_.back() == codomain_ &&
         [&] {
           for (std::size_t k = 1; k < values_.size(); ++k)
             if (values_[k] > values_[k - 1] + 1) return false;
           return true;
         }();
}

std::string MonotoneMap::to_string() const {
  std::ostringstream os;
  os << "[" << domain_ << "]->[" << codomain_ << "] (";
  for (std::size_t k = 0; k < values_.size(); ++k) os << (k ? "," : "") << values_[k];
  os << ")";
  return os.str();
}

MonotoneMap compose(const MonotoneMap& f, const MonotoneMap& g) {
  if (g.codomain() != f.domain()) {
    throw InputError("compose: codomain " + std::to_string(g.codomain()) + " does not match domain " +
                     std::to_string(f.domain()));
  }
  std::vector<int> v;
  v.reserve(static_cast<std::size_t>(g.domain()) + 1);
  for (int x : g.values()) v.push_back(f(x));
  return MonotoneMap(g.domain(), f.codomain(), std::move(v));
}

std::vector<MonotoneMap> enumerate_monotone_maps(int m, int n) {
  std::vector<MonotoneMap> out;
  std::vector<int> values(static_cast<std::size_t>(m) + 1, 0);
  while (true) {
    out.emplace_back(m, n, values);
    // Next non-decreasing sequence in lexicographic order.
    int k = m;
    while (k >= 0 && values[static_cast<std::size_t>(k)] == n) --k;
    if (k < 0) break;
    const int next = values[static_cast<std::size_t>(k)] + 1;
    for (int t = k; t <= m; ++t) values[static_cast<std::size_t>(t)] = next;
  }
  return out;
}

OperatorWord::OperatorWord(int n) : domain_(n), codomain_(n) {}

OperatorWord::OperatorWord(int domain, int codomain, std::vector<Letter> letters)
    : domain_(domain), codomain_(codomain), letters_(std::move(letters)) {
  if (letters_.empty()) {
    if (domain_ != codomain_) throw InputError("operator word: empty word must be an endomorphism");
    return;
  }
  if (letters_.front().codomain != codomain_ || letters_.back().domain != domain_) {
    throw InputError("operator word: end dimensions do not match letters");
  }
  for (std::size_t k = 0; k < letters_.size(); ++k) {
    const Letter& l = letters_[k];
    const bool ok = l.kind == Generator::coface
                        ? (l.codomain == l.domain + 1 && l.index >= 0 && l.index <= l.codomain)
                        : (l.codomain + 1 == l.domain && l.index >= 0 && l.index <= l.codomain);
    if (!ok) throw InputError("operator word: malformed letter");
    if (k + 1 < letters_.size() && l.domain != letters_[k + 1].codomain) {
      throw InputError("operator word: adjacent letters are not composable");
    }
  }
}

MonotoneMap OperatorWord::evaluate() const {
  MonotoneMap acc = MonotoneMap::identity(domain_);
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    const MonotoneMap g = it->kind == Generator::coface ? MonotoneMap::coface(it->codomain, it->index)
                                                        : MonotoneMap::codegeneracy(it->codomain, it->index);
    acc = compose(g, acc);
  }
  return acc;
}

std::string OperatorWord::to_string() const {
  if (letters_.empty()) return "id";
  std::string out;
  for (const Letter& l : letters_) {
    if (!out.empty()) out += ' ';
    out += (l.kind == Generator::coface ? 'd' : 's');
    out += std::to_string(l.index);
  }
  return out;
}

OperatorWord epi_mono_factorize(const MonotoneMap& f) {
  const int m = f.domain();
  const int n = f.codomain();
  std::vector<int> collapsed;  // j with f(j) = f(j+1), ascending
  for (int j = 0; j < m; ++j)
    if (f(j) == f(j + 1)) collapsed.push_back(j);
  std::vector<bool> hit(static_cast<std::size_t>(n) + 1, false);
  for (int v : f.values()) hit[static_cast<std::size_t>(v)] = true;
  std::vector<int> missed;  // complement of the image, ascending
  for (int v = 0; v <= n; ++v)
    if (!hit[static_cast<std::size_t>(v)]) missed.push_back(v);

  const int image_dim = m - static_cast<int>(collapsed.size());
  std::vector<Letter> letters;
  // Cofaces, outermost (largest index) first.
  int cod = n;
  for (auto it = missed.rbegin(); it != missed.rend(); ++it) {
    letters.push_back({Generator::coface, *it, cod - 1, cod});
    --cod;
  }
  // Codegeneracies s^{j_1} ... s^{j_t}, smallest index outermost.
  int dom = image_dim;
  for (int j : collapsed) {
    letters.push_back({Generator::codegeneracy, j, dom + 1, dom});
    ++dom;
  }
  return OperatorWord(m, n, std::move(letters));
}

std::size_t IdentityReport::total_instances() const {
  return std::accumulate(instances.begin(), instances.end(), std::size_t{0});
}

IdentityReport verify_cosimplicial_identities(int n_max, const CosimplicialTables& tables) {
  if (n_max < 1) throw InputError("verify_cosimplicial_identities: n_max must be >= 1");
  IdentityReport report;
  const auto& d = tables.coface;
  const auto& s = tables.codegeneracy;

  auto check = [&](int family, int n, int i, int j, const MonotoneMap& lhs, const MonotoneMap& rhs,
                   const char* text) {
    ++report.instances[static_cast<std::size_t>(family - 1)];
    if (lhs == rhs) return true;
    std::ostringstream os;
    os << "family " << family << " (" << text << ") fails at n=" << n << ", i=" << i << ", j=" << j << ": "
       << lhs.to_string() << " != " << rhs.to_string();
    report.pass = false;
    report.violation = IdentityViolation{family, n, i, j, os.str()};
    return false;
  };

  for (int n = 1; n <= n_max; ++n) {
    // 1. d^j d^i = d^i d^{j-1}, i < j, composite [n-2] -> [n].
    if (n >= 2) {
      for (int j = 1; j <= n; ++j)
        for (int i = 0; i < j; ++i)
          if (!check(1, n, i, j, compose(d(n, j), d(n - 1, i)), compose(d(n, i), d(n - 1, j - 1)),
                     "d^j d^i = d^i d^(j-1), i<j"))
            return report;
    }
    // 2. s^j d^i = d^i s^{j-1}, i < j, composite [n] -> [n].
    for (int j = 1; j <= n; ++j)
      for (int i = 0; i < j; ++i)
        if (!check(2, n, i, j, compose(s(n, j), d(n + 1, i)), compose(d(n, i), s(n - 1, j - 1)),
                   "s^j d^i = d^i s^(j-1), i<j"))
          return report;
    // 3. s^j d^j = id = s^j d^{j+1}.
    const MonotoneMap id = MonotoneMap::identity(n);
    for (int j = 0; j <= n; ++j) {
      if (!check(3, n, j, j, compose(s(n, j), d(n + 1, j)), id, "s^j d^j = id")) return report;
      if (!check(3, n, j + 1, j, compose(s(n, j), d(n + 1, j + 1)), id, "s^j d^(j+1) = id")) return report;
    }
    // 4. s^j d^i = d^{i-1} s^j, i > j+1.
    for (int i = 2; i <= n + 1; ++i)
      for (int j = 0; j + 1 < i; ++j)
        if (!check(4, n, i, j, compose(s(n, j), d(n + 1, i)), compose(d(n, i - 1), s(n - 1, j)),
                   "s^j d^i = d^(i-1) s^j, i>j+1"))
          return report;
    // 5. s^j s^i = s^i s^{j+1}, i <= j, composite [n+2] -> [n].
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= j; ++i)
        if (!check(5, n, i, j, compose(s(n, j), s(n + 1, i)), compose(s(n, i), s(n + 1, j + 1)),
                   "s^j s^i = s^i s^(j+1), i<=j"))
          return report;
  }
  return report;
}

}  // namespace sset
