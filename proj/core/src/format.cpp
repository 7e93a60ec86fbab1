#include "sset/format.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

namespace sset {

std::string to_string(DocumentKind kind) {
  switch (kind) {
    case DocumentKind::sset: return "sset";
    case DocumentKind::category: return "category";
    case DocumentKind::group: return "group";
    case DocumentKind::scat: return "scat";
    case DocumentKind::map: return "map";
    case DocumentKind::homotopy: return "homotopy";
  }
  return "unknown";
}

namespace {

struct Token {
  std::string text;
  int line = 1;
  int column = 1;
};

using Line = std::vector<Token>;

bool is_punct(char c) { return c == '[' || c == ']' || c == ',' || c == '=' || c == ';'; }

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  Line current;
  int line = 1, column = 1;
  std::size_t k = 0;
  auto flush = [&] {
    if (!current.empty()) lines.push_back(std::move(current));
    current.clear();
  };
  while (k < text.size()) {
    const char c = text[k];
    if (c == '\n') {
      flush();
      ++line;
      column = 1;
      ++k;
    } else if (c == '#') {
      while (k < text.size() && text[k] != '\n') ++k;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      ++k;
      ++column;
    } else if (is_punct(c)) {
      current.push_back({std::string(1, c), line, column});
      ++k;
      ++column;
    } else {
      Token t{"", line, column};
      while (k < text.size() && !std::isspace(static_cast<unsigned char>(text[k])) && !is_punct(text[k]) &&
             text[k] != '#') {
        t.text += text[k];
        ++k;
        ++column;
      }
      current.push_back(std::move(t));
    }
  }
  flush();
  return lines;
}

[[noreturn]] void fail_at(const Token& t, const std::string& message) { throw ParseError(t.line, t.column, message); }

int parse_int(const Token& t) {
  if (t.text.empty() || t.text.size() > 9 ||
      !std::all_of(t.text.begin(), t.text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    fail_at(t, "expected a non-negative integer, got '" + t.text + "'");
  }
  return std::stoi(t.text);
}

bool is_degeneracy_letter(const std::string& s) {
  return s.size() >= 2 && s[0] == 's' &&
         std::all_of(s.begin() + 1, s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

// Cursor over one line.
class Cursor {
 public:
  explicit Cursor(const Line& line) : line_(line) {}
  bool done() const { return pos_ >= line_.size(); }
  const Token& peek() const {
    if (done()) fail_at(end_token(), "unexpected end of line");
    return line_[pos_];
  }
  const Token& next() {
    const Token& t = peek();
    ++pos_;
    return t;
  }
  const Token& expect(const std::string& text) {
    const Token& t = next();
    if (t.text != text) fail_at(t, "expected '" + text + "', got '" + t.text + "'");
    return t;
  }
  void finish() const {
    if (!done()) fail_at(line_[pos_], "unexpected '" + line_[pos_].text + "'");
  }
  // The remaining tokens joined by spaces; fails when empty.
  std::string rest() {
    peek();
    std::string out;
    while (!done()) {
      if (!out.empty()) out += ' ';
      out += next().text;
    }
    return out;
  }
  Token end_token() const {
    if (line_.empty()) return {};
    const Token& last = line_.back();
    return {"", last.line, last.column + static_cast<int>(last.text.size())};
  }

 private:
  const Line& line_;
  std::size_t pos_ = 0;
};

// Reads "s3 s1 . name" or "name" from the cursor, stopping before ',', ']' or
// the end of the line.
SimplexExpr read_expr(Cursor& cur, const Presentation& s, int dim) {
  std::vector<int> letters;
  std::vector<Token> letter_tokens;
  const Token* name = nullptr;
  while (true) {
    const Token& t = cur.next();
    if (is_degeneracy_letter(t.text)) {
      letters.push_back(parse_int(Token{t.text.substr(1), t.line, t.column + 1}));
      letter_tokens.push_back(t);
      continue;
    }
    if (t.text == ".") {
      if (letters.empty()) fail_at(t, "'.' must follow degeneracy letters");
      name = &cur.next();
    } else {
      if (!letters.empty()) fail_at(t, "expected '.' after degeneracy letters");
      name = &t;
    }
    break;
  }
  const Token& at = letter_tokens.empty() ? *name : letter_tokens.front();
  for (std::size_t k = 1; k < letters.size(); ++k) {
    if (letters[k] >= letters[k - 1]) fail_at(letter_tokens[k], "degeneracy indices must be strictly decreasing");
  }
  const int base_dim = dim - static_cast<int>(letters.size());
  if (base_dim < 0) fail_at(at, "dimension mismatch: too many degeneracies for dimension " + std::to_string(dim));
  auto id = s.find(base_dim, name->text);
  if (!id) {
    for (int d = 0; d <= s.truncation(); ++d) {
      if (s.find(d, name->text)) {
        fail_at(*name, "dimension mismatch: '" + name->text + "' has dimension " + std::to_string(d) + ", expected " +
                           std::to_string(base_dim));
      }
    }
    fail_at(*name, "dangling reference '" + name->text + "'");
  }
  DegeneracyWord word;
  try {
    word = DegeneracyWord(letters);
    if (normalize_word(letters, base_dim) != word) throw InputError("not in normal form");
  } catch (const InputError&) {
    fail_at(at, "degeneracy index out of range for dimension " + std::to_string(dim));
  }
  return SimplexExpr(std::move(word), *id);
}

// "[e0, e1, ...]"; entries may be "_" when allow_holes is set.
std::vector<std::optional<SimplexExpr>> read_list(Cursor& cur, const Presentation& s, int dim, bool allow_holes) {
  std::vector<std::optional<SimplexExpr>> out;
  cur.expect("[");
  if (cur.peek().text == "]") {
    cur.next();
    return out;
  }
  while (true) {
    if (allow_holes && cur.peek().text == "_") {
      cur.next();
      out.emplace_back();
    } else {
      out.emplace_back(read_expr(cur, s, dim));
    }
    const Token& sep = cur.next();
    if (sep.text == "]") break;
    if (sep.text != ",") fail_at(sep, "expected ',' or ']'");
  }
  return out;
}

// Finds a simplex by name in any dimension; fails when absent or ambiguous.
SimplexId lookup_any(const Presentation& s, const Token& t) {
  std::optional<SimplexId> found;
  for (int d = 0; d <= s.truncation(); ++d) {
    if (auto id = s.find(d, t.text)) {
      if (found) fail_at(t, "ambiguous name '" + t.text + "' occurs in several dimensions");
      found = id;
    }
  }
  if (!found) fail_at(t, "dangling reference '" + t.text + "'");
  return *found;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

class Parser {
 public:
  Parser(std::vector<Line> lines, std::filesystem::path base) : lines_(std::move(lines)), base_(std::move(base)) {}

  Document run() {
    if (lines_.empty()) throw ParseError(1, 1, "empty document");
    const Line& header = lines_.front();
    Cursor cur(header);
    const Token& kind = cur.next();
    cur.finish();
    Document d;
    if (kind.text == "sset") {
      d.kind = DocumentKind::sset;
      d.sset = share(parse_sset());
    } else if (kind.text == "category") {
      d.kind = DocumentKind::category;
      d.category = parse_category();
    } else if (kind.text == "group") {
      d.kind = DocumentKind::group;
      d.group = parse_group();
    } else if (kind.text == "scat") {
      d.kind = DocumentKind::scat;
      parse_scat(d);
    } else if (kind.text == "map") {
      d.kind = DocumentKind::map;
      parse_map(d);
    } else if (kind.text == "homotopy") {
      d.kind = DocumentKind::homotopy;
      parse_homotopy(d);
    } else {
      fail_at(kind, "unknown document kind '" + kind.text + "'");
    }
    return d;
  }

 private:
  Presentation parse_sset() {
    std::optional<int> truncation;
    bool open = false;
    std::vector<std::vector<Token>> names;
    struct FaceLine {
      Token name;
      std::size_t line;
      bool used = false;
    };
    std::vector<FaceLine> face_lines;
    for (std::size_t k = 1; k < lines_.size(); ++k) {
      Cursor cur(lines_[k]);
      const Token& key = cur.next();
      if (key.text == "truncation") {
        if (truncation) fail_at(key, "duplicate truncation");
        truncation = parse_int(cur.next());
        cur.finish();
        names.resize(static_cast<std::size_t>(*truncation) + 1);
      } else if (key.text == "open") {
        cur.finish();
        open = true;
      } else if (key.text == "dim") {
        if (!truncation) fail_at(key, "truncation must precede dim blocks");
        const Token& nt = cur.next();
        const int n = parse_int(nt);
        if (n > *truncation) fail_at(nt, "dimension " + std::to_string(n) + " exceeds truncation");
        cur.expect(":");
        while (!cur.done()) names[static_cast<std::size_t>(n)].push_back(cur.next());
      } else if (key.text == "faces") {
        face_lines.push_back({cur.next(), k});
      } else {
        fail_at(key, "unknown sset statement '" + key.text + "'");
      }
    }
    if (!truncation) throw ParseError(lines_.front().front().line, 1, "missing truncation");

    Presentation s(*truncation, open);
    // Face lines keyed by (name, number of faces).
    std::map<std::pair<std::string, std::size_t>, std::size_t> by_key;
    std::vector<std::size_t> counts(face_lines.size());
    for (std::size_t f = 0; f < face_lines.size(); ++f) {
      Cursor cur(lines_[face_lines[f].line]);
      cur.next();
      cur.next();
      cur.expect("=");
      std::size_t entries = 0;
      int depth = 0;
      while (!cur.done()) {
        const Token& t = cur.next();
        if (t.text == "[") ++depth;
        if (t.text == "]") --depth;
        if (depth == 1 && t.text == ",") ++entries;
        if (t.text != "[" && t.text != "]" && t.text != "," && entries == 0) entries = 1;
      }
      counts[f] = entries;
      if (!by_key.emplace(std::make_pair(face_lines[f].name.text, entries), f).second) {
        fail_at(face_lines[f].name, "duplicate faces line for '" + face_lines[f].name.text + "'");
      }
    }
    for (int n = 0; n <= *truncation; ++n) {
      for (const Token& name : names[static_cast<std::size_t>(n)]) {
        if (!is_valid_name(name.text)) fail_at(name, "invalid simplex name '" + name.text + "'");
        if (s.find(n, name.text)) fail_at(name, "duplicate simplex '" + name.text + "'");
        std::vector<SimplexExpr> faces;
        if (n > 0) {
          auto it = by_key.find({name.text, static_cast<std::size_t>(n) + 1});
          if (it == by_key.end()) {
            for (std::size_t f = 0; f < face_lines.size(); ++f)
              if (face_lines[f].name.text == name.text && !face_lines[f].used)
                fail_at(face_lines[f].name, "dimension mismatch: '" + name.text + "' has dimension " +
                                                std::to_string(n) + " and needs " + std::to_string(n + 1) +
                                                " faces, got " + std::to_string(counts[f]));
            fail_at(name, "missing faces for '" + name.text + "'");
          }
          FaceLine& fl = face_lines[it->second];
          fl.used = true;
          Cursor cur(lines_[fl.line]);
          cur.next();
          cur.next();
          cur.expect("=");
          for (auto& e : read_list(cur, s, n - 1, false)) faces.push_back(*e);
          cur.finish();
        }
        s.add_simplex(n, name.text, std::move(faces));
      }
    }
    for (std::size_t f = 0; f < face_lines.size(); ++f) {
      const FaceLine& fl = face_lines[f];
      if (fl.used) continue;
      for (int d = 0; d <= *truncation; ++d) {
        if (s.find(d, fl.name.text)) {
          fail_at(fl.name, "dimension mismatch: '" + fl.name.text + "' has dimension " + std::to_string(d) + " but " +
                               std::to_string(counts[f]) + " faces are listed");
        }
      }
      fail_at(fl.name, "dangling reference '" + fl.name.text + "'");
    }
    return s;
  }

  FiniteCategory parse_category() {
    FiniteCategory c;
    auto object = [&](const Token& t) {
      auto o = c.find_object(t.text);
      if (!o) fail_at(t, "dangling reference '" + t.text + "'");
      return *o;
    };
    auto morphism = [&](const Token& t) {
      auto m = c.find_morphism(t.text);
      if (!m) fail_at(t, "dangling reference '" + t.text + "'");
      return *m;
    };
    for (std::size_t k = 1; k < lines_.size(); ++k) {
      Cursor cur(lines_[k]);
      const Token& key = cur.next();
      if (key.text == "objects") {
        while (!cur.done()) {
          const Token& t = cur.next();
          if (!is_valid_name(t.text)) fail_at(t, "invalid object name '" + t.text + "'");
          if (c.find_object(t.text)) fail_at(t, "duplicate object '" + t.text + "'");
          c.add_object(t.text);
        }
      } else if (key.text == "mor") {
        const Token& name = cur.next();
        if (!is_valid_name(name.text)) fail_at(name, "invalid morphism name '" + name.text + "'");
        if (c.find_morphism(name.text)) fail_at(name, "duplicate morphism '" + name.text + "'");
        cur.expect(":");
        const int src = object(cur.next());
        cur.expect("->");
        const int dst = object(cur.next());
        cur.finish();
        c.add_morphism(name.text, src, dst);
      } else if (key.text == "comp") {
        const Token& gt = cur.next();
        const Token& ft = cur.next();
        cur.expect("=");
        const Token& ht = cur.next();
        cur.finish();
        const int g = morphism(gt), f = morphism(ft), h = morphism(ht);
        const Morphism& mg = c.morphisms[static_cast<std::size_t>(g)];
        const Morphism& mf = c.morphisms[static_cast<std::size_t>(f)];
        const Morphism& mh = c.morphisms[static_cast<std::size_t>(h)];
        if (mf.target != mg.source) fail_at(gt, "'" + gt.text + "' and '" + ft.text + "' are not composable");
        if (mh.source != mf.source || mh.target != mg.target) fail_at(ht, "composite '" + ht.text + "' has the wrong endpoints");
        const int existing = c.composition[static_cast<std::size_t>(g)][static_cast<std::size_t>(f)];
        if (existing >= 0 && existing != h) fail_at(gt, "conflicting composite for '" + gt.text + "' and '" + ft.text + "'");
        c.set_composite(g, f, h);
      } else {
        fail_at(key, "unknown category statement '" + key.text + "'");
      }
    }
    return c;
  }

  FiniteGroup parse_group() {
    FiniteGroup g;
    std::optional<Token> unit;
    std::vector<std::pair<Token, std::vector<Token>>> rows;
    Token elements_at{"", 1, 1};
    for (std::size_t k = 1; k < lines_.size(); ++k) {
      Cursor cur(lines_[k]);
      const Token& key = cur.next();
      if (key.text == "elements") {
        elements_at = key;
        while (!cur.done()) {
          const Token& t = cur.next();
          if (!is_valid_name(t.text)) fail_at(t, "invalid element name '" + t.text + "'");
          if (g.find(t.text)) fail_at(t, "duplicate element '" + t.text + "'");
          g.elements.push_back(t.text);
        }
      } else if (key.text == "unit") {
        unit = cur.next();
        cur.finish();
      } else if (key.text == "row") {
        const Token& a = cur.next();
        cur.expect("=");
        std::vector<Token> entries;
        while (!cur.done()) entries.push_back(cur.next());
        rows.emplace_back(a, std::move(entries));
      } else {
        fail_at(key, "unknown group statement '" + key.text + "'");
      }
    }
    auto element = [&](const Token& t) {
      auto e = g.find(t.text);
      if (!e) fail_at(t, "dangling reference '" + t.text + "'");
      return *e;
    };
    if (!unit) fail_at(elements_at, "missing unit");
    g.unit = element(*unit);
    const std::size_t n = g.elements.size();
    g.product.assign(n, std::vector<int>(n, -1));
    std::vector<bool> seen(n, false);
    for (const auto& [a, entries] : rows) {
      const int ai = element(a);
      if (seen[static_cast<std::size_t>(ai)]) fail_at(a, "duplicate row for '" + a.text + "'");
      seen[static_cast<std::size_t>(ai)] = true;
      if (entries.size() != n) fail_at(a, "row for '" + a.text + "' needs " + std::to_string(n) + " entries");
      for (std::size_t b = 0; b < n; ++b) g.product[static_cast<std::size_t>(ai)][b] = element(entries[b]);
    }
    for (std::size_t a = 0; a < n; ++a)
      if (!seen[a]) fail_at(elements_at, "missing row for '" + g.elements[a] + "'");
    return g;
  }

  PresentationPtr reference(Cursor& cur) {
    const Token at = cur.peek();
    const std::string ref = cur.rest();
    try {
      return resolve_reference(ref, base_);
    } catch (const ParseError& e) {
      fail_at(at, "in reference '" + ref + "': " + e.what());
    } catch (const InputError& e) {
      fail_at(at, e.what());
    }
  }

  void parse_scat(Document& d) {
    SimplicialCategory& c = d.scat;
    std::map<std::string, int> objects;
    struct Pending {
      Token x, y, z, g, f, h;
    };
    std::vector<Pending> comps;
    std::vector<std::pair<Token, Token>> identity_lines;
    for (std::size_t k = 1; k < lines_.size(); ++k) {
      Cursor cur(lines_[k]);
      const Token& key = cur.next();
      if (key.text == "objects") {
        if (!c.objects.empty()) fail_at(key, "objects already declared");
        while (!cur.done()) {
          const Token& t = cur.next();
          if (!is_valid_name(t.text)) fail_at(t, "invalid object name '" + t.text + "'");
          if (!objects.emplace(t.text, static_cast<int>(c.objects.size())).second) fail_at(t, "duplicate object '" + t.text + "'");
          c.objects.push_back(t.text);
        }
        const std::size_t n = c.objects.size();
        c.homs.assign(n, std::vector<PresentationPtr>(n, share(Presentation(0))));
        d.hom_refs.assign(n, std::vector<std::string>(n));
        c.identities.assign(n, -1);
      } else if (key.text == "hom") {
        const int x = object_of(objects, cur.next());
        const int y = object_of(objects, cur.next());
        cur.expect("=");
        c.homs[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = reference(cur);
        d.hom_refs[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = line_text(lines_[k], 4);
      } else if (key.text == "identity") {
        const Token& x = cur.next();
        cur.expect("=");
        const Token& v = cur.next();
        cur.finish();
        identity_lines.emplace_back(x, v);
      } else if (key.text == "comp") {
        Pending p{cur.next(), cur.next(), cur.next(), {}, {}, {}};
        cur.expect(":");
        p.g = cur.next();
        cur.expect(";");
        p.f = cur.next();
        cur.expect("=");
        p.h = cur.next();
        cur.finish();
        comps.push_back(std::move(p));
      } else {
        fail_at(key, "unknown scat statement '" + key.text + "'");
      }
    }
    if (c.objects.empty()) throw ParseError(lines_.front().front().line, 1, "scat declares no objects");
    auto vertex = [&](int x, int y, const Token& t) {
      auto v = c.hom(x, y).find(0, t.text);
      if (!v) fail_at(t, "dangling reference '" + t.text + "'");
      return v->index;
    };
    for (const auto& [xt, vt] : identity_lines) {
      const int x = object_of(objects, xt);
      c.identities[static_cast<std::size_t>(x)] = vertex(x, x, vt);
    }
    for (std::size_t x = 0; x < c.objects.size(); ++x) {
      if (c.identities[x] < 0) {
        throw ParseError(lines_.front().front().line, 1, "object '" + c.objects[x] + "' has no identity");
      }
    }
    std::map<std::tuple<int, int, int, int, int>, int> table;
    std::map<std::tuple<int, int, int, int, int>, Token> where;
    for (const Pending& p : comps) {
      const int x = object_of(objects, p.x), y = object_of(objects, p.y), z = object_of(objects, p.z);
      const auto key = std::make_tuple(x, y, z, vertex(y, z, p.g), vertex(x, y, p.f));
      if (!table.emplace(key, vertex(x, z, p.h)).second) fail_at(p.x, "duplicate composition entry");
      where.emplace(key, p.x);
    }
    try {
      set_vertex_composition(c, [&](int x, int y, int z, int g, int f) {
        auto it = table.find({x, y, z, g, f});
        if (it == table.end()) {
          throw InputError("composition " + c.objects[static_cast<std::size_t>(x)] + " " + c.objects[static_cast<std::size_t>(y)] +
                           " " + c.objects[static_cast<std::size_t>(z)] + " is undefined on (" +
                           c.hom(y, z).name(SimplexId{0, g}) + ", " + c.hom(x, y).name(SimplexId{0, f}) + ")");
        }
        return it->second;
      });
    } catch (const ParseError&) {
      throw;
    } catch (const InputError& e) {
      throw ParseError(lines_.front().front().line, 1, e.what());
    }
  }

  static std::string line_text(const Line& line, std::size_t from) {
    std::string out;
    for (std::size_t k = from; k < line.size(); ++k) out += (out.empty() ? "" : " ") + line[k].text;
    return out;
  }

  static int object_of(const std::map<std::string, int>& objects, const Token& t) {
    auto it = objects.find(t.text);
    if (it == objects.end()) fail_at(t, "dangling reference '" + t.text + "'");
    return it->second;
  }

  // source/target lines shared by maps and homotopies.
  void endpoints(Document& d, PresentationPtr& source, PresentationPtr& target, Token& source_at) {
    for (std::size_t k = 1; k < lines_.size(); ++k) {
      Cursor cur(lines_[k]);
      const Token& key = cur.next();
      if (key.text == "source" || key.text == "target") {
        PresentationPtr& slot = key.text == "source" ? source : target;
        if (slot) fail_at(key, "duplicate " + key.text);
        slot = reference(cur);
        (key.text == "source" ? d.source_ref : d.target_ref) = line_text(lines_[k], 1);
        if (key.text == "source") source_at = key;
      }
    }
    if (!source) throw ParseError(lines_.front().front().line, 1, "missing source");
    if (!target) throw ParseError(lines_.front().front().line, 1, "missing target");
  }

  // Reads "KEY x = expr" lines into an assignment over the non-degenerate simplices of source.
  SimplicialMap read_assignment(const std::string& key, PresentationPtr source, PresentationPtr target,
                                const Token& missing_at) {
    SimplicialMap f{source, target, {}};
    const int top = source->top_dimension();
    std::vector<std::vector<std::optional<SimplexExpr>>> slots(static_cast<std::size_t>(std::max(top, -1) + 1));
    for (int n = 0; n <= top; ++n) slots[static_cast<std::size_t>(n)].resize(source->count(n));
    for (std::size_t k = 1; k < lines_.size(); ++k) {
      Cursor cur(lines_[k]);
      if (cur.next().text != key) continue;
      const Token& xt = cur.next();
      const SimplexId x = lookup_any(*source, xt);
      cur.expect("=");
      if (!target->knows_dimension(x.dim)) fail_at(xt, "target truncation does not reach dimension " + std::to_string(x.dim));
      auto& slot = slots[static_cast<std::size_t>(x.dim)][static_cast<std::size_t>(x.index)];
      if (slot) fail_at(xt, "duplicate image for '" + xt.text + "'");
      slot = read_expr(cur, *target, x.dim);
      cur.finish();
    }
    for (int n = 0; n <= top; ++n) {
      f.assignment.emplace_back();
      for (std::size_t i = 0; i < slots[static_cast<std::size_t>(n)].size(); ++i) {
        const auto& slot = slots[static_cast<std::size_t>(n)][i];
        if (!slot) {
          fail_at(missing_at, key + ": no image for '" + source->name(SimplexId{n, static_cast<int>(i)}) + "'");
        }
        f.assignment.back().push_back(*slot);
      }
    }
    return f;
  }

  void check_keys(const std::set<std::string>& allowed) {
    for (std::size_t k = 1; k < lines_.size(); ++k) {
      const Token& key = lines_[k].front();
      if (!allowed.contains(key.text)) fail_at(key, "unknown statement '" + key.text + "'");
    }
  }

  void parse_map(Document& d) {
    check_keys({"source", "target", "send"});
    PresentationPtr source, target;
    Token at;
    endpoints(d, source, target, at);
    d.map = read_assignment("send", source, target, at);
  }

  void parse_homotopy(Document& d) {
    check_keys({"source", "target", "f0", "f1", "h"});
    PresentationPtr source, target;
    Token at;
    endpoints(d, source, target, at);
    auto domain = std::make_shared<const ProductSet>(product_set(source, share(standard_simplex(1))));
    d.homotopy.domain = domain;
    d.homotopy.f0 = read_assignment("f0", source, target, at);
    d.homotopy.f1 = read_assignment("f1", source, target, at);
    d.homotopy.h = read_assignment("h", domain->presentation, target, at);
  }

  std::vector<Line> lines_;
  std::filesystem::path base_;
};

}  // namespace

Document parse(std::string_view text, const std::filesystem::path& base_dir) {
  return Parser(tokenize(text), base_dir).run();
}

Document parse_file(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  try {
    return parse(text, path.parent_path().empty() ? std::filesystem::path(".") : path.parent_path());
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.column(), path.filename().string() + ": " +
                                               std::string(e.what()).substr(std::string(e.what()).find(": ") + 2));
  }
}

PresentationPtr resolve_reference(std::string_view ref, const std::filesystem::path& base_dir) {
  std::istringstream in{std::string(ref)};
  std::vector<std::string> words;
  for (std::string w; in >> w;) words.push_back(w);
  if (words.empty()) throw InputError("empty reference");
  auto number = [&](std::size_t k) {
    if (k >= words.size()) throw InputError("reference '" + std::string(ref) + "' is missing a number");
    try {
      std::size_t used = 0;
      const int v = std::stoi(words[k], &used);
      if (used != words[k].size() || v < 0) throw InputError("");
      return v;
    } catch (const std::exception&) {
      throw InputError("reference '" + std::string(ref) + "': bad number '" + words[k] + "'");
    }
  };
  auto arity = [&](std::size_t n) {
    if (words.size() != n) throw InputError("reference '" + std::string(ref) + "' has the wrong number of words");
  };
  if (words[0] == "std") {
    if (words.size() < 2) throw InputError("reference 'std' needs a construction name");
    if (words[1] == "simplex") return arity(3), share(standard_simplex(number(2)));
    if (words[1] == "boundary") return arity(3), share(boundary(number(2)));
    if (words[1] == "horn") return arity(4), share(horn(number(2), number(3)));
    if (words[1] == "sphere") return arity(3), share(sphere(number(2)));
    throw InputError("unknown construction 'std " + words[1] + "'");
  }
  if (words[0] == "point") return arity(1), share(standard_simplex(0));
  if (words[0] == "empty") return arity(1), share(Presentation(0));
  if (words[0] == "discrete") {
    Presentation p(0);
    for (std::size_t k = 1; k < words.size(); ++k) p.add_simplex(0, words[k]);
    return share(std::move(p));
  }
  arity(1);
  const Document d = parse_file(base_dir / words[0]);
  if (d.kind != DocumentKind::sset) throw InputError("'" + words[0] + "' is not a simplicial set");
  return d.sset;
}

SimplexExpr parse_expr(const Presentation& s, std::string_view text, int dim) {
  const auto lines = tokenize(text);
  if (lines.size() != 1) throw ParseError(1, 1, "expected a single expression");
  Cursor cur(lines.front());
  SimplexExpr e = read_expr(cur, s, dim);
  cur.finish();
  return e;
}

std::vector<std::optional<SimplexExpr>> parse_face_list(const Presentation& s, std::string_view text, int dim) {
  const auto lines = tokenize(text);
  if (lines.size() != 1) throw ParseError(1, 1, "expected a single face list");
  Cursor cur(lines.front());
  auto out = read_list(cur, s, dim, true);
  cur.finish();
  return out;
}

// ---------------------------------------------------------------- rendering

std::string render(const Presentation& s) {
  std::ostringstream out;
  out << "sset\ntruncation " << s.truncation() << '\n';
  if (s.open()) out << "open\n";
  for (int n = 0; n <= s.truncation(); ++n) {
    if (s.count(n) == 0) continue;
    out << "dim " << n << " :";
    for (const SimplexId x : s.simplices(n)) out << ' ' << s.name(x);
    out << '\n';
  }
  for (int n = 1; n <= s.truncation(); ++n) {
    for (const SimplexId x : s.simplices(n)) {
      out << "faces " << s.name(x) << " = [";
      const auto& faces = s.faces(x);
      for (std::size_t i = 0; i < faces.size(); ++i) out << (i ? ", " : "") << s.render(faces[i]);
      out << "]\n";
    }
  }
  return out.str();
}

std::string render(const FiniteCategory& c) {
  std::ostringstream out;
  out << "category\nobjects";
  for (const auto& o : c.objects) out << ' ' << o;
  out << '\n';
  for (std::size_t m = 0; m < c.morphisms.size(); ++m) {
    if (c.is_identity(static_cast<int>(m))) continue;
    const Morphism& mor = c.morphisms[m];
    out << "mor " << mor.name << " : " << c.objects[static_cast<std::size_t>(mor.source)] << " -> "
        << c.objects[static_cast<std::size_t>(mor.target)] << '\n';
  }
  for (std::size_t g = 0; g < c.morphisms.size(); ++g)
    for (std::size_t f = 0; f < c.morphisms.size(); ++f) {
      if (c.is_identity(static_cast<int>(g)) || c.is_identity(static_cast<int>(f))) continue;
      const int h = c.composition[g][f];
      if (h < 0) continue;
      out << "comp " << c.morphisms[g].name << ' ' << c.morphisms[f].name << " = " << c.morphisms[static_cast<std::size_t>(h)].name
          << '\n';
    }
  return out.str();
}

std::string render(const FiniteGroup& g) {
  std::ostringstream out;
  out << "group\nelements";
  for (const auto& e : g.elements) out << ' ' << e;
  out << "\nunit " << g.elements[static_cast<std::size_t>(g.unit)] << '\n';
  for (std::size_t a = 0; a < g.elements.size(); ++a) {
    out << "row " << g.elements[a] << " =";
    for (int b : g.product[a]) out << ' ' << g.elements[static_cast<std::size_t>(b)];
    out << '\n';
  }
  return out.str();
}

namespace {

void render_assignment(std::ostream& out, const std::string& key, const SimplicialMap& f) {
  for (std::size_t n = 0; n < f.assignment.size(); ++n)
    for (std::size_t i = 0; i < f.assignment[n].size(); ++i) {
      out << key << ' ' << f.source->name(SimplexId{static_cast<int>(n), static_cast<int>(i)}) << " = "
          << f.target->render(f.assignment[n][i]) << '\n';
    }
}

}  // namespace

std::string render(const SimplicialMap& f, const std::string& source_ref, const std::string& target_ref) {
  std::ostringstream out;
  out << "map\nsource " << source_ref << "\ntarget " << target_ref << '\n';
  render_assignment(out, "send", f);
  return out.str();
}

std::string render(const Document& d) {
  switch (d.kind) {
    case DocumentKind::sset: return render(*d.sset);
    case DocumentKind::category: return render(d.category);
    case DocumentKind::group: return render(d.group);
    case DocumentKind::map: return render(d.map, d.source_ref, d.target_ref);
    case DocumentKind::homotopy: {
      std::ostringstream out;
      out << "homotopy\nsource " << d.source_ref << "\ntarget " << d.target_ref << '\n';
      render_assignment(out, "f0", d.homotopy.f0);
      render_assignment(out, "f1", d.homotopy.f1);
      render_assignment(out, "h", d.homotopy.h);
      return out.str();
    }
    case DocumentKind::scat: {
      const SimplicialCategory& c = d.scat;
      std::ostringstream out;
      out << "scat\nobjects";
      for (const auto& o : c.objects) out << ' ' << o;
      out << '\n';
      const std::size_t n = c.objects.size();
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
          if (c.homs[x][y]->count(0) == 0) continue;
          if (d.hom_refs.size() != n || d.hom_refs[x][y].empty()) throw InputError("scat hom has no reference to render");
          out << "hom " << c.objects[x] << ' ' << c.objects[y] << " = " << d.hom_refs[x][y] << '\n';
        }
      for (std::size_t x = 0; x < n; ++x)
        out << "identity " << c.objects[x] << " = " << c.hom(static_cast<int>(x), static_cast<int>(x)).name(SimplexId{0, c.identities[x]}) << '\n';
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
          for (std::size_t z = 0; z < n; ++z) {
            const Composition& comp = c.composition[x][y][z];
            for (std::size_t v = 0; v < comp.domain->components.at(0).size(); ++v) {
              const auto& [g, f] = comp.domain->components[0][v];
              out << "comp " << c.objects[x] << ' ' << c.objects[y] << ' ' << c.objects[z] << " : "
                  << c.homs[y][z]->name(g.base) << " ; " << c.homs[x][y]->name(f.base) << " = "
                  << c.homs[x][z]->render(comp.map.assignment[0][v]) << '\n';
            }
          }
      return out.str();
    }
  }
  return {};
}

}  // namespace sset
