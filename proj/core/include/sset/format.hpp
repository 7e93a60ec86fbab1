#pragma once

// Line-oriented text format for presentations, categories, groups,
// simplicial categories, maps and homotopies, plus a JSON writer.
//
//   sset                       category              group
//   truncation 2               objects x y           elements e a
//   dim 0 : a b                mor f : x -> y        unit e
//   dim 1 : f                  comp g f = h          row e = e a
//   faces f = [b, a]                                 row a = a e
//
// Simplex expressions are written "s2 s0 . name" or just "name". '#' starts a
// comment. References to other presentations (map sources, scat homs) are one
// of: "std simplex N", "std boundary N", "std horn N I", "std sphere N",
// "point", "empty", "discrete a b ...", or a path relative to the document.

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sset/constructions.hpp"
#include "sset/error.hpp"
#include "sset/hcnerve.hpp"
#include "sset/invariants.hpp"
#include "sset/presentation.hpp"

namespace sset {

class ParseError : public InputError {
 public:
  ParseError(int line, int column, const std::string& message)
      : InputError(std::to_string(line) + ":" + std::to_string(column) + ": " + message), line_(line), column_(column) {}
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

enum class DocumentKind { sset, category, group, scat, map, homotopy };

std::string to_string(DocumentKind kind);

struct Document {
  DocumentKind kind = DocumentKind::sset;
  PresentationPtr sset;
  FiniteCategory category;
  FiniteGroup group;
  SimplicialCategory scat;
  SimplicialMap map;
  HomotopyCertificate homotopy;
  // Reference text as written, kept for rendering maps, homotopies and scats.
  std::string source_ref;
  std::string target_ref;
  std::vector<std::vector<std::string>> hom_refs;
};

// Throws ParseError (syntax, dangling reference, dimension mismatch) with the
// offending location. References are resolved against base_dir.
Document parse(std::string_view text, const std::filesystem::path& base_dir = ".");
Document parse_file(const std::filesystem::path& path);

// Resolves a reference as described above.
PresentationPtr resolve_reference(std::string_view ref, const std::filesystem::path& base_dir = ".");

// Parses a single expression such as "s1 s0 . x" naming a simplex of s of the
// given dimension.
SimplexExpr parse_expr(const Presentation& s, std::string_view text, int dim);
// "[e0, e1, _, e3]": a horn with the missing slot written "_".
std::vector<std::optional<SimplexExpr>> parse_face_list(const Presentation& s, std::string_view text, int dim);

std::string render(const Presentation& s);
std::string render(const FiniteCategory& c);
std::string render(const FiniteGroup& g);
std::string render(const SimplicialMap& f, const std::string& source_ref, const std::string& target_ref);
std::string render(const Document& d);

}  // namespace sset
