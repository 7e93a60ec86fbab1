#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "sset/constructions.hpp"
#include "sset/error.hpp"
#include "sset/format.hpp"
#include "sset/hcnerve.hpp"
#include "sset/invariants.hpp"
#include "sset/kan.hpp"
#include "sset/parallel.hpp"

namespace sset::cli {

namespace {

using json = nlohmann::json;

struct Options {
  std::string format = "text";
  unsigned threads = 0;
  std::vector<std::string> inputs;
  std::vector<std::string> words;
  std::optional<int> max_dim;
  std::optional<int> truncate;
  std::optional<int> deg;
  std::optional<std::string> base;
  std::optional<std::size_t> cap;
  bool inner = false;
  bool list = false;
  std::string faces;
};

// A mathematical failure: printed as a report, exit 1.
struct Failure {
  std::string text;
  json data;
};

class Context {
 public:
  Context(const Options& o, std::istream& in) : o_(o), in_(in) {}

  bool json_output() const { return o_.format == "json"; }

  Document load(const std::string& input) {
    if (input == "-") {
      const std::string text(std::istreambuf_iterator<char>(in_), {});
      return parse(text, ".");
    }
    return parse_file(input);
  }

  PresentationPtr load_sset(const std::string& input) {
    Document d = load(input);
    if (d.kind != DocumentKind::sset) throw InputError("expected a simplicial set, got a " + to_string(d.kind));
    return d.sset;
  }

  SearchLimits limits() const {
    SearchLimits l;
    if (o_.cap) l.cap = *o_.cap;
    return l;
  }

  int base_vertex(const Presentation& s) const {
    if (!o_.base) {
      if (s.count(0) == 0) throw InputError("presentation has no vertices");
      return 0;
    }
    auto v = s.find(0, *o_.base);
    if (!v) throw InputError("unknown base vertex '" + *o_.base + "'");
    return v->index;
  }

 private:
  const Options& o_;
  std::istream& in_;
};

json counts_json(const Presentation& s) {
  json a = json::array();
  for (auto c : s.counts()) a.push_back(c);
  return a;
}

std::string counts_text(const Presentation& s) {
  std::string out;
  for (auto c : s.counts()) out += (out.empty() ? "" : " ") + std::to_string(c);
  return out;
}

json presentation_json(const Presentation& s) {
  json dims = json::array();
  for (int n = 0; n <= s.truncation(); ++n) {
    json cells = json::array();
    for (const SimplexId x : s.simplices(n)) {
      json faces = json::array();
      for (const auto& f : s.faces(x)) faces.push_back(s.render(f));
      cells.push_back({{"name", s.name(x)}, {"faces", faces}});
    }
    dims.push_back({{"dim", n}, {"simplices", cells}});
  }
  return {{"kind", "sset"}, {"truncation", s.truncation()}, {"open", s.open()}, {"dims", dims}};
}

json horn_json(const Presentation& s, const HornMap& h) {
  json faces = json::array();
  for (int k = 0; k <= h.n; ++k) faces.push_back(k == h.i ? json(nullptr) : json(s.render(h.at(k))));
  return {{"n", h.n}, {"i", h.i}, {"faces", faces}};
}

// Each command writes its report and returns an exit code.
using Command = std::function<int(Context&, const Options&, std::ostream&)>;

int emit_sset(Context& ctx, std::ostream& out, const Presentation& s) {
  if (ctx.json_output()) {
    out << presentation_json(s).dump(2) << '\n';
  } else {
    out << render(s);
  }
  return kOk;
}

int emit(Context& ctx, std::ostream& out, const std::string& text, const json& data, bool pass = true) {
  if (ctx.json_output()) {
    out << data.dump(2) << '\n';
  } else {
    out << text;
  }
  return pass ? kOk : kFailure;
}

int cmd_validate(Context& ctx, const Options& o, std::ostream& out) {
  const Document d = ctx.load(o.inputs.empty() ? "-" : o.inputs.front());
  bool pass = true;
  std::string message;
  json data{{"kind", to_string(d.kind)}};
  switch (d.kind) {
    case DocumentKind::sset: {
      auto r = validate(*d.sset);
      pass = r.pass;
      message = r.message;
      data["counts"] = counts_json(*d.sset);
      data["truncation"] = d.sset->truncation();
      data["open"] = d.sset->open();
      break;
    }
    case DocumentKind::category: {
      auto r = validate_category(d.category);
      pass = r.pass;
      message = r.message;
      break;
    }
    case DocumentKind::group: {
      auto r = validate_group(d.group);
      pass = r.pass;
      message = r.message;
      break;
    }
    case DocumentKind::scat: {
      auto r = validate_scat(d.scat);
      pass = r.pass;
      message = r.message;
      break;
    }
    case DocumentKind::map: {
      auto r = validate_map(d.map);
      pass = r.pass;
      message = r.message;
      break;
    }
    case DocumentKind::homotopy: {
      auto r = verify_homotopy(d.homotopy);
      pass = r.pass;
      message = r.message;
      break;
    }
  }
  data["valid"] = pass;
  data["message"] = message;
  std::ostringstream text;
  text << "kind: " << to_string(d.kind) << '\n';
  if (d.kind == DocumentKind::sset) {
    text << "truncation: " << d.sset->truncation() << (d.sset->open() ? " (open)" : "") << '\n';
    text << "counts: " << counts_text(*d.sset) << '\n';
  }
  text << "valid: " << (pass ? "yes" : "no") << '\n';
  if (!pass) text << "reason: " << message << '\n';
  return emit(ctx, out, text.str(), data, pass);
}

int cmd_std(Context& ctx, const Options& o, std::ostream& out) {
  if (o.words.size() < 2) throw InputError("usage: std simplex|boundary|horn|sphere N [I]");
  const std::string& kind = o.words[0];
  auto number = [&](std::size_t k) {
    if (k >= o.words.size()) throw InputError("std " + kind + ": missing argument");
    try {
      std::size_t used = 0;
      const int v = std::stoi(o.words[k], &used);
      if (used != o.words[k].size()) throw std::invalid_argument("");
      return v;
    } catch (const std::exception&) {
      throw InputError("std " + kind + ": bad number '" + o.words[k] + "'");
    }
  };
  Presentation s;
  if (kind == "simplex") {
    s = standard_simplex(number(1), o.truncate);
  } else if (kind == "boundary") {
    s = boundary(number(1), o.truncate);
  } else if (kind == "horn") {
    s = horn(number(1), number(2), o.truncate);
  } else if (kind == "sphere") {
    if (o.truncate) throw InputError("std sphere does not take --truncate");
    s = sphere(number(1));
  } else {
    throw InputError("unknown construction '" + kind + "'");
  }
  return emit_sset(ctx, out, s);
}

int cmd_kan(Context& ctx, const Options& o, std::ostream& out) {
  auto s = ctx.load_sset(o.inputs.at(0));
  KanOptions options{o.max_dim.value_or(2), o.inner, ctx.limits()};
  const KanReport r = kan_report(*s, options);
  std::ostringstream text;
  text << (o.inner ? "inner horns" : "all horns") << " up to dimension " << r.max_dim << '\n';
  text << "verdict: " << (r.pass ? "pass" : "fail") << '\n';
  text << "horns: " << r.horns_checked << '\n';
  text << "fillers: min " << r.min_fillers << " max " << r.max_fillers << '\n';
  json dims = json::array();
  for (const auto& d : r.per_dimension) {
    text << "dim " << d.n << ": horns " << d.horns << " fillers " << d.min_fillers << ".." << d.max_fillers << '\n';
    dims.push_back({{"dim", d.n}, {"horns", d.horns}, {"min_fillers", d.min_fillers}, {"max_fillers", d.max_fillers}});
  }
  json data{{"pass", r.pass},           {"max_dim", r.max_dim},         {"inner_only", r.inner_only},
            {"horns", r.horns_checked}, {"min_fillers", r.min_fillers}, {"max_fillers", r.max_fillers},
            {"dims", dims}};
  if (r.counterexample) {
    text << "counterexample: horn(" << r.counterexample->n << "," << r.counterexample->i << ") "
         << render_horn(*s, *r.counterexample) << '\n';
    data["counterexample"] = horn_json(*s, *r.counterexample);
  }
  return emit(ctx, out, text.str(), data, r.pass);
}

int cmd_fill(Context& ctx, const Options& o, std::ostream& out) {
  auto s = ctx.load_sset(o.inputs.at(0));
  int depth = 0, commas = 0;
  for (char c : o.faces) {
    if (c == '[') ++depth;
    if (c == ']') --depth;
    if (c == ',' && depth == 1) ++commas;
  }
  const int n = commas;
  if (n < 1) throw InputError("a horn needs at least two face slots");
  const auto slots = parse_face_list(*s, o.faces, n - 1);
  std::vector<SimplexExpr> all;
  int missing = -1;
  for (std::size_t k = 0; k < slots.size(); ++k) {
    if (!slots[k]) {
      if (missing >= 0) throw InputError("exactly one face slot must be '_'");
      missing = static_cast<int>(k);
      all.emplace_back();
    } else {
      all.push_back(*slots[k]);
    }
  }
  if (missing < 0) throw InputError("exactly one face slot must be '_'");
  const HornMap h = HornMap::from_full(n, missing, all);
  const auto fillers = find_fillers(*s, h);
  std::ostringstream text;
  text << "horn(" << n << "," << missing << ") " << render_horn(*s, h) << '\n';
  text << "fillers: " << fillers.size() << '\n';
  json list = json::array();
  for (const auto& f : fillers) {
    text << "  " << s->render(f.filler) << '\n';
    list.push_back(s->render(f.filler));
  }
  json data{{"horn", horn_json(*s, h)}, {"fillers", list}};
  return emit(ctx, out, text.str(), data, !fillers.empty());
}

int cmd_product(Context& ctx, const Options& o, std::ostream& out) {
  if (o.inputs.size() != 2) throw InputError("product needs two inputs");
  auto a = ctx.load_sset(o.inputs[0]);
  auto b = ctx.load_sset(o.inputs[1]);
  return emit_sset(ctx, out, *product_set(a, b, o.truncate).presentation);
}

int cmd_nerve(Context& ctx, const Options& o, std::ostream& out) {
  const Document d = ctx.load(o.inputs.at(0));
  FiniteCategory c;
  if (d.kind == DocumentKind::category) {
    c = d.category;
  } else if (d.kind == DocumentKind::group) {
    if (auto r = validate_group(d.group); !r.pass) throw InputError("invalid group: " + r.message);
    c = group_category(d.group);
  } else {
    throw InputError("nerve needs a category or group, got a " + to_string(d.kind));
  }
  if (auto r = validate_category(c); !r.pass) throw InputError("invalid category: " + r.message);
  return emit_sset(ctx, out, nerve(c, o.truncate.value_or(3)));
}

FiniteGroup builtin_or_file(Context& ctx, const std::string& input) {
  auto order = [&](std::size_t from) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(input.substr(from), &used);
      if (used != input.size() - from) throw std::invalid_argument("");
      return v;
    } catch (const std::exception&) {
      throw InputError("bad group name '" + input + "'");
    }
  };
  if (input.rfind("Z/", 0) == 0 && !std::filesystem::exists(input)) return cyclic_group(order(2));
  if (input.size() >= 2 && input[0] == 'S' && std::isdigit(static_cast<unsigned char>(input[1])) &&
      !std::filesystem::exists(input)) {
    return symmetric_group(order(1));
  }
  const Document d = ctx.load(input);
  if (d.kind != DocumentKind::group) throw InputError("expected a group, got a " + to_string(d.kind));
  if (auto r = validate_group(d.group); !r.pass) throw InputError("invalid group: " + r.message);
  return d.group;
}

int cmd_bg(Context& ctx, const Options& o, std::ostream& out) {
  return emit_sset(ctx, out, bg(builtin_or_file(ctx, o.inputs.at(0)), o.truncate.value_or(3)));
}

int cmd_maps(Context& ctx, const Options& o, std::ostream& out) {
  if (o.inputs.size() != 2) throw InputError("maps needs a source and a target");
  auto a = ctx.load_sset(o.inputs[0]);
  auto b = ctx.load_sset(o.inputs[1]);
  const auto maps = enumerate_maps(a, b, ctx.limits());
  std::ostringstream text;
  text << "maps: " << maps.size() << '\n';
  json list = json::array();
  if (o.list) {
    for (const auto& f : maps) {
      std::string line;
      json entry = json::object();
      for (std::size_t n = 0; n < f.assignment.size(); ++n)
        for (std::size_t i = 0; i < f.assignment[n].size(); ++i) {
          const std::string from = a->name(SimplexId{static_cast<int>(n), static_cast<int>(i)});
          const std::string to = b->render(f.assignment[n][i]);
          line += (line.empty() ? "" : ", ") + from + " -> " + to;
          entry[from] = to;
        }
      text << "  " << line << '\n';
      list.push_back(entry);
    }
  }
  json data{{"count", maps.size()}};
  if (o.list) data["maps"] = list;
  return emit(ctx, out, text.str(), data);
}

int cmd_pi0(Context& ctx, const Options& o, std::ostream& out) {
  auto s = ctx.load_sset(o.inputs.at(0));
  const auto classes = pi0(*s);
  std::ostringstream text;
  text << "components: " << classes.size() << '\n';
  json list = json::array();
  for (const auto& c : classes) {
    json names = json::array();
    text << " ";
    for (int v : c) {
      text << ' ' << s->name(SimplexId{0, v});
      names.push_back(s->name(SimplexId{0, v}));
    }
    text << '\n';
    list.push_back(names);
  }
  return emit(ctx, out, text.str(), json{{"components", classes.size()}, {"classes", list}});
}

int cmd_pi1(Context& ctx, const Options& o, std::ostream& out) {
  auto s = ctx.load_sset(o.inputs.at(0));
  const int base = ctx.base_vertex(*s);
  const GroupPresentation p = pi1_presentation(*s, base);
  const AbelianDecomposition ab = abelianize(p);
  std::ostringstream text;
  text << "base: " << s->name(SimplexId{0, base}) << '\n';
  text << "presentation: " << p.to_string() << '\n';
  text << "abelianization: " << ab.to_string() << '\n';
  json data{{"base", s->name(SimplexId{0, base})},
            {"generators", p.generators},
            {"relators", p.relators.size()},
            {"presentation", p.to_string()},
            {"abelianization", ab.to_string()}};
  return emit(ctx, out, text.str(), data);
}

int cmd_homology(Context& ctx, const Options& o, std::ostream& out) {
  auto s = ctx.load_sset(o.inputs.at(0));
  std::vector<int> degrees;
  if (o.deg) {
    degrees.push_back(*o.deg);
  } else {
    const int top = s->open() ? s->truncation() - 1 : std::max(s->top_dimension(), 0);
    for (int k = 0; k <= top; ++k) degrees.push_back(k);
  }
  for (int k : degrees) {
    if (s->open() && k + 1 > s->truncation()) {
      throw TruncationError("H_" + std::to_string(k) + " needs dimension " + std::to_string(k + 1) +
                            " of an open presentation truncated at " + std::to_string(s->truncation()));
    }
  }
  std::ostringstream text;
  json data = json::array();
  for (int k : degrees) {
    const HomologyResult r = homology(*s, k);
    if (o.deg) {
      text << r.group.to_string() << '\n';
    } else {
      text << "H" << k << " = " << r.group.to_string() << '\n';
    }
    json torsion = json::array();
    for (const auto& t : r.group.torsion) torsion.push_back(t.str());
    data.push_back({{"degree", k}, {"group", r.group.to_string()}, {"free_rank", r.group.free_rank}, {"torsion", torsion}});
  }
  return emit(ctx, out, text.str(), o.deg ? data.front() : data);
}

int cmd_euler(Context& ctx, const Options& o, std::ostream& out) {
  auto s = ctx.load_sset(o.inputs.at(0));
  const long long chi = euler_characteristic(*s);
  return emit(ctx, out, std::to_string(chi) + "\n", json{{"euler", chi}});
}

int cmd_pin(Context& ctx, const Options& o, std::ostream& out) {
  auto s = ctx.load_sset(o.inputs.at(0));
  if (!o.deg) throw InputError("pin needs --deg");
  const int base = ctx.base_vertex(*s);
  const PiNClasses r = pi_n_classes(*s, base, *o.deg, ctx.limits());
  std::ostringstream text;
  text << "pi_" << *o.deg << " at " << s->name(SimplexId{0, base}) << '\n';
  text << "candidates: " << r.candidates << '\n';
  text << "classes: " << r.count << '\n';
  json reps = json::array();
  for (const auto& e : r.representatives) {
    text << "  " << s->render(e) << '\n';
    reps.push_back(s->render(e));
  }
  return emit(ctx, out, text.str(),
              json{{"degree", *o.deg}, {"candidates", r.candidates}, {"classes", r.count}, {"representatives", reps}});
}

int cmd_hcnerve(Context& ctx, const Options& o, std::ostream& out) {
  const Document d = ctx.load(o.inputs.at(0));
  SimplicialCategory c;
  if (d.kind == DocumentKind::scat) {
    c = d.scat;
  } else if (d.kind == DocumentKind::category) {
    c = discrete_enrichment(d.category);
  } else {
    throw InputError("hcnerve needs a simplicial category, got a " + to_string(d.kind));
  }
  if (auto r = validate_scat(c); !r.pass) throw InputError("invalid simplicial category: " + r.message);
  return emit_sset(ctx, out, hc_nerve(c, o.max_dim.value_or(2), ctx.limits()));
}

int cmd_export_cw(Context& ctx, const Options& o, std::ostream& out) {
  auto s = ctx.load_sset(o.inputs.at(0));
  const long long chi = euler_characteristic(*s);
  std::ostringstream text;
  json cells = json::array();
  for (int n = 0; n <= std::max(s->top_dimension(), 0); ++n) {
    text << "cells " << n << ": " << s->count(n) << '\n';
    cells.push_back(s->count(n));
  }
  text << "euler: " << chi << '\n';
  return emit(ctx, out, text.str(), json{{"cells", cells}, {"euler", chi}});
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite simplicial sets: construction, validation, Kan checks and invariants", "sset"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--threads", o.threads, "Worker threads (default: SSET_THREADS or hardware)");

  std::vector<std::pair<CLI::App*, Command>> commands;
  auto add = [&](const std::string& name, const std::string& help, Command cmd) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    commands.emplace_back(sub, std::move(cmd));
    return sub;
  };
  auto inputs = [&](CLI::App* sub, std::size_t n) {
    sub->add_option("input", o.inputs, "Input file, '-' for stdin")->expected(static_cast<int>(n))->required();
  };
  auto cap = [&](CLI::App* sub) { sub->add_option("--cap", o.cap, "Resource cap for exhaustive searches"); };

  auto* validate_cmd = add("validate", "Check a document's defining identities", cmd_validate);
  validate_cmd->add_option("input", o.inputs, "Input file, '-' or omitted for stdin")->expected(0, 1);

  auto* std_cmd = add("std", "Standard simplicial sets: simplex N, boundary N, horn N I, sphere N", cmd_std);
  std_cmd->add_option("construction", o.words)->required()->expected(2, 3);
  std_cmd->add_option("--truncate", o.truncate, "Truncation (default: the dimension)");

  auto* kan_cmd = add("kan", "Check horn fillers up to a dimension", cmd_kan);
  inputs(kan_cmd, 1);
  kan_cmd->add_option("--max-dim", o.max_dim, "Largest horn dimension (default 2)");
  kan_cmd->add_flag("--inner", o.inner, "Inner horns only");
  cap(kan_cmd);

  auto* fill_cmd = add("fill", "List fillers of one horn, e.g. --faces \"[_, s0 . 0, 01]\"", cmd_fill);
  inputs(fill_cmd, 1);
  fill_cmd->add_option("--faces", o.faces, "Face list with the missing face written _")->required();

  auto* product_cmd = add("product", "Binary product", cmd_product);
  inputs(product_cmd, 2);
  product_cmd->add_option("--truncate", o.truncate, "Truncation of the product");

  auto* nerve_cmd = add("nerve", "Nerve of a category or group", cmd_nerve);
  inputs(nerve_cmd, 1);
  nerve_cmd->add_option("--truncate", o.truncate, "Truncation (default 3)");

  auto* bg_cmd = add("bg", "Classifying space of a group file, Z/n or Sn", cmd_bg);
  inputs(bg_cmd, 1);
  bg_cmd->add_option("--truncate", o.truncate, "Truncation (default 3)");

  auto* maps_cmd = add("maps", "Count simplicial maps", cmd_maps);
  inputs(maps_cmd, 2);
  maps_cmd->add_flag("--list", o.list, "List every map");
  cap(maps_cmd);

  inputs(add("pi0", "Connected components", cmd_pi0), 1);

  auto* pi1_cmd = add("pi1", "Edge-path presentation of the fundamental group", cmd_pi1);
  inputs(pi1_cmd, 1);
  pi1_cmd->add_option("--base", o.base, "Base vertex name");

  auto* homology_cmd = add("homology", "Normalized simplicial homology", cmd_homology);
  inputs(homology_cmd, 1);
  homology_cmd->add_option("--deg", o.deg, "Single degree");

  inputs(add("euler", "Euler characteristic", cmd_euler), 1);

  auto* pin_cmd = add("pin", "Homotopy classes of based n-simplices in a Kan complex", cmd_pin);
  inputs(pin_cmd, 1);
  pin_cmd->add_option("--deg", o.deg, "Degree n")->required();
  pin_cmd->add_option("--base", o.base, "Base vertex name");
  cap(pin_cmd);

  auto* hc_cmd = add("hcnerve", "Homotopy coherent nerve of a simplicial category", cmd_hcnerve);
  inputs(hc_cmd, 1);
  hc_cmd->add_option("--max-dim", o.max_dim, "Largest dimension, at most 3 (default 2)");
  cap(hc_cmd);

  inputs(add("export-cw", "Cell counts and Euler characteristic", cmd_export_cw), 1);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  const unsigned previous_threads = thread_count();
  if (o.threads > 0) set_thread_count(o.threads);
  struct Restore {
    unsigned threads;
    ~Restore() { set_thread_count(threads); }
  } restore{previous_threads};

  Context ctx(o, in);
  for (auto& [sub, cmd] : commands) {
    if (!sub->parsed()) continue;
    try {
      return cmd(ctx, o, out);
    } catch (const NoFillerError& e) {
      err << "error: " << e.what() << '\n';
      return kFailure;
    } catch (const ResourceError& e) {
      err << "error: " << e.what() << " (explored " << e.explored() << ")\n";
      return kResourceCap;
    } catch (const Error& e) {
      err << "error: " << e.what() << '\n';
      return kInputError;
    } catch (const std::out_of_range&) {
      err << "error: missing input\n";
      return kInputError;
    }
  }
  return kInputError;
}

}  // namespace sset::cli
