// ih: intersection homology of filtered simplicial complexes.
//
//   ih compute   --builtin NAME | --complex FILE  [options]
//   ih validate  --builtin NAME | --complex FILE
//   ih oracle    cone|profile --link NAME ...
//   ih transform --builtin NAME | --complex FILE --transform T ...
//   ih examples

#include "ih/builtins.hpp"
#include "ih/homology.hpp"
#include "ih/io.hpp"
#include "ih/localcalc.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace {

using namespace ih;
using io::json;

constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitInvariant = 4;

struct SourceOptions {
  std::string builtin;
  std::string file;
  std::vector<std::string> transforms;
  std::vector<Vertex> marks;

  void attach(CLI::App* app, bool with_transforms) {
    auto* b = app->add_option("--builtin", builtin, "named example space");
    auto* c = app->add_option("--complex", file, "complex JSON file");
    b->excludes(c);
    c->excludes(b);
    if (!with_transforms) return;
    app->add_option("--transform", transforms,
                    "cone | suspend | subdivide | product-circle[:m] | "
                    "product-path[:m] | mark:v[,v...]; applied in order");
    app->add_option("--mark", marks, "vertices moved into X^0 (after transforms)")
        ->delimiter(',');
  }

  std::string label() const {
    std::string out = builtin.empty() ? file : builtin;
    for (const auto& t : transforms) out += " | " + t;
    if (!marks.empty()) {
      out += " | mark:";
      for (std::size_t i = 0; i < marks.size(); ++i)
        out += (i ? "," : "") + std::to_string(marks[i]);
    }
    return out;
  }
};

int parse_count(const std::string& text, const std::string& op) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty())
    throw std::invalid_argument("bad argument '" + text + "' to " + op);
  return value;
}

FilteredComplex apply_transform(const FilteredComplex& x, const std::string& text) {
  const auto colon = text.find(':');
  const std::string op = text.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : text.substr(colon + 1);
  if (op == "cone" && arg.empty()) return cone(x);
  if (op == "suspend" && arg.empty()) return suspension(x);
  if (op == "subdivide" && arg.empty()) return barycentric_subdivide(x);
  if (op == "product-circle")
    return product_with_graph(x, LineGraph::circle(arg.empty() ? 3 : parse_count(arg, op)));
  if (op == "product-path")
    return product_with_graph(x, LineGraph::path(arg.empty() ? 2 : parse_count(arg, op)));
  if (op == "mark" && !arg.empty()) {
    std::set<Vertex> vs;
    std::stringstream in(arg);
    for (std::string item; std::getline(in, item, ',');) vs.insert(parse_count(item, op));
    return mark_points(x, vs);
  }
  throw std::invalid_argument("unknown transform '" + text + "'");
}

FilteredComplex load_source(const SourceOptions& src) {
  if (src.builtin.empty() && src.file.empty())
    throw std::invalid_argument("one of --builtin or --complex is required");
  const auto names = builtin_names();
  if (!src.builtin.empty() &&
      std::find(names.begin(), names.end(), src.builtin) == names.end())
    throw std::invalid_argument("unknown builtin '" + src.builtin + "'");
  FilteredComplex x = src.builtin.empty()
                          ? io::complex_from_json(io::load_json_file(src.file))
                          : builtin(src.builtin);
  for (const auto& t : src.transforms) x = apply_transform(x, t);
  if (!src.marks.empty())
    x = mark_points(x, std::set<Vertex>(src.marks.begin(), src.marks.end()));
  return x;
}

Perversity perversity_for(const std::string& text, int n) {
  Perversity p = Perversity::parse(text, n);
  if (p.length() < n)
    throw std::invalid_argument("perversity '" + text + "' needs " +
                                std::to_string(n) + " entries");
  return p.restricted(n);
}

json complex_stats(const FilteredComplex& x) {
  json f_vector = json::array();
  for (int d = 0; d <= x.max_dimension(); ++d) f_vector.push_back(x.simplices(d).size());
  std::size_t singular = 0;
  for (const auto& [s, j] : x.skeleton_map())
    if (j < x.formal_dim()) ++singular;
  return {{"formal_dim", x.formal_dim()},
          {"vertices", x.vertices().size()},
          {"f_vector", f_vector},
          {"singular_simplices", singular},
          {"euler_characteristic", x.euler_characteristic()}};
}

json perversity_json(const Perversity& p) {
  return {{"values", p.values()}, {"kind", to_string(p.kind())}};
}

void write_json(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

std::string group_cell(const ModuleGroup& g) {
  std::string t;
  for (std::size_t i = 0; i < g.torsion.size(); ++i)
    t += (i ? "," : "") + g.torsion[i].str();
  return t.empty() ? "-" : t;
}

void print_table(std::ostream& out, const GradedModule& m) {
  out << std::left << std::setw(4) << "i" << std::setw(7) << "betti"
      << "torsion\n";
  const std::size_t end = std::max<std::size_t>(m.support_end(), 1);
  for (std::size_t i = 0; i < end; ++i)
    out << std::setw(4) << i << std::setw(7) << m[i].betti << group_cell(m[i]) << "\n";
}

std::set<Simplex> closure(const FilteredComplex& x, const json& j) {
  const json& list = j.is_object() ? j.at("simplices") : j;
  if (!list.is_array()) throw io::FormatError("relative set must list simplices");
  std::set<Simplex> out;
  for (const auto& entry : list) {
    const Simplex s(entry.get<std::vector<Vertex>>());
    if (!x.contains(s))
      throw ComplexError("relative simplex " + s.to_string() + " not in complex");
    for (const auto& [t, level] : x.skeleton_map())
      if (t.is_face_of(s)) out.insert(t);
  }
  return out;
}

// ---------------------------------------------------------------- compute

struct ComputeOptions {
  SourceOptions src;
  std::string perversity = "zero";
  std::string ring = "Z";
  std::string coefficients_file;
  std::string mode = "g0";
  int rank = 1;
  std::string relative_file;
  std::optional<Vertex> relative_star;
  bool les = false;
  std::string format = "table";
  std::string dump_file;
};

int run_compute(const ComputeOptions& o) {
  const FilteredComplex x = load_source(o.src);
  const Perversity p = perversity_for(o.perversity, x.formal_dim());
  const CoefficientSystem sys =
      o.coefficients_file.empty()
          ? CoefficientSystem::constant(Ring::parse(o.ring), parse_mode(o.mode), o.rank)
          : io::coefficients_from_json(io::load_json_file(o.coefficients_file), x);

  std::optional<std::set<Simplex>> sub;
  json relative = nullptr;
  if (!o.relative_file.empty()) {
    sub = closure(x, io::load_json_file(o.relative_file));
    relative = {{"file", o.relative_file}};
  } else if (o.relative_star) {
    sub = closed_star(x, *o.relative_star);
    relative = {{"closed_star", *o.relative_star}};
  }
  if (sub) relative["simplices"] = sub->size();

  const HomologyResult h =
      sub ? relative_homology(x, *sub, p, sys) : intersection_homology(x, p, sys);

  std::optional<LesReport> les;
  if (o.les) {
    if (!sub) throw std::invalid_argument("--les needs --relative or --relative-star");
    les = les_check(x, *sub, p, sys);
  }

  if (!o.dump_file.empty()) {
    const json dump = sys.ring().visit([&](auto ring) {
      return io::ic_dump(build_ic_complex(ring, x, p, sys));
    });
    std::ofstream out(o.dump_file);
    if (!out) throw io::FormatError("cannot write '" + o.dump_file + "'");
    write_json(out, dump);
  }

  const std::string ring = sys.ring().name();
  if (o.format == "json") {
    json report;
    report["degrees"] = io::module_to_json(h);
    report["provenance"] = {{"source", o.src.label()},
                            {"complex", complex_stats(x)},
                            {"perversity", perversity_json(p)},
                            {"mode", to_string(sys.mode())},
                            {"ring", ring},
                            {"stalk_rank", sys.rank()},
                            {"local_system", !sys.is_constant()},
                            {"relative", relative}};
    if (les) {
      report["les"] = {{"exact", les->exact()},
                       {"rank_only", les->rank_only},
                       {"failures", les->failures()}};
    }
    write_json(std::cout, report);
  } else {
    const json stats = complex_stats(x);
    std::cout << "complex:    " << o.src.label() << " (formal_dim "
              << x.formal_dim() << ", f-vector " << stats["f_vector"].dump()
              << ", chi " << x.euler_characteristic() << ")\n"
              << "perversity: " << p.to_string() << " (" << to_string(p.kind())
              << ")\n"
              << "mode:       " << to_string(sys.mode()) << "\n"
              << "ring:       " << ring << (sys.rank() > 1 ? "^" + std::to_string(sys.rank()) : "")
              << (sys.is_constant() ? "" : " (local system)") << "\n";
    if (sub) std::cout << "relative:   " << relative.dump() << "\n";
    print_table(std::cout, h);
    if (les) {
      std::cout << "les:        " << (les->exact() ? "exact" : "NOT exact")
                << (les->rank_only ? " (ranks)" : "") << "\n";
      for (const auto& f : les->failures()) std::cout << "  " << f << "\n";
    }
  }
  return 0;
}

// --------------------------------------------------------------- validate

int run_validate(const SourceOptions& src, const std::string& format) {
  const FilteredComplex x = load_source(src);
  const ValidationReport r = validate_pseudomanifold(x);
  if (format == "json") {
    write_json(std::cout, {{"source", src.label()},
                           {"complex", complex_stats(x)},
                           {"pseudomanifold", r.pseudomanifold()},
                           {"skeleta_coincide", r.skeleta_coincide},
                           {"homogeneous", r.homogeneous},
                           {"regular_codim_one", r.regular_codim_one},
                           {"closed", r.closed},
                           {"singular_set_nowhere_dense", r.singular_set_nowhere_dense},
                           {"link_conditions", r.link_conditions},
                           {"problems", r.problems}});
  } else {
    std::cout << src.label() << ": "
              << (r.pseudomanifold() ? "pseudomanifold" : "not a pseudomanifold")
              << (r.closed ? ", closed" : "") << " (link conditions "
              << r.link_conditions << ")\n";
    for (const auto& problem : r.problems) std::cout << "  " << problem << "\n";
  }
  return r.pseudomanifold() ? 0 : kExitValidation;
}

// ----------------------------------------------------------------- oracle

struct OracleOptions {
  std::string link;
  std::string link_file;
  std::string perversity = "zero";
  std::string ring = "Z";
  int n = 0;
  int k = 0;
};

FilteredComplex load_link(const OracleOptions& o) {
  SourceOptions src;
  src.builtin = o.link;
  src.file = o.link_file;
  return load_source(src);
}

json row_json(std::size_t degree, const ModuleGroup& g) {
  json torsion = json::array();
  for (const auto& t : g.torsion) torsion.push_back(t.str());
  return {{"i", degree}, {"betti", g.betti}, {"torsion", torsion}};
}

json group_json(const ModuleGroup& g) {
  json torsion = json::array();
  for (const auto& t : g.torsion) torsion.push_back(t.str());
  return {{"betti", g.betti}, {"torsion", torsion}};
}

int run_oracle_cone(const OracleOptions& o) {
  const FilteredComplex link = load_link(o);
  const int n = o.n > 0 ? o.n : link.formal_dim() + 1;
  if (n != link.formal_dim() + 1)
    throw std::invalid_argument("--n must be one more than the link's formal dimension");
  const Perversity p = perversity_for(o.perversity, n);
  const Ring ring = Ring::parse(o.ring);
  const auto sys = CoefficientSystem::constant(ring, CoefficientMode::G0, 1);

  const FilteredComplex cl = cone(link);
  const Vertex apex = cl.vertices().back();
  std::set<Simplex> base;
  for (const auto& [s, j] : cl.skeleton_map())
    if (!s.contains(apex)) base.insert(s);

  const GradedModule ih_link = intersection_homology(link, p.restricted(n - 1), sys);
  const GradedModule compact_formula = localcalc::cone_compact(ih_link, n, p);
  const GradedModule compact_chain = intersection_homology(cl, p, sys);
  const GradedModule closed_formula = localcalc::cone_closed_support(ih_link, n, p);
  const GradedModule closed_chain = relative_homology(cl, base, p, sys);

  json rows = json::array();
  const std::size_t end = std::max({ih_link.support_end(), compact_chain.support_end(),
                                    closed_chain.support_end(), closed_formula.support_end(),
                                    std::size_t{1}});
  for (std::size_t i = 0; i < end; ++i) {
    rows.push_back({{"i", i},
                    {"link", group_json(ih_link[i])},
                    {"compact_formula", group_json(compact_formula[i])},
                    {"compact_chain", group_json(compact_chain[i])},
                    {"closed_formula", group_json(closed_formula[i])},
                    {"closed_chain", group_json(closed_chain[i])}});
  }
  write_json(std::cout,
             {{"oracle", "cone"},
              {"link", o.link.empty() ? o.link_file : o.link},
              {"n", n},
              {"perversity", perversity_json(p)},
              {"ring", ring.name()},
              {"compact_cutoff", n - 1 - p(n)},
              {"closed_cutoff", n - p(n)},
              {"rows", rows},
              {"compact_match", compact_formula == compact_chain},
              {"closed_match", closed_formula == closed_chain}});
  return 0;
}

int run_oracle_profile(const OracleOptions& o) {
  const FilteredComplex link = load_link(o);
  const int k = o.k > 0 ? o.k : link.formal_dim() + 1;
  if (k != link.formal_dim() + 1)
    throw std::invalid_argument("--k must be one more than the link's formal dimension");
  const int n = o.n > 0 ? o.n : k;
  if (n < k) throw std::invalid_argument("--n must be at least --k");
  const Perversity p = perversity_for(o.perversity, n);
  const auto sys = CoefficientSystem::constant(Ring::parse(o.ring), CoefficientMode::G0, 1);
  const GradedModule ih_link = intersection_homology(link, p.restricted(k - 1), sys);

  json rows = json::array();
  for (const auto& r : localcalc::local_attaching_profile(ih_link, n, k, p)) {
    rows.push_back({{"i", r.degree},
                    {"neighborhood", group_json(r.neighborhood)},
                    {"deleted", group_json(r.deleted)},
                    {"iso_expected", r.iso_expected},
                    {"agree", r.neighborhood == r.deleted}});
  }
  json link_rows = json::array();
  for (std::size_t i = 0; i < ih_link.support_end(); ++i)
    link_rows.push_back(row_json(i, ih_link[i]));
  write_json(std::cout, {{"oracle", "profile"},
                         {"link", o.link.empty() ? o.link_file : o.link},
                         {"n", n},
                         {"k", k},
                         {"perversity", perversity_json(p)},
                         {"ring", sys.ring().name()},
                         {"link_homology", link_rows},
                         {"iso_from", n - p(k)},
                         {"rows", rows}});
  return 0;
}

// -------------------------------------------------------------- transform

int run_transform(const SourceOptions& src, const std::string& out_file) {
  const json j = io::complex_to_json(load_source(src));
  if (out_file.empty()) {
    write_json(std::cout, j);
  } else {
    std::ofstream out(out_file);
    if (!out) throw io::FormatError("cannot write '" + out_file + "'");
    write_json(out, j);
  }
  return 0;
}

int run_examples(const std::string& format) {
  json list = json::array();
  for (const auto& name : builtin_names()) {
    const FilteredComplex x = builtin(name);
    if (format == "json") {
      list.push_back({{"name", name}, {"complex", complex_stats(x)}});
    } else {
      std::cout << std::left << std::setw(14) << name << " formal_dim "
                << x.formal_dim() << ", " << x.vertices().size() << " vertices, "
                << x.size() << " simplices, chi " << x.euler_characteristic() << "\n";
    }
  }
  if (format == "json") write_json(std::cout, list);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Intersection homology of filtered simplicial complexes"};
  app.require_subcommand(1);
  const std::vector<std::string> formats{"table", "json"};

  ComputeOptions compute;
  auto* c = app.add_subcommand("compute", "intersection homology of a complex");
  compute.src.attach(c, true);
  c->add_option("--perversity,-p", compute.perversity,
                "comma list p(1),...,p(n) or zero|lower-middle|upper-middle|top|gm-super");
  auto* ring_opt = c->add_option("--coefficients", compute.ring, "Z | Q | Fp:<p>");
  auto* file_opt = c->add_option("--coefficients-file", compute.coefficients_file,
                                 "coefficient system JSON (ring, mode, rank, transports)");
  auto* mode_opt = c->add_option("--mode", compute.mode, "g0 | full");
  auto* rank_opt = c->add_option("--rank", compute.rank, "stalk rank of constant coefficients");
  file_opt->excludes(ring_opt)->excludes(mode_opt)->excludes(rank_opt);
  auto* rel_file = c->add_option("--relative", compute.relative_file,
                                 "JSON list of simplices; their closure is A");
  auto* rel_star = c->add_option("--relative-star", compute.relative_star,
                                 "A = closed star of this vertex");
  rel_file->excludes(rel_star);
  c->add_flag("--les", compute.les, "check the long exact sequence of the pair");
  c->add_option("--format", compute.format)->check(CLI::IsMember(formats));
  c->add_option("--dump", compute.dump_file, "write allowable simplices and IC matrices");

  SourceOptions validate;
  std::string validate_format = "table";
  auto* v = app.add_subcommand("validate", "pseudomanifold checks");
  validate.attach(v, true);
  v->add_option("--format", validate_format)->check(CLI::IsMember(formats));

  OracleOptions oracle;
  auto* o = app.add_subcommand("oracle", "closed-form local calculations vs chains");
  o->require_subcommand(1);
  for (auto* sub : {o->add_subcommand("cone", "cone formulas against chain-level IH"),
                    o->add_subcommand("profile", "attaching profile of a stratum")}) {
    auto* l = sub->add_option("--link", oracle.link, "builtin link");
    auto* lf = sub->add_option("--link-file", oracle.link_file, "link complex JSON");
    l->excludes(lf);
    sub->add_option("--perversity,-p", oracle.perversity);
    sub->add_option("--coefficients", oracle.ring);
    sub->add_option("--n", oracle.n, "dimension of the ambient space");
    if (sub->get_name() == "profile")
      sub->add_option("--k", oracle.k, "codimension of the stratum");
  }

  SourceOptions transform;
  std::string transform_out;
  auto* t = app.add_subcommand("transform", "apply transforms and print the complex JSON");
  transform.attach(t, true);
  t->add_option("--out,-o", transform_out, "output file (default stdout)");

  std::string examples_format = "table";
  auto* e = app.add_subcommand("examples", "list the builtin spaces");
  e->add_option("--format", examples_format)->check(CLI::IsMember(formats));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& err) {
    return app.exit(err);
  } catch (const CLI::CallForAllHelp& err) {
    return app.exit(err);
  } catch (const CLI::ParseError& err) {
    std::cerr << "ih: " << err.what() << "\n";
    return kExitParse;
  }

  try {
    if (c->parsed()) return run_compute(compute);
    if (v->parsed()) return run_validate(validate, validate_format);
    if (o->parsed()) {
      return o->got_subcommand("cone") ? run_oracle_cone(oracle)
                                       : run_oracle_profile(oracle);
    }
    if (t->parsed()) return run_transform(transform, transform_out);
    return run_examples(examples_format);
  } catch (const ComplexError& err) {
    std::cerr << "ih: invalid complex: " << err.what() << "\n";
    return kExitValidation;
  } catch (const CoefficientError& err) {
    std::cerr << "ih: invalid coefficients: " << err.what() << "\n";
    return kExitValidation;
  } catch (const InvariantViolation& err) {
    std::cerr << "ih: internal invariant violated: " << err.what() << "\n";
    return kExitInvariant;
  } catch (const json::exception& err) {
    std::cerr << "ih: malformed input: " << err.what() << "\n";
    return kExitParse;
  } catch (const std::invalid_argument& err) {
    std::cerr << "ih: " << err.what() << "\n";
    return kExitParse;
  } catch (const std::out_of_range& err) {
    std::cerr << "ih: " << err.what() << "\n";
    return kExitParse;
  }
}
