#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "torreg/catalog.hpp"
#include "torreg/classify.hpp"
#include "torreg/tables.hpp"
#include "torreg/torus.hpp"

using namespace torreg;
using json = nlohmann::json;

namespace {

constexpr const char* kVersion = "1.0.0";

enum Exit { ok = 0, rejected = 1, precondition = 2, input = 3 };

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

mpq_class parse_rational(const std::string& s) {
  try {
    mpq_class q(s);
    q.canonicalize();
    if (q <= 0) throw InputError("parameter must be positive: " + s);
    return q;
  } catch (const std::invalid_argument&) {
    throw InputError("not an exact rational: " + s);
  }
}

Family parse_family(const std::string& s) {
  const auto f = family_from_name(s);
  if (!f) throw InputError("unknown lattice family: " + s);
  return *f;
}

json typo_json() {
  json a = json::array();
  for (const auto& t : typo_log())
    a.push_back({{"polyhedron", t.polyhedron},
                 {"generator", t.generator},
                 {"printed", t.printed},
                 {"corrected", t.corrected},
                 {"reason", t.reason}});
  return a;
}

struct Report {
  json j;
  explicit Report(const std::vector<std::string>& argv) {
    j["command"] = argv;
    j["version"] = kVersion;
    j["items"] = json::array();
    j["typo_corrections"] = typo_json();
  }
  void emit(const std::string& out_path) const {
    const std::string text = j.dump(2) + "\n";
    if (out_path.empty()) std::cout << text;
    else write_file(out_path, text);
  }
};

json classification_json(const ClassificationResult& r) {
  json j;
  j["family"] = family_name(r.family);
  j["scale"] = json::array();
  for (const auto& s : r.scale) j["scale"].push_back(s.str());
  j["rotation_deg"] = r.rotation_steps * 30;
  j["witness"] = json::array();
  for (const auto& row : r.witness) {
    json jr = json::array();
    for (const auto& x : row) jr.push_back(x.get_str());
    j["witness"].push_back(jr);
  }
  j["summary"] = r.str();
  return j;
}

int cmd_classify(Report& rep, const std::string& file, const std::string& group) {
  const Lattice l = lattice_from_json(read_file(file));
  ClassificationResult r;
  if (group == "oct") r = classify_oct(l);
  else if (group == "d2") r = classify_dihedral(2, l);
  else if (group == "d3") r = classify_dihedral(3, l);
  else if (group == "d4") r = classify_dihedral(4, l);
  else if (group == "d6") r = classify_dihedral(6, l);
  else throw InputError("unknown group: " + group);
  json item = classification_json(r);
  item["lattice"] = json::parse(lattice_to_json(l));
  item["group"] = group;
  rep.j["items"].push_back(item);
  rep.j["summary"] = {{"classified", true}};
  return Exit::ok;
}

std::vector<ParamPoint> grid_for(const std::string& name, int max_den, const std::optional<std::string>& max_num) {
  const TableKind k = table_kind(name);
  if (!max_num) return default_grid(name, max_den);
  const mpq_class bound = parse_rational(*max_num);
  const auto fr = fractions(max_den, bound);
  return k == TableKind::blended ? grid_ab(fr, fr) : grid_a(fr);
}

int cmd_verify_table(Report& rep, const std::string& table, const std::string& row, const std::string& family,
                     int max_den, const std::optional<std::string>& max_num) {
  TableKind kind;
  if (table == "finite") kind = TableKind::finite;
  else if (table == "pure") kind = TableKind::pure;
  else if (table == "planar") kind = TableKind::planar;
  else if (table == "blended") kind = TableKind::blended;
  else throw InputError("unknown table: " + table);
  std::vector<std::string> rows;
  if (!row.empty()) {
    const std::string n = spec(row).name;
    if (table_kind(n) != kind) throw InputError(n + " is not in the " + table + " table");
    rows.push_back(n);
  } else {
    for (const auto& s : catalog())
      if (table_kind(s.name) == kind) rows.push_back(s.name);
  }
  std::optional<Family> only;
  if (!family.empty()) only = parse_family(family);
  long total = 0, discrepancies = 0, cells = 0;
  for (const auto& name : rows)
    for (Family f : table_families(name)) {
      if (only && *only != f) continue;
      const ScanResult r = scan_parameters(name, f, grid_for(name, max_den, max_num));
      json cell;
      cell["polyhedron"] = name;
      cell["lattice_family"] = family_name(f);
      cell["grid_points"] = r.entries.size();
      cell["accepted"] = json::array();
      for (const auto& x : r.accepted()) cell["accepted"].push_back(x.str());
      cell["discrepancies"] = json::array();
      for (const auto& e : r.discrepancies()) {
        json d;
        d["params"] = e.x.str();
        d["oracle"] = e.oracle.accepted;
        d["table"] = e.predicted;
        if (!e.oracle.accepted) d["reason"] = reason_name(e.oracle.reason);
        if (kind == TableKind::blended) {
          const BlendedClauses c = blended_clauses(name, f, e.x);
          d["bullet"] = c.bullet;
          if (c.prose_excluded) d["prose"] = c.prose_source;
        }
        cell["discrepancies"].push_back(d);
      }
      total += static_cast<long>(r.entries.size());
      discrepancies += static_cast<long>(r.discrepancies().size());
      ++cells;
      rep.j["items"].push_back(cell);
    }
  if (cells == 0) throw InputError("no table cell matches the filter");
  rep.j["summary"] = {{"table", table}, {"cells", cells}, {"grid_points", total}, {"discrepancies", discrepancies}};
  if (kind == TableKind::blended)
    rep.j["summary"]["orientation"] =
        kBlendedOrientation == Orientation::listed_forbidden ? "listed conditions forbidden" : "listed conditions admissible";
  return discrepancies == 0 ? Exit::ok : Exit::rejected;
}

int cmd_quotient(Report& rep, const std::string& name, const std::string& family, const std::vector<std::string>& params,
                 const std::string& export_path) {
  const PolyhedronSpec& s = spec(name);
  const Family f = parse_family(family);
  if (params.empty() || params.size() > 2) throw InputError("quotient takes one or two parameters");
  ParamPoint x{parse_rational(params[0]), params.size() > 1 ? parse_rational(params[1]) : mpq_class(1)};
  const TableKind k = table_kind(s.name);
  const QuotientPolyhedron q = quotient(s, table_lattice(f, x, k));
  const QuotientVerdict v = check_regular(q);
  std::optional<bool> prediction;
  try {
    prediction = table_predicate(s.name, f, x);
  } catch (const TableError&) {
  }
  std::vector<Surd> ps{Surd(x.a)};
  if (params.size() > 1) ps.emplace_back(x.b);
  rep.j["items"].push_back(json::parse(verdict_json(s.name, family_name(f), ps, v, prediction)));
  if (!export_path.empty() && v.accepted) {
    write_file(export_path, quotient_off(q));
    write_file(export_path + ".edges", quotient_edge_sidecar(q));
    rep.j["export"] = {{"off", export_path}, {"edges", export_path + ".edges"}};
  }
  rep.j["summary"] = {{"accepted", v.accepted}};
  return v.accepted ? Exit::ok : Exit::rejected;
}

int cmd_crystal_check(Report& rep, const std::vector<std::string>& gens, const std::string& preset, int rotation_order,
                      const std::string& coxeter) {
  json item;
  bool pass = true;
  if (rotation_order > 0) {
    // trace of a rotation of order n is 1 + 2cos(2pi/n)
    const bool integral = rotation_order_crystallographic(rotation_order);
    item["rotation_order"] = rotation_order;
    item["cos_degree"] = cos_degree(rotation_order);
    item["trace"] = integral ? "integral" : "non-integral";
    pass = integral;
  } else if (!coxeter.empty()) {
    int p = 0, q = 0;
    if (std::sscanf(coxeter.c_str(), "%d,%d", &p, &q) != 2 || p < 2 || q < 2) throw InputError("coxeter expects p,q");
    pass = coxeter_crystallographic(p, q);
    item["coxeter"] = coxeter;
    item["periods"] = {{"p", rotation_order_crystallographic(p)}, {"q", rotation_order_crystallographic(q)}};
  } else {
    std::vector<Isometry> g;
    if (!preset.empty()) {
      std::vector<Mat> ms;
      if (preset == "[3,4]" || preset == "oct") ms = oct_generators();
      else if (preset == "d2") ms = dihedral_generators(2);
      else if (preset == "d3") ms = dihedral_generators(3);
      else if (preset == "d4") ms = dihedral_generators(4);
      else if (preset == "d6") ms = dihedral_generators(6);
      else if (preset == "identity") ms = {Mat::identity(3)};
      else throw InputError("unknown preset: " + preset);
      for (const auto& m : ms) g.push_back(Isometry::linear_only(m));
    }
    for (const auto& s : gens) g.push_back(Isometry::linear_only(Isometry::parse(s).linear));
    if (g.empty()) throw InputError("no generators given");
    const FiniteGroup fg = closure(g);
    const CrystalReport r = crystallographic_check(fg);
    pass = r.ok;
    item["group_order"] = fg.order();
    if (!r.ok) {
      item["offender"] = r.offender->str();
      item["trace"] = r.trace;
      item["reason"] = r.reason;
    }
  }
  item["crystallographic"] = pass;
  rep.j["items"].push_back(item);
  rep.j["summary"] = {{"crystallographic", pass}};
  return pass ? Exit::ok : Exit::rejected;
}

int cmd_list(Report& rep) {
  for (const auto& s : catalog()) {
    json item;
    item["name"] = s.name;
    item["kind"] = kind_name(s.kind);
    item["schlafli"] = {{"p", s.p == 0 ? json("inf") : json(s.p)}, {"q", s.q == 0 ? json("inf") : json(s.q)}};
    item["base_vertex"] = s.base_vertex.str();
    item["generators"] = {s.gens[0].str(), s.gens[1].str(), s.gens[2].str()};
    item["petrie_partner"] = s.petrie_partner;
    item["table"] = table_kind_name(table_kind(s.name));
    item["families"] = json::array();
    for (Family f : table_families(s.name)) item["families"].push_back(family_name(f));
    rep.j["items"].push_back(item);
  }
  rep.j["summary"] = {{"polyhedra", catalog().size()}};
  return Exit::ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regular polyhedra on the 3-torus: lattices, quotients and parameter tables"};
  app.require_subcommand(1);
  std::string out;
  app.add_option("--out", out, "Write the JSON report to this file");

  std::string lattice_file, group = "oct";
  auto* classify = app.add_subcommand("classify", "Classify a lattice invariant under a point group");
  classify->add_option("lattice", lattice_file, "Lattice JSON file")->required();
  classify->add_option("--group", group, "oct, d2, d3, d4 or d6");

  std::string table, row, family;
  int max_den = 6;
  std::optional<std::string> max_num;
  auto* verify = app.add_subcommand("verify-table", "Compare a parameter table with the quotient oracle");
  verify->add_option("table", table, "finite, pure, planar or blended")->required();
  verify->add_option("--row", row, "Restrict to one polyhedron");
  verify->add_option("--family", family, "Restrict to one lattice family");
  verify->add_option("--max-den", max_den, "Largest denominator of a grid parameter");
  verify->add_option("--max-num", max_num, "Largest grid parameter value (exact rational)");

  std::string name, qfamily, export_path;
  std::vector<std::string> params;
  auto* quot = app.add_subcommand("quotient", "Quotient a polyhedron by a scaled lattice");
  quot->add_option("polyhedron", name)->required();
  quot->add_option("family", qfamily)->required();
  quot->add_option("params", params, "a, or a and b")->required();
  quot->add_option("--export", export_path, "OFF file for the quotient (edges in <file>.edges)");

  std::vector<std::string> gens;
  std::string preset, coxeter;
  int rotation_order = 0;
  auto* crystal = app.add_subcommand("crystal-check", "Check the crystallographic restriction");
  crystal->add_option("--gen", gens, "Generator formula such as (y,x,-z)");
  crystal->add_option("--preset", preset, "[3,4], d2, d3, d4, d6 or identity");
  crystal->add_option("--rotation-order", rotation_order, "Abstract rotation of this order");
  crystal->add_option("--coxeter", coxeter, "Abstract Coxeter group p,q");

  auto* list = app.add_subcommand("list", "Dump the polyhedron catalog");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? Exit::ok : Exit::input;
  }

  Report rep(std::vector<std::string>(argv + 1, argv + argc));
  int code = Exit::ok;
  try {
    if (*classify) code = cmd_classify(rep, lattice_file, group);
    else if (*verify) code = cmd_verify_table(rep, table, row, family, max_den, max_num);
    else if (*quot) code = cmd_quotient(rep, name, qfamily, params, export_path);
    else if (*crystal) code = cmd_crystal_check(rep, gens, preset, rotation_order, coxeter);
    else if (*list) code = cmd_list(rep);
  } catch (const PreconditionError& e) {
    rep.j["error"] = e.what();
    code = Exit::precondition;
  } catch (const TableError& e) {
    rep.j["error"] = e.what();
    code = Exit::precondition;
  } catch (const ParseError& e) {
    rep.j["error"] = e.what();
    code = Exit::input;
  } catch (const InputError& e) {
    rep.j["error"] = e.what();
    code = Exit::input;
  } catch (const UnknownPolyhedron& e) {
    rep.j["error"] = e.what();
    code = Exit::input;
  } catch (const LatticeError& e) {
    rep.j["error"] = e.what();
    code = Exit::precondition;
  }
  rep.j["exit_code"] = code;
  try {
    rep.emit(out);
  } catch (const InputError& e) {
    std::cerr << e.what() << "\n";
    return Exit::input;
  }
  return code;
}
