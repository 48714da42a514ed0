#include "torreg/catalog.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace torreg {

namespace {

struct Row {
  const char* name;
  const char* base;
  const char* r0;
  const char* r1;
  const char* r2;
  int p;
  int q;
  PolyKind kind;
  const char* blend;
  const char* partner;
};

constexpr const char* kM2 = "(1/2*x+1/2*s3*y,1/2*s3*x-1/2*y)";
constexpr const char* kM3 = "(1/2*x+1/2*s3*y,1/2*s3*x-1/2*y,z)";
constexpr const char* kM3neg = "(1/2*x+1/2*s3*y,1/2*s3*x-1/2*y,-z)";

// Generator tables; "A" is the blend height.
const std::vector<Row>& rows() {
  static const std::vector<Row> r = {
      {"{3,3}", "(1,1,1)", "(-y,-x,z)", "(z,y,x)", "(y,x,z)", 3, 3, PolyKind::finite, "", "{4,3}_3"},
      {"{3,4}", "(1,0,0)", "(y,x,z)", "(x,z,y)", "(x,y,-z)", 3, 4, PolyKind::finite, "", "{6,4}_3"},
      {"{4,3}", "(1,1,1)", "(x,y,-z)", "(x,z,y)", "(y,x,z)", 4, 3, PolyKind::finite, "", "{6,3}_4"},
      {"{4,4}", "(0,0)", "(1-x,y)", "(y,x)", "(x,-y)", 4, 4, PolyKind::planar, "", "{inf,4}_4"},
      {"{3,6}", "(0,0)", "(1-x,y)", kM2, "(x,-y)", 3, 6, PolyKind::planar, "", "{inf,6}_3"},
      {"{6,3}", "(1/2,1/6*s3)", "(x,-y)", kM2, "(1-x,y)", 6, 3, PolyKind::planar, "", "{inf,3}_6"},
      {"{4,4}#{}", "(0,0,0)", "(1-x,y,A-z)", "(y,x,z)", "(x,-y,z)", 4, 4, PolyKind::blended_finite_face, "1", "{inf,4}_4#{}"},
      {"{6,3}#{}", "(1/2,1/6*s3,0)", "(x,-y,A-z)", kM3, "(1-x,y,z)", 6, 3, PolyKind::blended_finite_face, "1/3", "{inf,3}_6#{}"},
      {"{3,6}#{}", "(0,0,0)", "(1-x,y,A-z)", kM3, "(x,-y,z)", 6, 6, PolyKind::blended_finite_face, "1", "{inf,6}_3#{}"},
      {"{4,4}#{inf}", "(0,0,0)", "(1-x,y,A-z)", "(y,x,-z)", "(x,-y,z)", 0, 4, PolyKind::blended_helical, "1", "{inf,4}_4#{inf}"},
      {"{6,3}#{inf}", "(1/2,1/6*s3,0)", "(x,-y,A-z)", kM3neg, "(1-x,y,z)", 0, 6, PolyKind::blended_helical, "1/3", "{inf,3}_6#{inf}"},
      {"{3,6}#{inf}", "(0,0,0)", "(1-x,y,A-z)", kM3neg, "(x,-y,z)", 0, 6, PolyKind::blended_helical, "1", "{inf,6}_3#{inf}"},
      {"{4,6|4}", "(0,0,0)", "(1-x,y,z)", "(y,x,-z)", "(x,z,y)", 4, 6, PolyKind::pure, "", "{inf,6}_4,4"},
      {"{6,4|4}", "(1/2,1/2,0)", "(x,z,y)", "(y,x,-z)", "(1-x,y,z)", 6, 4, PolyKind::pure, "", "{inf,4}_6,4"},
      {"{6,6|3}", "(0,0,0)", "(x,1-z,1-y)", "(y,x,-z)", "(x,z,y)", 6, 6, PolyKind::pure, "", "{inf,6}_6,3"},
      {"{inf,6}_4,4", "(0,0,0)", "(1-x,z,y)", "(y,x,-z)", "(x,z,y)", 0, 6, PolyKind::pure, "", "{4,6|4}"},
      {"{inf,4}_6,4", "(1/2,1/2,0)", "(1-x,z,y)", "(y,x,-z)", "(1-x,y,z)", 0, 4, PolyKind::pure, "", "{6,4|4}"},
      {"{inf,6}_6,3", "(0,0,0)", "(x,1-y,1-z)", "(y,x,-z)", "(x,z,y)", 0, 6, PolyKind::pure, "", "{6,6|3}"},
      {"{6,6}_4", "(0,0,0)", "(1-y,1-x,-z)", "(x,z,y)", "(y,x,-z)", 6, 6, PolyKind::pure, "", "{4,6}_6"},
      {"{4,6}_6", "(0,0,0)", "(1-x,1-y,z)", "(x,z,y)", "(y,x,-z)", 4, 6, PolyKind::pure, "", "{6,6}_4"},
      {"{inf,3}^(b)", "(0,0,0)", "(1-x,1-y,z)", "(z,-y,x)", "(y,x,-z)", 0, 3, PolyKind::pure, "", "{inf,3}^(a)"},
      {"{inf,3}^(a)", "(0,0,0)", "(1-y,1-x,-z)", "(z,-y,x)", "(y,x,-z)", 0, 3, PolyKind::pure, "", "{inf,3}^(b)"},
      {"{6,4}_6", "(1/2,1/2,1/2)", "(y,x,-z)", "(x,z,y)", "(1-x,1-y,z)", 6, 4, PolyKind::pure, "", "{6,4}_6"},
      {"{inf,4}_.,*3", "(1/2,1/2,1/2)", "(y,x,-z)", "(1-x,z,y)", "(1-x,1-y,z)", 0, 4, PolyKind::pure, "", "{inf,4}_.,*3"},
  };
  return r;
}

struct PetrialRow {
  const char* name;
  const char* source;
  int p;
};

const std::vector<PetrialRow>& petrial_rows() {
  static const std::vector<PetrialRow> r = {
      {"{4,3}_3", "{3,3}", 4},
      {"{6,4}_3", "{3,4}", 6},
      {"{6,3}_4", "{4,3}", 6},
      {"{inf,4}_4", "{4,4}", 0},
      {"{inf,6}_3", "{3,6}", 0},
      {"{inf,3}_6", "{6,3}", 0},
      {"{inf,4}_4#{}", "{4,4}#{}", 0},
      {"{inf,3}_6#{}", "{6,3}#{}", 0},
      {"{inf,6}_3#{}", "{3,6}#{}", 0},
      {"{inf,4}_4#{inf}", "{4,4}#{inf}", 0},
      {"{inf,3}_6#{inf}", "{6,3}#{inf}", 0},
      {"{inf,6}_3#{inf}", "{3,6}#{inf}", 0},
  };
  return r;
}

std::string replace_all(std::string s, const std::string& from, const std::string& to) {
  for (std::size_t pos = 0; (pos = s.find(from, pos)) != std::string::npos; pos += to.size()) s.replace(pos, from.size(), to);
  return s;
}

Vec parse_point(const std::string& text) {
  const Isometry f = Isometry::parse(text);
  return f.translation;
}

PolyhedronSpec from_row(const Row& r) {
  PolyhedronSpec s;
  s.name = r.name;
  s.p = r.p;
  s.q = r.q;
  s.kind = r.kind;
  s.petrie_partner = r.partner;
  std::string blend = r.blend;
  if (!blend.empty()) s.blend = Surd::parse(blend);
  const std::string base = r.base;
  s.table_dim = static_cast<int>(std::count(base.begin(), base.end(), ',')) + 1;
  s.base_vertex = embed3(parse_point(base));
  const std::array<const char*, 3> fs = {r.r0, r.r1, r.r2};
  for (std::size_t i = 0; i < 3; ++i) {
    const std::string text = blend.empty() ? std::string(fs[i]) : replace_all(fs[i], "A", blend);
    s.formulas.push_back(text);
    s.gens[i] = embed3(Isometry::parse(text));
  }
  return s;
}

std::vector<PolyhedronSpec> build_catalog() {
  std::vector<PolyhedronSpec> out;
  for (const auto& r : rows()) out.push_back(from_row(r));
  for (const auto& pr : petrial_rows()) {
    const auto it = std::find_if(out.begin(), out.end(), [&](const PolyhedronSpec& s) { return s.name == pr.source; });
    PolyhedronSpec s = petrial_spec(*it, pr.name);
    s.p = pr.p;
    s.petrie_partner = pr.source;
    if (s.kind == PolyKind::blended_finite_face) s.kind = PolyKind::blended_helical;
    out.push_back(s);
  }
  return out;
}

}  // namespace

std::string kind_name(PolyKind k) {
  switch (k) {
    case PolyKind::finite: return "finite";
    case PolyKind::planar: return "planar";
    case PolyKind::blended_finite_face: return "blended-finite-face";
    case PolyKind::blended_helical: return "blended-helical";
    case PolyKind::pure: return "pure";
  }
  return "";
}

std::vector<Isometry> PolyhedronSpec::h_generators() const {
  if (kind == PolyKind::finite || kind == PolyKind::pure) return gen_list();
  return {gens[1], gens[2]};
}

const std::vector<TypoCorrection>& typo_log() {
  static const std::vector<TypoCorrection> log = {
      {"{4,4}#{inf}", "R2", "(x-y,z)", "(x,-y,z)",
       "printed map has two components; the reflection (x,-y,z) restores the relations and fixes the base vertex"},
      {"{inf,6}_6,3", "R0", "(x,1-z,1-y)", "(x,1-y,1-z)",
       "printed row repeats {6,6|3}; corrected R0 is R0*R2 of {6,6|3} and gives (R0R1) of infinite order"},
      {"{inf,3}^(a)", "R0", "(1-x,1-y,z)", "(1-y,1-x,-z)",
       "generator rows of (a) and (b) are swapped: (a) has triangular helices and H of type [3,3], (b) square helices and H of type [3,4]"},
      {"{inf,3}^(b)", "R0", "(1-y,1-x,-z)", "(1-x,1-y,z)", "swapped with {inf,3}^(a)"},
  };
  return log;
}

const std::vector<PolyhedronSpec>& catalog() {
  static const std::vector<PolyhedronSpec> c = build_catalog();
  return c;
}

std::string normalize_name(const std::string& name) {
  std::string s;
  for (char ch : name)
    if (ch != ' ') s += ch;
  s = replace_all(s, "∞", "inf");
  s = replace_all(s, "oo", "inf");
  s = replace_all(s, "\\infty", "inf");
  return s;
}

const PolyhedronSpec& spec(const std::string& name) {
  const std::string n = normalize_name(name);
  for (const auto& s : catalog())
    if (s.name == n) return s;
  throw UnknownPolyhedron("unknown polyhedron: " + name);
}

PolyhedronSpec petrial_spec(const PolyhedronSpec& s, const std::string& name) {
  PolyhedronSpec t = s;
  t.name = name;
  t.gens[0] = compose(s.gens[0], s.gens[2]);
  t.formulas = {t.gens[0].str(), s.formulas[1], s.formulas[2]};
  t.petrie_partner = s.name;
  return t;
}

std::size_t GroupData::index_of(const Mat& m) const {
  for (std::size_t i = 0; i < point_group.elements.size(); ++i)
    if (point_group.elements[i].linear == m) return i;
  throw GroupError("matrix outside the point group");
}

GroupData group_data(const PolyhedronSpec& s) {
  GroupData d;
  d.point_group = special_group(s.gen_list());
  const auto& el = d.point_group.elements;
  std::unordered_map<std::string, std::size_t> idx;
  for (std::size_t i = 0; i < el.size(); ++i) idx.emplace(el[i].linear.str(), i);
  d.coset_reps.assign(el.size(), Isometry());
  std::vector<bool> have(el.size(), false);
  d.coset_reps[0] = Isometry::identity(3);
  have[0] = true;
  std::vector<std::size_t> queue{0};
  std::vector<Vec> trans;
  for (std::size_t k = 0; k < queue.size(); ++k) {
    const std::size_t i = queue[k];
    for (const auto& r : s.gens) {
      const Isometry g = compose(d.coset_reps[i], r);
      const std::size_t j = idx.at(g.linear.str());
      if (!have[j]) {
        have[j] = true;
        d.coset_reps[j] = g;
        queue.push_back(j);
      }
    }
  }
  for (std::size_t i = 0; i < el.size(); ++i)
    for (const auto& r : s.gens) {
      const Isometry g = compose(d.coset_reps[i], r);
      const Isometry t = compose(g, d.coset_reps[idx.at(g.linear.str())].inverse());
      if (!t.translation.is_zero()) trans.push_back(t.translation);
    }
  if (!trans.empty()) d.translations = lattice_from_generators(trans, 3);
  return d;
}

Lattice translation_subgroup(const std::string& name) {
  const auto d = group_data(spec(name));
  if (!d.translations) throw GroupError(name + " has no translations");
  return *d.translations;
}

int PolyhedronPatch::vertex_index(const Vec& v) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] == v) return static_cast<int>(i);
  return -1;
}

std::vector<int> PolyhedronPatch::degrees() const {
  std::vector<int> d(vertices.size(), 0);
  for (const auto& [a, b] : edges) {
    ++d[static_cast<std::size_t>(a)];
    ++d[static_cast<std::size_t>(b)];
  }
  return d;
}

bool PolyhedronPatch::interior(const Vec& v, const Surd& margin) const {
  for (int i = 0; i < 3; ++i) {
    if (lo[i] == hi[i]) continue;
    if (v[i] < lo[i] + margin || v[i] > hi[i] - margin) return false;
  }
  return true;
}

namespace {

bool in_box(const Vec& v, const Vec& lo, const Vec& hi) {
  for (int i = 0; i < 3; ++i)
    if (v[i] < lo[i] || v[i] > hi[i]) return false;
  return true;
}

struct IsoHash {
  std::size_t operator()(const Isometry& f) const {
    std::size_t h = VecHash{}(f.translation);
    for (int i = 0; i < f.dim(); ++i) h = h * 31 + VecHash{}(f.linear.row(i));
    return h;
  }
};

struct TripleHash {
  std::size_t operator()(const std::array<Vec, 3>& t) const {
    VecHash h;
    return h(t[0]) * 31 + h(t[1]) * 17 + h(t[2]);
  }
};

struct Builder {
  PolyhedronPatch patch;
  std::unordered_map<Vec, int, VecHash> vid;
  std::set<std::pair<int, int>> edge_set;
  std::set<std::vector<int>> face_keys;

  int vertex(const Vec& v) {
    const auto it = vid.find(v);
    if (it != vid.end()) return it->second;
    const int i = static_cast<int>(patch.vertices.size());
    patch.vertices.push_back(v);
    vid.emplace(v, i);
    return i;
  }

  int find(const Vec& v) const {
    const auto it = vid.find(v);
    return it == vid.end() ? -1 : it->second;
  }

  void edge(int a, int b) {
    if (a > b) std::swap(a, b);
    if (edge_set.insert({a, b}).second) patch.edges.emplace_back(a, b);
  }

  // Canonical rotation/reflection of a cyclic or open walk.
  static std::vector<int> canonical(std::vector<int> w, bool cyclic) {
    if (!cyclic) {
      std::vector<int> r(w.rbegin(), w.rend());
      return std::min(w, r);
    }
    std::vector<int> best;
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t k = 0; k < w.size(); ++k) {
        std::vector<int> c(w.begin() + static_cast<long>(k), w.end());
        c.insert(c.end(), w.begin(), w.begin() + static_cast<long>(k));
        if (best.empty() || c < best) best = c;
      }
      std::reverse(w.begin(), w.end());
    }
    return best;
  }

  void face(const std::vector<int>& walk, bool complete) {
    if (walk.size() < 2) return;
    auto key = canonical(walk, complete);
    key.push_back(complete ? 1 : 0);
    if (face_keys.insert(key).second) patch.faces.push_back({walk, complete});
  }
};

// Points x_n = v0 (R0 R1)^n of the base face for n in [-k, k].
std::vector<Vec> base_face_points(const PolyhedronSpec& s, int k) {
  const Isometry step = compose(s.gens[0], s.gens[1]);
  const Isometry back = step.inverse();
  std::vector<Vec> fwd{s.base_vertex}, bwd;
  for (int n = 1; n <= k; ++n) fwd.push_back(step.apply(fwd.back()));
  Vec x = s.base_vertex;
  for (int n = 1; n <= k; ++n) bwd.push_back(x = back.apply(x));
  std::vector<Vec> out(bwd.rbegin(), bwd.rend());
  out.insert(out.end(), fwd.begin(), fwd.end());
  return out;
}

// Splits a walk into maximal runs of indices that are present.
void add_runs(Builder& b, const std::vector<int>& ids) {
  std::vector<int> run;
  for (int id : ids) {
    if (id >= 0) {
      run.push_back(id);
      continue;
    }
    if (run.size() >= 2) b.face(run, false);
    run.clear();
  }
  if (run.size() >= 2) b.face(run, false);
}

}  // namespace

PolyhedronPatch build_finite(const std::string& name, const Surd& edge_scale) {
  const PolyhedronSpec& s = spec(name);
  if (s.kind != PolyKind::finite) throw std::invalid_argument(name + " is not a finite polyhedron");
  const FiniteGroup g = closure(s.gen_list());
  Builder b;
  b.patch.name = s.name;
  const Vec v0 = s.base_vertex, v1 = s.gens[0].apply(v0);
  std::vector<Vec> face_pts;
  Vec x = v0;
  const Isometry step = compose(s.gens[0], s.gens[1]);
  for (int n = 0; n < s.p; ++n, x = step.apply(x)) face_pts.push_back(x);
  for (const auto& e : g.elements) {
    const int a = b.vertex(edge_scale * e.apply(v0));
    const int c = b.vertex(edge_scale * e.apply(v1));
    b.edge(a, c);
    std::vector<int> walk;
    for (const auto& p : face_pts) walk.push_back(b.vertex(edge_scale * e.apply(p)));
    b.face(walk, true);
  }
  Vec lo(3), hi(3);
  for (const auto& v : b.patch.vertices)
    for (int i = 0; i < 3; ++i) {
      if (v[i] < lo[i]) lo[i] = v[i];
      if (hi[i] < v[i]) hi[i] = v[i];
    }
  b.patch.lo = lo;
  b.patch.hi = hi;
  return b.patch;
}

PolyhedronPatch build_patch(const std::string& name, const Vec& lo, const Vec& hi) {
  const PolyhedronSpec& s = spec(name);
  if (s.kind == PolyKind::finite) throw std::invalid_argument(name + " is finite; use build_finite");
  return build_patch(s, lo, hi);
}

PolyhedronPatch build_patch(const PolyhedronSpec& s, const Vec& lo, const Vec& hi) {
  const Surd margin(2);
  Vec elo = lo, ehi = hi;
  for (int i = 0; i < 3; ++i) {
    elo[i] -= margin;
    ehi[i] += margin;
  }
  if (s.table_dim == 2) elo[2] = ehi[2] = Surd(0);
  // flags near the region, grown through adjacent flags
  std::vector<Isometry> flags{Isometry::identity(3)};
  std::unordered_set<Isometry, IsoHash> seen{flags[0]};
  for (std::size_t i = 0; i < flags.size(); ++i)
    for (const auto& r : s.gens) {
      Isometry g = compose(r, flags[i]);
      if (!in_box(g.apply(s.base_vertex), elo, ehi)) continue;
      if (!seen.insert(g).second) continue;
      flags.push_back(std::move(g));
    }
  Builder b;
  b.patch.name = s.name;
  b.patch.lo = lo;
  b.patch.hi = hi;
  const Vec v1 = s.gens[0].apply(s.base_vertex);
  for (const auto& g : flags) {
    const Vec a = g.apply(s.base_vertex);
    if (in_box(a, lo, hi)) b.vertex(a);
  }
  std::sort(b.patch.vertices.begin(), b.patch.vertices.end());
  b.vid.clear();
  for (std::size_t i = 0; i < b.patch.vertices.size(); ++i) b.vid.emplace(b.patch.vertices[i], static_cast<int>(i));
  for (const auto& g : flags) {
    const int a = b.find(g.apply(s.base_vertex)), c = b.find(g.apply(v1));
    if (a >= 0 && c >= 0) b.edge(a, c);
  }
  if (s.p > 0) {
    std::vector<Vec> cyc;
    Vec x = s.base_vertex;
    const Isometry step = compose(s.gens[0], s.gens[1]);
    for (int n = 0; n < s.p; ++n, x = step.apply(x)) cyc.push_back(x);
    bool any_complete = false;
    for (const auto& g : flags) {
      std::vector<int> ids;
      bool complete = true;
      for (const auto& p : cyc) {
        ids.push_back(b.find(g.apply(p)));
        complete = complete && ids.back() >= 0;
      }
      if (complete) {
        b.face(ids, true);
        any_complete = true;
        continue;
      }
      // rotate so a run does not wrap around the start
      const auto gap = std::find(ids.begin(), ids.end(), -1);
      std::rotate(ids.begin(), gap, ids.end());
      add_runs(b, ids);
    }
    if (!any_complete) throw std::invalid_argument("region too small for a complete face");
  } else {
    int k = 1;
    for (int i = 0; i < 3; ++i) {
      const Surd w = ehi[i] - elo[i];
      k = std::max(k, static_cast<int>(floor(w).get_si()) * 3 + 3);
    }
    const auto pts = base_face_points(s, k);
    // three consecutive vertices determine the face; skip flags on traced faces
    std::unordered_set<std::array<Vec, 3>, TripleHash> traced;
    const std::size_t mid = static_cast<std::size_t>(k);
    for (const auto& g : flags) {
      const std::array<Vec, 3> t{g.apply(pts[mid - 1]), g.apply(pts[mid]), g.apply(pts[mid + 1])};
      if (traced.contains(t)) continue;
      std::vector<Vec> walk;
      for (const auto& p : pts) walk.push_back(g.apply(p));
      std::vector<int> ids;
      for (std::size_t i = 0; i < walk.size(); ++i) {
        ids.push_back(b.find(walk[i]));
        if (i + 2 < walk.size()) {
          traced.insert({walk[i], walk[i + 1], walk[i + 2]});
          traced.insert({walk[i + 2], walk[i + 1], walk[i]});
        }
      }
      add_runs(b, ids);
    }
  }
  return b.patch;
}

PolyhedronPatch petrial(const PolyhedronPatch& p) {
  // (edge, face) incidences with the neighbouring edge at each end
  using Edge = std::pair<int, int>;
  auto ek = [](int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; };
  std::map<Edge, std::vector<int>> faces_of;
  // next[(face, from, to)] = vertex after `to` along the face
  std::map<std::tuple<int, int, int>, int> next;
  for (std::size_t f = 0; f < p.faces.size(); ++f) {
    const auto& w = p.faces[f].walk;
    const std::size_t n = w.size();
    const bool cyc = p.faces[f].complete;
    const std::size_t m = cyc ? n : n - 1;
    for (std::size_t i = 0; i < m; ++i) {
      const int a = w[i], b = w[(i + 1) % n];
      faces_of[ek(a, b)].push_back(static_cast<int>(f));
      if (cyc || i + 2 < n) next[{static_cast<int>(f), a, b}] = w[(i + 2) % n];
      if (cyc || i >= 1) next[{static_cast<int>(f), b, a}] = w[(i + n - 1) % n];
    }
  }
  for (const auto& [e, fs] : faces_of) {
    const bool inner = p.interior(p.vertices[static_cast<std::size_t>(e.first)], Surd(1)) &&
                       p.interior(p.vertices[static_cast<std::size_t>(e.second)], Surd(1));
    if (inner && fs.size() != 2) throw std::invalid_argument("edge with other than two faces in the interior");
  }
  auto other = [&](const Edge& e, int f) {
    const auto it = faces_of.find(e);
    if (it == faces_of.end()) return -1;
    for (int g : it->second)
      if (g != f) return g;
    return -1;
  };
  Builder b;
  b.patch.name = p.name + "^pi";
  b.patch.vertices = p.vertices;
  b.patch.edges = p.edges;
  b.patch.lo = p.lo;
  b.patch.hi = p.hi;
  std::set<std::tuple<int, int, int>> used;
  for (const auto& [e, fs] : faces_of)
    for (int f0 : fs) {
      if (used.contains({f0, e.first, e.second})) continue;
      // trace forward: along face f for one step, then switch faces
      std::vector<int> walk{e.first, e.second};
      int f = f0;
      bool closed = false;
      for (int guard = 0; guard < 4 * static_cast<int>(p.edges.size()) + 8; ++guard) {
        const int a = walk[walk.size() - 2], c = walk.back();
        used.insert({f, a, c});
        const auto it = next.find({f, a, c});
        if (it == next.end()) break;
        const int d = it->second;
        const int g = other(ek(c, d), f);
        if (g < 0) {
          walk.push_back(d);
          break;
        }
        if (c == walk[0] && d == walk[1] && g == f0) {
          walk.pop_back();
          closed = true;
          break;
        }
        walk.push_back(d);
        f = g;
      }
      if (closed) b.face(walk, true);
      else b.face(walk, false);
    }
  return b.patch;
}

std::string to_off(const PolyhedronPatch& p) {
  std::ostringstream os;
  std::size_t nf = 0;
  for (const auto& f : p.faces) nf += f.complete ? 1 : 0;
  os << "OFF\n" << p.vertices.size() << " " << nf << " " << p.edges.size() << "\n";
  char buf[64];
  for (const auto& v : p.vertices) {
    for (int i = 0; i < 3; ++i) {
      std::snprintf(buf, sizeof buf, "%.12f", v[i].to_double());
      os << (i ? " " : "") << buf;
    }
    os << "\n";
  }
  for (const auto& f : p.faces) {
    if (!f.complete) continue;
    os << f.walk.size();
    for (int i : f.walk) os << " " << i;
    os << "\n";
  }
  return os.str();
}

std::string truncated_sidecar(const PolyhedronPatch& p) {
  std::ostringstream os;
  for (const auto& f : p.faces) {
    if (f.complete) continue;
    for (std::size_t i = 0; i < f.walk.size(); ++i) os << (i ? " " : "") << f.walk[i];
    os << "\n";
  }
  return os.str();
}

}  // namespace torreg
