#include "torreg/torus.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "json.hpp"

namespace torreg {

namespace {

using I3 = std::array<std::int64_t, 3>;

template <std::size_t K>
struct ArrayHash {
  std::size_t operator()(const std::array<std::int64_t, K>& a) const {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto x : a) {
      h ^= static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

struct AffineHash {
  std::size_t operator()(const IntAffine& f) const { return ArrayHash<12>{}(f.v); }
};

std::int64_t mod(std::int64_t x, std::int64_t n) {
  const std::int64_t r = x % n;
  return r < 0 ? r + n : r;
}

I3 apply(const IntAffine& f, const I3& x, std::int64_t n) {
  I3 r{};
  for (int j = 0; j < 3; ++j) {
    std::int64_t s = f.t(j);
    for (int k = 0; k < 3; ++k) s += x[static_cast<std::size_t>(k)] * f.a(k, j);
    r[static_cast<std::size_t>(j)] = n > 0 ? mod(s, n) : s;
  }
  return r;
}

I3 apply_linear(const IntAffine& f, const I3& x) {
  I3 r{};
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k) r[static_cast<std::size_t>(j)] += x[static_cast<std::size_t>(k)] * f.a(k, j);
  return r;
}

I3 reduce(const I3& x, std::int64_t n) { return {mod(x[0], n), mod(x[1], n), mod(x[2], n)}; }

std::int64_t to_i64(const mpz_class& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("coordinate does not fit in 64 bits");
  return z.get_si();
}

}  // namespace

TorusPoint canonical_rep(const Vec& x, const Lattice& l) { return {canonical_mod(l, x)}; }

Surd torus_distance2(const TorusPoint& x, const TorusPoint& y, const Lattice& l) {
  const Vec d = canonical_mod(l, y.rep - x.rep);
  std::optional<Surd> best;
  const auto& b = l.basis();
  for (int i = -2; i <= 2; ++i)
    for (int j = -2; j <= 2; ++j)
      for (int k = -2; k <= 2; ++k) {
        const Vec v = d + Surd(i) * b[0] + Surd(j) * b[1] + Surd(k) * b[2];
        const Surd n = dot(v, v);
        if (!best || n < *best) best = n;
      }
  return *best;
}

std::string reason_name(Rejection r) {
  switch (r) {
    case Rejection::none: return "";
    case Rejection::lattice_not_preserved: return "lattice-not-preserved";
    case Rejection::non_finite_vertex_set: return "non-finite-vertex-set";
    case Rejection::vertex_on_edge_interior: return "vertex-on-edge-interior";
    case Rejection::face_not_cycle: return "face-not-cycle";
    case Rejection::vertex_figure_broken: return "vertex-figure-broken";
    case Rejection::diamond_violation: return "diamond-violation";
    case Rejection::not_flag_transitive: return "not-flag-transitive";
  }
  return "";
}

IntAffine compose(const IntAffine& f, const IntAffine& g, std::int64_t n) {
  IntAffine r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      std::int64_t s = 0;
      for (int k = 0; k < 3; ++k) s += f.a(i, k) * g.a(k, j);
      r.v[static_cast<std::size_t>(3 * i + j)] = s;
    }
  for (int j = 0; j < 3; ++j) {
    std::int64_t s = g.t(j);
    for (int k = 0; k < 3; ++k) s += f.t(k) * g.a(k, j);
    r.v[static_cast<std::size_t>(9 + j)] = mod(s, n);
  }
  return r;
}

Vec QuotientPolyhedron::vertex_point(int i) const {
  const I3& k = vertex_keys[static_cast<std::size_t>(i)];
  Vec x = base_vertex;
  for (int j = 0; j < 3; ++j) x += Surd(mpq_class(k[static_cast<std::size_t>(j)], N)) * lattice.basis()[static_cast<std::size_t>(j)];
  return canonical_mod(lattice, x);
}

int QuotientPolyhedron::element_index(const IntAffine& g) const {
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (elements[i] == g) return static_cast<int>(i);
  return -1;
}

namespace {

struct Setup {
  bool ok = false;
  Rejection reason = Rejection::none;
  std::string detail;
  std::int64_t N = 1;
  std::array<IntAffine, 3> gens;
};

// Generators conjugated so the base vertex is the origin, in scaled lattice coordinates.
Setup integer_generators(const PolyhedronSpec& s, const Lattice& l) {
  Setup out;
  const Mat b = l.basis_matrix();
  const Mat bi = b.inverse();
  std::array<Mat, 3> lin;
  std::array<Vec, 3> tr;
  mpz_class den = 1;
  for (std::size_t i = 0; i < 3; ++i) {
    const Isometry& g = s.gens[i];
    lin[i] = b * g.linear * bi;
    if (!lin[i].is_integral()) {
      out.reason = Rejection::lattice_not_preserved;
      out.detail = "linear part of R" + std::to_string(i) + " does not preserve the lattice";
      return out;
    }
  }
  for (std::size_t i = 0; i < 3; ++i) {
    const Isometry& g = s.gens[i];
    tr[i] = (s.base_vertex * g.linear + g.translation - s.base_vertex) * bi;
    for (int j = 0; j < 3; ++j) {
      if (!tr[i][j].is_rational()) {
        out.reason = Rejection::non_finite_vertex_set;
        out.detail = "vertex coordinates incommensurable with the lattice";
        return out;
      }
      den = lcm(den, tr[i][j].rat().get_den());
    }
  }
  out.N = to_i64(den);
  for (std::size_t i = 0; i < 3; ++i) {
    IntAffine& f = out.gens[i];
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) f.v[static_cast<std::size_t>(3 * r + c)] = to_i64(lin[i](r, c).rat().get_num());
    for (int j = 0; j < 3; ++j) {
      const mpq_class x = tr[i][j].rat() * den;
      f.v[static_cast<std::size_t>(9 + j)] = mod(to_i64(x.get_num()), out.N);
    }
  }
  out.ok = true;
  return out;
}

IntAffine identity_affine() {
  IntAffine e;
  e.v[0] = e.v[4] = e.v[8] = 1;
  return e;
}

}  // namespace

QuotientPolyhedron quotient(const PolyhedronSpec& s, const Lattice& l, std::size_t cap) {
  QuotientPolyhedron q;
  q.name = s.name;
  q.source = s;
  q.lattice = l;
  q.base_vertex = s.base_vertex;
  auto reject = [&](Rejection r, std::string detail) {
    q.verdict.accepted = false;
    q.verdict.reason = r;
    q.verdict.detail = std::move(detail);
    return q;
  };
  if (l.rank() != 3 || l.ambient() != 3) throw LatticeError("quotient needs a full-rank lattice in E^3");
  const Setup st = integer_generators(s, l);
  if (!st.ok) return reject(st.reason, st.detail);
  const std::int64_t N = q.N = st.N;
  q.gens = st.gens;

  // vertices: orbit of the origin
  std::unordered_map<I3, int, ArrayHash<3>> vid;
  std::vector<I3> vqueue{{0, 0, 0}};
  vid.emplace(vqueue[0], 0);
  for (std::size_t i = 0; i < vqueue.size(); ++i)
    for (const auto& g : q.gens) {
      const I3 y = apply(g, vqueue[i], N);
      if (vid.emplace(y, static_cast<int>(vqueue.size())).second) vqueue.push_back(y);
      if (vqueue.size() > cap) return reject(Rejection::non_finite_vertex_set, "vertex orbit exceeds cap");
    }
  q.vertex_keys = vqueue;
  q.verdict.counts.V = vqueue.size();

  // the unreduced base edge vector
  I3 edge_vec{};
  {
    const Mat bi = l.basis_matrix().inverse();
    const Vec e = (s.gens[0].apply(s.base_vertex) - s.base_vertex) * bi;
    for (int j = 0; j < 3; ++j) edge_vec[static_cast<std::size_t>(j)] = to_i64(mpq_class(e[j].rat() * N).get_num());
  }
  {
    std::int64_t g = 0;
    for (auto x : edge_vec) g = std::gcd(g, std::abs(x));
    for (std::int64_t j = 1; j < g; ++j) {
      I3 p{};
      for (int k = 0; k < 3; ++k) p[static_cast<std::size_t>(k)] = mod(edge_vec[static_cast<std::size_t>(k)] / g * j, N);
      if (vid.contains(p)) return reject(Rejection::vertex_on_edge_interior, "vertex at " + std::to_string(j) + "/" + std::to_string(g) + " of the base edge");
    }
    if (g == 0) return reject(Rejection::face_not_cycle, "degenerate edge");
  }

  // base face walk v_{n+1} = v_n (R1 R0), closed when (vertex, step) repeats
  const IntAffine step = compose(q.gens[1], q.gens[0], N);
  QuotientFace base_face;
  {
    I3 x{0, 0, 0}, d = edge_vec;
    I3 lifted{0, 0, 0};
    std::unordered_set<I3, ArrayHash<3>> seen;
    const I3 d_first = d;
    for (std::size_t n = 0;; ++n) {
      if (n > 0 && x == I3{0, 0, 0} && d == d_first) break;
      if (!seen.insert(x).second) return reject(Rejection::face_not_cycle, "face walk revisits a vertex");
      base_face.walk.push_back(vid.at(x));
      for (int k = 0; k < 3; ++k) lifted[static_cast<std::size_t>(k)] += d[static_cast<std::size_t>(k)];
      x = reduce({x[0] + d[0], x[1] + d[1], x[2] + d[2]}, N);
      d = apply_linear(step, d);
      if (n > cap) return reject(Rejection::non_finite_vertex_set, "face walk exceeds cap");
    }
    if (base_face.walk.size() < 2) return reject(Rejection::face_not_cycle, "face walk shorter than 2");
    for (int k = 0; k < 3; ++k) base_face.period[static_cast<std::size_t>(k)] = lifted[static_cast<std::size_t>(k)] / N;
  }

  // group G_L
  std::unordered_map<IntAffine, int, AffineHash> eid;
  q.elements.push_back(identity_affine());
  eid.emplace(q.elements[0], 0);
  for (std::size_t i = 0; i < q.elements.size(); ++i)
    for (const auto& g : q.gens) {
      IntAffine h = compose(q.elements[i], g, N);
      if (eid.contains(h)) continue;
      if (q.elements.size() >= cap) return reject(Rejection::non_finite_vertex_set, "group exceeds cap");
      eid.emplace(h, static_cast<int>(q.elements.size()));
      q.elements.push_back(h);
    }
  const std::size_t order = q.elements.size();
  q.verdict.counts.group_order = order;

  // flags: vertex and edge of Phi_0 g
  q.flag_of.assign(order, {-1, -1, -1});
  std::unordered_map<std::array<std::int64_t, 6>, int, ArrayHash<6>> edge_id;
  for (std::size_t i = 0; i < order; ++i) {
    const IntAffine& g = q.elements[i];
    const I3 p{g.t(0), g.t(1), g.t(2)};
    const I3 d = apply_linear(g, edge_vec);
    const I3 p2 = reduce({p[0] + d[0], p[1] + d[1], p[2] + d[2]}, N);
    const std::array<std::int64_t, 6> k1{p[0], p[1], p[2], d[0], d[1], d[2]};
    const std::array<std::int64_t, 6> k2{p2[0], p2[1], p2[2], -d[0], -d[1], -d[2]};
    const auto key = std::min(k1, k2);
    auto [it, fresh] = edge_id.emplace(key, static_cast<int>(q.edges.size()));
    if (fresh) {
      QuotientEdge e;
      e.a = vid.at(I3{key[0], key[1], key[2]});
      e.disp = {key[3], key[4], key[5]};
      e.b = vid.at(reduce({key[0] + key[3], key[1] + key[4], key[2] + key[5]}, N));
      q.edges.push_back(e);
    }
    q.flag_of[i][0] = vid.at(p);
    q.flag_of[i][1] = it->second;
  }
  q.verdict.counts.E = q.edges.size();

  // faces: cosets <R0,R1> g, identified by their edge sets
  std::vector<IntAffine> hf{identity_affine()};
  {
    std::unordered_set<IntAffine, AffineHash> seen{hf[0]};
    for (std::size_t i = 0; i < hf.size(); ++i)
      for (int j = 0; j < 2; ++j) {
        IntAffine h = compose(hf[i], q.gens[static_cast<std::size_t>(j)], N);
        if (seen.insert(h).second) hf.push_back(h);
      }
  }
  std::map<std::vector<int>, int> face_id;
  std::vector<int> coset(hf.size());
  for (std::size_t i = 0; i < order; ++i) {
    if (q.flag_of[i][2] >= 0) continue;
    std::vector<int> es;
    for (std::size_t j = 0; j < hf.size(); ++j) {
      coset[j] = eid.at(compose(hf[j], q.elements[i], N));
      es.push_back(q.flag_of[static_cast<std::size_t>(coset[j])][1]);
    }
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
    auto [it, fresh] = face_id.emplace(es, static_cast<int>(q.faces.size()));
    if (fresh) {
      QuotientFace f;
      const IntAffine& g = q.elements[i];
      for (int v : base_face.walk) f.walk.push_back(vid.at(apply(g, q.vertex_keys[static_cast<std::size_t>(v)], N)));
      f.period = apply_linear(g, base_face.period);
      q.faces.push_back(f);
    }
    for (int c : coset) q.flag_of[static_cast<std::size_t>(c)][2] = it->second;
  }
  q.verdict.counts.F = q.faces.size();

  // vertex figure at the base vertex
  {
    std::map<int, std::set<int>> faces_of_edge, edges_of_face;
    for (std::size_t i = 0; i < order; ++i) {
      if (q.flag_of[i][0] != 0) continue;
      faces_of_edge[q.flag_of[i][1]].insert(q.flag_of[i][2]);
      edges_of_face[q.flag_of[i][2]].insert(q.flag_of[i][1]);
    }
    const std::size_t qq = static_cast<std::size_t>(s.q);
    if (faces_of_edge.size() != qq || edges_of_face.size() != qq)
      return reject(Rejection::vertex_figure_broken, std::to_string(faces_of_edge.size()) + " edges and " +
                                                          std::to_string(edges_of_face.size()) + " faces at a vertex");
    for (const auto& [f, es] : edges_of_face)
      if (es.size() != 2) return reject(Rejection::diamond_violation, "face meets a vertex in " + std::to_string(es.size()) + " edges");
    for (const auto& [e, fs] : faces_of_edge)
      if (fs.size() != 2) return reject(Rejection::vertex_figure_broken, "edge in " + std::to_string(fs.size()) + " faces at a vertex");
    // single cycle
    std::set<int> reached{faces_of_edge.begin()->first};
    std::vector<int> stack{faces_of_edge.begin()->first};
    while (!stack.empty()) {
      const int e = stack.back();
      stack.pop_back();
      for (int f : faces_of_edge[e])
        for (int e2 : edges_of_face[f])
          if (reached.insert(e2).second) stack.push_back(e2);
    }
    if (reached.size() != qq) return reject(Rejection::vertex_figure_broken, "vertex figure is not connected");
  }
  // diamond at the base edge
  {
    std::set<int> fs;
    for (std::size_t i = 0; i < order; ++i)
      if (q.flag_of[i][1] == q.flag_of[0][1]) fs.insert(q.flag_of[i][2]);
    if (fs.size() != 2) return reject(Rejection::diamond_violation, "edge in " + std::to_string(fs.size()) + " faces");
  }
  // free action
  {
    std::set<std::array<int, 3>> distinct(q.flag_of.begin(), q.flag_of.end());
    q.verdict.counts.flags = distinct.size();
    if (distinct.size() != order) return reject(Rejection::not_flag_transitive, "flag stabiliser is nontrivial");
  }
  q.verdict.accepted = true;
  return q;
}

QuotientVerdict check_regular(const QuotientPolyhedron& q) {
  QuotientVerdict v = q.verdict;
  if (!v.accepted) return v;
  auto fail = [&](std::string d) {
    v.accepted = false;
    v.reason = Rejection::not_flag_transitive;
    v.detail = std::move(d);
    return v;
  };
  const std::size_t n = q.elements.size();
  if (v.counts.flags != n || n != 4 * v.counts.E) return fail("|G| differs from the number of flags");
  std::unordered_map<IntAffine, int, AffineHash> eid;
  for (std::size_t i = 0; i < n; ++i) eid.emplace(q.elements[i], static_cast<int>(i));
  for (std::size_t k = 0; k < n; ++k)
    for (int i = 0; i < 3; ++i) {
      const auto& a = q.flag_of[k];
      const auto& b = q.flag_of[static_cast<std::size_t>(eid.at(compose(q.gens[static_cast<std::size_t>(i)], q.elements[k], q.N)))];
      for (int j = 0; j < 3; ++j)
        if ((a[static_cast<std::size_t>(j)] == b[static_cast<std::size_t>(j)]) != (i != j))
          return fail("R" + std::to_string(i) + " does not act as the " + std::to_string(i) + "-adjacency");
    }
  return v;
}

PolyhedronSpec lift_spec(const QuotientPolyhedron& q) {
  if (!q.verdict.accepted) throw std::invalid_argument("lift needs an accepted quotient");
  // conjugate by the lattice translation taking the base vertex to its canonical representative
  PolyhedronSpec s = q.source;
  s.name = q.name + "/lift";
  s.base_vertex = q.vertex_point(0);
  const Isometry shift = Isometry::translate(s.base_vertex - q.base_vertex);
  s.formulas.clear();
  for (auto& g : s.gens) {
    g = compose(compose(shift.inverse(), g), shift);
    s.formulas.push_back(g.str());
  }
  return s;
}

PolyhedronPatch lift(const QuotientPolyhedron& q, const Vec& lo, const Vec& hi) {
  const PolyhedronSpec s = lift_spec(q);
  if (s.kind == PolyKind::finite) {
    // the cover of a finite polyhedron is itself: keep the vertices inside the box
    PolyhedronPatch p = build_finite(q.name);
    const Vec d = s.base_vertex - q.base_vertex;
    for (auto& v : p.vertices) v += d;
    p.name = s.name;
    p.lo = lo;
    p.hi = hi;
    return p;
  }
  return build_patch(s, lo, hi);
}

bool flag_graphs_isomorphic(const QuotientPolyhedron& a, const QuotientPolyhedron& b) {
  const std::size_t n = a.elements.size();
  if (n != b.elements.size() || a.verdict.counts != b.verdict.counts) return false;
  std::unordered_map<IntAffine, int, AffineHash> ia, ib;
  for (std::size_t i = 0; i < n; ++i) ia.emplace(a.elements[i], static_cast<int>(i));
  for (std::size_t i = 0; i < n; ++i) ib.emplace(b.elements[i], static_cast<int>(i));
  // map flag Phi_0 g of a to the flag of b reached by the same adjacency word
  std::vector<int> m(n, -1);
  m[0] = 0;
  std::vector<int> queue{0};
  for (std::size_t k = 0; k < queue.size(); ++k) {
    const int x = queue[k], y = m[static_cast<std::size_t>(x)];
    for (std::size_t i = 0; i < 3; ++i) {
      const int x2 = ia.at(compose(a.gens[i], a.elements[static_cast<std::size_t>(x)], a.N));
      const int y2 = ib.at(compose(b.gens[i], b.elements[static_cast<std::size_t>(y)], b.N));
      if (m[static_cast<std::size_t>(x2)] < 0) {
        m[static_cast<std::size_t>(x2)] = y2;
        queue.push_back(x2);
      } else if (m[static_cast<std::size_t>(x2)] != y2) {
        return false;
      }
    }
  }
  if (queue.size() != n) return false;
  // incidences must correspond: same vertex/edge/face partition of flags
  for (int c = 0; c < 3; ++c) {
    std::map<int, int> fwd, bwd;
    for (std::size_t x = 0; x < n; ++x) {
      const int u = a.flag_of[x][static_cast<std::size_t>(c)];
      const int w = b.flag_of[static_cast<std::size_t>(m[x])][static_cast<std::size_t>(c)];
      fwd.emplace(u, w);
      if (fwd.at(u) != w) return false;
      if (bwd.emplace(w, u).first->second != u) return false;
    }
  }
  return true;
}

std::string verdict_json(const std::string& name, const std::string& family, const std::vector<Surd>& params,
                         const QuotientVerdict& v, std::optional<bool> prediction) {
  nlohmann::ordered_json j;
  j["polyhedron"] = name;
  j["lattice_family"] = family;
  j["params"] = nlohmann::ordered_json::array();
  for (const auto& p : params) j["params"].push_back(p.str());
  j["accepted"] = v.accepted;
  if (!v.accepted) j["reason"] = reason_name(v.reason);
  j["counts"] = {{"V", v.counts.V}, {"E", v.counts.E}, {"F", v.counts.F}, {"flags", v.counts.flags},
                 {"group_order", v.counts.group_order}};
  if (prediction) {
    j["table_prediction"] = *prediction;
    j["discrepancy"] = *prediction != v.accepted;
  } else {
    j["table_prediction"] = nullptr;
    j["discrepancy"] = false;
  }
  return j.dump();
}

std::string quotient_off(const QuotientPolyhedron& q) {
  std::ostringstream os;
  os << "OFF\n" << q.vertex_keys.size() << " " << q.faces.size() << " " << q.edges.size() << "\n";
  char buf[64];
  for (std::size_t i = 0; i < q.vertex_keys.size(); ++i) {
    const Vec p = q.vertex_point(static_cast<int>(i));
    for (int k = 0; k < 3; ++k) {
      std::snprintf(buf, sizeof buf, "%.12f", p[k].to_double());
      os << (k ? " " : "") << buf;
    }
    os << "\n";
  }
  for (const auto& f : q.faces) {
    os << f.walk.size();
    for (int v : f.walk) os << " " << v;
    os << "\n";
  }
  return os.str();
}

std::string quotient_edge_sidecar(const QuotientPolyhedron& q) {
  std::ostringstream os;
  for (const auto& e : q.edges) {
    os << e.a << " " << e.b;
    for (auto x : e.disp) {
      mpq_class r(x, q.N);
      r.canonicalize();
      os << " " << r.get_str();
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace torreg
