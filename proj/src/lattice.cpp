#include "torreg/lattice.hpp"

#include "json.hpp"

#include "intlin.hpp"

namespace torreg {

using detail::IntRow;

namespace {

Mat gram(const std::vector<Vec>& b) {
  Mat g(static_cast<int>(b.size()));
  for (int i = 0; i < g.dim; ++i)
    for (int j = 0; j < g.dim; ++j) g(i, j) = dot(b[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(j)]);
  return g;
}

Surd gram_det_of(const std::vector<Vec>& b) { return b.empty() ? Surd(1) : gram(b).det(); }

}  // namespace

Lattice::Lattice(std::vector<Vec> basis) : basis_(std::move(basis)) {
  if (basis_.empty()) throw LatticeError("lattice needs at least one basis vector");
  ambient_ = basis_[0].dim;
  for (const auto& v : basis_)
    if (v.dim != ambient_) throw LatticeError("basis vectors of mixed dimension");
  if (rank() > ambient_) throw LatticeError("more basis vectors than dimensions");
  if (gram_det_of(basis_).is_zero()) throw LatticeError("basis vectors are linearly dependent");
}

Mat Lattice::basis_matrix() const {
  if (rank() != ambient_) throw LatticeError("basis matrix needs full rank");
  return Mat::from_rows(basis_);
}

Surd Lattice::gram_det() const { return gram_det_of(basis_); }

std::optional<std::vector<Surd>> Lattice::coordinates(const Vec& v) const {
  if (v.dim != ambient_) throw LatticeError("dimension mismatch");
  const int r = rank();
  std::vector<Surd> c(static_cast<std::size_t>(r));
  if (r == ambient_) {
    if (!inv_) inv_ = basis_matrix().inverse();
    const Vec x = v * *inv_;
    for (int i = 0; i < r; ++i) c[static_cast<std::size_t>(i)] = x[i];
    return c;
  }
  if (!gram_inv_) gram_inv_ = gram(basis_).inverse();
  Vec rhs(r);
  for (int i = 0; i < r; ++i) rhs[i] = dot(v, basis_[static_cast<std::size_t>(i)]);
  const Vec x = rhs * *gram_inv_;
  Vec back(ambient_);
  for (int i = 0; i < r; ++i) {
    c[static_cast<std::size_t>(i)] = x[i];
    back += x[i] * basis_[static_cast<std::size_t>(i)];
  }
  if (!(back == v)) return std::nullopt;
  return c;
}

bool Lattice::contains(const Vec& v) const {
  const auto c = coordinates(v);
  if (!c) return false;
  for (const auto& x : *c)
    if (!x.is_integer()) return false;
  return true;
}

Vec Lattice::combine(const std::vector<mpz_class>& k) const {
  Vec v(ambient_);
  for (int i = 0; i < rank(); ++i) v += Surd(mpq_class(k[static_cast<std::size_t>(i)])) * basis_[static_cast<std::size_t>(i)];
  return v;
}

std::string Lattice::str() const {
  std::string s = "<";
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (i) s += ",";
    s += basis_[i].str();
  }
  return s + ">";
}

bool lattice_contains_lattice(const Lattice& big, const Lattice& small) {
  if (big.ambient() != small.ambient()) return false;
  for (const auto& v : small.basis())
    if (!big.contains(v)) return false;
  return true;
}

bool lattice_equal(const Lattice& a, const Lattice& b) {
  if (a.ambient() != b.ambient() || a.rank() != b.rank()) return false;
  if (!(a.gram_det() == b.gram_det())) return false;
  return lattice_contains_lattice(a, b) && lattice_contains_lattice(b, a);
}

Lattice extend(const Lattice& l, const Vec& w) {
  if (l.in_span(w)) throw LatticeError("extension vector lies in the span");
  auto b = l.basis();
  b.push_back(w);
  return Lattice(b);
}

Lattice transform(const Lattice& l, const Mat& t) {
  std::vector<Vec> b;
  for (const auto& v : l.basis()) b.push_back(v * t);
  return Lattice(b);
}

bool invariant_under(const Lattice& l, const Mat& linear) {
  for (const auto& v : l.basis())
    if (!l.contains(v * linear)) return false;
  return true;
}

bool invariant_under(const Lattice& l, const Isometry& f) { return invariant_under(l, f.linear); }

Lattice lattice_from_generators(const std::vector<Vec>& gens, int ambient) {
  std::vector<Vec> frame;
  for (const auto& g : gens) {
    if (g.dim != ambient) throw LatticeError("generator dimension mismatch");
    if (g.is_zero() || static_cast<int>(frame.size()) == ambient) continue;
    auto trial = frame;
    trial.push_back(g);
    if (!gram_det_of(trial).is_zero()) frame = trial;
  }
  if (frame.empty()) throw LatticeError("generators span the zero lattice");
  const Lattice f(frame);
  const std::size_t r = frame.size();
  std::vector<std::vector<mpq_class>> coords;
  std::vector<mpq_class> all;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    const auto c = f.coordinates(g);
    std::vector<mpq_class> q;
    for (const auto& x : *c) {
      if (!x.is_rational()) throw LatticeError("generators are not commensurable");
      q.push_back(x.rat());
      all.push_back(x.rat());
    }
    coords.push_back(q);
  }
  const mpz_class d = detail::lcm_den(all);
  std::vector<IntRow> rows;
  for (const auto& q : coords) {
    IntRow row;
    for (const auto& x : q) row.push_back(mpz_class(x * d));
    rows.push_back(row);
  }
  detail::hnf_rows(rows, r);
  std::vector<Vec> basis;
  for (std::size_t i = 0; i < r; ++i) {
    Vec v(ambient);
    for (std::size_t j = 0; j < r; ++j)
      if (sgn(rows[i][j]) != 0) v += Surd(mpq_class(rows[i][j], d)) * frame[j];
    basis.push_back(v);
  }
  return Lattice(basis);
}

Lattice lattice_sum(const Lattice& a, const Lattice& b) {
  auto g = a.basis();
  g.insert(g.end(), b.basis().begin(), b.basis().end());
  return lattice_from_generators(g, a.ambient());
}

mpz_class lattice_index(const Lattice& sub, const Lattice& super) {
  if (sub.rank() != super.rank()) throw LatticeError("index needs equal ranks");
  const int r = sub.rank();
  Mat c(r);
  for (int i = 0; i < r; ++i) {
    const auto x = super.coordinates(sub.basis()[static_cast<std::size_t>(i)]);
    if (!x) throw LatticeError("not a sublattice");
    for (int j = 0; j < r; ++j) {
      if (!(*x)[static_cast<std::size_t>(j)].is_integer()) throw LatticeError("not a sublattice");
      c(i, j) = (*x)[static_cast<std::size_t>(j)];
    }
  }
  return abs(c.det().rat().get_num());
}

namespace {

mpz_class round_surd(const Surd& x) { return floor(x + Surd(mpq_class(1, 2))); }

bool positive_orientation(const Vec& v) {
  for (int i = 0; i < v.dim; ++i)
    if (!v[i].is_zero()) return v[i].sign() > 0;
  return true;
}

}  // namespace

Lattice reduce_rank2(const Lattice& l) {
  if (l.rank() != 2) throw LatticeError("rank-2 reduction needs rank 2");
  Vec a = l.basis()[0];
  Vec b = l.basis()[1];
  for (;;) {
    if (dot(b, b) < dot(a, a)) std::swap(a, b);
    const mpz_class mu = round_surd(dot(a, b) / dot(a, a));
    if (sgn(mu) == 0) break;
    b -= Surd(mpq_class(mu)) * a;
  }
  if (!positive_orientation(a)) a = -a;
  if (!positive_orientation(b)) b = -b;
  return Lattice({a, b});
}

Lattice intersect_plane(const Lattice& l, const Vec& normal) {
  const std::size_t n = l.basis().size();
  std::vector<mpq_class> all;
  std::vector<Surd> h;
  for (const auto& b : l.basis()) {
    h.push_back(dot(b, normal));
    all.push_back(h.back().rat());
    all.push_back(h.back().irr());
  }
  const mpz_class d = detail::lcm_den(all);
  std::vector<IntRow> rows;
  for (std::size_t i = 0; i < n; ++i) {
    IntRow row(n + 2, 0);
    row[0] = mpz_class(h[i].rat() * d);
    row[1] = mpz_class(h[i].irr() * d);
    row[i + 2] = 1;
    rows.push_back(row);
  }
  const int piv = detail::hnf_rows(rows, 2);
  std::vector<Vec> basis;
  for (std::size_t i = static_cast<std::size_t>(piv); i < n; ++i)
    basis.push_back(l.combine(IntRow(rows[i].begin() + 2, rows[i].end())));
  if (basis.empty()) throw LatticeError("lattice meets the plane only in the origin");
  Lattice out(basis);
  return out.rank() == 2 ? reduce_rank2(out) : out;
}

Vec mirror_normal(const Mat& reflection) {
  const Mat d = reflection - Mat::identity(reflection.dim);
  for (int i = 0; i < d.dim; ++i) {
    Vec n = d.row(i);
    if (n.is_zero()) continue;
    if (!positive_orientation(n)) n = -n;
    if (!(n * reflection == -n)) throw LatticeError("not a reflection");
    return n;
  }
  throw LatticeError("identity is not a reflection");
}

Vec reduce_into_cell(const Vec& w, const Vec& v1, const Vec& v2) {
  const Vec n = cross(v1, v2);
  const Vec p = w - (dot(w, n) / dot(n, n)) * n;
  const Lattice cell({v1, v2});
  const auto c = cell.coordinates(p);
  Vec out = w;
  out -= Surd(mpq_class(floor((*c)[0]))) * v1;
  out -= Surd(mpq_class(floor((*c)[1]))) * v2;
  return out;
}

Vec minimal_layer_vector(const Lattice& l, const Vec& normal) {
  std::vector<Surd> h;
  std::size_t j = l.basis().size();
  for (std::size_t i = 0; i < l.basis().size(); ++i) {
    h.push_back(dot(l.basis()[i], normal));
    if (j == l.basis().size() && !h.back().is_zero()) j = i;
  }
  if (j == l.basis().size()) throw LatticeError("lattice lies in the plane");
  std::vector<mpq_class> ratios;
  for (const auto& x : h) {
    const Surd r = x / h[j];
    if (!r.is_rational()) throw LatticeError("heights are not commensurable");
    ratios.push_back(r.rat());
  }
  const mpz_class d = detail::lcm_den(ratios);
  std::vector<mpz_class> k;
  for (const auto& r : ratios) k.push_back(mpz_class(r * d));
  Vec w = l.combine(detail::bezout(k));
  if (dot(w, normal).sign() < 0) w = -w;
  return w;
}

ReflectionSplit reflection_split(const Lattice& l, const Mat& reflection) {
  if (l.ambient() != 3 || l.rank() != 3) throw LatticeError("reflection split needs a rank-3 lattice in E^3");
  if (!invariant_under(l, reflection)) throw LatticeError("lattice is not invariant under the reflection");
  const Vec n = mirror_normal(reflection);
  ReflectionSplit out{intersect_plane(l, n), minimal_layer_vector(l, n), false};
  if (out.l0.rank() != 2) throw LatticeError("mirror section has rank below 2");
  out.w = reduce_into_cell(out.w, out.l0.basis()[0], out.l0.basis()[1]);
  out.vertical = cross(out.w, n).is_zero();
  return out;
}

Vec canonical_mod(const Lattice& l, const Vec& x) {
  if (l.rank() != l.ambient()) throw LatticeError("reduction modulo a lattice needs full rank");
  const auto c = l.coordinates(x);
  Vec out = x;
  for (int i = 0; i < l.rank(); ++i) out -= Surd(mpq_class(floor((*c)[static_cast<std::size_t>(i)]))) * l.basis()[static_cast<std::size_t>(i)];
  return out;
}

std::string lattice_to_json(const Lattice& l) {
  nlohmann::json j;
  j["ambient"] = l.ambient();
  j["basis"] = nlohmann::json::array();
  for (const auto& v : l.basis()) {
    nlohmann::json row = nlohmann::json::array();
    for (int i = 0; i < v.dim; ++i) row.push_back(v[i].str());
    j["basis"].push_back(row);
  }
  return j.dump();
}

Lattice lattice_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("lattice json: ") + e.what());
  }
  if (!j.is_object() || !j.contains("basis") || !j["basis"].is_array()) throw ParseError("lattice json needs a basis array");
  std::vector<Vec> b;
  for (const auto& row : j["basis"]) {
    if (!row.is_array() || row.size() < 2 || row.size() > 3) throw ParseError("basis rows need 2 or 3 entries");
    Vec v(static_cast<int>(row.size()));
    for (int i = 0; i < v.dim; ++i) {
      const auto& e = row[static_cast<std::size_t>(i)];
      if (e.is_string()) v[i] = Surd::parse(e.get<std::string>());
      else if (e.is_number_integer()) v[i] = Surd(e.get<long>());
      else throw ParseError("basis entries must be strings or integers");
    }
    b.push_back(v);
  }
  return Lattice(b);
}

}  // namespace torreg
