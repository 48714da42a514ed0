#include "torreg/classify.hpp"

#include <array>
#include <map>

namespace torreg {

namespace {

const Surd kHalf = Surd(mpq_class(1, 2));
const Surd kHalfRoot3 = Surd(0, mpq_class(1, 2));

Vec u1(int d) { return unit(d, 0); }
Vec u2(int d) {
  Vec v(d);
  v[0] = kHalf;
  v[1] = kHalfRoot3;
  return v;
}
Vec e(int i) { return unit(3, i); }

const std::map<Family, std::string>& names() {
  static const std::map<Family, std::string> m = {
      {Family::cubic, "cubic"},
      {Family::bcc, "bcc"},
      {Family::fcc, "fcc"},
      {Family::square, "square"},
      {Family::square_centred, "square-centred"},
      {Family::tri, "tri"},
      {Family::tri_centred, "tri-centred"},
      {Family::square_centred_e3, "square-centred+e3"},
      {Family::square2_e1e3, "2square+(e1+e3)"},
      {Family::square2_e2e3, "2square+(e2+e3)"},
      {Family::tri_e3, "tri+e3"},
      {Family::tri_centred_e3, "tri-centred+e3"},
      {Family::tri_centred_u1e3, "tri-centred+(u1+e3)"},
      {Family::tri_centred_u2e3, "tri-centred+(u2+e3)"},
      {Family::tri3_u1u2e3, "3tri+(u1+u2+e3)"},
      {Family::tri3_2u1mu2e3, "3tri+(2u1-u2+e3)"},
  };
  return m;
}

std::optional<ClassificationResult> try_certify(const Lattice& l, Family f, const std::vector<Surd>& scale) {
  try {
    return certify(l, f, scale);
  } catch (const LatticeError&) {
    return std::nullopt;
  }
}

void require_invariant(const Lattice& l, const std::vector<Mat>& gens) {
  for (const auto& g : gens)
    if (!invariant_under(l, g)) throw PreconditionError("lattice is not invariant under " + g.str());
}

Lattice to_plane(const Lattice& l) {
  std::vector<Vec> b;
  for (const auto& v : l.basis()) {
    if (!v[2].is_zero()) throw LatticeError("section is not horizontal");
    b.push_back(Vec{v[0], v[1]});
  }
  return Lattice(b);
}

Mat line_reflection(const Surd& c2, const Surd& s2) { return Mat{{c2, s2, 0}, {s2, -c2, 0}, {0, 0, 1}}; }

std::vector<Mat> mat_closure(const std::vector<Mat>& gens) {
  std::vector<Mat> out{Mat::identity(gens.front().dim)};
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const auto& g : gens) {
      const Mat m = out[i] * g;
      bool seen = false;
      for (const auto& x : out) seen = seen || x == m;
      if (!seen) out.push_back(m);
      if (out.size() > 200) throw LatticeError("reflection group is not finite");
    }
  return out;
}

}  // namespace

const std::vector<Family>& all_families() {
  static const std::vector<Family> v = [] {
    std::vector<Family> out;
    for (const auto& [f, n] : names()) out.push_back(f);
    return out;
  }();
  return v;
}

std::string family_name(Family f) { return names().at(f); }

std::optional<Family> family_from_name(const std::string& name) {
  for (const auto& [f, n] : names())
    if (n == name) return f;
  return std::nullopt;
}

int family_ambient(Family f) {
  switch (f) {
    case Family::square:
    case Family::square_centred:
    case Family::tri:
    case Family::tri_centred: return 2;
    default: return 3;
  }
}

std::vector<Vec> canonical_basis(Family f) {
  const Vec e1 = e(0), e2 = e(1), e3 = e(2);
  const Vec a1 = u1(3), a2 = u2(3);
  switch (f) {
    case Family::cubic: return {e1, e2, e3};
    case Family::bcc: return {Surd(2) * e1, Surd(2) * e2, e1 + e2 + e3};
    case Family::fcc: return {e1 + e2, e1 - e2, e3 - e2};
    case Family::square: return {unit(2, 0), unit(2, 1)};
    case Family::square_centred: return {unit(2, 0) + unit(2, 1), unit(2, 0) - unit(2, 1)};
    case Family::tri: return {u1(2), u2(2)};
    case Family::tri_centred: return {u1(2) + u2(2), Surd(2) * u1(2) - u2(2)};
    case Family::square_centred_e3: return {e1 + e2, e1 - e2, e3};
    case Family::square2_e1e3: return {Surd(2) * e1, Surd(2) * e2, e1 + e3};
    case Family::square2_e2e3: return {Surd(2) * e1, Surd(2) * e2, e2 + e3};
    case Family::tri_e3: return {a1, a2, e3};
    case Family::tri_centred_e3: return {a1 + a2, Surd(2) * a1 - a2, e3};
    case Family::tri_centred_u1e3: return {a1 + a2, Surd(2) * a1 - a2, a1 + e3};
    case Family::tri_centred_u2e3: return {a1 + a2, Surd(2) * a1 - a2, a2 + e3};
    case Family::tri3_u1u2e3: return {Surd(3) * a1, Surd(3) * a2, a1 + a2 + e3};
    case Family::tri3_2u1mu2e3: return {Surd(3) * a1, Surd(3) * a2, Surd(2) * a1 - a2 + e3};
  }
  throw LatticeError("unknown family");
}

Lattice make_named(Family f, const std::vector<Surd>& scale) {
  const int d = family_ambient(f);
  std::vector<Surd> s = scale;
  if (s.size() == 1) s.assign(static_cast<std::size_t>(d), scale[0]);
  if (static_cast<int>(s.size()) != d) throw LatticeError("scale has the wrong length");
  for (const auto& x : s)
    if (x.sign() <= 0) throw LatticeError("scale parameters must be positive");
  const Mat dm = Mat::diag(s);
  std::vector<Vec> b;
  for (const auto& v : canonical_basis(f)) b.push_back(v * dm);
  return Lattice(b);
}

Lattice make_named(Family f, const Surd& a) { return make_named(f, std::vector<Surd>{a}); }

Mat ClassificationResult::to_canonical() const {
  std::vector<Surd> inv;
  for (const auto& x : scale) inv.push_back(Surd(1) / x);
  return Mat::diag(inv);
}

std::string ClassificationResult::str() const {
  std::string s = family_name(family) + " diag(";
  for (std::size_t i = 0; i < scale.size(); ++i) {
    if (i) s += ",";
    s += scale[i].str();
  }
  s += ")";
  if (rotation_steps) s += " rotated " + std::to_string(rotation_steps * 30) + "deg";
  return s;
}

ClassificationResult certify(const Lattice& l, Family f, std::vector<Surd> scale) {
  const int d = family_ambient(f);
  if (scale.size() == 1) scale.assign(static_cast<std::size_t>(d), scale[0]);
  const Lattice target = make_named(f, scale);
  if (target.ambient() != l.ambient() || target.rank() != l.rank()) throw LatticeError("rank mismatch");
  ClassificationResult r;
  r.family = f;
  r.scale = scale;
  Mat u(l.rank());
  for (int i = 0; i < l.rank(); ++i) {
    const auto c = target.coordinates(l.basis()[static_cast<std::size_t>(i)]);
    if (!c) throw LatticeError("certificate: vector outside the span");
    std::vector<mpz_class> row;
    for (int j = 0; j < l.rank(); ++j) {
      const Surd& x = (*c)[static_cast<std::size_t>(j)];
      if (!x.is_integer()) throw LatticeError("certificate: non-integral coordinate");
      row.push_back(x.rat().get_num());
      u(i, j) = x;
    }
    r.witness.push_back(row);
  }
  const Surd det = u.det();
  if (!(det == Surd(1) || det == Surd(-1))) throw LatticeError("certificate: not unimodular");
  return r;
}

std::vector<Mat> oct_generators() {
  return {Mat{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}, Mat{{1, 0, 0}, {0, 0, 1}, {0, 1, 0}}, Mat::diag({1, 1, -1})};
}

std::vector<Mat> dihedral_generators(int n) {
  switch (n) {
    case 2: return {Mat::diag({-1, 1, 1}), Mat::diag({1, -1, 1})};
    case 4: return {Mat::diag({-1, 1, 1}), Mat{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}};
    case 3: return {Mat::diag({1, -1, 1}), line_reflection(-kHalf, kHalfRoot3)};
    case 6: return {Mat::diag({1, -1, 1}), line_reflection(kHalf, kHalfRoot3)};
    default: throw std::invalid_argument("dihedral order must be 2, 3, 4 or 6");
  }
}

Mat rotation_z(int steps) {
  static const std::array<Surd, 12> cs = {1, kHalfRoot3, kHalf, 0, -kHalf, -kHalfRoot3,
                                          -1, -kHalfRoot3, -kHalf, 0, kHalf, kHalfRoot3};
  const int k = ((steps % 12) + 12) % 12;
  const Surd& c = cs[static_cast<std::size_t>(k)];
  const Surd& s = cs[static_cast<std::size_t>((k + 9) % 12)];
  return Mat{{c, s, 0}, {-s, c, 0}, {0, 0, 1}};
}

ClassificationResult classify_rank2_reflection(const Lattice& l) {
  if (l.ambient() != 2 || l.rank() != 2) throw PreconditionError("need a rank-2 lattice in the plane");
  require_invariant(l, {Mat::diag({-1, 1})});
  const Vec nx = unit(2, 0);
  const Lattice axis = intersect_plane(l, nx);
  const Surd d2 = abs(axis.basis()[0][1]);
  const Vec w = minimal_layer_vector(l, nx);
  const Surd h = w[0];
  const Surd y = w[1] - Surd(mpq_class(floor(w[1] / d2))) * d2;
  if (y.is_zero()) return certify(l, Family::square, {h, d2});
  if (y == d2 * kHalf) return certify(l, Family::square_centred, {h, d2 * kHalf});
  throw PreconditionError("reflection-invariant lattice violates the layer structure");
}

ClassificationResult classify_rank2_triangular(const Lattice& l) {
  if (l.ambient() != 2 || l.rank() != 2) throw PreconditionError("need a rank-2 lattice in the plane");
  Mat r60(2);
  r60(0, 0) = -kHalf;
  r60(0, 1) = kHalfRoot3;
  r60(1, 0) = kHalfRoot3;
  r60(1, 1) = kHalf;
  require_invariant(l, {Mat::diag({1, -1}), r60});
  const Lattice axis = intersect_plane(l, unit(2, 1));
  const Surd c = abs(axis.basis()[0][0]);
  if (auto r = try_certify(l, Family::tri, {c})) return *r;
  if (auto r = try_certify(l, Family::tri_centred, {c / Surd(3)})) return *r;
  throw PreconditionError("triangular lattice matches neither tri nor tri-centred");
}

ClassificationResult classify_oct(const Lattice& l) {
  if (l.ambient() != 3 || l.rank() != 3) throw PreconditionError("need a rank-3 lattice");
  require_invariant(l, oct_generators());
  const ReflectionSplit split = reflection_split(l, Mat::diag({1, 1, -1}));
  const ClassificationResult base = classify_rank2_reflection(to_plane(split.l0));
  if (!(base.scale[0] == base.scale[1])) throw PreconditionError("mirror section is not square");
  const Surd s = base.scale[0];
  const bool centred = base.family == Family::square_centred;
  const Vec v1 = centred ? Vec{s, s, 0} : Vec{s, 0, 0};
  const Vec v2 = centred ? Vec{s, -s, 0} : Vec{0, s, 0};
  const Vec w = reduce_into_cell(split.w, v1, v2);
  const Vec p{w[0], w[1]};
  if (!centred && p.is_zero()) return certify(l, Family::cubic, {s});
  if (!centred && p == (Vec{s * kHalf, s * kHalf})) return certify(l, Family::bcc, {s * kHalf});
  if (centred && p == (Vec{s, 0})) return certify(l, Family::fcc, {s});
  throw PreconditionError("projection of w contradicts octahedral symmetry");
}

ClassificationResult classify_dihedral(int n, const Lattice& l) {
  const auto gens = dihedral_generators(n);
  if (l.ambient() != 3 || l.rank() != 3) throw PreconditionError("need a rank-3 lattice");
  require_invariant(l, gens);
  if (n == 2 || n == 4) {
    const ReflectionSplit split = reflection_split(l, Mat::diag({1, 1, -1}));
    const ClassificationResult base = classify_rank2_reflection(to_plane(split.l0));
    const Surd d1 = base.scale[0], d2 = base.scale[1];
    const bool centred = base.family == Family::square_centred;
    const Vec v1 = centred ? Vec{d1, d2, 0} : Vec{d1, 0, 0};
    const Vec v2 = centred ? Vec{d1, -d2, 0} : Vec{0, d2, 0};
    const Vec w = reduce_into_cell(split.w, v1, v2);
    const Surd h = w[2];
    const Vec p{w[0], w[1]};
    if (!centred) {
      if (p.is_zero()) return certify(l, Family::cubic, {d1, d2, h});
      const std::vector<Surd> half = {d1 * kHalf, d2 * kHalf, h};
      if (p == (Vec{d1 * kHalf, 0})) return certify(l, Family::square2_e1e3, half);
      if (p == (Vec{0, d2 * kHalf})) return certify(l, Family::square2_e2e3, half);
      if (p == (Vec{d1 * kHalf, d2 * kHalf})) return certify(l, Family::bcc, half);
    } else {
      if (p.is_zero()) return certify(l, Family::square_centred_e3, {d1, d2, h});
      if (p == (Vec{d1, 0})) return certify(l, Family::fcc, {d1, d2, h});
    }
    throw PreconditionError("projection of w contradicts the dihedral symmetry");
  }
  const Lattice section = to_plane(intersect_plane(l, e(2)));
  const ClassificationResult base = classify_rank2_triangular(section);
  const Surd a = base.scale[0];
  const bool centred = base.family == Family::tri_centred;
  const Vec w = minimal_layer_vector(l, e(2));
  const Surd beta = w[2];
  const Vec p{w[0], w[1]};
  if (!section.contains(Surd(3) * p)) throw PreconditionError("three-fold axis condition fails");
  const std::vector<Surd> sc = {a, a, beta};
  if (section.contains(p)) return certify(l, centred ? Family::tri_centred_e3 : Family::tri_e3, sc);
  if (n == 3 && centred) {
    if (section.contains(p - a * u1(2))) return certify(l, Family::tri_centred_u1e3, sc);
    if (section.contains(p - a * u2(2))) return certify(l, Family::tri_centred_u2e3, sc);
  }
  throw PreconditionError("projection of the minimal layer contradicts the dihedral symmetry");
}

ClassificationResult classify_dihedral_group(int n, const Lattice& l, const std::vector<Mat>& reflections) {
  const auto std_group = mat_closure(dihedral_generators(n));
  if (mat_closure(reflections).size() != std_group.size()) throw PreconditionError("group order does not match");
  for (int k = 0; k < 12; ++k) {
    const Mat q = rotation_z(k);
    const Mat qi = q.transpose();
    bool ok = true;
    for (const auto& r : reflections) {
      const Mat c = qi * r * q;
      bool found = false;
      for (const auto& g : std_group) found = found || g == c;
      ok = ok && found;
    }
    if (!ok) continue;
    ClassificationResult res = classify_dihedral(n, transform(l, q));
    res.rotation_steps = k;
    return res;
  }
  throw PreconditionError("reflections are not a rotated standard dihedral group");
}

}  // namespace torreg
