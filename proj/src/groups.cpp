#include "torreg/groups.hpp"

#include <numeric>
#include <unordered_map>

namespace torreg {

namespace {

std::string key(const Isometry& f) { return f.linear.str() + f.translation.str(); }

Isometry linear_part(const Isometry& f) { return Isometry::linear_only(f.linear); }

}  // namespace

bool FiniteGroup::contains(const Isometry& f) const {
  for (const auto& g : elements)
    if (g == f) return true;
  return false;
}

std::size_t FiniteGroup::reflection_count() const {
  std::size_t n = 0;
  for (const auto& g : elements)
    if (classify_isometry(g).tag == KindTag::plane_reflection) ++n;
  return n;
}

FiniteGroup closure(const std::vector<Isometry>& gens, std::size_t cap) {
  if (cap < 1) throw std::invalid_argument("cap must be positive");
  if (gens.empty()) return {{}, {Isometry::identity(3)}};
  FiniteGroup g;
  g.generators = gens;
  std::unordered_map<std::string, std::size_t> seen;
  g.elements.push_back(Isometry::identity(gens.front().dim()));
  seen.emplace(key(g.elements.back()), 0);
  for (std::size_t i = 0; i < g.elements.size(); ++i) {
    for (const auto& s : gens) {
      Isometry h = compose(g.elements[i], s);
      if (seen.contains(key(h))) continue;
      if (g.elements.size() >= cap) throw CapExceeded("group closure exceeds " + std::to_string(cap) + " elements");
      seen.emplace(key(h), g.elements.size());
      g.elements.push_back(std::move(h));
    }
  }
  return g;
}

FiniteGroup special_group(const std::vector<Isometry>& gens, std::size_t cap) {
  std::vector<Isometry> lin;
  for (const auto& f : gens) lin.push_back(linear_part(f));
  return closure(lin, cap);
}

FiniteGroup extended_special_group(const std::vector<Isometry>& gens, std::size_t cap) {
  std::vector<Isometry> lin;
  for (const auto& f : gens) lin.push_back(linear_part(f));
  if (!lin.empty()) lin.push_back(Isometry::linear_only(-Mat::identity(lin.front().dim())));
  return closure(lin, cap);
}

std::string htype_name(HType t) {
  switch (t) {
    case HType::a3: return "[3,3]";
    case HType::b3: return "[3,4]";
    case HType::h3: return "[3,5]";
    case HType::d2: return "D2";
    case HType::d3: return "D3";
    case HType::d4: return "D4";
    case HType::d6: return "D6";
    case HType::other: return "other";
  }
  return "other";
}

HGroup derive_H(const std::vector<Isometry>& gens) {
  if (gens.size() != 2 && gens.size() != 3) throw GroupError("H(P) needs two or three generators");
  HGroup h;
  for (const auto& r : gens) {
    const Isometry l = embed3(linear_part(r));
    if (classify_isometry(l).tag == KindTag::plane_reflection) {
      h.reflections.push_back(l);
      continue;
    }
    const Isometry m = Isometry::linear_only(-l.linear);
    if (classify_isometry(m).tag != KindTag::plane_reflection)
      throw GroupError("generator " + r.str() + " is neither a plane reflection nor a half-turn");
    h.reflections.push_back(m);
  }
  h.group = closure(h.reflections);
  const std::size_t n = h.group.order(), refl = h.group.reflection_count();
  if (n == 24 && refl == 6) h.type = HType::a3;
  else if (n == 48 && refl == 9) h.type = HType::b3;
  else if (n == 120 && refl == 15) h.type = HType::h3;
  else if (n == 4 && refl == 2) h.type = HType::d2;
  else if (n == 6 && refl == 3) h.type = HType::d3;
  else if (n == 8 && refl == 4) h.type = HType::d4;
  else if (n == 12 && refl == 6) h.type = HType::d6;
  return h;
}

int isometry_order(const Isometry& f, int bound) {
  Isometry p = f;
  for (int k = 1; k <= bound; ++k) {
    if (p.is_identity()) return k;
    p = compose(p, f);
  }
  return 0;
}

bool verify_coxeter(const std::vector<Isometry>& gens, int p, int q) {
  if (gens.size() != 3) return false;
  for (const auto& g : gens)
    if (isometry_order(g) != 2) return false;
  auto order_ok = [](const Isometry& f, int want) {
    const int k = isometry_order(f);
    return want == 0 ? k == 0 : k == want;
  };
  return order_ok(compose(gens[0], gens[1]), p) && order_ok(compose(gens[1], gens[2]), q) &&
         order_ok(compose(gens[0], gens[2]), 2);
}

TorusIsometry induce_torus_isometry(const Isometry& f, const Lattice& l) {
  if (f.dim() != l.ambient() || l.rank() != l.ambient()) throw NotNormalizing("lattice must have full rank");
  if (!f.is_orthogonal()) throw NotNormalizing("linear part is not orthogonal");
  if (!invariant_under(l, f.linear)) throw NotNormalizing("linear part does not preserve the lattice");
  return {Isometry(f.linear, canonical_mod(l, f.translation)), l};
}

TorusIsometry compose(const TorusIsometry& f, const TorusIsometry& g) {
  return induce_torus_isometry(compose(f.lift, g.lift), f.lattice);
}

CrystalReport crystallographic_check(const FiniteGroup& g) {
  for (const auto& e : g.elements) {
    const Surd t = e.linear.trace();
    if (!t.is_integer()) return {false, e, t.str(), "non-integral trace"};
    const IsometryKind k = classify_isometry(linear_part(e));
    if (k.order != 1 && k.order != 2 && k.order != 3 && k.order != 4 && k.order != 6)
      return {false, e, t.str(), "period outside {1,2,3,4,6}"};
  }
  return {};
}

namespace {

using Poly = std::vector<long>;

Poly poly_div_exact(Poly num, const Poly& den) {
  Poly q(num.size() - den.size() + 1, 0);
  for (std::size_t i = q.size(); i-- > 0;) {
    const long c = num[i + den.size() - 1] / den.back();
    q[i] = c;
    for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
  }
  return q;
}

}  // namespace

std::vector<long> cyclotomic(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic index must be positive");
  Poly p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = poly_div_exact(p, cyclotomic(d));
  return p;
}

int cos_degree(int n) {
  const int phi = static_cast<int>(cyclotomic(n).size()) - 1;
  return n <= 2 ? 1 : phi / 2;
}

bool rotation_order_crystallographic(int n) { return cos_degree(n) == 1; }

bool coxeter_crystallographic(int p, int q) { return rotation_order_crystallographic(p) && rotation_order_crystallographic(q); }

}  // namespace torreg
