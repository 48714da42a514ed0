#include "torreg/tables.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace torreg {

namespace {

bool even(const mpz_class& x) { return mpz_even_p(x.get_mpz_t()) != 0; }
bool odd(const mpz_class& x) { return !even(x); }
bool divides(long d, const mpz_class& x) { return mpz_divisible_ui_p(x.get_mpz_t(), static_cast<unsigned long>(d)) != 0; }
long mod(const mpz_class& x, long m) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(m));
  return r.get_si();
}
bool is_int(const mpq_class& x) { return x.get_den() == 1; }
bool in_nat(const mpq_class& x) { return is_int(x) && x > 0; }
// x in k N
bool in_multiple(const mpq_class& x, long k) { return in_nat(x) && divides(k, x.get_num()); }
// x = m/d with m = +-4 (mod 12)
bool pm4_over(const mpq_class& x, long d) {
  const mpq_class m = x * d;
  if (!in_nat(m)) return false;
  const long r = mod(m.get_num(), 12);
  return r == 4 || r == 8;
}

const std::map<std::string, std::string>& petrie_base() {
  static const std::map<std::string, std::string> m = {
      {"{4,3}_3", "{3,3}"},          {"{6,4}_3", "{3,4}"},
      {"{6,3}_4", "{4,3}"},          {"{inf,4}_4", "{4,4}"},
      {"{inf,6}_3", "{3,6}"},        {"{inf,3}_6", "{6,3}"},
      {"{inf,4}_4#{}", "{4,4}#{}"},  {"{inf,4}_4#{inf}", "{4,4}#{inf}"},
      {"{inf,6}_3#{}", "{3,6}#{}"},  {"{inf,6}_3#{inf}", "{3,6}#{inf}"},
      {"{inf,3}_6#{}", "{6,3}#{}"},  {"{inf,3}_6#{inf}", "{6,3}#{inf}"},
  };
  return m;
}

// Row of the table that covers a polyhedron: Petrials share the row of their partner.
std::string table_row(const std::string& name) {
  const auto it = petrie_base().find(name);
  return it == petrie_base().end() ? name : it->second;
}

// ---- finite polyhedra ----

struct FiniteCell {
  mpq_class alpha0, alpha1;
  bool open_lo = true, closed_hi = false;  // interval (alpha0, alpha1] or (alpha0, alpha1)
  bool empty = false;
};

FiniteCell finite_cell(const std::string& row, Family f) {
  auto cell = [](long a0n, long a0d, long a1, bool closed, bool empty) {
    FiniteCell c;
    c.alpha0 = mpq_class(a0n, a0d);
    c.alpha1 = a1;
    c.closed_hi = closed;
    c.empty = empty;
    return c;
  };
  if (row == "{3,3}") {
    if (f == Family::cubic) return cell(2, 1, 2, false, true);
    if (f == Family::fcc) return cell(2, 1, 2, false, true);
    if (f == Family::bcc) return cell(1, 1, 2, true, false);
  }
  if (row == "{3,4}") {
    if (f == Family::cubic) return cell(1, 1, 2, false, false);
    if (f == Family::fcc) return cell(1, 1, 1, false, true);
    if (f == Family::bcc) {
      FiniteCell c = cell(1, 2, 1, false, false);
      return c;
    }
  }
  if (row == "{4,3}") {
    if (f == Family::cubic) return cell(2, 1, 2, false, true);
    if (f == Family::fcc) return cell(1, 1, 2, false, false);
    if (f == Family::bcc) return cell(1, 1, 2, false, false);
  }
  throw TableError(row + " has no finite-table entry for " + family_name(f));
}

bool finite_predicate(const std::string& row, Family f, const mpq_class& a) {
  const FiniteCell c = finite_cell(row, f);
  // beyond alpha1 the polyhedron fits in the Dirichlet domain
  if (a > c.alpha1) return true;
  if (c.empty) return false;
  if (a <= c.alpha0) return false;
  return c.closed_hi ? a <= c.alpha1 : a < c.alpha1;
}

// ---- pure apeirohedra ----

enum class PureSet { n, n2, n_minus1, n2_minus1, n2_or_p3, n_or_p6 };

PureSet pure_cell(const std::string& row, Family f) {
  const int col = f == Family::cubic ? 0 : f == Family::fcc ? 1 : f == Family::bcc ? 2 : -1;
  if (col < 0) throw TableError(row + " has no pure-table entry for " + family_name(f));
  using S = PureSet;
  static const std::map<std::string, std::array<PureSet, 3>> t = {
      {"{4,6|4}", {S::n2, S::n2, S::n}},
      {"{6,4|4}", {S::n2_or_p3, S::n2_or_p3, S::n_or_p6}},
      {"{6,6|3}", {S::n2_minus1, S::n2_minus1, S::n_minus1}},
      {"{inf,6}_4,4", {S::n2, S::n2, S::n}},
      {"{inf,4}_6,4", {S::n2_or_p3, S::n2_or_p3, S::n_or_p6}},
      {"{inf,6}_6,3", {S::n2, S::n2, S::n}},
      {"{6,6}_4", {S::n2_minus1, S::n2, S::n}},
      {"{4,6}_6", {S::n2, S::n2, S::n}},
      {"{inf,3}^(b)", {S::n2_or_p3, S::n2_or_p3, S::n_or_p6}},
      {"{inf,3}^(a)", {S::n2_or_p3, S::n2_or_p3, S::n_or_p6}},
      {"{6,4}_6", {S::n2, S::n_minus1, S::n_minus1}},
      {"{inf,4}_.,*3", {S::n2, S::n_minus1, S::n}},
  };
  const auto it = t.find(row);
  if (it == t.end()) throw TableError(row + " is not in the pure table");
  return it->second[static_cast<std::size_t>(col)];
}

bool pure_predicate(const std::string& row, Family f, const mpq_class& a) {
  switch (pure_cell(row, f)) {
    case PureSet::n: return in_nat(a);
    case PureSet::n2: return in_multiple(a, 2);
    case PureSet::n_minus1: return in_nat(a) && a != 1;
    case PureSet::n2_minus1: return in_multiple(a, 2) && a != 2;
    case PureSet::n2_or_p3: return in_multiple(a, 2) || pm4_over(a, 3);
    case PureSet::n_or_p6: return in_nat(a) || pm4_over(a, 6);
  }
  return false;
}

// ---- planar apeirohedra ----

bool planar_predicate(const std::string& row, Family f, const mpq_class& a) {
  // k(N \ excluded)
  auto scaled = [&](long k_den, std::initializer_list<long> excluded) {
    const mpq_class m = a * k_den;
    if (!in_nat(m)) return false;
    for (long e : excluded)
      if (m == e) return false;
    return true;
  };
  if (row == "{4,4}") {
    if (f == Family::cubic) return scaled(1, {1});
    if (f == Family::fcc) return scaled(2, {1, 2});
    if (f == Family::bcc) return scaled(1, {1});
    if (f == Family::square_centred_e3) return scaled(2, {1, 2});
  }
  if (row == "{3,6}") {
    if (f == Family::tri_e3) return scaled(1, {1});
    if (f == Family::tri_centred_e3) return scaled(3, {1});
  }
  if (row == "{6,3}") {
    if (f == Family::tri_e3) return scaled(2, {1, 2});
    if (f == Family::tri_centred_e3) return scaled(2, {});
  }
  throw TableError(row + " has no planar-table entry for " + family_name(f));
}

// ---- blended apeirohedra ----

struct PQRS {
  mpz_class p, q, r, s, g;
  mpz_class qg() const { return q / g; }
  mpz_class sg() const { return s / g; }
};

PQRS pqrs(const ParamPoint& x) {
  PQRS v{x.a.get_num(), x.a.get_den(), x.b.get_num(), x.b.get_den(), 0};
  v.g = gcd(v.q, v.s);
  return v;
}

using Bullets = std::vector<bool>;

int first_true(const Bullets& b) {
  for (std::size_t i = 0; i < b.size(); ++i)
    if (b[i]) return static_cast<int>(i);
  return -1;
}

Bullets bullets_44_empty(Family f, const PQRS& v) {
  const auto& [p, q, r, s, g] = v;
  switch (f) {
    case Family::cubic:
      return {odd(p) && odd(r) && r <= g, odd(p) && even(r) && r < g, even(p) && odd(r) && 2 * r < g,
              even(p) && even(r) && r < g};
    case Family::fcc:
      return {odd(p) && odd(r) && even(v.qg()) && 2 * r <= g,
              odd(p) && odd(r) && odd(v.qg()) && odd(v.sg()) && r <= g,
              odd(p) && odd(r) && odd(v.qg()) && even(v.sg()) && odd(g) && r <= g,
              odd(p) && odd(r) && odd(v.qg()) && even(v.sg()) && even(g) && 2 * r <= g,
              odd(p) && even(r) && 2 * r < g,
              even(p) && odd(r) && 2 * r < g,
              even(p) && even(r) && r < g};
    case Family::bcc:
      return {odd(p) && odd(r) && 2 * r <= g, odd(p) && even(r) && even(q) && 2 * r < g,
              odd(p) && even(r) && odd(q) && r < g, even(p) && odd(r) && 2 * r < g, even(p) && even(r) && 2 * r < g};
    case Family::square_centred_e3:
      return {odd(p) && odd(r) && odd(v.qg()) && 2 * r <= g, odd(p) && odd(r) && even(v.qg()) && r <= g,
              odd(p) && even(r) && r < g, even(p) && odd(r) && 2 * r < g, even(p) && even(r) && r < g};
    default: break;
  }
  throw TableError("{4,4}#{} has no entry for " + family_name(f));
}

Bullets bullets_44_inf(Family f, const PQRS& v) {
  const auto& [p, q, r, s, g] = v;
  const long r12 = mod(r, 12);
  const bool r_pm4 = r12 == 4 || r12 == 8;
  const bool r_pm2 = r12 == 2 || r12 == 10;
  const bool g1 = g == 1, g3 = g == 3, other = !g1 && !g3;
  switch (f) {
    case Family::cubic: return {g1 && odd(p) && odd(r), g3 && !(r_pm4 && even(p)), other};
    case Family::fcc:
      return {g1 && odd(p) && odd(r) && odd(q) && odd(s), g3 && !(r_pm4 && even(p)) && !(r_pm2 && odd(p * q)), other};
    case Family::bcc: return {g3 && !(r_pm4 && even(p)), other};
    case Family::square_centred_e3: return {g1 && odd(p) && odd(r) && even(q), g3 && !(r_pm4 && even(p)), other};
    default: break;
  }
  throw TableError("{4,4}#{inf} has no entry for " + family_name(f));
}

Bullets bullets_36_inf(Family f, const PQRS& v) {
  const auto& [p, q, r, s, g] = v;
  const bool g13 = g == 1 || g == 3;
  switch (f) {
    case Family::tri_e3: return {g != 1};
    case Family::tri_centred_e3: return {!g13};
    case Family::tri_centred_u1e3:
    case Family::tri_centred_u2e3: {
      const bool g3 = g == 3;
      bool cong = false;
      if (g3) {
        const mpz_class lhs = p * s / 3, rhs = r * q / 3;
        cong = f == Family::tri_centred_u1e3 ? mod(lhs - rhs, 3) == 0 : mod(lhs + rhs, 3) == 0;
      }
      return {g3 && cong, !g13};
    }
    default: break;
  }
  throw TableError("{3,6}#{inf} has no entry for " + family_name(f));
}

Bullets bullets_63_empty(Family f, const PQRS& v) {
  const auto& [p, q, r, s, g] = v;
  switch (f) {
    case Family::tri_e3:
    case Family::tri_centred_e3: return {3 * r <= g};
    case Family::tri3_u1u2e3:
    case Family::tri3_2u1mu2e3: {
      const mpz_class lhs = r * q / g, rhs = s * p / g;
      const bool cong = f == Family::tri3_u1u2e3 ? mod(lhs - rhs, 3) == 0 : mod(lhs + rhs, 3) == 0;
      const bool base = divides(3, q) && !divides(3, v.qg()) && !divides(3, v.sg());
      return {!divides(3, q) && 3 * r < g,
              divides(3, v.qg()) && 9 * r <= g,
              divides(3, q) && !divides(3, v.qg()) && divides(3, v.sg()) && 9 * r <= g,
              base && cong && 3 * r <= g,
              base && !cong && 9 * r <= g};
    }
    default: break;
  }
  throw TableError("{6,3}#{} has no entry for " + family_name(f));
}

Bullets bullets_36_empty(Family f, const PQRS& v) {
  const auto& [p, q, r, s, g] = v;
  switch (f) {
    case Family::tri_e3: return {r < g};
    case Family::tri_centred_e3:
      return {!divides(3, q) && r < g, divides(3, v.qg()) && r < g,
              !divides(3, v.qg()) && divides(3, g) && 3 * r < g};
    default: break;
  }
  throw TableError("{3,6}#{} has no entry for " + family_name(f));
}

Bullets bullets_63_inf(Family f, const PQRS& v) {
  const auto& [p, q, r, s, g] = v;
  if (f != Family::tri_e3 && f != Family::tri_centred_e3) throw TableError("{6,3}#{inf} has no entry for " + family_name(f));
  return {g == 1 && !divides(3, r) && odd(r), g == 2 && !divides(3, p) && !divides(4, r), g == 5 && !divides(3, p),
          g == 5 && odd(r), g != 1 && g != 2 && g != 5};
}

bool is_empty_blend(const std::string& row) { return row.ends_with("#{}"); }

}  // namespace

std::string table_kind_name(TableKind k) {
  switch (k) {
    case TableKind::finite: return "finite";
    case TableKind::pure: return "pure";
    case TableKind::planar: return "planar";
    case TableKind::blended: return "blended";
  }
  return "";
}

std::string ParamPoint::str() const { return b == 1 ? a.get_str() : a.get_str() + "," + b.get_str(); }

TableKind table_kind(const std::string& name) {
  switch (spec(name).kind) {
    case PolyKind::finite: return TableKind::finite;
    case PolyKind::pure: return TableKind::pure;
    case PolyKind::planar: return TableKind::planar;
    default: return TableKind::blended;
  }
}

const std::vector<Family>& table_families(const std::string& name) {
  static const std::vector<Family> three{Family::cubic, Family::fcc, Family::bcc};
  static const std::vector<Family> d4{Family::cubic, Family::fcc, Family::bcc, Family::square_centred_e3};
  static const std::vector<Family> d6{Family::tri_e3, Family::tri_centred_e3};
  static const std::vector<Family> d3a{Family::tri_e3, Family::tri_centred_e3, Family::tri_centred_u1e3,
                                       Family::tri_centred_u2e3};
  static const std::vector<Family> d3b{Family::tri_e3, Family::tri_centred_e3, Family::tri3_u1u2e3,
                                       Family::tri3_2u1mu2e3};
  const std::string row = table_row(spec(name).name);
  switch (table_kind(name)) {
    case TableKind::finite:
    case TableKind::pure: return three;
    default: break;
  }
  if (row == "{4,4}" || row.starts_with("{4,4}#")) return d4;
  if (row == "{3,6}#{inf}") return d3a;
  if (row == "{6,3}#{}") return d3b;
  return d6;
}

Lattice table_lattice(Family f, const ParamPoint& x, TableKind k) {
  if (k == TableKind::finite || k == TableKind::pure) return make_named(f, Surd(x.a));
  return make_named(f, std::vector<Surd>{Surd(x.a), Surd(x.a), Surd(x.b)});
}

BlendedClauses blended_clauses(const std::string& name, Family f, const ParamPoint& x) {
  const std::string self = spec(name).name;
  const std::string row = table_row(self);
  const bool petrial = row != self;
  if (table_kind(name) != TableKind::blended) throw TableError(self + " is not blended");
  const PQRS v = pqrs(x);
  BlendedClauses c;
  // for Q#{} the bullets assume r <= s; larger b leaves a unrestricted
  const bool bullets_apply = !is_empty_blend(row) || v.r <= v.s;
  Bullets b;
  if (row == "{4,4}#{}") b = bullets_44_empty(f, v);
  else if (row == "{4,4}#{inf}") b = bullets_44_inf(f, v);
  else if (row == "{3,6}#{inf}") b = bullets_36_inf(f, v);
  else if (row == "{6,3}#{}") b = bullets_63_empty(f, v);
  else if (row == "{3,6}#{}") b = bullets_36_empty(f, v);
  else if (row == "{6,3}#{inf}") b = bullets_63_inf(f, v);
  else throw TableError(self + " has no blended table");
  if (bullets_apply) {
    c.bullet = first_true(b);
    c.listed = c.bullet >= 0;
  }
  const bool p1 = v.p == 1;
  auto exclude = [&](bool cond, const char* source) {
    if (cond && !c.prose_excluded) {
      c.prose_excluded = true;
      c.prose_source = source;
    }
  };
  if (row == "{4,4}#{}" && !petrial)
    exclude(f == Family::bcc ? p1 && even(v.q) : p1, "(1,1,0) in L breaks the diamond condition");
  if (row == "{4,4}#{inf}" && !petrial)
    exclude(f == Family::bcc ? p1 && even(v.q) : p1, "(1,1,2r) in L identifies non-translate vertices of a face");
  if (row == "{3,6}#{inf}" && !petrial) {
    const bool cond = f == Family::tri_e3 ? p1 && !divides(3, v.r) : p1 && !divides(3, v.r) && divides(3, v.q);
    exclude(cond, "(1,0,3k+1) in L breaks the diamond condition");
  }
  if (row == "{3,6}#{inf}" && petrial) exclude(p1 && odd(v.r), "(1,(3r-1)/2,3r) in L moves a face off itself");
  if (row == "{6,3}#{}" && !petrial)
    exclude(p1 && f != Family::tri_centred_e3, "p = 1 forbidden for the e3 and 3-fold layer lattices");
  if (row == "{3,6}#{}" && !petrial) exclude(p1 && f == Family::tri_e3, "p = 1 forbidden for the triangular lattice");
  if (row == "{6,3}#{inf}" && !petrial) exclude(p1 && f == Family::tri_e3, "(1,0,2r) in L moves a face off itself");
  return c;
}

bool table_predicate(const std::string& name, Family f, const ParamPoint& x, Orientation o) {
  const std::string row = table_row(spec(name).name);
  if (x.a <= 0 || x.b <= 0) throw TableError("parameters must be positive");
  const auto& fams = table_families(name);
  if (std::find(fams.begin(), fams.end(), f) == fams.end())
    throw TableError(spec(name).name + " is not tabulated for " + family_name(f));
  switch (table_kind(name)) {
    case TableKind::finite: return finite_predicate(row, f, x.a);
    case TableKind::pure: return pure_predicate(row, f, x.a);
    case TableKind::planar: return planar_predicate(row, f, x.a);
    case TableKind::blended: {
      const BlendedClauses c = blended_clauses(name, f, x);
      const bool table_ok = o == Orientation::listed_forbidden ? !c.listed : c.listed;
      return table_ok && !c.prose_excluded;
    }
  }
  return false;
}

OracleResult run_oracle(const std::string& name, Family f, const ParamPoint& x) {
  const PolyhedronSpec& s = spec(name);
  const QuotientPolyhedron q = quotient(s, table_lattice(f, x, table_kind(name)));
  OracleResult r;
  const QuotientVerdict v = check_regular(q);
  r.accepted = v.accepted;
  r.reason = v.reason;
  r.counts = v.counts;
  return r;
}

std::vector<ParamPoint> ScanResult::accepted() const {
  std::vector<ParamPoint> out;
  for (const auto& e : entries)
    if (e.oracle.accepted) out.push_back(e.x);
  return out;
}

std::vector<ScanEntry> ScanResult::discrepancies() const {
  std::vector<ScanEntry> out;
  for (const auto& e : entries)
    if (e.discrepancy()) out.push_back(e);
  return out;
}

namespace {

ScanResult scan_impl(const std::string& name, Family f, std::vector<ParamPoint> grid, bool parallel) {
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  ScanResult out{spec(name).name, f, std::vector<ScanEntry>(grid.size())};
  const long n = static_cast<long>(grid.size());
#pragma omp parallel for schedule(dynamic, 1) if (parallel)
  for (long i = 0; i < n; ++i) {
    ScanEntry& e = out.entries[static_cast<std::size_t>(i)];
    e.x = grid[static_cast<std::size_t>(i)];
    e.oracle = run_oracle(name, f, e.x);
    e.predicted = table_predicate(name, f, e.x);
  }
  return out;
}

}  // namespace

ScanResult scan_parameters(const std::string& name, Family f, std::vector<ParamPoint> grid) {
  return scan_impl(name, f, std::move(grid), true);
}

ScanResult scan_parameters_serial(const std::string& name, Family f, std::vector<ParamPoint> grid) {
  return scan_impl(name, f, std::move(grid), false);
}

std::vector<mpq_class> fractions(int max_den, const mpq_class& max_value) {
  std::vector<mpq_class> out;
  for (long q = 1; q <= max_den; ++q)
    for (long p = 1; mpq_class(p, q) <= max_value; ++p)
      if (std::gcd(p, q) == 1) out.emplace_back(p, q);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ParamPoint> grid_a(const std::vector<mpq_class>& as) {
  std::vector<ParamPoint> out;
  for (const auto& a : as) out.push_back({a, 1});
  return out;
}

std::vector<ParamPoint> grid_ab(const std::vector<mpq_class>& as, const std::vector<mpq_class>& bs) {
  std::vector<ParamPoint> out;
  for (const auto& a : as)
    for (const auto& b : bs) out.push_back({a, b});
  return out;
}

std::vector<ParamPoint> default_grid(const std::string& name, int max_den) {
  switch (table_kind(name)) {
    case TableKind::finite: {
      std::vector<mpq_class> as;
      for (long k = 1; k <= 24; ++k) as.emplace_back(mpq_class(k, 8));
      for (auto& a : as) a.canonicalize();
      return grid_a(as);
    }
    case TableKind::pure: {
      std::vector<mpq_class> as;
      for (long k = 1; k <= 12; ++k)
        for (long d : {1, 2, 3}) {
          mpq_class a(k, d);
          a.canonicalize();
          as.push_back(a);
        }
      std::sort(as.begin(), as.end());
      as.erase(std::unique(as.begin(), as.end()), as.end());
      return grid_a(as);
    }
    case TableKind::planar: return grid_a(fractions(max_den, 6));
    case TableKind::blended: {
      const auto fr = fractions(max_den, 4);
      return grid_ab(fr, fr);
    }
  }
  return {};
}

}  // namespace torreg
