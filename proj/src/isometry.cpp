#include "torreg/isometry.hpp"

#include <cctype>
#include <stdexcept>
#include <vector>

namespace torreg {

Isometry::Isometry(Mat l, Vec t) : linear(std::move(l)), translation(std::move(t)) {
  if (linear.dim != translation.dim) throw std::invalid_argument("isometry dimension mismatch");
}

Isometry Isometry::identity(int dim) { return {Mat::identity(dim), Vec(dim)}; }
Isometry Isometry::translate(const Vec& t) { return {Mat::identity(t.dim), t}; }
Isometry Isometry::linear_only(const Mat& l) { return {l, Vec(l.dim)}; }

Isometry Isometry::inverse() const {
  const Mat li = linear.inverse();
  return {li, -(translation * li)};
}

Isometry compose(const Isometry& f, const Isometry& g) {
  return {f.linear * g.linear, f.translation * g.linear + g.translation};
}

Isometry power(const Isometry& f, int k) {
  Isometry r = Isometry::identity(f.dim());
  for (int i = 0; i < k; ++i) r = compose(r, f);
  return r;
}

Isometry embed3(const Isometry& f) { return {embed3(f.linear), embed3(f.translation)}; }

namespace {

std::vector<std::string> split_top(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

// Splits "1-x+1/2*s3*y" into signed terms.
std::vector<std::string> signed_terms(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char ch = s[i];
    const bool boundary = (ch == '+' || ch == '-') && i > 0 && s[i - 1] != '*' && s[i - 1] != '/';
    if (boundary) {
      out.push_back(cur);
      cur.clear();
    }
    cur += ch;
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

}  // namespace

Isometry Isometry::parse(std::string_view formula) {
  std::string s;
  for (char ch : formula)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') throw ParseError("isometry must be parenthesised");
  const auto comps = split_top(s.substr(1, s.size() - 2), ',');
  const int d = static_cast<int>(comps.size());
  if (d < 2 || d > 3) throw ParseError("isometry must have 2 or 3 components");
  Isometry f{Mat(d), Vec(d)};
  for (int j = 0; j < d; ++j) {
    const std::string& comp = comps[static_cast<std::size_t>(j)];
    if (comp.empty()) throw ParseError("empty component");
    for (std::string term : signed_terms(comp)) {
      bool neg = false;
      while (!term.empty() && (term[0] == '+' || term[0] == '-')) {
        if (term[0] == '-') neg = !neg;
        term.erase(0, 1);
      }
      if (term.empty()) throw ParseError("dangling sign in " + comp);
      const char last = term.back();
      int var = -1;
      if (last == 'x') var = 0;
      if (last == 'y') var = 1;
      if (last == 'z') var = 2;
      Surd coef(1);
      std::string cs = var >= 0 ? term.substr(0, term.size() - 1) : term;
      if (!cs.empty() && cs.back() == '*') cs.pop_back();
      if (!cs.empty()) coef = Surd::parse(cs);
      if (neg) coef = -coef;
      if (var >= d) throw ParseError("variable out of range in " + comp);
      if (var < 0) f.translation[j] += coef;
      else f.linear(var, j) += coef;
    }
  }
  return f;
}

std::string Isometry::str() const {
  static const char* names = "xyz";
  std::string s = "(";
  for (int j = 0; j < dim(); ++j) {
    if (j) s += ",";
    std::string comp;
    if (!translation[j].is_zero()) comp = translation[j].str();
    auto add_term = [&](const Surd& c, const std::string& var) {
      if (c.is_zero()) return;
      const bool neg = c.sign() < 0;
      const Surd m = neg ? -c : c;
      if (neg) comp += "-";
      else if (!comp.empty()) comp += "+";
      if (!(m == Surd(1)) || var.empty()) comp += m.str() + (var.empty() ? "" : "*");
      comp += var;
    };
    for (int i = 0; i < dim(); ++i) {
      const Surd& c = linear(i, j);
      add_term(Surd(c.rat()), std::string(1, names[i]));
      add_term(Surd(0, c.irr()), std::string(1, names[i]));
    }
    if (comp.empty()) comp = "0";
    s += comp;
  }
  return s + ")";
}

int linear_order(const Mat& m, int bound) {
  Mat p = m;
  for (int k = 1; k <= bound; ++k) {
    if (p.is_identity()) return k;
    p = p * m;
  }
  return 0;
}

int order_from_trace(const Mat& m) {
  const Surd det = m.det();
  const int s = det.sign();
  // a rotatory part: work with the proper rotation s*M
  const Surd t = (s < 0 ? -m : m).trace();
  if (m.dim == 3) {
    // 1 + 2 cos(theta)
    if (t == Surd(3)) return s < 0 ? 2 : 1;
    if (t == Surd(-1)) return 2;
    if (t == Surd(0)) return s < 0 ? 6 : 3;
    if (t == Surd(1)) return 4;
    if (t == Surd(2)) return 6;
    return 0;
  }
  if (s < 0) return 2;
  if (t == Surd(2)) return 1;
  if (t == Surd(-2)) return 2;
  if (t == Surd(-1)) return 3;
  if (t == Surd(0)) return 4;
  if (t == Surd(1)) return 6;
  return 0;
}

std::string IsometryKind::str() const {
  std::string s;
  switch (tag) {
    case KindTag::identity: return "identity";
    case KindTag::central_inversion: return "central-inversion";
    case KindTag::plane_reflection: return "plane-reflection";
    case KindTag::half_turn: return "half-turn";
    case KindTag::translation: return "translation";
    case KindTag::glide_screw: return "glide/screw";
    case KindTag::rotation: s = "rotation"; break;
    case KindTag::rotatory_reflection: s = "rotatory-reflection"; break;
  }
  return s + "(" + (order > 0 ? std::to_string(order) : std::string(">bound")) + ")";
}

bool row_system_solvable(const Mat& a, const Vec& b) {
  // x A = b  <=>  A^T x^T = b^T; eliminate on the augmented matrix
  const int n = a.dim;
  std::vector<std::vector<Surd>> aug(static_cast<std::size_t>(n), std::vector<Surd>(static_cast<std::size_t>(n + 1)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug[i][j] = a(j, i);
    aug[i][n] = b[i];
  }
  int r = 0;
  for (int col = 0; col < n && r < n; ++col) {
    int piv = -1;
    for (int i = r; i < n; ++i)
      if (!aug[i][col].is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(aug[r], aug[piv]);
    for (int i = 0; i < n; ++i) {
      if (i == r || aug[i][col].is_zero()) continue;
      const Surd f = aug[i][col] / aug[r][col];
      for (int j = col; j <= n; ++j) aug[i][j] -= f * aug[r][j];
    }
    ++r;
  }
  for (int i = r; i < n; ++i)
    if (!aug[i][n].is_zero()) return false;
  return true;
}

bool has_fixed_point(const Isometry& f) {
  // x M + t = x  <=>  x (M - I) = -t
  return row_system_solvable(f.linear - Mat::identity(f.dim()), -f.translation);
}

IsometryKind classify_isometry(const Isometry& f, int bound) {
  const Mat& m = f.linear;
  const int d = m.dim;
  const bool fixed = has_fixed_point(f);
  if (m.is_identity()) return {f.translation.is_zero() ? KindTag::identity : KindTag::translation, 1};
  if (!fixed) return {KindTag::glide_screw, linear_order(m, bound)};
  const int det = m.det().sign();
  if (m == -Mat::identity(d)) return {d == 3 ? KindTag::central_inversion : KindTag::half_turn, 2};
  int ord = order_from_trace(m);
  if (ord == 0 || !m.pow(ord).is_identity()) ord = linear_order(m, bound);
  if (det > 0) {
    if (ord == 2) return {KindTag::half_turn, 2};
    return {KindTag::rotation, ord};
  }
  if (d == 2) return {KindTag::plane_reflection, 2};
  if (ord == 2 && m.trace() == Surd(1)) return {KindTag::plane_reflection, 2};
  return {KindTag::rotatory_reflection, ord};
}

}  // namespace torreg
