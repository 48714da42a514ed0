#include "torreg/linalg.hpp"

#include <stdexcept>

namespace torreg {

Vec::Vec(std::initializer_list<Surd> xs) : dim(static_cast<int>(xs.size())) {
  if (dim < 1 || dim > 3) throw std::invalid_argument("vector dimension must be 1..3");
  int i = 0;
  for (const auto& x : xs) c[static_cast<std::size_t>(i++)] = x;
}

bool Vec::is_zero() const {
  for (int i = 0; i < dim; ++i)
    if (!(*this)[i].is_zero()) return false;
  return true;
}

Vec Vec::operator-() const {
  Vec r(dim);
  for (int i = 0; i < dim; ++i) r[i] = -(*this)[i];
  return r;
}

Vec& Vec::operator+=(const Vec& o) {
  if (o.dim != dim) throw std::invalid_argument("dimension mismatch");
  for (int i = 0; i < dim; ++i) (*this)[i] += o[i];
  return *this;
}

Vec& Vec::operator-=(const Vec& o) {
  if (o.dim != dim) throw std::invalid_argument("dimension mismatch");
  for (int i = 0; i < dim; ++i) (*this)[i] -= o[i];
  return *this;
}

Vec operator*(const Surd& s, Vec v) {
  for (int i = 0; i < v.dim; ++i) v[i] *= s;
  return v;
}

bool operator==(const Vec& a, const Vec& b) {
  if (a.dim != b.dim) return false;
  for (int i = 0; i < a.dim; ++i)
    if (!(a[i] == b[i])) return false;
  return true;
}

bool operator<(const Vec& a, const Vec& b) {
  if (a.dim != b.dim) return a.dim < b.dim;
  for (int i = 0; i < a.dim; ++i) {
    const int s = (a[i] - b[i]).sign();
    if (s != 0) return s < 0;
  }
  return false;
}

std::string Vec::str() const {
  std::string s = "(";
  for (int i = 0; i < dim; ++i) {
    if (i) s += ",";
    s += (*this)[i].str();
  }
  return s + ")";
}

Surd dot(const Vec& a, const Vec& b) {
  if (a.dim != b.dim) throw std::invalid_argument("dimension mismatch");
  Surd s;
  for (int i = 0; i < a.dim; ++i) s += a[i] * b[i];
  return s;
}

Vec cross(const Vec& a, const Vec& b) {
  if (a.dim != 3 || b.dim != 3) throw std::invalid_argument("cross needs 3-D");
  return Vec{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Vec unit(int dim, int i) {
  Vec v(dim);
  v[i] = 1;
  return v;
}

Vec embed3(const Vec& v) {
  Vec r(3);
  for (int i = 0; i < v.dim; ++i) r[i] = v[i];
  return r;
}

std::size_t VecHash::operator()(const Vec& v) const {
  std::size_t h = static_cast<std::size_t>(v.dim);
  for (int i = 0; i < v.dim; ++i) h = h * 1000003u ^ v[i].hash();
  return h;
}

Mat::Mat(std::initializer_list<std::initializer_list<Surd>> rows) : dim(static_cast<int>(rows.size())) {
  int i = 0;
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != dim) throw std::invalid_argument("matrix must be square");
    int j = 0;
    for (const auto& x : r) (*this)(i, j++) = x;
    ++i;
  }
}

Mat Mat::identity(int d) {
  Mat a(d);
  for (int i = 0; i < d; ++i) a(i, i) = 1;
  return a;
}

Mat Mat::diag(const std::vector<Surd>& d) {
  Mat a(static_cast<int>(d.size()));
  for (int i = 0; i < a.dim; ++i) a(i, i) = d[static_cast<std::size_t>(i)];
  return a;
}

Mat Mat::from_rows(const std::vector<Vec>& rows) {
  Mat a(static_cast<int>(rows.size()));
  for (int i = 0; i < a.dim; ++i) {
    if (rows[static_cast<std::size_t>(i)].dim != a.dim) throw std::invalid_argument("non-square rows");
    for (int j = 0; j < a.dim; ++j) a(i, j) = rows[static_cast<std::size_t>(i)][j];
  }
  return a;
}

Vec Mat::row(int i) const {
  Vec v(dim);
  for (int j = 0; j < dim; ++j) v[j] = (*this)(i, j);
  return v;
}

Mat Mat::operator-() const {
  Mat r(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) r(i, j) = -(*this)(i, j);
  return r;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.dim != b.dim) throw std::invalid_argument("dimension mismatch");
  Mat r(a.dim);
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j) {
      Surd s;
      for (int k = 0; k < a.dim; ++k)
        if (!a(i, k).is_zero() && !b(k, j).is_zero()) s += a(i, k) * b(k, j);
      r(i, j) = s;
    }
  return r;
}

Mat operator*(const Surd& s, Mat a) {
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j) a(i, j) *= s;
  return a;
}

Mat operator+(const Mat& a, const Mat& b) {
  Mat r(a.dim);
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j) r(i, j) = a(i, j) + b(i, j);
  return r;
}

Mat operator-(const Mat& a, const Mat& b) { return a + (-b); }

bool operator==(const Mat& a, const Mat& b) {
  if (a.dim != b.dim) return false;
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j)
      if (!(a(i, j) == b(i, j))) return false;
  return true;
}

Mat Mat::transpose() const {
  Mat r(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) r(i, j) = (*this)(j, i);
  return r;
}

Surd Mat::det() const {
  const Mat& a = *this;
  if (dim == 1) return a(0, 0);
  if (dim == 2) return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
  return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) - a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
         a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
}

Surd Mat::trace() const {
  Surd s;
  for (int i = 0; i < dim; ++i) s += (*this)(i, i);
  return s;
}

Mat Mat::inverse() const {
  // Gauss-Jordan over the field
  Mat a = *this;
  Mat inv = identity(dim);
  for (int col = 0; col < dim; ++col) {
    int piv = -1;
    for (int r = col; r < dim; ++r)
      if (!a(r, col).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) throw DivisionByZero();
    std::swap(a.m[static_cast<std::size_t>(col)], a.m[static_cast<std::size_t>(piv)]);
    std::swap(inv.m[static_cast<std::size_t>(col)], inv.m[static_cast<std::size_t>(piv)]);
    const Surd p = a(col, col);
    for (int j = 0; j < dim; ++j) {
      a(col, j) /= p;
      inv(col, j) /= p;
    }
    for (int r = 0; r < dim; ++r) {
      if (r == col || a(r, col).is_zero()) continue;
      const Surd f = a(r, col);
      for (int j = 0; j < dim; ++j) {
        a(r, j) -= f * a(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

bool Mat::is_identity() const { return *this == identity(dim); }

bool Mat::is_orthogonal() const { return ((*this) * transpose()).is_identity(); }

bool Mat::is_integral() const {
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      if (!(*this)(i, j).is_integer()) return false;
  return true;
}

bool Mat::is_rational() const {
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      if (!(*this)(i, j).is_rational()) return false;
  return true;
}

Mat Mat::pow(int k) const {
  Mat r = identity(dim);
  for (int i = 0; i < k; ++i) r = r * (*this);
  return r;
}

std::string Mat::str() const {
  std::string s = "[";
  for (int i = 0; i < dim; ++i) {
    if (i) s += ",";
    s += row(i).str();
  }
  return s + "]";
}

Vec operator*(const Vec& v, const Mat& a) {
  if (v.dim != a.dim) throw std::invalid_argument("dimension mismatch");
  Vec r(v.dim);
  for (int j = 0; j < a.dim; ++j) {
    Surd s;
    for (int k = 0; k < a.dim; ++k)
      if (!v[k].is_zero() && !a(k, j).is_zero()) s += v[k] * a(k, j);
    r[j] = s;
  }
  return r;
}

Mat embed3(const Mat& a) {
  Mat r = Mat::identity(3);
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j) r(i, j) = a(i, j);
  return r;
}

bool solve_row(const Mat& a, const Vec& b, Vec& x) {
  try {
    x = b * a.inverse();
    return true;
  } catch (const DivisionByZero&) {
    return false;
  }
}

}  // namespace torreg
