#pragma once

#include <array>
#include <initializer_list>
#include <string>
#include <vector>

#include "torreg/surd.hpp"

namespace torreg {

// Point or vector of E^2 or E^3.
struct Vec {
  int dim = 3;
  std::array<Surd, 3> c{};

  Vec() = default;
  explicit Vec(int d) : dim(d) {}
  Vec(std::initializer_list<Surd> xs);

  Surd& operator[](int i) { return c[static_cast<std::size_t>(i)]; }
  const Surd& operator[](int i) const { return c[static_cast<std::size_t>(i)]; }

  bool is_zero() const;
  Vec operator-() const;
  Vec& operator+=(const Vec& o);
  Vec& operator-=(const Vec& o);
  friend Vec operator+(Vec a, const Vec& b) { return a += b; }
  friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
  friend Vec operator*(const Surd& s, Vec v);
  friend bool operator==(const Vec& a, const Vec& b);
  // Lexicographic by real value of coordinates.
  friend bool operator<(const Vec& a, const Vec& b);

  std::string str() const;
};

Surd dot(const Vec& a, const Vec& b);
Vec cross(const Vec& a, const Vec& b);
Vec unit(int dim, int i);
Vec embed3(const Vec& v);

struct VecHash {
  std::size_t operator()(const Vec& v) const;
};

// Square matrix acting on row vectors: x -> x M.
struct Mat {
  int dim = 3;
  std::array<std::array<Surd, 3>, 3> m{};

  Mat() = default;
  explicit Mat(int d) : dim(d) {}
  Mat(std::initializer_list<std::initializer_list<Surd>> rows);

  static Mat identity(int d);
  static Mat diag(const std::vector<Surd>& d);
  static Mat from_rows(const std::vector<Vec>& rows);

  Surd& operator()(int i, int j) { return m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
  const Surd& operator()(int i, int j) const {
    return m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  Vec row(int i) const;

  Mat operator-() const;
  friend Mat operator*(const Mat& a, const Mat& b);
  friend Mat operator*(const Surd& s, Mat a);
  friend Mat operator+(const Mat& a, const Mat& b);
  friend Mat operator-(const Mat& a, const Mat& b);
  friend bool operator==(const Mat& a, const Mat& b);

  Mat transpose() const;
  Surd det() const;
  Surd trace() const;
  Mat inverse() const;  // throws DivisionByZero when singular
  bool is_identity() const;
  bool is_orthogonal() const;
  bool is_integral() const;
  bool is_rational() const;
  Mat pow(int k) const;

  std::string str() const;
};

Vec operator*(const Vec& v, const Mat& a);
Mat embed3(const Mat& a);

// Solve x A = b for x; returns false when singular.
bool solve_row(const Mat& a, const Vec& b, Vec& x);

}  // namespace torreg
