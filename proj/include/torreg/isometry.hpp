#pragma once

#include <string>
#include <string_view>

#include "torreg/linalg.hpp"

namespace torreg {

// x -> x*linear + translation
struct Isometry {
  Mat linear = Mat::identity(3);
  Vec translation = Vec(3);

  Isometry() = default;
  Isometry(Mat l, Vec t);
  static Isometry identity(int dim);
  static Isometry translate(const Vec& t);
  static Isometry linear_only(const Mat& l);

  int dim() const { return linear.dim; }
  Vec apply(const Vec& x) const { return x * linear + translation; }
  Isometry inverse() const;
  bool is_identity() const { return linear.is_identity() && translation.is_zero(); }
  bool is_orthogonal() const { return linear.is_orthogonal(); }

  friend bool operator==(const Isometry& a, const Isometry& b) {
    return a.linear == b.linear && a.translation == b.translation;
  }

  // Affine formula such as "(1-x,y,z)"; variables x,y,z, sqrt(3) written s3.
  static Isometry parse(std::string_view formula);
  std::string str() const;
};

// x -> (x f) g
Isometry compose(const Isometry& f, const Isometry& g);
Isometry power(const Isometry& f, int k);
Isometry embed3(const Isometry& f);

enum class KindTag {
  identity,
  central_inversion,
  plane_reflection,
  half_turn,
  rotation,
  rotatory_reflection,
  translation,
  glide_screw,
};

struct IsometryKind {
  KindTag tag = KindTag::identity;
  int order = 1;  // period of the linear part; 0 when beyond the search bound

  std::string str() const;
  friend bool operator==(const IsometryKind&, const IsometryKind&) = default;
};

constexpr int kOrderBound = 12;

// Smallest k in [1, bound] with M^k = I, or 0.
int linear_order(const Mat& m, int bound = kOrderBound);
// Order predicted from the trace alone for orders 1,2,3,4,6; 0 when the trace matches none.
int order_from_trace(const Mat& m);
IsometryKind classify_isometry(const Isometry& f, int bound = kOrderBound);

bool has_fixed_point(const Isometry& f);
// Whether x A = b has a solution.
bool row_system_solvable(const Mat& a, const Vec& b);

}  // namespace torreg
