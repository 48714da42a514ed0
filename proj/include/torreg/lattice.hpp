#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "torreg/isometry.hpp"

namespace torreg {

struct LatticeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Free abelian group of rank 1..3 in E^2 or E^3, given by an exact basis.
class Lattice {
 public:
  Lattice() = default;
  explicit Lattice(std::vector<Vec> basis);  // throws LatticeError on dependent basis

  int rank() const { return static_cast<int>(basis_.size()); }
  int ambient() const { return ambient_; }
  const std::vector<Vec>& basis() const { return basis_; }
  // Rows are basis vectors.
  Mat basis_matrix() const;
  Surd gram_det() const;

  // Coordinates of v in the basis when v lies in the real span.
  std::optional<std::vector<Surd>> coordinates(const Vec& v) const;
  bool contains(const Vec& v) const;
  bool in_span(const Vec& v) const { return coordinates(v).has_value(); }
  Vec combine(const std::vector<mpz_class>& k) const;

  std::string str() const;

 private:
  int ambient_ = 3;
  std::vector<Vec> basis_;
  mutable std::optional<Mat> inv_;  // full-rank case
  mutable std::optional<Mat> gram_inv_;
};

bool lattice_equal(const Lattice& a, const Lattice& b);
bool lattice_contains_lattice(const Lattice& big, const Lattice& small);
Lattice extend(const Lattice& l, const Vec& w);
Lattice transform(const Lattice& l, const Mat& t);
bool invariant_under(const Lattice& l, const Mat& linear);
bool invariant_under(const Lattice& l, const Isometry& f);

// Z-span of arbitrary generators; throws LatticeError if the span is not discrete.
Lattice lattice_from_generators(const std::vector<Vec>& gens, int ambient);
Lattice lattice_sum(const Lattice& a, const Lattice& b);
// Index [b : a] for a sublattice a of b, as vol(a)/vol(b); both full rank.
mpz_class lattice_index(const Lattice& sub, const Lattice& super);
// Lagrange-reduced basis for rank 2.
Lattice reduce_rank2(const Lattice& l);

// L intersected with the plane through o with the given normal.
Lattice intersect_plane(const Lattice& l, const Vec& normal);

struct ReflectionSplit {
  Lattice l0;
  Vec w;
  bool vertical = false;
};
// Normal of the mirror of a plane reflection, oriented with first nonzero entry positive.
Vec mirror_normal(const Mat& reflection);
// Lattice vector of smallest positive height along the normal.
Vec minimal_layer_vector(const Lattice& l, const Vec& normal);
ReflectionSplit reflection_split(const Lattice& l, const Mat& reflection);
// Shift w by L0 so that its projection to the mirror lies in the half-open cell of the given L0 basis.
Vec reduce_into_cell(const Vec& w, const Vec& v1, const Vec& v2);

// Torus helpers: half-open fractional coordinates.
Vec canonical_mod(const Lattice& l, const Vec& x);

std::string lattice_to_json(const Lattice& l);
Lattice lattice_from_json(const std::string& text);

}  // namespace torreg
