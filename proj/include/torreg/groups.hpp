#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "torreg/lattice.hpp"

namespace torreg {

struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GroupError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class FiniteGroup {
 public:
  std::vector<Isometry> generators;
  std::vector<Isometry> elements;  // identity first, then breadth-first order

  std::size_t order() const { return elements.size(); }
  bool contains(const Isometry& f) const;
  std::size_t reflection_count() const;
};

constexpr std::size_t kPointGroupCap = 1000;

FiniteGroup closure(const std::vector<Isometry>& gens, std::size_t cap = kPointGroupCap);
FiniteGroup special_group(const std::vector<Isometry>& gens, std::size_t cap = kPointGroupCap);
FiniteGroup extended_special_group(const std::vector<Isometry>& gens, std::size_t cap = kPointGroupCap);

enum class HType { a3, b3, d2, d3, d4, d6, h3, other };
std::string htype_name(HType t);

struct HGroup {
  std::vector<Isometry> reflections;  // the S_i
  FiniteGroup group;
  HType type = HType::other;
};

// Generators (R0,R1,R2) for finite or pure polyhedra, (R1,R2) for planar or blended ones.
HGroup derive_H(const std::vector<Isometry>& gens);

// q or p equal to 0 means infinite, verified as order beyond kInfiniteOrderBound.
constexpr int kInfiniteOrderBound = 24;
// Smallest k in [1, bound] with f^k = id, or 0.
int isometry_order(const Isometry& f, int bound = kInfiniteOrderBound);
bool verify_coxeter(const std::vector<Isometry>& gens, int p, int q);

struct TorusIsometry {
  Isometry lift;
  Lattice lattice;

  friend bool operator==(const TorusIsometry& a, const TorusIsometry& b) { return a.lift == b.lift; }
};

struct NotNormalizing : GroupError {
  using GroupError::GroupError;
};

TorusIsometry induce_torus_isometry(const Isometry& f, const Lattice& l);
TorusIsometry compose(const TorusIsometry& f, const TorusIsometry& g);

struct CrystalReport {
  bool ok = true;
  std::optional<Isometry> offender;
  std::string trace;
  std::string reason;
};

CrystalReport crystallographic_check(const FiniteGroup& g);

// Integer coefficients of the n-th cyclotomic polynomial, constant term first.
std::vector<long> cyclotomic(int n);
// Degree over Q of 2cos(2pi/n).
int cos_degree(int n);
// Whether a rotation of order n has an integral trace, i.e. can preserve a rank-3 lattice.
bool rotation_order_crystallographic(int n);
// Abstract rank-3 Coxeter group [p,q]: crystallographic iff both periods are.
bool coxeter_crystallographic(int p, int q);

}  // namespace torreg
