#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "torreg/catalog.hpp"
#include "torreg/classify.hpp"

namespace torreg {

struct TorusPoint {
  Vec rep;  // half-open fractional coordinates in the lattice basis
  friend bool operator==(const TorusPoint&, const TorusPoint&) = default;
};

TorusPoint canonical_rep(const Vec& x, const Lattice& l);
// Squared distance in E^3 / L.
Surd torus_distance2(const TorusPoint& x, const TorusPoint& y, const Lattice& l);

enum class Rejection {
  none,
  lattice_not_preserved,
  non_finite_vertex_set,
  vertex_on_edge_interior,
  face_not_cycle,
  vertex_figure_broken,
  diamond_violation,
  not_flag_transitive,
};
std::string reason_name(Rejection r);

struct QuotientCounts {
  std::size_t V = 0, E = 0, F = 0, flags = 0, group_order = 0;
  friend bool operator==(const QuotientCounts&, const QuotientCounts&) = default;
};

struct QuotientVerdict {
  bool accepted = false;
  Rejection reason = Rejection::none;
  QuotientCounts counts;
  std::string detail;
};

// Affine map x -> x A + t on (1/N)Z^3 / Z^3, coordinates scaled by N.
struct IntAffine {
  std::array<std::int64_t, 12> v{};  // A row-major, then t

  std::int64_t a(int i, int j) const { return v[static_cast<std::size_t>(3 * i + j)]; }
  std::int64_t t(int i) const { return v[static_cast<std::size_t>(9 + i)]; }
  friend bool operator==(const IntAffine&, const IntAffine&) = default;
};

struct QuotientEdge {
  int a = 0, b = 0;
  std::array<std::int64_t, 3> disp{};  // b - a in scaled lattice coordinates
};

struct QuotientFace {
  std::vector<int> walk;                 // vertex ids
  std::array<std::int64_t, 3> period{};  // lattice coordinates of the closing translation
  bool contractible() const { return period == std::array<std::int64_t, 3>{}; }
};

struct QuotientPolyhedron {
  std::string name;
  PolyhedronSpec source;
  Lattice lattice;
  Vec base_vertex;
  std::int64_t N = 1;
  std::vector<IntAffine> elements;  // G_L, identity first
  std::array<IntAffine, 3> gens;
  std::vector<std::array<std::int64_t, 3>> vertex_keys;
  std::vector<QuotientEdge> edges;
  std::vector<QuotientFace> faces;
  std::vector<std::array<int, 3>> flag_of;  // (vertex, edge, face) of the flag Phi_0 g
  QuotientVerdict verdict;

  // Euclidean canonical representative of a vertex.
  Vec vertex_point(int i) const;
  int element_index(const IntAffine& g) const;
};

IntAffine compose(const IntAffine& f, const IntAffine& g, std::int64_t n);

// Builds P_L for the spec and a full-rank lattice. The verdict records the first failed check;
// group, vertices, edges and faces are filled whenever the group could be enumerated.
QuotientPolyhedron quotient(const PolyhedronSpec& s, const Lattice& l, std::size_t cap = 2'000'000);
// Free and transitive flag action with Phi_0 R_i the i-adjacent flag.
QuotientVerdict check_regular(const QuotientPolyhedron& q);

// Lifted generators with the base vertex at its canonical representative.
PolyhedronSpec lift_spec(const QuotientPolyhedron& q);
PolyhedronPatch lift(const QuotientPolyhedron& q, const Vec& lo, const Vec& hi);
// Flag graphs with R_i adjacency, compared from the base flags.
bool flag_graphs_isomorphic(const QuotientPolyhedron& a, const QuotientPolyhedron& b);

std::string verdict_json(const std::string& name, const std::string& family, const std::vector<Surd>& params,
                         const QuotientVerdict& v, std::optional<bool> prediction);

// Canonical vertex representatives and face walks as OFF.
std::string quotient_off(const QuotientPolyhedron& q);
// One line per edge: endpoints and the lifted displacement in lattice coordinates.
std::string quotient_edge_sidecar(const QuotientPolyhedron& q);

}  // namespace torreg
