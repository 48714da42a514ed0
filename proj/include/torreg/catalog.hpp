#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "torreg/groups.hpp"

namespace torreg {

enum class PolyKind { finite, planar, blended_finite_face, blended_helical, pure };
std::string kind_name(PolyKind k);

struct UnknownPolyhedron : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// p or q equal to 0 means infinite.
struct PolyhedronSpec {
  std::string name;
  Vec base_vertex;                // 3-D; planar polyhedra lie in z = 0
  std::array<Isometry, 3> gens;   // 3-D
  int p = 0;
  int q = 0;
  PolyKind kind = PolyKind::finite;
  std::optional<Surd> blend;
  int table_dim = 3;              // 2 for planar rows given in the plane
  std::string petrie_partner;
  std::vector<std::string> formulas;  // as transcribed, after corrections

  std::vector<Isometry> gen_list() const { return {gens[0], gens[1], gens[2]}; }
  // Generators used for H(P).
  std::vector<Isometry> h_generators() const;
};

struct TypoCorrection {
  std::string polyhedron;
  std::string generator;
  std::string printed;
  std::string corrected;
  std::string reason;
};

const std::vector<PolyhedronSpec>& catalog();
const std::vector<TypoCorrection>& typo_log();
// Accepts spaces, the infinity sign and "{ }" spellings.
std::string normalize_name(const std::string& name);
const PolyhedronSpec& spec(const std::string& name);
PolyhedronSpec petrial_spec(const PolyhedronSpec& s, const std::string& name);

// A face of a patch.
struct Face {
  std::vector<int> walk;  // vertex indices in order
  bool complete = false;  // closed cycle fully inside the region
};

struct PolyhedronPatch {
  std::string name;
  std::vector<Vec> vertices;
  std::vector<std::pair<int, int>> edges;
  std::vector<Face> faces;
  Vec lo, hi;  // region box

  int vertex_index(const Vec& v) const;
  std::vector<int> degrees() const;
  bool interior(const Vec& v, const Surd& margin) const;
};

PolyhedronPatch build_finite(const std::string& name, const Surd& edge_scale = Surd(1));
// Region box in Euclidean coordinates; throws if no complete face fits for finite p.
PolyhedronPatch build_patch(const std::string& name, const Vec& lo, const Vec& hi);
PolyhedronPatch build_patch(const PolyhedronSpec& s, const Vec& lo, const Vec& hi);
// Faces replaced by Petrie walks; edges must lie in exactly two faces in the interior.
PolyhedronPatch petrial(const PolyhedronPatch& p);

struct GroupData {
  FiniteGroup point_group;           // G_o
  std::vector<Isometry> coset_reps;  // aligned with point_group.elements
  std::optional<Lattice> translations;  // T(P); empty for finite polyhedra

  std::size_t index_of(const Mat& m) const;
};

GroupData group_data(const PolyhedronSpec& s);
Lattice translation_subgroup(const std::string& name);

std::string to_off(const PolyhedronPatch& p);
// Truncated faces as polylines, one per line of vertex indices.
std::string truncated_sidecar(const PolyhedronPatch& p);

}  // namespace torreg
