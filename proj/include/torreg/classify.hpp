#pragma once

#include <optional>
#include <string>
#include <vector>

#include "torreg/lattice.hpp"

namespace torreg {

enum class Family {
  cubic,
  bcc,
  fcc,
  square,
  square_centred,
  tri,
  tri_centred,
  square_centred_e3,
  square2_e1e3,
  square2_e2e3,
  tri_e3,
  tri_centred_e3,
  tri_centred_u1e3,
  tri_centred_u2e3,
  tri3_u1u2e3,
  tri3_2u1mu2e3,
};

const std::vector<Family>& all_families();
std::string family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);
int family_ambient(Family f);
std::vector<Vec> canonical_basis(Family f);

// Canonical basis times diag(scale); a single entry is broadcast.
Lattice make_named(Family f, const std::vector<Surd>& scale);
Lattice make_named(Family f, const Surd& a);

struct PreconditionError : LatticeError {
  using LatticeError::LatticeError;
};

struct ClassificationResult {
  Family family = Family::cubic;
  // L = canonical * diag(scale)
  std::vector<Surd> scale;
  // Rows: coordinates of the input basis in the basis of canonical * diag(scale); unimodular.
  std::vector<std::vector<mpz_class>> witness;
  // Rotation about the z-axis, in multiples of pi/6, applied to L before matching a standard group.
  int rotation_steps = 0;

  Mat transform() const { return Mat::diag(scale); }
  // Diagonal D with L D equal to the canonical member.
  Mat to_canonical() const;
  std::string str() const;
};

// Two-sided membership check plus the unimodular witness; throws on mismatch.
ClassificationResult certify(const Lattice& l, Family f, std::vector<Surd> scale);

std::vector<Mat> oct_generators();
// Standard reflections of the dihedral group of order 2n with mirrors containing the z-axis.
std::vector<Mat> dihedral_generators(int n);
Mat rotation_z(int steps);  // angle steps*pi/6, ambient 3

// Rank 2, invariant under the reflection in x=0.
ClassificationResult classify_rank2_reflection(const Lattice& l);
// Rank 2, invariant under the reflections in the lines through u1 and u2.
ClassificationResult classify_rank2_triangular(const Lattice& l);
ClassificationResult classify_oct(const Lattice& l);
ClassificationResult classify_dihedral(int n, const Lattice& l);
// Dihedral group given by its own reflections; matched against a rotated standard group.
ClassificationResult classify_dihedral_group(int n, const Lattice& l, const std::vector<Mat>& reflections);

}  // namespace torreg
