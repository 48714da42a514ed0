#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "torreg/classify.hpp"
#include "torreg/torus.hpp"

namespace torreg {

struct TableError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class TableKind { finite, pure, planar, blended };
std::string table_kind_name(TableKind k);

// a scales the base plane (or everything for finite and pure rows); b scales e3.
struct ParamPoint {
  mpq_class a;
  mpq_class b = 1;

  std::string str() const;
  friend bool operator<(const ParamPoint& x, const ParamPoint& y) {
    return x.a != y.a ? x.a < y.a : x.b < y.b;
  }
  friend bool operator==(const ParamPoint& x, const ParamPoint& y) { return x.a == y.a && x.b == y.b; }
};

TableKind table_kind(const std::string& name);
// Lattice families the tables cover for this polyhedron, in table column order.
const std::vector<Family>& table_families(const std::string& name);
Lattice table_lattice(Family f, const ParamPoint& x, TableKind k);

// Blended rows list conditions under which an identification occurs; the prose adds exclusions.
struct BlendedClauses {
  bool listed = false;        // some table bullet holds
  int bullet = -1;            // first matching bullet, 0-based
  bool prose_excluded = false;
  std::string prose_source;   // sentence the exclusion comes from
};
BlendedClauses blended_clauses(const std::string& name, Family f, const ParamPoint& x);

enum class Orientation { listed_forbidden, listed_admissible };
// Fixed by calibration against the oracle.
constexpr Orientation kBlendedOrientation = Orientation::listed_forbidden;

bool table_predicate(const std::string& name, Family f, const ParamPoint& x,
                     Orientation o = kBlendedOrientation);

struct OracleResult {
  bool accepted = false;
  Rejection reason = Rejection::none;
  QuotientCounts counts;
};
OracleResult run_oracle(const std::string& name, Family f, const ParamPoint& x);

struct ScanEntry {
  ParamPoint x;
  OracleResult oracle;
  bool predicted = false;
  bool discrepancy() const { return oracle.accepted != predicted; }
};

struct ScanResult {
  std::string name;
  Family family;
  std::vector<ScanEntry> entries;  // sorted by parameter

  std::vector<ParamPoint> accepted() const;
  std::vector<ScanEntry> discrepancies() const;
};

// Parallel over grid points; results are sorted by parameter.
ScanResult scan_parameters(const std::string& name, Family f, std::vector<ParamPoint> grid);
ScanResult scan_parameters_serial(const std::string& name, Family f, std::vector<ParamPoint> grid);

// Reduced fractions p/q with q <= max_den and 0 < p/q <= max_value.
std::vector<mpq_class> fractions(int max_den, const mpq_class& max_value);
std::vector<ParamPoint> grid_a(const std::vector<mpq_class>& as);
std::vector<ParamPoint> grid_ab(const std::vector<mpq_class>& as, const std::vector<mpq_class>& bs);
// Default desk-scale grid for the polyhedron's table.
std::vector<ParamPoint> default_grid(const std::string& name, int max_den = 6);

}  // namespace torreg
