#include <random>
#include <set>

#include "doctest.h"
#include "torreg/classify.hpp"
#include "torreg/torus.hpp"

using namespace torreg;

namespace {

QuotientPolyhedron q_of(const std::string& name, Family f, const Surd& a) {
  return quotient(spec(name), make_named(f, a));
}

}  // namespace

TEST_CASE("canonical representatives") {
  const Lattice c1 = make_named(Family::cubic, Surd(1));
  CHECK(canonical_rep(Vec{2, 0, 0}, c1).rep == Vec{0, 0, 0});
  CHECK(canonical_rep(Vec{1, 1, 1}, make_named(Family::cubic, Surd(2))).rep == Vec{1, 1, 1});
  const Lattice f1 = make_named(Family::fcc, Surd(1));
  const Vec x{Surd::frac(3, 2), 0, 0};
  const Vec r = canonical_rep(x, f1).rep;
  CHECK(f1.contains(x - r));
  const auto k = f1.coordinates(r);
  REQUIRE(k);
  for (const auto& c : *k) {
    CHECK(c.sign() >= 0);
    CHECK(c < Surd(1));
  }
}

TEST_CASE("torus distance") {
  const Lattice c1 = make_named(Family::cubic, Surd(1));
  const TorusPoint o{Vec{0, 0, 0}};
  CHECK(torus_distance2(o, o, c1) == Surd(0));
  CHECK(torus_distance2(o, canonical_rep(Vec{Surd::frac(1, 2), 0, 0}, c1), c1) == Surd::frac(1, 4));
  CHECK(torus_distance2(o, canonical_rep(Vec{Surd::frac(3, 4), 0, 0}, c1), c1) == Surd::frac(1, 16));
}

TEST_CASE("torus distance is a metric on random triples") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> num(-12, 12);
  const Lattice l = make_named(Family::bcc, Surd(1));
  auto pt = [&] {
    return canonical_rep(Vec{Surd::frac(num(rng), 5), Surd::frac(num(rng), 7), Surd::frac(num(rng), 3)}, l);
  };
  auto dist = [&](const TorusPoint& a, const TorusPoint& b) { return torus_distance2(a, b, l).to_double(); };
  for (int i = 0; i < 40; ++i) {
    const TorusPoint x = pt(), y = pt(), z = pt();
    CHECK(torus_distance2(x, y, l) == torus_distance2(y, x, l));
    CHECK(std::sqrt(dist(x, z)) <= std::sqrt(dist(x, y)) + std::sqrt(dist(y, z)) + 1e-12);
  }
}

TEST_CASE("octahedron quotients") {
  const auto q = q_of("{3,4}", Family::cubic, Surd::frac(3, 2));
  CHECK(q.verdict.accepted);
  CHECK(q.verdict.counts.V == 6);
  CHECK(q.verdict.counts.E == 12);
  CHECK(q.verdict.counts.F == 8);
  const auto v = check_regular(q);
  CHECK(v.accepted);
  CHECK(v.counts.group_order == 48);
  CHECK(v.counts.flags == 48);
  CHECK_FALSE(q_of("{3,4}", Family::cubic, Surd(2)).verdict.accepted);
  CHECK_FALSE(q_of("{3,4}", Family::cubic, Surd(1)).verdict.accepted);
}

TEST_CASE("tetrahedron on the cubic torus needs the whole Dirichlet domain") {
  for (long k = 1; k <= 24; ++k) {
    const auto q = q_of("{3,3}", Family::cubic, Surd::frac(k, 8));
    CHECK(q.verdict.accepted == (k > 16));
  }
}

TEST_CASE("{4,6|4} on the 2-cubic torus") {
  const auto q = q_of("{4,6|4}", Family::cubic, Surd(2));
  REQUIRE(q.verdict.accepted);
  const auto v = check_regular(q);
  CHECK(v.accepted);
  CHECK(v.counts == QuotientCounts{8, 24, 12, 96, 96});
  for (const auto& f : q.faces) CHECK(f.contractible());
}

TEST_CASE("accepted quotients satisfy the flag identities") {
  const std::vector<std::pair<std::string, Family>> cases{
      {"{4,6|4}", Family::bcc}, {"{6,4|4}", Family::bcc}, {"{6,6|3}", Family::fcc},
      {"{inf,4}_6,4", Family::bcc}, {"{inf,3}^(a)", Family::bcc}, {"{6,6}_4", Family::cubic}};
  for (const auto& [name, fam] : cases)
    for (long a = 1; a <= 4; ++a) {
      const auto q = q_of(name, fam, Surd(a));
      if (!q.verdict.accepted) continue;
      INFO(name << " a=" << a);
      const auto v = check_regular(q);
      CHECK(v.accepted);
      CHECK(v.counts.flags == 4 * v.counts.E);
      CHECK(v.counts.group_order == v.counts.flags);
      CHECK(2 * v.counts.E == v.counts.V * static_cast<std::size_t>(spec(name).q));
    }
}

TEST_CASE("helical faces are non-contractible") {
  const auto q = q_of("{inf,4}_6,4", Family::bcc, Surd(2));
  REQUIRE(q.verdict.accepted);
  for (const auto& f : q.faces) {
    CHECK_FALSE(f.contractible());
    const Vec t = f.period[0] * q.lattice.basis()[0] + f.period[1] * q.lattice.basis()[1] + f.period[2] * q.lattice.basis()[2];
    CHECK(q.lattice.contains(t));
  }
}

TEST_CASE("finite accepted quotients are faithful") {
  for (const std::string name : {"{3,4}", "{4,3}", "{3,3}", "{6,4}", "{4,6}", "{6,6}"}) {
    if (!std::any_of(catalog().begin(), catalog().end(), [&](const auto& s) { return s.name == name; })) continue;
    const auto p = build_finite(name);
    for (const Family fam : {Family::cubic, Family::bcc, Family::fcc})
      for (long k = 1; k <= 24; ++k) {
        const auto q = q_of(name, fam, Surd::frac(k, 8));
        if (!q.verdict.accepted) continue;
        INFO(name << " " << family_name(fam) << " " << k << "/8");
        CHECK(q.verdict.counts.V == p.vertices.size());
        CHECK(q.verdict.counts.E == p.edges.size());
        CHECK(q.verdict.counts.F == p.faces.size());
      }
  }
}

TEST_CASE("lift round trip") {
  const auto q = q_of("{4,6|4}", Family::cubic, Surd(2));
  REQUIRE(q.verdict.accepted);
  const PolyhedronSpec ls = lift_spec(q);
  const auto q2 = quotient(ls, q.lattice);
  REQUIRE(q2.verdict.accepted);
  CHECK(q2.verdict.counts == q.verdict.counts);
  CHECK(flag_graphs_isomorphic(q, q2));

  const Vec lo{0, 0, 0}, hi{2, 2, 2};
  const auto a = lift(q, lo, hi), b = build_patch("{4,6|4}", lo, hi);
  CHECK(a.vertices.size() == b.vertices.size());
  CHECK(a.edges.size() == b.edges.size());
  CHECK(a.faces.size() == b.faces.size());

  const auto oct = q_of("{3,4}", Family::cubic, Surd::frac(3, 2));
  const auto p = lift(oct, Vec{0, 0, 0}, Vec{Surd::frac(3, 2), Surd::frac(3, 2), Surd::frac(3, 2)});
  CHECK(p.vertices.size() == 6);
  CHECK(p.edges.size() == 12);
  CHECK(p.faces.size() == 8);
}

TEST_CASE("verdict json") {
  const auto q = q_of("{3,4}", Family::cubic, Surd::frac(3, 2));
  const std::string j = verdict_json("{3,4}", "cubic", {Surd::frac(3, 2)}, q.verdict, true);
  CHECK(j.find("\"accepted\":true") != std::string::npos);
  CHECK(j.find("\"discrepancy\":false") != std::string::npos);
  CHECK(j.find("\"reason\"") == std::string::npos);
  const auto r = q_of("{3,4}", Family::cubic, Surd(2));
  const std::string k = verdict_json("{3,4}", "cubic", {Surd(2)}, r.verdict, true);
  CHECK(k.find("\"discrepancy\":true") != std::string::npos);
  CHECK(k.find("\"reason\":\"") != std::string::npos);
}
