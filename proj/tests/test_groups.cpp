#include <cmath>
#include <map>

#include "doctest.h"
#include "gen.hpp"
#include "torreg/catalog.hpp"

using namespace torreg;

namespace {

Isometry iso(const char* f) { return Isometry::parse(f); }

std::vector<Isometry> lin(const std::vector<Mat>& ms) {
  std::vector<Isometry> out;
  for (const auto& m : ms) out.push_back(Isometry::linear_only(m));
  return out;
}

Isometry rot_cos35() {
  const Surd c(mpq_class(3, 5)), s(mpq_class(4, 5));
  return Isometry::linear_only(Mat{{c, s, 0}, {-s, c, 0}, {0, 0, 1}});
}

}  // namespace

TEST_CASE("closure orders") {
  CHECK(closure(lin(oct_generators())).order() == 48);
  CHECK(closure(spec("{3,3}").gen_list()).order() == 24);
  CHECK(closure({}).order() == 1);
  CHECK(special_group(spec("{4,4}").gen_list()).order() == 8);
  CHECK(special_group(spec("{4,6|4}").gen_list()).order() == 48);
  CHECK_THROWS_AS(closure(lin(oct_generators()), 10), CapExceeded);
  CHECK_THROWS_AS(closure({iso("(x+1,y,z)")}), CapExceeded);
  CHECK_THROWS_AS(closure({rot_cos35()}), CapExceeded);
}

TEST_CASE("closure is idempotent") {
  for (const auto& s : catalog()) {
    const FiniteGroup g = special_group(s.gen_list());
    CHECK(closure(g.elements).order() == g.order());
  }
}

TEST_CASE("extended special group index") {
  const FiniteGroup c = closure(lin(oct_generators()));
  CHECK(extended_special_group(c.elements).order() == c.order());
  for (const auto& s : catalog()) {
    const std::size_t a = special_group(s.gen_list()).order(), b = extended_special_group(s.gen_list()).order();
    CHECK((b == a || b == 2 * a));
  }
}

TEST_CASE("H(P) examples") {
  CHECK(derive_H(spec("{4,6|4}").h_generators()).type == HType::b3);
  CHECK(derive_H(spec("{3,3}").h_generators()).type == HType::a3);
  CHECK(derive_H(spec("{4,4}").h_generators()).type == HType::d4);
  CHECK_THROWS_AS(derive_H({iso("(y,z,x)"), iso("(x,-y,z)")}), GroupError);
  for (const auto& s : derive_H(spec("{6,4}_6").h_generators()).reflections)
    CHECK(classify_isometry(s).tag == KindTag::plane_reflection);
}

TEST_CASE("H(P) table") {
  // columns of the table of regular polyhedra by H(P)
  const std::map<std::string, HType> table = {
      {"{3,3}", HType::a3},          {"{6,3}_4", HType::a3},         {"{6,6|3}", HType::a3},
      {"{inf,6}_4,4", HType::a3},    {"{6,6}_4", HType::a3},         {"{inf,3}^(a)", HType::a3},
      {"{3,4}", HType::b3},          {"{4,3}_3", HType::b3},         {"{6,4|4}", HType::b3},
      {"{inf,4}_6,4", HType::b3},    {"{6,4}_6", HType::b3},         {"{inf,4}_.,*3", HType::b3},
      {"{4,3}", HType::b3},          {"{6,4}_3", HType::b3},         {"{4,6|4}", HType::b3},
      {"{inf,6}_6,3", HType::b3},    {"{4,6}_6", HType::b3},         {"{inf,3}^(b)", HType::b3},
      {"{3,6}#{inf}", HType::d3},    {"{inf,6}_3#{inf}", HType::d3}, {"{6,3}#{}", HType::d3},
      {"{inf,3}_6#{}", HType::d3},   {"{4,4}", HType::d4},           {"{inf,4}_4", HType::d4},
      {"{4,4}#{}", HType::d4},       {"{inf,4}_4#{}", HType::d4},    {"{4,4}#{inf}", HType::d4},
      {"{inf,4}_4#{inf}", HType::d4}, {"{3,6}", HType::d6},          {"{6,3}", HType::d6},
      {"{inf,6}_3", HType::d6},      {"{inf,3}_6", HType::d6},       {"{3,6}#{}", HType::d6},
      {"{inf,6}_3#{}", HType::d6},   {"{6,3}#{inf}", HType::d6},     {"{inf,3}_6#{inf}", HType::d6},
  };
  CHECK(table.size() == catalog().size());
  std::vector<std::string> mismatches;
  for (const auto& s : catalog()) {
    const HGroup h = derive_H(s.h_generators());
    if (h.type != table.at(s.name)) mismatches.push_back(s.name);
  }
  // <S1,S2> of the planar {6,3} and its Petrial has mirrors at 60 degrees; the six-fold axis comes from G_o
  CHECK(mismatches == std::vector<std::string>{"{6,3}", "{inf,3}_6"});
  for (const auto& name : mismatches) {
    CHECK(derive_H(spec(name).h_generators()).type == HType::d3);
    const FiniteGroup ext = extended_special_group(spec(name).gen_list());
    for (const auto& g : dihedral_generators(6)) CHECK(ext.contains(Isometry::linear_only(g)));
  }
}

TEST_CASE("Coxeter relations") {
  const auto oct = spec("{3,4}").gen_list();
  CHECK(verify_coxeter(oct, 3, 4));
  CHECK_FALSE(verify_coxeter({oct[2], oct[1], oct[0]}, 3, 4));
  CHECK(verify_coxeter(spec("{4,6|4}").gen_list(), 4, 6));
  CHECK_FALSE(verify_coxeter(spec("{4,6|4}").gen_list(), 4, 4));
  for (const auto& s : catalog()) CHECK_MESSAGE(verify_coxeter(s.gen_list(), s.p, s.q), s.name);
  CHECK(isometry_order(iso("(x+1,y,z)")) == 0);
  CHECK(isometry_order(iso("(-x,-y,z)")) == 2);
}

TEST_CASE("torus isometries") {
  const std::vector<Lattice> ls = {make_named(Family::cubic, Surd(1)), make_named(Family::bcc, Surd(3)),
                                   make_named(Family::fcc, Surd(mpq_class(1, 2))),
                                   make_named(Family::tri_centred_u1e3, {Surd(2), Surd(2), Surd(1)})};
  for (const auto& l : ls) {
    for (int k = 0; k < 10; ++k) {
      const Vec t = gen::vec(3);
      const TorusIsometry f = induce_torus_isometry(Isometry::translate(t), l);
      CHECK(l.contains(f.lift.translation - t));
      const Isometry inv(-Mat::identity(3), gen::vec(3));
      CHECK_NOTHROW(induce_torus_isometry(inv, l));
    }
  }
  CHECK_THROWS_AS(induce_torus_isometry(rot_cos35(), ls[0]), NotNormalizing);
  CHECK_THROWS_AS(induce_torus_isometry(iso("(y,x,z)"), make_named(Family::square2_e1e3, {Surd(1), Surd(2), Surd(1)})),
                  NotNormalizing);
  CHECK_THROWS_AS(induce_torus_isometry(iso("(2*x,y,z)"), ls[0]), NotNormalizing);
}

TEST_CASE("torus isometry composition") {
  const FiniteGroup g = closure(lin(oct_generators()));
  const Lattice l = make_named(Family::fcc, Surd(2));
  for (int k = 0; k < 40; ++k) {
    const auto& a = g.elements[static_cast<std::size_t>(gen::integer(0, 47))];
    const auto& b = g.elements[static_cast<std::size_t>(gen::integer(0, 47))];
    const Isometry f(a.linear, gen::vec(3)), h(b.linear, gen::vec(3));
    const TorusIsometry lhs = compose(induce_torus_isometry(f, l), induce_torus_isometry(h, l));
    CHECK(lhs == induce_torus_isometry(compose(f, h), l));
  }
}

TEST_CASE("crystallographic restriction") {
  CHECK(crystallographic_check(closure(lin(oct_generators()))).ok);
  const Surd c = Surd::frac(0, 1, 1, 2), s(mpq_class(1, 2));
  const FiniteGroup dodecagonal = closure({Isometry::linear_only(Mat{{c, s, 0}, {-s, c, 0}, {0, 0, 1}})});
  CHECK(dodecagonal.order() == 12);
  const CrystalReport r = crystallographic_check(dodecagonal);
  CHECK_FALSE(r.ok);
  CHECK(r.offender.has_value());
  CHECK(cyclotomic(5) == std::vector<long>{1, 1, 1, 1, 1});
  CHECK(cyclotomic(6) == std::vector<long>{1, -1, 1});
  CHECK(cyclotomic(12) == std::vector<long>{1, 0, -1, 0, 1});
  // oracle: 2cos(2pi/n) is an integer exactly for the crystallographic periods
  for (int n = 1; n <= 30; ++n) {
    const double v = 2 * std::cos(2 * M_PI / n);
    const bool integral = std::abs(v - std::round(v)) < 1e-9;
    CHECK_MESSAGE(rotation_order_crystallographic(n) == integral, n);
  }
  CHECK(coxeter_crystallographic(3, 4));
  CHECK_FALSE(coxeter_crystallographic(3, 5));
  CHECK_FALSE(coxeter_crystallographic(5, 3));
}
