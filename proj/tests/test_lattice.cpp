#include "doctest.h"
#include "gen.hpp"
#include "torreg/classify.hpp"

using namespace torreg;

namespace {

Lattice lat(std::vector<Vec> b) { return Lattice(std::move(b)); }
const Surd half = Surd(mpq_class(1, 2));

}  // namespace

TEST_CASE("named lattices") {
  CHECK(lattice_equal(make_named(Family::bcc, Surd(1)), lat({{2, 0, 0}, {0, 2, 0}, {1, 1, 1}})));
  const Lattice tc = make_named(Family::tri_centred, Surd(1));
  CHECK(tc.basis()[0] == (Vec{Surd(mpq_class(3, 2)), Surd(0, half.rat())}));
  CHECK(tc.basis()[1] == (Vec{Surd(mpq_class(3, 2)), Surd(0, -half.rat())}));
  CHECK(lattice_equal(make_named(Family::cubic, Surd(2)), lat({{2, 0, 0}, {0, 2, 0}, {0, 0, 2}})));
  CHECK_THROWS_AS(make_named(Family::cubic, Surd(-1)), LatticeError);
  CHECK_THROWS_AS(make_named(Family::cubic, Surd(0)), LatticeError);
  for (Family f : all_families()) CHECK(family_from_name(family_name(f)) == f);
}

TEST_CASE("membership") {
  CHECK(make_named(Family::bcc, Surd(1)).contains(Vec{1, 1, 1}));
  CHECK_FALSE(make_named(Family::fcc, Surd(1)).contains(Vec{1, 0, 0}));
  for (Family f : all_families()) CHECK(make_named(f, Surd(1)).contains(Vec(family_ambient(f))));
  CHECK_THROWS_AS(Lattice({Vec{1, 0, 0}, Vec{2, 0, 0}}), LatticeError);
}

TEST_CASE("extend, transform, equality") {
  const Lattice sq3 = lat({{1, 0, 0}, {0, 1, 0}});
  CHECK(lattice_equal(extend(sq3, Vec{0, 0, 1}), make_named(Family::cubic, Surd(1))));
  const Lattice sqc3 = lat({{1, 1, 0}, {1, -1, 0}});
  CHECK(lattice_equal(extend(sqc3, Vec{0, 0, 1}), make_named(Family::square_centred_e3, Surd(1))));
  CHECK(lattice_equal(extend(lat({{1, 0}}), Vec{0, 1}), make_named(Family::square, Surd(1))));
  CHECK_THROWS_AS(extend(sq3, Vec{1, 1, 0}), LatticeError);
  CHECK(lattice_equal(transform(make_named(Family::square_centred, Surd(1)), Mat::diag({2, 1})), lat({{2, 1}, {2, -1}})));
  CHECK(lattice_equal(transform(make_named(Family::cubic, Surd(1)), gen::unimodular(3)), make_named(Family::cubic, Surd(1))));
  CHECK_THROWS(transform(make_named(Family::cubic, Surd(1)), Mat::diag({1, 1, 0})));
  CHECK(lattice_equal(make_named(Family::fcc, Surd(1)), lat({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}})));
  CHECK_FALSE(lattice_equal(make_named(Family::cubic, Surd(1)), make_named(Family::cubic, Surd(2))));
}

TEST_CASE("invariance") {
  for (const auto& g : oct_generators()) CHECK(invariant_under(make_named(Family::fcc, Surd(1)), g));
  for (Family f : all_families()) {
    const int d = family_ambient(f);
    CHECK(invariant_under(make_named(f, Surd(1)), -Mat::identity(d)));
  }
  CHECK(invariant_under(make_named(Family::square_centred_e3, Surd(1)), Mat{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}));
}

TEST_CASE("invariance is closed under composition") {
  const std::vector<Mat> ms = {oct_generators()[0], oct_generators()[1], oct_generators()[2],
                               dihedral_generators(3)[1], dihedral_generators(6)[1], Mat::diag({-1, 1, 1})};
  for (Family f : all_families()) {
    if (family_ambient(f) != 3) continue;
    const Lattice l = make_named(f, Surd(1));
    for (const auto& a : ms)
      for (const auto& b : ms)
        if (invariant_under(l, a) && invariant_under(l, b)) CHECK(invariant_under(l, a * b));
  }
}

TEST_CASE("reflection invariance matches the perpendicular half-turn") {
  const std::vector<Mat> refl = {Mat::diag({1, 1, -1}), Mat::diag({-1, 1, 1}), Mat{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}},
                                 dihedral_generators(3)[1], dihedral_generators(6)[1]};
  for (int k = 0; k < 60; ++k) {
    Family f = all_families()[static_cast<std::size_t>(gen::integer(0, static_cast<long>(all_families().size()) - 1))];
    if (family_ambient(f) != 3) continue;
    const Lattice l = gen::shuffle(make_named(f, {Surd(gen::positive_rational()), Surd(gen::positive_rational()), Surd(gen::positive_rational())}));
    for (const auto& r : refl) CHECK(invariant_under(l, r) == invariant_under(l, -r));
  }
}

TEST_CASE("generators and sums") {
  const Lattice l = lattice_from_generators({Vec{2, 0, 0}, Vec{0, 2, 0}, Vec{1, 1, 1}, Vec{3, 1, 1}, Vec{0, 0, 2}}, 3);
  CHECK(lattice_equal(l, make_named(Family::bcc, Surd(1))));
  CHECK(lattice_index(make_named(Family::cubic, Surd(2)), make_named(Family::cubic, Surd(1))) == 8);
  CHECK_THROWS_AS(lattice_from_generators({Vec{1, 0, 0}, Vec{Surd::sqrt3(), 0, 0}}, 3), LatticeError);
  CHECK(lattice_equal(lattice_sum(make_named(Family::fcc, Surd(1)), make_named(Family::bcc, Surd(1))), make_named(Family::cubic, Surd(1))));
}

TEST_CASE("plane sections") {
  const Vec z{0, 0, 1};
  CHECK(lattice_equal(intersect_plane(make_named(Family::bcc, Surd(1)), z), lat({{2, 0, 0}, {0, 2, 0}})));
  CHECK(lattice_equal(intersect_plane(make_named(Family::cubic, Surd(1)), z), lat({{1, 0, 0}, {0, 1, 0}})));
  CHECK(lattice_equal(intersect_plane(make_named(Family::fcc, Surd(1)), z), lat({{1, 1, 0}, {1, -1, 0}})));
  CHECK(intersect_plane(lat({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), Vec{1, Surd::sqrt3(), 0}).rank() == 1);
}

TEST_CASE("reflection split") {
  const Mat rz = Mat::diag({1, 1, -1});
  auto s = reflection_split(make_named(Family::cubic, Surd(1)), rz);
  CHECK(s.w == (Vec{0, 0, 1}));
  CHECK(s.vertical);
  s = reflection_split(make_named(Family::bcc, Surd(1)), rz);
  CHECK(lattice_equal(s.l0, lat({{2, 0, 0}, {0, 2, 0}})));
  CHECK(s.w == (Vec{1, 1, 1}));
  CHECK_FALSE(s.vertical);
  s = reflection_split(make_named(Family::fcc, Surd(1)), rz);
  CHECK(s.w[2] == Surd(1));
  CHECK_FALSE(s.vertical);
  CHECK(make_named(Family::fcc, Surd(1)).contains(s.w));
  CHECK_THROWS_AS(reflection_split(make_named(Family::square2_e1e3, Surd(1)), Mat{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}), LatticeError);
}

TEST_CASE("reflection split layers partition the lattice") {
  for (Family f : {Family::cubic, Family::bcc, Family::fcc, Family::square2_e1e3, Family::square_centred_e3}) {
    const Lattice l = gen::shuffle(make_named(f, {Surd(gen::positive_rational()), Surd(gen::positive_rational()), Surd(gen::positive_rational())}));
    const auto s = reflection_split(l, Mat::diag({1, 1, -1}));
    for (int i = -2; i <= 2; ++i)
      for (int j = -2; j <= 2; ++j)
        for (int k = -2; k <= 2; ++k) {
          const Vec x = l.combine({i, j, k});
          const Vec n{0, 0, 1};
          const Surd m = dot(x, n) / dot(s.w, n);
          REQUIRE(m.is_integer());
          CHECK(s.l0.contains(x - m * s.w));
          CHECK_FALSE(s.l0.contains(x - (m + Surd(1)) * s.w));
        }
  }
}

TEST_CASE("rank-2 reflection classification") {
  auto r = classify_rank2_reflection(lat({{2, 0}, {0, 5}}));
  CHECK(r.family == Family::square);
  CHECK(r.to_canonical() == Mat::diag({half, Surd(mpq_class(1, 5))}));
  r = classify_rank2_reflection(lat({{2, 1}, {2, -1}}));
  CHECK(r.family == Family::square_centred);
  CHECK(r.to_canonical() == Mat::diag({half, 1}));
  r = classify_rank2_reflection(lat({{1, 3}, {1, -3}}));
  CHECK(r.family == Family::square_centred);
  CHECK(r.to_canonical() == Mat::diag({1, Surd(mpq_class(1, 3))}));
  CHECK_THROWS_AS(classify_rank2_reflection(lat({{1, 0}, {Surd(mpq_class(1, 3)), 1}})), PreconditionError);
}

TEST_CASE("octahedral classification") {
  auto r = classify_oct(gen::shuffle(make_named(Family::fcc, Surd(3))));
  CHECK(r.family == Family::fcc);
  CHECK(r.scale[0] == Surd(3));
  r = classify_oct(make_named(Family::cubic, Surd(1)));
  CHECK(r.family == Family::cubic);
  CHECK(r.scale[0] == Surd(1));
  r = classify_oct(make_named(Family::bcc, half));
  CHECK(r.family == Family::bcc);
  CHECK(r.scale[0] == half);
  CHECK_THROWS_AS(classify_oct(make_named(Family::square_centred_e3, Surd(1))), PreconditionError);
}

TEST_CASE("dihedral classification") {
  auto r = classify_dihedral(2, lat({{2, 0, 0}, {0, 2, 0}, {1, 0, 1}}));
  CHECK(r.family == Family::square2_e1e3);
  CHECK(r.transform() == Mat::diag({1, 1, 1}));
  r = classify_dihedral(4, make_named(Family::square_centred_e3, {2, 2, 5}));
  CHECK(r.family == Family::square_centred_e3);
  CHECK(r.transform() == Mat::diag({2, 2, 5}));
  r = classify_dihedral(3, make_named(Family::tri_centred_u1e3, {1, 1, Surd(mpq_class(1, 3))}));
  CHECK(r.family == Family::tri_centred_u1e3);
  CHECK(r.transform() == Mat::diag({1, 1, Surd(mpq_class(1, 3))}));
  CHECK_THROWS_AS(classify_dihedral(6, make_named(Family::tri_centred_u1e3, Surd(1))), PreconditionError);
  CHECK_THROWS_AS(classify_dihedral(5, make_named(Family::cubic, Surd(1))), std::invalid_argument);
}

TEST_CASE("json round trip") {
  const Lattice l = make_named(Family::tri_centred_u2e3, {Surd(2), Surd(2), Surd(mpq_class(1, 3))});
  CHECK(lattice_equal(lattice_from_json(lattice_to_json(l)), l));
  CHECK_THROWS_AS(lattice_from_json("{"), ParseError);
  CHECK_THROWS_AS(lattice_from_json("{\"basis\": 3}"), ParseError);
}
