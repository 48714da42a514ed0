#include <cmath>

#include "doctest.h"
#include "gen.hpp"
#include "torreg/isometry.hpp"

using namespace torreg;

TEST_CASE("surd arithmetic") {
  CHECK(Surd(1, 1) * Surd(1, -1) == Surd(-2));
  CHECK(Surd(mpq_class(1, 4)) + Surd(0, mpq_class(1, 2)) * Surd(0, mpq_class(1, 2)) == Surd(1));
  CHECK(Surd(0, mpq_class(1, 3)) / Surd(0, mpq_class(1, 3)) == Surd(1));
  CHECK_THROWS_AS(Surd(1) / Surd(0), DivisionByZero);
  CHECK(surd_arith(Surd(2), Surd(3), '-') == Surd(-1));
}

TEST_CASE("surd sign") {
  CHECK(surd_sign(Surd(2, -1)) == 1);
  CHECK(surd_sign(Surd(-2, 1)) == -1);
  CHECK(surd_sign(Surd(0)) == 0);
  CHECK(surd_sign(Surd(-7, 4)) == -1);
  CHECK(surd_sign(Surd(7, -4)) == 1);
}

TEST_CASE("surd text round trip") {
  for (const char* s : {"0", "1/2", "-3", "1/2+1/2*s3", "1/2*s3", "1/2-1/2*s3", "-5/3*s3", "s3"}) {
    const Surd x = Surd::parse(s);
    CHECK(Surd::parse(x.str()) == x);
  }
  CHECK(Surd::parse("1/2+1/2*s3").str() == "1/2+1/2*s3");
  CHECK_THROWS_AS(Surd::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Surd::parse("abc"), ParseError);
}

TEST_CASE("surd properties against a floating shadow") {
  for (int k = 0; k < 500; ++k) {
    const Surd x = gen::surd(), y = gen::surd();
    const double dx = x.to_double(), dy = y.to_double();
    CHECK(std::abs((x + y).to_double() - (dx + dy)) <= 1e-9 * (1 + std::abs(dx + dy)));
    CHECK(std::abs((x * y).to_double() - dx * dy) <= 1e-9 * (1 + std::abs(dx * dy)));
    if (!y.is_zero()) CHECK(std::abs((x / y).to_double() - dx / dy) <= 1e-9 * (1 + std::abs(dx / dy)));
    CHECK(surd_sign(x * x) >= 0);
    CHECK(surd_sign(x) == -surd_sign(-x));
    if (std::abs(dx - dy) > 1e-9) CHECK((x < y) == (dx < dy));
    const mpz_class f = floor(x);
    CHECK(Surd(mpq_class(f)) <= x);
    CHECK(x < Surd(mpq_class(f + 1)));
  }
}

TEST_CASE("isometry parse and compose") {
  const Isometry r0 = Isometry::parse("(y,x,z)");
  CHECK(compose(r0, r0).is_identity());
  const Isometry g = Isometry::parse("(1-x,y,1/2*s3*x-1/2*y)");
  CHECK(Isometry::parse(g.str()) == g);
  CHECK(compose(Isometry::identity(3), g) == g);
  CHECK_THROWS_AS(Isometry::parse("(x,y"), ParseError);
  CHECK_THROWS_AS(Isometry::parse("(x,y,w)"), ParseError);
}

TEST_CASE("conjugation identity for translations") {
  const std::vector<Isometry> lin = {Isometry::parse("(y,x,z)"), Isometry::parse("(x,z,y)"),
                                     Isometry::parse("(-y,x,z)"), Isometry::parse("(-x,-y,-z)")};
  for (int k = 0; k < 100; ++k) {
    const Vec v = gen::vec(3);
    const Isometry& s = lin[static_cast<std::size_t>(gen::integer(0, 3))];
    CHECK(compose(Isometry::translate(v), s) == compose(s, Isometry::translate(v * s.linear)));
  }
}

TEST_CASE("isometry classification") {
  CHECK(classify_isometry(Isometry::parse("(y,x,z)")).tag == KindTag::plane_reflection);
  CHECK(classify_isometry(Isometry::parse("(-x,-y,-z)")).tag == KindTag::central_inversion);
  CHECK(classify_isometry(Isometry::parse("(1/2*x+1/2*s3*y,1/2*s3*x-1/2*y)")).tag == KindTag::plane_reflection);
  CHECK(classify_isometry(Isometry::parse("(-x,-y,z)")).tag == KindTag::half_turn);
  CHECK(classify_isometry(Isometry::parse("(y,z,x)")) == IsometryKind{KindTag::rotation, 3});
  CHECK(classify_isometry(Isometry::parse("(-y,x,z)")) == IsometryKind{KindTag::rotation, 4});
  CHECK(classify_isometry(Isometry::parse("(-y,x,-z)")) == IsometryKind{KindTag::rotatory_reflection, 4});
  CHECK(classify_isometry(Isometry::parse("(-y,-z,-x)")) == IsometryKind{KindTag::rotatory_reflection, 6});
  CHECK(classify_isometry(Isometry::parse("(x+1,y,z)")).tag == KindTag::translation);
  CHECK(classify_isometry(Isometry::parse("(1+x,-y,z)")).tag == KindTag::glide_screw);
  CHECK(classify_isometry(Isometry::parse("(1-x,y,z)")).tag == KindTag::plane_reflection);
  // rotation by arccos(3/5): infinite order
  const Isometry irr = Isometry::parse("(3/5*x-4/5*y,4/5*x+3/5*y,z)");
  CHECK(classify_isometry(irr).order == 0);
  CHECK(classify_isometry(irr).str() == "rotation(>bound)");
}

TEST_CASE("squares of involutions are the identity") {
  for (const char* f : {"(y,x,z)", "(x,y,-z)", "(1-x,y,z)", "(-x,-y,z)", "(y,x,-z)", "(1/2*x+1/2*s3*y,1/2*s3*x-1/2*y,z)"}) {
    const Isometry g = Isometry::parse(f);
    CHECK(classify_isometry(compose(g, g)).tag == KindTag::identity);
  }
}
