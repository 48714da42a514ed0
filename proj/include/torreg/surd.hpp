#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace torreg {

struct DivisionByZero : std::domain_error {
  DivisionByZero() : std::domain_error("division by zero") {}
};

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Exact element a + b*sqrt(3) with rational a, b.
class Surd {
 public:
  Surd() = default;
  Surd(long v) : a_(v) {}  // NOLINT(google-explicit-constructor)
  Surd(mpq_class a, mpq_class b = 0);

  static Surd sqrt3() { return Surd(0, 1); }
  static Surd frac(long num, long den, long snum = 0, long sden = 1);

  const mpq_class& rat() const { return a_; }
  const mpq_class& irr() const { return b_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }
  bool is_integer() const { return is_rational() && a_.get_den() == 1; }

  int sign() const;
  Surd conj() const { return Surd(a_, -b_); }
  mpq_class norm() const { return a_ * a_ - 3 * b_ * b_; }
  double to_double() const;

  Surd operator-() const { return Surd(-a_, -b_); }
  Surd& operator+=(const Surd& o);
  Surd& operator-=(const Surd& o);
  Surd& operator*=(const Surd& o);
  Surd& operator/=(const Surd& o);

  friend Surd operator+(Surd x, const Surd& y) { return x += y; }
  friend Surd operator-(Surd x, const Surd& y) { return x -= y; }
  friend Surd operator*(Surd x, const Surd& y) { return x *= y; }
  friend Surd operator/(Surd x, const Surd& y) { return x /= y; }

  friend bool operator==(const Surd& x, const Surd& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
  friend std::strong_ordering operator<=>(const Surd& x, const Surd& y);

  // Structural order (rational part, then surd part); used for containers, not magnitude.
  static bool structural_less(const Surd& x, const Surd& y);

  std::string str() const;
  static Surd parse(std::string_view text);

  std::size_t hash() const;

 private:
  mpq_class a_{0};
  mpq_class b_{0};
};

int surd_sign(const Surd& x);
Surd surd_arith(const Surd& x, const Surd& y, char op);

// Largest integer <= x.
mpz_class floor(const Surd& x);
Surd abs(const Surd& x);

}  // namespace torreg
