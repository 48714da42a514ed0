#include "torreg/surd.hpp"

#include <cctype>
#include <cmath>
#include <functional>

namespace torreg {

Surd::Surd(mpq_class a, mpq_class b) : a_(std::move(a)), b_(std::move(b)) {
  a_.canonicalize();
  b_.canonicalize();
}

Surd Surd::frac(long num, long den, long snum, long sden) {
  if (den == 0 || sden == 0) throw DivisionByZero();
  return Surd(mpq_class(num, den), mpq_class(snum, sden));
}

int Surd::sign() const {
  const int sa = sgn(a_);
  const int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // opposite signs: compare a^2 with 3 b^2
  const int c = cmp(a_ * a_, 3 * b_ * b_);
  if (c == 0) return 0;  // unreachable for rationals, kept for totality
  return c > 0 ? sa : sb;
}

double Surd::to_double() const { return a_.get_d() + b_.get_d() * std::sqrt(3.0); }

Surd& Surd::operator+=(const Surd& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

Surd& Surd::operator-=(const Surd& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

Surd& Surd::operator*=(const Surd& o) {
  if (sgn(b_) == 0 && sgn(o.b_) == 0) {
    a_ *= o.a_;
    return *this;
  }
  mpq_class na = a_ * o.a_ + 3 * b_ * o.b_;
  mpq_class nb = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(na);
  b_ = std::move(nb);
  return *this;
}

Surd& Surd::operator/=(const Surd& o) {
  if (o.is_zero()) throw DivisionByZero();
  if (sgn(o.b_) == 0) {
    a_ /= o.a_;
    b_ /= o.a_;
    return *this;
  }
  const mpq_class n = o.norm();
  *this *= o.conj();
  a_ /= n;
  b_ /= n;
  return *this;
}

std::strong_ordering operator<=>(const Surd& x, const Surd& y) {
  const int s = (x - y).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

bool Surd::structural_less(const Surd& x, const Surd& y) {
  const int c = cmp(x.a_, y.a_);
  if (c != 0) return c < 0;
  return cmp(x.b_, y.b_) < 0;
}

std::string Surd::str() const {
  if (sgn(b_) == 0) return a_.get_str();
  std::string out;
  if (sgn(a_) != 0) out = a_.get_str();
  if (sgn(b_) > 0) {
    if (!out.empty()) out += '+';
    out += b_.get_str();
  } else {
    out += '-';
    out += mpq_class(-b_).get_str();
  }
  out += "*s3";
  return out;
}

namespace {

mpq_class parse_rational(std::string_view s) {
  if (s.empty()) throw ParseError("empty rational");
  for (char ch : s)
    if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '/' || ch == '-' || ch == '+'))
      throw ParseError("bad rational: " + std::string(s));
  std::string t(s);
  if (t[0] == '+') t.erase(0, 1);
  mpq_class q;
  if (q.set_str(t, 10) != 0) throw ParseError("bad rational: " + std::string(s));
  if (q.get_den() == 0) throw ParseError("zero denominator: " + std::string(s));
  q.canonicalize();
  return q;
}

}  // namespace

Surd Surd::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw ParseError("empty surd");
  // split into at most two signed terms
  std::size_t split = std::string::npos;
  for (std::size_t i = 1; i < s.size(); ++i)
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != '/') {
      split = i;
      break;
    }
  auto term = [](std::string_view t, mpq_class& ra, mpq_class& rb) {
    const auto pos = t.find("s3");
    if (pos == std::string_view::npos) {
      ra += parse_rational(t);
      return;
    }
    if (pos + 2 != t.size()) throw ParseError("trailing text after s3");
    std::string_view coef = t.substr(0, pos);
    if (!coef.empty() && coef.back() == '*') coef.remove_suffix(1);
    if (coef.empty() || coef == "+") rb += 1;
    else if (coef == "-") rb -= 1;
    else rb += parse_rational(coef);
  };
  mpq_class ra = 0, rb = 0;
  if (split == std::string::npos) {
    term(s, ra, rb);
  } else {
    term(std::string_view(s).substr(0, split), ra, rb);
    term(std::string_view(s).substr(split), ra, rb);
  }
  return Surd(ra, rb);
}

std::size_t Surd::hash() const {
  auto limb = [](const mpz_class& z) {
    return static_cast<std::size_t>(mpz_getlimbn(z.get_mpz_t(), 0)) * 2654435761u ^ static_cast<std::size_t>(mpz_size(z.get_mpz_t())) ^
           static_cast<std::size_t>(sgn(z) + 1);
  };
  std::size_t h = limb(a_.get_num()) * 31 + limb(a_.get_den());
  h ^= limb(b_.get_num()) * 1000003u + limb(b_.get_den()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

int surd_sign(const Surd& x) { return x.sign(); }

Surd surd_arith(const Surd& x, const Surd& y, char op) {
  switch (op) {
    case '+': return x + y;
    case '-': return x - y;
    case '*': return x * y;
    case '/': return x / y;
    default: throw std::invalid_argument(std::string("unknown operator ") + op);
  }
}

mpz_class floor(const Surd& x) {
  if (x.is_rational()) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), x.rat().get_num_mpz_t(), x.rat().get_den_mpz_t());
    return q;
  }
  // estimate, then correct exactly
  mpz_class f(static_cast<long>(std::floor(x.to_double())));
  while (Surd(mpq_class(f)) > x) --f;
  while (Surd(mpq_class(f + 1)) <= x) ++f;
  return f;
}

Surd abs(const Surd& x) { return x.sign() < 0 ? -x : x; }

}  // namespace torreg
