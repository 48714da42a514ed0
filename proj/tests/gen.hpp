#pragma once

#include <random>
#include <vector>

#include "torreg/classify.hpp"

namespace gen {

using torreg::Mat;
using torreg::Surd;
using torreg::Vec;

inline std::mt19937_64& rng() {
  static std::mt19937_64 r(20240611);
  return r;
}

inline long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline mpq_class rational(long maxnum = 9, long maxden = 6) {
  return mpq_class(integer(-maxnum, maxnum), integer(1, maxden));
}

inline mpq_class positive_rational(long maxnum = 9, long maxden = 6) {
  return mpq_class(integer(1, maxnum), integer(1, maxden));
}

inline Surd surd(long maxnum = 9, long maxden = 6) {
  mpq_class a = rational(maxnum, maxden), b = rational(maxnum, maxden);
  a.canonicalize();
  b.canonicalize();
  return Surd(a, b);
}

inline Vec vec(int d) {
  Vec v(d);
  for (int i = 0; i < d; ++i) v[i] = surd();
  return v;
}

// Unimodular integer matrix as a product of random elementary operations.
inline Mat unimodular(int d, int steps = 6) {
  Mat m = Mat::identity(d);
  for (int k = 0; k < steps; ++k) {
    const int i = static_cast<int>(integer(0, d - 1));
    int j = static_cast<int>(integer(0, d - 2));
    if (j >= i) ++j;
    const long c = integer(-2, 2);
    for (int col = 0; col < d; ++col) m(i, col) += Surd(c) * m(j, col);
    if (integer(0, 1)) {
      for (int col = 0; col < d; ++col) m(i, col) = -m(i, col);
    }
  }
  return m;
}

inline torreg::Lattice shuffle(const torreg::Lattice& l) {
  const Mat u = unimodular(l.rank());
  std::vector<Vec> b;
  for (int i = 0; i < l.rank(); ++i) {
    Vec v(l.ambient());
    for (int j = 0; j < l.rank(); ++j) v += u(i, j) * l.basis()[static_cast<std::size_t>(j)];
    b.push_back(v);
  }
  return torreg::Lattice(b);
}

}  // namespace gen
