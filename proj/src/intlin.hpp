#pragma once

#include <gmpxx.h>

#include <vector>

namespace torreg::detail {

using IntRow = std::vector<mpz_class>;

// Unimodular row reduction of the first `ncols` columns to Hermite normal form.
// Operations are applied to whole rows. Returns the number of pivot rows; zero rows end up last.
inline int hnf_rows(std::vector<IntRow>& rows, std::size_t ncols) {
  std::size_t r = 0;
  for (std::size_t col = 0; col < ncols && r < rows.size(); ++col) {
    // Euclid on column `col` among rows r..end
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i) {
        if (sgn(rows[i][col]) == 0) continue;
        if (best == rows.size() || abs(rows[i][col]) < abs(rows[best][col])) best = i;
      }
      if (best == rows.size()) break;
      std::swap(rows[r], rows[best]);
      bool done = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (sgn(rows[i][col]) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), rows[i][col].get_mpz_t(), rows[r][col].get_mpz_t());
        for (std::size_t j = 0; j < rows[i].size(); ++j) rows[i][j] -= q * rows[r][j];
        if (sgn(rows[i][col]) != 0) done = false;
      }
      if (done) break;
    }
    if (sgn(rows[r][col]) == 0) continue;
    if (sgn(rows[r][col]) < 0)
      for (auto& x : rows[r]) x = -x;
    for (std::size_t i = 0; i < r; ++i) {
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), rows[i][col].get_mpz_t(), rows[r][col].get_mpz_t());
      if (sgn(q) == 0) continue;
      for (std::size_t j = 0; j < rows[i].size(); ++j) rows[i][j] -= q * rows[r][j];
    }
    ++r;
  }
  return static_cast<int>(r);
}

inline mpz_class lcm_den(const std::vector<mpq_class>& xs) {
  mpz_class l = 1;
  for (const auto& x : xs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
  return l;
}

// Coefficients c with sum c_i k_i = gcd(k).
inline std::vector<mpz_class> bezout(const std::vector<mpz_class>& k) {
  std::vector<IntRow> rows;
  for (std::size_t i = 0; i < k.size(); ++i) {
    IntRow row(k.size() + 1, 0);
    row[0] = k[i];
    row[i + 1] = 1;
    rows.push_back(row);
  }
  hnf_rows(rows, 1);
  return IntRow(rows[0].begin() + 1, rows[0].end());
}

}  // namespace torreg::detail
