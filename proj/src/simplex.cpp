#include "gprc/simplex.hpp"

namespace gprc {

LpResult maximize(const std::vector<std::vector<mpq_class>>& A, const std::vector<mpq_class>& b,
                  const std::vector<mpq_class>& c) {
  const std::size_t m = A.size(), n = c.size(), cols = n + m;
  std::vector<std::vector<mpq_class>> t(m + 1, std::vector<mpq_class>(cols + 1));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[i][j] = A[i][j];
    t[i][n + i] = 1;
    t[i][cols] = b[i];
    basis[i] = n + i;
  }
  for (std::size_t j = 0; j < n; ++j) t[m][j] = -c[j];

  LpResult res;
  while (true) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j)
      if (sgn(t[m][j]) < 0) {
        enter = j;
        break;
      }
    if (enter == cols) break;

    std::size_t leave = m;
    mpq_class best;
    for (std::size_t i = 0; i < m; ++i) {
      if (sgn(t[i][enter]) <= 0) continue;
      mpq_class ratio = t[i][cols] / t[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) {
      res.bounded = false;
      return res;
    }

    mpq_class piv = t[leave][enter];
    for (auto& v : t[leave]) v /= piv;
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == leave || sgn(t[i][enter]) == 0) continue;
      mpq_class f = t[i][enter];
      for (std::size_t j = 0; j <= cols; ++j)
        if (sgn(t[leave][j]) != 0) t[i][j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }

  res.value = t[m][cols];
  res.x.assign(n, 0);
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) res.x[basis[i]] = t[i][cols];
  return res;
}

}  // namespace gprc
