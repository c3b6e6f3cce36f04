#include "orbitforge/linalg.hpp"

#include <stdexcept>

namespace orbitforge {

SolveResult solve_linear(const RatMatrix& a, const RatVector& b) {
  const std::size_t rows = a.size();
  if (b.size() != rows) throw std::invalid_argument("right-hand side has wrong length");
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  for (const auto& r : a) {
    if (r.size() != cols) throw std::invalid_argument("ragged matrix");
  }

  // integer augmented matrix, each row scaled by its denominator lcm
  std::vector<std::vector<BigInt>> m(rows, std::vector<BigInt>(cols + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    BigInt l = b[i].get_den();
    for (const auto& v : a[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    for (std::size_t j = 0; j <= cols; ++j) {
      const Rat& v = j < cols ? a[i][j] : b[i];
      m[i][j] = v.get_num() * (l / v.get_den());
    }
  }

  std::vector<std::size_t> pivot_cols;
  BigInt prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j <= cols; ++j) {
        BigInt t = m[r][c] * m[i][j] - m[i][c] * m[r][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    pivot_cols.push_back(c);
    ++r;
  }

  SolveResult out;
  out.rank = r;
  for (std::size_t i = r; i < rows; ++i) {
    if (m[i][cols] != 0) {
      out.status = SolveStatus::inconsistent;
      return out;
    }
  }
  if (r < cols) {
    out.status = SolveStatus::underdetermined;
    return out;
  }
  out.x.assign(cols, Rat(0));
  for (std::size_t k = r; k-- > 0;) {
    std::size_t c = pivot_cols[k];
    Rat acc(m[k][cols]);
    for (std::size_t j = c + 1; j < cols; ++j) {
      if (m[k][j] != 0) acc -= Rat(m[k][j]) * out.x[j];
    }
    out.x[c] = acc / Rat(m[k][c]);
  }
  return out;
}

RatMatrix identity_matrix(std::size_t n) {
  RatMatrix m(n, RatVector(n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b) {
  const std::size_t n = a.size();
  const std::size_t k = b.size();
  const std::size_t p = k == 0 ? 0 : b[0].size();
  RatMatrix c(n, RatVector(p, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != k) throw std::invalid_argument("matrix shapes do not match");
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < p; ++j) c[i][j] += a[i][l] * b[l][j];
    }
  }
  return c;
}

RatVector mat_vec(const RatMatrix& a, const RatVector& x) {
  RatVector y(a.size(), Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != x.size()) throw std::invalid_argument("matrix shapes do not match");
    for (std::size_t j = 0; j < x.size(); ++j) y[i] += a[i][j] * x[j];
  }
  return y;
}

RatMatrix mat_inverse(const RatMatrix& a) {
  const std::size_t n = a.size();
  RatMatrix m = a;
  RatMatrix inv = identity_matrix(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) throw std::domain_error("singular matrix");
    std::swap(m[p], m[c]);
    std::swap(inv[p], inv[c]);
    Rat s = 1 / m[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      m[c][j] *= s;
      inv[c][j] *= s;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (std::size_t j = 0; j < n; ++j) {
        m[i][j] -= f * m[c][j];
        inv[i][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

Rat mat_det(const RatMatrix& a) {
  const std::size_t n = a.size();
  RatMatrix m = a;
  Rat det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return Rat(0);
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c] == 0) continue;
      Rat f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return det;
}

MPoly det4(const PolyMatrix4& m) {
  auto det3 = [&](std::size_t skip) {
    std::array<std::size_t, 3> c{};
    std::size_t k = 0;
    for (std::size_t j = 0; j < 4; ++j) {
      if (j != skip) c[k++] = j;
    }
    const auto& r1 = m[1];
    const auto& r2 = m[2];
    const auto& r3 = m[3];
    return r1[c[0]] * (r2[c[1]] * r3[c[2]] - r2[c[2]] * r3[c[1]]) -
           r1[c[1]] * (r2[c[0]] * r3[c[2]] - r2[c[2]] * r3[c[0]]) +
           r1[c[2]] * (r2[c[0]] * r3[c[1]] - r2[c[1]] * r3[c[0]]);
  };
  MPoly d(m[0][0].ring());
  for (std::size_t j = 0; j < 4; ++j) {
    if (m[0][j].is_zero()) continue;
    MPoly t = m[0][j] * det3(j);
    if (j % 2 == 0) {
      d += t;
    } else {
      d -= t;
    }
  }
  return d;
}

}  // namespace orbitforge
