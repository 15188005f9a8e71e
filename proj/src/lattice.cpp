#include "bbs/lattice.hpp"

#include <stdexcept>
#include <utility>

namespace bbs {

namespace {

std::int64_t narrow(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("integer matrix entry overflow");
  return static_cast<std::int64_t>(v);
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Extended gcd: returns g = s*a + t*b with g >= 0.
std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& s, std::int64_t& t) {
  std::int64_t old_r = a, r = b, old_s = 1, cur_s = 0, old_t = 0, cur_t = 1;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(cur_s, old_s - q * cur_s);
    old_t = std::exchange(cur_t, old_t - q * cur_t);
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  s = old_s;
  t = old_t;
  return old_r;
}

}  // namespace

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntVector IntMatrix::operator*(const IntVector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix-vector size mismatch");
  IntVector out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    __int128 acc = 0;
    for (std::size_t j = 0; j < cols_; ++j) acc += static_cast<__int128>((*this)(i, j)) * v[j];
    out[i] = narrow(acc);
  }
  return out;
}

std::int64_t determinant(const IntMatrix& a) {
  const std::size_t n = a.rows();
  if (n != a.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  if (n == 0) return 1;
  std::vector<__int128> m(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i * n + j] = a(i, j);
  auto at = [&](std::size_t i, std::size_t j) -> __int128& { return m[i * n + j]; };

  int sign = 1;
  __int128 prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && at(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(swap, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
      }
    }
    prev = at(k, k);
  }
  return narrow(sign * at(n - 1, n - 1));
}

std::vector<std::int64_t> leading_minors(const IntMatrix& a) {
  std::vector<std::int64_t> minors;
  for (std::size_t k = 1; k <= a.rows(); ++k) {
    IntMatrix sub(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) sub(i, j) = a(i, j);
    minors.push_back(determinant(sub));
  }
  return minors;
}

std::vector<Rational> solve(const IntMatrix& a, const std::vector<Rational>& b) {
  const std::size_t n = a.rows();
  if (n != a.cols() || b.size() != n) throw std::invalid_argument("solve: size mismatch");
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = Rational(a(i, j));
    m[i][n] = b[i];
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m[pivot][k] == Rational(0)) ++pivot;
    if (pivot == n) throw std::domain_error("solve: singular matrix");
    std::swap(m[k], m[pivot]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || m[i][k] == Rational(0)) continue;
      const Rational f = m[i][k] / m[k][k];
      for (std::size_t j = k; j <= n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = m[i][n] / m[i][i];
  return x;
}

std::vector<Rational> solve(const IntMatrix& a, const IntVector& b) {
  std::vector<Rational> rb(b.begin(), b.end());
  return solve(a, rb);
}

IntMatrix hermite_lower(const IntMatrix& a) {
  const std::size_t n = a.rows();
  if (n != a.cols()) throw std::invalid_argument("hermite_lower: matrix must be square");
  IntMatrix h = a;
  auto combine = [&](std::size_t ci, std::size_t cj, std::int64_t s, std::int64_t t, std::int64_t u,
                     std::int64_t v) {
    // (col_i, col_j) <- (s col_i + t col_j, u col_i + v col_j)
    for (std::size_t r = 0; r < n; ++r) {
      const __int128 x = h(r, ci), y = h(r, cj);
      h(r, ci) = narrow(s * x + t * y);
      h(r, cj) = narrow(u * x + v * y);
    }
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (h(i, j) == 0) continue;
      const std::int64_t x = h(i, i), y = h(i, j);
      std::int64_t s = 0, t = 0;
      const std::int64_t g = ext_gcd(x, y, s, t);
      combine(i, j, s, t, -y / g, x / g);
    }
    if (h(i, i) == 0) throw std::domain_error("hermite_lower: singular matrix");
    if (h(i, i) < 0) {
      for (std::size_t r = 0; r < n; ++r) h(r, i) = -h(r, i);
    }
    for (std::size_t j = 0; j < i; ++j) {
      const std::int64_t q = floor_div(h(i, j), h(i, i));
      if (q == 0) continue;
      for (std::size_t r = i; r < n; ++r) h(r, j) = narrow(static_cast<__int128>(h(r, j)) - static_cast<__int128>(q) * h(r, i));
    }
  }
  return h;
}

IntVector reduce_mod_lattice(const IntMatrix& hermite, IntVector v) {
  const std::size_t n = hermite.rows();
  if (v.size() != n) throw std::invalid_argument("reduce_mod_lattice: size mismatch");
  for (std::size_t i = 0; i < n; ++i) {
    const std::int64_t q = floor_div(v[i], hermite(i, i));
    if (q == 0) continue;
    for (std::size_t r = i; r < n; ++r) v[r] = narrow(static_cast<__int128>(v[r]) - static_cast<__int128>(q) * hermite(r, i));
  }
  return v;
}

std::vector<IntVector> coset_representatives(const IntMatrix& hermite) {
  const std::size_t n = hermite.rows();
  std::vector<IntVector> out;
  IntVector w(n, 0);
  if (n == 0) {
    out.push_back(w);
    return out;
  }
  while (true) {
    out.push_back(w);
    std::size_t pos = n;
    while (pos > 0) {
      --pos;
      if (++w[pos] < hermite(pos, pos)) break;
      w[pos] = 0;
      if (pos == 0) return out;
    }
  }
}

}  // namespace bbs
