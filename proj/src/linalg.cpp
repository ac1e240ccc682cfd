#include "bmparity/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace bmparity::linalg {
namespace {

void axpy_row(IntVector& target, const Integer& q, const IntVector& source) {
  // target -= q * source
  for (std::size_t k = 0; k < target.size(); ++k) {
    if (source[k] != 0) target[k] -= q * source[k];
  }
}

Integer trunc_div(const Integer& n, const Integer& d) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return q;
}

}  // namespace

std::size_t echelonize(IntMatrix& rows, std::size_t pivot_columns) {
  std::size_t r = 0;
  for (std::size_t col = 0; col < pivot_columns && r < rows.size(); ++col) {
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        if (best == rows.size() || abs(rows[i][col]) < abs(rows[best][col])) best = i;
      }
      if (best == rows.size()) break;
      std::swap(rows[r], rows[best]);
      bool clean = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        axpy_row(rows[i], trunc_div(rows[i][col], rows[r][col]), rows[r]);
        if (rows[i][col] != 0) clean = false;
      }
      if (clean) break;
    }
    if (rows[r][col] != 0) ++r;
  }
  return r;
}

IntMatrix hermite_normal_form(IntMatrix rows, std::size_t width) {
  for (const auto& row : rows) {
    if (row.size() != width) throw std::invalid_argument("hermite_normal_form: ragged rows");
  }
  const std::size_t rank = echelonize(rows, width);
  rows.resize(rank);
  std::size_t col = 0;
  for (std::size_t r = 0; r < rank; ++r) {
    while (rows[r][col] == 0) ++col;
    if (rows[r][col] < 0) {
      for (auto& x : rows[r]) x = -x;
    }
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i][col] == 0) continue;
      axpy_row(rows[i], floor_div(rows[i][col], rows[r][col]), rows[r]);
    }
  }
  return rows;
}

bool reduce_by_hnf(const IntMatrix& hnf, IntVector& v) {
  std::size_t col = 0;
  for (const auto& row : hnf) {
    while (row[col] == 0) ++col;
    if (v[col] != 0) {
      Integer q = floor_div(v[col], row[col]);
      axpy_row(v, q, row);
      if (v[col] != 0) return false;
    }
  }
  return is_zero(v);
}

IntMatrix integer_left_kernel(const IntMatrix& a, std::size_t width) {
  const std::size_t m = a.size();
  IntMatrix aug(m, IntVector(width + m, Integer(0)));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < width; ++j) aug[i][j] = a[i][j];
    aug[i][width + i] = 1;
  }
  const std::size_t rank = echelonize(aug, width);
  IntMatrix kernel;
  for (std::size_t i = rank; i < m; ++i) {
    kernel.emplace_back(aug[i].begin() + static_cast<std::ptrdiff_t>(width), aug[i].end());
  }
  return hermite_normal_form(std::move(kernel), m);
}

SmithForm smith_normal_form(const IntMatrix& input, std::size_t width) {
  IntMatrix a = input;
  const std::size_t m = a.size();
  IntMatrix q(width, IntVector(width, Integer(0)));
  IntMatrix qinv = q;
  for (std::size_t i = 0; i < width; ++i) q[i][i] = qinv[i][i] = 1;

  auto swap_cols = [&](std::size_t c1, std::size_t c2) {
    if (c1 == c2) return;
    for (auto& row : a) std::swap(row[c1], row[c2]);
    for (auto& row : q) std::swap(row[c1], row[c2]);
    std::swap(qinv[c1], qinv[c2]);
  };
  // col_j -= f * col_t
  auto sub_col = [&](std::size_t j, std::size_t t, const Integer& f) {
    for (auto& row : a) row[j] -= f * row[t];
    for (auto& row : q) row[j] -= f * row[t];
    for (std::size_t k = 0; k < width; ++k) qinv[t][k] += f * qinv[j][k];
  };
  auto move_min_to = [&](std::size_t t, bool whole_block) -> bool {
    std::size_t bi = m, bj = width;
    for (std::size_t i = t; i < m; ++i) {
      for (std::size_t j = t; j < width; ++j) {
        if (!whole_block && i != t && j != t) continue;
        if (a[i][j] == 0) continue;
        if (bi == m || abs(a[i][j]) < abs(a[bi][bj])) {
          bi = i;
          bj = j;
        }
      }
    }
    if (bi == m) return false;
    std::swap(a[t], a[bi]);
    swap_cols(t, bj);
    return true;
  };

  SmithForm out;
  for (std::size_t t = 0; t < m && t < width; ++t) {
    if (!move_min_to(t, true)) break;
    while (true) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a[i][t] == 0) continue;
        axpy_row(a[i], trunc_div(a[i][t], a[t][t]), a[t]);
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < width; ++j) {
        if (a[t][j] == 0) continue;
        sub_col(j, t, trunc_div(a[t][j], a[t][t]));
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) {
        move_min_to(t, false);
        continue;
      }
      // Pivot must divide the remaining block.
      std::size_t bad_row = m;
      for (std::size_t i = t + 1; i < m && bad_row == m; ++i) {
        for (std::size_t j = t + 1; j < width; ++j) {
          if (a[i][j] % a[t][t] != 0) {
            bad_row = i;
            break;
          }
        }
      }
      if (bad_row == m) break;
      for (std::size_t k = 0; k < width; ++k) a[t][k] += a[bad_row][k];
    }
    if (a[t][t] < 0) {
      for (auto& x : a[t]) x = -x;
    }
    out.diagonal.push_back(a[t][t]);
  }
  out.column_transform = std::move(q);
  out.column_transform_inverse = std::move(qinv);
  return out;
}

IntVector multiply_row(const IntVector& v, const IntMatrix& mat, std::size_t width) {
  IntVector out(width, Integer(0));
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < width; ++j) out[j] += v[i] * mat[i][j];
  }
  return out;
}

BitVector to_bits(const IntVector& v) {
  BitVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = mod_floor(v[i], 2) == 1 ? 1 : 0;
  return out;
}

IntVector from_bits(const BitVector& v) {
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i];
  return out;
}

EchelonGf2 rref_gf2(BitMatrix rows, std::size_t width) {
  EchelonGf2 out;
  std::size_t r = 0;
  for (std::size_t col = 0; col < width && r < rows.size(); ++col) {
    std::size_t i = r;
    while (i < rows.size() && !rows[i][col]) ++i;
    if (i == rows.size()) continue;
    std::swap(rows[r], rows[i]);
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (k == r || !rows[k][col]) continue;
      for (std::size_t j = 0; j < width; ++j) rows[k][j] ^= rows[r][j];
    }
    out.pivots.push_back(col);
    ++r;
  }
  rows.resize(r);
  out.rows = std::move(rows);
  return out;
}

bool reduce_gf2(const EchelonGf2& basis, BitVector& v) {
  for (std::size_t i = 0; i < basis.rows.size(); ++i) {
    if (!v[basis.pivots[i]]) continue;
    for (std::size_t j = 0; j < v.size(); ++j) v[j] ^= basis.rows[i][j];
  }
  for (auto bit : v) {
    if (bit) return false;
  }
  return true;
}

EchelonGf2 left_kernel_gf2(const BitMatrix& a, std::size_t width) {
  // Kernel of the transpose: x * a = 0  <=>  a^T x = 0.
  const std::size_t m = a.size();
  BitMatrix t(width, BitVector(m, 0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < width; ++j) t[j][i] = a[i][j] & 1;
  }
  EchelonGf2 e = rref_gf2(std::move(t), m);
  std::vector<char> is_pivot(m, 0);
  for (auto p : e.pivots) is_pivot[p] = 1;
  BitMatrix kernel;
  for (std::size_t free = 0; free < m; ++free) {
    if (is_pivot[free]) continue;
    BitVector x(m, 0);
    x[free] = 1;
    for (std::size_t i = 0; i < e.rows.size(); ++i) {
      if (e.rows[i][free]) x[e.pivots[i]] = 1;
    }
    kernel.push_back(std::move(x));
  }
  return rref_gf2(std::move(kernel), m);
}

}  // namespace bmparity::linalg
