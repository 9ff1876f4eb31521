#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "numeric.hpp"

namespace coxtoric {

// Dense row-major matrix over arbitrary-precision integers.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntegerMatrix identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  // Builds from row vectors; cols must be given so a 0-row matrix keeps its width.
  static IntegerMatrix from_rows(const std::vector<IVec>& rows, std::size_t cols) {
    IntegerMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols)
        throw std::invalid_argument("from_rows: row length mismatch");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static IntegerMatrix from_rows(const std::vector<IVec>& rows) {
    if (rows.empty())
      throw std::invalid_argument("from_rows: need explicit width for empty input");
    return from_rows(rows, rows.front().size());
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  IVec row(std::size_t i) const {
    IVec r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
    return r;
  }

  IVec col(std::size_t j) const {
    IVec c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  std::vector<IVec> row_list() const {
    std::vector<IVec> r;
    r.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) r.push_back(row(i));
    return r;
  }

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
  }

  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(i, c) = -(*this)(i, c);
  }

  // row_dst += q * row_src
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& q) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += q * (*this)(src, c);
  }

  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
  }

  void negate_col(std::size_t j) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, j) = -(*this)(r, j);
  }

  // col_dst += q * col_src
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& q) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += q * (*this)(r, src);
  }

  bool operator==(const IntegerMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

inline IntegerMatrix transpose(const IntegerMatrix& m) {
  IntegerMatrix t(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
  return t;
}

inline IntegerMatrix matmul(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matmul: shape mismatch");
  IntegerMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

// v * m, treating v as a row vector.
inline IVec row_times_matrix(const IVec& v, const IntegerMatrix& m) {
  if (v.size() != m.rows()) throw std::invalid_argument("row_times_matrix: shape mismatch");
  IVec r(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) r[j] += v[i] * m(i, j);
  }
  return r;
}

// m * x, treating x as a column vector.
inline IVec matrix_times_col(const IntegerMatrix& m, const IVec& x) {
  if (x.size() != m.cols()) throw std::invalid_argument("matrix_times_col: shape mismatch");
  IVec r(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer s = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) s += m(i, j) * x[j];
    r[i] = s;
  }
  return r;
}

inline bool is_zero_matrix(const IntegerMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) return false;
  return true;
}

struct HermiteForm {
  IntegerMatrix h;  // row-style Hermite normal form of the input
  IntegerMatrix u;  // unimodular transform with u * input = h
  std::size_t rank = 0;
};

// Row-style HNF: pivots positive and strictly right-moving, entries above each
// pivot reduced into [0, pivot), zero rows at the bottom.
inline HermiteForm hermite_normal_form(const IntegerMatrix& m) {
  const std::size_t nr = m.rows();
  const std::size_t nc = m.cols();
  HermiteForm out{m, IntegerMatrix::identity(nr), 0};
  IntegerMatrix& h = out.h;
  IntegerMatrix& u = out.u;

  std::size_t r = 0;
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    // Euclidean elimination below row r in column c.
    while (true) {
      std::size_t piv = nr;
      for (std::size_t i = r; i < nr; ++i) {
        if (h(i, c) == 0) continue;
        if (piv == nr ||
            boost::multiprecision::abs(h(i, c)) < boost::multiprecision::abs(h(piv, c)))
          piv = i;
      }
      if (piv == nr) break;
      h.swap_rows(r, piv);
      u.swap_rows(r, piv);
      bool clean = true;
      for (std::size_t i = r + 1; i < nr; ++i) {
        if (h(i, c) == 0) continue;
        Integer q = h(i, c) / h(r, c);
        if (q != 0) {
          h.add_row_multiple(i, r, -q);
          u.add_row_multiple(i, r, -q);
        }
        if (h(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) {
      h.negate_row(r);
      u.negate_row(r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer q = floor_div(h(i, c), h(r, c));
      if (q != 0) {
        h.add_row_multiple(i, r, -q);
        u.add_row_multiple(i, r, -q);
      }
    }
    ++r;
  }
  out.rank = r;
  return out;
}

inline std::vector<std::size_t> pivot_columns(const IntegerMatrix& h, std::size_t rank) {
  std::vector<std::size_t> p;
  p.reserve(rank);
  for (std::size_t i = 0; i < rank; ++i) {
    std::size_t j = 0;
    while (j < h.cols() && h(i, j) == 0) ++j;
    p.push_back(j);
  }
  return p;
}

struct SmithDecomposition {
  std::vector<Integer> invariants;  // length min(rows, cols), d1 | d2 | ...
  IntegerMatrix u;                  // unimodular, rows x rows
  IntegerMatrix v;                  // unimodular, cols x cols; u * m * v is diagonal
};

inline SmithDecomposition smith_normal_form(const IntegerMatrix& m) {
  const std::size_t nr = m.rows();
  const std::size_t nc = m.cols();
  IntegerMatrix s = m;
  SmithDecomposition out;
  out.u = IntegerMatrix::identity(nr);
  out.v = IntegerMatrix::identity(nc);

  const std::size_t k = std::min(nr, nc);
  for (std::size_t t = 0; t < k; ++t) {
    while (true) {
      std::size_t bi = nr, bj = nc;
      for (std::size_t i = t; i < nr; ++i)
        for (std::size_t j = t; j < nc; ++j) {
          if (s(i, j) == 0) continue;
          if (bi == nr || boost::multiprecision::abs(s(i, j)) <
                              boost::multiprecision::abs(s(bi, bj))) {
            bi = i;
            bj = j;
          }
        }
      if (bi == nr) break;  // block is zero
      s.swap_rows(t, bi);
      out.u.swap_rows(t, bi);
      s.swap_cols(t, bj);
      out.v.swap_cols(t, bj);

      bool dirty = false;
      for (std::size_t i = t + 1; i < nr; ++i) {
        if (s(i, t) == 0) continue;
        Integer q = s(i, t) / s(t, t);
        if (q != 0) {
          s.add_row_multiple(i, t, -q);
          out.u.add_row_multiple(i, t, -q);
        }
        if (s(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < nc; ++j) {
        if (s(t, j) == 0) continue;
        Integer q = s(t, j) / s(t, t);
        if (q != 0) {
          s.add_col_multiple(j, t, -q);
          out.v.add_col_multiple(j, t, -q);
        }
        if (s(t, j) != 0) dirty = true;
      }
      if (dirty) continue;

      // Pivot must divide every remaining entry; fold a violating row in.
      bool divides = true;
      for (std::size_t i = t + 1; i < nr && divides; ++i)
        for (std::size_t j = t + 1; j < nc && divides; ++j)
          if (s(i, j) % s(t, t) != 0) {
            s.add_row_multiple(t, i, 1);
            out.u.add_row_multiple(t, i, 1);
            divides = false;
          }
      if (divides) break;
    }
    if (s(t, t) < 0) {
      s.negate_row(t);
      out.u.negate_row(t);
    }
  }

  out.invariants.resize(k);
  for (std::size_t t = 0; t < k; ++t) out.invariants[t] = s(t, t);
  return out;
}

// Basis of the saturated left kernel {v : v * m = 0}, as HNF rows.
inline IntegerMatrix integer_kernel(const IntegerMatrix& m) {
  HermiteForm hf = hermite_normal_form(m);
  std::vector<IVec> bottom;
  for (std::size_t i = hf.rank; i < m.rows(); ++i) bottom.push_back(hf.u.row(i));
  IntegerMatrix k = IntegerMatrix::from_rows(bottom, m.rows());
  return hermite_normal_form(k).h;
}

// Fraction-free Gaussian elimination (Bareiss); exact integer divisions only.
inline std::size_t rational_rank(IntegerMatrix a) {
  const std::size_t nr = a.rows();
  const std::size_t nc = a.cols();
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    std::size_t piv = nr;
    for (std::size_t i = r; i < nr; ++i)
      if (a(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv == nr) continue;
    a.swap_rows(r, piv);
    for (std::size_t i = r + 1; i < nr; ++i) {
      for (std::size_t j = c + 1; j < nc; ++j)
        a(i, j) = (a(r, c) * a(i, j) - a(i, c) * a(r, j)) / prev;
      a(i, c) = 0;
    }
    prev = a(r, c);
    ++r;
  }
  return r;
}

inline Integer determinant(IntegerMatrix a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant: matrix not square");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = n;
    for (std::size_t i = c; i < n; ++i)
      if (a(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv == n) return 0;
    if (piv != c) {
      a.swap_rows(c, piv);
      sign = -sign;
    }
    for (std::size_t i = c + 1; i < n; ++i) {
      for (std::size_t j = c + 1; j < n; ++j)
        a(i, j) = (a(c, c) * a(i, j) - a(i, c) * a(c, j)) / prev;
      a(i, c) = 0;
    }
    prev = a(c, c);
  }
  return sign > 0 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
}

// Exact solution of a * x = b over the rationals; nullopt when a is singular.
inline std::optional<QVec> solve_square(const IntegerMatrix& a, const IVec& b) {
  if (a.rows() != a.cols()) throw std::invalid_argument("solve_square: matrix not square");
  const std::size_t n = a.rows();
  if (b.size() != n) throw std::invalid_argument("solve_square: rhs length mismatch");
  std::vector<QVec> g(n, QVec(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) g[i][j] = Rational(a(i, j));
    g[i][n] = Rational(b[i]);
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = n;
    for (std::size_t i = c; i < n; ++i)
      if (g[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv == n) return std::nullopt;
    std::swap(g[c], g[piv]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || g[i][c] == 0) continue;
      Rational f = g[i][c] / g[c][c];
      for (std::size_t j = c; j <= n; ++j) g[i][j] -= f * g[c][j];
    }
  }
  QVec x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = g[i][n] / g[i][i];
  return x;
}

// Integer x with x * b = y, if y lies in the row lattice of b.
inline std::optional<IVec> solve_in_row_lattice(const IntegerMatrix& b, const IVec& y) {
  if (y.size() != b.cols())
    throw std::invalid_argument("solve_in_row_lattice: length mismatch");
  HermiteForm hf = hermite_normal_form(b);
  std::vector<std::size_t> piv = pivot_columns(hf.h, hf.rank);
  IVec coef(b.rows());
  IVec rem = y;
  for (std::size_t i = 0; i < hf.rank; ++i) {
    const std::size_t p = piv[i];
    if (rem[p] % hf.h(i, p) != 0) return std::nullopt;
    Integer q = rem[p] / hf.h(i, p);
    coef[i] = q;
    if (q != 0)
      for (std::size_t j = 0; j < rem.size(); ++j) rem[j] -= q * hf.h(i, j);
  }
  if (!is_zero_vec(rem)) return std::nullopt;
  return row_times_matrix(coef, hf.u);
}

inline bool row_lattice_contains(const IntegerMatrix& b, const IVec& y) {
  return solve_in_row_lattice(b, y).has_value();
}

}  // namespace coxtoric
