#include "mckay/linalg.hpp"

#include <utility>  // for swap

#include "mckay/error.hpp"

namespace mckay {

  QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      m(i, i) = 1;
    }
    return m;
  }

  QMatrix QMatrix::from_ints(std::vector<std::vector<std::int64_t>> const& v) {
    std::size_t cols = v.empty() ? 0 : v[0].size();
    QMatrix     m(v.size(), cols);
    for (std::size_t r = 0; r < v.size(); ++r) {
      if (v[r].size() != cols) {
        throw PreconditionError("QMatrix::from_ints: ragged rows");
      }
      for (std::size_t c = 0; c < cols; ++c) {
        m(r, c) = v[r][c];
      }
    }
    return m;
  }

  QMatrix QMatrix::transpose() const {
    QMatrix t(_cols, _rows);
    for (std::size_t r = 0; r < _rows; ++r) {
      for (std::size_t c = 0; c < _cols; ++c) {
        t(c, r) = (*this)(r, c);
      }
    }
    return t;
  }

  QMatrix QMatrix::block(std::size_t r0,
                         std::size_t c0,
                         std::size_t nrows,
                         std::size_t ncols) const {
    if (r0 + nrows > _rows || c0 + ncols > _cols) {
      throw PreconditionError("QMatrix::block: out of range");
    }
    QMatrix b(nrows, ncols);
    for (std::size_t r = 0; r < nrows; ++r) {
      for (std::size_t c = 0; c < ncols; ++c) {
        b(r, c) = (*this)(r0 + r, c0 + c);
      }
    }
    return b;
  }

  void QMatrix::set_block(std::size_t r0, std::size_t c0, QMatrix const& b) {
    if (r0 + b.rows() > _rows || c0 + b.cols() > _cols) {
      throw PreconditionError("QMatrix::set_block: out of range");
    }
    for (std::size_t r = 0; r < b.rows(); ++r) {
      for (std::size_t c = 0; c < b.cols(); ++c) {
        (*this)(r0 + r, c0 + c) = b(r, c);
      }
    }
  }

  bool QMatrix::is_zero() const {
    for (auto const& x : _data) {
      if (!x.is_zero()) {
        return false;
      }
    }
    return true;
  }

  QMatrix operator*(QMatrix const& a, QMatrix const& b) {
    if (a._cols != b._rows) {
      throw PreconditionError("QMatrix: shape mismatch in product");
    }
    QMatrix p(a._rows, b._cols);
    for (std::size_t i = 0; i < a._rows; ++i) {
      for (std::size_t k = 0; k < a._cols; ++k) {
        Rational const& x = a(i, k);
        if (x.is_zero()) {
          continue;
        }
        for (std::size_t j = 0; j < b._cols; ++j) {
          if (!b(k, j).is_zero()) {
            p(i, j) += x * b(k, j);
          }
        }
      }
    }
    return p;
  }

  QMatrix operator+(QMatrix const& a, QMatrix const& b) {
    if (a._rows != b._rows || a._cols != b._cols) {
      throw PreconditionError("QMatrix: shape mismatch in sum");
    }
    QMatrix s = a;
    for (std::size_t i = 0; i < s._data.size(); ++i) {
      s._data[i] += b._data[i];
    }
    return s;
  }

  QMatrix operator-(QMatrix const& a, QMatrix const& b) {
    if (a._rows != b._rows || a._cols != b._cols) {
      throw PreconditionError("QMatrix: shape mismatch in difference");
    }
    QMatrix s = a;
    for (std::size_t i = 0; i < s._data.size(); ++i) {
      s._data[i] -= b._data[i];
    }
    return s;
  }

  RowEchelon rref(QMatrix m) {
    RowEchelon  out;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
      std::size_t piv = row;
      while (piv < m.rows() && m(piv, col).is_zero()) {
        ++piv;
      }
      if (piv == m.rows()) {
        continue;
      }
      if (piv != row) {
        for (std::size_t c = col; c < m.cols(); ++c) {
          std::swap(m(piv, c), m(row, c));
        }
      }
      Rational inv = m(row, col).inverse();
      for (std::size_t c = col; c < m.cols(); ++c) {
        m(row, c) *= inv;
      }
      for (std::size_t r = 0; r < m.rows(); ++r) {
        if (r == row || m(r, col).is_zero()) {
          continue;
        }
        Rational f = m(r, col);
        for (std::size_t c = col; c < m.cols(); ++c) {
          if (!m(row, c).is_zero()) {
            m(r, c) -= f * m(row, c);
          }
        }
      }
      out.pivots.push_back(col);
      ++row;
    }
    out.reduced = std::move(m);
    return out;
  }

  std::size_t rank(QMatrix const& m) {
    return rref(m).pivots.size();
  }

  QMatrix nullspace(QMatrix const& m) {
    auto              e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) {
      is_pivot[p] = true;
    }
    std::vector<std::size_t> free;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!is_pivot[c]) {
        free.push_back(c);
      }
    }
    QMatrix basis(m.cols(), free.size());
    for (std::size_t k = 0; k < free.size(); ++k) {
      basis(free[k], k) = 1;
      for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        basis(e.pivots[r], k) = -e.reduced(r, free[k]);
      }
    }
    return basis;
  }

  QMatrix left_nullspace(QMatrix const& m) {
    return nullspace(m.transpose()).transpose();
  }

  std::optional<QMatrix> solve(QMatrix const& a, QMatrix const& b) {
    if (a.rows() != b.rows()) {
      throw PreconditionError("solve: shape mismatch");
    }
    QMatrix aug(a.rows(), a.cols() + b.cols());
    aug.set_block(0, 0, a);
    aug.set_block(0, a.cols(), b);
    auto    e = rref(std::move(aug));
    QMatrix x(a.cols(), b.cols());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      if (e.pivots[r] >= a.cols()) {
        return std::nullopt;  // inconsistent
      }
      for (std::size_t c = 0; c < b.cols(); ++c) {
        x(e.pivots[r], c) = e.reduced(r, a.cols() + c);
      }
    }
    return x;
  }

  Rational determinant(QMatrix m) {
    if (m.rows() != m.cols()) {
      throw PreconditionError("determinant: matrix not square");
    }
    Rational    det = 1;
    std::size_t n   = m.rows();
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t piv = col;
      while (piv < n && m(piv, col).is_zero()) {
        ++piv;
      }
      if (piv == n) {
        return 0;
      }
      if (piv != col) {
        for (std::size_t c = 0; c < n; ++c) {
          std::swap(m(piv, c), m(col, c));
        }
        det = -det;
      }
      det *= m(col, col);
      Rational inv = m(col, col).inverse();
      for (std::size_t r = col + 1; r < n; ++r) {
        if (m(r, col).is_zero()) {
          continue;
        }
        Rational f = m(r, col) * inv;
        for (std::size_t c = col; c < n; ++c) {
          m(r, c) -= f * m(col, c);
        }
      }
    }
    return det;
  }

  std::optional<QMatrix> inverse(QMatrix const& m) {
    if (m.rows() != m.cols()) {
      throw PreconditionError("inverse: matrix not square");
    }
    if (rank(m) != m.rows()) {
      return std::nullopt;
    }
    return solve(m, QMatrix::identity(m.rows()));
  }

  QMatrix row_space_basis(QMatrix const& m) {
    auto e = rref(m);
    return e.reduced.block(0, 0, e.pivots.size(), m.cols());
  }

  bool same_row_space(QMatrix const& a, QMatrix const& b) {
    if (a.cols() != b.cols()) {
      return false;
    }
    return row_space_basis(a) == row_space_basis(b);
  }

}  // namespace mckay
