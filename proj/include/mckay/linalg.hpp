#ifndef MCKAY_LINALG_HPP_
#define MCKAY_LINALG_HPP_

#include <cstddef>   // for size_t
#include <cstdint>   // for int64_t
#include <optional>  // for optional
#include <vector>    // for vector

#include "mckay/rational.hpp"  // for Rational

namespace mckay {

  // Dense row-major matrix over the rationals.
  class QMatrix {
   public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols)
        : _rows(rows), _cols(cols), _data(rows * cols) {}

    static QMatrix identity(std::size_t n);
    static QMatrix from_ints(std::vector<std::vector<std::int64_t>> const& v);

    std::size_t rows() const noexcept {
      return _rows;
    }
    std::size_t cols() const noexcept {
      return _cols;
    }

    Rational& operator()(std::size_t r, std::size_t c) {
      return _data[r * _cols + c];
    }
    Rational const& operator()(std::size_t r, std::size_t c) const {
      return _data[r * _cols + c];
    }

    QMatrix transpose() const;
    QMatrix block(std::size_t r0,
                  std::size_t c0,
                  std::size_t nrows,
                  std::size_t ncols) const;
    void    set_block(std::size_t r0, std::size_t c0, QMatrix const& b);
    bool    is_zero() const;

    friend QMatrix operator*(QMatrix const& a, QMatrix const& b);
    friend QMatrix operator+(QMatrix const& a, QMatrix const& b);
    friend QMatrix operator-(QMatrix const& a, QMatrix const& b);
    friend bool    operator==(QMatrix const& a, QMatrix const& b) = default;

   private:
    std::size_t           _rows = 0;
    std::size_t           _cols = 0;
    std::vector<Rational> _data;
  };

  struct RowEchelon {
    QMatrix                  reduced;  // reduced row echelon form
    std::vector<std::size_t> pivots;   // pivot column of each nonzero row
  };

  RowEchelon  rref(QMatrix m);
  std::size_t rank(QMatrix const& m);

  // Columns form a basis of {x : m x = 0}: one column per free variable, with
  // that variable set to 1 and the other free variables 0.
  QMatrix nullspace(QMatrix const& m);

  // Rows form a basis of {y : y m = 0}.
  QMatrix left_nullspace(QMatrix const& m);

  // Some X with a X = b (free variables set to zero), or nullopt.
  std::optional<QMatrix> solve(QMatrix const& a, QMatrix const& b);

  Rational               determinant(QMatrix m);
  std::optional<QMatrix> inverse(QMatrix const& m);

  // Whether the rows of a and b span the same subspace.
  bool same_row_space(QMatrix const& a, QMatrix const& b);

  // Nonzero rows of the rref, i.e. a canonical basis of the row space.
  QMatrix row_space_basis(QMatrix const& m);

}  // namespace mckay

#endif  // MCKAY_LINALG_HPP_
