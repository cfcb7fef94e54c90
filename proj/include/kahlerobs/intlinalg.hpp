// Exact integer and rational linear algebra.
//
// Everything here is arbitrary precision (GMP); there is no floating point
// anywhere in the library. Matrices are small and dense (dimension ~50 at
// most), so the algorithms favour clarity and reproducibility over speed.

#ifndef KAHLEROBS_INTLINALG_HPP_
#define KAHLEROBS_INTLINALG_HPP_

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace kahlerobs {

  /// Dense row-major matrix over an exact ring (mpz_class or mpq_class).
  template <typename T>
  class Matrix {
   public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, T(0)) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
        : rows_(rows), cols_(cols), entries_(std::move(entries)) {
      if (entries_.size() != rows_ * cols_) {
        throw InputError("matrix entry count does not match its shape");
      }
    }
    Matrix(std::initializer_list<std::initializer_list<long>> rows) {
      rows_ = rows.size();
      cols_ = rows_ == 0 ? 0 : rows.begin()->size();
      for (auto const& r : rows) {
        if (r.size() != cols_) {
          throw InputError("ragged matrix literal");
        }
        for (long x : r) {
          entries_.emplace_back(x);
        }
      }
    }

    static Matrix identity(std::size_t n) {
      Matrix m(n, n);
      for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1;
      }
      return m;
    }

    std::size_t rows() const noexcept {
      return rows_;
    }
    std::size_t cols() const noexcept {
      return cols_;
    }
    T& operator()(std::size_t i, std::size_t j) {
      return entries_[i * cols_ + j];
    }
    T const& operator()(std::size_t i, std::size_t j) const {
      return entries_[i * cols_ + j];
    }
    std::vector<T> const& entries() const noexcept {
      return entries_;
    }

    std::vector<T> row(std::size_t i) const {
      return std::vector<T>(entries_.begin() + i * cols_,
                            entries_.begin() + (i + 1) * cols_);
    }
    std::vector<T> column(std::size_t j) const {
      std::vector<T> c(rows_);
      for (std::size_t i = 0; i < rows_; ++i) {
        c[i] = (*this)(i, j);
      }
      return c;
    }

    Matrix transpose() const {
      Matrix t(cols_, rows_);
      for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
          t(j, i) = (*this)(i, j);
        }
      }
      return t;
    }

    Matrix operator*(Matrix const& b) const {
      if (cols_ != b.rows_) {
        throw InputError("matrix product shape mismatch");
      }
      Matrix c(rows_, b.cols_);
      for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
          T const& a = (*this)(i, k);
          if (a == 0) {
            continue;
          }
          for (std::size_t j = 0; j < b.cols_; ++j) {
            c(i, j) += a * b(k, j);
          }
        }
      }
      return c;
    }

    std::vector<T> operator*(std::vector<T> const& x) const {
      if (x.size() != cols_) {
        throw InputError("matrix-vector shape mismatch");
      }
      std::vector<T> y(rows_, T(0));
      for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
          y[i] += (*this)(i, j) * x[j];
        }
      }
      return y;
    }

    bool is_zero() const {
      return std::all_of(
          entries_.begin(), entries_.end(), [](T const& x) { return x == 0; });
    }

    bool operator==(Matrix const& o) const {
      return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
    }

    /// Rows [r0, r1) and columns [c0, c1).
    Matrix block(std::size_t r0,
                 std::size_t r1,
                 std::size_t c0,
                 std::size_t c1) const {
      Matrix m(r1 - r0, c1 - c0);
      for (std::size_t i = r0; i < r1; ++i) {
        for (std::size_t j = c0; j < c1; ++j) {
          m(i - r0, j - c0) = (*this)(i, j);
        }
      }
      return m;
    }

    /// Columns of this followed by columns of other.
    Matrix hconcat(Matrix const& other) const {
      if (rows_ != other.rows_) {
        throw InputError("hconcat row mismatch");
      }
      Matrix m(rows_, cols_ + other.cols_);
      for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
          m(i, j) = (*this)(i, j);
        }
        for (std::size_t j = 0; j < other.cols_; ++j) {
          m(i, cols_ + j) = other(i, j);
        }
      }
      return m;
    }

   private:
    std::size_t    rows_ = 0;
    std::size_t    cols_ = 0;
    std::vector<T> entries_;
  };

  using IntMatrix = Matrix<mpz_class>;
  using RatMatrix = Matrix<mpq_class>;
  using IntVector = std::vector<mpz_class>;
  using RatVector = std::vector<mpq_class>;

  template <typename T>
  std::ostream& operator<<(std::ostream& os, Matrix<T> const& m) {
    os << '[';
    for (std::size_t i = 0; i < m.rows(); ++i) {
      os << (i ? ", [" : "[");
      for (std::size_t j = 0; j < m.cols(); ++j) {
        os << (j ? ", " : "") << m(i, j);
      }
      os << ']';
    }
    return os << ']';
  }

  inline RatMatrix to_rational(IntMatrix const& a) {
    std::vector<mpq_class> e;
    e.reserve(a.entries().size());
    for (auto const& x : a.entries()) {
      e.emplace_back(x);
    }
    return RatMatrix(a.rows(), a.cols(), std::move(e));
  }

  inline RatVector to_rational(IntVector const& v) {
    return RatVector(v.begin(), v.end());
  }

  ////////////////////////////////////////////////////////////////////////
  // Smith normal form
  ////////////////////////////////////////////////////////////////////////

  /// U * A * V = D with U, V unimodular and D = diag(d_1 | d_2 | ...).
  ///
  /// The inverses of U and V are tracked alongside so that change-of-basis
  /// in either direction needs no further inversion.
  struct SNFResult {
    IntMatrix              U, D, V;
    IntMatrix              U_inv, V_inv;
    std::vector<mpz_class> diagonal;  // min(rows, cols) entries
    std::size_t            rank = 0;
  };

  namespace detail {
    inline void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
      if (a == b) {
        return;
      }
      for (std::size_t j = 0; j < m.cols(); ++j) {
        std::swap(m(a, j), m(b, j));
      }
    }
    inline void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
      if (a == b) {
        return;
      }
      for (std::size_t i = 0; i < m.rows(); ++i) {
        std::swap(m(i, a), m(i, b));
      }
    }
    // row_dst += k * row_src
    inline void add_row(IntMatrix&       m,
                        std::size_t      dst,
                        std::size_t      src,
                        mpz_class const& k) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        m(dst, j) += k * m(src, j);
      }
    }
    inline void add_col(IntMatrix&       m,
                        std::size_t      dst,
                        std::size_t      src,
                        mpz_class const& k) {
      for (std::size_t i = 0; i < m.rows(); ++i) {
        m(i, dst) += k * m(i, src);
      }
    }

    // Row operations act on D and U from the left; U_inv from the right by
    // the inverse operation. Column operations act on D and V from the
    // right; V_inv from the left by the inverse operation.
    struct SNFState {
      IntMatrix D, U, V, U_inv, V_inv;

      void row_swap(std::size_t a, std::size_t b) {
        swap_rows(D, a, b);
        swap_rows(U, a, b);
        swap_cols(U_inv, a, b);
      }
      void col_swap(std::size_t a, std::size_t b) {
        swap_cols(D, a, b);
        swap_cols(V, a, b);
        swap_rows(V_inv, a, b);
      }
      void row_add(std::size_t dst, std::size_t src, mpz_class const& k) {
        add_row(D, dst, src, k);
        add_row(U, dst, src, k);
        mpz_class neg = -k;
        add_col(U_inv, src, dst, neg);
      }
      void col_add(std::size_t dst, std::size_t src, mpz_class const& k) {
        add_col(D, dst, src, k);
        add_col(V, dst, src, k);
        mpz_class neg = -k;
        add_row(V_inv, src, dst, neg);
      }
      void row_negate(std::size_t r) {
        for (std::size_t j = 0; j < D.cols(); ++j) {
          D(r, j) = -D(r, j);
        }
        for (std::size_t j = 0; j < U.cols(); ++j) {
          U(r, j) = -U(r, j);
        }
        for (std::size_t i = 0; i < U_inv.rows(); ++i) {
          U_inv(i, r) = -U_inv(i, r);
        }
      }
    };

    // Smallest nonzero |entry| in rows >= t, cols >= t; row-major first on
    // ties.
    inline bool find_pivot(IntMatrix const& d,
                           std::size_t      t,
                           std::size_t&     pi,
                           std::size_t&     pj) {
      bool      found = false;
      mpz_class best;
      for (std::size_t i = t; i < d.rows(); ++i) {
        for (std::size_t j = t; j < d.cols(); ++j) {
          if (d(i, j) != 0) {
            mpz_class a = abs(d(i, j));
            if (!found || a < best) {
              found = true;
              best  = a;
              pi    = i;
              pj    = j;
            }
          }
        }
      }
      return found;
    }
  }  // namespace detail

  /// Smith normal form with minimal-absolute-value pivoting.
  inline SNFResult smith_normal_form(IntMatrix const& a) {
    std::size_t const m = a.rows(), n = a.cols();
    detail::SNFState  s{a,
                       IntMatrix::identity(m),
                       IntMatrix::identity(n),
                       IntMatrix::identity(m),
                       IntMatrix::identity(n)};
    std::size_t       t = 0;
    for (; t < std::min(m, n); ++t) {
      std::size_t pi = 0, pj = 0;
      if (!detail::find_pivot(s.D, t, pi, pj)) {
        break;
      }
      s.row_swap(t, pi);
      s.col_swap(t, pj);
      while (true) {
        bool dirty = false;
        for (std::size_t i = t + 1; i < m; ++i) {
          if (s.D(i, t) != 0) {
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), s.D(i, t).get_mpz_t(),
                       s.D(t, t).get_mpz_t());
            s.row_add(i, t, -q);
            dirty = dirty || s.D(i, t) != 0;
          }
        }
        for (std::size_t j = t + 1; j < n; ++j) {
          if (s.D(t, j) != 0) {
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), s.D(t, j).get_mpz_t(),
                       s.D(t, t).get_mpz_t());
            s.col_add(j, t, -q);
            dirty = dirty || s.D(t, j) != 0;
          }
        }
        if (dirty) {
          // A remainder survived: move the smallest one in row/column t to
          // the pivot and repeat.
          std::size_t bi = t, bj = t;
          mpz_class   best = abs(s.D(t, t));
          for (std::size_t i = t + 1; i < m; ++i) {
            if (s.D(i, t) != 0 && abs(s.D(i, t)) < best) {
              best = abs(s.D(i, t));
              bi   = i;
              bj   = t;
            }
          }
          for (std::size_t j = t + 1; j < n; ++j) {
            if (s.D(t, j) != 0 && abs(s.D(t, j)) < best) {
              best = abs(s.D(t, j));
              bi   = t;
              bj   = j;
            }
          }
          s.row_swap(t, bi);
          s.col_swap(t, bj);
          continue;
        }
        // Divisibility: fold a row with an indivisible entry into row t.
        bool folded = false;
        for (std::size_t i = t + 1; i < m && !folded; ++i) {
          for (std::size_t j = t + 1; j < n; ++j) {
            if (!mpz_divisible_p(s.D(i, j).get_mpz_t(),
                                 s.D(t, t).get_mpz_t())) {
              s.row_add(t, i, mpz_class(1));
              folded = true;
              break;
            }
          }
        }
        if (!folded) {
          break;
        }
      }
      if (s.D(t, t) < 0) {
        s.row_negate(t);
      }
    }
    SNFResult r{s.U, s.D, s.V, s.U_inv, s.V_inv, {}, t};
    for (std::size_t i = 0; i < std::min(m, n); ++i) {
      r.diagonal.push_back(s.D(i, i));
    }
    return r;
  }

  /// Determinant by fraction-free (Bareiss) elimination.
  inline mpz_class determinant(IntMatrix a) {
    if (a.rows() != a.cols()) {
      throw InputError("determinant of a non-square matrix");
    }
    std::size_t const n = a.rows();
    if (n == 0) {
      return 1;
    }
    mpz_class sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (a(k, k) == 0) {
        std::size_t p = k + 1;
        while (p < n && a(p, k) == 0) {
          ++p;
        }
        if (p == n) {
          return 0;
        }
        detail::swap_rows(a, k, p);
        sign = -sign;
      }
      for (std::size_t i = k + 1; i < n; ++i) {
        for (std::size_t j = k + 1; j < n; ++j) {
          mpz_class v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
          mpz_divexact(a(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        }
      }
      prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
  }

  ////////////////////////////////////////////////////////////////////////
  // Rational elimination
  ////////////////////////////////////////////////////////////////////////

  struct RowEchelon {
    RatMatrix                R;  // reduced row echelon form
    std::vector<std::size_t> pivots;
  };

  inline RowEchelon reduced_row_echelon(RatMatrix a) {
    std::vector<std::size_t> pivots;
    std::size_t              r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
      std::size_t p = r;
      while (p < a.rows() && a(p, c) == 0) {
        ++p;
      }
      if (p == a.rows()) {
        continue;
      }
      for (std::size_t j = 0; j < a.cols(); ++j) {
        std::swap(a(r, j), a(p, j));
      }
      mpq_class inv = 1 / a(r, c);
      for (std::size_t j = c; j < a.cols(); ++j) {
        a(r, j) *= inv;
      }
      for (std::size_t i = 0; i < a.rows(); ++i) {
        if (i != r && a(i, c) != 0) {
          mpq_class f = a(i, c);
          for (std::size_t j = c; j < a.cols(); ++j) {
            a(i, j) -= f * a(r, j);
          }
        }
      }
      pivots.push_back(c);
      ++r;
    }
    return {std::move(a), std::move(pivots)};
  }

  inline std::size_t rank(RatMatrix const& a) {
    return reduced_row_echelon(a).pivots.size();
  }

  inline std::size_t rank(IntMatrix const& a) {
    return rank(to_rational(a));
  }

  /// Basis of {x : A x = 0} over Q, one vector per free column.
  inline std::vector<RatVector> nullspace(RatMatrix const& a) {
    auto [r, pivots] = reduced_row_echelon(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto p : pivots) {
      is_pivot[p] = true;
    }
    std::vector<RatVector> basis;
    for (std::size_t f = 0; f < a.cols(); ++f) {
      if (is_pivot[f]) {
        continue;
      }
      RatVector x(a.cols(), mpq_class(0));
      x[f] = 1;
      for (std::size_t i = 0; i < pivots.size(); ++i) {
        x[pivots[i]] = -r(i, f);
      }
      basis.push_back(std::move(x));
    }
    return basis;
  }

  inline std::vector<RatVector> nullspace(IntMatrix const& a) {
    return nullspace(to_rational(a));
  }

  /// Some x with A x = b over Q (free variables set to zero), or nothing.
  inline std::optional<RatVector> solve_rational(RatMatrix const& a,
                                                 RatVector const& b) {
    if (b.size() != a.rows()) {
      throw InputError("solve_rational: right-hand side has wrong length");
    }
    RatMatrix aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) {
        aug(i, j) = a(i, j);
      }
      aug(i, a.cols()) = b[i];
    }
    auto [r, pivots] = reduced_row_echelon(aug);
    if (!pivots.empty() && pivots.back() == a.cols()) {
      return std::nullopt;
    }
    RatVector x(a.cols(), mpq_class(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      x[pivots[i]] = r(i, a.cols());
    }
    if (a * x != b) {
      throw std::logic_error("solve_rational: witness failed verification");
    }
    return x;
  }

  inline std::optional<RatVector> solve_rational(IntMatrix const& a,
                                                 RatVector const& b) {
    return solve_rational(to_rational(a), b);
  }

  ////////////////////////////////////////////////////////////////////////
  // Integer systems
  ////////////////////////////////////////////////////////////////////////

  /// Some x in Z^n with A x = b, or nothing. Uses the SNF change of basis;
  /// the witness is re-checked by multiplication before it is returned.
  inline std::optional<IntVector> solve_integer(IntMatrix const& a,
                                                IntVector const& b,
                                                SNFResult const& snf) {
    if (b.size() != a.rows()) {
      throw InputError("solve_integer: right-hand side has wrong length");
    }
    IntVector c = snf.U * b;
    IntVector y(a.cols(), mpz_class(0));
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i < snf.rank) {
        if (!mpz_divisible_p(c[i].get_mpz_t(), snf.diagonal[i].get_mpz_t())) {
          return std::nullopt;
        }
        mpz_divexact(
            y[i].get_mpz_t(), c[i].get_mpz_t(), snf.diagonal[i].get_mpz_t());
      } else if (c[i] != 0) {
        return std::nullopt;
      }
    }
    IntVector x = snf.V * y;
    if (a * x != b) {
      throw std::logic_error("solve_integer: witness failed verification");
    }
    return x;
  }

  inline std::optional<IntVector> solve_integer(IntMatrix const& a,
                                                IntVector const& b) {
    return solve_integer(a, b, smith_normal_form(a));
  }

  /// Z-basis of {x in Z^n : A x = 0}.
  inline std::vector<IntVector> integer_kernel(IntMatrix const& a) {
    SNFResult              snf = smith_normal_form(a);
    std::vector<IntVector> basis;
    for (std::size_t j = snf.rank; j < a.cols(); ++j) {
      basis.push_back(snf.V.column(j));
    }
    return basis;
  }

  ////////////////////////////////////////////////////////////////////////
  // Finitely generated abelian groups
  ////////////////////////////////////////////////////////////////////////

  /// Z^rank + Z/t_1 + ... + Z/t_k with t_1 | t_2 | ... | t_k, all t_i > 1.
  struct AbelianStructure {
    std::size_t            rank = 0;
    std::vector<mpz_class> torsion;

    bool is_finite() const noexcept {
      return rank == 0;
    }
    bool is_trivial() const noexcept {
      return rank == 0 && torsion.empty();
    }
    bool operator==(AbelianStructure const&) const = default;

    std::string to_string() const {
      std::ostringstream os;
      bool               first = true;
      if (rank > 0) {
        os << "Z";
        if (rank > 1) {
          os << "^" << rank;
        }
        first = false;
      }
      for (auto const& t : torsion) {
        os << (first ? "" : " + ") << "Z/" << t;
        first = false;
      }
      if (first) {
        os << "0";
      }
      return os.str();
    }
  };

  /// Z^cols / (row span of A).
  inline AbelianStructure cokernel(IntMatrix const& a) {
    SNFResult        snf = smith_normal_form(a);
    AbelianStructure s;
    s.rank = a.cols() - snf.rank;
    for (std::size_t i = 0; i < snf.rank; ++i) {
      if (snf.diagonal[i] > 1) {
        s.torsion.push_back(snf.diagonal[i]);
      }
    }
    return s;
  }

}  // namespace kahlerobs

#endif  // KAHLEROBS_INTLINALG_HPP_
