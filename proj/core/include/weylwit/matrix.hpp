#ifndef WEYLWIT_MATRIX_HPP
#define WEYLWIT_MATRIX_HPP

#include <vector>

#include "weylwit/poly.hpp"
#include "weylwit/scalar.hpp"

namespace weylwit {

using Vec = std::vector<GaussRational>;

/* Dense exact matrix over Q(i). */
class Matrix {
  public:
    Matrix() = default;
    Matrix(int rows, int cols)
        : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols, GaussRational(0)) {}

    static Matrix identity(int n);
    static Matrix from_rows(const std::vector<Vec>& rows);
    static Matrix from_columns(const std::vector<Vec>& cols);
    static Matrix block_diag(const Matrix& a, const Matrix& b);
    static Matrix column(const Vec& v);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    GaussRational& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
    const GaussRational& at(int i, int j) const {
        return e_[static_cast<size_t>(i) * cols_ + j];
    }

    Matrix transpose() const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator-() const;
    Matrix scaled(const GaussRational& s) const;
    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Vec apply(const Vec& v) const;
    Matrix pow(long e) const; /* negative e inverts */

    Vec col(int j) const;
    void set_col(int j, const Vec& v);

    bool is_zero() const;

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<GaussRational> e_;
};

/* Rank by fraction-free (Bareiss) elimination on a denominator-cleared copy. */
int rank(const Matrix& m);

/* Determinant by Bareiss elimination. */
GaussRational det(const Matrix& m);

/* Inverse; throws on singular input. */
Matrix inverse(const Matrix& m);

/* Solve a * x = b for x (b may have several columns); throws if singular. */
Matrix solve(const Matrix& a, const Matrix& b);

/* Basis of the right kernel, as columns. */
Matrix kernel_basis(const Matrix& m);

/* Monic characteristic polynomial (Faddeev-LeVerrier). */
Poly char_poly(const Matrix& m);

/* Jordan block sizes of m at the given eigenvalue, descending.
 * Recovered from the rank sequence of powers of (m - eigenvalue*I);
 * an empty list means the value is not an eigenvalue. */
std::vector<int> jordan_partition(const Matrix& m, const GaussRational& eigenvalue);

/* Bilinear form value x^T * gram * y. */
GaussRational form_value(const Matrix& gram, const Vec& x, const Vec& y);

Vec scaled(const Vec& v, const GaussRational& s);

}  // namespace weylwit

#endif
