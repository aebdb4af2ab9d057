#pragma once

#include <initializer_list>
#include <vector>

#include "molpred/rational.hpp"

namespace molpred {

// Dense row-major matrix of exact rationals.
class Mat {
  public:
    Mat() = default;
    Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}
    Mat(std::initializer_list<std::initializer_list<Rational>> rows);

    static Mat identity(int n);
    static Mat from_rows(const std::vector<Vec>& rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Rational& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    Vec row(int i) const;
    Vec col(int j) const;
    void set_row(int i, const Vec& v);

    Mat transpose() const;
    Mat operator*(const Mat& rhs) const;
    Vec apply(const Vec& x) const;           // this * x
    Vec apply_transposed(const Vec& y) const;  // this^T * y

    bool is_zero() const;
    bool operator==(const Mat& rhs) const = default;

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> a_;
};

// Exact rank via fraction-free (Bareiss) elimination with full pivoting.
int rank(const Mat& m);

// Solves A x = b for square A. Returns std::nullopt if A is singular.
std::optional<Vec> solve_square(const Mat& a, const Vec& b);

// Basis of the nullspace {x : A x = 0}, canonically scaled directions.
std::vector<Vec> nullspace(const Mat& a);

}  // namespace molpred
