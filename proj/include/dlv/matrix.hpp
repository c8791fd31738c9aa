#pragma once

#include "dlv/poly.hpp"

namespace dlv {

// Dense matrix over GF(q), row-major.
class MatrixK {
 public:
  MatrixK() = default;
  MatrixK(FieldPtr k, int rows, int cols)
      : k_(std::move(k)), rows_(rows), cols_(cols), a_(size_t(rows) * cols, 0) {}

  static MatrixK identity(const FieldPtr& k, int n);

  const FieldPtr& field() const { return k_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  FF at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }
  FF& at(int r, int c) { return a_[size_t(r) * cols_ + c]; }

  MatrixK operator+(const MatrixK& o) const;
  MatrixK operator-(const MatrixK& o) const;
  MatrixK operator*(const MatrixK& o) const;
  MatrixK scaled(FF c) const;
  std::vector<FF> apply(const std::vector<FF>& v) const;  // matrix * column
  MatrixK pow(uint64_t n) const;

  bool is_zero() const;
  bool operator==(const MatrixK& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

  // Monic characteristic polynomial det(var*I - A) by the division-free
  // Berkowitz recurrence on leading principal minors.
  Poly char_poly(Var var) const;

  // Reduced row echelon form; returns pivot column indices.
  std::vector<int> rref();
  int rank() const;
  // Basis of the right kernel {v : A v = 0}.
  std::vector<std::vector<FF>> kernel() const;

 private:
  FieldPtr k_;
  int rows_ = 0, cols_ = 0;
  std::vector<FF> a_;
};

}  // namespace dlv
