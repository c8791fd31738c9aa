#include "dlv/matrix.hpp"

namespace dlv {

MatrixK MatrixK::identity(const FieldPtr& k, int n) {
  MatrixK m(k, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

MatrixK MatrixK::operator+(const MatrixK& o) const {
  MatrixK r(k_, rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = k_->add(a_[i], o.a_[i]);
  return r;
}

MatrixK MatrixK::operator-(const MatrixK& o) const {
  MatrixK r(k_, rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = k_->sub(a_[i], o.a_[i]);
  return r;
}

MatrixK MatrixK::operator*(const MatrixK& o) const {
  if (cols_ != o.rows_) throw Error("matrix mul: dimension mismatch");
  MatrixK r(k_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int l = 0; l < cols_; ++l) {
      FF v = at(i, l);
      if (v == 0) continue;
      for (int j = 0; j < o.cols_; ++j)
        r.at(i, j) = k_->add(r.at(i, j), k_->mul(v, o.at(l, j)));
    }
  return r;
}

MatrixK MatrixK::scaled(FF c) const {
  MatrixK r(k_, rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = k_->mul(a_[i], c);
  return r;
}

std::vector<FF> MatrixK::apply(const std::vector<FF>& v) const {
  if (int(v.size()) != cols_) throw Error("matrix apply: dimension mismatch");
  std::vector<FF> r(rows_, 0);
  for (int i = 0; i < rows_; ++i) {
    FF s = 0;
    for (int j = 0; j < cols_; ++j) s = k_->add(s, k_->mul(at(i, j), v[j]));
    r[i] = s;
  }
  return r;
}

MatrixK MatrixK::pow(uint64_t n) const {
  MatrixK r = identity(k_, rows_), base = *this;
  while (n) {
    if (n & 1) r = r * base;
    if (n >>= 1) base = base * base;
  }
  return r;
}

bool MatrixK::is_zero() const {
  for (FF v : a_)
    if (v != 0) return false;
  return true;
}

Poly MatrixK::char_poly(Var var) const {
  if (rows_ != cols_) throw Error("char_poly: non-square matrix");
  const int n = rows_;
  if (n == 0) return Poly::one(k_, var);
  // Berkowitz: V_r = Toeplitz(col_r) * V_{r-1}, col_r = (1, -a_rr, -R C,
  // -R M C, ...) built from the leading principal blocks.
  std::vector<FF> V = {1, k_->neg(at(0, 0))};
  std::vector<FF> w, s;
  for (int r = 2; r <= n; ++r) {
    std::vector<FF> col(r + 1, 0);
    col[0] = 1;
    col[1] = k_->neg(at(r - 1, r - 1));
    w.assign(r - 1, 0);
    for (int i = 0; i < r - 1; ++i) w[i] = at(i, r - 1);  // C
    for (int i = 0; i < r - 1; ++i) {
      FF dot = 0;
      for (int j = 0; j < r - 1; ++j) dot = k_->add(dot, k_->mul(at(r - 1, j), w[j]));
      col[i + 2] = k_->neg(dot);  // -R M^i C
      if (i + 1 < r - 1) {
        s.assign(r - 1, 0);
        for (int a = 0; a < r - 1; ++a) {
          FF acc = 0;
          for (int b = 0; b < r - 1; ++b) acc = k_->add(acc, k_->mul(at(a, b), w[b]));
          s[a] = acc;
        }
        w.swap(s);
      }
    }
    std::vector<FF> nv(r + 1, 0);
    for (int i = 0; i <= r; ++i) {
      FF acc = 0;
      for (int j = 0; j < int(V.size()); ++j) {
        int ci = i - j;
        if (ci >= 0 && ci <= r) acc = k_->add(acc, k_->mul(col[ci], V[j]));
      }
      nv[i] = acc;
    }
    V.swap(nv);
  }
  // V holds coefficients highest-degree first.
  std::vector<FF> coeffs(n + 1, 0);
  for (int i = 0; i <= n; ++i) coeffs[n - i] = V[i];
  return Poly(k_, var, std::move(coeffs));
}

std::vector<int> MatrixK::rref() {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < cols_ && row < rows_; ++col) {
    int p = -1;
    for (int r = row; r < rows_; ++r)
      if (at(r, col) != 0) {
        p = r;
        break;
      }
    if (p < 0) continue;
    if (p != row)
      for (int j = 0; j < cols_; ++j) std::swap(at(p, j), at(row, j));
    FF inv = k_->inv(at(row, col));
    for (int j = 0; j < cols_; ++j) at(row, j) = k_->mul(at(row, j), inv);
    for (int r = 0; r < rows_; ++r) {
      if (r == row) continue;
      FF f = at(r, col);
      if (f == 0) continue;
      for (int j = 0; j < cols_; ++j)
        at(r, j) = k_->sub(at(r, j), k_->mul(f, at(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int MatrixK::rank() const {
  MatrixK m = *this;
  return int(m.rref().size());
}

std::vector<std::vector<FF>> MatrixK::kernel() const {
  MatrixK m = *this;
  std::vector<int> pivots = m.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<FF>> basis;
  for (int free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<FF> v(cols_, 0);
    v[free] = 1;
    for (size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = k_->neg(m.at(int(r), free));
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace dlv
