#include "ellft/linalg.hpp"

#include <stdexcept>

namespace ellft {

CycMat CycMat::identity(int n) {
  CycMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = CycNum(1);
  return m;
}

CycMat CycMat::operator*(const CycMat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("CycMat: shape mismatch");
  CycMat r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const CycNum& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) r.at(i, j) += aik * o.at(k, j);
    }
  return r;
}

CycVec CycMat::operator*(const CycVec& v) const {
  if (cols_ != static_cast<int>(v.size()))
    throw std::invalid_argument("CycMat: shape mismatch");
  CycVec r(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero()) r[i] += at(i, j) * v[j];
  return r;
}

CycMat CycMat::operator+(const CycMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("CycMat: shape mismatch");
  CycMat r = *this;
  for (size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
  return r;
}

CycMat CycMat::operator-(const CycMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("CycMat: shape mismatch");
  CycMat r = *this;
  for (size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
  return r;
}

CycMat CycMat::scaled(const CycNum& s) const {
  CycMat r = *this;
  for (auto& x : r.data_) x *= s;
  return r;
}

CycMat CycMat::transpose() const {
  CycMat r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

CycMat CycMat::conj_transpose() const {
  CycMat r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j).conj();
  return r;
}

CycNum CycMat::det() const {
  if (rows_ != cols_) throw std::invalid_argument("CycMat::det: not square");
  CycMat a = *this;
  const int n = rows_;
  CycNum d(1);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (!a.at(r, col).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) return CycNum();
    if (pivot != col) {
      for (int j = 0; j < n; ++j) std::swap(a.at(pivot, j), a.at(col, j));
      d = -d;
    }
    d *= a.at(col, col);
    CycNum inv = a.at(col, col).inv();
    for (int r = col + 1; r < n; ++r) {
      if (a.at(r, col).is_zero()) continue;
      CycNum f = a.at(r, col) * inv;
      for (int j = col; j < n; ++j) a.at(r, j) -= f * a.at(col, j);
    }
  }
  return d;
}

CycMat CycMat::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("CycMat::inverse: not square");
  const int n = rows_;
  CycMat a = *this;
  CycMat inv = identity(n);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (!a.at(r, col).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw std::domain_error("CycMat::inverse: singular matrix");
    if (pivot != col)
      for (int j = 0; j < n; ++j) {
        std::swap(a.at(pivot, j), a.at(col, j));
        std::swap(inv.at(pivot, j), inv.at(col, j));
      }
    CycNum pinv = a.at(col, col).inv();
    for (int j = 0; j < n; ++j) {
      a.at(col, j) *= pinv;
      inv.at(col, j) *= pinv;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || a.at(r, col).is_zero()) continue;
      CycNum f = a.at(r, col);
      for (int j = 0; j < n; ++j) {
        a.at(r, j) -= f * a.at(col, j);
        inv.at(r, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

}  // namespace ellft
