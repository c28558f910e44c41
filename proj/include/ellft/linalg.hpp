#pragma once

// Dense exact linear algebra over Q(zeta_60).  Matrices here are small
// (at most ~40x40), so plain Gaussian elimination with any nonzero pivot
// is sufficient; exactness makes pivot magnitude irrelevant.

#include <vector>

#include "ellft/cyclo.hpp"

namespace ellft {

using CycVec = std::vector<CycNum>;

class CycMat {
public:
  CycMat() = default;
  CycMat(int rows, int cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static CycMat identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  CycNum& at(int r, int c) { return data_[r * cols_ + c]; }
  const CycNum& at(int r, int c) const { return data_[r * cols_ + c]; }

  CycMat operator*(const CycMat& o) const;
  CycVec operator*(const CycVec& v) const;
  CycMat operator+(const CycMat& o) const;
  CycMat operator-(const CycMat& o) const;
  CycMat scaled(const CycNum& s) const;
  CycMat transpose() const;
  CycMat conj_transpose() const;

  bool operator==(const CycMat& o) const = default;

  CycNum det() const;
  CycMat inverse() const;  // throws std::domain_error if singular

private:
  int rows_ = 0, cols_ = 0;
  std::vector<CycNum> data_;
};

}  // namespace ellft
