#pragma once

// Square matrices over cyclotomic fields. All entries share one conductor.

#include <bit>
#include <cstdint>
#include <numeric>
#include <vector>

#include "agering/cyclotomic.hpp"
#include "agering/errors.hpp"

namespace agering {

class CycMatrix {
 public:
  CycMatrix() = default;

  explicit CycMatrix(std::size_t dim, unsigned conductor = 1)
      : dim_(dim), conductor_(conductor), entries_(dim * dim, Cyclotomic(0).lifted(conductor)) {}

  static CycMatrix identity(std::size_t dim, unsigned conductor = 1) {
    CycMatrix m(dim, conductor);
    for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = Cyclotomic(1).lifted(conductor);
    return m;
  }

  /// Builds from row-major entries of arbitrary conductors, lifted to a common one.
  static CycMatrix from_rows(const std::vector<std::vector<Cyclotomic>>& rows) {
    const std::size_t d = rows.size();
    unsigned conductor = 1;
    for (const auto& row : rows) {
      if (row.size() != d) throw Error(ErrorKind::InvalidInput, "matrix is not square");
      for (const auto& x : row) conductor = std::lcm(conductor, x.conductor());
    }
    CycMatrix m(d, conductor);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) m.at(i, j) = rows[i][j].lifted(conductor);
    return m;
  }

  std::size_t dim() const { return dim_; }
  unsigned conductor() const { return conductor_; }

  const Cyclotomic& at(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }
  Cyclotomic& at(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }

  CycMatrix lifted(unsigned target) const {
    if (target == conductor_) return *this;
    CycMatrix m(dim_, target);
    for (std::size_t k = 0; k < entries_.size(); ++k) m.entries_[k] = entries_[k].lifted(target);
    return m;
  }

  Cyclotomic trace() const {
    Cyclotomic t = Cyclotomic(0).lifted(conductor_);
    for (std::size_t i = 0; i < dim_; ++i) t += at(i, i);
    return t;
  }

  CycMatrix transpose() const {
    CycMatrix m(dim_, conductor_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) m.at(j, i) = at(i, j);
    return m;
  }

  /// Determinant by Laplace expansion over column subsets: O(2^d * d) products.
  Cyclotomic determinant() const {
    if (dim_ == 0) return Cyclotomic(1);
    if (dim_ > 20) throw Error(ErrorKind::CapExceeded, "determinant dimension too large");
    const std::size_t full = (std::size_t{1} << dim_);
    std::vector<Cyclotomic> partial(full, Cyclotomic(0).lifted(conductor_));
    partial[0] = Cyclotomic(1).lifted(conductor_);
    // partial[mask] = signed sum over assignments of rows 0..|mask|-1 to columns in mask
    for (std::size_t mask = 0; mask < full; ++mask) {
      if (partial[mask].is_zero()) continue;
      const std::size_t row = static_cast<std::size_t>(std::popcount(mask));
      if (row == dim_) continue;
      for (std::size_t col = 0; col < dim_; ++col) {
        if (mask & (std::size_t{1} << col)) continue;
        const Cyclotomic& entry = at(row, col);
        if (entry.is_zero()) continue;
        // sign = parity of the number of already-used columns to the right of col
        const std::size_t above = mask >> (col + 1);
        const bool negative = (std::popcount(above) & 1) != 0;
        Cyclotomic term = partial[mask] * entry;
        if (negative) term = -term;
        partial[mask | (std::size_t{1} << col)] += term;
      }
    }
    return partial[full - 1];
  }

  friend CycMatrix operator*(const CycMatrix& a, const CycMatrix& b) {
    if (a.dim_ != b.dim_) throw Error(ErrorKind::InvalidInput, "matrix size mismatch");
    const unsigned L = std::lcm(a.conductor_, b.conductor_);
    const CycMatrix& x = a.conductor_ == L ? a : a.lifted(L);
    const CycMatrix& y = b.conductor_ == L ? b : b.lifted(L);
    CycMatrix m(a.dim_, L);
    for (std::size_t i = 0; i < a.dim_; ++i) {
      for (std::size_t k = 0; k < a.dim_; ++k) {
        const Cyclotomic& xik = x.at(i, k);
        if (xik.is_zero()) continue;
        for (std::size_t j = 0; j < a.dim_; ++j) {
          const Cyclotomic& ykj = y.at(k, j);
          if (ykj.is_zero()) continue;
          m.at(i, j) += xik * ykj;
        }
      }
    }
    return m;
  }

  friend bool operator==(const CycMatrix& a, const CycMatrix& b) {
    if (a.dim_ != b.dim_) return false;
    for (std::size_t k = 0; k < a.entries_.size(); ++k)
      if (!(a.entries_[k] == b.entries_[k])) return false;
    return true;
  }

  bool is_identity() const { return *this == identity(dim_, conductor_); }

  std::size_t hash() const {
    std::size_t h = dim_;
    for (const auto& e : entries_) h = h * 1099511628211ULL ^ std::hash<Cyclotomic>{}(e);
    return h;
  }

  /// Block-diagonal sum.
  static CycMatrix block_diagonal(const CycMatrix& a, const CycMatrix& b) {
    const unsigned L = std::lcm(a.conductor_, b.conductor_);
    CycMatrix m(a.dim_ + b.dim_, L);
    for (std::size_t i = 0; i < a.dim_; ++i)
      for (std::size_t j = 0; j < a.dim_; ++j) m.at(i, j) = a.at(i, j).lifted(L);
    for (std::size_t i = 0; i < b.dim_; ++i)
      for (std::size_t j = 0; j < b.dim_; ++j)
        m.at(a.dim_ + i, a.dim_ + j) = b.at(i, j).lifted(L);
    return m;
  }

 private:
  std::size_t dim_ = 0;
  unsigned conductor_ = 1;
  std::vector<Cyclotomic> entries_;
};

struct CycMatrixHash {
  std::size_t operator()(const CycMatrix& m) const { return m.hash(); }
};

}  // namespace agering
