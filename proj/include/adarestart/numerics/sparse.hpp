#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include <Eigen/Core>
#include <Eigen/SparseCore>

namespace adarestart {

// Compressed row storage. Column indices are sorted within each row once
// compressed, which is how every constructor below leaves the matrix.
using SparseMatrix = Eigen::SparseMatrix<double, Eigen::RowMajor>;
using Triplet = Eigen::Triplet<double>;
using DenseMatrix = Eigen::MatrixXd;

inline SparseMatrix make_sparse(Eigen::Index rows, Eigen::Index cols,
                                const std::vector<Triplet>& entries) {
  for (const auto& e : entries) {
    if (e.row() < 0 || e.row() >= rows || e.col() < 0 || e.col() >= cols) {
      throw std::out_of_range("sparse entry index out of bounds");
    }
    if (!std::isfinite(e.value())) throw std::invalid_argument("sparse entry is not finite");
  }
  SparseMatrix a(rows, cols);
  a.setFromTriplets(entries.begin(), entries.end());
  a.makeCompressed();
  return a;
}

inline SparseMatrix sparse_from_dense(const DenseMatrix& dense, double drop_tol = 0.0) {
  SparseMatrix a = dense.sparseView(1.0, drop_tol);
  a.makeCompressed();
  return a;
}

// Throws when the compressed-row invariants do not hold.
inline void validate_sparse(const SparseMatrix& a) {
  if (!a.isCompressed()) throw std::invalid_argument("sparse matrix is not compressed");
  for (Eigen::Index row = 0; row < a.outerSize(); ++row) {
    Eigen::Index previous = -1;
    for (SparseMatrix::InnerIterator it(a, row); it; ++it) {
      if (it.col() <= previous || it.col() >= a.cols()) {
        throw std::invalid_argument("sparse column indices must increase within a row");
      }
      if (!std::isfinite(it.value())) throw std::invalid_argument("sparse value is not finite");
      previous = it.col();
    }
  }
}

}  // namespace adarestart
