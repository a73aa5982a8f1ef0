#pragma once

#include <Eigen/SparseCore>
#include <complex>
#include <vector>

#include "spherealg/rep/basis.hpp"

namespace spherealg::rep {

// Magnitude below which matrix entries are treated as structural zeros and
// never stored.
inline constexpr double kEntryFloor = 1e-15;

// Complex sparse matrix over a truncated spherical-harmonics basis.  Values
// are immutable once built; all arithmetic returns new operators.
class SparseOperator {
 public:
  using Scalar = std::complex<double>;
  using Matrix = Eigen::SparseMatrix<Scalar, Eigen::RowMajor>;
  using Triplet = Eigen::Triplet<Scalar>;

  explicit SparseOperator(Basis basis) : basis_(basis), mat_(basis.dimension(), basis.dimension()) {}
  SparseOperator(Basis basis, Matrix m);

  static SparseOperator identity(const Basis& basis);
  static SparseOperator from_triplets(const Basis& basis, const std::vector<Triplet>& entries);

  const Basis& basis() const { return basis_; }
  const Matrix& matrix() const { return mat_; }
  std::size_t entry_count() const { return static_cast<std::size_t>(mat_.nonZeros()); }

  SparseOperator operator+(const SparseOperator& o) const;
  SparseOperator operator-(const SparseOperator& o) const;
  SparseOperator operator*(const SparseOperator& o) const;
  SparseOperator operator*(Scalar s) const;
  friend SparseOperator operator*(Scalar s, const SparseOperator& a) { return a * s; }

  // Conjugate transpose.
  SparseOperator adjointed() const;

  double frobenius_norm() const { return mat_.norm(); }
  double max_abs_entry() const;

  // Off-hermiticity ||A - A^dagger||_F restricted to rows and columns with
  // l <= lmax - k.
  double hermiticity_residual(int k) const;

  struct Entry {
    BasisState row;
    BasisState col;
    Scalar value;
  };
  // Entries in ascending (row index, column index) order.
  std::vector<Entry> entries() const;

 private:
  void check_same_basis(const SparseOperator& o) const {
    if (!(basis_ == o.basis_)) throw BasisMismatchError();
  }

  Basis basis_;
  Matrix mat_;
};

class RangeError : public std::runtime_error {
 public:
  explicit RangeError(const std::string& what) : std::runtime_error(what) {}
};

// Orthogonal projector onto span{|l,m> : l <= lmax - k}.  k must be at least
// the total N-degree of the expression whose matrix is being trusted.
SparseOperator interior_projector(const Basis& basis, int k);

// ||P (A - B) P||_F with P = interior_projector(basis, k).
double residual_norm(const SparseOperator& a, const SparseOperator& b, int k);

}  // namespace spherealg::rep
