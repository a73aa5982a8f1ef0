#include "spherealg/rep/sparse_operator.hpp"

#include <algorithm>

namespace spherealg::rep {

namespace {
void prune_floor(SparseOperator::Matrix& m) {
  m.prune([](const Eigen::Index&, const Eigen::Index&, const SparseOperator::Scalar& v) {
    return std::abs(v) >= kEntryFloor;
  });
}
}  // namespace

SparseOperator::SparseOperator(Basis basis, Matrix m) : basis_(basis), mat_(std::move(m)) {
  if (mat_.rows() != basis_.dimension() || mat_.cols() != basis_.dimension())
    throw BasisMismatchError();
  prune_floor(mat_);
  mat_.makeCompressed();
}

SparseOperator SparseOperator::identity(const Basis& basis) {
  Matrix m(basis.dimension(), basis.dimension());
  m.setIdentity();
  return SparseOperator(basis, std::move(m));
}

SparseOperator SparseOperator::from_triplets(const Basis& basis,
                                             const std::vector<Triplet>& entries) {
  Matrix m(basis.dimension(), basis.dimension());
  m.setFromTriplets(entries.begin(), entries.end());
  return SparseOperator(basis, std::move(m));
}

SparseOperator SparseOperator::operator+(const SparseOperator& o) const {
  check_same_basis(o);
  return SparseOperator(basis_, mat_ + o.mat_);
}

SparseOperator SparseOperator::operator-(const SparseOperator& o) const {
  check_same_basis(o);
  return SparseOperator(basis_, mat_ - o.mat_);
}

SparseOperator SparseOperator::operator*(const SparseOperator& o) const {
  check_same_basis(o);
  return SparseOperator(basis_, Matrix(mat_ * o.mat_));
}

SparseOperator SparseOperator::operator*(Scalar s) const {
  return SparseOperator(basis_, Matrix(mat_ * s));
}

SparseOperator SparseOperator::adjointed() const {
  return SparseOperator(basis_, Matrix(mat_.adjoint()));
}

double SparseOperator::max_abs_entry() const {
  double best = 0.0;
  for (int r = 0; r < mat_.outerSize(); ++r)
    for (Matrix::InnerIterator it(mat_, r); it; ++it) best = std::max(best, std::abs(it.value()));
  return best;
}

double SparseOperator::hermiticity_residual(int k) const {
  return residual_norm(*this, adjointed(), k);
}

std::vector<SparseOperator::Entry> SparseOperator::entries() const {
  std::vector<Entry> out;
  out.reserve(entry_count());
  for (int r = 0; r < mat_.outerSize(); ++r)
    for (Matrix::InnerIterator it(mat_, r); it; ++it)
      out.push_back({basis_.state(static_cast<int>(it.row())),
                     basis_.state(static_cast<int>(it.col())), it.value()});
  return out;
}

SparseOperator interior_projector(const Basis& basis, int k) {
  if (k < 0 || k > basis.lmax())
    throw RangeError("interior projector order k must satisfy 0 <= k <= lmax");
  std::vector<SparseOperator::Triplet> trip;
  const int lcut = basis.lmax() - k;
  for (int idx = 0; idx < basis.dimension(); ++idx)
    if (basis.state(idx).l <= lcut) trip.emplace_back(idx, idx, 1.0);
  return SparseOperator::from_triplets(basis, trip);
}

double residual_norm(const SparseOperator& a, const SparseOperator& b, int k) {
  if (!(a.basis() == b.basis())) throw BasisMismatchError();
  if (k < 0 || k > a.basis().lmax())
    throw RangeError("residual interior order k must satisfy 0 <= k <= lmax");
  const int lcut = a.basis().lmax() - k;
  const SparseOperator::Matrix diff = a.matrix() - b.matrix();
  double sum = 0.0;
  for (int r = 0; r < diff.outerSize(); ++r) {
    if (a.basis().state(r).l > lcut) continue;
    for (SparseOperator::Matrix::InnerIterator it(diff, r); it; ++it) {
      if (a.basis().state(static_cast<int>(it.col())).l > lcut) continue;
      sum += std::norm(it.value());
    }
  }
  return std::sqrt(sum);
}

}  // namespace spherealg::rep
