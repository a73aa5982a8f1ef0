#pragma once

#include <map>
#include <optional>
#include <span>

#include "spherealg/opalg/operator_expr.hpp"
#include "spherealg/rep/generator_matrices.hpp"
#include "spherealg/rep/sparse_operator.hpp"

namespace spherealg::rep {

using ParamValues = std::map<Param, std::complex<double>>;

class LmaxTooSmallError : public std::runtime_error {
 public:
  LmaxTooSmallError(int lmax, int degree)
      : std::runtime_error("basis lmax " + std::to_string(lmax) +
                           " is smaller than the expression N-degree " + std::to_string(degree)) {}
};

// Realizes operator expressions as sparse matrices on one basis, caching the
// generator and monomial matrices.  The resulting matrices act exactly on the
// interior subspace l <= lmax - k, k being the N-degree of the expression.
class Evaluator {
 public:
  explicit Evaluator(Basis basis);

  const Basis& basis() const { return basis_; }
  const SparseOperator& generator(Generator g) const { return gens_[static_cast<std::size_t>(g)]; }
  const SparseOperator& monomial_matrix(const Monomial& m);

  // Sum over terms of coefficient values times normal-ordered monomial
  // matrices.  `params` must bind every parameter of the expression.
  SparseOperator evaluate(const OperatorExpr& e, const ParamValues& params = {});

  // Product of generator matrices in raw (written) order; the independent
  // route used to arbitrate symbolic identities.
  SparseOperator evaluate_word(std::span<const Generator> word);

 private:
  Basis basis_;
  std::vector<SparseOperator> gens_;
  std::map<Monomial, SparseOperator> cache_;
};

// Block report of an operator with respect to the L_z eigenvalue sectors:
// Frobenius norm per observed m-shift, the dominant shift, and the largest
// entry outside the dominant shift.
struct LadderReport {
  std::map<int, double> block_norms;
  std::optional<int> dominant_shift;
  double off_dominant_max = 0.0;
};

LadderReport ladder_structure(const SparseOperator& a);

}  // namespace spherealg::rep
