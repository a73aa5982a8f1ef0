#include "spherealg/rep/evaluator.hpp"

namespace spherealg::rep {

Evaluator::Evaluator(Basis basis) : basis_(basis) {
  gens_.reserve(kGeneratorCount);
  for (int k = 0; k < kGeneratorCount; ++k)
    gens_.push_back(generator_matrix(static_cast<Generator>(k), basis_));
}

const SparseOperator& Evaluator::monomial_matrix(const Monomial& m) {
  auto it = cache_.find(m);
  if (it != cache_.end()) return it->second;
  SparseOperator acc = SparseOperator::identity(basis_);
  for (Generator g : m.word()) acc = acc * generator(g);
  return cache_.emplace(m, std::move(acc)).first->second;
}

SparseOperator Evaluator::evaluate(const OperatorExpr& e, const ParamValues& params) {
  for (Param p : e.parameters_used())
    if (!params.count(p)) throw MissingParameterError(p);
  if (e.degree_N() > basis_.lmax()) throw LmaxTooSmallError(basis_.lmax(), e.degree_N());

  std::array<std::complex<double>, 4> vals{};
  for (const auto& [p, v] : params) vals[static_cast<std::size_t>(p)] = v;

  SparseOperator acc(basis_);
  for (const auto& [m, poly] : e.terms()) {
    const std::complex<double> c = poly.eval(vals);
    if (c == std::complex<double>(0.0, 0.0)) continue;
    acc = acc + monomial_matrix(m) * c;
  }
  return acc;
}

SparseOperator Evaluator::evaluate_word(std::span<const Generator> word) {
  SparseOperator acc = SparseOperator::identity(basis_);
  for (Generator g : word) acc = acc * generator(g);
  return acc;
}

LadderReport ladder_structure(const SparseOperator& a) {
  LadderReport out;
  std::map<int, double> squared;
  for (const auto& e : a.entries()) squared[e.row.m - e.col.m] += std::norm(e.value);
  double best = -1.0;
  for (const auto& [dm, s2] : squared) {
    out.block_norms[dm] = std::sqrt(s2);
    if (s2 > best) {
      best = s2;
      out.dominant_shift = dm;
    }
  }
  if (!out.dominant_shift) return out;
  for (const auto& e : a.entries()) {
    if (e.row.m - e.col.m == *out.dominant_shift) continue;
    out.off_dominant_max = std::max(out.off_dominant_max, std::abs(e.value));
  }
  return out;
}

}  // namespace spherealg::rep
