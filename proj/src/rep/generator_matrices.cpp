#include "spherealg/rep/generator_matrices.hpp"

#include <cmath>
#include <stdexcept>

namespace spherealg::rep {

namespace {

using Triplets = std::vector<SparseOperator::Triplet>;

// <l+1, m | cos(theta) | l, m>
double cos_theta_up(int l, int m) {
  return std::sqrt(double((l + 1 - m) * (l + 1 + m)) / double((2 * l + 1) * (2 * l + 3)));
}

// <l+1, m+1 | sin(theta) e^{i phi} | l, m>
double sin_up(int l, int m) {
  return -std::sqrt(double((l + m + 1) * (l + m + 2)) / double((2 * l + 1) * (2 * l + 3)));
}

// <l-1, m+1 | sin(theta) e^{i phi} | l, m>
double sin_down(int l, int m) {
  return std::sqrt(double((l - m) * (l - m - 1)) / double((2 * l - 1) * (2 * l + 1)));
}

Triplets lz_triplets(const Basis& basis) {
  Triplets t;
  for (int idx = 0; idx < basis.dimension(); ++idx) {
    const BasisState s = basis.state(idx);
    if (s.m != 0) t.emplace_back(idx, idx, double(s.m));
  }
  return t;
}

Triplets angular_ladder_triplets(int sign, const Basis& basis) {
  Triplets t;
  for (int l = 0; l <= basis.lmax(); ++l) {
    for (int m = -l; m <= l; ++m) {
      const int mt = m + sign;
      if (std::abs(mt) > l) continue;
      const double v = std::sqrt(double(l * (l + 1) - m * mt));
      t.emplace_back(basis.index({l, mt}), basis.index({l, m}), v);
    }
  }
  return t;
}

Triplets position_ladder_triplets(int sign, const Basis& basis) {
  // sign=+1 is multiplication by sin(theta) e^{i phi}; sign=-1 its adjoint.
  Triplets t;
  for (int l = 0; l <= basis.lmax(); ++l) {
    for (int m = -l; m <= l; ++m) {
      const int col = basis.index({l, m});
      if (sign > 0) {
        if (l + 1 <= basis.lmax()) t.emplace_back(basis.index({l + 1, m + 1}), col, sin_up(l, m));
        if (std::abs(m + 1) <= l - 1) t.emplace_back(basis.index({l - 1, m + 1}), col, sin_down(l, m));
      } else {
        // adjoint couplings: <l+1, m-1| A |l, m> = <l, m| A^T |l+1, m-1> etc.
        if (l + 1 <= basis.lmax())
          t.emplace_back(basis.index({l + 1, m - 1}), col, sin_down(l + 1, m - 1));
        if (std::abs(m - 1) <= l - 1)
          t.emplace_back(basis.index({l - 1, m - 1}), col, sin_up(l - 1, m - 1));
      }
    }
  }
  return t;
}

Triplets nz_triplets(const Basis& basis) {
  Triplets t;
  for (int l = 0; l <= basis.lmax(); ++l) {
    for (int m = -l; m <= l; ++m) {
      const int col = basis.index({l, m});
      if (l + 1 <= basis.lmax()) t.emplace_back(basis.index({l + 1, m}), col, cos_theta_up(l, m));
      if (std::abs(m) <= l - 1) t.emplace_back(basis.index({l - 1, m}), col, cos_theta_up(l - 1, m));
    }
  }
  return t;
}

}  // namespace

SparseOperator angular_ladder_matrix(int sign, const Basis& basis) {
  return SparseOperator::from_triplets(basis, angular_ladder_triplets(sign, basis));
}

SparseOperator position_ladder_matrix(int sign, const Basis& basis) {
  return SparseOperator::from_triplets(basis, position_ladder_triplets(sign, basis));
}

SparseOperator generator_matrix(Generator g, const Basis& basis) {
  using C = SparseOperator::Scalar;
  switch (g) {
    case Generator::LZ:
      return SparseOperator::from_triplets(basis, lz_triplets(basis));
    case Generator::LX:
      return (angular_ladder_matrix(+1, basis) + angular_ladder_matrix(-1, basis)) * C(0.5, 0.0);
    case Generator::LY:
      return (angular_ladder_matrix(+1, basis) - angular_ladder_matrix(-1, basis)) * C(0.0, -0.5);
    case Generator::NZ:
      return SparseOperator::from_triplets(basis, nz_triplets(basis));
    case Generator::NX:
      return (position_ladder_matrix(+1, basis) + position_ladder_matrix(-1, basis)) * C(0.5, 0.0);
    case Generator::NY:
      return (position_ladder_matrix(+1, basis) - position_ladder_matrix(-1, basis)) * C(0.0, -0.5);
  }
  throw std::logic_error("unreachable generator tag");
}

}  // namespace spherealg::rep
