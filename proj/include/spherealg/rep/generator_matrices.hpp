#pragma once

#include "spherealg/opalg/generator.hpp"
#include "spherealg/rep/sparse_operator.hpp"

namespace spherealg::rep {

// Matrix of one generator on the truncated basis.  L_z is diagonal with entry
// m; L_x, L_y come from the ladder entries sqrt(l(l+1) - m(m+-1)); N_z couples
// (l+-1, m) with the closed-form coefficients of cos(theta); N_x, N_y come from
// the sin(theta) e^{+-i phi} couplings (l+-1, m+-1).  Condon-Shortley phases
// throughout; the quadrature oracle certifies every N entry in the test suite.
SparseOperator generator_matrix(Generator g, const Basis& basis);

// Ladder combinations, exposed for tests and parameter scans.
// sign = +1: L_+ = L_x + i L_y (or N_+); sign = -1: the lowering partner.
SparseOperator angular_ladder_matrix(int sign, const Basis& basis);
SparseOperator position_ladder_matrix(int sign, const Basis& basis);

}  // namespace spherealg::rep
