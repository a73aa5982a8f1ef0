#pragma once

#include <optional>
#include <string>

#include "spherealg/opalg/gaussian_rational.hpp"

namespace spherealg {

// The six basic operators: unit-position components N_x, N_y, N_z and the
// dimensionless angular-momentum components L_x, L_y, L_z.  The enumeration
// order is the canonical sort order (all N letters before all L letters).
enum class Generator : int { NX = 0, NY = 1, NZ = 2, LX = 3, LY = 4, LZ = 5 };

inline constexpr int kGeneratorCount = 6;

inline bool is_position(Generator g) { return static_cast<int>(g) < 3; }
inline bool is_angular(Generator g) { return static_cast<int>(g) >= 3; }

// Cartesian axis 0/1/2 of either letter family.
inline int axis_of(Generator g) { return static_cast<int>(g) % 3; }

const char* generator_name(Generator g);  // "N_x", ..., "L_z"
std::optional<Generator> generator_from_name(const std::string& name);

// Single commutator [g, h] of two generators; the result is zero or a
// Gaussian-rational multiple of one generator:
//   [L_i, L_j] = i eps_ijk L_k,  [L_i, N_j] = i eps_ijk N_k,  [N_i, N_j] = 0.
struct GeneratorCommutator {
  bool zero = true;
  GaussianRational coeff;
  Generator result = Generator::NX;
};

GeneratorCommutator commute_generators(Generator g, Generator h);

}  // namespace spherealg
