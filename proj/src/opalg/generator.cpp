#include "spherealg/opalg/generator.hpp"

#include <array>

namespace spherealg {

namespace {
constexpr std::array<const char*, 6> kNames = {"N_x", "N_y", "N_z", "L_x", "L_y", "L_z"};

// Levi-Civita symbol on axes {0,1,2}.
int epsilon(int i, int j, int k) {
  if (i == j || j == k || i == k) return 0;
  // even permutations of (0,1,2)
  if ((i == 0 && j == 1 && k == 2) || (i == 1 && j == 2 && k == 0) || (i == 2 && j == 0 && k == 1))
    return 1;
  return -1;
}
}  // namespace

const char* generator_name(Generator g) { return kNames[static_cast<int>(g)]; }

std::optional<Generator> generator_from_name(const std::string& name) {
  for (int k = 0; k < kGeneratorCount; ++k)
    if (name == kNames[k]) return static_cast<Generator>(k);
  return std::nullopt;
}

GeneratorCommutator commute_generators(Generator g, Generator h) {
  GeneratorCommutator out;
  if (is_position(g) && is_position(h)) return out;  // position components commute
  const int i = axis_of(g);
  const int j = axis_of(h);
  if (i == j) return out;  // same axis: [L_i, L_i] = [L_i, N_i] = 0
  const int k = 3 - i - j;
  const int eps = epsilon(i, j, k);
  // [L_i, L_j] = i eps L_k; [L_i, N_j] = [N_i, L_j] = i eps N_k.
  const bool position_result = is_position(g) || is_position(h);
  out.zero = false;
  out.coeff = GaussianRational(Rational(0), Rational(eps));
  out.result = static_cast<Generator>(k + (position_result ? 0 : 3));
  return out;
}

}  // namespace spherealg
