#pragma once

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace spherealg::rep {

// One spherical-harmonic label |l, m>.
struct BasisState {
  int l = 0;
  int m = 0;

  friend bool operator==(const BasisState&, const BasisState&) = default;
};

// Truncated spherical-harmonics basis: all |l, m> with l <= lmax, linearly
// indexed as l^2 + l + m.
class Basis {
 public:
  explicit Basis(int lmax) : lmax_(lmax) {
    if (lmax < 0) throw std::invalid_argument("basis lmax must be non-negative");
  }

  int lmax() const { return lmax_; }
  int dimension() const { return (lmax_ + 1) * (lmax_ + 1); }

  int index(BasisState s) const {
    if (s.l < 0 || s.l > lmax_ || std::abs(s.m) > s.l)
      throw std::out_of_range("basis state (" + std::to_string(s.l) + "," + std::to_string(s.m) +
                              ") outside basis");
    return s.l * s.l + s.l + s.m;
  }

  BasisState state(int index) const {
    if (index < 0 || index >= dimension()) throw std::out_of_range("basis index out of range");
    int l = 0;
    while ((l + 1) * (l + 1) <= index) ++l;
    return {l, index - l * l - l};
  }

  friend bool operator==(const Basis&, const Basis&) = default;

 private:
  int lmax_;
};

class BasisMismatchError : public std::runtime_error {
 public:
  BasisMismatchError() : std::runtime_error("operands live on different bases") {}
};

}  // namespace spherealg::rep
