#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include "spherealg/rep/basis.hpp"

namespace spherealg::rep {

// Multiplication factors whose matrix elements the oracle integrates.
enum class AngularFactor { CosTheta, SinThetaEPlusIPhi, SinThetaEMinusIPhi };

class InsufficientGridOrderError : public std::runtime_error {
 public:
  explicit InsufficientGridOrderError(const std::string& what) : std::runtime_error(what) {}
};

// Independent numerical oracle for <row| f |col> = integral of
// conj(Y_row) f Y_col over the sphere.  Gauss-Legendre in cos(theta) crossed
// with a uniform phi rule, both of order >= 2*lmax + 4, which integrates every
// product of spherical harmonics of total degree <= 2*lmax + 2 to machine
// precision.  Spherical harmonics are evaluated with Condon-Shortley phases.
class QuadratureGrid {
 public:
  explicit QuadratureGrid(int lmax);

  int lmax() const { return lmax_; }
  int theta_order() const { return static_cast<int>(x_.size()); }
  int phi_count() const { return nphi_; }

  std::complex<double> element(AngularFactor f, BasisState row, BasisState col) const;

 private:
  // Normalized associated Legendre value at theta node i for (l, |m|).
  double plm(int node, int l, int absm) const;

  int lmax_;
  int nphi_;
  std::vector<double> x_;
  std::vector<double> w_;
  std::vector<std::vector<double>> legendre_;  // per node, packed (l, m>=0) table
};

}  // namespace spherealg::rep
