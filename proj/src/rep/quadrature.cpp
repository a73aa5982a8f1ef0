#include "spherealg/rep/quadrature.hpp"

#include <gsl/gsl_integration.h>
#include <gsl/gsl_sf_legendre.h>

#include <cmath>
#include <numbers>

namespace spherealg::rep {

QuadratureGrid::QuadratureGrid(int lmax) : lmax_(lmax) {
  if (lmax < 0) throw std::invalid_argument("quadrature lmax must be non-negative");
  const std::size_t order = static_cast<std::size_t>(2 * lmax + 4);
  nphi_ = 2 * lmax + 4;

  gsl_integration_glfixed_table* table = gsl_integration_glfixed_table_alloc(order);
  x_.resize(order);
  w_.resize(order);
  for (std::size_t i = 0; i < order; ++i) gsl_integration_glfixed_point(-1.0, 1.0, i, &x_[i], &w_[i], table);
  gsl_integration_glfixed_table_free(table);

  const std::size_t nlm = gsl_sf_legendre_array_n(static_cast<std::size_t>(lmax_));
  legendre_.assign(order, std::vector<double>(nlm));
  for (std::size_t i = 0; i < order; ++i) {
    // csphase = -1 includes the Condon-Shortley factor (-1)^m.
    gsl_sf_legendre_array_e(GSL_SF_LEGENDRE_SPHARM, static_cast<std::size_t>(lmax_), x_[i], -1.0,
                            legendre_[i].data());
  }
}

double QuadratureGrid::plm(int node, int l, int absm) const {
  return legendre_[static_cast<std::size_t>(node)]
                  [gsl_sf_legendre_array_index(static_cast<std::size_t>(l),
                                               static_cast<std::size_t>(absm))];
}

std::complex<double> QuadratureGrid::element(AngularFactor f, BasisState row, BasisState col) const {
  if (row.l > lmax_ || col.l > lmax_)
    throw InsufficientGridOrderError("grid built for lmax " + std::to_string(lmax_) +
                                     " cannot integrate l = " +
                                     std::to_string(std::max(row.l, col.l)));
  if (std::abs(row.m) > row.l || std::abs(col.m) > col.l)
    throw std::out_of_range("invalid basis state in quadrature element");

  const int k = (f == AngularFactor::SinThetaEPlusIPhi) ? 1
              : (f == AngularFactor::SinThetaEMinusIPhi) ? -1
                                                         : 0;
  // conj(Y_{l',m'}) Y_{l,m} carries e^{i(m - m' + k) phi}; the uniform rule
  // integrates it exactly, so the phi sum is either 0 or 2 pi.
  const int mrow = row.m;
  const int mcol = col.m;

  // Y_{l,-|m|} = (-1)^{|m|} conj(Y_{l,|m|}); the table stores m >= 0 values.
  auto theta_part = [&](int node, const BasisState& s) {
    double v = plm(node, s.l, std::abs(s.m));
    if (s.m < 0 && (std::abs(s.m) % 2) == 1) v = -v;
    return v;
  };

  const double dphi = 2.0 * std::numbers::pi / nphi_;
  std::complex<double> acc{0.0, 0.0};
  for (int i = 0; i < theta_order(); ++i) {
    const double st = std::sqrt(std::max(0.0, 1.0 - x_[i] * x_[i]));
    const double ftheta = (k == 0) ? x_[i] : st;
    const double radial = w_[i] * theta_part(i, row) * ftheta * theta_part(i, col);
    std::complex<double> phi_sum{0.0, 0.0};
    const int expo = mcol - mrow + k;
    for (int j = 0; j < nphi_; ++j) {
      const double phi = dphi * j;
      phi_sum += std::polar(1.0, expo * phi);
    }
    acc += radial * phi_sum * dphi;
  }
  return acc;
}

}  // namespace spherealg::rep
