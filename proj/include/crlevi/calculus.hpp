#pragma once

#include <cstddef>
#include <vector>

#include "crlevi/jet.hpp"
#include "crlevi/matrix.hpp"
#include "crlevi/poly.hpp"

namespace crlevi {

/// H(mu,nu) = d^2 rho / dz_mu dzbar_nu evaluated at x.
inline HermitianMatrix complex_hessian(const WPoly& rho, const PointC& x) {
  if (!is_real_valued(rho)) throw NotRealValued("complex Hessian needs a real-valued polynomial, got " + to_string(rho));
  const std::size_t m = rho.m();
  CMatrix h(m, m);
  for (std::size_t mu = 1; mu <= m; ++mu) {
    WPoly d = wirtinger_d(rho, mu);
    for (std::size_t nu = 1; nu <= m; ++nu) h(mu - 1, nu - 1) = eval(wirtinger_dbar(d, nu), x);
  }
  return HermitianMatrix(std::move(h));
}

/// Real Hessian d^2 r / dx_a dx_b of a real-mode polynomial at a real point.
inline CMatrix real_hessian(const Poly& r, std::span<const GaussianRational> point) {
  const std::size_t d = r.nvars();
  CMatrix h(d, d);
  for (std::size_t a = 0; a < d; ++a) {
    Poly da = r.derivative(a);
    for (std::size_t b = 0; b < d; ++b) h(a, b) = da.derivative(b).eval(point);
  }
  return h;
}

/// d/dx_mu of a WPoly (z = x + i y), 1-based.
inline WPoly real_partial_x(const WPoly& f, std::size_t mu) { return wirtinger_d(f, mu) + wirtinger_dbar(f, mu); }

/// d/dy_mu of a WPoly, 1-based.
inline WPoly real_partial_y(const WPoly& f, std::size_t mu) {
  return GaussianRational::i() * (wirtinger_d(f, mu) - wirtinger_dbar(f, mu));
}

/// Jet at x of a matrix of WPoly entries in the Wirtinger directions
/// z_1..z_m, zbar_1..zbar_m.
inline MatrixJet wirtinger_jet(const std::vector<std::vector<WPoly>>& entries, std::size_t m, const PointC& x) {
  const std::size_t rows = entries.size();
  const std::size_t cols = rows ? entries.front().size() : 0;
  MatrixJet j = MatrixJet::constant(CMatrix(rows, cols), 2 * m, MatrixJet::Directions::Wirtinger);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      const WPoly& f = entries[r][c];
      j.value(r, c) = eval(f, x);
      for (std::size_t mu = 1; mu <= m; ++mu) {
        j.d[mu - 1](r, c) = eval(wirtinger_d(f, mu), x);
        j.d[m + mu - 1](r, c) = eval(wirtinger_dbar(f, mu), x);
      }
    }
  return j;
}

/// Jet at x of a matrix of WPoly entries in the real directions
/// x_1..x_m, y_1..y_m.
inline MatrixJet real_jet(const std::vector<std::vector<WPoly>>& entries, std::size_t m, const PointC& x) {
  const std::size_t rows = entries.size();
  const std::size_t cols = rows ? entries.front().size() : 0;
  MatrixJet j = MatrixJet::constant(CMatrix(rows, cols), 2 * m, MatrixJet::Directions::Real);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      const WPoly& f = entries[r][c];
      j.value(r, c) = eval(f, x);
      for (std::size_t mu = 1; mu <= m; ++mu) {
        j.d[mu - 1](r, c) = eval(real_partial_x(f, mu), x);
        j.d[m + mu - 1](r, c) = eval(real_partial_y(f, mu), x);
      }
    }
  return j;
}

}  // namespace crlevi
