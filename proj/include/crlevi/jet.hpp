#pragma once

#include <cstddef>
#include <vector>

#include "crlevi/matrix.hpp"

namespace crlevi {

/// First-order jet of a matrix-valued function at a point: the value and
/// the partial derivative in each of a fixed list of directions.
///
/// Directions are either the 2m real directions (x_1..x_m, y_1..y_m) or the
/// Wirtinger directions (z_1..z_m, zbar_1..zbar_m); the flavor only matters
/// for adjoint(), since d/dz of conj(f) is conj(d/dzbar f).
struct MatrixJet {
  enum class Directions { Real, Wirtinger };

  CMatrix value;
  std::vector<CMatrix> d;
  Directions directions = Directions::Real;

  std::size_t direction_count() const { return d.size(); }

  static MatrixJet constant(const CMatrix& v, std::size_t ndirs, Directions dirs) {
    return {v, std::vector<CMatrix>(ndirs, CMatrix(v.rows(), v.cols())), dirs};
  }

  friend MatrixJet operator+(const MatrixJet& a, const MatrixJet& b) {
    MatrixJet r{a.value + b.value, {}, a.directions};
    for (std::size_t k = 0; k < a.d.size(); ++k) r.d.push_back(a.d[k] + b.d[k]);
    return r;
  }
  friend MatrixJet operator-(const MatrixJet& a, const MatrixJet& b) {
    MatrixJet r{a.value - b.value, {}, a.directions};
    for (std::size_t k = 0; k < a.d.size(); ++k) r.d.push_back(a.d[k] - b.d[k]);
    return r;
  }
  // Leibniz rule.
  friend MatrixJet operator*(const MatrixJet& a, const MatrixJet& b) {
    MatrixJet r{a.value * b.value, {}, a.directions};
    for (std::size_t k = 0; k < a.d.size(); ++k) r.d.push_back(a.d[k] * b.value + a.value * b.d[k]);
    return r;
  }

  MatrixJet inverse() const {
    CMatrix inv = crlevi::inverse(value);
    MatrixJet r{inv, {}, directions};
    for (const auto& dk : d) r.d.push_back(-(inv * dk * inv));
    return r;
  }

  MatrixJet adjoint() const {
    MatrixJet r{value.adjoint(), std::vector<CMatrix>(d.size()), directions};
    if (directions == Directions::Real) {
      for (std::size_t k = 0; k < d.size(); ++k) r.d[k] = d[k].adjoint();
    } else {
      const std::size_t m = d.size() / 2;
      for (std::size_t k = 0; k < m; ++k) {
        r.d[k] = d[m + k].adjoint();
        r.d[m + k] = d[k].adjoint();
      }
    }
    return r;
  }

  MatrixJet transpose() const {
    MatrixJet r{value.transpose(), {}, directions};
    for (const auto& dk : d) r.d.push_back(dk.transpose());
    return r;
  }

  /// Derivative along sum_k v[k] * (direction k).
  CMatrix directional(std::span<const GaussianRational> v) const {
    CMatrix out(value.rows(), value.cols());
    for (std::size_t k = 0; k < d.size(); ++k)
      if (!v[k].is_zero()) out += d[k] * v[k];
    return out;
  }
};

}  // namespace crlevi
