#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "crlevi/calculus.hpp"
#include "crlevi/inertia.hpp"
#include "crlevi/jet.hpp"
#include "crlevi/matrix.hpp"
#include "crlevi/poly.hpp"

namespace crlevi {

/// M = { rho_1 = ... = rho_l = 0 } in C^m, every rho_j real-valued.
class EmbeddedCR {
 public:
  EmbeddedCR(std::size_t m, std::vector<WPoly> rho) : m_(m), rho_(std::move(rho)) {
    if (m_ == 0) throw ValidationError("ambient dimension must be at least 1");
    if (rho_.empty()) throw ValidationError("at least one defining function is required");
    for (std::size_t j = 0; j < rho_.size(); ++j) {
      if (rho_[j].m() != m_) throw DimensionMismatch("defining function " + std::to_string(j + 1) + " lives in the wrong C^m");
      if (!is_real_valued(rho_[j]))
        throw NotRealValued("defining function " + std::to_string(j + 1) + " is not real-valued: " + to_string(rho_[j]));
    }
  }

  std::size_t m() const { return m_; }
  std::size_t codim() const { return rho_.size(); }
  const std::vector<WPoly>& rho() const { return rho_; }

 private:
  std::size_t m_;
  std::vector<WPoly> rho_;
};

/// Per-point tangent data of an EmbeddedCR.
struct PointData {
  PointC x;
  /// l x m, entries d rho_j / dz_mu (x).
  CMatrix drho;
  /// m x n, columns an exact basis of T^{1,0}_x M.
  CMatrix basis;
  std::size_t n = 0;
  std::size_t k = 0;
  bool generic = false;
  std::vector<HermitianMatrix> hessians;
  /// l x 2m real gradients in the coordinates (x_1..x_m, y_1..y_m).
  CMatrix real_gradients;
  /// Inverse of the Gram matrix of the real gradients (flat metric).
  std::optional<CMatrix> gram_inv;
  /// Rows of drho that are linearly independent at x.
  std::vector<std::size_t> independent_rows;
};

/// Covector sum_j xi_j d^c rho_j(x).
struct ConormalCovector {
  std::vector<Rational> xi;
};

/// Normal vector sum_h c_h grad rho_h(x).
struct NormalVector {
  std::vector<Rational> coeffs;
  friend bool operator==(const NormalVector&, const NormalVector&) = default;
};

inline PointData analyze_point(const EmbeddedCR& M, const PointC& x) {
  const std::size_t m = M.m();
  const std::size_t l = M.codim();
  if (x.size() != m) throw DimensionMismatch("point has " + std::to_string(x.size()) + " coordinates, expected " + std::to_string(m));
  for (std::size_t j = 0; j < l; ++j) {
    GaussianRational v = eval(M.rho()[j], x);
    if (!v.is_zero())
      throw PointNotOnManifold("defining function " + std::to_string(j + 1) + " equals " + v.to_string() + " at the point");
  }

  PointData pd;
  pd.x = x;
  pd.drho = CMatrix(l, m);
  for (std::size_t j = 0; j < l; ++j)
    for (std::size_t mu = 1; mu <= m; ++mu) pd.drho(j, mu - 1) = eval(wirtinger_d(M.rho()[j], mu), x);

  // For real rho, d rho/dx = 2 Re(d rho/dz) and d rho/dy = -2 Im(d rho/dz).
  pd.real_gradients = CMatrix(l, 2 * m);
  for (std::size_t j = 0; j < l; ++j)
    for (std::size_t mu = 0; mu < m; ++mu) {
      pd.real_gradients(j, mu) = GaussianRational(Rational(2 * pd.drho(j, mu).re()));
      pd.real_gradients(j, m + mu) = GaussianRational(Rational(-2 * pd.drho(j, mu).im()));
    }
  if (rank(pd.real_gradients) != l)
    throw DegenerateDifferentials("real differentials of the defining functions are dependent at the point");

  RankKernel rk = rank_and_kernel(pd.drho);
  pd.basis = rk.kernel;
  pd.n = m - rk.rank;
  pd.k = (2 * m - l) - 2 * pd.n;
  pd.generic = rk.rank == l;
  pd.independent_rows = rank_and_kernel(pd.drho.transpose()).pivots;
  for (const auto& rho : M.rho()) pd.hessians.push_back(complex_hessian(rho, x));
  pd.gram_inv = inverse(pd.real_gradients * pd.real_gradients.transpose());
  return pd;
}

namespace detail {

inline void check_conormal(const PointData& pd, const ConormalCovector& xi) {
  if (xi.xi.size() != pd.hessians.size())
    throw DimensionMismatch("conormal has " + std::to_string(xi.xi.size()) + " coefficients for " +
                            std::to_string(pd.hessians.size()) + " defining functions");
}

inline void check_coords(const PointData& pd, std::span<const GaussianRational> z) {
  if (z.size() != pd.n) throw DimensionMismatch("T^{1,0} coordinate vector has length " + std::to_string(z.size()) + ", CR dimension is " + std::to_string(pd.n));
}

inline Rational real_part_checked(const GaussianRational& g, const char* what) {
  if (!g.is_real()) throw std::logic_error(std::string(what) + " produced a non-real value " + g.to_string());
  return g.re();
}

}  // namespace detail

/// Scalar Levi form sum_j xi_j B* H_j^T B on T^{1,0}_x M.
///
/// With this orientation Z* L Z = sum_{mu,nu} H_j(mu,nu) W_mu conj(W_nu) for
/// W = B Z, the classical Hessian expression.
inline HermitianMatrix scalar_levi(const EmbeddedCR& M, const PointData& pd, const ConormalCovector& xi) {
  detail::check_conormal(pd, xi);
  (void)M;
  const std::size_t m = pd.drho.cols();
  CMatrix sum(m, m);
  for (std::size_t j = 0; j < xi.xi.size(); ++j) {
    if (sgn(xi.xi[j]) == 0) continue;
    sum += pd.hessians[j].matrix().transpose() * GaussianRational(xi.xi[j]);
  }
  return HermitianMatrix(pd.basis.adjoint() * sum * pd.basis);
}

inline Signature levi_signature(const EmbeddedCR& M, const PointData& pd, const ConormalCovector& xi) {
  return inertia(scalar_levi(M, pd, xi));
}

/// Whether xi lies in the dual Levi cone, i.e. the scalar Levi form is positive semidefinite.
inline bool dual_cone_member(const EmbeddedCR& M, const PointData& pd, const ConormalCovector& xi) {
  return levi_signature(M, pd, xi).n_neg == 0;
}

/// Quadratic value Z* L Z of the scalar Levi form.
inline Rational levi_value(const EmbeddedCR& M, const PointData& pd, const ConormalCovector& xi,
                           std::span<const GaussianRational> z) {
  detail::check_coords(pd, z);
  CMatrix zc = CMatrix::column_vector(z);
  CMatrix q = zc.adjoint() * scalar_levi(M, pd, xi).matrix() * zc;
  return detail::real_part_checked(q(0, 0), "Levi quadratic form");
}

/// Normal-valued Levi form through the inverse Gram matrix A of the real
/// gradients: c_h = - sum_j A(j,h) L(d^c rho_j, X) with X = Re(B Z).
inline NormalVector normal_levi(const EmbeddedCR& M, const PointData& pd, std::span<const GaussianRational> z) {
  if (!pd.gram_inv) throw GramSingular("real gradients are dependent");
  const std::size_t l = M.codim();
  std::vector<Rational> q(l);
  for (std::size_t j = 0; j < l; ++j) {
    ConormalCovector e{std::vector<Rational>(l, 0)};
    e.xi[j] = 1;
    q[j] = levi_value(M, pd, e, z);
  }
  NormalVector out{std::vector<Rational>(l, 0)};
  for (std::size_t h = 0; h < l; ++h)
    for (std::size_t j = 0; j < l; ++j)
      out.coeffs[h] -= detail::real_part_checked((*pd.gram_inv)(j, h), "Gram inverse") * q[j];
  return out;
}

namespace detail {

// Real 2m-vectors (x-part, y-part) of X = Re(W) and JX = Re(iW), W = sum W_mu d/dz_mu.
inline std::pair<CMatrix, CMatrix> real_frame_vectors(const CMatrix& w) {
  const std::size_t m = w.rows();
  CMatrix x(2 * m, 1), jx(2 * m, 1);
  const Rational half(1, 2);
  for (std::size_t mu = 0; mu < m; ++mu) {
    x(mu, 0) = GaussianRational(Rational(half * w(mu, 0).re()));
    x(m + mu, 0) = GaussianRational(Rational(half * w(mu, 0).im()));
    jx(mu, 0) = GaussianRational(Rational(-half * w(mu, 0).im()));
    jx(m + mu, 0) = GaussianRational(Rational(half * w(mu, 0).re()));
  }
  return {x, jx};
}

inline std::vector<std::vector<WPoly>> real_gradient_polys(const EmbeddedCR& M) {
  std::vector<std::vector<WPoly>> g;
  for (const auto& rho : M.rho()) {
    std::vector<WPoly> row;
    for (std::size_t mu = 1; mu <= M.m(); ++mu) row.push_back(real_partial_x(rho, mu));
    for (std::size_t mu = 1; mu <= M.m(); ++mu) row.push_back(real_partial_y(rho, mu));
    g.push_back(std::move(row));
  }
  return g;
}

}  // namespace detail

/// Independent route to the normal Levi form: B(X,X) + B(JX,JX) for the
/// flat metric, X = Re(B Z).
///
/// X and JX are extended to tangent fields by the orthogonal projector
/// I - G^T (G G^T)^{-1} G onto the tangent spaces of the level sets; their
/// directional derivatives at x come from first-order jets of G, and the
/// normal component is expressed in the gradient basis.
inline NormalVector second_fundamental_sum(const EmbeddedCR& M, const PointData& pd,
                                           std::span<const GaussianRational> z) {
  detail::check_coords(pd, z);
  if (!pd.gram_inv) throw GramSingular("real gradients are dependent");
  const std::size_t m = M.m();
  MatrixJet g = real_jet(detail::real_gradient_polys(M), m, pd.x);
  MatrixJet gt = g.transpose();
  MatrixJet gram = g * gt;
  MatrixJet id = MatrixJet::constant(CMatrix::identity(2 * m), 2 * m, MatrixJet::Directions::Real);
  MatrixJet tangent_projector = id - gt * gram.inverse() * g;

  CMatrix w = pd.basis * CMatrix::column_vector(z);
  auto [x_vec, jx_vec] = detail::real_frame_vectors(w);
  CMatrix acc(2 * m, 1);
  for (const CMatrix* v : {&x_vec, &jx_vec}) {
    MatrixJet field = tangent_projector * MatrixJet::constant(*v, 2 * m, MatrixJet::Directions::Real);
    acc += field.directional(v->data());
  }
  CMatrix coeffs = crlevi::inverse(gram.value) * g.value * acc;
  NormalVector out;
  for (std::size_t h = 0; h < coeffs.rows(); ++h)
    out.coeffs.push_back(detail::real_part_checked(coeffs(h, 0), "second fundamental form"));
  return out;
}

/// Independent route to the scalar Levi value: xi([JX, X]) with X = Re(W).
///
/// W(p) = P(p) (B Z) with P = I - D* (D D*)^{-1} D the projector onto
/// ker(d rho(p)) built from the rows of d rho independent at x; the
/// commutator [conj(W), W] at x comes from first-order Wirtinger jets and
/// is paired with sum_j xi_j d^c rho_j, d^c = i (dbar - d).
inline Rational bracket_levi_oracle(const EmbeddedCR& M, const PointData& pd, const ConormalCovector& xi,
                                    std::span<const GaussianRational> z) {
  detail::check_conormal(pd, xi);
  detail::check_coords(pd, z);
  const std::size_t m = M.m();
  std::vector<std::vector<WPoly>> d_entries;
  for (std::size_t j : pd.independent_rows) {
    std::vector<WPoly> row;
    for (std::size_t mu = 1; mu <= m; ++mu) row.push_back(wirtinger_d(M.rho()[j], mu));
    d_entries.push_back(std::move(row));
  }
  const auto dirs = MatrixJet::Directions::Wirtinger;
  MatrixJet projector = MatrixJet::constant(CMatrix::identity(m), 2 * m, dirs);
  if (!d_entries.empty()) {
    MatrixJet d = wirtinger_jet(d_entries, m, pd.x);
    MatrixJet ds = d.adjoint();
    MatrixJet gram = d * ds;
    if (rank(gram.value) != gram.value.rows()) throw GramSingular("holomorphic Gram matrix is singular");
    projector = projector - ds * gram.inverse() * d;
  }
  CMatrix v = pd.basis * CMatrix::column_vector(z);
  MatrixJet w = projector * MatrixJet::constant(v, 2 * m, dirs);
  if (!(w.value == v)) throw std::logic_error("T^{1,0} section does not pass through B Z");

  // a_nu = conj(W)(W_nu) is the d/dz_nu component of [conj(W), W]; the
  // d/dzbar_nu component is -conj(a_nu).
  std::vector<GaussianRational> a(m);
  for (std::size_t nu = 0; nu < m; ++nu)
    for (std::size_t mu = 0; mu < m; ++mu) a[nu] += v(mu, 0).conj() * w.d[m + mu](nu, 0);

  GaussianRational total;
  for (std::size_t j = 0; j < xi.xi.size(); ++j) {
    if (sgn(xi.xi[j]) == 0) continue;
    GaussianRational pairing;  // d^c rho_j([conj W, W])
    for (std::size_t nu = 0; nu < m; ++nu) {
      const GaussianRational& rho_nu = pd.drho(j, nu);
      pairing += -GaussianRational::i() * rho_nu * a[nu];
      pairing += GaussianRational::i() * rho_nu.conj() * (-a[nu].conj());
    }
    total += GaussianRational(xi.xi[j]) * pairing;
  }
  // [JX, X] = -(i/2) [conj W, W] for X = Re W.
  GaussianRational value = GaussianRational(Rational(0), Rational(-1, 2)) * total;
  return detail::real_part_checked(value, "bracket oracle");
}

/// Tube over a real base: rho_j(z) = r_j((z + zbar)/2).
inline EmbeddedCR make_tube(const std::vector<Poly>& base) {
  if (base.empty()) throw ValidationError("tube base needs at least one polynomial");
  const std::size_t m = base.front().nvars();
  std::vector<Poly> images;
  for (std::size_t mu = 1; mu <= m; ++mu)
    images.push_back(((WPoly::z(m, mu) + WPoly::zbar(m, mu)) * GaussianRational(Rational(1, 2))).poly());
  std::vector<WPoly> rho;
  for (std::size_t j = 0; j < base.size(); ++j) {
    if (base[j].nvars() != m) throw ValidationError("tube base polynomials use different variable counts");
    if (!base[j].has_real_coefficients())
      throw ValidationError("tube base polynomial " + std::to_string(j + 1) + " has non-real coefficients");
    rho.emplace_back(m, base[j].substitute(images));
  }
  return EmbeddedCR(m, std::move(rho));
}

/// A polynomial automorphism of C^m with its polynomial inverse.
struct PolyAutomorphism {
  std::vector<WPoly> forward;
  std::vector<WPoly> inverse;
};

/// Transports (M, x) by a holomorphic polynomial automorphism phi:
/// rho'_j = rho_j o phi^{-1} and x' = phi(x). Both compositions
/// phi o phi^{-1} and phi^{-1} o phi are checked to be the identity exactly.
inline std::pair<EmbeddedCR, PointC> pushforward(const EmbeddedCR& M, const PolyAutomorphism& phi, const PointC& x) {
  const std::size_t m = M.m();
  if (phi.forward.size() != m || phi.inverse.size() != m) throw DimensionMismatch("automorphism has the wrong number of components");
  for (const auto* side : {&phi.forward, &phi.inverse})
    for (const auto& f : *side) {
      if (f.m() != m) throw DimensionMismatch("automorphism component lives in the wrong C^m");
      if (!is_holomorphic(f)) throw NotHolomorphic("automorphism component " + to_string(f) + " involves zbar");
    }
  for (std::size_t mu = 1; mu <= m; ++mu) {
    if (!(compose_holomorphic(phi.forward[mu - 1], phi.inverse) == WPoly::z(m, mu)) ||
        !(compose_holomorphic(phi.inverse[mu - 1], phi.forward) == WPoly::z(m, mu)))
      throw NotAnInverse("component " + std::to_string(mu) + " does not compose to the identity");
  }
  std::vector<WPoly> rho;
  for (const auto& r : M.rho()) rho.push_back(compose_holomorphic(r, phi.inverse));
  PointC image;
  for (const auto& f : phi.forward) image.push_back(eval(f, x));
  return {EmbeddedCR(m, std::move(rho)), image};
}

}  // namespace crlevi
