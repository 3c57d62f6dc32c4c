#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "crlevi/matrix.hpp"
#include "crlevi/poly.hpp"

namespace crlevi {

/// Square or rectangular matrix of real-mode polynomials, row-major.
using PolyMatrix = std::vector<std::vector<Poly>>;

/// Polynomial vector field sum_c components[c] d/dx_c on R^dim.
struct PolyVectorField {
  std::size_t dim = 0;
  std::vector<Poly> components;

  PolyVectorField() = default;
  explicit PolyVectorField(std::vector<Poly> comps) : dim(comps.size()), components(std::move(comps)) {
    for (const auto& c : components)
      if (c.nvars() != dim) throw DimensionMismatch("vector field component uses " + std::to_string(c.nvars()) + " variables on R^" + std::to_string(dim));
  }

  static PolyVectorField zero(std::size_t d) { return PolyVectorField(std::vector<Poly>(d, Poly(d))); }
  /// Coordinate field d/dx_{index+1}.
  static PolyVectorField coordinate(std::size_t d, std::size_t index) {
    PolyVectorField v = zero(d);
    v.components[index] = Poly::constant(d, 1);
    return v;
  }

  bool is_zero() const {
    for (const auto& c : components)
      if (!c.is_zero()) return false;
    return true;
  }

  PolyVectorField& operator+=(const PolyVectorField& o) {
    same(o);
    for (std::size_t c = 0; c < dim; ++c) components[c] += o.components[c];
    return *this;
  }
  PolyVectorField& operator-=(const PolyVectorField& o) {
    same(o);
    for (std::size_t c = 0; c < dim; ++c) components[c] -= o.components[c];
    return *this;
  }
  friend PolyVectorField operator+(PolyVectorField a, const PolyVectorField& b) { return a += b; }
  friend PolyVectorField operator-(PolyVectorField a, const PolyVectorField& b) { return a -= b; }
  friend PolyVectorField operator*(const Poly& f, PolyVectorField v) {
    for (auto& c : v.components) c = f * c;
    return v;
  }
  friend bool operator==(const PolyVectorField& a, const PolyVectorField& b) { return a.components == b.components; }

  /// Derivative of f along this field.
  Poly apply(const Poly& f) const {
    Poly out(dim);
    for (std::size_t a = 0; a < dim; ++a)
      if (!components[a].is_zero()) out += components[a] * f.derivative(a);
    return out;
  }

  std::vector<GaussianRational> eval(std::span<const GaussianRational> x) const {
    std::vector<GaussianRational> v;
    for (const auto& c : components) v.push_back(c.eval(x));
    return v;
  }

 private:
  void same(const PolyVectorField& o) const {
    if (o.dim != dim) throw DimensionMismatch("vector fields on R^" + std::to_string(dim) + " and R^" + std::to_string(o.dim));
  }
};

/// [X, Y]_c = X(Y_c) - Y(X_c).
inline PolyVectorField lie_bracket(const PolyVectorField& x, const PolyVectorField& y) {
  if (x.dim != y.dim) throw DimensionMismatch("bracket of fields on R^" + std::to_string(x.dim) + " and R^" + std::to_string(y.dim));
  PolyVectorField out = PolyVectorField::zero(x.dim);
  for (std::size_t c = 0; c < x.dim; ++c) out.components[c] = x.apply(y.components[c]) - y.apply(x.components[c]);
  return out;
}

namespace detail {

inline PolyMatrix poly_identity(std::size_t n, std::size_t nvars) {
  PolyMatrix m(n, std::vector<Poly>(n, Poly(nvars)));
  for (std::size_t k = 0; k < n; ++k) m[k][k] = Poly::constant(nvars, 1);
  return m;
}

inline PolyMatrix poly_mul(const PolyMatrix& a, const PolyMatrix& b, std::size_t nvars) {
  const std::size_t inner = b.size();
  const std::size_t cols = inner ? b.front().size() : 0;
  PolyMatrix out(a.size(), std::vector<Poly>(cols, Poly(nvars)));
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[r][k].is_zero()) continue;
      for (std::size_t c = 0; c < cols; ++c)
        if (!b[k][c].is_zero()) out[r][c] += a[r][k] * b[k][c];
    }
  return out;
}

inline PolyMatrix poly_transpose(const PolyMatrix& a, std::size_t nvars) {
  const std::size_t cols = a.empty() ? 0 : a.front().size();
  PolyMatrix t(cols, std::vector<Poly>(a.size(), Poly(nvars)));
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c) t[c][r] = a[r][c];
  return t;
}

inline bool is_square(const PolyMatrix& a, std::size_t n) {
  if (a.size() != n) return false;
  for (const auto& row : a)
    if (row.size() != n) return false;
  return true;
}

inline CMatrix eval_matrix(const PolyMatrix& a, std::span<const GaussianRational> x) {
  const std::size_t cols = a.empty() ? 0 : a.front().size();
  CMatrix m(a.size(), cols);
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = a[r][c].eval(x);
  return m;
}

// Laplace expansion along the first row; the matrices here are at most 6x6.
inline Poly poly_det(const PolyMatrix& a, std::size_t nvars) {
  const std::size_t n = a.size();
  if (n == 0) return Poly::constant(nvars, 1);
  if (n == 1) return a[0][0];
  Poly out(nvars);
  for (std::size_t c = 0; c < n; ++c) {
    if (a[0][c].is_zero()) continue;
    PolyMatrix minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Poly> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(a[r][k]);
      minor.push_back(std::move(row));
    }
    Poly term = a[0][c] * poly_det(minor, nvars);
    if (c % 2 == 0)
      out += term;
    else
      out -= term;
  }
  return out;
}

inline PolyMatrix poly_adjugate(const PolyMatrix& a, std::size_t nvars) {
  const std::size_t n = a.size();
  PolyMatrix adj(n, std::vector<Poly>(n, Poly(nvars)));
  if (n == 1) {
    adj[0][0] = Poly::constant(nvars, 1);
    return adj;
  }
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      PolyMatrix minor;
      for (std::size_t i = 0; i < n; ++i) {
        if (i == r) continue;
        std::vector<Poly> row;
        for (std::size_t k = 0; k < n; ++k)
          if (k != c) row.push_back(a[i][k]);
        minor.push_back(std::move(row));
      }
      Poly cof = poly_det(minor, nvars);
      adj[c][r] = (r + c) % 2 == 0 ? cof : -cof;
    }
  return adj;
}

}  // namespace detail

inline PolyVectorField apply_matrix(const PolyMatrix& j, const PolyVectorField& x) {
  PolyVectorField out = PolyVectorField::zero(x.dim);
  for (std::size_t r = 0; r < x.dim; ++r)
    for (std::size_t c = 0; c < x.dim; ++c)
      if (!j[r][c].is_zero() && !x.components[c].is_zero()) out.components[r] += j[r][c] * x.components[c];
  return out;
}

/// Almost complex structure on R^{2n}: a polynomial matrix J with J^2 = -I.
class AlmostComplex {
 public:
  explicit AlmostComplex(PolyMatrix j) : j_(std::move(j)) {
    dim_ = j_.size();
    if (dim_ == 0 || dim_ % 2 != 0) throw ValidationError("almost complex structure needs an even positive dimension");
    if (!detail::is_square(j_, dim_)) throw ValidationError("J is not square");
    for (const auto& row : j_)
      for (const auto& e : row) {
        if (e.nvars() != dim_) throw ValidationError("entry of J uses the wrong number of variables");
        if (!e.has_real_coefficients()) throw ValidationError("entry of J has non-real coefficients");
      }
    PolyMatrix sq = detail::poly_mul(j_, j_, dim_);
    PolyMatrix minus_id = detail::poly_identity(dim_, dim_);
    for (auto& row : minus_id)
      for (auto& e : row) e = -e;
    if (sq != minus_id) throw ValidationError("J*J is not -I");
  }

  std::size_t dim() const { return dim_; }
  const PolyMatrix& matrix() const { return j_; }
  PolyVectorField operator()(const PolyVectorField& x) const {
    if (x.dim != dim_) throw DimensionMismatch("field on R^" + std::to_string(x.dim) + " for J on R^" + std::to_string(dim_));
    return apply_matrix(j_, x);
  }

 private:
  std::size_t dim_ = 0;
  PolyMatrix j_;
};

/// N(X,Y) = [X,Y] - [JX,JY] + J[X,JY] + J[JX,Y].
inline PolyVectorField nijenhuis(const AlmostComplex& ac, const PolyVectorField& x, const PolyVectorField& y) {
  PolyVectorField jx = ac(x), jy = ac(y);
  return lie_bracket(x, y) - lie_bracket(jx, jy) + ac(lie_bracket(x, jy)) + ac(lie_bracket(jx, y));
}

/// N vanishes on all pairs of coordinate fields; enough since N is a tensor.
inline bool is_integrable(const AlmostComplex& ac) {
  const std::size_t d = ac.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      if (!nijenhuis(ac, PolyVectorField::coordinate(d, i), PolyVectorField::coordinate(d, j)).is_zero()) return false;
  return true;
}

/// Transports J by a polynomial diffeomorphism phi with polynomial inverse:
/// J'(p) = Dphi(phi^{-1} p) J(phi^{-1} p) D(phi^{-1})(p).
inline AlmostComplex transport_structure(const AlmostComplex& ac, const std::vector<Poly>& phi, const std::vector<Poly>& phi_inv) {
  const std::size_t d = ac.dim();
  if (phi.size() != d || phi_inv.size() != d) throw DimensionMismatch("diffeomorphism has the wrong number of components");
  for (std::size_t k = 0; k < d; ++k) {
    if (phi[k].substitute(phi_inv) != Poly::variable(d, k) || phi_inv[k].substitute(phi) != Poly::variable(d, k))
      throw NotAnInverse("component " + std::to_string(k + 1) + " does not compose to the identity");
  }
  PolyMatrix dphi(d, std::vector<Poly>(d)), dinv(d, std::vector<Poly>(d)), jback(d, std::vector<Poly>(d));
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) {
      dphi[r][c] = phi[r].derivative(c).substitute(phi_inv);
      dinv[r][c] = phi_inv[r].derivative(c);
      jback[r][c] = ac.matrix()[r][c].substitute(phi_inv);
    }
  return AlmostComplex(detail::poly_mul(detail::poly_mul(dphi, jback, d), dinv, d));
}

/// Polynomial 1-form sum_c coeffs[c] dx_c.
struct PolyOneForm {
  std::vector<Poly> coeffs;

  Poly operator()(const PolyVectorField& v) const {
    Poly out(v.dim);
    for (std::size_t c = 0; c < coeffs.size(); ++c)
      if (!coeffs[c].is_zero() && !v.components[c].is_zero()) out += coeffs[c] * v.components[c];
    return out;
  }
};

/// Almost CR structure of type (n,k) on an open set of R^{2n+k}, given by a
/// frame X_1..X_{2n} of HM, forms theta_1..theta_k annihilating HM and the
/// matrix of J in the frame: J X_i = sum_j Jmat[j][i] X_j.
///
/// Without sample points all identities are checked as polynomial
/// identities. With sample points they are checked only there, for frames
/// that make sense only along a subvariety.
class AlmostCRFrame {
 public:
  AlmostCRFrame(std::vector<PolyVectorField> frame, std::vector<PolyOneForm> theta, PolyMatrix jmat,
                std::vector<GaussianRational> base_point, std::optional<std::vector<std::vector<GaussianRational>>> sample_points = std::nullopt)
      : frame_(std::move(frame)), theta_(std::move(theta)), jmat_(std::move(jmat)), base_(std::move(base_point)), samples_(std::move(sample_points)) {
    if (frame_.empty() || frame_.size() % 2 != 0) throw InvalidFrame("frame must have an even positive number of fields");
    dim_ = frame_.front().dim;
    const std::size_t rank_h = frame_.size();
    if (rank_h + theta_.size() != dim_)
      throw InvalidFrame("frame size " + std::to_string(rank_h) + " plus " + std::to_string(theta_.size()) + " forms does not equal dimension " + std::to_string(dim_));
    for (const auto& f : frame_)
      if (f.dim != dim_) throw InvalidFrame("frame fields live on different spaces");
    for (const auto& t : theta_) {
      if (t.coeffs.size() != dim_) throw InvalidFrame("form has the wrong number of coefficients");
      for (const auto& c : t.coeffs)
        if (c.nvars() != dim_) throw InvalidFrame("form coefficient uses the wrong number of variables");
    }
    if (!detail::is_square(jmat_, rank_h)) throw InvalidFrame("Jmat must be " + std::to_string(rank_h) + "x" + std::to_string(rank_h));
    for (const auto& row : jmat_)
      for (const auto& e : row)
        if (e.nvars() != dim_ || !e.has_real_coefficients()) throw InvalidFrame("Jmat entries must be real polynomials on R^" + std::to_string(dim_));
    if (base_.size() != dim_) throw InvalidFrame("base point has the wrong dimension");
    if (samples_) {
      if (samples_->empty()) throw InvalidFrame("pointwise mode needs at least one sample point");
      for (const auto& p : *samples_)
        if (p.size() != dim_) throw InvalidFrame("sample point has the wrong dimension");
    }

    for (std::size_t a = 0; a < theta_.size(); ++a)
      for (std::size_t i = 0; i < rank_h; ++i)
        if (!vanishes(theta_[a](frame_[i]))) throw InvalidFrame("theta_" + std::to_string(a + 1) + " does not annihilate X_" + std::to_string(i + 1));
    PolyMatrix sq = detail::poly_mul(jmat_, jmat_, dim_);
    for (std::size_t r = 0; r < rank_h; ++r)
      for (std::size_t c = 0; c < rank_h; ++c) {
        Poly target = r == c ? Poly::constant(dim_, -1) : Poly(dim_);
        if (!vanishes(sq[r][c] - target)) throw InvalidFrame("Jmat*Jmat is not -I");
      }
    if (rank(detail::eval_matrix(frame_matrix(), base_)) != rank_h) throw InvalidFrame("frame is dependent at the base point");
    if (!theta_.empty()) {
      CMatrix th(theta_.size(), dim_);
      for (std::size_t a = 0; a < theta_.size(); ++a)
        for (std::size_t c = 0; c < dim_; ++c) th(a, c) = theta_[a].coeffs[c].eval(base_);
      if (rank(th) != theta_.size()) throw InvalidFrame("forms are dependent at the base point");
    }
  }

  std::size_t dim() const { return dim_; }
  std::size_t cr_dim() const { return frame_.size() / 2; }
  std::size_t cr_codim() const { return theta_.size(); }
  const std::vector<PolyVectorField>& frame() const { return frame_; }
  const std::vector<PolyOneForm>& theta() const { return theta_; }
  const PolyMatrix& jmat() const { return jmat_; }
  const std::vector<GaussianRational>& base_point() const { return base_; }
  bool pointwise() const { return samples_.has_value(); }

  /// d x 2n matrix whose columns are the frame fields.
  PolyMatrix frame_matrix() const {
    PolyMatrix f(dim_, std::vector<Poly>(frame_.size(), Poly(dim_)));
    for (std::size_t i = 0; i < frame_.size(); ++i)
      for (std::size_t c = 0; c < dim_; ++c) f[c][i] = frame_[i].components[c];
    return f;
  }

  /// J applied to sum_i coeffs[i] X_i.
  PolyVectorField j_of(const std::vector<Poly>& coeffs) const {
    PolyVectorField out = PolyVectorField::zero(dim_);
    for (std::size_t i = 0; i < frame_.size(); ++i) {
      if (coeffs[i].is_zero()) continue;
      for (std::size_t j = 0; j < frame_.size(); ++j)
        if (!jmat_[j][i].is_zero()) out += (coeffs[i] * jmat_[j][i]) * frame_[j];
    }
    return out;
  }

  PolyVectorField j_of_frame(std::size_t i) const {
    std::vector<Poly> e(frame_.size(), Poly(dim_));
    e[i] = Poly::constant(dim_, 1);
    return j_of(e);
  }

  /// Zero as a polynomial, or at every sample point in pointwise mode.
  bool vanishes(const Poly& p) const {
    if (!samples_) return p.is_zero();
    for (const auto& x : *samples_)
      if (!p.eval(x).is_zero()) return false;
    return true;
  }
  bool vanishes(const PolyVectorField& v) const {
    for (const auto& c : v.components)
      if (!vanishes(c)) return false;
    return true;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<PolyVectorField> frame_;
  std::vector<PolyOneForm> theta_;
  PolyMatrix jmat_;
  std::vector<GaussianRational> base_;
  std::optional<std::vector<std::vector<GaussianRational>>> samples_;
};

struct PartialIntegrability {
  bool cr2 = false;
  bool cr3 = false;
  bool pointwise = false;
};

/// (cr2): theta([X,Y] - [JX,JY]) = 0. (cr3): [X,Y] - [JX,JY] + J([X,JY] + [JX,Y]) = 0.
///
/// Both are checked on pairs of frame fields. Under (cr2) the field
/// U = [X,JY] + [JX,Y] lies in HM, so U = F c with c = (F^T F)^{-1} F^T U
/// and J U = F Jmat c; (cr3) is tested after clearing the denominator
/// det(F^T F). When (cr2) fails, J U is undefined and (cr3) is reported false.
inline PartialIntegrability partial_integrability(const AlmostCRFrame& f) {
  const std::size_t d = f.dim();
  const std::size_t h = f.frame().size();
  PartialIntegrability out;
  out.pointwise = f.pointwise();

  std::vector<PolyVectorField> jx;
  for (std::size_t i = 0; i < h; ++i) jx.push_back(f.j_of_frame(i));

  struct Pair {
    PolyVectorField v, u;
  };
  std::vector<Pair> pairs;
  bool cr2 = true;
  for (std::size_t i = 0; i < h && cr2; ++i)
    for (std::size_t j = i + 1; j < h && cr2; ++j) {
      const auto& x = f.frame()[i];
      const auto& y = f.frame()[j];
      PolyVectorField v = lie_bracket(x, y) - lie_bracket(jx[i], jx[j]);
      for (const auto& t : f.theta())
        if (!f.vanishes(t(v))) cr2 = false;
      pairs.push_back({std::move(v), lie_bracket(x, jx[j]) + lie_bracket(jx[i], y)});
    }
  out.cr2 = cr2;
  if (!cr2) return out;

  PolyMatrix fm = f.frame_matrix();
  PolyMatrix ft = detail::poly_transpose(fm, d);
  PolyMatrix gram = detail::poly_mul(ft, fm, d);
  Poly det = detail::poly_det(gram, d);
  PolyMatrix lift = detail::poly_mul(detail::poly_mul(fm, f.jmat(), d), detail::poly_mul(detail::poly_adjugate(gram, d), ft, d), d);
  bool cr3 = true;
  for (const auto& p : pairs) {
    for (const auto& t : f.theta())
      if (!f.vanishes(t(p.u))) throw std::logic_error("(cr2) holds but [X,JY]+[JX,Y] leaves HM");
    PolyVectorField n = det * p.v + apply_matrix(lift, p.u);
    if (!f.vanishes(n)) {
      cr3 = false;
      break;
    }
  }
  out.cr3 = cr3;
  return out;
}

/// xi([JX, X]) at x for X = sum_i a_i X_i with constant coefficients a and
/// xi = sum_a xi_a theta_a.
inline Rational abstract_levi(const AlmostCRFrame& f, std::span<const GaussianRational> x, std::span<const Rational> xi,
                              std::span<const Rational> a) {
  const std::size_t d = f.dim();
  if (x.size() != d) throw DimensionMismatch("point has " + std::to_string(x.size()) + " coordinates on R^" + std::to_string(d));
  if (xi.size() != f.cr_codim()) throw DimensionMismatch("conormal needs " + std::to_string(f.cr_codim()) + " coefficients");
  if (a.size() != f.frame().size()) throw DimensionMismatch("vector needs " + std::to_string(f.frame().size()) + " frame coefficients");
  std::vector<Poly> coeffs;
  PolyVectorField xf = PolyVectorField::zero(d);
  for (std::size_t i = 0; i < a.size(); ++i) {
    coeffs.push_back(Poly::constant(d, GaussianRational(a[i])));
    if (sgn(a[i]) != 0) xf += coeffs.back() * f.frame()[i];
  }
  PolyVectorField br = lie_bracket(f.j_of(coeffs), xf);
  GaussianRational value;
  for (std::size_t k = 0; k < xi.size(); ++k)
    if (sgn(xi[k]) != 0) value += GaussianRational(xi[k]) * f.theta()[k](br).eval(x);
  if (!value.is_real()) throw NotRealValued("abstract Levi value is not real");
  return value.re();
}

/// Intrinsic frame of the rigid hypersurface Im z_m = f(z', zbar') in C^m,
/// f real-valued in m-1 variables, in the coordinates
/// (x_1, y_1, ..., x_{m-1}, y_{m-1}, x_m) of the graph:
///   X_mu = d/dx_mu - 2 Im(f_mu) d/dx_m,  Y_mu = d/dy_mu - 2 Re(f_mu) d/dx_m,
///   theta = dx_m + 2 sum (Im f_mu dx_mu + Re f_mu dy_mu),  J X_mu = Y_mu,
/// with f_mu = df/dz_mu. Along the graph, d^c(Im z_m - f) restricts to -theta
/// and a X_mu + b Y_mu is twice the real part of (a + ib) L_mu, where
/// L_mu = d/dz_mu + 2i f_mu d/dz_m.
inline AlmostCRFrame rigid_hypersurface_frame(const WPoly& f, std::vector<GaussianRational> base_point) {
  if (!is_real_valued(f)) throw NotRealValued("rigid hypersurface needs a real-valued f");
  const std::size_t n = f.m();
  const std::size_t d = 2 * n + 1;
  // real coordinates of C^n are ordered x_1..x_n, y_1..y_n; interleave them
  std::vector<std::size_t> perm(2 * n);
  for (std::size_t mu = 0; mu < n; ++mu) {
    perm[mu] = 2 * mu;
    perm[n + mu] = 2 * mu + 1;
  }
  auto to_graph = [&](const WPoly& p) { return to_real_coordinates(p).permute_variables(perm, d); };
  const GaussianRational half(Rational(1, 2));
  const GaussianRational minus_half_i(Rational(0), Rational(-1, 2));

  std::vector<PolyVectorField> frame;
  PolyOneForm theta{std::vector<Poly>(d, Poly(d))};
  theta.coeffs[d - 1] = Poly::constant(d, 1);
  for (std::size_t mu = 1; mu <= n; ++mu) {
    WPoly fmu = wirtinger_d(f, mu);
    Poly re = to_graph((fmu + conj_poly(fmu)) * half);
    Poly im = to_graph((fmu - conj_poly(fmu)) * minus_half_i);
    PolyVectorField x = PolyVectorField::coordinate(d, 2 * (mu - 1));
    x.components[d - 1] = im * GaussianRational(-2);
    PolyVectorField y = PolyVectorField::coordinate(d, 2 * (mu - 1) + 1);
    y.components[d - 1] = re * GaussianRational(-2);
    frame.push_back(std::move(x));
    frame.push_back(std::move(y));
    theta.coeffs[2 * (mu - 1)] = im * GaussianRational(2);
    theta.coeffs[2 * (mu - 1) + 1] = re * GaussianRational(2);
  }
  PolyMatrix jmat(2 * n, std::vector<Poly>(2 * n, Poly(d)));
  for (std::size_t mu = 0; mu < n; ++mu) {
    jmat[2 * mu + 1][2 * mu] = Poly::constant(d, 1);
    jmat[2 * mu][2 * mu + 1] = Poly::constant(d, -1);
  }
  return AlmostCRFrame(std::move(frame), {std::move(theta)}, std::move(jmat), std::move(base_point));
}

}  // namespace crlevi
