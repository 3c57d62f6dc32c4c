#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "crlevi/matrix.hpp"
#include "crlevi/poly.hpp"

namespace crlevi {

/// Antilinear involution of gl_N defining the real form g_0:
/// NegStarConj: X -> -S X* S^{-1};  Entrywise: X -> S conj(X) S^{-1}.
class Conjugation {
 public:
  enum class Flavor { NegStarConj, Entrywise };

  Conjugation(Flavor flavor, CMatrix s) : flavor_(flavor), s_(std::move(s)) {
    if (!s_.square()) throw ValidationError("conjugation matrix S must be square");
    try {
      s_inv_ = inverse(s_);
    } catch (const SingularMatrix&) {
      throw ValidationError("conjugation matrix S is singular");
    }
  }

  Flavor flavor() const { return flavor_; }
  const CMatrix& s() const { return s_; }

  CMatrix operator()(const CMatrix& x) const {
    if (flavor_ == Flavor::NegStarConj) return -(s_ * x.adjoint() * s_inv_);
    return s_ * x.conj() * s_inv_;
  }

 private:
  Flavor flavor_;
  CMatrix s_;
  CMatrix s_inv_;
};

inline CMatrix bracket(const CMatrix& a, const CMatrix& b) { return a * b - b * a; }

inline CMatrix elementary(std::size_t n, std::size_t i, std::size_t j, GaussianRational v = 1) {
  CMatrix m(n, n);
  m(i - 1, j - 1) = v;
  return m;
}

namespace detail {

using Vec = std::vector<GaussianRational>;

inline Vec flatten(const CMatrix& m) { return Vec(m.data().begin(), m.data().end()); }

inline CMatrix unflatten(const Vec& v, std::size_t n) {
  CMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = v[r * n + c];
  return m;
}

// Incremental row echelon form. Each stored row remembers which
// combination of the inserted vectors produced it.
class Echelon {
 public:
  struct Reduced {
    Vec residual;
    Vec coeffs;  // v = sum coeffs[i] * inserted[i] + residual
  };

  std::size_t size() const { return inserted_; }
  std::size_t rank() const { return rows_.size(); }

  Reduced reduce(Vec v) const {
    Vec coeffs(inserted_);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const auto& row = rows_[r];
      GaussianRational f = v[pivots_[r]];
      if (f.is_zero()) continue;
      for (std::size_t c = pivots_[r]; c < v.size(); ++c)
        if (!row[c].is_zero()) v[c] -= f * row[c];
      for (std::size_t i = 0; i < combos_[r].size(); ++i)
        if (!combos_[r][i].is_zero()) coeffs[i] += f * combos_[r][i];
    }
    return {std::move(v), std::move(coeffs)};
  }

  bool contains(const Vec& v) const { return is_zero(reduce(v).residual); }

  // Inserts v; returns true when it raised the rank.
  bool add(const Vec& v) {
    Reduced red = reduce(v);
    ++inserted_;
    for (auto& c : combos_) c.resize(inserted_);
    std::size_t p = 0;
    while (p < red.residual.size() && red.residual[p].is_zero()) ++p;
    if (p == red.residual.size()) return false;
    GaussianRational inv = red.residual[p].inverse();
    Vec combo(inserted_);
    for (std::size_t i = 0; i + 1 < inserted_; ++i) combo[i] = -red.coeffs[i] * inv;
    combo[inserted_ - 1] = inv;
    for (auto& x : red.residual) x *= inv;
    rows_.push_back(std::move(red.residual));
    pivots_.push_back(p);
    combos_.push_back(std::move(combo));
    return true;
  }

  const std::vector<Vec>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  static bool is_zero(const Vec& v) {
    for (const auto& x : v)
      if (!x.is_zero()) return false;
    return true;
  }

 private:
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<Vec> combos_;
  std::size_t inserted_ = 0;
};

inline Echelon echelon_of(const std::vector<CMatrix>& ms) {
  Echelon e;
  for (const auto& m : ms) e.add(flatten(m));
  return e;
}

inline std::size_t span_dim(const std::vector<CMatrix>& ms) { return echelon_of(ms).rank(); }

inline bool in_span(const std::vector<CMatrix>& basis, const CMatrix& x) { return echelon_of(basis).contains(flatten(x)); }

// Greedy independent subset of ms modulo span(start), preserving order.
inline std::vector<CMatrix> independent_subset(const std::vector<CMatrix>& ms, const std::vector<CMatrix>& start = {}) {
  Echelon e = echelon_of(start);
  std::vector<CMatrix> out;
  for (const auto& m : ms)
    if (e.add(flatten(m))) out.push_back(m);
  return out;
}

inline std::vector<CMatrix> concat(std::vector<CMatrix> a, const std::vector<CMatrix>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace detail

/// A CR algebra (g_0, q): q is spanned by q_basis inside g = sl_N(C) or
/// so_N(C, K) = { X : X^T K + K X = 0 }, and g_0 is the fixed set of sigma.
class CRAlgebra {
 public:
  enum class Ambient { SL, SO };

  CRAlgebra(std::size_t n, std::vector<CMatrix> q_basis, Conjugation sigma, Ambient ambient = Ambient::SL,
            std::optional<CMatrix> bilinear = std::nullopt)
      : n_(n), q_(std::move(q_basis)), sigma_(std::move(sigma)), ambient_(ambient), bilinear_(std::move(bilinear)) {
    if (n_ < 2) throw ValidationError("matrix size must be at least 2");
    if (sigma_.s().rows() != n_) throw ValidationError("conjugation matrix has size " + sigma_.s().shape());
    if (ambient_ == Ambient::SO) {
      if (!bilinear_ || bilinear_->rows() != n_ || !bilinear_->square()) throw ValidationError("so ambient needs an N x N bilinear form");
    }
    for (std::size_t k = 0; k < q_.size(); ++k) {
      const auto& x = q_[k];
      if (x.rows() != n_ || x.cols() != n_) throw ValidationError("q_basis[" + std::to_string(k) + "] is " + x.shape() + ", expected " + std::to_string(n_) + "x" + std::to_string(n_));
      if (!in_g(x)) throw ValidationError("q_basis[" + std::to_string(k) + "] is not in the ambient Lie algebra");
      CMatrix s = sigma_(x);
      if (!in_g(s)) throw ValidationError("conjugation does not preserve the ambient Lie algebra on q_basis[" + std::to_string(k) + "]");
      if (!(sigma_(s) == x)) throw ValidationError("conjugation is not an involution on q_basis[" + std::to_string(k) + "]");
    }
  }

  std::size_t size() const { return n_; }
  const std::vector<CMatrix>& q_basis() const { return q_; }
  const Conjugation& sigma() const { return sigma_; }
  Ambient ambient() const { return ambient_; }
  const std::optional<CMatrix>& bilinear() const { return bilinear_; }

  bool in_g(const CMatrix& x) const {
    if (ambient_ == Ambient::SL) return x.trace().is_zero();
    const CMatrix& k = *bilinear_;
    return (x.transpose() * k + k * x).is_zero();
  }

  /// Deterministic basis of g: kernel of the linear constraints on the N^2 entries.
  const std::vector<CMatrix>& g_basis() const {
    if (g_basis_.empty()) g_basis_ = compute_g_basis();
    return g_basis_;
  }

  std::size_t g_dim() const { return ambient_ == Ambient::SL ? n_ * n_ - 1 : g_basis().size(); }

  std::vector<CMatrix> conj_q_basis() const {
    std::vector<CMatrix> out;
    for (const auto& x : q_) out.push_back(sigma_(x));
    return out;
  }

 private:
  std::vector<CMatrix> compute_g_basis() const {
    const std::size_t nn = n_ * n_;
    CMatrix constraints;
    if (ambient_ == Ambient::SL) {
      constraints = CMatrix(1, nn);
      for (std::size_t d = 0; d < n_; ++d) constraints(0, d * n_ + d) = 1;
    } else {
      const CMatrix& k = *bilinear_;
      constraints = CMatrix(nn, nn);
      // (X^T K + K X)_{rc} = sum_a X_{ar} K_{ac} + sum_a K_{ra} X_{ac}
      for (std::size_t r = 0; r < n_; ++r)
        for (std::size_t c = 0; c < n_; ++c)
          for (std::size_t a = 0; a < n_; ++a) {
            constraints(r * n_ + c, a * n_ + r) += k(a, c);
            constraints(r * n_ + c, a * n_ + c) += k(r, a);
          }
    }
    CMatrix ker = rank_and_kernel(constraints).kernel;
    std::vector<CMatrix> out;
    for (std::size_t j = 0; j < ker.cols(); ++j) {
      CMatrix col = ker.column(j);
      out.push_back(detail::unflatten(detail::Vec(col.data().begin(), col.data().end()), n_));
    }
    return out;
  }

  std::size_t n_;
  std::vector<CMatrix> q_;
  Conjugation sigma_;
  Ambient ambient_;
  std::optional<CMatrix> bilinear_;
  mutable std::vector<CMatrix> g_basis_;
};

struct CRAlgebraCheck {
  bool is_subalgebra = false;
  std::vector<CMatrix> q_cap_conj_basis;
};

/// Basis of span(a) intersected with span(b) (Zassenhaus).
inline std::vector<CMatrix> intersect_spans(const std::vector<CMatrix>& a, const std::vector<CMatrix>& b, std::size_t n) {
  if (a.empty() || b.empty()) return {};
  const std::size_t nn = n * n;
  detail::Echelon e;
  for (const auto& m : a) {
    detail::Vec v = detail::flatten(m);
    v.insert(v.end(), v.begin(), v.end());
    e.add(v);
  }
  for (const auto& m : b) {
    detail::Vec v = detail::flatten(m);
    v.resize(2 * nn);
    e.add(v);
  }
  std::vector<CMatrix> out;
  for (std::size_t r = 0; r < e.rank(); ++r)
    if (e.pivots()[r] >= nn) out.push_back(detail::unflatten(detail::Vec(e.rows()[r].begin() + static_cast<std::ptrdiff_t>(nn), e.rows()[r].end()), n));
  return out;
}

inline CRAlgebraCheck check_cr_algebra(const CRAlgebra& A) {
  const std::size_t n = A.size();
  const auto& q = A.q_basis();
  detail::Echelon eq = detail::echelon_of(q);
  if (eq.rank() != q.size()) throw DependentBasis("q_basis is linearly dependent");
  CRAlgebraCheck out;
  out.is_subalgebra = true;
  for (std::size_t i = 0; i < q.size() && out.is_subalgebra; ++i)
    for (std::size_t j = i + 1; j < q.size(); ++j)
      if (!eq.contains(detail::flatten(bracket(q[i], q[j])))) {
        out.is_subalgebra = false;
        break;
      }
  out.q_cap_conj_basis = intersect_spans(q, A.conj_q_basis(), n);
  return out;
}

struct CRType {
  std::size_t n = 0;
  std::size_t k = 0;
  friend bool operator==(const CRType&, const CRType&) = default;
};

inline CRType cr_type(const CRAlgebra& A, const CRAlgebraCheck& c) {
  if (!c.is_subalgebra) throw NotSubalgebra("q is not closed under the bracket");
  const std::size_t q = A.q_basis().size();
  const std::size_t cap = c.q_cap_conj_basis.size();
  return {q - cap, A.g_dim() - (2 * q - cap)};
}

inline CRType cr_type(const CRAlgebra& A) { return cr_type(A, check_cr_algebra(A)); }

/// Parameter of a Levi form: a real coordinate, or one of a conjugate pair.
struct LeviParam {
  enum class Kind { Real, Complex, ConjugateOf };
  std::string name;
  Kind kind = Kind::Real;
  std::size_t partner = 0;  // for Complex / ConjugateOf: index of the other member
};

/// Levi form as an n x n matrix of linear forms in the parameters;
/// entries[a][b][j] is the coefficient of parameter j.
struct ParamLevi {
  std::size_t n = 0;
  std::vector<LeviParam> params;
  std::vector<std::vector<std::vector<GaussianRational>>> entries;
  std::vector<CMatrix> t10_basis;
  std::vector<CMatrix> quotient_basis;

  const std::vector<GaussianRational>& entry(std::size_t a, std::size_t b) const { return entries[a][b]; }

  std::size_t param_index(const std::string& name) const {
    for (std::size_t j = 0; j < params.size(); ++j)
      if (params[j].name == name) return j;
    throw ValidationError("unknown parameter \"" + name + "\"");
  }

  /// Conjugate linear form: coefficients conjugated, w and wbar swapped.
  std::vector<GaussianRational> conjugate_form(const std::vector<GaussianRational>& f) const {
    std::vector<GaussianRational> out(f.size());
    for (std::size_t j = 0; j < f.size(); ++j) {
      std::size_t target = params[j].kind == LeviParam::Kind::Real ? j : params[j].partner;
      out[target] = f[j].conj();
    }
    return out;
  }

  std::string entry_string(std::size_t a, std::size_t b) const {
    Poly p(params.size());
    for (std::size_t j = 0; j < params.size(); ++j) {
      Exponents e(params.size(), 0);
      e[j] = 1;
      p.add_term(e, entries[a][b][j]);
    }
    return format_poly(p, [this](std::size_t j) { return params[j].name; });
  }

  bool uses_param(std::size_t j) const {
    for (const auto& row : entries)
      for (const auto& f : row)
        if (!f[j].is_zero()) return true;
    return false;
  }
};

/// Named complement of q + sigma(q) in g. Conjugate partners are added
/// automatically as "<name>bar" when missing.
struct QuotientSpec {
  std::vector<std::string> names;
  std::vector<CMatrix> matrices;
};

namespace detail {

// Coordinates along a complement of span(sum_basis).
class Decomposition {
 public:
  Decomposition(const std::vector<CMatrix>& sum_basis, const std::vector<CMatrix>& complement)
      : skip_(sum_basis.size()), k_(complement.size()) {
    for (const auto& m : sum_basis) e_.add(flatten(m));
    for (const auto& m : complement) e_.add(flatten(m));
  }

  Vec project(const CMatrix& x) const {
    auto red = e_.reduce(flatten(x));
    if (!Echelon::is_zero(red.residual)) throw std::logic_error("bracket left the ambient Lie algebra");
    return Vec(red.coeffs.begin() + static_cast<std::ptrdiff_t>(skip_), red.coeffs.end());
  }

 private:
  Echelon e_;
  std::size_t skip_;
  std::size_t k_;
};

}  // namespace detail

/// Levi form of the homogeneous CR manifold: entry(a,b) = coordinates of
/// i [Z_a, sigma(Z_b)] modulo q + sigma(q), with Z_a spanning a complement
/// of q cap sigma(q) in sigma(q).
inline ParamLevi param_levi(const CRAlgebra& A, std::optional<std::vector<CMatrix>> t10_basis = std::nullopt,
                            std::optional<QuotientSpec> quotient = std::nullopt) {
  const std::size_t N = A.size();
  CRAlgebraCheck check = check_cr_algebra(A);
  const auto& cap = check.q_cap_conj_basis;
  const std::vector<CMatrix> qbar = A.conj_q_basis();
  const CRType type = cr_type(A, check);
  const Conjugation& sigma = A.sigma();

  std::vector<CMatrix> zs;
  const detail::Echelon eqbar = detail::echelon_of(qbar);
  if (t10_basis) {
    zs = *t10_basis;
    if (zs.size() != type.n) throw BadComplement("T^{1,0} basis has " + std::to_string(zs.size()) + " elements, CR dimension is " + std::to_string(type.n));
    for (std::size_t a = 0; a < zs.size(); ++a) {
      if (zs[a].rows() != N || zs[a].cols() != N) throw BadComplement("T^{1,0} basis element has the wrong size");
      if (!eqbar.contains(detail::flatten(zs[a]))) throw BadComplement("T^{1,0} basis element " + std::to_string(a + 1) + " is not in sigma(q)");
    }
    if (detail::span_dim(detail::concat(cap, zs)) != cap.size() + zs.size())
      throw BadComplement("T^{1,0} basis is not independent modulo q cap sigma(q)");
  } else {
    zs = detail::independent_subset(qbar, cap);
  }

  std::vector<CMatrix> sum_basis = detail::independent_subset(detail::concat(A.q_basis(), qbar));
  detail::Echelon esum = detail::echelon_of(sum_basis);
  auto sum_contains = [&](const CMatrix& x) { return esum.contains(detail::flatten(x)); };

  ParamLevi out;
  out.n = type.n;
  std::vector<CMatrix> comp;
  if (quotient) {
    if (quotient->names.size() != quotient->matrices.size()) throw BadComplement("quotient names and matrices differ in number");
    const auto& ms = quotient->matrices;
    std::vector<bool> used(ms.size(), false);
    for (std::size_t j = 0; j < ms.size(); ++j) {
      if (used[j]) continue;
      used[j] = true;
      const CMatrix& e = ms[j];
      if (e.rows() != N || e.cols() != N || !A.in_g(e)) throw BadComplement("quotient element \"" + quotient->names[j] + "\" is not in g");
      CMatrix se = sigma(e);
      const std::size_t idx = comp.size();
      comp.push_back(e);
      if (sum_contains(se - e)) {
        out.params.push_back({quotient->names[j], LeviParam::Kind::Real, idx});
        continue;
      }
      std::optional<std::size_t> match;
      for (std::size_t k = j + 1; k < ms.size() && !match; ++k)
        if (!used[k] && sum_contains(se - ms[k])) match = k;
      out.params.push_back({quotient->names[j], LeviParam::Kind::Complex, idx + 1});
      if (match) {
        used[*match] = true;
        comp.push_back(ms[*match]);
        out.params.push_back({quotient->names[*match], LeviParam::Kind::ConjugateOf, idx});
      } else {
        comp.push_back(se);
        out.params.push_back({quotient->names[j] + "bar", LeviParam::Kind::ConjugateOf, idx});
      }
    }
    if (comp.size() != type.k) throw BadComplement("quotient basis has " + std::to_string(comp.size()) + " elements after adding conjugates, CR codimension is " + std::to_string(type.k));
    if (detail::span_dim(detail::concat(sum_basis, comp)) != sum_basis.size() + comp.size())
      throw BadComplement("quotient basis is not independent modulo q + sigma(q)");
    for (std::size_t j = 0; j < comp.size(); ++j)
      if (out.params[j].kind != LeviParam::Kind::Real) {
        std::size_t p = out.params[j].partner;
        if (!sum_contains(sigma(comp[j]) - comp[p])) throw BadComplement("parameter \"" + out.params[j].name + "\" has no conjugate partner");
      }
  } else {
    std::vector<CMatrix> candidates;
    for (const auto& e : A.g_basis()) {
      CMatrix se = sigma(e);
      candidates.push_back(e + se);
      candidates.push_back(GaussianRational::i() * (e - se));
    }
    comp = detail::independent_subset(candidates, sum_basis);
    for (std::size_t j = 0; j < comp.size(); ++j) out.params.push_back({"p" + std::to_string(j + 1), LeviParam::Kind::Real, j});
    if (comp.size() != type.k) throw std::logic_error("default quotient complement has the wrong size");
  }

  detail::Decomposition dec(sum_basis, comp);
  out.entries.assign(out.n, std::vector<std::vector<GaussianRational>>(out.n));
  for (std::size_t a = 0; a < out.n; ++a)
    for (std::size_t b = 0; b < out.n; ++b)
      out.entries[a][b] = dec.project(GaussianRational::i() * bracket(zs[a], sigma(zs[b])));
  for (std::size_t a = 0; a < out.n; ++a)
    for (std::size_t b = 0; b < out.n; ++b)
      if (out.entries[b][a] != out.conjugate_form(out.entries[a][b])) throw std::logic_error("Levi form is not Hermitian symmetric");
  out.t10_basis = std::move(zs);
  out.quotient_basis = std::move(comp);
  return out;
}

/// Scalar Levi form at the given real parameter values. A conjugate
/// parameter takes the conjugate of its partner's value.
inline HermitianMatrix specialize(const ParamLevi& L, const std::map<std::string, GaussianRational>& values) {
  for (const auto& [name, v] : values) (void)L.param_index(name);
  std::vector<GaussianRational> p(L.params.size());
  for (std::size_t j = 0; j < L.params.size(); ++j) {
    const auto& par = L.params[j];
    auto it = values.find(par.name);
    if (par.kind == LeviParam::Kind::ConjugateOf) {
      const std::string& partner = L.params[par.partner].name;
      auto pit = values.find(partner);
      if (pit == values.end() && it == values.end()) throw MissingParameter("parameter \"" + partner + "\" has no value");
      GaussianRational v = pit != values.end() ? pit->second.conj() : it->second;
      if (it != values.end() && !(it->second == v)) throw ValidationError("value of \"" + par.name + "\" is not the conjugate of \"" + partner + "\"");
      p[j] = v;
      continue;
    }
    if (it == values.end()) {
      // a complex parameter may be given through its conjugate
      if (par.kind == LeviParam::Kind::Complex) {
        auto cit = values.find(L.params[par.partner].name);
        if (cit != values.end()) {
          p[j] = cit->second.conj();
          continue;
        }
      }
      throw MissingParameter("parameter \"" + par.name + "\" has no value");
    }
    if (par.kind == LeviParam::Kind::Real && !it->second.is_real())
      throw NonRealValueForRealParam("parameter \"" + par.name + "\" is real but got " + it->second.to_string());
    p[j] = it->second;
  }
  CMatrix m(L.n, L.n);
  for (std::size_t a = 0; a < L.n; ++a)
    for (std::size_t b = 0; b < L.n; ++b)
      for (std::size_t j = 0; j < p.size(); ++j) m(a, b) += L.entries[a][b][j] * p[j];
  return HermitianMatrix(std::move(m));
}

// ---------------------------------------------------------------------------
// Built-in examples: minimal orbits of SU(2,4) and SO(1,6).

/// Reference bases: fixed T^{1,0} complements and quotient labels (w, t) for the built-in algebras.
struct ReferenceBases {
  std::vector<CMatrix> t10;
  QuotientSpec quotient;
};

/// q = stabiliser of (<e1>, <e1..e4>) in sl_6, real form su(2,4) for the
/// Hermitian form B (B^2 = I), sigma(X) = -B X* B.
inline CRAlgebra builtin_su24_flag() {
  const std::size_t N = 6;
  CMatrix b(N, N);
  b(0, 5) = b(5, 0) = b(1, 4) = b(4, 1) = b(2, 2) = b(3, 3) = 1;
  auto allowed = [](std::size_t r, std::size_t c) {
    if (r == 1) return true;
    if (r <= 4) return c >= 2;
    return c >= 5;
  };
  std::vector<CMatrix> q;
  for (std::size_t r = 1; r <= N; ++r)
    for (std::size_t c = 1; c <= N; ++c)
      if (r != c && allowed(r, c)) q.push_back(elementary(N, r, c));
  for (std::size_t d = 1; d < N; ++d) q.push_back(elementary(N, d, d) - elementary(N, d + 1, d + 1));
  return CRAlgebra(N, std::move(q), Conjugation(Conjugation::Flavor::NegStarConj, b));
}

inline ReferenceBases su24_reference_bases() {
  const std::size_t N = 6;
  const GaussianRational i = GaussianRational::i();
  return {{elementary(N, 2, 1), elementary(N, 5, 3), elementary(N, 5, 4)},
          {{"w1", "w2", "w3", "t1", "t2"},
           {elementary(N, 3, 1), elementary(N, 4, 1), elementary(N, 5, 1), elementary(N, 6, 1, i), elementary(N, 5, 2, i)}}};
}

namespace detail {

// so_7 element E_ij - E_{8-j,8-i} for the antidiagonal form K.
inline CMatrix so7(std::size_t i, std::size_t j) { return elementary(7, i, j) - elementary(7, 8 - j, 8 - i); }

}  // namespace detail

/// q = stabiliser of the isotropic line <e1, e2> in so_7(C, K) with K the
/// antidiagonal form z1 z7 + z2 z6 + z3 z5 + z4^2; real form so(1,6) for the
/// Hermitian form B swapping e1 and e7, sigma(X) = -B X* B.
inline CRAlgebra builtin_so16_quadric() {
  const std::size_t N = 7;
  CMatrix k(N, N);
  for (std::size_t r = 0; r < N; ++r) k(r, N - 1 - r) = 1;
  CMatrix b(N, N);
  b(0, 6) = b(6, 0) = 1;
  for (std::size_t d = 1; d < 6; ++d) b(d, d) = 1;
  const std::vector<std::vector<std::size_t>> cols{{1, 2, 3, 4, 5, 6}, {1, 2, 3, 4, 5, 7}, {3, 4, 6, 7}, {3, 5, 6, 7}, {4, 5, 6, 7}, {6, 7}, {6, 7}};
  std::vector<CMatrix> q;
  for (std::size_t r = 1; r <= N; ++r)
    for (std::size_t c : cols[r - 1]) {
      if (r + c == 8) continue;  // antidiagonal entries vanish
      // each pair (r,c) ~ (8-c, 8-r) contributes once
      std::size_t r2 = 8 - c, c2 = 8 - r;
      if (r2 < r || (r2 == r && c2 < c)) continue;
      q.push_back(detail::so7(r, c));
    }
  return CRAlgebra(N, std::move(q), Conjugation(Conjugation::Flavor::NegStarConj, b), CRAlgebra::Ambient::SO, k);
}

inline ReferenceBases so16_reference_bases() {
  using detail::so7;
  return {{so7(3, 2), so7(4, 2), so7(5, 2), so7(6, 1)}, {{"w", "t"}, {so7(3, 1), so7(4, 1)}}};
}

}  // namespace crlevi
