#pragma once

#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "crlevi/matrix.hpp"

namespace crlevi {

/// Inertia of a Hermitian form: counts of positive, zero and negative eigenvalues.
struct Signature {
  std::size_t n_pos = 0;
  std::size_t n_zero = 0;
  std::size_t n_neg = 0;

  std::size_t size() const { return n_pos + n_zero + n_neg; }
  Signature flipped() const { return {n_neg, n_zero, n_pos}; }
  friend bool operator==(const Signature&, const Signature&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Signature& s) {
  return os << "(" << s.n_pos << "," << s.n_zero << "," << s.n_neg << ")";
}

/// Coefficients of det(lambda*I - A), lowest degree first; the last entry is 1.
///
/// Faddeev-LeVerrier recursion over Q(i). For Hermitian input every
/// coefficient is real; a nonzero imaginary part is reported as a bug.
inline std::vector<Rational> char_poly(const HermitianMatrix& h) {
  const CMatrix& a = h.matrix();
  const std::size_t n = a.rows();
  std::vector<GaussianRational> c(n + 1);
  c[n] = 1;
  CMatrix m(n, n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m;
    for (std::size_t d = 0; d < n; ++d) m(d, d) += c[n - k + 1];
    GaussianRational t = (a * m).trace();
    c[n - k] = -t / GaussianRational(static_cast<long>(k));
  }
  std::vector<Rational> out;
  out.reserve(n + 1);
  for (const auto& g : c) {
    if (!g.is_real()) throw std::logic_error("characteristic polynomial of a Hermitian matrix is not real");
    out.push_back(g.re());
  }
  return out;
}

namespace detail {

inline std::size_t sign_changes(const std::vector<Rational>& coeffs) {
  std::size_t changes = 0;
  int last = 0;
  for (const auto& c : coeffs) {
    int s = sgn(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace detail

/// Inertia from Descartes' rule of signs on the characteristic polynomial.
/// Exact because a Hermitian matrix has only real eigenvalues.
inline Signature inertia_descartes(const HermitianMatrix& h) {
  auto p = char_poly(h);
  std::size_t zeros = 0;
  while (zeros < p.size() && sgn(p[zeros]) == 0) ++zeros;
  std::vector<Rational> q(p.begin() + static_cast<std::ptrdiff_t>(zeros), p.end());
  std::vector<Rational> q_neg(q);
  for (std::size_t k = 1; k < q_neg.size(); k += 2) q_neg[k] = -q_neg[k];
  Signature s{detail::sign_changes(q), zeros, detail::sign_changes(q_neg)};
  if (s.size() != h.size()) throw std::logic_error("Descartes count does not match the degree");
  return s;
}

/// Inertia from a block LDL* congruence with 1x1 pivots on nonzero diagonal
/// entries and 2x2 pivots [[0,a],[conj(a),0]] when the diagonal vanishes.
inline Signature inertia_ldl(const HermitianMatrix& h) {
  CMatrix a = h.matrix();
  Signature s;
  while (a.rows() > 0) {
    const std::size_t n = a.rows();
    std::size_t diag = n;
    for (std::size_t k = 0; k < n; ++k)
      if (!a(k, k).is_zero()) {
        diag = k;
        break;
      }
    if (diag < n) {
      const Rational d = a(diag, diag).re();
      (sgn(d) > 0 ? s.n_pos : s.n_neg) += 1;
      std::vector<std::size_t> rest;
      for (std::size_t k = 0; k < n; ++k)
        if (k != diag) rest.push_back(k);
      CMatrix next(n - 1, n - 1);
      GaussianRational inv_d = GaussianRational(Rational(1 / d));
      for (std::size_t r = 0; r < rest.size(); ++r)
        for (std::size_t c = 0; c < rest.size(); ++c)
          next(r, c) = a(rest[r], rest[c]) - a(rest[r], diag) * inv_d * a(diag, rest[c]);
      a = std::move(next);
      continue;
    }
    std::size_t pi = n, pj = n;
    for (std::size_t r = 0; r < n && pi == n; ++r)
      for (std::size_t c = r + 1; c < n; ++c)
        if (!a(r, c).is_zero()) {
          pi = r;
          pj = c;
          break;
        }
    if (pi == n) {
      s.n_zero += n;
      break;
    }
    // Block E = [[0, e],[conj(e), 0]] has one positive and one negative eigenvalue.
    s.n_pos += 1;
    s.n_neg += 1;
    const GaussianRational e = a(pi, pj);
    CMatrix e_inv{{0, e.conj().inverse()}, {e.inverse(), 0}};
    std::vector<std::size_t> block{pi, pj};
    std::vector<std::size_t> rest;
    for (std::size_t k = 0; k < n; ++k)
      if (k != pi && k != pj) rest.push_back(k);
    CMatrix c_rows = select_columns(select_rows(a, rest), block);
    CMatrix c_cols = select_rows(select_columns(a, rest), block);
    CMatrix next = select_columns(select_rows(a, rest), rest) - c_rows * e_inv * c_cols;
    a = std::move(next);
  }
  return s;
}

/// Inertia of a Hermitian matrix. Computed by Descartes' rule on the
/// characteristic polynomial and checked against the LDL* congruence route.
inline Signature inertia(const HermitianMatrix& h) {
  Signature d = inertia_descartes(h);
  Signature l = inertia_ldl(h);
  if (!(d == l)) throw std::logic_error("inertia routes disagree");
  return d;
}

}  // namespace crlevi
